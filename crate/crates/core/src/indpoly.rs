//! Independence polynomials.
//!
//! The main engine applies `P_G = P_{G-v} + x P_{G-N[v]}` with `v` a
//! maximum-degree vertex of the current component, after splitting the
//! current vertex set into connected components (whose polynomials
//! multiply). Subproblems are vertex subsets of the input graph, so results
//! are cached per call keyed on the subset; nothing is shared across calls.
//!
//! [`independence_polynomial_bruteforce`] counts over all `2^n` subsets and is
//! kept as an independent oracle.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;

pub const DEFAULT_BRUTEFORCE_LIMIT: usize = 26;

/// Value of a polynomial at `-1` together with the multiplicity of `-1` as a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinusOneProfile {
    pub value: BigInt,
    pub multiplicity: usize,
}

pub fn minus_one_profile(p: &IntPolynomial) -> Result<MinusOneProfile> {
    let multiplicity = p.multiplicity_of_minus_one()?;
    let value = p.eval_minus_one();
    debug_assert_eq!(value.is_zero(), multiplicity > 0);
    Ok(MinusOneProfile {
        value,
        multiplicity,
    })
}

/// `P_G(x) = sum_i g_i x^i`, `g_i` the number of independent sets of size `i`.
pub fn independence_polynomial(g: &Graph) -> IntPolynomial {
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    Engine {
        rows: g.rows(),
        memo: HashMap::new(),
    }
    .poly(all)
}

/// `alpha(G)`, the degree of `P_G`.
pub fn independence_number(g: &Graph) -> usize {
    independence_polynomial(g)
        .degree()
        .expect("independence polynomial has constant term 1")
}

struct Engine<'a> {
    rows: &'a [FixedBitSet],
    memo: HashMap<FixedBitSet, IntPolynomial>,
}

impl Engine<'_> {
    /// Polynomial of the subgraph induced on `alive`.
    fn poly(&mut self, mut alive: FixedBitSet) -> IntPolynomial {
        let mut isolated = 0;
        let mut result = IntPolynomial::one();
        while let Some(start) = alive.minimum() {
            let comp = self.component(start, &alive);
            alive.difference_with(&comp);
            if comp.count_ones(..) == 1 {
                isolated += 1;
            } else {
                result = &result * &self.connected(comp);
            }
        }
        if isolated > 0 {
            result = &result * &IntPolynomial::linear_power(1, 1, isolated);
        }
        result
    }

    fn component(&self, start: usize, alive: &FixedBitSet) -> FixedBitSet {
        let mut comp = FixedBitSet::with_capacity(alive.len());
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in self.rows[u].intersection(alive) {
                if !comp.put(w) {
                    stack.push(w);
                }
            }
        }
        comp
    }

    /// `comp` is connected with at least two vertices.
    fn connected(&mut self, comp: FixedBitSet) -> IntPolynomial {
        if let Some(p) = self.memo.get(&comp) {
            return p.clone();
        }
        let size = comp.count_ones(..);
        let (pivot, degree) = comp
            .ones()
            .map(|v| (v, self.rows[v].intersection_count(&comp)))
            .fold(
                (usize::MAX, 0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );

        let result = if degree + 1 == size && self.is_clique(&comp) {
            IntPolynomial::linear(1, size as i64)
        } else {
            let mut minus_v = comp.clone();
            minus_v.set(pivot, false);
            let mut minus_closed = minus_v.clone();
            minus_closed.difference_with(&self.rows[pivot]);
            &self.poly(minus_v) + &self.poly(minus_closed).shift(1)
        };
        self.memo.insert(comp, result.clone());
        result
    }

    fn is_clique(&self, comp: &FixedBitSet) -> bool {
        let size = comp.count_ones(..);
        comp.ones()
            .all(|v| self.rows[v].intersection_count(comp) + 1 == size)
    }
}

/// Counts independent sets of every size over all `2^n` vertex subsets.
pub fn independence_polynomial_bruteforce(g: &Graph) -> Result<IntPolynomial> {
    independence_polynomial_bruteforce_capped(g, DEFAULT_BRUTEFORCE_LIMIT)
}

pub fn independence_polynomial_bruteforce_capped(g: &Graph, limit: usize) -> Result<IntPolynomial> {
    let n = g.order();
    if n > limit || n >= 64 {
        return Err(Error::LimitExceeded {
            what: "brute-force independence polynomial",
            n,
            limit: limit.min(63),
        });
    }
    let masks: Vec<u64> = (1..=n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << (w - 1)))
        .collect();
    let mut counts = vec![0u64; n + 1];
    for subset in 0u64..1 << n {
        let independent = (0..n).all(|v| subset >> v & 1 == 0 || masks[v] & subset == 0);
        if independent {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(IntPolynomial::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, cycle_graph, path_graph, suspension, VertexSet};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn known_polynomials() {
        let c6 = cycle_graph(6).unwrap();
        // Frozen from the 64-subset brute force.
        assert_eq!(
            independence_polynomial_bruteforce(&c6).unwrap(),
            p(&[1, 6, 9, 2])
        );
        assert_eq!(independence_polynomial(&c6), p(&[1, 6, 9, 2]));
        assert_eq!(
            independence_polynomial(&path_graph(0)),
            IntPolynomial::one()
        );
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(independence_polynomial(&k23), p(&[1, 5, 4, 1]));
        let c3_susp = suspension(&cycle_graph(3).unwrap(), &VertexSet::new([1])).unwrap();
        assert_eq!(independence_polynomial(&c3_susp), p(&[1, 4, 2]));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            independence_polynomial_bruteforce(&cycle_graph(4).unwrap()).unwrap(),
            p(&[1, 4, 2])
        );
        assert_eq!(
            independence_polynomial_bruteforce(&Graph::edgeless(3)).unwrap(),
            p(&[1, 3, 3, 1])
        );
        assert_eq!(
            independence_polynomial_bruteforce(&path_graph(4)).unwrap(),
            p(&[1, 4, 3])
        );
        assert!(matches!(
            independence_polynomial_bruteforce(&path_graph(27)),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn independence_numbers() {
        for n in 3..=12 {
            assert_eq!(independence_number(&cycle_graph(n).unwrap()), n / 2);
        }
        for n in 1..=12 {
            assert_eq!(independence_number(&path_graph(n)), n.div_ceil(2));
        }
        assert_eq!(independence_number(&path_graph(0)), 0);
        for parts in [vec![2, 3], vec![4, 1, 1], vec![3, 3, 2, 5]] {
            let g = complete_multipartite(&parts).unwrap();
            assert_eq!(independence_number(&g), *parts.iter().max().unwrap());
        }
    }

    #[test]
    fn profiles() {
        let prof = minus_one_profile(&p(&[1, 4, 3])).unwrap();
        assert_eq!((prof.value, prof.multiplicity), (BigInt::zero(), 1));
        let prof = minus_one_profile(&independence_polynomial(&cycle_graph(6).unwrap())).unwrap();
        assert_eq!((prof.value, prof.multiplicity), (BigInt::from(2), 0));
        let prof = minus_one_profile(&p(&[1, 3, 3, 1])).unwrap();
        assert_eq!((prof.value, prof.multiplicity), (BigInt::zero(), 3));
        assert_eq!(
            minus_one_profile(&IntPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn cliques_and_edgeless() {
        let k5 = complete_multipartite(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(independence_polynomial(&k5), p(&[1, 5]));
        for n in 0..8 {
            assert_eq!(
                independence_polynomial(&Graph::edgeless(n)),
                IntPolynomial::linear_power(1, 1, n)
            );
        }
    }

    #[test]
    fn long_paths_are_fast_and_exact() {
        // Fibonacci: P_{P_n}(1) = F_{n+2}.
        let total = independence_polynomial(&path_graph(90)).eval(&BigInt::from(1));
        let (mut a, mut b) = (BigInt::from(1), BigInt::from(1));
        for _ in 0..90 {
            let c = &a + &b;
            a = b;
            b = c;
        }
        assert_eq!(total, b);
    }
}
