//! h-polynomials of edge ideals and the pseudo-Gorenstein(*) predicates.
//!
//! For a graph with independence polynomial `P(x) = sum g_i x^i` and
//! independence number `alpha`, the h-polynomial of `S/I(G)` is
//! `h(t) = (1 - t)^alpha P(t / (1 - t)) = sum_i g_i t^i (1 - t)^(alpha - i)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indpoly::{independence_polynomial, minus_one_profile};
use crate::poly::IntPolynomial;

/// Everything the crate knows how to say about one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub n: usize,
    pub alpha: usize,
    pub ind_poly: IntPolynomial,
    pub h_poly: IntPolynomial,
    /// `P_G(-1)`.
    pub p_minus_one: BigInt,
    /// Multiplicity `M` of `-1` as a root of `P_G`.
    pub multiplicity: usize,
    /// `deg h - alpha`.
    pub a_invariant: i64,
    /// `h_alpha`, the coefficient of `t^alpha` (zero when `deg h < alpha`).
    pub h_top: BigInt,
    pub h_degree: usize,
    pub pseudo_gorenstein: bool,
    pub pseudo_gorenstein_star: bool,
}

fn check_alpha(p: &IntPolynomial, alpha: usize) -> Result<()> {
    match p.degree() {
        Some(degree) if degree == alpha => Ok(()),
        Some(degree) => Err(Error::DegreeMismatch { alpha, degree }),
        None => Err(Error::ZeroPolynomial),
    }
}

/// `h_j = sum_{i <= j} g_i (-1)^(j-i) C(alpha - i, j - i)`.
pub fn h_polynomial(p: &IntPolynomial, alpha: usize) -> Result<IntPolynomial> {
    check_alpha(p, alpha)?;
    let g = p.coeffs();
    let mut h = vec![BigInt::zero(); alpha + 1];
    for (i, gi) in g.iter().enumerate() {
        // C(alpha - i, k) for k = 0, 1, ... built incrementally.
        let top = alpha - i;
        let mut binom = BigInt::one();
        for k in 0..=top {
            let term = gi * &binom;
            if k % 2 == 0 {
                h[i + k] += term;
            } else {
                h[i + k] -= term;
            }
            binom = binom * (top - k) / (k + 1);
        }
    }
    Ok(IntPolynomial::from_coeffs(h))
}

/// Same result as [`h_polynomial`], obtained by multiplying out
/// `sum_i g_i t^i (1 - t)^(alpha - i)` with polynomial arithmetic.
pub fn h_polynomial_by_expansion(p: &IntPolynomial, alpha: usize) -> Result<IntPolynomial> {
    check_alpha(p, alpha)?;
    let mut acc = IntPolynomial::zero();
    for (i, gi) in p.coeffs().iter().enumerate() {
        let term =
            &IntPolynomial::constant(gi.clone()) * &IntPolynomial::linear_power(1, -1, alpha - i);
        acc = &acc + &term.shift(i);
    }
    Ok(acc)
}

/// `deg h - alpha`.
pub fn a_invariant(h_degree: usize, alpha: usize) -> i64 {
    h_degree as i64 - alpha as i64
}

/// `h_alpha = (-1)^alpha P(-1)`, without building `h`.
pub fn top_alpha_coefficient(p: &IntPolynomial, alpha: usize) -> BigInt {
    let v = p.eval_minus_one();
    if alpha.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Full analysis of `g`.
pub fn analyze(g: &Graph) -> AnalysisReport {
    analyze_polynomial(g.order(), independence_polynomial(g))
        .expect("independence polynomials are nonzero with degree alpha")
}

/// Analysis from an already computed independence polynomial of an
/// `n`-vertex graph.
pub fn analyze_polynomial(n: usize, ind_poly: IntPolynomial) -> Result<AnalysisReport> {
    let alpha = ind_poly.degree().ok_or(Error::ZeroPolynomial)?;
    let profile = minus_one_profile(&ind_poly)?;
    let h_poly = h_polynomial(&ind_poly, alpha)?;
    let h_degree = h_poly.degree().ok_or(Error::ZeroPolynomial)?;
    let a_inv = a_invariant(h_degree, alpha);
    let pseudo_gorenstein = h_poly.leading_coeff().is_some_and(One::is_one);
    Ok(AnalysisReport {
        n,
        alpha,
        h_top: h_poly.coeff(alpha),
        p_minus_one: profile.value,
        multiplicity: profile.multiplicity,
        a_invariant: a_inv,
        h_degree,
        pseudo_gorenstein,
        pseudo_gorenstein_star: pseudo_gorenstein && a_inv == 0,
        ind_poly,
        h_poly,
    })
}

impl AnalysisReport {
    /// `P_G(-1) = (-1)^alpha`, the evaluation-side form of the PG* test.
    pub fn pg_star_by_evaluation(&self) -> bool {
        let sign = if self.alpha.is_multiple_of(2) { 1 } else { -1 };
        self.p_minus_one == BigInt::from(sign)
    }

    /// Checks the relations that tie the report's fields together.
    pub fn consistency_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.h_degree as i64 != self.alpha as i64 - self.multiplicity as i64 {
            out.push(format!(
                "deg h = {} but alpha - M = {}",
                self.h_degree,
                self.alpha as i64 - self.multiplicity as i64
            ));
        }
        if self.a_invariant != -(self.multiplicity as i64) {
            out.push(format!(
                "a = {} but -M = {}",
                self.a_invariant,
                -(self.multiplicity as i64)
            ));
        }
        let expected_top = top_alpha_coefficient(&self.ind_poly, self.alpha);
        if self.h_top != expected_top {
            out.push(format!(
                "h_alpha = {} but (-1)^alpha P(-1) = {expected_top}",
                self.h_top
            ));
        }
        if self.pseudo_gorenstein_star != self.pg_star_by_evaluation() {
            out.push(format!(
                "PG* flag {} disagrees with P(-1) = (-1)^alpha test",
                self.pseudo_gorenstein_star
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, cycle_graph, path_graph, suspension, VertexSet};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn h_examples() {
        // sum g_i t^i (1-t)^(3-i) for C_6, expanded by hand:
        // (1-3t+3t^2-t^3) + 6t(1-2t+t^2) + 9t^2(1-t) + 2t^3 = 1 + 3t + 0t^2 - 2t^3.
        assert_eq!(
            h_polynomial(&p(&[1, 6, 9, 2]), 3).unwrap(),
            p(&[1, 3, 0, -2])
        );
        // P_4: (1-t)^2 + 4t(1-t) + 3t^2 = 1 + 2t.
        assert_eq!(h_polynomial(&p(&[1, 4, 3]), 2).unwrap(), p(&[1, 2]));
        assert_eq!(h_polynomial(&p(&[1, 4, 2]), 2).unwrap(), p(&[1, 2, -1]));
        assert_eq!(
            h_polynomial(&p(&[1, 4, 3]), 3),
            Err(Error::DegreeMismatch {
                alpha: 3,
                degree: 2
            })
        );
    }

    #[test]
    fn two_routes_agree_on_examples() {
        for q in [p(&[1, 6, 9, 2]), p(&[1, 4, 3]), p(&[1]), p(&[1, 7, 14, 7])] {
            let a = q.degree().unwrap();
            assert_eq!(
                h_polynomial(&q, a).unwrap(),
                h_polynomial_by_expansion(&q, a).unwrap()
            );
        }
    }

    #[test]
    fn analyze_examples() {
        let r = analyze(&path_graph(2));
        assert_eq!((r.alpha, r.multiplicity, r.a_invariant), (1, 0, 0));
        assert_eq!(r.p_minus_one, BigInt::from(-1));
        assert_eq!(r.h_poly, p(&[1, 1]));
        assert_eq!(r.h_top, BigInt::from(1));
        assert!(r.pseudo_gorenstein_star);

        // C_5: brute force gives 1 + 5x + 5x^2.
        let r = analyze(&cycle_graph(5).unwrap());
        assert_eq!(r.ind_poly, p(&[1, 5, 5]));
        assert_eq!(r.p_minus_one, BigInt::from(1));
        assert_eq!(r.h_poly, p(&[1, 3, 1]));
        assert!(r.pseudo_gorenstein_star);

        let r = analyze(&cycle_graph(6).unwrap());
        assert_eq!(r.h_top, BigInt::from(-2));
        assert_eq!(r.a_invariant, 0);
        assert!(!r.pseudo_gorenstein && !r.pseudo_gorenstein_star);

        let r = analyze(&path_graph(1));
        assert_eq!(r.p_minus_one, BigInt::zero());
        assert_eq!((r.multiplicity, r.a_invariant), (1, -1));
        assert!(!r.pseudo_gorenstein_star);
    }

    #[test]
    fn empty_graph_conventions() {
        let r = analyze(&path_graph(0));
        assert_eq!((r.alpha, r.h_degree, r.a_invariant), (0, 0, 0));
        assert_eq!(r.h_poly, IntPolynomial::one());
        assert!(r.pseudo_gorenstein && r.pseudo_gorenstein_star);
    }

    #[test]
    fn a_invariant_and_top_coefficient() {
        for k in 1..6 {
            let r = analyze(&Graph::edgeless(k));
            assert_eq!(r.h_poly, IntPolynomial::one());
            assert_eq!(r.a_invariant, -(k as i64));
            assert!(r.pseudo_gorenstein && !r.pseudo_gorenstein_star);
        }
        let single_part = complete_multipartite(&[4]).unwrap();
        assert_eq!(analyze(&single_part).a_invariant, -4);
        assert_eq!(
            top_alpha_coefficient(&p(&[1, 6, 9, 2]), 3),
            BigInt::from(-2)
        );
        assert_eq!(a_invariant(1, 2), -1);
    }

    #[test]
    fn c3_suspension() {
        let g = suspension(&cycle_graph(3).unwrap(), &VertexSet::new([1])).unwrap();
        let r = analyze(&g);
        assert_eq!(r.ind_poly, p(&[1, 4, 2]));
        assert_eq!(r.h_poly, p(&[1, 2, -1]));
        assert!(!r.pseudo_gorenstein_star);
        assert!(r.consistency_violations().is_empty());
    }
}
