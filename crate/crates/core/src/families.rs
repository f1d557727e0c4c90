//! Closed-form values and pseudo-Gorenstein* classifications for paths,
//! cycles, complete multipartite graphs, Cameron-Walker graphs and
//! suspensions.
//!
//! Everything here is arithmetic on the family parameters (residues mod 6 or
//! mod 12, part sizes, counts). No function in this module computes an
//! independence polynomial of a graph; the verification sweeps compare these
//! predictions against [`crate::halgebra::analyze`].

use crate::error::{Error, Result};
use crate::graph::{CameronWalkerSpec, Graph, VertexSet};
use crate::poly::IntPolynomial;

fn out_of_range(msg: String) -> Error {
    Error::OutOfRange(msg)
}

fn sign_pow(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `P_{P_n}(-1)`: period 6, `1, 0, -1, -1, 0, 1`.
pub fn p_value(n: usize) -> i64 {
    match n % 6 {
        0 | 5 => 1,
        1 | 4 => 0,
        _ => -1,
    }
}

/// `P_{C_n}(-1)` for `n >= 3`: period 6, `2, 1, -1, -2, -1, 1`.
pub fn c_value(n: usize) -> Result<i64> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Ok(match n % 6 {
        0 => 2,
        1 | 5 => 1,
        2 | 4 => -1,
        _ => -2,
    })
}

/// `a_n = (-1)^floor(n/2) P_{C_n}(-1) = h_alpha(C_n)`, tabulated mod 12.
pub fn a_value(n: usize) -> Result<i64> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Ok(match n % 12 {
        1 | 2 | 5 | 10 => 1,
        4 | 7 | 8 | 11 => -1,
        0 | 3 => 2,
        _ => -2,
    })
}

/// `b_n = (-1)^ceil(n/2) P_{P_n}(-1) = h_alpha(P_n)`, tabulated mod 12.
pub fn b_value(n: usize) -> i64 {
    match n % 12 {
        0 | 2 | 9 | 11 => 1,
        3 | 5 | 6 | 8 => -1,
        _ => 0,
    }
}

pub fn cycle_is_pg_star(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Ok(matches!(n % 12, 1 | 2 | 5 | 10))
}

pub fn path_is_pg_star(n: usize) -> bool {
    matches!(n % 12, 0 | 2 | 9 | 11)
}

fn check_parts(parts: &[usize]) -> Result<()> {
    if parts.is_empty() || parts.contains(&0) {
        Err(Error::EmptyPart)
    } else {
        Ok(())
    }
}

/// `K_{m_1..m_k}` is PG* iff `k = 2` and `max m_i` is odd.
pub fn multipartite_is_pg_star(parts: &[usize]) -> Result<bool> {
    check_parts(parts)?;
    let alpha = parts.iter().max().copied().unwrap_or(0);
    Ok(parts.len() == 2 && alpha % 2 == 1)
}

/// `sum_i (1 + x)^{m_i} - (k - 1)`.
pub fn multipartite_closed_poly(parts: &[usize]) -> Result<IntPolynomial> {
    check_parts(parts)?;
    let sum = parts.iter().fold(IntPolynomial::zero(), |acc, &m| {
        &acc + &IntPolynomial::linear_power(1, 1, m)
    });
    Ok(&sum - &IntPolynomial::constant(parts.len() as i64 - 1))
}

/// Summary counts of a Cameron-Walker graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CwCounts {
    /// `|X|`.
    pub n: usize,
    /// `|Y|`.
    pub m: usize,
    /// Total number of leaves.
    pub leaves: usize,
    /// Total number of pendant triangles.
    pub triangles: usize,
    /// Number of `y_j` without pendant triangles.
    pub bare_y: usize,
}

pub fn cw_counts(spec: &CameronWalkerSpec) -> Result<CwCounts> {
    spec.validate()?;
    Ok(CwCounts {
        n: spec.x_size,
        m: spec.y_size,
        leaves: spec.leaves.iter().sum(),
        triangles: spec.triangles.iter().sum(),
        bare_y: spec.triangles.iter().filter(|&&t| t == 0).count(),
    })
}

/// `P_G(-1) = (-1)^{n + T}`.
pub fn cw_minus_one(c: &CwCounts) -> i64 {
    sign_pow(c.n + c.triangles)
}

/// `alpha = F + T + m_0`.
pub fn cw_alpha(c: &CwCounts) -> usize {
    c.leaves + c.triangles + c.bare_y
}

/// PG* iff `n + F + m_0` is even.
pub fn cw_is_pg_star(c: &CwCounts) -> bool {
    (c.n + c.leaves + c.bare_y).is_multiple_of(2)
}

/// What is known about `G(C)` for a vertex cover `C` with `S = V(G) \ C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VcPrediction {
    /// `1 <= |S| <= alpha - 1`: `G(C)` is PG* iff `G` is.
    Preserved,
    /// `|S| = 0`, the cone: `P_H(-1) = P_G(-1) - 1`, no general rule.
    FullSuspensionCase,
    /// `|S| = alpha`: `alpha(H) = alpha + 1` and `h_H = (1 - t) h_G + t`, so
    /// `h_{alpha+1}(H) = -h_alpha(G)`. In particular `H` is never PG* when
    /// `G` is.
    NeverPgStar,
}

impl VcPrediction {
    pub fn label(self) -> &'static str {
        match self {
            VcPrediction::Preserved => "preserved",
            VcPrediction::FullSuspensionCase => "full-suspension-case",
            VcPrediction::NeverPgStar => "never-pg-star",
        }
    }
}

pub fn vc_suspension_prediction(independent_size: usize, alpha: usize) -> Result<VcPrediction> {
    if independent_size > alpha {
        return Err(out_of_range(format!(
            "|S| = {independent_size} exceeds alpha = {alpha}"
        )));
    }
    Ok(if independent_size == 0 {
        VcPrediction::FullSuspensionCase
    } else if independent_size == alpha {
        VcPrediction::NeverPgStar
    } else {
        VcPrediction::Preserved
    })
}

/// The cone over `C_n` is PG* iff `n ≡ 0 (mod 12)`.
pub fn full_susp_cycle_is_pg_star(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Ok(n.is_multiple_of(12))
}

/// The cone over `P_n` is PG* iff `n ≡ 1, 10 (mod 12)`.
pub fn full_susp_path_is_pg_star(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(out_of_range(
            "full suspension of a path needs n >= 1".into(),
        ));
    }
    Ok(matches!(n % 12, 1 | 10))
}

/// Exact answer for the unique suspension of `C_3` over a maximal
/// independent set: `(P, h) = (1 + 4x + 2x^2, 1 + 2t - t^2)`.
pub fn c3_suspension_exception() -> (IntPolynomial, IntPolynomial) {
    (
        IntPolynomial::from_i64s(&[1, 4, 2]),
        IntPolynomial::from_i64s(&[1, 2, -1]),
    )
}

/// A suspension of `C_n` over a maximal independent set of size `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleSuspensionParams {
    pub n: usize,
    pub c: usize,
    /// `n - 2c`, the number of gaps of size two.
    pub ell: usize,
}

impl CycleSuspensionParams {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        if c < n.div_ceil(3) || c > n / 2 {
            return Err(out_of_range(format!(
                "maximal independent set of C_{n} has size in [{}, {}], got {c}",
                n.div_ceil(3),
                n / 2
            )));
        }
        Ok(CycleSuspensionParams {
            n,
            c,
            ell: n - 2 * c,
        })
    }

    /// Parameters of `set` as a maximal independent set of `cycle_graph(n)`.
    pub fn from_set(n: usize, set: &VertexSet) -> Result<Self> {
        let cycle = crate::graph::cycle_graph(n)?;
        if !cycle.is_maximal_independent(set)? {
            return Err(Error::NotMaximalIndependent);
        }
        Self::new(n, set.len())
    }

    fn alpha(&self) -> usize {
        self.n / 2
    }
}

/// `h_{alpha(G)}(G)` for the suspension: `-a_n` when `c = alpha(C_n)`,
/// `sgn(a_n)` when `c = ceil(n/3) < alpha(C_n)`, and `a_n` in between.
pub fn cycle_mis_susp_top_coeff(params: &CycleSuspensionParams) -> Result<i64> {
    let CycleSuspensionParams { n, c, .. } = *params;
    if n == 3 {
        return Err(out_of_range(
            "C_3 is exceptional; use c3_suspension_exception".into(),
        ));
    }
    let a_n = a_value(n)?;
    let alpha = params.alpha();
    Ok(if c == alpha {
        -a_n
    } else if c == n.div_ceil(3) {
        a_n.signum()
    } else {
        a_n
    })
}

/// PG* classification of cycle suspensions over maximal independent sets.
pub fn cycle_mis_susp_is_pg_star(params: &CycleSuspensionParams) -> Result<bool> {
    let CycleSuspensionParams { n, c, .. } = *params;
    if n == 3 {
        return Ok(false);
    }
    let alpha = params.alpha();
    Ok(match n % 12 {
        0 | 3 => c == n.div_ceil(3),
        4 | 7 | 8 | 11 => c == alpha,
        1 | 2 | 5 | 10 => c != alpha,
        _ => false,
    })
}

/// Gap structure of a maximal independent set of `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathSuspensionParams {
    pub n: usize,
    pub c: usize,
    /// Internal gaps of size two.
    pub ell: usize,
    /// `1` if vertex `1` is not in the set.
    pub delta_start: usize,
    /// `1` if vertex `n` is not in the set.
    pub delta_end: usize,
    pub delta: usize,
    /// Isolated vertices of `G - N[z]`: `c - ell - 1 + delta`.
    pub e: usize,
}

impl PathSuspensionParams {
    fn alpha(&self) -> usize {
        self.n.div_ceil(2)
    }
}

pub fn path_mis_susp_params(n: usize, set: &VertexSet) -> Result<PathSuspensionParams> {
    let path = crate::graph::path_graph(n);
    if n == 0 || !path.is_maximal_independent(set)? {
        return Err(Error::NotMaximalIndependent);
    }
    let members = set.members();
    let c = members.len();
    let ell = members.windows(2).filter(|w| w[1] - w[0] == 3).count();
    let delta_start = usize::from(members[0] != 1);
    let delta_end = usize::from(members[c - 1] != n);
    let delta = delta_start + delta_end;
    let params = PathSuspensionParams {
        n,
        c,
        ell,
        delta_start,
        delta_end,
        delta,
        e: c - ell - 1 + delta,
    };
    debug_assert_eq!(n, 2 * c + ell - 1 + delta);
    Ok(params)
}

/// Which case of the path-suspension classification applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathSuspensionCase {
    /// `n ≡ 0, 2 (mod 3)`.
    Residue02,
    /// `n = 3k + 1` and the set is `{1, 4, ..., 3k + 1}` (`e = 0`).
    EveryThird { k: usize },
    /// Everything else: `a(G) < 0`.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathSuspensionClass {
    pub case: PathSuspensionCase,
    pub a_zero: bool,
    /// `h_{alpha(G)}(G)`, given when `a(G) = 0`.
    pub top_coeff: Option<i64>,
    pub pg_star: bool,
}

pub fn path_mis_susp_classify(params: &PathSuspensionParams) -> Result<PathSuspensionClass> {
    let p = *params;
    if p.n < 2
        || p.delta > 2
        || p.n != 2 * p.c + p.ell + p.delta - 1
        || p.e + p.ell + 1 != p.c + p.delta
    {
        return Err(out_of_range(format!(
            "inconsistent path suspension parameters {p:?}"
        )));
    }
    let alpha = p.alpha();
    let raised = p.c + p.delta == alpha + 1;

    let (case, top_coeff) = if p.n % 3 != 1 {
        let b_n = b_value(p.n);
        (
            PathSuspensionCase::Residue02,
            Some(if raised { -b_n } else { b_n }),
        )
    } else if p.e == 0 {
        let k = (p.n - 1) / 3;
        (
            PathSuspensionCase::EveryThird { k },
            Some(sign_pow(alpha + k + 1)),
        )
    } else {
        (PathSuspensionCase::Negative, None)
    };

    let pg_star = match p.n % 12 {
        0 | 2 | 9 | 11 => !raised,
        3 | 5 | 6 | 8 => raised,
        1 | 4 => p.e == 0,
        _ => false,
    };

    Ok(PathSuspensionClass {
        case,
        a_zero: top_coeff.is_some(),
        top_coeff,
        pg_star,
    })
}

/// `{1, 4, 7, ..., n}` when `n ≡ 1 (mod 3)`.
pub fn every_third_set(n: usize) -> Option<VertexSet> {
    (n % 3 == 1).then(|| (1..=n).step_by(3).collect())
}

/// Structural check: `graph` is a disjoint union of `edges` copies of `K_2`
/// and `isolated` isolated vertices.
pub fn is_matching_plus_isolated(graph: &Graph, edges: usize, isolated: usize) -> bool {
    let degrees: Vec<usize> = (1..=graph.order()).map(|v| graph.degree(v)).collect();
    degrees.iter().all(|&d| d <= 1)
        && degrees.iter().filter(|&&d| d == 1).count() == 2 * edges
        && degrees.iter().filter(|&&d| d == 0).count() == isolated
}
