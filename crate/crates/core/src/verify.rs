//! Named verification sweeps: each one compares a closed-form prediction
//! from [`crate::families`] against direct computation over a range of
//! instances and collects every disagreement.
//!
//! Instances are processed in parallel on the ambient rayon pool; results
//! are merged in instance order, so the outcome does not depend on the
//! number of worker threads.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::corpus;
use crate::error::{Error, Result};
use crate::families::{self, CycleSuspensionParams, VcPrediction};
use crate::graph::{
    self, format::to_graph6, maximal_independent_sets_capped, suspension, Graph, VertexSet,
};
use crate::halgebra::{analyze, h_polynomial_by_expansion, AnalysisReport};
use crate::indpoly::{independence_polynomial, independence_polynomial_bruteforce_capped};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    Cycles,
    Paths,
    Sequences,
    Multipartite,
    CameronWalker,
    VcSuspension,
    FullSuspension,
    CycleMisSuspension,
    PathMisSuspension,
    DegViaOrd,
    Oracle,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::Cycles,
        Theorem::Paths,
        Theorem::Sequences,
        Theorem::Multipartite,
        Theorem::CameronWalker,
        Theorem::VcSuspension,
        Theorem::FullSuspension,
        Theorem::CycleMisSuspension,
        Theorem::PathMisSuspension,
        Theorem::DegViaOrd,
        Theorem::Oracle,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Cycles => "cycles",
            Theorem::Paths => "paths",
            Theorem::Sequences => "sequences",
            Theorem::Multipartite => "multipartite",
            Theorem::CameronWalker => "cameron-walker",
            Theorem::VcSuspension => "vc-suspension",
            Theorem::FullSuspension => "full-suspension",
            Theorem::CycleMisSuspension => "cycle-mis-suspension",
            Theorem::PathMisSuspension => "path-mis-suspension",
            Theorem::DegViaOrd => "deg-via-ord",
            Theorem::Oracle => "oracle",
        }
    }

    pub fn from_id(id: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.id() == id)
    }

    fn uses_random(self) -> bool {
        matches!(
            self,
            Theorem::CameronWalker | Theorem::VcSuspension | Theorem::DegViaOrd | Theorem::Oracle
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Sweep parameters. `None` selects the per-theorem default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Upper end of the swept size (vertices, cycle/path length, or total
    /// vertex count for Cameron-Walker graphs).
    pub max_n: Option<usize>,
    /// Number of random instances for the corpus-based sweeps.
    pub random: Option<usize>,
    pub seed: u64,
    /// All labeled graphs up to this order are added to `deg-via-ord` and `oracle`.
    pub exhaustive_n: Option<usize>,
    pub max_parts: usize,
    pub max_part_size: usize,
    pub mis_limit: usize,
    pub bruteforce_limit: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: None,
            random: None,
            seed: 20260316,
            exhaustive_n: None,
            max_parts: 4,
            max_part_size: 5,
            mis_limit: graph::DEFAULT_MIS_LIMIT,
            bruteforce_limit: crate::indpoly::DEFAULT_BRUTEFORCE_LIMIT,
        }
    }
}

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub theorem: Theorem,
    pub instances: usize,
    pub mismatches: Vec<Mismatch>,
    /// Seed of the random corpus, for the sweeps that use one.
    pub seed: Option<u64>,
    /// Human-readable description of the swept range.
    pub range: String,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Accumulates mismatches for one instance.
struct Checks {
    instance: String,
    out: Vec<Mismatch>,
}

impl Checks {
    fn new(instance: impl Into<String>) -> Self {
        Checks {
            instance: instance.into(),
            out: Vec::new(),
        }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, what: &str, expected: T, got: T) {
        if expected != got {
            self.out.push(Mismatch {
                instance: format!("{} [{what}]", self.instance),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn poly(&mut self, what: &str, expected: &IntPolynomial, got: &IntPolynomial) {
        self.eq(what, expected, got);
    }

    fn consistent(&mut self, r: &AnalysisReport) {
        for v in r.consistency_violations() {
            self.out.push(Mismatch {
                instance: format!("{} [report consistency]", self.instance),
                expected: "consistent".into(),
                got: v,
            });
        }
    }

    fn fail(&mut self, what: &str, err: Error) {
        self.out.push(Mismatch {
            instance: format!("{} [{what}]", self.instance),
            expected: "ok".into(),
            got: err.to_string(),
        });
    }
}

fn describe(g: &Graph) -> String {
    match to_graph6(g) {
        Ok(g6) => format!("n={} g6={g6}", g.order()),
        Err(_) => format!("n={} m={}", g.order(), g.size()),
    }
}

fn sign(k: usize) -> BigInt {
    BigInt::from(if k.is_multiple_of(2) { 1 } else { -1 })
}

fn bigint(v: i64) -> BigInt {
    BigInt::from(v)
}

fn run_instances<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Vec<Mismatch> + Sync,
) -> (usize, Vec<Mismatch>) {
    let per: Vec<Vec<Mismatch>> = items.par_iter().map(&check).collect();
    (items.len(), per.into_iter().flatten().collect())
}

fn require_range(lo: usize, hi: usize, what: &str) -> Result<()> {
    if hi < lo {
        Err(Error::OutOfRange(format!(
            "{what}: empty range {lo}..={hi}"
        )))
    } else {
        Ok(())
    }
}

/// Runs one named sweep.
pub fn run(theorem: Theorem, cfg: &SweepConfig) -> Result<VerifyOutcome> {
    let (range, (instances, mismatches)) = match theorem {
        Theorem::Cycles => {
            let max = cfg.max_n.unwrap_or(40);
            require_range(3, max, "cycles")?;
            let ns: Vec<usize> = (3..=max).collect();
            (
                format!("n = 3..={max}"),
                run_instances(&ns, |&n| check_cycle(n)),
            )
        }
        Theorem::Paths => {
            let max = cfg.max_n.unwrap_or(40);
            let ns: Vec<usize> = (0..=max).collect();
            (
                format!("n = 0..={max}"),
                run_instances(&ns, |&n| check_path(n)),
            )
        }
        Theorem::Sequences => {
            let max = cfg.max_n.unwrap_or(60);
            let ns: Vec<usize> = (0..=max).collect();
            (
                format!("n = 0..={max}"),
                run_instances(&ns, |&n| check_sequences(n)),
            )
        }
        Theorem::Multipartite => {
            let parts = corpus::multipartite_partitions(cfg.max_parts, cfg.max_part_size);
            (
                format!("k <= {}, parts <= {}", cfg.max_parts, cfg.max_part_size),
                run_instances(&parts, |p| check_multipartite(p)),
            )
        }
        Theorem::CameronWalker => {
            let max = cfg.max_n.unwrap_or(16);
            require_range(3, max, "cameron-walker vertex budget")?;
            let count = cfg.random.unwrap_or(60);
            let mut rng = corpus::seeded_rng(cfg.seed);
            let specs: Vec<_> = (0..count)
                .map(|_| corpus::random_cameron_walker(&mut rng, max))
                .collect();
            (
                format!("{count} random specs, <= {max} vertices"),
                run_instances(&specs, check_cameron_walker),
            )
        }
        Theorem::VcSuspension => {
            let max = cfg.max_n.unwrap_or(8);
            require_range(1, max, "vc-suspension")?;
            if max > 16 {
                return Err(Error::LimitExceeded {
                    what: "vertex-cover enumeration",
                    n: max,
                    limit: 16,
                });
            }
            let count = cfg.random.unwrap_or(100);
            let graphs = corpus::random_corpus(cfg.seed, count, 1, max);
            let indexed: Vec<_> = graphs.iter().enumerate().collect();
            (
                format!("{count} random graphs, n <= {max}"),
                run_instances(&indexed, |(i, g)| check_vertex_covers(*i, g)),
            )
        }
        Theorem::FullSuspension => {
            let max = cfg.max_n.unwrap_or(36);
            require_range(1, max, "full-suspension")?;
            let items: Vec<(bool, usize)> = (3..=max)
                .map(|n| (true, n))
                .chain((1..=max).map(|n| (false, n)))
                .collect();
            (
                format!("cycles n = 3..={max}, paths n = 1..={max}"),
                run_instances(&items, |&(cycle, n)| check_cone(cycle, n)),
            )
        }
        Theorem::CycleMisSuspension => {
            let max = cfg.max_n.unwrap_or(18);
            require_range(3, max, "cycle-mis-suspension")?;
            let items = mis_instances(max, 3, cfg.mis_limit, graph::cycle_graph)?;
            (
                format!("n = 3..={max}, every maximal independent set"),
                run_instances(&items, |(n, set)| check_cycle_mis(*n, set)),
            )
        }
        Theorem::PathMisSuspension => {
            let max = cfg.max_n.unwrap_or(18);
            require_range(2, max, "path-mis-suspension")?;
            let items = mis_instances(max, 2, cfg.mis_limit, |n| Ok(graph::path_graph(n)))?;
            (
                format!("n = 2..={max}, every maximal independent set"),
                run_instances(&items, |(n, set)| check_path_mis(*n, set)),
            )
        }
        Theorem::DegViaOrd | Theorem::Oracle => {
            let max = cfg.max_n.unwrap_or(10);
            let exhaustive = cfg.exhaustive_n.unwrap_or(6);
            if exhaustive > 7 {
                return Err(Error::LimitExceeded {
                    what: "exhaustive graph enumeration",
                    n: exhaustive,
                    limit: 7,
                });
            }
            if theorem == Theorem::Oracle && max.max(exhaustive) > cfg.bruteforce_limit {
                return Err(Error::LimitExceeded {
                    what: "brute-force independence polynomial",
                    n: max.max(exhaustive),
                    limit: cfg.bruteforce_limit,
                });
            }
            require_range(1, max, theorem.id())?;
            let count = cfg.random.unwrap_or(500);
            let mut graphs: Vec<Graph> = (0..=exhaustive).flat_map(corpus::all_graphs).collect();
            let n_exhaustive = graphs.len();
            graphs.extend(corpus::random_corpus(cfg.seed, count, 1, max));
            let limit = cfg.bruteforce_limit;
            let indexed: Vec<_> = graphs.iter().enumerate().collect();
            let range = format!(
                "all {n_exhaustive} labeled graphs with n <= {exhaustive}, {count} random graphs with n <= {max}"
            );
            let result = if theorem == Theorem::Oracle {
                run_instances(&indexed, |(i, g)| check_oracle(*i, g, limit))
            } else {
                run_instances(&indexed, |(i, g)| check_deg_via_ord(*i, g))
            };
            (range, result)
        }
    };
    Ok(VerifyOutcome {
        theorem,
        instances,
        mismatches,
        seed: theorem.uses_random().then_some(cfg.seed),
        range,
    })
}

fn mis_instances(
    max: usize,
    min: usize,
    limit: usize,
    build: impl Fn(usize) -> Result<Graph>,
) -> Result<Vec<(usize, VertexSet)>> {
    let mut items = Vec::new();
    for n in min..=max {
        let g = build(n)?;
        for set in maximal_independent_sets_capped(&g, limit)? {
            items.push((n, set));
        }
    }
    Ok(items)
}

fn check_cycle(n: usize) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!("C_{n}"));
    let r = analyze(&graph::cycle_graph(n).expect("n >= 3"));
    ck.consistent(&r);
    ck.eq("alpha", n / 2, r.alpha);
    ck.eq(
        "P(-1)",
        bigint(families::c_value(n).expect("n >= 3")),
        r.p_minus_one.clone(),
    );
    ck.eq(
        "PG*",
        families::cycle_is_pg_star(n).expect("n >= 3"),
        r.pseudo_gorenstein_star,
    );
    ck.out
}

fn check_path(n: usize) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!("P_{n}"));
    let r = analyze(&graph::path_graph(n));
    ck.consistent(&r);
    ck.eq("alpha", n.div_ceil(2), r.alpha);
    ck.eq("P(-1)", bigint(families::p_value(n)), r.p_minus_one.clone());
    ck.eq(
        "PG*",
        families::path_is_pg_star(n),
        r.pseudo_gorenstein_star,
    );
    ck.out
}

fn check_sequences(n: usize) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!("n={n}"));
    let path = independence_polynomial(&graph::path_graph(n));
    let p_n = path.eval_minus_one();
    ck.eq("p_n", bigint(families::p_value(n)), p_n.clone());
    ck.eq(
        "b_n",
        bigint(families::b_value(n)),
        sign(n.div_ceil(2)) * &p_n,
    );
    ck.eq("g_0", BigInt::one(), path.coeff(0));
    ck.eq("g_1", BigInt::from(n), path.coeff(1));
    if !path.has_nonnegative_coeffs() {
        ck.eq("nonnegative coefficients", "yes", "no");
    }
    if n >= 2 {
        let one = BigInt::one();
        let prev = independence_polynomial(&graph::path_graph(n - 1)).eval(&one);
        let prev2 = independence_polynomial(&graph::path_graph(n - 2)).eval(&one);
        ck.eq("P_{P_n}(1) recurrence", prev + prev2, path.eval(&one));
    }
    if n >= 3 {
        let c_n = independence_polynomial(&graph::cycle_graph(n).expect("n >= 3")).eval_minus_one();
        ck.eq(
            "c_n",
            bigint(families::c_value(n).expect("n >= 3")),
            c_n.clone(),
        );
        ck.eq(
            "a_n",
            bigint(families::a_value(n).expect("n >= 3")),
            sign(n / 2) * c_n,
        );
    }
    ck.out
}

fn check_multipartite(parts: &[usize]) -> Vec<Mismatch> {
    let name = parts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let mut ck = Checks::new(format!("K_{{{name}}}"));
    let g = graph::complete_multipartite(parts).expect("valid parts");
    let r = analyze(&g);
    ck.consistent(&r);
    ck.poly(
        "closed-form polynomial",
        &families::multipartite_closed_poly(parts).expect("valid parts"),
        &r.ind_poly,
    );
    ck.eq("alpha", *parts.iter().max().expect("nonempty"), r.alpha);
    ck.eq(
        "P(-1)",
        bigint(1 - parts.len() as i64),
        r.p_minus_one.clone(),
    );
    ck.eq(
        "PG*",
        families::multipartite_is_pg_star(parts).expect("valid parts"),
        r.pseudo_gorenstein_star,
    );
    ck.out
}

fn check_cameron_walker(spec: &graph::CameronWalkerSpec) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!(
        "CW X={} Y={} core={:?} f={:?} t={:?}",
        spec.x_size, spec.y_size, spec.core_edges, spec.leaves, spec.triangles
    ));
    let (g, counts) = match (graph::cameron_walker(spec), families::cw_counts(spec)) {
        (Ok(g), Ok(c)) => (g, c),
        (Err(e), _) | (_, Err(e)) => {
            ck.fail("construction", e);
            return ck.out;
        }
    };
    let r = analyze(&g);
    ck.consistent(&r);
    ck.eq(
        "P(-1)",
        bigint(families::cw_minus_one(&counts)),
        r.p_minus_one.clone(),
    );
    ck.eq("alpha", families::cw_alpha(&counts), r.alpha);
    ck.eq("M", 0, r.multiplicity);
    ck.eq(
        "PG*",
        families::cw_is_pg_star(&counts),
        r.pseudo_gorenstein_star,
    );
    ck.out
}

fn check_vertex_covers(index: usize, g: &Graph) -> Vec<Mismatch> {
    let base = analyze(g);
    let n = g.order();
    let alpha = base.alpha;
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let independent: VertexSet = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if independent.len() == n || !g.is_independent(&independent).expect("in range") {
            continue;
        }
        let cover = g.complement_of(&independent).expect("in range");
        let mut ck = Checks::new(format!("G#{index} {} C={cover}", describe(g)));
        let s = independent.len();
        let h = suspension(g, &cover).expect("nonempty cover");
        let r = analyze(&h);
        ck.consistent(&r);
        match families::vc_suspension_prediction(s, alpha) {
            Ok(VcPrediction::Preserved) => {
                ck.eq("alpha(G(C))", alpha, r.alpha);
                ck.eq(
                    "PG* preserved",
                    base.pseudo_gorenstein_star,
                    r.pseudo_gorenstein_star,
                );
                let bump = IntPolynomial::linear_power(1, -1, alpha - s - 1).shift(1);
                ck.poly("h(G(C)) - h(G)", &bump, &(&r.h_poly - &base.h_poly));
            }
            Ok(VcPrediction::NeverPgStar) => {
                ck.eq("alpha(G(C))", alpha + 1, r.alpha);
                let expected =
                    &(&IntPolynomial::linear(1, -1) * &base.h_poly) + &IntPolynomial::linear(0, 1);
                ck.poly("h(G(C)) = (1-t) h(G) + t", &expected, &r.h_poly);
                ck.eq("h_(alpha+1)(G(C))", -base.h_top.clone(), r.h_top.clone());
                if base.pseudo_gorenstein_star {
                    ck.eq("deg h(G(C))", alpha + 1, r.h_degree);
                    ck.eq(
                        "leading h coefficient",
                        BigInt::from(-1),
                        r.h_poly.leading_coeff().cloned().unwrap_or_default(),
                    );
                    ck.eq("PG*(G(C))", false, r.pseudo_gorenstein_star);
                }
            }
            Ok(VcPrediction::FullSuspensionCase) => {
                ck.poly(
                    "P(G(C)) = P(G) + x",
                    &(&base.ind_poly + &IntPolynomial::linear(0, 1)),
                    &r.ind_poly,
                );
                ck.eq("P(-1) shift", &base.p_minus_one - 1, r.p_minus_one.clone());
            }
            Err(e) => ck.fail("prediction", e),
        }
        out.extend(ck.out);
    }
    out
}

fn check_cone(cycle: bool, n: usize) -> Vec<Mismatch> {
    let (name, g) = if cycle {
        (
            format!("cone(C_{n})"),
            graph::cycle_graph(n).expect("n >= 3"),
        )
    } else {
        (format!("cone(P_{n})"), graph::path_graph(n))
    };
    let mut ck = Checks::new(name);
    let base = analyze(&g);
    let cone = suspension(&g, &VertexSet::full(n)).expect("n >= 1");
    let r = analyze(&cone);
    ck.consistent(&r);
    ck.eq("alpha", base.alpha, r.alpha);
    ck.eq("P(-1)", &base.p_minus_one - 1, r.p_minus_one.clone());
    let predicted = if cycle {
        families::full_susp_cycle_is_pg_star(n)
    } else {
        families::full_susp_path_is_pg_star(n)
    };
    match predicted {
        Ok(p) => ck.eq("PG*", p, r.pseudo_gorenstein_star),
        Err(e) => ck.fail("prediction", e),
    }
    ck.out
}

fn check_cycle_mis(n: usize, set: &VertexSet) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!("C_{n}({set})"));
    let cycle = graph::cycle_graph(n).expect("n >= 3");
    let g = suspension(&cycle, set).expect("nonempty set");
    let r = analyze(&g);
    ck.consistent(&r);
    if n == 3 {
        let (p, h) = families::c3_suspension_exception();
        ck.poly("P", &p, &r.ind_poly);
        ck.poly("h", &h, &r.h_poly);
        ck.eq("PG*", false, r.pseudo_gorenstein_star);
        return ck.out;
    }
    let params = match CycleSuspensionParams::from_set(n, set) {
        Ok(p) => p,
        Err(e) => {
            ck.fail("parameters", e);
            return ck.out;
        }
    };
    let rest = g.delete_closed_neighborhood(n + 1).expect("apex exists");
    ck.eq(
        "G - N[z] is ell edges + (c - ell) points",
        true,
        families::is_matching_plus_isolated(&rest, params.ell, params.c - params.ell),
    );
    ck.eq("M", 0, r.multiplicity);
    let alpha = n / 2;
    ck.eq(
        "alpha(G)",
        if params.c == alpha { alpha + 1 } else { alpha },
        r.alpha,
    );
    match families::cycle_mis_susp_top_coeff(&params) {
        Ok(top) => ck.eq("h_alpha(G)", bigint(top), r.h_top.clone()),
        Err(e) => ck.fail("top coefficient", e),
    }
    match families::cycle_mis_susp_is_pg_star(&params) {
        Ok(p) => ck.eq("PG*", p, r.pseudo_gorenstein_star),
        Err(e) => ck.fail("PG* prediction", e),
    }
    ck.out
}

fn check_path_mis(n: usize, set: &VertexSet) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!("P_{n}({set})"));
    let g = suspension(&graph::path_graph(n), set).expect("nonempty set");
    let r = analyze(&g);
    ck.consistent(&r);
    let params = match families::path_mis_susp_params(n, set) {
        Ok(p) => p,
        Err(e) => {
            ck.fail("parameters", e);
            return ck.out;
        }
    };
    let rest = g.delete_closed_neighborhood(n + 1).expect("apex exists");
    ck.eq(
        "G - N[z] is ell edges + e points",
        true,
        families::is_matching_plus_isolated(&rest, params.ell, params.e),
    );
    ck.eq(
        "alpha(G)",
        n.div_ceil(2).max(params.c + params.delta),
        r.alpha,
    );
    match families::path_mis_susp_classify(&params) {
        Ok(cls) => {
            ck.eq("a(G) = 0", cls.a_zero, r.a_invariant == 0);
            if let Some(top) = cls.top_coeff {
                ck.eq("h_alpha(G)", bigint(top), r.h_top.clone());
            }
            ck.eq("PG*", cls.pg_star, r.pseudo_gorenstein_star);
        }
        Err(e) => ck.fail("classification", e),
    }
    ck.out
}

fn check_deg_via_ord(index: usize, g: &Graph) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!("G#{index} {}", describe(g)));
    let r = analyze(g);
    ck.eq(
        "deg h = alpha - M",
        r.alpha as i64 - r.multiplicity as i64,
        r.h_degree as i64,
    );
    ck.eq("a = -M", -(r.multiplicity as i64), r.a_invariant);
    ck.consistent(&r);
    match h_polynomial_by_expansion(&r.ind_poly, r.alpha) {
        Ok(h) => ck.poly("h by expansion", &h, &r.h_poly),
        Err(e) => ck.fail("h by expansion", e),
    }
    ck.out
}

fn check_oracle(index: usize, g: &Graph, limit: usize) -> Vec<Mismatch> {
    let mut ck = Checks::new(format!("G#{index} {}", describe(g)));
    match independence_polynomial_bruteforce_capped(g, limit) {
        Ok(brute) => ck.poly("P_G", &brute, &independence_polynomial(g)),
        Err(e) => ck.fail("brute force", e),
    }
    ck.out
}
