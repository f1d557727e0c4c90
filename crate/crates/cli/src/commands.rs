use std::fmt;
use std::io::Read;
use std::path::Path;

use pgstar_core::families::{self, CycleSuspensionParams, VcPrediction};
use pgstar_core::verify::{self, Theorem, VerifyOutcome};
use pgstar_core::{
    analyze, cameron_walker, complete_multipartite, cycle_graph, path_graph, suspension,
    AnalysisReport, CameronWalkerSpec, Error, Graph, InputFormat, IntPolynomial, SweepConfig,
    VertexSet,
};
use serde::Serialize;
use serde_json::json;

use crate::render::{checks_text, print_json, report_text, yes_no, Check, ReportJson};
use crate::{
    CameronWalkerArgs, FamilyCommand, FormatArg, InputArgs, OutputMode, SuspendArgs, TheoremArg,
    VerifyArgs,
};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable input (exit code 2).
    Usage(String),
    /// A configured resource cap was hit (exit code 3).
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Cap(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn check_cap(g: &Graph, extra: usize, max_vertices: usize) -> CliResult<()> {
    let n = g.order() + extra;
    if n > max_vertices {
        return Err(CliError::Cap(format!(
            "graph has {n} vertices, above --max-vertices {max_vertices}"
        )));
    }
    Ok(())
}

fn load(path: &Path, args: &InputArgs) -> CliResult<Graph> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let format = match args.format {
        FormatArg::Auto => pgstar_core::detect_format(&text),
        FormatArg::EdgeList => InputFormat::EdgeList,
        FormatArg::Graph6 => InputFormat::Graph6,
    };
    let g = pgstar_core::parse(&text, format)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    check_cap(&g, 0, args.max_vertices as usize)?;
    Ok(g)
}

pub fn compute(input: &Path, args: &InputArgs, mode: OutputMode) -> CliResult<bool> {
    let g = load(input, args)?;
    let report = analyze(&g);
    match mode {
        OutputMode::Json => print_json(&ReportJson::from(&report)),
        OutputMode::Text => print!("{}", report_text(&report, "")),
    }
    Ok(true)
}

#[derive(Serialize)]
struct FamilyJson {
    family: &'static str,
    parameters: serde_json::Value,
    computed: ReportJson,
    checks: Vec<Check>,
    agreement: bool,
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cw_spec(args: &CameronWalkerArgs) -> CameronWalkerSpec {
    CameronWalkerSpec {
        x_size: args.x,
        y_size: args.y,
        core_edges: args.core_edges.clone(),
        leaves: if args.leaves.is_empty() {
            vec![1; args.x]
        } else {
            args.leaves.clone()
        },
        triangles: if args.triangles.is_empty() {
            vec![0; args.y]
        } else {
            args.triangles.clone()
        },
    }
}

pub fn family(cmd: &FamilyCommand, max_vertices: usize, mode: OutputMode) -> CliResult<bool> {
    let (family, title, parameters, graph) = match cmd {
        FamilyCommand::Cycle { n } => (
            "cycle",
            format!("C_{n}"),
            json!({ "n": n }),
            cycle_graph(*n)?,
        ),
        FamilyCommand::Path { n } => ("path", format!("P_{n}"), json!({ "n": n }), path_graph(*n)),
        FamilyCommand::Multipartite { parts } => (
            "multipartite",
            format!("K_{{{}}}", join(parts)),
            json!({ "parts": parts }),
            complete_multipartite(parts)?,
        ),
        FamilyCommand::CameronWalker(args) => {
            let spec = cw_spec(args);
            let g = cameron_walker(&spec)?;
            let edges: Vec<String> = spec
                .core_edges
                .iter()
                .map(|(i, j)| format!("{i}:{j}"))
                .collect();
            (
                "cameron-walker",
                format!("Cameron-Walker graph on {} vertices", g.order()),
                json!({
                    "x": spec.x_size,
                    "y": spec.y_size,
                    "core_edges": edges,
                    "leaves": spec.leaves,
                    "triangles": spec.triangles,
                }),
                g,
            )
        }
    };
    check_cap(&graph, 0, max_vertices)?;
    let r = analyze(&graph);
    let checks = match cmd {
        FamilyCommand::Cycle { n } => vec![
            Check::new("alpha", n / 2, r.alpha),
            Check::new("P(-1)", families::c_value(*n)?, &r.p_minus_one),
            Check::new(
                "PG*",
                families::cycle_is_pg_star(*n)?,
                r.pseudo_gorenstein_star,
            ),
        ],
        FamilyCommand::Path { n } => vec![
            Check::new("alpha", n.div_ceil(2), r.alpha),
            Check::new("P(-1)", families::p_value(*n), &r.p_minus_one),
            Check::new(
                "PG*",
                families::path_is_pg_star(*n),
                r.pseudo_gorenstein_star,
            ),
        ],
        FamilyCommand::Multipartite { parts } => vec![
            Check::new(
                "P(x)",
                families::multipartite_closed_poly(parts)?,
                &r.ind_poly,
            ),
            Check::new("alpha", parts.iter().max().copied().unwrap_or(0), r.alpha),
            Check::new("P(-1)", 1 - parts.len() as i64, &r.p_minus_one),
            Check::new(
                "PG*",
                families::multipartite_is_pg_star(parts)?,
                r.pseudo_gorenstein_star,
            ),
        ],
        FamilyCommand::CameronWalker(args) => {
            let counts = families::cw_counts(&cw_spec(args))?;
            vec![
                Check::new("P(-1)", families::cw_minus_one(&counts), &r.p_minus_one),
                Check::new("alpha", families::cw_alpha(&counts), r.alpha),
                Check::new("M", 0, r.multiplicity),
                Check::new(
                    "PG*",
                    families::cw_is_pg_star(&counts),
                    r.pseudo_gorenstein_star,
                ),
            ]
        }
    };
    let agreement = checks.iter().all(|c| c.agree);
    match mode {
        OutputMode::Json => print_json(&FamilyJson {
            family,
            parameters,
            computed: ReportJson::from(&r),
            checks,
            agreement,
        }),
        OutputMode::Text => {
            println!("{title}");
            print!("{}", report_text(&r, "  "));
            println!("closed form vs computed:");
            print!("{}", checks_text(&checks));
            println!("agreement: {}", yes_no(agreement));
        }
    }
    Ok(agreement)
}

/// A base graph recognized as a member of a family with known suspension rules.
#[derive(Clone, Copy)]
enum BaseFamily {
    Cycle(usize),
    Path(usize),
    Other,
}

fn recognize(g: &Graph) -> BaseFamily {
    let n = g.order();
    if n >= 3 && cycle_graph(n).is_ok_and(|c| c == *g) {
        BaseFamily::Cycle(n)
    } else if path_graph(n) == *g {
        BaseFamily::Path(n)
    } else {
        BaseFamily::Other
    }
}

#[derive(Serialize)]
struct SuspendJson {
    base: ReportJson,
    base_family: Option<String>,
    set: Vec<usize>,
    roles: Vec<&'static str>,
    suspension: ReportJson,
    applicable: Vec<String>,
    checks: Vec<Check>,
    agreement: bool,
}

pub fn suspend(args: &SuspendArgs, mode: OutputMode) -> CliResult<bool> {
    let g = if let Some(n) = args.cycle {
        cycle_graph(n)?
    } else if let Some(n) = args.path {
        path_graph(n)
    } else {
        let path = args.input.as_deref().expect("clap requires a base graph");
        load(path, &args.input_args)?
    };
    check_cap(&g, 1, args.input_args.max_vertices as usize)?;
    let set = if args.full {
        VertexSet::full(g.order())
    } else {
        VertexSet::new(args.set.clone().unwrap_or_default())
    };
    let h = suspension(&g, &set)?;

    let mut roles = Vec::new();
    if g.is_vertex_cover(&set)? {
        roles.push("vertex cover");
    }
    if g.is_maximal_independent(&set)? {
        roles.push("maximal independent");
    }
    let base = analyze(&g);
    let r = analyze(&h);
    let family = recognize(&g);
    let mut applicable = Vec::new();
    let mut checks = Vec::new();
    if roles.contains(&"vertex cover") {
        vertex_cover_checks(&g, &set, &base, &r, family, &mut applicable, &mut checks)?;
    }
    if roles.contains(&"maximal independent") {
        mis_checks(&set, &r, family, &mut applicable, &mut checks)?;
    }
    let agreement = checks.iter().all(|c| c.agree);
    let family_name = match family {
        BaseFamily::Cycle(n) => Some(format!("C_{n}")),
        BaseFamily::Path(n) => Some(format!("P_{n}")),
        BaseFamily::Other => None,
    };
    match mode {
        OutputMode::Json => print_json(&SuspendJson {
            base: ReportJson::from(&base),
            base_family: family_name,
            set: set.members().to_vec(),
            roles,
            suspension: ReportJson::from(&r),
            applicable,
            checks,
            agreement,
        }),
        OutputMode::Text => {
            match &family_name {
                Some(name) => println!("base graph: {name}"),
                None => println!("base graph: {} vertices, {} edges", g.order(), g.size()),
            }
            println!("attachment set: {set}");
            let role = if roles.is_empty() {
                "neither".to_string()
            } else {
                roles.join(", ")
            };
            println!("role: {role}");
            println!("suspension:");
            print!("{}", report_text(&r, "  "));
            if applicable.is_empty() {
                println!("no classification applies");
            } else {
                println!("predictions ({}):", applicable.join("; "));
                print!("{}", checks_text(&checks));
                println!("agreement: {}", yes_no(agreement));
            }
        }
    }
    Ok(agreement)
}

fn vertex_cover_checks(
    g: &Graph,
    cover: &VertexSet,
    base: &AnalysisReport,
    r: &AnalysisReport,
    family: BaseFamily,
    applicable: &mut Vec<String>,
    checks: &mut Vec<Check>,
) -> CliResult<()> {
    let s = g.order() - cover.len();
    let alpha = base.alpha;
    let prediction = families::vc_suspension_prediction(s, alpha)?;
    applicable.push(format!(
        "vertex-cover suspension, |S| = {s}: {}",
        prediction.label()
    ));
    match prediction {
        VcPrediction::Preserved => {
            let bump = IntPolynomial::linear_power(1, -1, alpha - s - 1).shift(1);
            checks.push(Check::new("alpha", alpha, r.alpha));
            checks.push(Check::new(
                "h(G(C)) - h(G)",
                format!("{bump:#}"),
                format!("{:#}", &r.h_poly - &base.h_poly),
            ));
            checks.push(Check::new(
                "PG*",
                base.pseudo_gorenstein_star,
                r.pseudo_gorenstein_star,
            ));
        }
        VcPrediction::NeverPgStar => {
            let expected =
                &(&IntPolynomial::linear(1, -1) * &base.h_poly) + &IntPolynomial::linear(0, 1);
            checks.push(Check::new("alpha", alpha + 1, r.alpha));
            checks.push(Check::new(
                "h(t)",
                format!("{expected:#}"),
                format!("{:#}", r.h_poly),
            ));
            checks.push(Check::new("h_alpha", -base.h_top.clone(), &r.h_top));
            if base.pseudo_gorenstein_star {
                checks.push(Check::new("PG*", false, r.pseudo_gorenstein_star));
            }
        }
        VcPrediction::FullSuspensionCase => {
            checks.push(Check::new("P(-1)", &base.p_minus_one - 1, &r.p_minus_one));
            match family {
                BaseFamily::Cycle(n) => {
                    applicable.push(format!("cone over C_{n}"));
                    checks.push(Check::new(
                        "PG*",
                        families::full_susp_cycle_is_pg_star(n)?,
                        r.pseudo_gorenstein_star,
                    ));
                }
                BaseFamily::Path(n) if n >= 1 => {
                    applicable.push(format!("cone over P_{n}"));
                    checks.push(Check::new(
                        "PG*",
                        families::full_susp_path_is_pg_star(n)?,
                        r.pseudo_gorenstein_star,
                    ));
                }
                _ => {}
            }
        }
    }
    Ok(())
}

fn mis_checks(
    set: &VertexSet,
    r: &AnalysisReport,
    family: BaseFamily,
    applicable: &mut Vec<String>,
    checks: &mut Vec<Check>,
) -> CliResult<()> {
    match family {
        BaseFamily::Cycle(3) => {
            applicable.push("maximal-independent suspension of C_3".into());
            let (p, h) = families::c3_suspension_exception();
            checks.push(Check::new("P(x)", &p, &r.ind_poly));
            checks.push(Check::new(
                "h(t)",
                format!("{h:#}"),
                format!("{:#}", r.h_poly),
            ));
            checks.push(Check::new("PG*", false, r.pseudo_gorenstein_star));
        }
        BaseFamily::Cycle(n) => {
            let params = CycleSuspensionParams::from_set(n, set)?;
            applicable.push(format!(
                "maximal-independent suspension of C_{n}, c = {}, ell = {}",
                params.c, params.ell
            ));
            let alpha = n / 2;
            checks.push(Check::new(
                "alpha",
                if params.c == alpha { alpha + 1 } else { alpha },
                r.alpha,
            ));
            checks.push(Check::new("M", 0, r.multiplicity));
            checks.push(Check::new(
                "h_alpha",
                families::cycle_mis_susp_top_coeff(&params)?,
                &r.h_top,
            ));
            checks.push(Check::new(
                "PG*",
                families::cycle_mis_susp_is_pg_star(&params)?,
                r.pseudo_gorenstein_star,
            ));
        }
        BaseFamily::Path(n) if n >= 2 => {
            let params = families::path_mis_susp_params(n, set)?;
            let cls = families::path_mis_susp_classify(&params)?;
            applicable.push(format!(
                "maximal-independent suspension of P_{n}, c = {}, ell = {}, delta = {}, e = {}",
                params.c, params.ell, params.delta, params.e
            ));
            checks.push(Check::new(
                "alpha",
                n.div_ceil(2).max(params.c + params.delta),
                r.alpha,
            ));
            checks.push(Check::new("a = 0", cls.a_zero, r.a_invariant == 0));
            if let Some(top) = cls.top_coeff {
                checks.push(Check::new("h_alpha", top, &r.h_top));
            }
            checks.push(Check::new("PG*", cls.pg_star, r.pseudo_gorenstein_star));
        }
        _ => {}
    }
    Ok(())
}

#[derive(Serialize)]
struct MismatchJson<'a> {
    instance: &'a str,
    expected: &'a str,
    got: &'a str,
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    theorem: &'static str,
    range: &'a str,
    instances: usize,
    seed: Option<u64>,
    passed: bool,
    mismatches: Vec<MismatchJson<'a>>,
}

impl<'a> From<&'a VerifyOutcome> for OutcomeJson<'a> {
    fn from(o: &'a VerifyOutcome) -> Self {
        OutcomeJson {
            theorem: o.theorem.id(),
            range: &o.range,
            instances: o.instances,
            seed: o.seed,
            passed: o.passed(),
            mismatches: o
                .mismatches
                .iter()
                .map(|m| MismatchJson {
                    instance: &m.instance,
                    expected: &m.expected,
                    got: &m.got,
                })
                .collect(),
        }
    }
}

fn outcome_text(o: &VerifyOutcome) {
    let status = if o.passed() { "PASS" } else { "FAIL" };
    println!(
        "{}: {status}, {} instances ({})",
        o.theorem, o.instances, o.range
    );
    if let Some(seed) = o.seed {
        println!("  seed: {seed}");
    }
    if !o.passed() {
        println!("  {} mismatches:", o.mismatches.len());
        for m in &o.mismatches {
            println!("    {}: expected {}, got {}", m.instance, m.expected, m.got);
        }
    }
}

pub fn verify(args: &VerifyArgs, mis_cap: usize, mode: OutputMode) -> CliResult<bool> {
    if args.max_parts == 0 || args.max_part_size == 0 {
        return Err(CliError::Usage(
            "--max-parts and --max-part-size must be at least 1".into(),
        ));
    }
    let cfg = SweepConfig {
        max_n: args.max_n,
        random: args.random,
        seed: args.seed,
        exhaustive_n: args.exhaustive_n,
        max_parts: args.max_parts,
        max_part_size: args.max_part_size,
        mis_limit: mis_cap,
        ..SweepConfig::default()
    };
    let theorems: Vec<Theorem> = match args.theorem {
        TheoremArg::One(t) => vec![t],
        TheoremArg::All => Theorem::ALL.to_vec(),
    };
    let outcomes = theorems
        .iter()
        .map(|&t| verify::run(t, &cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = outcomes.iter().all(VerifyOutcome::passed);
    match (mode, args.theorem) {
        (OutputMode::Json, TheoremArg::One(_)) => print_json(&OutcomeJson::from(&outcomes[0])),
        (OutputMode::Json, TheoremArg::All) => print_json(&json!({
            "passed": passed,
            "results": outcomes.iter().map(OutcomeJson::from).collect::<Vec<_>>(),
        })),
        (OutputMode::Text, _) => outcomes.iter().for_each(outcome_text),
    }
    Ok(passed)
}
