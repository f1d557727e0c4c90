use std::fmt::Write;

use pgstar_core::{AnalysisReport, IntPolynomial};
use serde::Serialize;

/// JSON form of an [`AnalysisReport`]. Every integer that can grow without
/// bound is a decimal string.
#[derive(Serialize)]
pub struct ReportJson {
    pub n: usize,
    pub alpha: usize,
    pub independence_polynomial: Vec<String>,
    pub p_at_minus_one: String,
    pub multiplicity: usize,
    pub a_invariant: i64,
    pub h_polynomial: Vec<String>,
    pub h_degree: usize,
    pub h_top: String,
    pub pseudo_gorenstein: bool,
    pub pseudo_gorenstein_star: bool,
}

fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl From<&AnalysisReport> for ReportJson {
    fn from(r: &AnalysisReport) -> Self {
        ReportJson {
            n: r.n,
            alpha: r.alpha,
            independence_polynomial: coeff_strings(&r.ind_poly),
            p_at_minus_one: r.p_minus_one.to_string(),
            multiplicity: r.multiplicity,
            a_invariant: r.a_invariant,
            h_polynomial: coeff_strings(&r.h_poly),
            h_degree: r.h_degree,
            h_top: r.h_top.to_string(),
            pseudo_gorenstein: r.pseudo_gorenstein,
            pseudo_gorenstein_star: r.pseudo_gorenstein_star,
        }
    }
}

/// One predicted-versus-computed comparison.
#[derive(Serialize)]
pub struct Check {
    pub quantity: String,
    pub predicted: String,
    pub computed: String,
    pub agree: bool,
}

impl Check {
    pub fn new(quantity: &str, predicted: impl ToString, computed: impl ToString) -> Self {
        let (predicted, computed) = (predicted.to_string(), computed.to_string());
        Check {
            quantity: quantity.to_string(),
            agree: predicted == computed,
            predicted,
            computed,
        }
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report_text(r: &AnalysisReport, indent: &str) -> String {
    let rows = [
        ("vertices", r.n.to_string()),
        ("alpha", r.alpha.to_string()),
        ("P(x)", r.ind_poly.to_string()),
        ("P(-1)", r.p_minus_one.to_string()),
        ("M", r.multiplicity.to_string()),
        ("a-invariant", r.a_invariant.to_string()),
        ("h(t)", format!("{:#}", r.h_poly)),
        ("deg h", r.h_degree.to_string()),
        ("h_alpha", r.h_top.to_string()),
        ("pseudo-Gorenstein", yes_no(r.pseudo_gorenstein).to_string()),
        (
            "pseudo-Gorenstein*",
            yes_no(r.pseudo_gorenstein_star).to_string(),
        ),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        writeln!(out, "{indent}{k:<20}{v}").unwrap();
    }
    out
}

pub fn checks_text(checks: &[Check]) -> String {
    let width = checks
        .iter()
        .map(|c| c.quantity.len())
        .max()
        .unwrap_or(0)
        .max("quantity".len())
        + 2;
    let pw = checks
        .iter()
        .map(|c| c.predicted.len())
        .max()
        .unwrap_or(0)
        .max("predicted".len())
        + 2;
    let cw = checks
        .iter()
        .map(|c| c.computed.len())
        .max()
        .unwrap_or(0)
        .max("computed".len())
        + 2;
    let mut out = String::new();
    writeln!(
        out,
        "  {:<width$}{:<pw$}{:<cw$}agree",
        "quantity", "predicted", "computed"
    )
    .unwrap();
    for c in checks {
        writeln!(
            out,
            "  {:<width$}{:<pw$}{:<cw$}{}",
            c.quantity,
            c.predicted,
            c.computed,
            yes_no(c.agree)
        )
        .unwrap();
    }
    out
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}
