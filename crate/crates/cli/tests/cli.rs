use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn pgstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgstar"))
        .args(args)
        .env_remove("PGSTAR_THREADS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn cycle_edge_list(n: usize) -> String {
    let mut s = format!("{n} {n}\n");
    for v in 1..=n {
        s += &format!("{v} {}\n", v % n + 1);
    }
    s
}

#[test]
fn compute_c6_json() {
    let f = file(&cycle_edge_list(6));
    let out = pgstar(&["compute", f.path().to_str().unwrap(), "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["h_polynomial"], serde_json::json!(["1", "3", "0", "-2"]));
    assert_eq!(
        v["independence_polynomial"],
        serde_json::json!(["1", "6", "9", "2"])
    );
    assert_eq!(v["p_at_minus_one"], "2");
    assert_eq!(v["alpha"], 3);
    assert_eq!(v["pseudo_gorenstein_star"], false);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "n",
        "alpha",
        "independence_polynomial",
        "p_at_minus_one",
        "multiplicity",
        "a_invariant",
        "h_polynomial",
        "h_degree",
        "h_top",
        "pseudo_gorenstein",
        "pseudo_gorenstein_star",
    ] {
        assert!(keys.contains(&key), "missing {key}");
    }
}

#[test]
fn compute_k23_and_graph6() {
    let k23 = "5 6\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
    let f = file(k23);
    let out = pgstar(&["--output", "json", "compute", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["pseudo_gorenstein_star"], true);

    // C_5 in graph6.
    let f = file("Dhc\n");
    let out = pgstar(&["--output", "json", "compute", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        json(&out)["independence_polynomial"],
        serde_json::json!(["1", "5", "5"])
    );
}

#[test]
fn large_coefficients_are_exact_strings() {
    let mut s = "200 0\n".to_string();
    s.push('\n');
    let f = file(&s);
    let out = pgstar(&[
        "--output",
        "json",
        "compute",
        f.path().to_str().unwrap(),
        "--max-vertices",
        "200",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let middle = v["independence_polynomial"][100].as_str().unwrap();
    assert_eq!(
        middle,
        "90548514656103281165404177077484163874504589675413336841320"
    );
}

#[test]
fn bad_inputs_exit_2() {
    let f = file("3 2\n1 2\n2 x\n");
    let out = pgstar(&["compute", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(code(&pgstar(&["compute", "/nonexistent/graph.txt"])), 2);
    assert_eq!(code(&pgstar(&["family", "cycle", "--n", "2"])), 2);
    assert_eq!(code(&pgstar(&["verify", "no-such-theorem"])), 2);
    assert_eq!(code(&pgstar(&["suspend", "--cycle", "5", "--set", ""])), 2);
    assert_eq!(code(&pgstar(&["suspend", "--cycle", "5", "--set", "9"])), 2);
}

#[test]
fn caps_exit_3() {
    let f = file(&cycle_edge_list(10));
    let out = pgstar(&["compute", f.path().to_str().unwrap(), "--max-vertices", "8"]);
    assert_eq!(code(&out), 3);
    let out = pgstar(&[
        "verify",
        "cycle-mis-suspension",
        "--max-n",
        "20",
        "--mis-cap",
        "18",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn family_examples() {
    let out = pgstar(&["family", "cycle", "--n", "17", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["computed"]["pseudo_gorenstein_star"], true);
    let star = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["quantity"] == "PG*")
        .unwrap();
    assert_eq!(star["predicted"], "true");
    assert_eq!(v["agreement"], true);

    let out = pgstar(&[
        "family",
        "multipartite",
        "--parts",
        "2,3",
        "--output",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["agreement"], true);

    let out = pgstar(&[
        "family",
        "cameron-walker",
        "--x",
        "2",
        "--y",
        "1",
        "--core-edges",
        "1:1,2:1",
        "--leaves",
        "1,2",
        "--triangles",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("agreement: yes"));
}

#[test]
fn suspend_examples() {
    let out = pgstar(&[
        "suspend", "--cycle", "5", "--set", "1,3", "--output", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["roles"], serde_json::json!(["maximal independent"]));
    assert_eq!(v["suspension"]["h_top"], "-1");

    let out = pgstar(&["suspend", "--path", "4", "--full", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["suspension"]["pseudo_gorenstein_star"], false);
    let star = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["quantity"] == "PG*")
        .unwrap();
    assert_eq!(star["predicted"], "false");

    let out = pgstar(&["suspend", "--cycle", "12", "--full", "--output", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["suspension"]["pseudo_gorenstein_star"], true);

    // A base graph from a file is recognized as C_5.
    let f = file(&cycle_edge_list(5));
    let out = pgstar(&["suspend", f.path().to_str().unwrap(), "--set", "1,3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(text.contains("base graph: C_5"), "{text}");
    assert!(text.contains("role: maximal independent"), "{text}");

    let out = pgstar(&["suspend", "--cycle", "6", "--set", "1,2"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("role: neither"));
}

#[test]
fn verify_examples() {
    let out = pgstar(&["verify", "cycles", "--max-n", "40", "--output", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["instances"], 38);
    assert_eq!(v["passed"], true);

    let out = pgstar(&["verify", "cycle-mis-suspension", "--max-n", "18"]);
    assert_eq!(code(&out), 0);
    let out = pgstar(&[
        "verify",
        "deg-via-ord",
        "--random",
        "500",
        "--max-n",
        "10",
        "--output",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["seed"], 20260316);
}

#[test]
fn output_does_not_depend_on_threads() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_pgstar"))
            .args([
                "verify", "all", "--output", "json", "--seed", "7", "--max-n", "8",
            ])
            .env("PGSTAR_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let flag = pgstar(&[
        "--threads",
        "3",
        "verify",
        "all",
        "--output",
        "json",
        "--seed",
        "7",
        "--max-n",
        "8",
    ]);
    assert_eq!(flag.stdout, one);
}
