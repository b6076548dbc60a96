use std::process::{Command, Output};

fn opcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = opcalc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn golden_examples() {
    assert_eq!(
        stdout(&["trees", "count", "--arity", "3", "--degree", "3"]),
        "12"
    );
    assert_eq!(
        stdout(&["dend", "mul", "--arity", "3", "--op", "<", "(. . .)", "(. . .)"]),
        "(. . (. . .))"
    );
    assert_eq!(
        stdout(&["series", "inverse", "--family", "gonal", "--k", "5", "--terms", "7", "--abs"]),
        "1 5 38 347 3507 37788 425490"
    );
}

#[test]
fn tree_listing() {
    let out = stdout(&["trees", "enum", "-m", "2", "-n", "3"]);
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn arity_is_inferred() {
    assert_eq!(
        stdout(&["dend", "mul", "--op", ".2", "(. . .)", "(. . .)"]),
        "(. (. . .) .)"
    );
    assert_eq!(stdout(&["dend", "decompose", "(. (. . .) .)"]), "c .2 c");
}

#[test]
fn decomposition_routes_agree_on_value() {
    let a = stdout(&[
        "dend",
        "decompose",
        "--route",
        "formula",
        "(. (. . (. . .)) .)",
    ]);
    let b = stdout(&[
        "dend",
        "decompose",
        "--route",
        "solve",
        "(. (. . (. . .)) .)",
    ]);
    for e in [a, b] {
        // feeding the decomposition back must reproduce the tree
        let tree = stdout(&["dend", "involution", "-m", "3", &e]);
        let back = stdout(&["dend", "involution", "-m", "3", &tree]);
        assert_eq!(back, "(. (. . (. . .)) .)");
    }
}

#[test]
fn unit_products_point_at_the_operator() {
    let out = opcalc(&["hopf", "coproduct", "--arity", "3", ". .2 ."]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error:"), "{err}");
    let lines: Vec<&str> = err.lines().collect();
    assert_eq!(lines[1].trim(), ". .2 .");
    assert_eq!(lines[2].find('^'), lines[1].find(".2"));
}

#[test]
fn generator_is_primitive() {
    assert_eq!(
        stdout(&["hopf", "coproduct", "-m", "3", "(. . .)"]),
        "1 (x) (. . .) + (. . .) (x) 1"
    );
}

#[test]
fn tetra_and_gonal_products() {
    assert_eq!(
        stdout(&["tetra", "mul", "--op", "_|_2", "x", "x"]),
        "[0|1|0]"
    );
    assert_eq!(
        stdout(&["gonal", "mul", "--k", "4", "--op", "_|_3", "x", "x"]),
        "[0|tag:1|0|0]"
    );
    let out = opcalc(&["tetra", "mul", "--op", "_|_3", "x", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dims_tables_agree() {
    let t = stdout(&["tetra", "dims", "-m", "4", "--max-degree", "4"]);
    assert_eq!(
        t.lines()
            .last()
            .unwrap()
            .split_whitespace()
            .collect::<Vec<_>>(),
        ["4", "20", "20"]
    );
    let g = stdout(&["gonal", "dims", "-k", "5", "--max-degree", "5"]);
    assert_eq!(
        g.lines()
            .last()
            .unwrap()
            .split_whitespace()
            .collect::<Vec<_>>(),
        ["5", "35", "35"]
    );
}

#[test]
fn axiom_checks() {
    assert!(stdout(&[
        "axioms",
        "check",
        "--family",
        "dend",
        "--param",
        "3",
        "--max-degree",
        "4"
    ])
    .ends_with("pass"));
    let s = stdout(&[
        "axioms",
        "check",
        "--family",
        "gonal",
        "--param",
        "4",
        "--max-degree",
        "5",
        "--sample",
        "20",
        "--seed",
        "3",
    ]);
    assert!(s.ends_with("seed 3"), "{s}");
    assert_eq!(
        opcalc(&[
            "axioms",
            "check",
            "--family",
            "kp",
            "--param",
            "3",
            "--max-degree",
            "4"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn duality_verdicts_set_exit_code() {
    assert!(stdout(&["dual", "check", "--pair", "kp:gonal", "--param", "5"]).ends_with(": dual"));
    assert_eq!(
        opcalc(&["dual", "check", "--pair", "dend:gonal", "--param", "4"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn homology_commands() {
    assert!(stdout(&["homology", "d2", "--complex", "dend3", "--max-n", "4"]).ends_with("pass"));
    let r = stdout(&[
        "homology",
        "ranks",
        "--complex",
        "tetra",
        "--max-n",
        "2",
        "--max-weight",
        "3",
    ]);
    let h1 = r
        .lines()
        .nth(2)
        .unwrap()
        .split_whitespace()
        .last()
        .unwrap()
        .to_string();
    assert_eq!(h1, "1");
}

#[test]
fn series_commands() {
    assert_eq!(
        stdout(&["series", "compose", "--f", "dend:4", "--g", "tetra:4", "--terms", "6"]),
        "1 0 0 0 0 0"
    );
    assert_eq!(
        stdout(&["series", "table", "--family", "dend", "--m", "3", "--terms", "4"])
            .split(' ')
            .count(),
        4
    );
    let csv = stdout(&["series", "pascal", "--rows", "3", "--csv"]);
    assert!(csv.contains("1,2,1"), "{csv}");
}

#[test]
fn json_output() {
    let out = stdout(&[
        "--json", "series", "inverse", "--family", "tetra", "--param", "5", "--terms", "4",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["coefficients"],
        serde_json::json!(["-1", "5", "-35", "285"])
    );
}
