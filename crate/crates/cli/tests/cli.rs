use std::path::PathBuf;
use std::process::Command;

use twcube::{dispatch, EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn run(args: &str) -> (i32, String) {
    let argv: Vec<&str> = args.split_whitespace().collect();
    dispatch(&argv)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn goldens() {
    let cases = [
        (
            "gen --family twisted --flavor face --dim 2 --format json",
            "gen_twisted_face_2.json",
        ),
        (
            "gen --family twisted --dim 3 --format dot --highlight-hamiltonian",
            "gen_twisted_face_3_highlight.dot",
        ),
        (
            "gen --family cube --flavor reflexive --dim 2 --format tsv",
            "gen_cube_reflexive_2.tsv",
        ),
        ("sort-table --dim 4", "sort_table_4.tsv"),
        (
            "embed --family twisted --dim 3 --table",
            "embed_twisted_3_table.tsv",
        ),
        (
            "homs --cat simplex-semi-comb --src 1 --dst 3 --list",
            "homs_simplex_semi_comb_1_3.txt",
        ),
    ];
    for (args, file) in cases {
        let (code, out) = run(args);
        assert_eq!(code, EXIT_OK, "{args}");
        assert_eq!(out, golden(file), "{args}");
    }
}

#[test]
fn twisted_square_json() {
    let (code, out) = run("gen --family twisted --flavor face --dim 2 --format json");
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.trim_end(),
        r#"{"nodes":["00","01","10","11"],"edges":[["00","10"],["01","00"],["01","11"],["10","11"]]}"#
    );
}

#[test]
fn recursive_flag_gives_same_graph_up_to_labels() {
    for family in ["simplex", "cube", "twisted"] {
        let (_, closed) = run(&format!("gen --family {family} --dim 3 --format json"));
        let (code, rec) = run(&format!(
            "gen --family {family} --dim 3 --format json --recursive"
        ));
        assert_eq!(code, EXIT_OK);
        let count = |s: &str, key: &str| {
            let v: serde_json::Value = serde_json::from_str(s).unwrap();
            v[key].as_array().unwrap().len()
        };
        assert_eq!(count(&closed, "nodes"), count(&rec, "nodes"));
        assert_eq!(count(&closed, "edges"), count(&rec, "edges"));
    }
}

#[test]
fn sort_table_first_row() {
    let (code, out) = run("sort-table --dim 3");
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0], "011\t0\t000");
    assert_eq!(rows[7], "111\t7\t111");
}

#[test]
fn hom_counts() {
    assert_eq!(
        run("homs --cat simplex-semi-graph --src 1 --dst 3 --count"),
        (EXIT_OK, "6\n".into())
    );
    assert_eq!(
        run("homs --cat twisted_semi_graph --src 3 --dst 3"),
        (EXIT_OK, "1\n".into())
    );
    assert_eq!(
        run("homs --cat cube-semi-comb --src 1 --dst 2"),
        (EXIT_OK, "4\n".into())
    );
}

#[test]
fn embed_check_and_negative_control() {
    let (code, out) = run("embed --family twisted --dim 4 --check");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.ends_with("result\tpass\n"));

    let (code, out) = run("embed --family twisted --dim 2 --space std");
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("witness\t01\t00\n"), "{out}");
}

#[test]
fn verify_suites() {
    for suite in ["graph", "words", "shapes", "pospace"] {
        let (code, out) = run(&format!("verify --suite {suite} --max-dim 3"));
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.starts_with("subject\tcheck\tstatus\twitness\n"));
    }
}

#[test]
fn verify_all_fails_only_on_the_cube_graph_presentation() {
    let (code, out) = run("verify --suite all --max-dim 4");
    assert_eq!(code, EXIT_FAIL);
    let failing: Vec<&str> = out
        .lines()
        .filter(|l| l.split('\t').nth(2) == Some("fail"))
        .collect();
    assert!(!failing.is_empty());
    for line in &failing {
        assert!(line.starts_with("cube_semi_graph\t"), "{line}");
    }
    assert!(out.contains("00>00,01>01,10>01,11>11"));
}

#[test]
fn usage_and_budget_errors() {
    assert_eq!(run("gen --family foo --dim 1").0, EXIT_USAGE);
    assert_eq!(
        run("gen --family twisted-sorted --flavor reflexive --dim 1").0,
        EXIT_USAGE
    );
    assert_eq!(
        run("gen --family twisted --dim 2 --highlight-hamiltonian").0,
        EXIT_USAGE
    );
    assert_eq!(
        run("homs --cat cube-semi-graph --src 1 --dst 2 --count --list").0,
        EXIT_USAGE
    );
    assert_eq!(run("frobnicate").0, EXIT_USAGE);
    assert_eq!(run("gen --family cube --dim 40").0, EXIT_BUDGET);
    assert_eq!(run("sort-table --dim 30").0, EXIT_BUDGET);
    assert_eq!(run("--help").0, EXIT_OK);
}

#[test]
fn binary_output_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_twcube");
    let args = ["gen", "--family", "cube", "--dim", "3", "--format", "dot"];
    let a = Command::new(exe).args(args).output().unwrap();
    let b = Command::new(exe).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let bad = Command::new(exe)
        .args(["gen", "--dim", "x"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(bad.stdout.is_empty());
}
