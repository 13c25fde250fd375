use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hamburger::graph::{counterexample_graph, example_graph, GraphFile};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamburger"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn det_of_example_graph() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "ex.json", &GraphFile::from_standard(&example_graph()).to_json());
    let o = run(&["det", &g]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "full=17 reduced=17\n");
}

#[test]
fn cycles_listing_for_both_examples() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "ex.json", &GraphFile::from_standard(&example_graph()).to_json());
    let o = run(&["cycles", &g]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 18);
    assert!(lines[17].starts_with("systems=17 c+=17 c-=0 "));
    assert!(lines[17].ends_with("signed_sum=17"));

    let c = write(dir.path(), "cx.json", &GraphFile::from_generalized(&counterexample_graph()).to_json());
    let o = run(&["cycles", &c]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("systems=10 ")));
    assert!(out.ends_with("det=-5\n"));
}

#[test]
fn cycles_budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "ex.json", &GraphFile::from_standard(&example_graph()).to_json());
    let o = run(&["cycles", &g, "--max-systems", "3"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn malformed_inputs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{ not json");
    assert_eq!(run(&["det", &bad]).status.code(), Some(1));
    assert_eq!(run(&["det", "/nonexistent/graph.json"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn region_then_tilings_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ad4");
    let o = run(&["region", "diamond", "--n", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "cells=40 k=4 top_vertices=10 bottom_vertices=10\n");
    for f in ["region.txt", "digraph.json", "map.txt"] {
        assert!(out.join(f).exists(), "{f}");
    }
    let region = out.join("region.txt");
    let region = region.to_str().unwrap();
    let o = run(&["tilings", region, "--verify"]);
    assert_eq!(stdout(&o), "1024\nverified: det = dp\n");
    let o = run(&["tilings", region, "--method", "dp", "--verify"]);
    assert_eq!(stdout(&o), "1024\nverified: dp = det\n");
    // 40 cells is over the default enumeration bound.
    assert_eq!(run(&["tilings", region, "--method", "enum"]).status.code(), Some(2));
    let o = run(&["tilings", region, "--method", "enum", "--max-cells", "40"]);
    assert_eq!(stdout(&o), "1024\n");

    let digraph = out.join("digraph.json");
    let o = run(&["det", digraph.to_str().unwrap()]);
    assert_eq!(stdout(&o), "full=1024 reduced=1024\n");
}

#[test]
fn pillow_and_generalized_regions() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ap6");
    let o = run(&["region", "pillow", "--n", "6", "--q", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["tilings", out.join("region.txt").to_str().unwrap()]);
    assert_eq!(stdout(&o), "13357\n");

    let gen = dir.path().join("gen");
    let o = run(&[
        "region", "generalized", "--n", "4",
        "--top-left", "1,1", "--top-right", "3,1",
        "--bottom-left", "1,1", "--bottom-right", "1,1",
        "--out", gen.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["tilings", gen.join("region.txt").to_str().unwrap(), "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let o = run(&[
        "region", "generalized", "--n", "4", "--top-left", "2", "--top-right", "2",
        "--out", dir.path().join("even").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["region", "pillow", "--n", "3", "--out", dir.path().join("noq").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn propp_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report");
    let o = run(&[
        "propp", "--q", "3", "--q", "1", "--n-max", "8", "--jobs", "3", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("q=3: two-squares representation found for 8/8; generating-function check holds for 8/8"));
    let csv = fs::read_to_string(out.join("propp.csv")).unwrap();
    assert!(csv.starts_with("q,n,count,l,s,mode,ratio,two_squares,propp\n"));
    assert!(csv.contains("\n3,4,117,3,13,conjecture-gf,2.600000000,reps=1;l_divides=1,true\n"));
    assert_eq!(csv.lines().count(), 17);
    let rho = fs::read_to_string(out.join("rho_q3.csv")).unwrap();
    assert!(rho.starts_with("series,n,exact,decimal\n"));
    assert!(fs::read_to_string(out.join("rho_q1.csv")).unwrap().contains("rho,8,2,2.000000000"));

    // Single-threaded stdout output is byte-identical to the file.
    let o = run(&["propp", "--q", "1", "--q", "3", "--n-max", "8"]);
    assert_eq!(stdout(&o), csv);
    let o = run(&["propp", "--q", "3", "--n-max", "3", "--format", "txt"]);
    assert!(stdout(&o).contains("q=3 n=3 count=20"), "{}", stdout(&o));
}

#[test]
fn bench_without_timings_is_reproducible() {
    let a = run(&["bench", "--n-max", "6", "--no-timings", "--jobs", "2"]);
    let b = run(&["bench", "--n-max", "6", "--no-timings"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).lines().count(), 7);
}

#[test]
fn schroeder_tables() {
    let o = run(&["schroeder", "--n", "7"]);
    let out = stdout(&o);
    assert_eq!(out.lines().next().unwrap(), "1\t1\t2\t5\t16\t57\t224");
    assert_eq!(out.lines().nth(2).unwrap(), "0\t0\t1\t2\t6\t21\t82");
    let o = run(&["schroeder", "--n", "6", "--large"]);
    assert_eq!(stdout(&o).lines().next().unwrap(), "1\t2\t6\t22\t90\t394");
}
