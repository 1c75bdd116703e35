use std::path::PathBuf;
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};

use chordal_complexes::chain::is_cycle;
use chordal_complexes::format::parse_chain;
use chordal_complexes::{corpus, Rationals, RelativeComplex};
use serde_json::Value;

static COUNTER: AtomicUsize = AtomicUsize::new(0);

fn scratch(name: &str) -> PathBuf {
    let n = COUNTER.fetch_add(1, Ordering::SeqCst);
    std::env::temp_dir().join(format!("chordal-cli-{}-{n}-{name}", std::process::id()))
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
    json: Option<Value>,
}

fn chordal(args: &[&str]) -> Run {
    let path = scratch("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_chordal"))
        .args(args)
        .arg("--json")
        .arg(&path)
        .output()
        .unwrap();
    let json = std::fs::read_to_string(&path).ok().map(|s| serde_json::from_str(&s).unwrap());
    let _ = std::fs::remove_file(&path);
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        json,
    }
}

#[test]
fn square_is_not_decomposition_chordal_and_its_witness_replays() {
    let r = chordal(&["--corpus", "cycle(4)", "check", "--kind", "decomposition", "--k", "1"]);
    assert_eq!(r.code, 1, "{}", r.stderr);
    let j = r.json.unwrap();
    assert_eq!(j["schema"], 1);
    assert_eq!(j["verdict"], false);
    let lines: Vec<String> = j["result"]["witness"]["cycle"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap().to_string())
        .collect();
    assert_eq!(lines.len(), 4);

    // Read the witness back and check it is a cycle with no resolution.
    let c = corpus::cycle(4);
    let amb = RelativeComplex::absolute(c.clone());
    let z = parse_chain(&Rationals, &lines.join("\n"), &amb).unwrap();
    assert!(is_cycle(&Rationals, &z, &amb));
    let file = scratch("witness.chain");
    std::fs::write(&file, lines.join("\n")).unwrap();
    let r = chordal(&["--corpus", "cycle(4)", "resolve", "--cycle", file.to_str().unwrap()]);
    std::fs::remove_file(&file).unwrap();
    assert_eq!(r.code, 1, "{}", r.stderr);
}

#[test]
fn square_resolves_on_its_own_vertices_only() {
    let file = scratch("square.chain");
    std::fs::write(&file, "1 : 1 2\n1 : 2 3\n1 : 3 4\n-1 : 1 4\n").unwrap();
    let path = file.to_str().unwrap();
    // The cone apex lies outside the cycle's support.
    let cone = chordal(&["--corpus", "cone(cycle(4))", "resolve", "--cycle", path]);
    let solid = chordal(&["--corpus", "skeleton(simplex(3),2)", "resolve", "--cycle", path]);
    std::fs::remove_file(&file).unwrap();
    assert_eq!(cone.code, 1, "{}", cone.stderr);
    assert_eq!(solid.code, 0, "{}", solid.stderr);
    assert!(!solid.json.unwrap()["result"]["resolution"].as_array().unwrap().is_empty());
}

#[test]
fn projective_plane_regularity_depends_on_the_field() {
    let q = chordal(&["--corpus", "rp2_6", "regularity"]);
    let f2 = chordal(&["--corpus", "rp2_6", "--field", "f2", "regularity"]);
    assert_eq!(q.code, 0);
    assert_eq!(q.json.unwrap()["result"]["regularity"], 2);
    assert_eq!(f2.json.unwrap()["result"]["regularity"], 3);
    assert_eq!(chordal(&["--corpus", "rp2_6", "linear-resolution"]).code, 0);
    assert_eq!(chordal(&["--corpus", "rp2_6", "--field", "f2", "linear-resolution"]).code, 1);
}

#[test]
fn woodroofe_join_is_two_dirac() {
    let r = chordal(&["--corpus", "woodroofe_join", "dirac", "--k", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let j = r.json.unwrap();
    assert_eq!(j["result"]["status"], "certified");
    assert_eq!(j["result"]["certificate"]["steps"].as_array().unwrap().len(), 4);
    assert!(r.stdout.contains("eliminations"));
}

#[test]
fn octahedron_is_not_two_dirac() {
    let r = chordal(&["--corpus", "octahedron", "dirac", "--k", "2"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json.unwrap()["result"]["status"], "not_dirac");
}

#[test]
fn exhausted_budget_is_an_error_exit() {
    let r = chordal(&["--corpus", "chordal_graph(9)", "dirac", "--k", "1", "--budget", "2"]);
    assert_eq!(r.code, 2);
}

#[test]
fn errors_exit_with_two() {
    let r = chordal(&["--complex", "/nonexistent/complex.facets", "leray"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("cannot read"));
    assert_eq!(chordal(&["--corpus", "nosuch(3)", "leray"]).code, 2);
    assert_eq!(chordal(&["--corpus", "cycle(4)", "check", "--kind", "resolution", "--k", "-2"]).code, 2);
    assert_eq!(chordal(&["--corpus", "simplex(3)", "linear-resolution"]).code, 2);
}

#[test]
fn elkcut_on_the_octahedron_is_minimal() {
    let r = chordal(&["--corpus", "octahedron", "elkcut", "--k", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rep = &r.json.unwrap()["result"]["report"];
    assert_eq!(rep["is_minimal"], true);
    assert_eq!(rep["homology_sigma"], true);
}

#[test]
fn corpus_output_parses_back() {
    let r = chordal(&["corpus", "--spec", "join(cycle(4),simplex(0))"]);
    assert_eq!(r.code, 0);
    let c = chordal_complexes::format::parse_complex(&r.stdout).unwrap();
    assert_eq!(c.f_vector(), corpus::cone(&corpus::cycle(4)).unwrap().f_vector());
}

/// Every field except timing and the command line must agree.
fn stable(mut j: Value) -> Value {
    let o = j.as_object_mut().unwrap();
    o.remove("timing_ms");
    o.remove("argv");
    j
}

#[test]
fn output_is_independent_of_thread_count() {
    let cases: &[&[&str]] = &[
        &["--corpus", "rp2_6", "--field", "f2", "regularity", "--table"],
        &["--corpus", "flag(9,50,4)", "check", "--kind", "resolution", "--k", "1"],
        &["--corpus", "woodroofe_join", "dirac", "--k", "3"],
        &["--corpus", "glued_sheets", "elkcut", "--k", "2"],
        &["--corpus", "dunce8", "propagation", "--k", "2"],
    ];
    for args in cases {
        let one = chordal(&[args, &["--threads", "1"][..]].concat());
        let eight = chordal(&[args, &["--threads", "8"][..]].concat());
        assert_eq!(one.code, eight.code, "{args:?}");
        assert_eq!(one.stdout, eight.stdout, "{args:?}");
        assert_eq!(stable(one.json.unwrap()), stable(eight.json.unwrap()), "{args:?}");
    }
}
