//! Runs the binary on the fixtures and checks outputs and exit codes.

use std::path::{Path, PathBuf};
use std::process::Command;

use cli::doc::{parse, serialize, Document};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn fixture(name: &str) -> PathBuf {
    fixtures().join(format!("{name}.json"))
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cli")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

fn run_on(args: &[&str], input: &Path) -> Run {
    let mut all = args.to_vec();
    all.extend(["--input", input.to_str().expect("utf-8 path")]);
    run(&all)
}

fn with_text(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), text).unwrap();
    f
}

fn report_checks(r: &Run) -> Vec<(String, bool, Option<Vec<String>>)> {
    let Document::Report(rep) = parse(&r.stdout).expect("report document") else { panic!("not a report") };
    rep.checks.into_iter().map(|c| (c.name, c.pass, c.witness)).collect()
}

#[test]
fn every_fixture_round_trips_byte_for_byte() {
    let mut n = 0;
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(serialize(&parse(&text).unwrap()), text, "{}", path.display());
        n += 1;
    }
    assert!(n >= 20);
}

#[test]
fn fixtures_validate_except_the_corrupted_double() {
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        let corrupted = path.file_stem().unwrap() == "double-corrupted";
        let r = run_on(&["validate"], &path);
        assert_eq!(r.code, if corrupted { 1 } else { 0 }, "{}: {}", path.display(), r.stdout);
    }
}

#[test]
fn corrupted_interchange_fails_with_a_witness() {
    let r = run_on(&["validate", "--op", "double"], &fixture("double-corrupted"));
    assert_eq!(r.code, 1);
    let failing: Vec<_> = report_checks(&r).into_iter().filter(|c| !c.1).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0].0, "interchange");
    assert_eq!(failing[0].2.as_ref().map(Vec::len), Some(4));
}

#[test]
fn check_filter_selects_by_prefix() {
    let r = run_on(&["validate", "--check", "interchange,hom-"], &fixture("double-dinertia-z2"));
    assert_eq!(r.code, 0);
    let names: Vec<String> = report_checks(&r).into_iter().map(|c| c.0).collect();
    assert_eq!(names.len(), 5);
    assert!(names.iter().all(|n| n == "interchange" || n.starts_with("hom-")));
    let r = run_on(&["validate", "--check", "lagrangian"], &fixture("matrix-lagrangian"));
    assert_eq!(r.code, 0);
    let r = run_on(&["validate", "--check", "symplectic"], &fixture("matrix-lagrangian"));
    assert_eq!(r.code, 1);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["validate", "--input", "/nonexistent/file.json"]).code, 2);
    assert_eq!(run(&["validate"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run_on(&["construct", "--op", "bogus"], &fixture("groupoid-z2")).code, 2);
    assert_eq!(run_on(&["validate", "--op", "double"], &fixture("groupoid-z2")).code, 2);
    assert_eq!(run(&["enumerate", "--max-arrows", "9"]).code, 2);
    assert_eq!(run(&["enumerate", "--max-squares", "12"]).code, 2);
}

#[test]
fn dangling_references_name_the_element_and_line() {
    let text = "{\n  \"kind\": \"relation\",\n  \"src\": [\"a\"],\n  \"dst\": [\"b\"],\n  \"pairs\": [\n    [\"a\", \"zz\"]\n  ]\n}\n";
    let f = with_text(text);
    let r = run_on(&["validate"], f.path());
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 6") && r.stderr.contains("zz"), "{}", r.stderr);
}

#[test]
fn non_reduced_rationals_are_rejected_with_guidance() {
    let f = with_text("{\"kind\": \"matrix\",\n\"rows\": [[\"2/4\"]]}\n");
    let r = run_on(&["validate"], f.path());
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2") && r.stderr.contains("1/2"), "{}", r.stderr);
}

#[test]
fn output_file_matches_standard_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("core.json");
    let a = run_on(&["construct", "--op", "core", "--output", out.to_str().unwrap()], &fixture("double-dinertia-z2"));
    assert_eq!(a.code, 0);
    assert!(a.stdout.is_empty());
    let b = run_on(&["construct", "--op", "core"], &fixture("double-dinertia-z2"));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), b.stdout);
    // no temporary files are left behind
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn constructions_pipe_into_validation() {
    let dir = tempfile::tempdir().unwrap();
    for (op, input) in [
        ("core", "double-dmain-z2"),
        ("hopfoid", "double-dinertia-swap"),
        ("induced", "double-crossed"),
        ("inertia", "groupoid-s3"),
        ("nerve", "groupoid-pair12"),
        ("example", "groupoid-z3"),
        ("example-inertia", "groupoid-z2-swap"),
        ("double", "hopfoid-dinertia-z2"),
    ] {
        let out = dir.path().join(format!("{op}.json"));
        let r = run_on(&["construct", "--op", op, "--output", out.to_str().unwrap()], &fixture(input));
        assert_eq!(r.code, 0, "{op}: {}", r.stderr);
        let v = run_on(&["validate"], &out);
        assert_eq!(v.code, 0, "{op}: {}", v.stdout);
    }
}

#[test]
fn core_of_the_main_example_is_trivial() {
    let r = run_on(&["construct", "--op", "core"], &fixture("double-dmain-z2"));
    let Document::Groupoid(g) = parse(&r.stdout).unwrap() else { panic!("groupoid expected") };
    assert_eq!(g.arrows.len(), g.objects.len());
    assert_eq!(g.unit, g.arrows);
}

#[test]
fn nerve_levels_of_the_pair_groupoid() {
    let r = run_on(&["construct", "--op", "nerve", "--depth", "3"], &fixture("groupoid-pair12"));
    let Document::Simplicial(s) = parse(&r.stdout).unwrap() else { panic!("simplicial expected") };
    // k composable arrows of the pair groupoid on two objects: 2^(k+1)
    let sizes: Vec<usize> = s.levels.iter().map(Vec::len).collect();
    assert_eq!(sizes, [2, 4, 8, 16]);
}

#[test]
fn identity_then_relation_composes_to_the_relation() {
    let Document::Matrix(l) = parse(&std::fs::read_to_string(fixture("matrix-canrel")).unwrap()).unwrap() else {
        panic!("matrix expected")
    };
    let Some(src) = l.src.clone() else { panic!("relation expected") };
    let n = src.len();
    let id_rows: Vec<Vec<String>> = (0..n)
        .map(|i| (0..2 * n).map(|j| if j == i || j == i + n { "1".into() } else { "0".into() }).collect())
        .collect();
    let id = cli::doc::MatrixDoc { rows: id_rows, form: None, src: Some(src.clone()), dst: Some(src) };
    let chain = Document::Chain(cli::doc::ChainDoc { legs: vec![id, l.clone()], flags: Default::default() });
    let f = with_text(&serialize(&chain));
    let r = run_on(&["linear", "--op", "compose"], f.path());
    assert_eq!(r.code, 0, "{}", r.stderr);
    let Document::Chain(out) = parse(&r.stdout).unwrap() else { panic!("chain expected") };
    assert_eq!(out.legs.len(), 1);
    assert_eq!(serialize(&Document::Matrix(out.legs[0].clone())), serialize(&Document::Matrix(l)));
    assert_eq!(out.flags.get("strongly-transversal"), Some(&true));
}

#[test]
fn linear_operations_report_their_flags() {
    let r = run_on(&["linear", "--op", "factor"], &fixture("matrix-canrel"));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let Document::Chain(c) = parse(&r.stdout).unwrap() else { panic!("chain expected") };
    assert_eq!((c.legs.len(), c.flags.get("recomposes")), (3, Some(&true)));

    let r = run_on(&["linear", "--op", "two-term"], &fixture("chain"));
    let Document::Chain(c) = parse(&r.stdout).unwrap() else { panic!("chain expected") };
    assert_eq!((r.code, c.legs.len(), c.flags.get("recomposes")), (0, 2, Some(&true)));

    // the fixture map R → R² is not onto
    let r = run_on(&["linear", "--op", "lift"], &fixture("matrix-lift"));
    let Document::Chain(c) = parse(&r.stdout).unwrap() else { panic!("chain expected") };
    assert_eq!((r.code, c.flags.get("reduction")), (0, Some(&false)));

    let r = run_on(&["linear", "--op", "reduce"], &fixture("matrix-lagrangian"));
    let Document::Chain(c) = parse(&r.stdout).unwrap() else { panic!("chain expected") };
    assert_eq!((r.code, c.flags.get("reduction")), (0, Some(&true)));
}

#[test]
fn reducing_a_non_coisotropic_subspace_fails() {
    let text = "{\"kind\": \"matrix\", \"rows\": [[\"1\", \"0\", \"0\", \"0\"]], \"form\": [[\"0\", \"1\", \"0\", \"0\"], [\"-1\", \"0\", \"0\", \"0\"], [\"0\", \"0\", \"0\", \"1\"], [\"0\", \"0\", \"-1\", \"0\"]]}";
    let r = run_on(&["linear", "--op", "reduce"], with_text(text).path());
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("coisotropic"), "{}", r.stderr);
}

#[test]
fn enumeration_reports_and_injected_counterexamples() {
    let r = run(&["enumerate", "--max-arrows", "4"]);
    assert_eq!(r.code, 0);
    assert!(report_checks(&r).iter().all(|c| c.1));

    let r = run(&["enumerate", "--max-squares", "4", "--max-arrows", "2"]);
    assert_eq!(r.code, 0, "{}", r.stdout);

    // a table whose product is not associative
    let z2 = std::fs::read_to_string(fixture("groupoid-z2")).unwrap();
    let bad = z2.replace("[\"1\", \"1\", \"0\"]", "[\"1\", \"1\", \"1\"]");
    assert_ne!(bad, z2);
    let r = run_on(&["enumerate", "--max-arrows", "4", "--check", "round-trip"], with_text(&bad).path());
    assert_eq!(r.code, 1);
    let checks = report_checks(&r);
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0].2.as_deref(), Some(&["input".to_string()][..]));

    let r = run_on(&["enumerate", "--max-squares", "4", "--max-arrows", "2"], &fixture("double-corrupted"));
    assert_eq!(r.code, 1);
    assert!(report_checks(&r).iter().filter(|c| !c.1).all(|c| c.2.as_deref() == Some(&["input".to_string()][..])));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = run(&["enumerate", "--max-squares", "4", "--max-arrows", "2", "--check", "hopfoid,simplicial"]);
    let b = run(&["enumerate", "--max-squares", "4", "--max-arrows", "2", "--check", "hopfoid,simplicial"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}
