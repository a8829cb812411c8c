//! End-to-end tests of the `toughcert` binary: exit codes, document
//! schemas, determinism, and the file formats as seen from the outside.

use std::io::Write;
use std::process::{Command, Output, Stdio};
use toughcert_cli::report::{parse_documents, validate};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toughcert"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn toughcert")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn toughcert");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("wait for toughcert")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn assert_docs_valid(text: &str) {
    for (kind, entries) in parse_documents(text).expect("parse documents") {
        let errors = validate(&kind, &entries);
        assert!(errors.is_empty(), "{kind}: {errors:?}\n{text}");
    }
}

fn value_of<'a>(text: &'a str, key: &str) -> &'a str {
    let prefix = format!("{key}: ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("missing key {key} in:\n{text}"))
}

#[test]
fn spectra_of_k5_hits_the_complete_graph_value() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.g6");
    std::fs::write(&path, "D~{\n").unwrap();
    let out = run(&["spectra", path.to_str().unwrap()]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert_docs_valid(&text);
    assert_eq!(value_of(&text, "eta1"), "8.00000000000");
    assert_eq!(value_of(&text, "transmission-regular"), "true");
    assert_eq!(value_of(&text, "transmission-k"), "4");
    assert_eq!(value_of(&text, "wiener"), "10");
}

#[test]
fn toughness_of_the_star_reports_exact_rationals() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star4.edges");
    std::fs::write(&path, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let out = run(&["toughness", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_docs_valid(&text);
    assert_eq!(value_of(&text, "tau"), "1/3");
    assert_eq!(value_of(&text, "tau-witness-set"), "0");
    assert_eq!(value_of(&text, "tau-witness-components"), "3");
    assert_eq!(value_of(&text, "tau-prime"), "1/2");
}

#[test]
fn toughness_decision_mode_answers_both_ways() {
    let cycle6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
    let out = run_stdin(&["toughness", "-", "--t", "1"], cycle6);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_docs_valid(&text);
    assert_eq!(value_of(&text, "tough"), "true");
    assert_eq!(value_of(&text, "witness-set"), "none");
    let out = run_stdin(&["toughness", "-", "--t", "2", "--variant", "tau-prime"], cycle6);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(value_of(&text, "tough"), "false");
    assert_eq!(value_of(&text, "witness-components"), "3");
    // Complete graphs are infinitely tough.
    let out = run_stdin(&["toughness", "-"], "D~{");
    let text = stdout(&out);
    assert_eq!(value_of(&text, "tau"), "inf");
    assert_eq!(value_of(&text, "tau-witness-set"), "none");
}

#[test]
fn certify_pipeline_flags_the_exceptional_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.g6");
    let out = run(&[
        "extremal",
        "--s",
        "2",
        "--parts",
        "18,1,1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // 22 vertices: 1 header byte + ceil(231/6) = 39 body bytes + newline.
    let line = std::fs::read_to_string(&path).unwrap();
    assert!(line.ends_with('\n'));
    assert_eq!(line.len(), 41);

    let out = run(&["certify", path.to_str().unwrap(), "--theorem", "1.1", "--crosscheck"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert_docs_valid(&text);
    assert_eq!(value_of(&text, "verdict"), "extremal-exception");
    assert_eq!(value_of(&text, "variant"), "tau");
    assert_eq!(value_of(&text, "target"), "1/1");
    assert_eq!(value_of(&text, "oracle"), "consistent");
    assert!(text.contains("log-1: "));
}

#[test]
fn certify_accepts_a_dense_graph_from_stdin() {
    // K_20 minus two disjoint edges, as an edge list.
    let mut edges = Vec::new();
    for j in 1..20usize {
        for i in 0..j {
            if (i, j) != (0, 1) && (i, j) != (2, 3) {
                edges.push((i, j));
            }
        }
    }
    let mut text = format!("20 {}\n", edges.len());
    for (u, v) in edges {
        text.push_str(&format!("{u} {v}\n"));
    }
    let out = run_stdin(&["certify", "-", "--theorem", "1.2", "--q", "2", "--crosscheck"], &text);
    assert!(out.status.success(), "{out:?}");
    let doc = stdout(&out);
    assert_docs_valid(&doc);
    assert_eq!(value_of(&doc, "verdict"), "certified");
    assert_eq!(value_of(&doc, "target"), "1/2");
    assert_eq!(value_of(&doc, "oracle"), "consistent");
}

#[test]
fn usage_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.g6");
    std::fs::write(&path, "D~{\n").unwrap();
    let k5 = path.to_str().unwrap();

    // Unknown theorem.
    assert_eq!(run(&["certify", k5, "--theorem", "9.9"]).status.code(), Some(2));
    // Missing / contradictory level flags.
    assert_eq!(run(&["certify", k5, "--theorem", "1.2"]).status.code(), Some(2));
    assert_eq!(run(&["certify", k5, "--theorem", "1.1", "--q", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["certify", k5, "--theorem", "1.3a", "--q", "2"]).status.code(),
        Some(2)
    );
    // Bad files and bad data.
    assert_eq!(run(&["spectra", "/no/such/file.g6"]).status.code(), Some(2));
    assert_eq!(run_stdin(&["spectra", "-"], "D~").status.code(), Some(2));
    assert_eq!(run_stdin(&["spectra", "-"], "4 1\n0 9\n").status.code(), Some(2));
    // Disconnected input.
    assert_eq!(run_stdin(&["certify", "-", "--theorem", "1.1"], "4 2\n0 1\n2 3\n").status.code(), Some(2));
    // Oracle capacity.
    assert_eq!(
        run_stdin(&["toughness", "-", "--oracle-cap", "2"], "D~{").status.code(),
        Some(2)
    );
    // Bad tolerance and bad sweep range.
    assert_eq!(run_stdin(&["spectra", "-", "--band", "0"], "D~{").status.code(), Some(2));
    assert_eq!(
        run(&["sweep", "--theorem", "1.1", "--count", "4", "--n", "24..20"]).status.code(),
        Some(2)
    );
    // Clap-level: missing required flag.
    assert_eq!(run(&["extremal", "--s", "2"]).status.code(), Some(2));
    // Non-positive toughness target.
    assert_eq!(run_stdin(&["toughness", "-", "--t", "0"], "D~{").status.code(), Some(2));
}

#[test]
fn nonconvergence_exits_with_code_three() {
    // P_4 is not transmission regular, so the all-ones start vector is not
    // an eigenvector and the residual can never reach 1e-300.
    let out = run_stdin(&["spectra", "-", "--residual-tol", "1e-300"], "Ch");
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("convergence") || err.contains("converge"), "{err}");
}

#[test]
fn sweep_reports_are_deterministic_and_sound() {
    let args = [
        "sweep",
        "--theorem",
        "1.1",
        "--count",
        "12",
        "--n",
        "22..23",
        "--table",
    ];
    let a = run(&args);
    assert!(a.status.success(), "{a:?}");
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    // Worker count must not change the bytes.
    let c = bin().args(args).args(["--workers", "1"]).output().unwrap();
    assert_eq!(a.stdout, c.stdout);

    let text = stdout(&a);
    let doc_part = text.split("\n\n").next().unwrap();
    assert_docs_valid(&format!("{doc_part}\n"));
    assert_eq!(value_of(&text, "tau-prime-violations"), "0");
    assert_eq!(value_of(&text, "exception-mismatches"), "0");
    assert_eq!(value_of(&text, "seed"), "1729");
    // Table: header plus one row per instance.
    let table_part = text.split("\n\n").nth(1).unwrap();
    assert_eq!(table_part.lines().count(), 13);
    assert!(table_part.starts_with("index order kind verdict"));
    // A different seed changes the report.
    let d = bin().args(args).args(["--seed", "7"]).output().unwrap();
    assert_ne!(a.stdout, d.stdout);
}

#[test]
fn verify_lemmas_single_token_passes() {
    let out = run(&["verify-lemmas", "--lemma", "3.1"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert_docs_valid(&text);
    assert_eq!(value_of(&text, "id"), "3.1");
    assert_eq!(value_of(&text, "pass"), "true");
    assert_eq!(value_of(&text, "failures"), "0");
    // Unknown token is a usage error.
    assert_eq!(run(&["verify-lemmas", "--lemma", "9.9"]).status.code(), Some(2));
}

#[test]
fn verify_lemmas_full_run_emits_one_document_each() {
    let out = run(&["verify-lemmas"]);
    assert!(out.status.success(), "{out:?}");
    let text = stdout(&out);
    assert_docs_valid(&text);
    let docs = parse_documents(&text).unwrap();
    assert_eq!(docs.len(), 6);
    for (kind, entries) in &docs {
        assert_eq!(kind, "lemma-report");
        let pass = entries.iter().find(|(k, _)| k == "pass").unwrap();
        assert_eq!(pass.1, "true");
    }
    // Reruns are byte-identical.
    let again = run(&["verify-lemmas"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn extremal_emits_both_formats_consistently() {
    let g6 = stdout(&run(&["extremal", "--s", "1", "--parts", "4,1"]));
    let edges = stdout(&run(&["extremal", "--s", "1", "--parts", "4,1", "--emit", "edges"]));
    let from_g6 = toughcert_cli::io::parse_graph(&g6).unwrap();
    let from_edges = toughcert_cli::io::parse_graph(&edges).unwrap();
    assert_eq!(from_g6, from_edges);
    assert_eq!(from_g6.order(), 6);
    // Hub vertex 0 is universal.
    assert_eq!(from_g6.degree(0), 5);
    // Invalid family.
    assert_eq!(run(&["extremal", "--s", "0", "--parts", "3,0"]).status.code(), Some(2));
}

#[test]
fn compare_documents_match_the_library() {
    let out = run(&["compare", "--s", "2", "--parts", "9,3,3", "--p", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_docs_valid(&text);
    assert_eq!(value_of(&text, "reference-parts"), "11 2 2");
    assert_eq!(value_of(&text, "strict"), "true");
    assert_eq!(value_of(&text, "matches-reference"), "false");
    assert_eq!(value_of(&text, "premises-met"), "true");
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let direct = run_stdin(&["spectra", "-"], "D~{");
    let to_file = run_stdin(&["spectra", "-", "--out", path.to_str().unwrap()], "D~{");
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}
