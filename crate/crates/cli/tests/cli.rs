use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use qsep_cli::matrix_file::MatrixFile;
use qsep_cli::report::ReportDocument;
use qsep_core::linalg::{ComplexMatrix, DensityMatrix};
use qsep_core::separability::Conclusion;
use qsep_core::states;
use serde_json::Value;
use tempfile::TempDir;

fn qsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qsep_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qsep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_state(dir: &TempDir, name: &str, rho: &DensityMatrix) -> String {
    write_matrix(dir, name, rho.matrix(), rho.n_qubits())
}

fn write_matrix(dir: &TempDir, name: &str, m: &ComplexMatrix, n: usize) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, MatrixFile::from_matrix(m, n).to_json()).unwrap();
    path_str(&path)
}

fn path_str(p: &Path) -> String {
    p.to_str().unwrap().to_owned()
}

fn machine_report(o: &Output) -> ReportDocument {
    serde_json::from_str(&stdout(o)).expect("machine report parses")
}

fn made(args: &[&str]) -> ComplexMatrix {
    let mut full = vec!["make-state"];
    full.extend_from_slice(args);
    let o = qsep(&full);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    MatrixFile::parse(&stdout(&o)).unwrap().to_matrix().unwrap()
}

#[test]
fn ghz_file_is_entangled_with_exit_2() {
    let dir = TempDir::new().unwrap();
    let f = write_state(&dir, "ghz.json", &states::ghz());
    let o = qsep(&["analyze", &f]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("culprit A,BC"), "{text}");
    assert!(text.contains("-5.000000000e-1"), "{text}");

    let o = qsep(&["analyze", &f, "--format", "machine"]);
    assert_eq!(o.status.code(), Some(2));
    let doc = machine_report(&o);
    assert_eq!(doc.schema, 1);
    assert_eq!(doc.conclusion, Conclusion::Entangled);
    assert_eq!(doc.reductions.len(), 6);
    assert!((doc.min_pt_eigenvalue + 0.5).abs() < 1e-9);
    assert_eq!(doc.input.sha256.len(), 64);
}

#[test]
fn upb_file_is_inconclusive_with_exit_0() {
    let dir = TempDir::new().unwrap();
    let f = write_state(&dir, "upb.json", &states::upb_state());
    let o = qsep(&["--format", "machine", "analyze", &f]);
    assert_eq!(o.status.code(), Some(0));
    let doc = machine_report(&o);
    assert_eq!(doc.conclusion, Conclusion::Inconclusive);
    assert!(doc.reductions.iter().all(|r| r.separable));
    assert_eq!(doc.culprit, None);
}

#[test]
fn machine_report_round_trips_exactly() {
    let dir = TempDir::new().unwrap();
    let f = write_state(&dir, "upb.json", &states::upb_state());
    let text = stdout(&qsep(&["analyze", &f, "--format", "machine"]));
    let doc: ReportDocument = serde_json::from_str(&text).unwrap();
    let again: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
    assert_eq!(doc, again);
    // numbers in the emitted text parse to the same bits as the struct
    let raw: Value = serde_json::from_str(&text).unwrap();
    for (row, parsed) in raw["reductions"]
        .as_array()
        .unwrap()
        .iter()
        .zip(&doc.reductions)
    {
        assert_eq!(
            row["min_pt_eigenvalue"].as_f64().unwrap(),
            parsed.min_pt_eigenvalue
        );
    }
}

#[test]
fn trace_point_nine_is_an_error_with_exit_1() {
    let dir = TempDir::new().unwrap();
    let m = states::upb_state().matrix().scale(0.9);
    let f = write_matrix(&dir, "short.json", &m, 3);
    let o = qsep(&["analyze", &f]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("trace differs from one by -1.0"), "{err}");

    let o = qsep(&["analyze", &f, "--no-validate"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("WARNING: density validation was skipped"));
}

#[test]
fn malformed_input_reports_location() {
    let o = qsep_stdin(&["analyze", "-"], "{\"n_qubits\": 3, \"re\": [[1, 0],");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
}

#[test]
fn two_qubit_input_is_rejected_by_analyze() {
    let o = qsep_stdin(
        &["analyze", "-"],
        &MatrixFile::from_matrix(states::bell().matrix(), 2).to_json(),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("3- or 4-qubit"));
}

#[test]
fn usage_errors_exit_1_not_2() {
    assert_eq!(qsep(&["bogus"]).status.code(), Some(1));
    assert_eq!(qsep(&["make-state", "werner"]).status.code(), Some(1));
    assert_eq!(qsep(&["--help"]).status.code(), Some(0));
}

#[test]
fn make_state_round_trips_every_family() {
    let bell = states::bell();
    let cases: Vec<(Vec<&str>, DensityMatrix)> = vec![
        (vec!["ghz"], states::ghz()),
        (vec!["ghz", "--qubits", "4"], states::ghz_n(4).unwrap()),
        (
            vec!["werner", "--x", "0.3"],
            states::werner_embedded(0.3).unwrap(),
        ),
        (
            vec!["embed", "--way", "2"],
            states::embed_bipartite(&bell, 2).unwrap(),
        ),
        (
            vec![
                "molecule", "--p-ab", "0.2", "--p-ac", "0.3", "--p-bc", "0.5",
            ],
            states::molecule_state(states::MoleculeParams::new(0.2, 0.3, 0.5).unwrap()).unwrap(),
        ),
        (vec!["upb"], states::upb_state()),
    ];
    for (args, expected) in cases {
        assert_eq!(&made(&args), expected.matrix(), "{args:?}");
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let prod = made(&["product", "--a", "1,1", "--b", "0,1", "--c", "1,0,0,1"]);
    let plus = [qsep_core::linalg::r(s), qsep_core::linalg::r(s)];
    let one = [qsep_core::linalg::r(0.0), qsep_core::linalg::r(1.0)];
    let plus_i = [qsep_core::linalg::r(s), qsep_core::linalg::c(0.0, s)];
    let expected = states::product_pure(plus, one, plus_i).unwrap();
    assert!(prod.max_abs_diff(expected.matrix()) < 1e-15);
}

#[test]
fn embed_reads_a_custom_r() {
    let dir = TempDir::new().unwrap();
    let r = states::werner_two_qubit(0.6).unwrap();
    let f = write_state(&dir, "r.json", &r);
    let m = made(&["embed", "--way", "5", "--r", &f]);
    assert_eq!(&m, states::embed_bipartite(&r, 5).unwrap().matrix());
    let g = write_state(&dir, "g.json", &states::ghz());
    assert_eq!(
        qsep(&["make-state", "embed", "--way", "5", "--r", &g])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn make_state_pipes_into_analyze() {
    let entangled = stdout(&qsep(&["make-state", "werner", "--x", "0.5"]));
    assert_eq!(
        qsep_stdin(&["analyze", "-"], &entangled).status.code(),
        Some(2)
    );
    let upb = stdout(&qsep(&["make-state", "upb"]));
    assert_eq!(qsep_stdin(&["analyze", "-"], &upb).status.code(), Some(0));
    let bad = qsep(&[
        "make-state",
        "molecule",
        "--p-ab",
        "0.5",
        "--p-ac",
        "0.5",
        "--p-bc",
        "0.5",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("sum to"));
}

#[test]
fn four_qubit_ghz_lists_25_reductions() {
    let g = stdout(&qsep(&["make-state", "ghz", "--qubits", "4"]));
    let o = qsep_stdin(&["analyze", "-", "--format", "machine"], &g);
    assert_eq!(o.status.code(), Some(2));
    let doc = machine_report(&o);
    assert_eq!(doc.reductions.len(), 25);
    assert_eq!(doc.reductions[24].label, "AD,BC");
}

#[test]
fn reduce_outputs() {
    let dir = TempDir::new().unwrap();
    let g = write_state(&dir, "ghz.json", &states::ghz());
    let get = |file: &str, label: &str| {
        let o = qsep(&["reduce", file, "--label", label]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let mf = MatrixFile::parse(&stdout(&o)).unwrap();
        assert_eq!(mf.n_qubits, 2);
        mf.to_matrix().unwrap()
    };
    assert_eq!(
        get(&g, "A,B"),
        ComplexMatrix::from_diagonal(&[0.5, 0.0, 0.0, 0.5])
    );
    assert!(get(&g, "a, bc").max_abs_diff(states::bell().matrix()) < 1e-15);
    let mm = write_state(&dir, "mm.json", &DensityMatrix::maximally_mixed(4));
    for label in ["A,B", "B,DA", "AC,BD"] {
        assert!(get(&mm, label).max_abs_diff(&ComplexMatrix::identity(4).scale(0.25)) < 1e-15);
    }
    let o = qsep(&["reduce", &g, "--label", "AB,CD"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("valid labels"), "{}", stderr(&o));
}

#[test]
fn werner_sweep_finds_one_third() {
    let o = qsep(&[
        "sweep", "werner", "--from", "0", "--to", "1", "--steps", "101", "--format", "machine",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 101);
    let th = doc["thresholds"].as_array().unwrap();
    assert_eq!(th.len(), 1);
    let est = th[0]["estimate"].as_f64().unwrap();
    assert!((est - 1.0 / 3.0).abs() < 1e-6, "{est}");

    let o = qsep(&["sweep", "werner", "--to", "0.3", "--steps", "31"]);
    let text = stdout(&o);
    assert!(text.contains("no threshold"), "{text}");
    assert!(!text.contains("ENTANGLED"));
}

#[test]
fn molecule_sweep_is_entangled_inside() {
    let o = qsep(&[
        "sweep", "molecule", "--from", "0.01", "--to", "0.99", "--steps", "50", "--format",
        "machine",
    ]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["conclusion"] == "ENTANGLED"));
    assert_eq!(
        qsep(&["sweep", "werner", "--from", "1", "--to", "0"])
            .status
            .code(),
        Some(1)
    );
}
