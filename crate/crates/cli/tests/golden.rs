//! End-to-end tests of the `quapoly` binary: golden outputs, exit codes,
//! artifact files, and JSON stability.

use std::fs;
use std::process::Command;

use quapoly::rational::{rat, rat_int};
use quapoly::{files, Algebra, AlgebraElement, FreePoly, Point, RadicalCertificate};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quapoly"))
        .args(args)
        .output()
        .expect("binary launches");
    (
        out.status.code().expect("binary exits normally"),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

fn q() -> Algebra {
    Algebra::quaternion()
}

fn qe(coords: [i64; 4]) -> AlgebraElement {
    AlgebraElement::new(coords.iter().map(|&c| rat_int(c)).collect())
}

/// The four coordinate functionals as parenthesized expression texts.
const Y1: &str = "(1/4*(x1 - i*x1*i - j*x1*j - k*x1*k))";
const Y2: &str = "(1/4*(j*x1*k - x1*i - i*x1 - k*x1*j))";
const Y3: &str = "(1/4*(k*x1*i - x1*j - j*x1 - i*x1*k))";
const Y4: &str = "(1/4*(i*x1*j - x1*k - k*x1 - j*x1*i))";

#[test]
fn normalize_prints_the_central_image() {
    let (code, out, err) = run(&["normalize", "x1*i - i*x1"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "-2*k*y1_3 + 2*j*y1_4\n", ""));
    // `phi` is the same map under its own name.
    let (code, out, _) = run(&["phi", "x1*i - i*x1"]);
    assert_eq!((code, out.as_str()), (0, "-2*k*y1_3 + 2*j*y1_4\n"));
}

#[test]
fn identity_answers_with_exit_codes() {
    // x₁ − (Y₁·1 + Y₂·i + Y₃·j + Y₄·k) recovers the variable from its
    // coordinates, so the difference is an identity.
    let text = format!("x1 - ({Y1} + {Y2}*i + {Y3}*j + {Y4}*k)");
    let (code, out, _) = run(&["identity", &text]);
    assert_eq!((code, out.as_str()), (0, "true\n"));

    let (code, out, _) = run(&["identity", "x1"]);
    assert_eq!((code, out.as_str()), (1, "false\n"));
}

#[test]
fn eval_uses_assignments() {
    let (code, out, _) = run(&["eval", "x1^2 + 1", "--at", "x1=i"]);
    assert_eq!((code, out.as_str()), (0, "0\n"));

    let (code, out, _) = run(&["eval", "x1*x2", "--at", "x1=i", "--at", "x2=j"]);
    assert_eq!((code, out.as_str()), (0, "k\n"));

    let (code, out, _) = run(&["eval", "x1", "--at", "x1=1/2 + 3*j", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("JSON output");
    assert_eq!(v, serde_json::json!(["1/2", "0", "3", "0"]));

    let (code, _, err) = run(&["eval", "x1*x2", "--at", "x1=i"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("MissingAssignment"), "stderr: {err}");

    let (code, _, err) = run(&["eval", "x1", "--at", "x1=i", "--at", "x1=j"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("DuplicateAssignment"), "stderr: {err}");
}

#[test]
fn conj_and_norm_of_constants() {
    let (code, out, _) = run(&["conj", "i"]);
    assert_eq!((code, out.as_str()), (0, "-i\n"));
    let (code, out, _) = run(&["norm", "i"]);
    assert_eq!((code, out.as_str()), (0, "1\n"));
    let (code, out, _) = run(&["norm", "1 + i"]);
    assert_eq!((code, out.as_str()), (0, "2\n"));
}

#[test]
fn psi_inverts_phi() {
    let (code, out, _) = run(&["psi", "y1_2"]);
    assert_eq!(code, 0);
    let free_text = out.trim().to_string();
    assert_eq!(free_text, "-1/4*x1*i - 1/4*i*x1 + 1/4*j*x1*k - 1/4*k*x1*j");
    let (code, out, _) = run(&["phi", &free_text]);
    assert_eq!((code, out.as_str()), (0, "y1_2\n"));

    let (code, out, _) = run(&["psi", "y1_1^2"]);
    assert_eq!(code, 0);
    let (code, out2, _) = run(&["phi", out.trim()]);
    assert_eq!((code, out2.as_str()), (0, "y1_1^2\n"));
}

#[test]
fn coord_table_golden() {
    let (code, out, _) = run(&["coord-table"]);
    assert_eq!(code, 0);
    let expected = "\
Y1 = 1/4*x1 - 1/4*i*x1*i - 1/4*j*x1*j - 1/4*k*x1*k
Y2 = -1/4*x1*i - 1/4*i*x1 + 1/4*j*x1*k - 1/4*k*x1*j
Y3 = -1/4*x1*j - 1/4*i*x1*k - 1/4*j*x1 + 1/4*k*x1*i
Y4 = -1/4*x1*k + 1/4*i*x1*j - 1/4*j*x1*i - 1/4*k*x1
";
    assert_eq!(out, expected);
}

#[test]
fn gpi_gens_counts_lines() {
    let (code, out, _) = run(&["gpi-gens", "-n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 19);

    let (code, _, err) = run(&["gpi-gens"]);
    assert_eq!(code, 2);
    assert!(err.contains("gpi-gens requires -n"), "stderr: {err}");
}

#[test]
fn parse_errors_name_themselves() {
    let (code, _, err) = run(&["normalize", "x1 +"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("SyntaxError"), "stderr: {err}");
    assert!(err.contains("offset 4"), "stderr: {err}");

    let (code, _, err) = run(&["normalize", "foo"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("UnknownSymbol"), "stderr: {err}");

    let (code, _, err) = run(&["normalize", "x2", "-n", "1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("VariableOutOfRange"), "stderr: {err}");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = run(&[]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["normalize"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn ideal_flow() {
    let dir = tempfile::tempdir().expect("tempdir");
    let ideal_path = dir.path().join("ideal.json");
    let ideal_str = ideal_path.to_str().unwrap();

    let (code, out, _) = run(&["ideal", "make", "-g", "x1 - i", "-o", ideal_str]);
    assert_eq!((code, out.as_str()), (0, "groebner basis size: 4\n"));

    // The artifact is byte-stable across rebuilds, and --json prints
    // exactly the file contents.
    let first = fs::read_to_string(&ideal_path).unwrap();
    let (code, out, _) = run(&["ideal", "make", "-g", "x1 - i", "-o", ideal_str, "--json"]);
    assert_eq!(code, 0);
    let second = fs::read_to_string(&ideal_path).unwrap();
    assert_eq!(first, second);
    assert_eq!(out, second);

    let (code, out, _) = run(&["member", "x1^2 + 1", "--ideal", ideal_str]);
    assert_eq!((code, out.as_str()), (0, "true\n"));
    let (code, out, _) = run(&["member", "x1", "--ideal", ideal_str]);
    assert_eq!((code, out.as_str()), (1, "false\n"));

    // An explicit variable count that disagrees with the artifact is a
    // domain error, not a silent reinterpretation.
    let (code, _, err) = run(&["member", "x1", "--ideal", ideal_str, "-n", "2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("AmbientMismatch"), "stderr: {err}");

    let (code, out, _) = run(&["vanish", "--ideal", ideal_str, "--at", "x1=i"]);
    assert_eq!((code, out.as_str()), (0, "true\n"));
    let (code, out, _) = run(&["vanish", "--ideal", ideal_str, "--at", "x1=j"]);
    assert_eq!((code, out.as_str()), (1, "false\n"));

    // scan keeps exactly the zero-locus points: for the ideal of x₁ − i
    // that is the single point i.
    let points_path = dir.path().join("points.json");
    let pts = vec![
        Point::new(q(), vec![qe([0, 1, 0, 0])]).unwrap(),
        Point::new(q(), vec![qe([0, 0, 1, 0])]).unwrap(),
        Point::new(
            q(),
            vec![AlgebraElement::new(vec![rat_int(0), rat(3, 5), rat(4, 5), rat_int(0)])],
        )
        .unwrap(),
    ];
    fs::write(&points_path, files::points_to_json(&pts)).unwrap();
    let (code, out, _) =
        run(&["scan", "--ideal", ideal_str, "--points", points_path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "(i)\n"));

    // Radical certificates: the generator itself certifies (m = 1).
    let cert_path = dir.path().join("cert.json");
    let x1 = FreePoly::variable(q(), 1, 0).unwrap();
    let gen = &x1 - &FreePoly::constant(q(), 1, &qe([0, 1, 0, 0]));
    let cert = RadicalCertificate { f: gen, m: 1, witnesses: vec![] };
    fs::write(&cert_path, files::radical_cert_to_json(&cert)).unwrap();
    let (code, out, _) = run(&[
        "radical-verify",
        "--ideal",
        ideal_str,
        "--cert",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (0, "true\n"));

    let bad = RadicalCertificate {
        f: &x1 - &FreePoly::constant(q(), 1, &qe([0, 0, 1, 0])),
        m: 1,
        witnesses: vec![],
    };
    fs::write(&cert_path, files::radical_cert_to_json(&bad)).unwrap();
    let (code, out, _) = run(&[
        "radical-verify",
        "--ideal",
        ideal_str,
        "--cert",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (1, "false\n"));

    // Tampering with the cached basis in the artifact is caught on load.
    let mut v: serde_json::Value = serde_json::from_str(&first).unwrap();
    v["groebner"][0]["terms"][0]["coef"] = serde_json::Value::String("7".into());
    fs::write(&ideal_path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let (code, _, err) = run(&["member", "x1", "--ideal", ideal_str]);
    assert_eq!(code, 1);
    assert!(err.starts_with("CacheMismatch"), "stderr: {err}");
}

#[test]
fn certificate_flow() {
    let dir = tempfile::tempdir().expect("tempdir");
    let cert_path = dir.path().join("cert.json");
    let cert_str = cert_path.to_str().unwrap();

    // Y₁Y₂ − Y₂Y₁ is a nonzero element of the kernel: commutativity of
    // coordinate functionals holds as functions, not syntactically.
    let commutator = format!("{Y1}*{Y2} - {Y2}*{Y1}");
    let (code, out, _) = run(&["gpi-cert", &commutator, "-o", cert_str]);
    assert_eq!(code, 0, "stdout: {out}");
    let steps: usize = out.trim().strip_prefix("steps: ").expect("step count").parse().unwrap();
    assert!(steps >= 1);

    let (code, out, _) = run(&["gpi-verify", cert_str]);
    assert_eq!((code, out.as_str()), (0, "true\n"));

    // Perturbing one cofactor breaks the telescoping sum.
    let text = fs::read_to_string(&cert_path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["steps"][0]["left"]["terms"][0]["coef"] = serde_json::Value::String("5".into());
    fs::write(&cert_path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let (code, out, _) = run(&["gpi-verify", cert_str]);
    assert_eq!((code, out.as_str()), (1, "false\n"));

    // A certificate with no steps cannot witness a nonzero target.
    let alg = q();
    let target = {
        let y1 = quapoly::coord_poly(&alg, 1, 0, 0).unwrap();
        let y2 = quapoly::coord_poly(&alg, 1, 0, 1).unwrap();
        &(&y1 * &y2) - &(&y2 * &y1)
    };
    let empty = quapoly::GpiCertificate { target, steps: vec![] };
    fs::write(&cert_path, files::gpi_cert_to_json(&empty)).unwrap();
    let (code, out, _) = run(&["gpi-verify", cert_str]);
    assert_eq!((code, out.as_str()), (1, "false\n"));

    // Asking for a certificate of a non-identity is a domain error.
    let (code, _, err) = run(&["gpi-cert", "x1*i - i*x1", "-o", cert_str]);
    assert_eq!(code, 1);
    assert!(err.starts_with("NotAnIdentity"), "stderr: {err}");
}

#[test]
fn algebra_files_feed_every_command() {
    let dir = tempfile::tempdir().expect("tempdir");
    let alg_path = dir.path().join("quaternions.json");
    fs::write(&alg_path, files::algebra_to_json(&q())).unwrap();
    let (code, out, _) = run(&["coord-table", "--algebra", alg_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, default_out, _) = run(&["coord-table"]);
    assert_eq!(out, default_out);

    // A one-dimensional table is rejected by the loader with the
    // library's own error name.
    let bad_path = dir.path().join("scalars.json");
    fs::write(&bad_path, "{\"m\": 1, \"labels\": [\"1\"], \"constants\": [[[\"1\"]]]}\n").unwrap();
    let (code, _, err) = run(&["coord-table", "--algebra", bad_path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.starts_with("DimensionOne"), "stderr: {err}");

    let (code, _, err) = run(&["coord-table", "--algebra", "/no/such/file.json"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("FileError"), "stderr: {err}");
}

#[test]
fn json_outputs_are_stable() {
    let (code, first, _) = run(&["phi", "x1*i - i*x1", "--json"]);
    assert_eq!(code, 0);
    let (_, second, _) = run(&["phi", "x1*i - i*x1", "--json"]);
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).expect("valid JSON");
    assert_eq!(v["nvars"], serde_json::json!(1));

    let (code, gens_json, _) = run(&["gpi-gens", "-n", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&gens_json).expect("valid JSON");
    assert_eq!(v.as_array().map(Vec::len), Some(19));
}
