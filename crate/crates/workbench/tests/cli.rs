use std::path::PathBuf;
use std::process::{Command, Output};

use koszul_core::Outcome;
use koszul_workbench::report::{parse_report, Report, Section};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn koszul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(args)
        .env_remove("KOSZUL_SEED")
        .output()
        .unwrap()
}

fn report_of(args: &[&str]) -> Report {
    let out = koszul(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    parse_report(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn hilbert_of_the_exceptional_algebra() {
    let r = report_of(&["hilbert", "--ideal", path(&data("exceptional.ideal")), "--trunc", "8"]);
    let coefficients = r
        .sections
        .iter()
        .find_map(|s| match s {
            Section::Hilbert { coefficients, .. } => Some(coefficients.join(",")),
            _ => None,
        })
        .unwrap();
    assert_eq!(coefficients, "1,3,2,1,1,1,1,1,1");
    assert_eq!(r.config.trunc, Some(8));
}

#[test]
fn basis_of_a_single_variable() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("one.ideal");
    std::fs::write(&file, "ring n=1 field=q vars=x\nx\n").unwrap();
    let r = report_of(&["gb", "--ideal", path(&file)]);
    let basis = r.sections.iter().find_map(|s| match s {
        Section::Basis { elements, .. } => Some(elements.clone()),
        _ => None,
    });
    assert_eq!(basis, Some(vec!["x".to_string()]));
}

#[test]
fn corpus_entry_caviglia() {
    let r = report_of(&["corpus-run", "--entry", "caviglia-ci", "--field", "q"]);
    assert!(r.checks_passed());
    let lift = r.verdicts.iter().find(|v| v.property == koszul_core::Property::LgQuadratic).unwrap();
    assert_eq!(lift.outcome, Outcome::CertifiedYes);
}

#[test]
fn corpus_reports_are_deterministic() {
    let a = report_of(&["corpus-run", "--entry", "four-points-p2"]);
    let b = report_of(&["corpus-run", "--entry", "four-points-p2"]);
    assert_eq!(a.untimed(), b.untimed());
}

#[test]
fn malformed_input_exits_one_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.ideal");
    std::fs::write(&file, "ring n=2 field=q\nx1^2\nx1*x3\n").unwrap();
    let out = koszul(&["gb", "--ideal", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3, column 4"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(koszul(&["gb"]).status.code(), Some(1));
    assert_eq!(koszul(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(koszul(&["corpus-run", "--entry", "nonexistent"]).status.code(), Some(1));
    assert_eq!(koszul(&["--help"]).status.code(), Some(0));
    assert_eq!(koszul(&["--version"]).status.code(), Some(0));
}

#[test]
fn negative_verdicts_still_exit_zero() {
    let r = report_of(&["koszul-probe", "--ideal", path(&data("cube.ideal")), "--imax", "4", "--dmax", "8", "--series"]);
    assert!(r.verdicts.iter().all(|v| v.outcome == Outcome::CertifiedNo));
    assert_eq!(r.verdicts.len(), 2);
}

#[test]
fn certificates_replay() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("flag.json");
    let found = report_of(&[
        "points", "--generic", "4", "--dim", "2", "--bound", "1", "--seed", "11",
    ]);
    assert_eq!(found.verdicts[0].outcome, Outcome::CertifiedYes);
    let ideal = dir.path().join("four.ideal");
    let generators = found
        .sections
        .iter()
        .find_map(|s| match s {
            Section::Ideal { generators, .. } => Some(generators.join("\n")),
            _ => None,
        })
        .unwrap();
    std::fs::write(&ideal, format!("ring n=3 field=q\n{generators}\n")).unwrap();
    let searched = report_of(&["flag-search", "--ideal", path(&ideal), "--save", path(&cert)]);
    assert_eq!(searched.verdicts[0].outcome, Outcome::CertifiedYes);
    let verified = report_of(&["flag-verify", "--certificate", path(&cert)]);
    assert_eq!(verified.verdicts[0].outcome, Outcome::CertifiedYes);

    let filt = dir.path().join("filtration.json");
    report_of(&["filtration-monomial", "--ideal", path(&data("no-flag.ideal")), "--save", path(&filt)]);
    let verified = report_of(&["filtration-verify", "--certificate", path(&filt)]);
    assert_eq!(verified.verdicts[0].outcome, Outcome::CertifiedYes);

    std::fs::write(&filt, "{\n  \"quotient\": 3\n}\n").unwrap();
    let out = koszul(&["filtration-verify", "--certificate", path(&filt)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
}

#[test]
fn exceptional_lift_from_files() {
    let r = report_of(&[
        "lg-verify",
        "--ideal",
        path(&data("exceptional.ideal")),
        "--lift",
        path(&data("exceptional-lift.ideal")),
        "--forms",
        "t",
        "--order",
        "revlex-perm:t,x,y,z",
    ]);
    assert_eq!(r.verdicts[0].outcome, Outcome::CertifiedYes);
}

#[test]
fn forms_and_toric_commands() {
    let r = report_of(&["theorem34", "--form", path(&data("fermat.form"))]);
    assert_eq!(r.verdicts[0].outcome, Outcome::CertifiedNo);
    let r = report_of(&["apolar", "--form", path(&data("veronese.form"))]);
    assert!(r.sections.iter().any(|s| matches!(s, Section::Apolar { h_vector, cone: false } if h_vector == &[1, 6, 6, 1])));
    let r = report_of(&["hessian", "--form", path(&data("fermat.form")), "--minors", "2"]);
    assert!(r.sections.iter().any(|s| matches!(s, Section::Text { label, value } if label == "codim" && value == "2")));
    let a = report_of(&["toric", "--monomials", path(&data("pv332.monomials"))]);
    let b = report_of(&["pinched-veronese", "--n", "3", "--d", "3", "--s", "2"]);
    assert_eq!(a.verdicts[0].outcome, Outcome::CertifiedYes);
    assert_eq!(b.verdicts[0].outcome, Outcome::CertifiedYes);
}

#[test]
fn json_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("r.json");
    let out = koszul(&["betti", "--ideal", path(&data("exceptional.ideal")), "--imax", "3", "--dmax", "4", "--json", path(&out_file)]);
    assert_eq!(out.status.code(), Some(0));
    let r = parse_report(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let entries = r.sections.iter().find_map(|s| match s {
        Section::Betti { entries, .. } => Some(entries.clone()),
        _ => None,
    });
    // The lift makes the algebra Koszul, so the table is 1/H(-z) on the diagonal.
    assert_eq!(entries, Some(vec![(0, 0, 1), (1, 1, 3), (2, 2, 7), (3, 3, 16)]));
}

#[test]
fn seed_comes_from_the_environment() {
    let run = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_koszul"))
            .args(["points", "--generic", "3", "--dim", "2"])
            .env("KOSZUL_SEED", seed)
            .output()
            .unwrap();
        parse_report(&String::from_utf8(out.stdout).unwrap()).unwrap()
    };
    assert_eq!(run("5").config.seed, Some(5));
}
