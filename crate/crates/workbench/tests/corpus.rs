use koszul_core::scalars::Field;
use koszul_core::Outcome;
use koszul_workbench::corpus::{corpus, corpus_run, find, Tag};
use koszul_workbench::report::{Config, Section};

#[test]
fn default_corpus_is_green() {
    let report = corpus_run(None, Field::Rational, false, Config::default()).unwrap();
    let failed: Vec<String> = report
        .sections
        .iter()
        .filter_map(|s| match s {
            Section::Check { entry, label, passed: false, observed, .. } => Some(format!("{entry} {label}: {observed:?}")),
            _ => None,
        })
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
    let entries: Vec<&str> = report
        .sections
        .iter()
        .filter_map(|s| match s {
            Section::Check { entry, .. } => Some(entry.as_str()),
            _ => None,
        })
        .collect();
    assert!(entries.windows(2).all(|w| w[0] <= w[1]), "aggregation is ordered by entry name");
    assert!(find("pinched-veronese-4-5-2").unwrap().long_running);
    assert!(!entries.contains(&"pinched-veronese-4-5-2"));
}

#[test]
fn tags_match_their_outcomes() {
    for entry in corpus() {
        assert!(!entry.expectations.is_empty(), "{}", entry.name);
        for e in &entry.expectations {
            match e.tag {
                Tag::Probe => assert_ne!(e.outcome, Outcome::CertifiedYes, "{} {}", entry.name, e.check.label()),
                Tag::ExpectedFailure => assert_eq!(e.outcome, Outcome::UndeterminedAtBound),
                Tag::Certified => assert_ne!(e.outcome, Outcome::UndeterminedAtBound),
            }
        }
    }
}

#[test]
fn corpus_runs_over_a_prime_field() {
    let report = corpus_run(Some("exceptional-plus"), Field::prime(32003).unwrap(), false, Config::default()).unwrap();
    assert!(report.checks_passed());
}

#[test]
#[ignore = "long-running"]
fn pinched_veronese_4_5_2_is_not_quadratic() {
    let report = corpus_run(Some("pinched-veronese-4-5-2"), Field::Rational, true, Config::default()).unwrap();
    assert!(report.checks_passed());
}
