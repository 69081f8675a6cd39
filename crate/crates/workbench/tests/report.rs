use koszul_core::certificates::{FlagRecord, QuotientRecord};
use koszul_core::{Bounds, Outcome, Property, Verdict, Witness};
use koszul_workbench::report::{emit_report, parse_report, Config, Report, Section, Timing, SCHEMA_VERSION};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = String> {
    "[a-z0-9*^+ /-]{0,12}"
}

fn words() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(word(), 0..4)
}

fn outcome() -> impl Strategy<Value = Outcome> {
    prop_oneof![
        Just(Outcome::CertifiedYes),
        Just(Outcome::CertifiedNo),
        Just(Outcome::UndeterminedAtBound),
    ]
}

fn property() -> impl Strategy<Value = Property> {
    prop_oneof![
        Just(Property::Quadratic),
        Just(Property::GQuadratic),
        Just(Property::LgQuadratic),
        Just(Property::Koszul),
        Just(Property::KoszulFiltration),
        Just(Property::GroebnerFlag),
        Just(Property::NoLowRankQuadric),
    ]
}

fn witness() -> impl Strategy<Value = Witness> {
    prop_oneof![
        Just(Witness::None),
        (0usize..9, 0usize..9, 0u64..500).prop_map(|(i, j, beta)| Witness::NonlinearBetti { i, j, beta }),
        (0usize..20, word()).prop_map(|(degree, coefficient)| Witness::NegativeSeriesCoefficient { degree, coefficient }),
        prop::collection::vec(0u64..1000, 0..6).prop_map(|ranks| Witness::LinearStrand { ranks }),
        (word(), prop::option::of(prop::collection::vec(words(), 0..3)), words())
            .prop_map(|(order, change, basis)| Witness::QuadraticGroebnerBasis { order, change, basis }),
        (0usize..5, 0usize..5).prop_map(|(codim, n)| Witness::Codimension { codim, n }),
        (prop::option::of(0usize..9), prop::option::of(word()), prop::option::of(0u32..4)).prop_map(
            |(min_rank_found, member, certified_degree)| Witness::QuadricMembers {
                min_rank_found,
                member,
                certified_degree,
            }
        ),
        (words(), words(), prop::collection::vec(0usize..4, 0..4)).prop_map(|(vars, forms, colon_map)| {
            Witness::Flag(FlagRecord {
                quotient: QuotientRecord {
                    field: "q".into(),
                    vars,
                    ideal: Vec::new(),
                },
                forms,
                colon_map,
            })
        }),
        (word(), word()).prop_map(|(y, z)| Witness::LinearFormPair { y, z }),
    ]
}

fn verdict() -> impl Strategy<Value = Verdict> {
    (
        property(),
        outcome(),
        witness(),
        prop::option::of(0usize..10),
        prop::option::of(any::<u64>()),
        words(),
    )
        .prop_map(|(p, o, w, trunc, seed, notes)| {
            let mut v = Verdict::new(p, o, w).with_bounds(Bounds {
                trunc,
                seed,
                ..Bounds::default()
            });
            v.notes = notes;
            v
        })
}

fn section() -> impl Strategy<Value = Section> {
    prop_oneof![
        (word(), word(), words(), words()).prop_map(|(label, field, vars, generators)| Section::Ideal {
            label,
            field,
            vars,
            generators
        }),
        (words(), words(), 0usize..5).prop_map(|(coefficients, numerator, dim)| Section::Hilbert {
            coefficients,
            numerator,
            dim
        }),
        (
            word(),
            0usize..6,
            0u32..10,
            prop::collection::vec((0usize..6, 0u32..10, 0u64..100), 0..6),
            prop::collection::vec(0u32..10, 0..3)
        )
            .prop_map(|(subject, i_max, d_max, entries, flagged)| Section::Betti {
                subject,
                i_max,
                d_max,
                entries,
                flagged
            }),
        (word(), word(), word(), outcome(), outcome(), any::<bool>()).prop_map(
            |(entry, label, tag, expected, observed, passed)| Section::Check {
                entry,
                label,
                tag,
                expected,
                observed,
                passed
            }
        ),
        (word(), words()).prop_map(|(format, forms)| Section::Certificate {
            format,
            record: serde_json::json!({ "forms": forms }),
        }),
        (word(), word()).prop_map(|(label, value)| Section::text(label, value)),
    ]
}

fn report() -> impl Strategy<Value = Report> {
    (
        word(),
        prop::option::of(word()),
        prop::option::of(0usize..20),
        prop::option::of(any::<u64>()),
        prop::collection::vec(verdict(), 0..4),
        prop::collection::vec(section(), 0..5),
        prop::collection::vec((word(), any::<u64>()), 0..3),
    )
        .prop_map(|(command, input, trunc, seed, verdicts, sections, timings)| Report {
            schema: SCHEMA_VERSION,
            command,
            config: Config {
                input,
                trunc,
                seed,
                ..Config::default()
            },
            verdicts,
            sections,
            timings: timings.into_iter().map(|(label, millis)| Timing { label, millis }).collect(),
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn reports_round_trip(r in report()) {
        let text = emit_report(&r);
        prop_assert_eq!(parse_report(&text).unwrap(), r.clone());
        prop_assert_eq!(emit_report(&parse_report(&text).unwrap()), text);
    }
}

#[test]
fn probe_report_of_truncated_cube() {
    use koszul_core::groebner::QuotientRing;
    use koszul_core::invariants::koszul_probe;
    use koszul_core::polyring::{Ideal, Ring};
    use koszul_core::scalars::Field;

    let r = Ring::new(1, Field::Rational).unwrap();
    let q = QuotientRing::new(&Ideal::parse(&r, &["x1^3"]).unwrap()).unwrap();
    let mut report = Report::default();
    report.verdicts.push(koszul_probe(&q, 4, 8).unwrap());
    let json: serde_json::Value = serde_json::from_str(&emit_report(&report)).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["verdicts"][0]["outcome"], "CertifiedNo");
    assert_eq!(json["verdicts"][0]["witness"]["i"], 2);
    assert_eq!(json["verdicts"][0]["witness"]["j"], 3);
    assert_eq!(json["verdicts"][0]["witness"]["beta"], 1);
}
