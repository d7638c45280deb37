//! Checks a generalized fuzzy ideal two ways — closed-form threshold
//! inequalities and fuzzy-point implications — across several threshold
//! pairs, printing witnesses for failures.
//!
//! Run with: cargo run --example fuzzy_ideal_check

use la_ideals::gen::{check_pointwise, check_threshold, PointDefMode};
use la_ideals::io::parse_structure;
use la_ideals::{IdealKind, Thresholds, Verdict};

fn main() {
    let doc = parse_structure(include_bytes!("../fixtures/example_subsemigroup.json"))
        .expect("bundled fixture parses");
    let t = doc.to_table().expect("valid table");
    let mu = doc.fuzzy_subset("mu").expect("mu declared");
    let kind = IdealKind::Subsemigroup;

    for name in ["agreeing", "in-q", "classic"] {
        let th: Thresholds = doc.threshold(name).expect("threshold declared");
        println!("thresholds '{name}': gamma={} delta={}", th.gamma(), th.delta());

        let show = |label: &str, v: &Verdict| match v {
            Verdict::Holds => println!("  {label}: holds"),
            Verdict::Vacuous => println!("  {label}: holds vacuously"),
            Verdict::Fails { witness } => {
                println!("  {label}: FAILS — {}", witness.render(t.labels()))
            }
        };
        let by_threshold = check_threshold(&t, &mu, th, kind).unwrap();
        show("threshold inequality", &by_threshold);
        let by_points =
            check_pointwise(&t, &mu, th, kind, PointDefMode::InGammaHypothesis).unwrap();
        show("fuzzy-point implication", &by_points);
        assert_eq!(by_threshold.holds(), by_points.holds(), "the two routes always agree");
    }
}
