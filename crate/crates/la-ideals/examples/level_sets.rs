//! Prints the level cuts of a fuzzy subset on the finite critical grid and
//! verifies the four-part level-set characterization against the fuzzy
//! verdict.
//!
//! Run with: cargo run --example level_sets

use la_ideals::fuzzy::critical_thresholds;
use la_ideals::io::parse_structure;
use la_ideals::theorems::{verify_level_theorem, LevelPart};
use la_ideals::{CutKind, IdealKind};

fn main() {
    let doc = parse_structure(include_bytes!("../fixtures/example_left_ideal.json"))
        .expect("bundled fixture parses");
    let t = doc.to_table().expect("valid table");
    let mu = doc.fuzzy_subset("mu").expect("mu declared");
    let th = doc.threshold("agreeing").expect("threshold declared");

    println!("critical levels and cuts (gamma={} delta={}):", th.gamma(), th.delta());
    for r in critical_thresholds(&mu, th) {
        let row: Vec<String> = CutKind::ALL
            .iter()
            .map(|&kind| {
                let cut = mu.level_cut(th, r, kind);
                let labels: Vec<_> = cut.iter().map(|i| t.label(i).to_string()).collect();
                format!("{}={{{}}}", kind.name(), labels.join(","))
            })
            .collect();
        println!("  r={:<5} {}", r.to_string(), row.join("  "));
    }

    // Parts II and III presuppose 2*delta = 1 + gamma; the bundled pair does
    // not satisfy it, so only parts I and IV apply here.
    for part in [LevelPart::I, LevelPart::IV] {
        let v = verify_level_theorem(&t, &mu, th, IdealKind::Left, part).unwrap();
        println!("level theorem part {} for left ideals: {:?}", part.name(), v);
    }
}
