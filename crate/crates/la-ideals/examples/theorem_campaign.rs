//! Runs a small seeded theorem-verification campaign over every
//! LA-semigroup of orders 1..=3 and prints the per-theorem tallies.
//!
//! Run with: cargo run --example theorem_campaign

use la_ideals::theorems::{run_campaign, CampaignConfig};

fn main() {
    let cfg: CampaignConfig =
        serde_json::from_slice(include_bytes!("../fixtures/campaign_small.json"))
            .expect("bundled config parses");
    let report = run_campaign(&cfg).expect("campaign runs");

    println!("tables checked: {}", report.tables_checked);
    println!("{:<22} {:>6} {:>8} {:>6}", "theorem", "pass", "vacuous", "fail");
    for (id, s) in &report.stats {
        println!("{:<22} {:>6} {:>8} {:>6}", format!("{id:?}"), s.pass, s.vacuous, s.fail);
    }
    for e in &report.errata {
        println!("erratum note: {e}");
    }
    if !report.undersampled.is_empty() {
        println!("undersampled (fewer than 100 non-vacuous instances): {:?}", report.undersampled);
    }
    assert_eq!(report.total_failures(), 0, "counterexamples: {:#?}", report.counterexamples);
    println!("zero failures across {} theorem instances", report
        .stats
        .values()
        .map(|s| s.pass + s.vacuous + s.fail)
        .sum::<u64>());
}
