//! Enumerates every LA-semigroup of orders 1..=3, both with all labelings
//! and up to isomorphism, and prints the order-2 tables in full.
//!
//! Run with: cargo run --example enumerate_order3

use la_ideals::algebra::enumerate_la_semigroups;
use la_ideals::EnumerationMode;

fn main() {
    for n in 1..=3usize {
        let all = enumerate_la_semigroups(n, EnumerationMode::All).unwrap().count();
        let iso = enumerate_la_semigroups(n, EnumerationMode::UpToIso).unwrap().count();
        println!("order {n}: {all} tables, {iso} up to isomorphism");
    }

    println!("\nall order-2 tables (rows separated by ';'):");
    for t in enumerate_la_semigroups(2, EnumerationMode::All).unwrap() {
        let rows: Vec<String> = t
            .rows()
            .iter()
            .map(|row| row.iter().map(|&e| (e + 1).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        println!("  {}", rows.join("; "));
    }
}
