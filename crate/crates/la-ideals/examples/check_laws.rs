//! Builds a small table, confirms the left-invertive law and reports which
//! of the derived laws hold, plus left identities and regularity.
//!
//! Run with: cargo run --example check_laws

use la_ideals::CayleyTable;

fn main() {
    // (xy)z = (zy)x holds here, so this is an LA-semigroup; it is not
    // commutative and not associative.
    let t = CayleyTable::with_labels(
        &[
            vec![3, 2, 2, 2],
            vec![2, 2, 3, 3],
            vec![2, 2, 2, 2],
            vec![2, 2, 2, 2],
        ],
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
    )
    .expect("valid table");

    println!("order {} table:", t.order());
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(|&e| t.label(e).to_string()).collect();
        println!("  {}", line.join(" "));
    }

    let report = |name: &str, witness: Option<la_ideals::LawWitness>| match witness {
        None => println!("{name}: holds"),
        Some(w) => println!(
            "{name}: fails — {}",
            la_ideals::ViolationReport::Law(w).render(t.labels())
        ),
    };
    report("left-invertive (xy)z = (zy)x", t.check_left_invertive());
    report("medial (ab)(cd) = (ac)(bd)", t.check_medial());
    report("paramedial (ab)(cd) = (db)(ca)", t.check_paramedial());
    report("a(bc) = b(ac)", t.check_law4());

    let ids = t.find_left_identities();
    if ids.is_empty() {
        println!("left identities: none");
    } else {
        let labels: Vec<_> = ids.iter().map(|i| t.label(i).to_string()).collect();
        println!("left identities: {}", labels.join(","));
    }
    println!("regular: {}", t.is_regular());
    println!("intra-regular: {}", t.is_intra_regular());
}
