//! Decides crisp ideal membership for one subset and enumerates every
//! subset of each ideal class of a table.
//!
//! Run with: cargo run --example crisp_ideals

use la_ideals::crisp::{enumerate_crisp, is_crisp};
use la_ideals::{CayleyTable, ElemSet, IdealKind};

fn main() {
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

    // {3,4} is closed under the product, hence an LA-subsemigroup.
    let a: ElemSet = [2usize, 3].into_iter().collect();
    match is_crisp(&t, a, IdealKind::Subsemigroup).expect("nonempty subset") {
        None => println!("{{3,4}} is a crisp LA-subsemigroup"),
        Some(w) => println!("unexpected: {}", la_ideals::ViolationReport::Crisp(w).render(t.labels())),
    }

    for kind in IdealKind::ALL {
        let members = enumerate_crisp(&t, kind).expect("small order");
        let rendered: Vec<String> = members
            .iter()
            .map(|s| {
                let labels: Vec<_> = s.iter().map(|i| t.label(i).to_string()).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect();
        println!("{:<15} {}", kind.name(), rendered.join(" "));
    }
}
