//! Randomized property tests: algebraic laws of the rational and fuzzy
//! lattice layers, agreement of the two fuzzy-ideal decision routes, and
//! file-format round-trips.

use proptest::prelude::*;

use la_ideals::algebra::enumerate_la_semigroups;
use la_ideals::fuzzy::{critical_thresholds, product, CutKind, FuzzySubset, Thresholds};
use la_ideals::gen::{check_pointwise, check_threshold, PointDefMode};
use la_ideals::io::{emit_structure, parse_structure, StructureFile};
use la_ideals::{CayleyTable, EnumerationMode, IdealKind, Rat};

fn grade() -> impl Strategy<Value = Rat> {
    (0i64..=20).prop_map(|k| Rat::new(k, 20))
}

fn grades(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(grade(), n)
}

fn thresholds() -> impl Strategy<Value = Thresholds> {
    (0i64..20, 1i64..=20)
        .prop_filter_map("gamma < delta", |(g, d)| Thresholds::new(Rat::new(g, 20), Rat::new(d, 20)).ok())
}

fn example_tables() -> Vec<CayleyTable> {
    vec![
        CayleyTable::new(&[
            vec![3, 2, 2, 2],
            vec![2, 2, 3, 3],
            vec![2, 2, 2, 2],
            vec![2, 2, 2, 2],
        ])
        .unwrap(),
        CayleyTable::new(&[
            vec![1, 3, 2, 1],
            vec![3, 3, 3, 3],
            vec![3, 3, 3, 3],
            vec![3, 3, 3, 3],
        ])
        .unwrap(),
    ]
}

proptest! {
    #[test]
    fn rat_parse_display_round_trip(p in -200i64..=200, q in 1i64..=40) {
        let r = Rat::new(p, q);
        prop_assert_eq!(r.to_string().parse::<Rat>().unwrap(), r);
    }

    #[test]
    fn rat_min_max_lattice(a in grade(), b in grade(), c in grade()) {
        prop_assert_eq!(a.min(b), b.min(a));
        prop_assert_eq!(a.max(b), b.max(a));
        prop_assert_eq!(a.min(b.min(c)), a.min(b).min(c));
        prop_assert_eq!(a.max(a.min(b)), a);
        prop_assert_eq!(a.min(a.max(b)), a);
    }

    #[test]
    fn fuzzy_lattice_laws(g1 in grades(4), g2 in grades(4), g3 in grades(4)) {
        let a = FuzzySubset::new(g1).unwrap();
        let b = FuzzySubset::new(g2).unwrap();
        let c = FuzzySubset::new(g3).unwrap();
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
        prop_assert_eq!(
            a.meet(&b.meet(&c).unwrap()).unwrap(),
            a.meet(&b).unwrap().meet(&c).unwrap()
        );
        prop_assert_eq!(a.join(&a.meet(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(FuzzySubset::meet_all([&a, &b, &c]).unwrap(),
            a.meet(&b).unwrap().meet(&c).unwrap());
    }

    #[test]
    fn product_monotone_in_both_arguments(g1 in grades(4), g2 in grades(4), g3 in grades(4)) {
        // mu <= mu' pointwise implies mu∘nu <= mu'∘nu pointwise.
        for t in example_tables() {
            let mu = FuzzySubset::new(g1.clone()).unwrap();
            let nu = FuzzySubset::new(g2.clone()).unwrap();
            let bigger = mu.join(&FuzzySubset::new(g3.clone()).unwrap()).unwrap();
            let small = product(&t, &mu, &nu).unwrap();
            let large = product(&t, &bigger, &nu).unwrap();
            for x in 0..4 {
                prop_assert!(small.grade(x) <= large.grade(x));
            }
        }
    }

    #[test]
    fn cuts_piecewise_constant(g in grades(4), th in thresholds()) {
        let mu = FuzzySubset::new(g).unwrap();
        let grid = critical_thresholds(&mu, th);
        for w in grid.windows(2) {
            let mid = w[0].midpoint(w[1]);
            if grid.contains(&mid) { continue; }
            for kind in CutKind::ALL {
                prop_assert_eq!(mu.level_cut(th, mid, kind), mu.level_cut(th, w[1], kind));
            }
        }
    }

    #[test]
    fn threshold_and_pointwise_agree(g in grades(4), th in thresholds()) {
        let mu = FuzzySubset::new(g).unwrap();
        for t in example_tables() {
            for kind in IdealKind::NON_QUASI {
                let a = check_threshold(&t, &mu, th, kind).unwrap().holds();
                let b = check_pointwise(&t, &mu, th, kind, PointDefMode::InGammaHypothesis)
                    .unwrap()
                    .holds();
                prop_assert_eq!(a, b, "kind {:?} at {:?}", kind, th);
            }
        }
    }

    #[test]
    fn structure_round_trip(
        n in 1usize..=4,
        seed_cells in prop::collection::vec(0usize..4, 16),
        g in grades(4),
        th in thresholds(),
    ) {
        // Any square label matrix is a valid document; it need not satisfy
        // the left-invertive law to be parsed.
        let elements: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let table: Vec<Vec<String>> = (0..n)
            .map(|i| (0..n).map(|j| elements[seed_cells[i * 4 + j] % n].clone()).collect())
            .collect();
        let doc = StructureFile {
            name: "generated".into(),
            elements: elements.clone(),
            table,
            fuzzy_subsets: [(
                "mu".to_string(),
                elements.iter().map(|l| (l.clone(), g[0].to_string())).collect(),
            )]
            .into_iter()
            .collect(),
            thresholds: [(
                "th".to_string(),
                (th.gamma().to_string(), th.delta().to_string()),
            )]
            .into_iter()
            .collect(),
        };
        let parsed = parse_structure(emit_structure(&doc).as_bytes()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.threshold("th").unwrap(), th);
    }
}

#[test]
fn canonical_representatives_are_canonical() {
    for n in 1..=3 {
        for t in enumerate_la_semigroups(n, EnumerationMode::UpToIso).unwrap() {
            assert!(t.is_canonical());
        }
    }
}
