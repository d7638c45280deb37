//! Crisp ideal classes of a finite LA-semigroup: deciding membership of a
//! subset in each class and enumerating all subsets of a class.

use serde::{Deserialize, Serialize};

use crate::algebra::{CayleyTable, ElemSet};
use crate::report::CrispWitness;
use crate::Error;

/// Every ideal class decided by this crate. The generalized fuzzy predicates
/// in [`crate::gen`] name exactly these kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Subsemigroup,
    Left,
    Right,
    TwoSided,
    Bi,
    GeneralizedBi,
    Quasi,
    Interior,
}

impl IdealKind {
    pub const ALL: [IdealKind; 8] = [
        IdealKind::Subsemigroup,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Bi,
        IdealKind::GeneralizedBi,
        IdealKind::Quasi,
        IdealKind::Interior,
    ];

    /// All kinds with a fuzzy-point definition (everything except quasi).
    pub const NON_QUASI: [IdealKind; 7] = [
        IdealKind::Subsemigroup,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Bi,
        IdealKind::GeneralizedBi,
        IdealKind::Interior,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdealKind::Subsemigroup => "subsemigroup",
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
            IdealKind::Bi => "bi",
            IdealKind::GeneralizedBi => "generalized-bi",
            IdealKind::Quasi => "quasi",
            IdealKind::Interior => "interior",
        }
    }
}

impl std::str::FromStr for IdealKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown ideal kind '{s}'")))
    }
}

/// Decides whether nonempty `a` belongs to the crisp class `kind`:
/// subsemigroup `A^2 ⊆ A`; left `SA ⊆ A`; right `AS ⊆ A`; two-sided both;
/// generalized bi `(AS)A ⊆ A`; bi additionally a subsemigroup; quasi
/// `AS ∩ SA ⊆ A`; interior a subsemigroup with `(SA)S ⊆ A`.
///
/// `None` means membership; otherwise the lexicographically first witness.
pub fn is_crisp(t: &CayleyTable, a: ElemSet, kind: IdealKind) -> Result<Option<CrispWitness>, Error> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !a.is_subset_of(ElemSet::full(t.order())) {
        return Err(Error::EntryOutOfRange { entry: a.to_vec().pop().unwrap(), order: t.order() });
    }
    Ok(violation(t, a, kind))
}

fn witness(kind: IdealKind, elements: Vec<usize>, product: usize) -> CrispWitness {
    CrispWitness { kind, elements, product }
}

fn violation(t: &CayleyTable, a: ElemSet, kind: IdealKind) -> Option<CrispWitness> {
    let n = t.order();
    match kind {
        IdealKind::Subsemigroup => {
            for x in a.iter() {
                for y in a.iter() {
                    let p = t.mul(x, y);
                    if !a.contains(p) {
                        return Some(witness(kind, vec![x, y], p));
                    }
                }
            }
            None
        }
        IdealKind::Left => {
            for s in 0..n {
                for x in a.iter() {
                    let p = t.mul(s, x);
                    if !a.contains(p) {
                        return Some(witness(kind, vec![s, x], p));
                    }
                }
            }
            None
        }
        IdealKind::Right => {
            for x in a.iter() {
                for s in 0..n {
                    let p = t.mul(x, s);
                    if !a.contains(p) {
                        return Some(witness(kind, vec![x, s], p));
                    }
                }
            }
            None
        }
        IdealKind::TwoSided => violation(t, a, IdealKind::Left)
            .or_else(|| violation(t, a, IdealKind::Right)),
        IdealKind::GeneralizedBi => {
            for x in a.iter() {
                for s in 0..n {
                    for y in a.iter() {
                        let p = t.mul(t.mul(x, s), y);
                        if !a.contains(p) {
                            return Some(witness(kind, vec![x, s, y], p));
                        }
                    }
                }
            }
            None
        }
        IdealKind::Bi => violation(t, a, IdealKind::Subsemigroup)
            .or_else(|| violation(t, a, IdealKind::GeneralizedBi)),
        IdealKind::Quasi => {
            let s = ElemSet::full(n);
            let inter = t.subset_product(a, s).intersection(t.subset_product(s, a));
            for x in inter.iter() {
                if !a.contains(x) {
                    return Some(witness(kind, vec![x], x));
                }
            }
            None
        }
        IdealKind::Interior => violation(t, a, IdealKind::Subsemigroup).or_else(|| {
            for s in 0..n {
                for x in a.iter() {
                    for u in 0..n {
                        let p = t.mul(t.mul(s, x), u);
                        if !a.contains(p) {
                            return Some(witness(kind, vec![s, x, u], p));
                        }
                    }
                }
            }
            None
        }),
    }
}

pub const MAX_CRISP_ENUM_ORDER: usize = 12;

/// All nonempty subsets of class `kind`, in increasing bitmask order.
pub fn enumerate_crisp(t: &CayleyTable, kind: IdealKind) -> Result<Vec<ElemSet>, Error> {
    let n = t.order();
    if n > MAX_CRISP_ENUM_ORDER {
        return Err(Error::SizeOutOfRange { got: n, min: 1, max: MAX_CRISP_ENUM_ORDER });
    }
    let mut out = Vec::new();
    for bits in 1..(1u32 << n) {
        let a = ElemSet(bits as u16);
        if violation(t, a, kind).is_none() {
            out.push(a);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_la_semigroups, EnumerationMode};

    fn example1() -> CayleyTable {
        CayleyTable::new(&[
            vec![3, 2, 2, 2],
            vec![2, 2, 3, 3],
            vec![2, 2, 2, 2],
            vec![2, 2, 2, 2],
        ])
        .unwrap()
    }

    fn example2() -> CayleyTable {
        CayleyTable::new(&[
            vec![1, 3, 2, 1],
            vec![3, 3, 3, 3],
            vec![3, 3, 3, 3],
            vec![3, 3, 3, 3],
        ])
        .unwrap()
    }

    #[test]
    fn example1_34_is_subsemigroup() {
        // {3,4} in 1-based labels = indices {2,3}; all 4 products land inside.
        let a: ElemSet = [2usize, 3].into_iter().collect();
        assert_eq!(is_crisp(&example1(), a, IdealKind::Subsemigroup).unwrap(), None);
    }

    #[test]
    fn whole_carrier_is_everything() {
        for t in [example1(), example2()] {
            for kind in IdealKind::ALL {
                assert_eq!(is_crisp(&t, ElemSet::full(4), kind).unwrap(), None);
            }
        }
    }

    #[test]
    fn example2_34_left_matches_subset_product() {
        let t = example2();
        let a: ElemSet = [2usize, 3].into_iter().collect();
        let closed = t.subset_product(ElemSet::full(4), a).is_subset_of(a);
        assert_eq!(is_crisp(&t, a, IdealKind::Left).unwrap().is_none(), closed);
        // S*{3,4} escapes {3,4}: 1*3 = 2 here, so the subset is not left.
        assert!(!closed);
    }

    #[test]
    fn empty_subset_rejected() {
        assert!(matches!(
            is_crisp(&example1(), ElemSet::empty(), IdealKind::Left),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn enumerate_is_filter_of_is_crisp() {
        let t = example1();
        for kind in IdealKind::ALL {
            let listed = enumerate_crisp(&t, kind).unwrap();
            for bits in 1..16u16 {
                let a = ElemSet(bits);
                let member = is_crisp(&t, a, kind).unwrap().is_none();
                assert_eq!(listed.contains(&a), member);
            }
        }
    }

    #[test]
    fn one_element_table() {
        let t = CayleyTable::new(&[vec![0]]).unwrap();
        for kind in IdealKind::ALL {
            assert_eq!(enumerate_crisp(&t, kind).unwrap(), vec![ElemSet::full(1)]);
        }
    }

    #[test]
    fn implication_chain_on_small_corpus() {
        // two-sided => left, right; left => quasi; right => quasi;
        // bi => generalized bi. Exhaustive over orders <= 3.
        for n in 1..=3 {
            for t in enumerate_la_semigroups(n, EnumerationMode::All).unwrap() {
                for bits in 1..(1u16 << n) {
                    let a = ElemSet(bits);
                    let holds = |k| is_crisp(&t, a, k).unwrap().is_none();
                    if holds(IdealKind::TwoSided) {
                        assert!(holds(IdealKind::Left) && holds(IdealKind::Right));
                    }
                    if holds(IdealKind::Left) || holds(IdealKind::Right) {
                        assert!(holds(IdealKind::Quasi));
                    }
                    if holds(IdealKind::Bi) {
                        assert!(holds(IdealKind::GeneralizedBi));
                    }
                }
            }
        }
    }
}
