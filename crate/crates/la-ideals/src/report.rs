//! Structured witnesses of failed laws, inclusions, inequalities and
//! theorems. Every witness carries enough data to re-check the failure
//! independently of the search that found it.

use serde::{Deserialize, Serialize};

use crate::algebra::LawWitness;
use crate::crisp::IdealKind;
use crate::rat::Rat;

/// Which defining condition of an ideal kind failed. `Sandwich` is the
/// `(as)b` product with hypotheses on `a` and `b`; `InteriorSandwich` is
/// `(ac)b` with the hypothesis on `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Product,
    LeftAction,
    RightAction,
    Sandwich,
    InteriorSandwich,
    QuasiInequality,
}

/// A crisp inclusion failure: the listed elements produce `product`, which
/// escapes the subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrispWitness {
    pub kind: IdealKind,
    pub elements: Vec<usize>,
    pub product: usize,
}

/// A failed closed-form threshold inequality, e.g.
/// `mu(ab) ∨ gamma >= mu(a) ∧ mu(b) ∧ delta`. `level_lo`/`level_hi` bound the
/// open-below interval of fuzzy-point values witnessing the same failure;
/// `level_hi` is attained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityWitness {
    pub kind: IdealKind,
    pub condition: Condition,
    pub elements: Vec<usize>,
    pub product: usize,
    pub lhs: Rat,
    pub rhs: Rat,
    pub level_lo: Rat,
    pub level_hi: Rat,
}

/// A failed fuzzy-point implication: every value in `(level_lo, level_hi]`
/// satisfies the hypothesis relation on `elements` yet the conclusion point
/// on `product` fails `∈_γ ∨ q_δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointWitness {
    pub kind: IdealKind,
    pub condition: Condition,
    pub elements: Vec<usize>,
    pub product: usize,
    pub level_lo: Rat,
    pub level_hi: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ViolationReport {
    Law(LawWitness),
    Crisp(CrispWitness),
    Inequality(InequalityWitness),
    Point(PointWitness),
    /// A level-set theorem failed: the fuzzy verdict and the family of level
    /// cuts disagree at `r`.
    LevelCut {
        kind: IdealKind,
        part: String,
        fuzzy_holds: bool,
        r: Option<Rat>,
        cut: Option<Vec<usize>>,
        inner: Option<Box<ViolationReport>>,
    },
    /// Two checkers that must agree disagreed, or a theorem's conclusion
    /// failed while its hypothesis held.
    Mismatch {
        description: String,
        inner: Option<Box<ViolationReport>>,
    },
}

impl ViolationReport {
    /// One-line rendering with element indices translated to labels.
    pub fn render(&self, labels: &[String]) -> String {
        let lab = |i: usize| labels.get(i).cloned().unwrap_or_else(|| i.to_string());
        let labs = |es: &[usize]| es.iter().map(|&i| lab(i)).collect::<Vec<_>>().join(",");
        let frac = |r: &Rat| format!("{} (={})", r, r.decimal_annotation());
        match self {
            ViolationReport::Law(w) => format!(
                "law {:?} violated at ({}): lhs={} rhs={}",
                w.law,
                labs(&w.elements),
                lab(w.lhs),
                lab(w.rhs)
            ),
            ViolationReport::Crisp(w) => format!(
                "{} inclusion violated: elements ({}) produce {} outside the subset",
                w.kind.name(),
                labs(&w.elements),
                lab(w.product)
            ),
            ViolationReport::Inequality(w) => format!(
                "{} threshold inequality ({:?}) fails at ({}): mu({})∨γ = {} < {} ; failing levels ({}, {}]",
                w.kind.name(),
                w.condition,
                labs(&w.elements),
                lab(w.product),
                frac(&w.lhs),
                frac(&w.rhs),
                w.level_lo,
                w.level_hi,
            ),
            ViolationReport::Point(w) => format!(
                "{} point implication ({:?}) fails at ({}) with product {}: levels ({}, {}] violate",
                w.kind.name(),
                w.condition,
                labs(&w.elements),
                lab(w.product),
                w.level_lo,
                frac(&w.level_hi),
            ),
            ViolationReport::LevelCut { kind, part, fuzzy_holds, r, cut, .. } => format!(
                "level theorem part {part} for {} fails: fuzzy verdict {} but cut {:?} at r={:?} disagrees",
                kind.name(),
                if *fuzzy_holds { "holds" } else { "fails" },
                cut.as_ref().map(|c| c.iter().map(|&i| lab(i)).collect::<Vec<_>>()),
                r.map(|r| r.to_string()),
            ),
            ViolationReport::Mismatch { description, .. } => description.clone(),
        }
    }
}
