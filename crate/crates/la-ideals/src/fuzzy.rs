//! Exact-rational fuzzy subsets: lattice operations, the sup-min product,
//! fuzzy-point relations and level-set constructions.

use serde::{Deserialize, Serialize};

use crate::algebra::{CayleyTable, ElemSet};
use crate::rat::Rat;
use crate::Error;

/// Threshold pair with `0 <= gamma < delta <= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Rat, Rat)", into = "(Rat, Rat)")]
pub struct Thresholds {
    gamma: Rat,
    delta: Rat,
}

impl Thresholds {
    pub fn new(gamma: Rat, delta: Rat) -> Result<Self, Error> {
        if gamma >= Rat::zero() && gamma < delta && delta <= Rat::one() {
            Ok(Thresholds { gamma, delta })
        } else {
            Err(Error::BadThresholds { gamma, delta })
        }
    }

    /// `(0, 1)`: the classic fuzzy-ideal regime.
    pub fn classic() -> Self {
        Thresholds { gamma: Rat::zero(), delta: Rat::one() }
    }

    /// `(0, 1/2)`: the `(∈, ∈∨q)` regime.
    pub fn in_q() -> Self {
        Thresholds { gamma: Rat::zero(), delta: Rat::new(1, 2) }
    }

    pub fn gamma(&self) -> Rat {
        self.gamma
    }

    pub fn delta(&self) -> Rat {
        self.delta
    }

    /// `2*delta`, the quasi-coincidence bound.
    pub fn two_delta(&self) -> Rat {
        self.delta + self.delta
    }

    /// Whether `2*delta = 1 + gamma`, the precondition of the q-delta
    /// hypothesis and of level-theorem parts II and III.
    pub fn q_balanced(&self) -> bool {
        self.two_delta() == Rat::one() + self.gamma
    }
}

impl TryFrom<(Rat, Rat)> for Thresholds {
    type Error = Error;
    fn try_from((g, d): (Rat, Rat)) -> Result<Self, Error> {
        Thresholds::new(g, d)
    }
}

impl From<Thresholds> for (Rat, Rat) {
    fn from(t: Thresholds) -> (Rat, Rat) {
        (t.gamma, t.delta)
    }
}

/// Map element -> grade in [0,1].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuzzySubset {
    grades: Vec<Rat>,
}

impl FuzzySubset {
    pub fn new(grades: Vec<Rat>) -> Result<Self, Error> {
        if grades.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        for &g in &grades {
            if !g.is_grade() {
                return Err(Error::GradeOutOfRange(g));
            }
        }
        Ok(FuzzySubset { grades })
    }

    pub fn constant(n: usize, c: Rat) -> Result<Self, Error> {
        Self::new(vec![c; n])
    }

    /// The fuzzy subset mapping every element to 1.
    pub fn constant_one(n: usize) -> Self {
        FuzzySubset { grades: vec![Rat::one(); n] }
    }

    /// Characteristic function of `a`.
    pub fn characteristic(n: usize, a: ElemSet) -> Self {
        FuzzySubset {
            grades: (0..n)
                .map(|x| if a.contains(x) { Rat::one() } else { Rat::zero() })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn grade(&self, x: usize) -> Rat {
        self.grades[x]
    }

    pub fn grades(&self) -> &[Rat] {
        &self.grades
    }

    /// Distinct grades, sorted.
    pub fn image(&self) -> Vec<Rat> {
        let mut v = self.grades.clone();
        v.sort();
        v.dedup();
        v
    }

    /// True when every grade is 0 or 1.
    pub fn is_characteristic(&self) -> bool {
        self.grades.iter().all(|&g| g == Rat::zero() || g == Rat::one())
    }

    /// `{x : grade(x) = 1}`.
    pub fn support_of_one(&self) -> ElemSet {
        (0..self.len()).filter(|&x| self.grades[x] == Rat::one()).collect()
    }

    fn zip(&self, other: &Self, f: impl Fn(Rat, Rat) -> Rat) -> Result<Self, Error> {
        if self.len() != other.len() {
            return Err(Error::CarrierMismatch { expected: self.len(), got: other.len() });
        }
        Ok(FuzzySubset {
            grades: self
                .grades
                .iter()
                .zip(&other.grades)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Pointwise min.
    pub fn meet(&self, other: &Self) -> Result<Self, Error> {
        self.zip(other, Rat::min)
    }

    /// Pointwise max.
    pub fn join(&self, other: &Self) -> Result<Self, Error> {
        self.zip(other, Rat::max)
    }

    /// Pointwise min over a nonempty family.
    pub fn meet_all<'a>(family: impl IntoIterator<Item = &'a Self>) -> Result<Self, Error> {
        fold_family(family, Rat::min)
    }

    /// Pointwise max over a nonempty family.
    pub fn join_all<'a>(family: impl IntoIterator<Item = &'a Self>) -> Result<Self, Error> {
        fold_family(family, Rat::max)
    }

    /// The level cut of the given kind at `r`.
    pub fn level_cut(&self, th: Thresholds, r: Rat, kind: CutKind) -> ElemSet {
        (0..self.len())
            .filter(|&x| {
                let g = self.grades[x];
                match kind {
                    CutKind::InGammaCut => g >= r && r > th.gamma(),
                    CutKind::QDeltaCut => g + r > th.two_delta(),
                    CutKind::CombinedCut => (g >= r && r > th.gamma()) || g + r > th.two_delta(),
                    CutKind::UpperCut => g >= r,
                    CutKind::SupportGamma => g > th.gamma(),
                }
            })
            .collect()
    }

    /// `{a : mu(a) > gamma}`.
    pub fn support_gamma(&self, th: Thresholds) -> ElemSet {
        self.level_cut(th, Rat::zero(), CutKind::SupportGamma)
    }
}

fn fold_family<'a>(
    family: impl IntoIterator<Item = &'a FuzzySubset>,
    f: impl Fn(Rat, Rat) -> Rat,
) -> Result<FuzzySubset, Error> {
    let mut iter = family.into_iter();
    let first = iter.next().ok_or(Error::EmptyCarrier)?;
    let mut acc = first.clone();
    for next in iter {
        acc = acc.zip(next, &f)?;
    }
    Ok(acc)
}

/// Sup-min product: `(mu ∘ nu)(x) = max over x = y*z of min(mu(y), nu(z))`,
/// 0 when `x` has no factorization.
pub fn product(t: &CayleyTable, mu: &FuzzySubset, nu: &FuzzySubset) -> Result<FuzzySubset, Error> {
    let n = t.order();
    if mu.len() != n || nu.len() != n {
        return Err(Error::CarrierMismatch { expected: n, got: mu.len().max(nu.len()) });
    }
    let mut grades = vec![Rat::zero(); n];
    for y in 0..n {
        for z in 0..n {
            let x = t.mul(y, z);
            let v = mu.grade(y).min(nu.grade(z));
            if v > grades[x] {
                grades[x] = v;
            }
        }
    }
    Ok(FuzzySubset { grades })
}

/// A fuzzy point `x_t`: value `t` in (0,1] at `support`, 0 elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyPoint {
    pub support: usize,
    pub value: Rat,
}

impl FuzzyPoint {
    pub fn new(support: usize, value: Rat) -> Result<Self, Error> {
        if value > Rat::zero() && value <= Rat::one() {
            Ok(FuzzyPoint { support, value })
        } else {
            Err(Error::BadPointValue(value))
        }
    }
}

/// The generalized point-to-subset relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointRel {
    /// `x_t ∈_γ mu` iff `mu(x) >= t > gamma`.
    InGamma,
    /// `x_t q_δ mu` iff `mu(x) + t > 2*delta`.
    QDelta,
    /// Disjunction of the two.
    InOrQ,
}

/// Exact evaluation of the chosen relation.
pub fn rel(p: FuzzyPoint, mu: &FuzzySubset, th: Thresholds, which: PointRel) -> bool {
    let g = mu.grade(p.support);
    match which {
        PointRel::InGamma => g >= p.value && p.value > th.gamma(),
        PointRel::QDelta => g + p.value > th.two_delta(),
        PointRel::InOrQ => {
            rel(p, mu, th, PointRel::InGamma) || rel(p, mu, th, PointRel::QDelta)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    /// `mu_r^γ = {x : mu(x) >= r > gamma}`.
    InGammaCut,
    /// `mu_r^δ = {x : mu(x) + r > 2*delta}`.
    QDeltaCut,
    /// `[mu]_r^δ`, the union of the two cuts above.
    CombinedCut,
    /// `U(mu; r) = {x : mu(x) >= r}`.
    UpperCut,
    /// `mu_γ = {a : mu(a) > gamma}`; `r` is ignored.
    SupportGamma,
}

impl CutKind {
    pub const ALL: [CutKind; 5] = [
        CutKind::InGammaCut,
        CutKind::QDeltaCut,
        CutKind::CombinedCut,
        CutKind::UpperCut,
        CutKind::SupportGamma,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CutKind::InGammaCut => "in-gamma",
            CutKind::QDeltaCut => "q-delta",
            CutKind::CombinedCut => "combined",
            CutKind::UpperCut => "upper",
            CutKind::SupportGamma => "support-gamma",
        }
    }
}

impl std::str::FromStr for CutKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        CutKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown cut kind '{s}'")))
    }
}

/// Finite grid of thresholds at which any level cut of `mu` can change,
/// with midpoints so every open regime between two consecutive critical
/// values is sampled: `{gamma, delta, 1} ∪ image(mu) ∪ {2*delta - v}`
/// clipped to [0,1], plus midpoints of consecutive values.
pub fn critical_thresholds(mu: &FuzzySubset, th: Thresholds) -> Vec<Rat> {
    let mut vals = vec![th.gamma(), th.delta(), Rat::one()];
    for v in mu.image() {
        vals.push(v);
        vals.push((th.two_delta() - v).clamp01());
    }
    vals.sort();
    vals.dedup();
    let mut out = Vec::with_capacity(vals.len() * 2);
    for i in 0..vals.len() {
        out.push(vals[i]);
        if i + 1 < vals.len() {
            out.push(vals[i].midpoint(vals[i + 1]));
        }
    }
    out.sort();
    out.dedup();
    out
}
