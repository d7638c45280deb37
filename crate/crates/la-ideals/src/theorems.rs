//! Empirical verification of the level-set, construction, closure and
//! implication theorems over enumerated and randomized finite LA-semigroups.
//!
//! Each theorem has one verifier returning a [`Verdict`] for a single
//! instance; [`run_campaign`] sweeps every verifier across a seeded corpus
//! and assembles a reproducible [`CampaignReport`].

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{enumerate_la_semigroups, CayleyTable, EnumerationMode, MAX_ENUM_ORDER};
use crate::crisp::{enumerate_crisp, is_crisp, IdealKind};
use crate::fuzzy::{critical_thresholds, CutKind, FuzzySubset, Thresholds};
use crate::gen::{check_pointwise, check_threshold, make_step_subset, PointDefMode, Verdict};
use crate::rat::Rat;
use crate::report::ViolationReport;
use crate::{ElemSet, Error};

/// The four parts of the level-set characterization, each pairing a cut kind
/// with the range of levels it quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LevelPart {
    I,
    II,
    III,
    IV,
}

impl LevelPart {
    pub const ALL: [LevelPart; 4] = [LevelPart::I, LevelPart::II, LevelPart::III, LevelPart::IV];

    pub fn name(&self) -> &'static str {
        match self {
            LevelPart::I => "I",
            LevelPart::II => "II",
            LevelPart::III => "III",
            LevelPart::IV => "IV",
        }
    }

    pub fn cut_kind(&self) -> CutKind {
        match self {
            LevelPart::I => CutKind::InGammaCut,
            LevelPart::II => CutKind::QDeltaCut,
            LevelPart::III => CutKind::CombinedCut,
            LevelPart::IV => CutKind::UpperCut,
        }
    }

    /// Whether the part presupposes `2δ = 1 + γ`.
    pub fn needs_balance(&self) -> bool {
        matches!(self, LevelPart::II | LevelPart::III)
    }

    /// The half-open level range `(lo, hi]` the part quantifies over.
    pub fn range(&self, th: Thresholds) -> (Rat, Rat) {
        match self {
            LevelPart::I | LevelPart::IV => (th.gamma(), th.delta()),
            LevelPart::II => (th.delta(), Rat::one()),
            LevelPart::III => (th.gamma(), Rat::one()),
        }
    }
}

/// Level-set theorem for one instance: the fuzzy threshold verdict must
/// coincide with "every nonempty cut in the part's range is a crisp
/// `kind`-ideal". Levels are certified on the finite critical grid; all cuts
/// are piecewise constant between consecutive grid values.
pub fn verify_level_theorem(
    t: &CayleyTable,
    mu: &FuzzySubset,
    th: Thresholds,
    kind: IdealKind,
    part: LevelPart,
) -> Result<Verdict, Error> {
    if part.needs_balance() && !th.q_balanced() {
        return Err(Error::QDeltaUnbalanced);
    }
    let fuzzy_holds = check_threshold(t, mu, th, kind)?;
    let (lo, hi) = part.range(th);
    let mut nonempty = 0usize;
    let mut bad_cut: Option<(Rat, ElemSet, ViolationReport)> = None;
    for r in critical_thresholds(mu, th) {
        if !(r > lo && r <= hi) {
            continue;
        }
        let cut = mu.level_cut(th, r, part.cut_kind());
        if cut.is_empty() {
            continue;
        }
        nonempty += 1;
        if let Some(w) = is_crisp(t, cut, kind)? {
            if bad_cut.is_none() {
                bad_cut = Some((r, cut, ViolationReport::Crisp(w)));
            }
        }
    }
    let cuts_ok = bad_cut.is_none();
    match (fuzzy_holds.holds(), cuts_ok) {
        (true, true) if nonempty == 0 => Ok(Verdict::Vacuous),
        (true, true) | (false, false) => Ok(Verdict::Holds),
        (true, false) => {
            let (r, cut, inner) = bad_cut.unwrap();
            Ok(Verdict::fails(ViolationReport::LevelCut {
                kind,
                part: part.name().to_string(),
                fuzzy_holds: true,
                r: Some(r),
                cut: Some(cut.to_vec()),
                inner: Some(Box::new(inner)),
            }))
        }
        (false, true) => Ok(Verdict::fails(ViolationReport::LevelCut {
            kind,
            part: part.name().to_string(),
            fuzzy_holds: false,
            r: None,
            cut: None,
            inner: fuzzy_holds.witness().map(|w| Box::new(w.clone())),
        })),
    }
}

/// Family operation of the closure lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureOp {
    Intersection,
    Union,
}

impl ClosureOp {
    fn supports(&self, kind: IdealKind) -> bool {
        match self {
            ClosureOp::Intersection => matches!(
                kind,
                IdealKind::Subsemigroup | IdealKind::Left | IdealKind::Right
            ),
            ClosureOp::Union => matches!(kind, IdealKind::Left | IdealKind::Right),
        }
    }
}

/// Closure lemma for one family: when every member passes the threshold
/// check for `kind`, the family meet (intersection) or join (union) must
/// pass too. A family with a failing member is a vacuous instance.
pub fn verify_closure(
    t: &CayleyTable,
    subsets: &[FuzzySubset],
    th: Thresholds,
    kind: IdealKind,
    op: ClosureOp,
) -> Result<Verdict, Error> {
    if !op.supports(kind) {
        return Err(Error::UnsupportedClosure { op: format!("{op:?}"), kind });
    }
    for mu in subsets {
        if !check_threshold(t, mu, th, kind)?.holds() {
            return Ok(Verdict::Vacuous);
        }
    }
    let combined = match op {
        ClosureOp::Intersection => FuzzySubset::meet_all(subsets)?,
        ClosureOp::Union => FuzzySubset::join_all(subsets)?,
    };
    match check_threshold(t, &combined, th, kind)? {
        v if v.holds() => Ok(Verdict::Holds),
        v => Ok(Verdict::fails(ViolationReport::Mismatch {
            description: format!(
                "family {op:?} of {} passing {} subsets fails the {} check",
                subsets.len(),
                kind.name(),
                kind.name()
            ),
            inner: v.witness().map(|w| Box::new(w.clone())),
        })),
    }
}

/// The single-instance implication theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImplicationId {
    /// A two-sided fuzzy ideal is a fuzzy interior ideal.
    IdealImpliesInterior,
    /// A fuzzy left (or right) ideal is a fuzzy quasi-ideal.
    LeftImpliesQuasi,
    /// The support `{a : mu(a) > gamma}` of a fuzzy quasi-ideal is a crisp
    /// quasi-ideal.
    SupportQuasi,
    /// A characteristic function is a fuzzy quasi-ideal iff its subset is a
    /// crisp quasi-ideal.
    CharFnQuasi,
}

/// Implication theorem for one instance: vacuous when the hypothesis fails,
/// otherwise the conclusion must hold.
pub fn verify_implication(
    t: &CayleyTable,
    mu: &FuzzySubset,
    th: Thresholds,
    which: ImplicationId,
) -> Result<Verdict, Error> {
    let conclude = |label: &str, v: Verdict| match v {
        v if v.holds() => Ok(Verdict::Holds),
        v => Ok(Verdict::fails(ViolationReport::Mismatch {
            description: label.to_string(),
            inner: v.witness().map(|w| Box::new(w.clone())),
        })),
    };
    match which {
        ImplicationId::IdealImpliesInterior => {
            if !check_threshold(t, mu, th, IdealKind::TwoSided)?.holds() {
                return Ok(Verdict::Vacuous);
            }
            conclude(
                "two-sided fuzzy ideal fails the interior-ideal check",
                check_threshold(t, mu, th, IdealKind::Interior)?,
            )
        }
        ImplicationId::LeftImpliesQuasi => {
            let left = check_threshold(t, mu, th, IdealKind::Left)?.holds();
            let right = check_threshold(t, mu, th, IdealKind::Right)?.holds();
            if !left && !right {
                return Ok(Verdict::Vacuous);
            }
            conclude(
                "fuzzy left/right ideal fails the quasi-ideal check",
                check_threshold(t, mu, th, IdealKind::Quasi)?,
            )
        }
        ImplicationId::SupportQuasi => {
            if !check_threshold(t, mu, th, IdealKind::Quasi)?.holds() {
                return Ok(Verdict::Vacuous);
            }
            let support = mu.support_gamma(th);
            if support.is_empty() {
                return Ok(Verdict::Vacuous);
            }
            match is_crisp(t, support, IdealKind::Quasi)? {
                None => Ok(Verdict::Holds),
                Some(w) => Ok(Verdict::fails(ViolationReport::Mismatch {
                    description: format!(
                        "support {:?} of a fuzzy quasi-ideal is not a crisp quasi-ideal",
                        support.to_vec()
                    ),
                    inner: Some(Box::new(ViolationReport::Crisp(w))),
                })),
            }
        }
        ImplicationId::CharFnQuasi => {
            if !mu.is_characteristic() {
                return Err(Error::NotCharacteristic);
            }
            let q = mu.support_of_one();
            if q.is_empty() {
                return Ok(Verdict::Vacuous);
            }
            let crisp = is_crisp(t, q, IdealKind::Quasi)?.is_none();
            let fuzzy = check_threshold(t, mu, th, IdealKind::Quasi)?.holds();
            if crisp == fuzzy {
                Ok(Verdict::Holds)
            } else {
                Ok(Verdict::fails(ViolationReport::Mismatch {
                    description: format!(
                        "characteristic function of {:?}: crisp quasi = {crisp} but fuzzy quasi = {fuzzy}",
                        q.to_vec()
                    ),
                    inner: None,
                }))
            }
        }
    }
}

/// One key per verified claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    LevelI,
    LevelII,
    LevelIII,
    LevelIV,
    ThresholdEquiv,
    ConstructIff,
    ConstructQ,
    CharFn,
    IntersectClosure,
    UnionClosure,
    IdealImpliesInterior,
    LeftImpliesQuasi,
    SupportQuasi,
    CharFnQuasi,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::LevelI,
        TheoremId::LevelII,
        TheoremId::LevelIII,
        TheoremId::LevelIV,
        TheoremId::ThresholdEquiv,
        TheoremId::ConstructIff,
        TheoremId::ConstructQ,
        TheoremId::CharFn,
        TheoremId::IntersectClosure,
        TheoremId::UnionClosure,
        TheoremId::IdealImpliesInterior,
        TheoremId::LeftImpliesQuasi,
        TheoremId::SupportQuasi,
        TheoremId::CharFnQuasi,
    ];

    fn level_part(part: LevelPart) -> TheoremId {
        match part {
            LevelPart::I => TheoremId::LevelI,
            LevelPart::II => TheoremId::LevelII,
            LevelPart::III => TheoremId::LevelIII,
            LevelPart::IV => TheoremId::LevelIV,
        }
    }
}

/// How the campaign picks Cayley tables per order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableMode {
    /// Every table (all labelings) for orders `<= 3`; larger orders are
    /// rejected in this mode.
    #[serde(rename = "exhaustive-le3")]
    ExhaustiveLE3,
    /// The first canonical representatives found by the backtracking
    /// enumerator, capped per order.
    BacktrackSample,
}

const BACKTRACK_TABLE_CAP: usize = 24;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub orders: Vec<usize>,
    pub table_mode: TableMode,
    #[serde(default = "default_denominator")]
    pub grade_denominator: u32,
    pub mu_samples: usize,
    pub threshold_samples: Vec<Thresholds>,
    pub seed: u64,
}

fn default_denominator() -> u32 {
    20
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.orders.is_empty() {
            return Err(Error::BadConfig("orders must be nonempty".into()));
        }
        for &n in &self.orders {
            if n == 0 || n > MAX_ENUM_ORDER {
                return Err(Error::SizeOutOfRange { got: n, min: 1, max: MAX_ENUM_ORDER });
            }
            if self.table_mode == TableMode::ExhaustiveLE3 && n > 3 {
                return Err(Error::BadConfig(format!(
                    "exhaustive-le3 table mode supports orders <= 3, got {n}"
                )));
            }
        }
        if self.grade_denominator == 0 {
            return Err(Error::BadConfig("grade_denominator must be positive".into()));
        }
        if self.threshold_samples.is_empty() {
            return Err(Error::BadConfig("threshold_samples must be nonempty".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremStats {
    pub pass: u64,
    pub vacuous: u64,
    pub fail: u64,
}

impl TheoremStats {
    pub fn non_vacuous(&self) -> u64 {
        self.pass + self.fail
    }
}

/// A recorded failure, complete enough to replay by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub theorem: TheoremId,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub thresholds: Thresholds,
    pub mu: Option<Vec<Rat>>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub tables_checked: usize,
    pub stats: BTreeMap<TheoremId, TheoremStats>,
    pub counterexamples: Vec<Counterexample>,
    pub errata: Vec<String>,
    /// Theorems with fewer than [`NON_VACUOUS_TARGET`] non-vacuous instances.
    pub undersampled: Vec<TheoremId>,
}

impl PartialEq for CampaignConfig {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders
            && self.table_mode == other.table_mode
            && self.grade_denominator == other.grade_denominator
            && self.mu_samples == other.mu_samples
            && self.threshold_samples == other.threshold_samples
            && self.seed == other.seed
    }
}
impl Eq for CampaignConfig {}

impl CampaignReport {
    pub fn total_failures(&self) -> u64 {
        self.stats.values().map(|s| s.fail).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub const NON_VACUOUS_TARGET: u64 = 100;

struct Recorder {
    stats: BTreeMap<TheoremId, TheoremStats>,
    counterexamples: Vec<Counterexample>,
}

impl Recorder {
    fn new() -> Self {
        let mut stats = BTreeMap::new();
        for id in TheoremId::ALL {
            stats.insert(id, TheoremStats::default());
        }
        Recorder { stats, counterexamples: Vec::new() }
    }

    fn record(
        &mut self,
        id: TheoremId,
        v: &Verdict,
        t: &CayleyTable,
        th: Thresholds,
        mu: Option<&FuzzySubset>,
    ) {
        let s = self.stats.get_mut(&id).unwrap();
        match v {
            Verdict::Holds => s.pass += 1,
            Verdict::Vacuous => s.vacuous += 1,
            Verdict::Fails { witness } => {
                s.fail += 1;
                self.counterexamples.push(Counterexample {
                    theorem: id,
                    order: t.order(),
                    table: t.rows(),
                    thresholds: th,
                    mu: mu.map(|m| m.grades().to_vec()),
                    description: witness.render(t.labels()),
                });
            }
        }
    }

    fn record_bool(
        &mut self,
        id: TheoremId,
        ok: bool,
        t: &CayleyTable,
        th: Thresholds,
        mu: Option<&FuzzySubset>,
        describe: impl FnOnce() -> String,
    ) {
        let v = if ok {
            Verdict::Holds
        } else {
            Verdict::fails(ViolationReport::Mismatch { description: describe(), inner: None })
        };
        self.record(id, &v, t, th, mu);
    }
}

fn campaign_tables(cfg: &CampaignConfig, n: usize) -> Result<Vec<CayleyTable>, Error> {
    match cfg.table_mode {
        TableMode::ExhaustiveLE3 => {
            enumerate_la_semigroups(n, EnumerationMode::All).map(|it| it.collect())
        }
        TableMode::BacktrackSample => enumerate_la_semigroups(n, EnumerationMode::UpToIso)
            .map(|it| it.take(BACKTRACK_TABLE_CAP).collect()),
    }
}

/// Random grades on the grid `{0, 1/d, ..., 1}`, plus always-passing
/// constants and the step subsets of every crisp subset of every kind —
/// the latter guarantee non-vacuous hypothesis instances for the closure
/// and implication suites.
fn build_mu_pool(
    t: &CayleyTable,
    th: Thresholds,
    cfg: &CampaignConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<FuzzySubset>, Error> {
    let n = t.order();
    let d = cfg.grade_denominator as i64;
    let mut pool: Vec<FuzzySubset> = Vec::new();
    let push = |mu: FuzzySubset, pool: &mut Vec<FuzzySubset>| {
        if !pool.contains(&mu) {
            pool.push(mu);
        }
    };
    for _ in 0..cfg.mu_samples {
        let grades = (0..n)
            .map(|_| Rat::new(rng.gen_range(0..=d), d))
            .collect::<Vec<_>>();
        push(FuzzySubset::new(grades)?, &mut pool);
    }
    push(FuzzySubset::constant(n, th.gamma())?, &mut pool);
    push(FuzzySubset::constant(n, th.delta())?, &mut pool);
    for kind in IdealKind::ALL {
        for a in enumerate_crisp(t, kind)? {
            push(make_step_subset(t, a, th.delta(), th.gamma(), th)?, &mut pool);
        }
    }
    Ok(pool)
}

/// Runs every theorem verifier across the configured corpus. Execution is
/// single-threaded and fully determined by the config (including the seed),
/// so reports are byte-identical across runs.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport, Error> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rec = Recorder::new();
    let mut errata: Vec<String> = Vec::new();
    let mut tables_checked = 0usize;

    let balanced_exercised = cfg.threshold_samples.iter().any(|th| th.q_balanced());
    if balanced_exercised {
        errata.push(
            "level theorem parts II and III: the converse arguments in circulation pick \
             levels in (gamma, delta], but part II quantifies over (delta, 1]; the verifier \
             uses the stated range (delta, 1]."
                .to_string(),
        );
    }

    for &n in &cfg.orders {
        for t in campaign_tables(cfg, n)? {
            tables_checked += 1;
            for &th in &cfg.threshold_samples {
                let pool = build_mu_pool(&t, th, cfg, &mut rng)?;
                run_per_mu_suites(&t, th, &pool, &mut rec)?;
                run_subset_suites(&t, th, &mut rec)?;
                run_closure_suites(&t, th, &pool, &mut rng, &mut rec)?;
            }
        }
    }

    let undersampled = rec
        .stats
        .iter()
        .filter(|(_, s)| s.non_vacuous() < NON_VACUOUS_TARGET)
        .map(|(&id, _)| id)
        .collect();
    Ok(CampaignReport {
        config: cfg.clone(),
        tables_checked,
        stats: rec.stats,
        counterexamples: rec.counterexamples,
        errata,
        undersampled,
    })
}

/// Level theorems, threshold/pointwise equivalence and the implication
/// theorems, swept over the fuzzy-subset pool.
fn run_per_mu_suites(
    t: &CayleyTable,
    th: Thresholds,
    pool: &[FuzzySubset],
    rec: &mut Recorder,
) -> Result<(), Error> {
    for mu in pool {
        for kind in IdealKind::NON_QUASI {
            for part in LevelPart::ALL {
                if part.needs_balance() && !th.q_balanced() {
                    continue;
                }
                let v = verify_level_theorem(t, mu, th, kind, part)?;
                rec.record(TheoremId::level_part(part), &v, t, th, Some(mu));
            }
            let a = check_threshold(t, mu, th, kind)?.holds();
            let b = check_pointwise(t, mu, th, kind, PointDefMode::InGammaHypothesis)?.holds();
            rec.record_bool(TheoremId::ThresholdEquiv, a == b, t, th, Some(mu), || {
                format!("{} threshold check = {a} but pointwise check = {b}", kind.name())
            });
        }
        for which in [
            ImplicationId::IdealImpliesInterior,
            ImplicationId::LeftImpliesQuasi,
            ImplicationId::SupportQuasi,
        ] {
            let id = match which {
                ImplicationId::IdealImpliesInterior => TheoremId::IdealImpliesInterior,
                ImplicationId::LeftImpliesQuasi => TheoremId::LeftImpliesQuasi,
                ImplicationId::SupportQuasi => TheoremId::SupportQuasi,
                ImplicationId::CharFnQuasi => unreachable!(),
            };
            let v = verify_implication(t, mu, th, which)?;
            rec.record(id, &v, t, th, Some(mu));
        }
    }
    Ok(())
}

/// Construction and characteristic-function theorems, swept over every
/// nonempty subset of the carrier.
fn run_subset_suites(t: &CayleyTable, th: Thresholds, rec: &mut Recorder) -> Result<(), Error> {
    let n = t.order();
    for bits in 1..(1u32 << n) {
        let a = ElemSet(bits as u16);
        let step = make_step_subset(t, a, th.delta(), th.gamma(), th)?;
        let chi = FuzzySubset::characteristic(n, a);
        for kind in IdealKind::ALL {
            let crisp = is_crisp(t, a, kind)?.is_none();
            let fuzzy = check_threshold(t, &step, th, kind)?.holds();
            rec.record_bool(TheoremId::ConstructIff, crisp == fuzzy, t, th, Some(&step), || {
                format!(
                    "subset {:?}: crisp {} = {crisp} but step-subset check = {fuzzy}",
                    a.to_vec(),
                    kind.name()
                )
            });
            if kind == IdealKind::Quasi {
                let v = verify_implication(t, &chi, th, ImplicationId::CharFnQuasi)?;
                rec.record(TheoremId::CharFnQuasi, &v, t, th, Some(&chi));
            } else {
                let chi_fuzzy = check_threshold(t, &chi, th, kind)?.holds();
                rec.record_bool(TheoremId::CharFn, crisp == chi_fuzzy, t, th, Some(&chi), || {
                    format!(
                        "subset {:?}: crisp {} = {crisp} but characteristic-function check = {chi_fuzzy}",
                        a.to_vec(),
                        kind.name()
                    )
                });
                // q-hypothesis construction: crisp subsets yield subsets
                // passing the point definition under the q_delta hypothesis.
                if th.q_balanced() {
                    let v = if crisp {
                        let ok = check_pointwise(t, &step, th, kind, PointDefMode::QDeltaHypothesis)?;
                        if ok.holds() {
                            Verdict::Holds
                        } else {
                            Verdict::fails(ViolationReport::Mismatch {
                                description: format!(
                                    "crisp {} subset {:?} fails the q-hypothesis point check",
                                    kind.name(),
                                    a.to_vec()
                                ),
                                inner: ok.witness().map(|w| Box::new(w.clone())),
                            })
                        }
                    } else {
                        Verdict::Vacuous
                    };
                    rec.record(TheoremId::ConstructQ, &v, t, th, Some(&step));
                }
            }
        }
    }
    Ok(())
}

const CLOSURE_FAMILIES_PER_SIZE: usize = 2;

/// Intersection/union closure over random families drawn from the passing
/// members of the pool.
fn run_closure_suites(
    t: &CayleyTable,
    th: Thresholds,
    pool: &[FuzzySubset],
    rng: &mut ChaCha8Rng,
    rec: &mut Recorder,
) -> Result<(), Error> {
    for (op, id, kinds) in [
        (
            ClosureOp::Intersection,
            TheoremId::IntersectClosure,
            &[IdealKind::Subsemigroup, IdealKind::Left, IdealKind::Right][..],
        ),
        (ClosureOp::Union, TheoremId::UnionClosure, &[IdealKind::Left, IdealKind::Right][..]),
    ] {
        for &kind in kinds {
            let mut passing: Vec<&FuzzySubset> = Vec::new();
            for mu in pool {
                if check_threshold(t, mu, th, kind)?.holds() {
                    passing.push(mu);
                }
            }
            for size in [2usize, 3] {
                for _ in 0..CLOSURE_FAMILIES_PER_SIZE {
                    if passing.len() < size {
                        rec.record(id, &Verdict::Vacuous, t, th, None);
                        continue;
                    }
                    let family: Vec<FuzzySubset> = (0..size)
                        .map(|_| passing[rng.gen_range(0..passing.len())].clone())
                        .collect();
                    let v = verify_closure(t, &family, th, kind, op)?;
                    rec.record(id, &v, t, th, family.first());
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn th(g: &str, d: &str) -> Thresholds {
        Thresholds::new(rat(g), rat(d)).unwrap()
    }

    fn example1() -> (CayleyTable, FuzzySubset) {
        let t = CayleyTable::new(&[
            vec![3, 2, 2, 2],
            vec![2, 2, 3, 3],
            vec![2, 2, 2, 2],
            vec![2, 2, 2, 2],
        ])
        .unwrap();
        let mu =
            FuzzySubset::new(vec![rat("0.6"), rat("0.9"), rat("0.7"), rat("0.3")]).unwrap();
        (t, mu)
    }

    fn example2() -> (CayleyTable, FuzzySubset) {
        let t = CayleyTable::new(&[
            vec![1, 3, 2, 1],
            vec![3, 3, 3, 3],
            vec![3, 3, 3, 3],
            vec![3, 3, 3, 3],
        ])
        .unwrap();
        let mu =
            FuzzySubset::new(vec![rat("0.6"), rat("0.6"), rat("0.4"), rat("0.4")]).unwrap();
        (t, mu)
    }

    #[test]
    fn level_part_i_example1() {
        let (t, mu) = example1();
        let v = verify_level_theorem(&t, &mu, th("0.2", "0.3"), IdealKind::Subsemigroup,
            LevelPart::I).unwrap();
        assert_eq!(v, Verdict::Holds);
    }

    #[test]
    fn level_part_iv_example2_cuts_independently_checked() {
        let (t, mu) = example2();
        let thr = th("0.2", "0.4");
        let v =
            verify_level_theorem(&t, &mu, thr, IdealKind::Left, LevelPart::IV).unwrap();
        assert_eq!(v, Verdict::Holds);
        // Independent pass over the same grid: every nonempty upper cut in
        // (gamma, delta] really is a crisp left ideal.
        let mut nonempty = 0;
        for r in critical_thresholds(&mu, thr) {
            if r > thr.gamma() && r <= thr.delta() {
                let cut = mu.level_cut(thr, r, CutKind::UpperCut);
                if !cut.is_empty() {
                    nonempty += 1;
                    assert!(is_crisp(&t, cut, IdealKind::Left).unwrap().is_none());
                }
            }
        }
        assert!(nonempty > 0);
    }

    #[test]
    fn level_constant_gamma_is_vacuous() {
        let (t, _) = example1();
        let thr = th("0.2", "0.3");
        let mu = FuzzySubset::constant(4, thr.gamma()).unwrap();
        let v = verify_level_theorem(&t, &mu, thr, IdealKind::Subsemigroup, LevelPart::I)
            .unwrap();
        assert_eq!(v, Verdict::Vacuous);
    }

    #[test]
    fn level_parts_ii_iii_need_balance() {
        let (t, mu) = example1();
        for part in [LevelPart::II, LevelPart::III] {
            assert!(matches!(
                verify_level_theorem(&t, &mu, th("0.2", "0.3"), IdealKind::Left, part),
                Err(Error::QDeltaUnbalanced)
            ));
            assert!(verify_level_theorem(&t, &mu, th("0", "1/2"), IdealKind::Left, part).is_ok());
        }
    }

    #[test]
    fn closure_family_of_one_and_unsupported() {
        let (t, _) = example2();
        let mu = FuzzySubset::constant(4, rat("0.4")).unwrap();
        let v = verify_closure(&t, &[mu.clone()], th("0.2", "0.4"), IdealKind::Left,
            ClosureOp::Intersection).unwrap();
        assert_eq!(v, Verdict::Holds);
        assert!(matches!(
            verify_closure(&t, &[mu.clone()], th("0.2", "0.4"), IdealKind::Bi,
                ClosureOp::Intersection),
            Err(Error::UnsupportedClosure { .. })
        ));
        assert!(matches!(
            verify_closure(&t, &[mu], th("0.2", "0.4"), IdealKind::Subsemigroup,
                ClosureOp::Union),
            Err(Error::UnsupportedClosure { .. })
        ));
    }

    #[test]
    fn support_quasi_on_quasi_example() {
        let t = CayleyTable::new(&[
            vec![2, 1, 2, 1],
            vec![1, 1, 1, 1],
            vec![1, 1, 1, 1],
            vec![1, 1, 1, 1],
        ])
        .unwrap();
        let mu = FuzzySubset::new(vec![rat("0"), rat("0.2"), rat("0.3"), rat("0")]).unwrap();
        let thr = th("0.1", "0.2");
        // Hypothesis holds, support is {2,3} in labels, and it is crisp quasi.
        assert_eq!(mu.support_gamma(thr).to_vec(), vec![1, 2]);
        let v = verify_implication(&t, &mu, thr, ImplicationId::SupportQuasi).unwrap();
        assert_eq!(v, Verdict::Holds);
    }

    #[test]
    fn char_fn_quasi_whole_carrier() {
        let (t, _) = example1();
        let chi = FuzzySubset::characteristic(4, ElemSet::full(4));
        let v = verify_implication(&t, &chi, th("0.2", "0.3"), ImplicationId::CharFnQuasi)
            .unwrap();
        assert_eq!(v, Verdict::Holds);
        let (t2, mu) = example1();
        assert!(matches!(
            verify_implication(&t2, &mu, th("0.2", "0.3"), ImplicationId::CharFnQuasi),
            Err(Error::NotCharacteristic)
        ));
    }

    fn small_config() -> CampaignConfig {
        CampaignConfig {
            orders: vec![1, 2],
            table_mode: TableMode::ExhaustiveLE3,
            grade_denominator: 10,
            mu_samples: 6,
            threshold_samples: vec![th("0", "1/2"), th("1/5", "3/10")],
            seed: 7,
        }
    }

    #[test]
    fn campaign_order_one_all_pass() {
        let cfg = CampaignConfig { orders: vec![1], ..small_config() };
        let report = run_campaign(&cfg).unwrap();
        assert_eq!(report.total_failures(), 0);
        assert_eq!(report.tables_checked, 1);
    }

    #[test]
    fn campaign_small_corpus_zero_failures_and_deterministic() {
        let cfg = small_config();
        let a = run_campaign(&cfg).unwrap();
        let b = run_campaign(&cfg).unwrap();
        assert_eq!(a.total_failures(), 0, "counterexamples: {:?}", a.counterexamples);
        assert_eq!(a.to_json(), b.to_json());
        // The pool construction guarantees hypothesis instances everywhere.
        for id in [TheoremId::ConstructIff, TheoremId::ThresholdEquiv] {
            assert!(a.stats[&id].pass > 0);
        }
    }

    #[test]
    fn campaign_config_validation() {
        let mut cfg = small_config();
        cfg.orders = vec![4];
        assert!(matches!(run_campaign(&cfg), Err(Error::BadConfig(_))));
        cfg.orders = vec![0];
        assert!(matches!(run_campaign(&cfg), Err(Error::SizeOutOfRange { .. })));
        cfg = small_config();
        cfg.threshold_samples.clear();
        assert!(matches!(run_campaign(&cfg), Err(Error::BadConfig(_))));
    }
}
