//! Finite magmas given by Cayley tables, the LA-semigroup laws, and
//! enumeration of all LA-semigroups of small order.
//!
//! Elements are dense 0-based indices; display labels live at the I/O
//! boundary. The defining law is the left-invertive identity
//! `(x*y)*z = (z*y)*x`.

use serde::{Deserialize, Serialize};

use crate::Error;

/// The laws checked on a table. `LeftInvertive` defines LA-semigroups; the
/// medial law holds in every LA-semigroup; the paramedial law and `Law4`
/// (`a(bc) = b(ac)`) are guaranteed only in the presence of a left identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Law {
    LeftInvertive,
    Medial,
    Paramedial,
    Law4,
}

/// First violating tuple of a law, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawWitness {
    pub law: Law,
    pub elements: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

/// A finite binary operation on `n` labeled elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CayleyTable {
    n: usize,
    op: Vec<u8>,
    labels: Vec<String>,
}

impl CayleyTable {
    /// Builds a table from a row-major entry matrix. Labels default to
    /// `"1".."n"` as in the worked examples.
    pub fn new(entries: &[Vec<usize>]) -> Result<Self, Error> {
        let n = entries.len();
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::with_labels(entries, labels)
    }

    pub fn with_labels(entries: &[Vec<usize>], labels: Vec<String>) -> Result<Self, Error> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if labels.len() != n {
            return Err(Error::CarrierMismatch { expected: n, got: labels.len() });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::BadLabel(format!("label {i} is empty")));
            }
            if labels[..i].contains(l) {
                return Err(Error::BadLabel(format!("duplicate label '{l}'")));
            }
        }
        let mut op = Vec::with_capacity(n * n);
        for row in entries {
            if row.len() != n {
                return Err(Error::CarrierMismatch { expected: n, got: row.len() });
            }
            for &e in row {
                if e >= n {
                    return Err(Error::EntryOutOfRange { entry: e, order: n });
                }
                op.push(e as u8);
            }
        }
        Ok(CayleyTable { n, op, labels })
    }

    fn from_cells(n: usize, op: Vec<u8>) -> Self {
        CayleyTable { n, op, labels: (1..=n).map(|i| i.to_string()).collect() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// `x * y`.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    /// `(x*y)*z = (z*y)*x` over all triples; `None` means the law holds.
    pub fn check_left_invertive(&self) -> Option<LawWitness> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.mul(self.mul(x, y), z);
                    let rhs = self.mul(self.mul(z, y), x);
                    if lhs != rhs {
                        return Some(LawWitness {
                            law: Law::LeftInvertive,
                            elements: vec![x, y, z],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_la_semigroup(&self) -> bool {
        self.check_left_invertive().is_none()
    }

    /// `(ab)(cd) = (ac)(bd)` over all quadruples.
    pub fn check_medial(&self) -> Option<LawWitness> {
        self.check_quad(Law::Medial, |t, a, b, c, d| {
            (t.mul(t.mul(a, b), t.mul(c, d)), t.mul(t.mul(a, c), t.mul(b, d)))
        })
    }

    /// `(ab)(cd) = (db)(ca)` over all quadruples.
    pub fn check_paramedial(&self) -> Option<LawWitness> {
        self.check_quad(Law::Paramedial, |t, a, b, c, d| {
            (t.mul(t.mul(a, b), t.mul(c, d)), t.mul(t.mul(d, b), t.mul(c, a)))
        })
    }

    fn check_quad(
        &self,
        law: Law,
        eval: impl Fn(&Self, usize, usize, usize, usize) -> (usize, usize),
    ) -> Option<LawWitness> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let (lhs, rhs) = eval(self, a, b, c, d);
                        if lhs != rhs {
                            return Some(LawWitness { law, elements: vec![a, b, c, d], lhs, rhs });
                        }
                    }
                }
            }
        }
        None
    }

    /// `a(bc) = b(ac)` over all triples.
    pub fn check_law4(&self) -> Option<LawWitness> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.mul(a, self.mul(b, c));
                    let rhs = self.mul(b, self.mul(a, c));
                    if lhs != rhs {
                        return Some(LawWitness {
                            law: Law::Law4,
                            elements: vec![a, b, c],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        None
    }

    /// All `e` with `e*x = x` for every `x`.
    pub fn find_left_identities(&self) -> ElemSet {
        let mut out = ElemSet::empty();
        for e in 0..self.n {
            if (0..self.n).all(|x| self.mul(e, x) == x) {
                out.insert(e);
            }
        }
        out
    }

    /// Every `a` has some `x` with `a = (ax)a`.
    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).any(|x| self.mul(self.mul(a, x), a) == a))
    }

    /// Every `a` has `x, y` with `a = (x*a^2)*y`.
    pub fn is_intra_regular(&self) -> bool {
        (0..self.n).all(|a| {
            let aa = self.mul(a, a);
            (0..self.n).any(|x| (0..self.n).any(|y| self.mul(self.mul(x, aa), y) == a))
        })
    }

    /// `{a*b : a in A, b in B}`.
    pub fn subset_product(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::empty();
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Lexicographically least relabeling of the table over all permutations
    /// of the carrier. Two tables are isomorphic iff their canonical cell
    /// vectors agree.
    pub fn canonical_cells(&self) -> Vec<u8> {
        let n = self.n;
        let mut best: Option<Vec<u8>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut cells = vec![0u8; n * n];
            for x in 0..n {
                for y in 0..n {
                    cells[p[x] * n + p[y]] = p[self.mul(x, y)] as u8;
                }
            }
            if best.as_ref().map_or(true, |b| cells < *b) {
                best = Some(cells);
            }
        });
        best.unwrap()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_cells() == self.op
    }
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Subset of a carrier of order <= 16, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ElemSet(pub u16);

impl ElemSet {
    pub fn empty() -> Self {
        ElemSet(0)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 16);
        ElemSet(if n == 16 { u16::MAX } else { (1u16 << n) - 1 })
    }

    pub fn singleton(x: usize) -> Self {
        ElemSet(1 << x)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..16).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumerationMode {
    All,
    UpToIso,
}

pub const MAX_ENUM_ORDER: usize = 5;

/// Streams all LA-semigroups of order `n` in lexicographic cell order.
///
/// Backtracks cell by cell, pruning with every left-invertive triple whose
/// four lookups are already assigned. Brute force over all `n^(n^2)` tables
/// is kept as the test oracle for n <= 3.
pub fn enumerate_la_semigroups(
    n: usize,
    mode: EnumerationMode,
) -> Result<impl Iterator<Item = CayleyTable>, Error> {
    if n < 1 || n > MAX_ENUM_ORDER {
        return Err(Error::SizeOutOfRange { got: n, min: 1, max: MAX_ENUM_ORDER });
    }
    Ok(Enumerator::new(n, mode))
}

struct Enumerator {
    n: usize,
    mode: EnumerationMode,
    // cells[k] is the current candidate value of cell k; depth counts assigned
    // cells. cells[depth] holds the next value to try at that depth.
    cells: Vec<u8>,
    depth: usize,
    next_try: Vec<u8>,
    done: bool,
}

impl Enumerator {
    fn new(n: usize, mode: EnumerationMode) -> Self {
        Enumerator {
            n,
            mode,
            cells: vec![0; n * n],
            depth: 0,
            next_try: vec![0; n * n],
            done: false,
        }
    }

    /// Checks all triples whose evaluation is fully determined by the first
    /// `assigned` cells and involves the newly set cell.
    fn consistent(&self, assigned: usize) -> bool {
        let n = self.n;
        let cell = |x: usize, y: usize| -> Option<usize> {
            let k = x * n + y;
            if k < assigned {
                Some(self.cells[k] as usize)
            } else {
                None
            }
        };
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = cell(x, y) else { continue };
                for z in 0..n {
                    let Some(lhs) = cell(xy, z) else { continue };
                    let Some(zy) = cell(z, y) else { continue };
                    let Some(rhs) = cell(zy, x) else { continue };
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for Enumerator {
    type Item = CayleyTable;

    fn next(&mut self) -> Option<CayleyTable> {
        let total = self.n * self.n;
        if self.done {
            return None;
        }
        loop {
            if self.depth == total {
                // Emit, then backtrack to search for the next one.
                let table = CayleyTable::from_cells(self.n, self.cells.clone());
                self.depth -= 1;
                let emit = match self.mode {
                    EnumerationMode::All => true,
                    EnumerationMode::UpToIso => table.is_canonical(),
                };
                if emit {
                    return Some(table);
                }
                continue;
            }
            let v = self.next_try[self.depth];
            if v as usize >= self.n {
                // Exhausted values at this depth; backtrack.
                self.next_try[self.depth] = 0;
                if self.depth == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.next_try[self.depth] = v + 1;
            self.cells[self.depth] = v;
            if self.consistent(self.depth + 1) {
                self.depth += 1;
            }
        }
    }
}
