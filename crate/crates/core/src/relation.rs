//! Finite abstract decision problems and the relational calculus built on
//! them: transitive closure, asymmetric parts, maximal elements and cycles.
//!
//! Alternatives are dense ids in `0..n`. An edge `(u, v)` reads "u dominates
//! v". Relations are stored as dense bit rows up to a configurable threshold
//! and as sorted adjacency rows above it; both layouts answer the same
//! queries and compare equal when they hold the same pairs.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Default switch point between dense bit rows and sparse adjacency rows.
pub const DEFAULT_DENSE_THRESHOLD: usize = 4096;

/// One alternative of a problem, borrowed together with its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alternative<'a> {
    pub id: usize,
    pub label: Option<&'a str>,
}

impl fmt::Display for Alternative<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Some(label) => f.write_str(label),
            None => write!(f, "{}", self.id),
        }
    }
}

/// A finite ground set `0..n` with a dominance relation over it.
///
/// Edges are deduplicated and kept sorted. Self-pairs are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionProblem {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<Option<String>>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl DecisionProblem {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyProblem);
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        for &(u, v) in &edges {
            let id = u.max(v);
            if id >= n {
                return Err(Error::IdOutOfRange { id, n });
            }
        }
        edges.sort_unstable();
        edges.dedup();

        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for &(u, v) in &edges {
            out[u].push(v);
            inc[v].push(u);
        }
        for row in &mut inc {
            row.sort_unstable();
        }
        Ok(Self { n, edges, labels: vec![None; n], out, inc })
    }

    pub fn with_labels(mut self, labels: impl IntoIterator<Item = (usize, String)>) -> Result<Self> {
        for (id, label) in labels {
            self.set_label(id, label)?;
        }
        Ok(self)
    }

    pub fn set_label(&mut self, id: usize, label: impl Into<String>) -> Result<()> {
        let n = self.n;
        let slot = self.labels.get_mut(id).ok_or(Error::IdOutOfRange { id, n })?;
        *slot = Some(label.into());
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted, deduplicated dominance pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn alternative(&self, id: usize) -> Alternative<'_> {
        Alternative { id, label: self.labels[id].as_deref() }
    }

    pub fn alternatives(&self) -> impl Iterator<Item = Alternative<'_>> + '_ {
        (0..self.n).map(|id| self.alternative(id))
    }

    pub fn dominates(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Alternatives dominated by `u`, ascending.
    pub fn successors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    /// Alternatives dominating `v`, ascending.
    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    /// True when no pair is present in both directions (self-pairs count as
    /// symmetric).
    pub fn is_asymmetric(&self) -> bool {
        self.edges.iter().all(|&(u, v)| !self.dominates(v, u))
    }

    /// The dominance relation itself as a [`Relation`].
    pub fn relation(&self, dense_threshold: usize) -> Relation {
        Relation::from_rows(self.n, self.out.clone(), dense_threshold)
    }
}

/// Fixed-width bit rows, one per alternative.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self { n, words, bits: vec![0; words * n] }
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BitMatrix").field("n", &self.n).finish_non_exhaustive()
    }
}

#[derive(Debug, Clone)]
enum Rows {
    Dense(BitMatrix),
    Sparse(Vec<Vec<usize>>),
}

/// A boolean relation on `0..n`.
#[derive(Debug, Clone)]
pub struct Relation {
    n: usize,
    rows: Rows,
}

impl Relation {
    /// Builds from adjacency rows. Rows must be sorted and free of duplicates.
    fn from_rows(n: usize, rows: Vec<Vec<usize>>, dense_threshold: usize) -> Self {
        if n <= dense_threshold {
            let mut m = BitMatrix::new(n);
            for (u, row) in rows.iter().enumerate() {
                for &v in row {
                    m.set(u, v);
                }
            }
            Self { n, rows: Rows::Dense(m) }
        } else {
            Self { n, rows: Rows::Sparse(rows) }
        }
    }

    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        dense_threshold: usize,
    ) -> Self {
        let mut rows = vec![Vec::new(); n];
        for (u, v) in pairs {
            rows[u].push(v);
        }
        for row in &mut rows {
            row.sort_unstable();
            row.dedup();
        }
        Self::from_rows(n, rows, dense_threshold)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.rows, Rows::Dense(_))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        match &self.rows {
            Rows::Dense(m) => m.get(u, v),
            Rows::Sparse(rows) => rows[u].binary_search(&v).is_ok(),
        }
    }

    /// Ascending successors of `u`.
    pub fn successors(&self, u: usize) -> Successors<'_> {
        match &self.rows {
            Rows::Dense(m) => Successors::Dense { row: m.row(u), word: 0, bits: m.row(u).first().copied().unwrap_or(0) },
            Rows::Sparse(rows) => Successors::Sparse(rows[u].iter()),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.successors(u).map(move |v| (u, v)))
    }

    pub fn len(&self) -> usize {
        match &self.rows {
            Rows::Dense(m) => m.bits.iter().map(|w| w.count_ones() as usize).sum(),
            Rows::Sparse(rows) => rows.iter().map(Vec::len).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Least transitive relation containing `self`, by BFS from every source.
    pub fn closure(&self, dense_threshold: usize) -> Relation {
        let n = self.n;
        let mut seen = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut rows = Vec::with_capacity(n);
        for s in 0..n {
            let mut row = Vec::new();
            queue.clear();
            for v in self.successors(s) {
                if seen[v] != s {
                    seen[v] = s;
                    row.push(v);
                    queue.push_back(v);
                }
            }
            while let Some(u) = queue.pop_front() {
                for v in self.successors(u) {
                    if seen[v] != s {
                        seen[v] = s;
                        row.push(v);
                        queue.push_back(v);
                    }
                }
            }
            row.sort_unstable();
            rows.push(row);
        }
        Relation::from_rows(n, rows, dense_threshold)
    }

    /// Pairs of `self` whose reverse is absent.
    pub fn asymmetric_part(&self) -> Relation {
        let rows = (0..self.n)
            .map(|u| self.successors(u).filter(|&v| !self.contains(v, u)).collect())
            .collect();
        let threshold = if self.is_dense() { usize::MAX } else { 0 };
        Relation::from_rows(self.n, rows, threshold)
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.pairs().eq(other.pairs())
    }
}

impl Eq for Relation {}

pub enum Successors<'a> {
    Dense { row: &'a [u64], word: usize, bits: u64 },
    Sparse(std::slice::Iter<'a, usize>),
}

impl Iterator for Successors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            Successors::Dense { row, word, bits } => loop {
                if *bits != 0 {
                    let tz = bits.trailing_zeros() as usize;
                    *bits &= *bits - 1;
                    return Some(*word * 64 + tz);
                }
                *word += 1;
                *bits = *row.get(*word)?;
            },
            Successors::Sparse(it) => it.next().copied(),
        }
    }
}

/// The transitive closure R̄: `reaches(u, v)` iff an R-path of length at
/// least one leads from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability(Relation);

impl Reachability {
    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.0.contains(u, v)
    }

    pub fn relation(&self) -> &Relation {
        &self.0
    }
}

pub fn transitive_closure(p: &DecisionProblem) -> Reachability {
    transitive_closure_with(p, DEFAULT_DENSE_THRESHOLD)
}

pub fn transitive_closure_with(p: &DecisionProblem, dense_threshold: usize) -> Reachability {
    Reachability(p.relation(dense_threshold).closure(dense_threshold))
}

/// Which strict relation a [`StrictRelation`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrictKind {
    /// P(R).
    OfRelation,
    /// P(R̄).
    OfClosure,
    /// The transitive closure of P(R). Not asymmetric in general.
    ClosureOfStrict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictRelation {
    kind: StrictKind,
    relation: Relation,
}

impl StrictRelation {
    /// P(R) of the problem's dominance relation.
    pub fn of_problem(p: &DecisionProblem) -> Self {
        Self::of_problem_with(p, DEFAULT_DENSE_THRESHOLD)
    }

    pub fn of_problem_with(p: &DecisionProblem, dense_threshold: usize) -> Self {
        Self { kind: StrictKind::OfRelation, relation: asymmetric_part(&p.relation(dense_threshold)) }
    }

    /// P(R̄).
    pub fn of_closure(reach: &Reachability) -> Self {
        Self { kind: StrictKind::OfClosure, relation: asymmetric_part(reach.relation()) }
    }

    /// The transitive closure of P(R).
    pub fn closure_of_strict(p: &DecisionProblem, dense_threshold: usize) -> Self {
        let strict = asymmetric_part(&p.relation(dense_threshold));
        Self { kind: StrictKind::ClosureOfStrict, relation: strict.closure(dense_threshold) }
    }

    pub fn kind(&self) -> StrictKind {
        self.kind
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.relation.contains(u, v)
    }

    pub fn is_asymmetric(&self) -> bool {
        self.relation.pairs().all(|(u, v)| !self.relation.contains(v, u))
    }
}

/// `strict[u][v] ⟺ r[u][v] ∧ ¬r[v][u]`.
pub fn asymmetric_part(r: &Relation) -> Relation {
    r.asymmetric_part()
}

/// Alternatives with no incoming pair in `strict`. With P(R) this is the core.
pub fn maximal_elements(strict: &StrictRelation) -> Vec<usize> {
    undominated(&strict.relation)
}

/// Alternatives with no incoming pair in `r`.
pub(crate) fn undominated(r: &Relation) -> Vec<usize> {
    let n = r.n();
    let mut dominated = vec![false; n];
    for (_, v) in r.pairs() {
        dominated[v] = true;
    }
    (0..n).filter(|&x| !dominated[x]).collect()
}

/// Whether every ordered pair of `set`, including `(x, x)`, lies in the
/// closure in both directions. Empty sets are rejected.
pub fn is_r_cycle(reach: &Reachability, set: &[usize]) -> bool {
    !set.is_empty() && set.iter().all(|&x| set.iter().all(|&y| reach.reaches(x, y)))
}
