//! Solution concepts: core, Schwartz set, Von Neumann–Morgenstern stable
//! sets, generalized stable sets, m-stable sets and w-stable sets.
//!
//! Checkers follow the definitions literally over R or R̄. Enumerators for
//! the generalized, m- and w-stable families are structural: they read the
//! answer off the maximal components of the contraction and re-verify every
//! emitted set with the matching checker. VNM stable sets have no such
//! structure and are found by exhaustive search under an `n` ceiling.
//!
//! Every enumeration emits sets in lexicographic order of their sorted
//! member ids and never emits the empty set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::contraction::{contraction, Condensation, MaximalFamily};
use crate::error::{Error, Result};
use crate::lex::{self, PrefixRule};
use crate::relation::{
    asymmetric_part, maximal_elements, undominated, transitive_closure_with, DecisionProblem, Reachability, StrictRelation,
    DEFAULT_DENSE_THRESHOLD,
};

/// Largest `n` for which exhaustive subset search is attempted.
pub const DEFAULT_ENUMERATION_CEILING: usize = 20;

/// Default number of sets materialized per enumeration.
pub const DEFAULT_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Concept {
    Core,
    Schwartz,
    VnmStable,
    GeneralizedStable,
    MStable,
    WStable,
}

impl Concept {
    pub const ALL: [Concept; 6] = [
        Concept::Core,
        Concept::Schwartz,
        Concept::VnmStable,
        Concept::GeneralizedStable,
        Concept::MStable,
        Concept::WStable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Concept::Core => "core",
            Concept::Schwartz => "schwartz",
            Concept::VnmStable => "vnm_stable",
            Concept::GeneralizedStable => "generalized_stable",
            Concept::MStable => "m_stable",
            Concept::WStable => "w_stable",
        }
    }

    /// Concepts whose answer is a family of sets rather than a single set.
    pub fn is_family(self) -> bool {
        !matches!(self, Concept::Core | Concept::Schwartz)
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Concept {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Concept::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown concept `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub concept: Concept,
    pub members: Vec<usize>,
    /// Set once the definitional checker has accepted `members`.
    pub verified: bool,
}

/// A possibly truncated enumeration. `total` is exact either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub concept: Concept,
    pub sets: Vec<SolutionSet>,
    pub total: BigUint,
    pub truncated: bool,
    /// False when the structural path was abandoned for exhaustive search.
    pub fast_path: bool,
    pub notes: Vec<String>,
}

impl Enumeration {
    pub fn member_sets(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.members.clone()).collect()
    }

    pub fn all_verified(&self) -> bool {
        self.sets.iter().all(|s| s.verified)
    }
}

/// M(X, P(R̄)) next to M(X, P(closure of P(R))). The two agree on
/// asymmetric relations and may differ when R has mutual pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceSetComparison {
    pub maximal_of_closure: Vec<usize>,
    pub maximal_of_strict_closure: Vec<usize>,
    pub diverge: bool,
}

/// Lazily caches the closure and the contraction of one problem.
#[derive(Debug)]
pub struct Analysis<'a> {
    problem: &'a DecisionProblem,
    dense_threshold: usize,
    ceiling: usize,
    verify: bool,
    closure: OnceLock<Reachability>,
    condensation: OnceLock<Condensation>,
    maximal: OnceLock<MaximalFamily>,
}

impl<'a> Analysis<'a> {
    pub fn new(problem: &'a DecisionProblem) -> Self {
        Self {
            problem,
            dense_threshold: DEFAULT_DENSE_THRESHOLD,
            ceiling: DEFAULT_ENUMERATION_CEILING,
            verify: true,
            closure: OnceLock::new(),
            condensation: OnceLock::new(),
            maximal: OnceLock::new(),
        }
    }

    pub fn with_dense_threshold(mut self, threshold: usize) -> Self {
        self.dense_threshold = threshold;
        self
    }

    pub fn with_ceiling(mut self, ceiling: usize) -> Self {
        self.ceiling = ceiling;
        self
    }

    /// Whether enumerated sets are re-checked against the definitions.
    /// Verification needs the full closure.
    pub fn with_verification(mut self, verify: bool) -> Self {
        self.verify = verify;
        self
    }

    pub fn problem(&self) -> &'a DecisionProblem {
        self.problem
    }

    pub fn closure(&self) -> &Reachability {
        self.closure.get_or_init(|| transitive_closure_with(self.problem, self.dense_threshold))
    }

    pub fn condensation(&self) -> &Condensation {
        self.condensation.get_or_init(|| contraction(self.problem))
    }

    pub fn maximal_family(&self) -> &MaximalFamily {
        self.maximal.get_or_init(|| self.condensation().maximal())
    }

    fn membership(&self, f: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.problem.n()];
        for &x in f {
            inside[x] = true;
        }
        inside
    }

    // ---- single-set concepts ----

    pub fn core(&self) -> SolutionSet {
        let strict = StrictRelation::of_problem_with(self.problem, self.dense_threshold);
        SolutionSet { concept: Concept::Core, members: maximal_elements(&strict), verified: true }
    }

    /// Union of the minimal R-undominated sets, read off the contraction as
    /// the union of the maximal components. With verification on it is
    /// cross-checked against M(X, P(R̄)).
    pub fn schwartz_set(&self) -> SolutionSet {
        let members = self.maximal_family().union();
        let verified = self.verify && {
            let strict = StrictRelation::of_closure(self.closure());
            maximal_elements(&strict) == members
        };
        SolutionSet { concept: Concept::Schwartz, members, verified }
    }

    /// M(X, P(closure of P(R))).
    pub fn deb_choice_set(&self) -> Vec<usize> {
        let strict = StrictRelation::closure_of_strict(self.problem, self.dense_threshold);
        undominated(&asymmetric_part(strict.relation()))
    }

    pub fn compare_choice_sets(&self) -> ChoiceSetComparison {
        let maximal_of_closure = maximal_elements(&StrictRelation::of_closure(self.closure()));
        let maximal_of_strict_closure = self.deb_choice_set();
        let diverge = maximal_of_closure != maximal_of_strict_closure;
        ChoiceSetComparison { maximal_of_closure, maximal_of_strict_closure, diverge }
    }

    // ---- checkers ----

    /// Internal stability under R between distinct members, external
    /// stability of every outsider. `f` must hold valid ids.
    pub fn is_vnm_stable(&self, f: &[usize]) -> bool {
        if f.is_empty() {
            return false;
        }
        let p = self.problem;
        let inside = self.membership(f);
        let internal = f.iter().all(|&x| p.successors(x).iter().all(|&y| y == x || !inside[y]));
        let external = (0..p.n())
            .filter(|&z| !inside[z])
            .all(|z| p.predecessors(z).iter().any(|&x| inside[x]));
        internal && external
    }

    /// VNM stability with respect to R̄.
    pub fn is_generalized_stable(&self, f: &[usize]) -> bool {
        if f.is_empty() {
            return false;
        }
        let reach = self.closure();
        let inside = self.membership(f);
        let internal = f.iter().all(|&x| f.iter().all(|&y| x == y || !reach.reaches(x, y)));
        let external = (0..self.problem.n())
            .filter(|&z| !inside[z])
            .all(|z| f.iter().any(|&x| reach.reaches(x, z)));
        internal && external
    }

    pub fn is_m_stable(&self, f: &[usize]) -> bool {
        if f.is_empty() {
            return false;
        }
        let reach = self.closure();
        let inside = self.membership(f);
        let symmetric = f
            .iter()
            .all(|&x| f.iter().all(|&y| !reach.reaches(x, y) || reach.reaches(y, x)));
        let shielded = f
            .iter()
            .all(|&x| (0..self.problem.n()).all(|y| inside[y] || !reach.reaches(y, x)));
        symmetric && shielded
    }

    pub fn is_w_stable(&self, f: &[usize]) -> bool {
        if f.is_empty() {
            return false;
        }
        let reach = self.closure();
        let inside = self.membership(f);
        let internal = f.iter().all(|&x| f.iter().all(|&y| x == y || !reach.reaches(x, y)));
        let external = f.iter().all(|&x| {
            (0..self.problem.n()).all(|y| inside[y] || !reach.reaches(y, x) || reach.reaches(x, y))
        });
        internal && external
    }

    /// Membership test for any concept. For core and Schwartz the set must
    /// equal the computed set.
    pub fn check(&self, concept: Concept, f: &[usize]) -> bool {
        let mut f = f.to_vec();
        f.sort_unstable();
        f.dedup();
        match concept {
            Concept::Core => self.core().members == f,
            Concept::Schwartz => self.schwartz_set().members == f,
            Concept::VnmStable => self.is_vnm_stable(&f),
            Concept::GeneralizedStable => self.is_generalized_stable(&f),
            Concept::MStable => self.is_m_stable(&f),
            Concept::WStable => self.is_w_stable(&f),
        }
    }

    // ---- counts ----

    /// ∏ (|X*_i| + 1) − 1 over the maximal components.
    pub fn count_w_stable(&self) -> BigUint {
        let product = self
            .maximal_family()
            .ground_sets
            .iter()
            .fold(BigUint::from(1u32), |acc, g| acc * BigUint::from(g.len() + 1));
        product - 1u32
    }

    /// ∏ |X*_i| over the maximal components.
    pub fn count_generalized_stable(&self) -> BigUint {
        self.maximal_family()
            .ground_sets
            .iter()
            .fold(BigUint::from(1u32), |acc, g| acc * BigUint::from(g.len()))
    }

    /// 2^k − 1 for k maximal components.
    pub fn count_m_stable(&self) -> BigUint {
        (BigUint::from(1u32) << self.maximal_family().len()) - 1u32
    }

    // ---- enumerations ----

    pub fn w_stable_sets(&self, limit: usize) -> Enumeration {
        let family = self.maximal_family();
        let mut rule = GroupRule::new(self.problem.n(), family);
        let sets = lex::enumerate(&family.union(), limit, &mut AtMostOne(&mut rule));
        self.finish(Concept::WStable, sets, self.count_w_stable(), Self::is_w_stable)
    }

    pub fn generalized_stable_sets(&self, limit: usize) -> Enumeration {
        let family = self.maximal_family();
        let mut rule = ExactlyOne::new(GroupRule::new(self.problem.n(), family));
        let sets = lex::enumerate(&family.union(), limit, &mut rule);
        self.finish(Concept::GeneralizedStable, sets, self.count_generalized_stable(), Self::is_generalized_stable)
    }

    /// Non-empty unions of maximal-component ground sets. If any emitted
    /// set fails the definitional check, the structural path is dropped
    /// in favour of exhaustive search (within the ceiling) and the
    /// discrepancy is recorded in `notes`.
    pub fn m_stable_sets(&self, limit: usize) -> Enumeration {
        let family = self.maximal_family();
        let mut rule = WholeGroups::new(GroupRule::new(self.problem.n(), family));
        let sets = lex::enumerate(&family.union(), limit, &mut rule);
        let fast = self.finish(Concept::MStable, sets, self.count_m_stable(), Self::is_m_stable);
        if !self.verify || fast.all_verified() {
            return fast;
        }

        let rejected: Vec<Vec<usize>> =
            fast.sets.iter().filter(|s| !s.verified).map(|s| s.members.clone()).collect();
        let note = format!("structural m-stable path disabled: checker rejected {rejected:?}");
        match self.exhaustive(Concept::MStable, limit, |f| self.is_m_stable(f)) {
            Ok(mut slow) => {
                slow.notes.push(note);
                slow
            }
            Err(_) => {
                let mut fast = fast;
                fast.notes.push(note);
                fast.notes.push("exhaustive fallback skipped: problem too large".to_string());
                fast
            }
        }
    }

    /// Exhaustive search; fails with [`Error::TooLarge`] above the ceiling.
    pub fn vnm_stable_sets(&self, limit: usize) -> Result<Enumeration> {
        let p = self.problem;
        let n = p.n();
        if n > self.ceiling || n > 63 {
            return Err(Error::TooLarge { n, ceiling: self.ceiling.min(63) });
        }
        let mut dominates_other = vec![0u64; n];
        let mut dominated_by = vec![0u64; n];
        for &(u, v) in p.edges() {
            if u != v {
                dominates_other[u] |= 1 << v;
            }
            dominated_by[v] |= 1 << u;
        }
        let mut found: Vec<Vec<usize>> = (1..1u64 << n)
            .filter(|&f| {
                (0..n).all(|x| {
                    if f >> x & 1 == 1 {
                        dominates_other[x] & f == 0
                    } else {
                        dominated_by[x] & f != 0
                    }
                })
            })
            .map(|f| (0..n).filter(|&x| f >> x & 1 == 1).collect())
            .collect();
        found.sort_unstable();
        let total = BigUint::from(found.len());
        found.truncate(limit);
        let mut e = self.finish(Concept::VnmStable, found, total, |a, f| a.is_vnm_stable(f));
        e.fast_path = false;
        Ok(e)
    }

    pub fn enumerate(&self, concept: Concept, limit: usize) -> Result<Enumeration> {
        Ok(match concept {
            Concept::VnmStable => self.vnm_stable_sets(limit)?,
            Concept::GeneralizedStable => self.generalized_stable_sets(limit),
            Concept::MStable => self.m_stable_sets(limit),
            Concept::WStable => self.w_stable_sets(limit),
            Concept::Core | Concept::Schwartz => {
                let set = if concept == Concept::Core { self.core() } else { self.schwartz_set() };
                let total = BigUint::from(1u32);
                Enumeration {
                    concept,
                    truncated: limit == 0,
                    sets: if limit == 0 { Vec::new() } else { vec![set] },
                    total,
                    fast_path: true,
                    notes: Vec::new(),
                }
            }
        })
    }

    fn exhaustive(&self, concept: Concept, limit: usize, accept: impl Fn(&[usize]) -> bool) -> Result<Enumeration> {
        let n = self.problem.n();
        if n > self.ceiling || n > 63 {
            return Err(Error::TooLarge { n, ceiling: self.ceiling.min(63) });
        }
        let mut found: Vec<Vec<usize>> = (1..1u64 << n)
            .map(|f| (0..n).filter(|&x| f >> x & 1 == 1).collect::<Vec<_>>())
            .filter(|f| accept(f))
            .collect();
        found.sort_unstable();
        let total = BigUint::from(found.len());
        found.truncate(limit);
        let truncated = total > BigUint::from(found.len());
        let sets = found.into_iter().map(|members| SolutionSet { concept, members, verified: true }).collect();
        Ok(Enumeration { concept, sets, total, truncated, fast_path: false, notes: Vec::new() })
    }

    fn finish(
        &self,
        concept: Concept,
        sets: Vec<Vec<usize>>,
        total: BigUint,
        check: impl Fn(&Self, &[usize]) -> bool,
    ) -> Enumeration {
        let truncated = total > BigUint::from(sets.len());
        let sets = sets
            .into_iter()
            .map(|members| {
                let verified = self.verify && check(self, &members);
                SolutionSet { concept, members, verified }
            })
            .collect();
        Enumeration { concept, sets, total, truncated, fast_path: true, notes: Vec::new() }
    }
}

/// Group bookkeeping shared by the structural enumerators: each candidate
/// belongs to exactly one maximal component.
struct GroupRule {
    group_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    taken: Vec<usize>,
}

impl GroupRule {
    fn new(n: usize, family: &MaximalFamily) -> Self {
        let mut group_of = vec![usize::MAX; n];
        for (g, set) in family.ground_sets.iter().enumerate() {
            for &x in set {
                group_of[x] = g;
            }
        }
        let members = family.ground_sets.clone();
        let taken = vec![0; members.len()];
        Self { group_of, members, taken }
    }
}

/// At most one alternative per maximal component: the w-stable family.
struct AtMostOne<'r>(&'r mut GroupRule);

impl PrefixRule for AtMostOne<'_> {
    fn can_push(&self, e: usize) -> bool {
        self.0.taken[self.0.group_of[e]] == 0
    }
    fn push(&mut self, e: usize) {
        let g = self.0.group_of[e];
        self.0.taken[g] += 1;
    }
    fn pop(&mut self, e: usize) {
        let g = self.0.group_of[e];
        self.0.taken[g] -= 1;
    }
    fn is_complete(&self) -> bool {
        true
    }
}

/// Exactly one alternative per maximal component: the generalized stable
/// family. `open` holds `(largest member, group)` of every untouched group;
/// a push is allowed only if each other untouched group can still be
/// reached later.
struct ExactlyOne {
    groups: GroupRule,
    open: BTreeSet<(usize, usize)>,
}

impl ExactlyOne {
    fn new(groups: GroupRule) -> Self {
        let open = groups.members.iter().enumerate().map(|(g, m)| (*m.last().expect("non-empty"), g)).collect();
        Self { groups, open }
    }

    fn key(&self, g: usize) -> (usize, usize) {
        (*self.groups.members[g].last().expect("non-empty"), g)
    }
}

impl PrefixRule for ExactlyOne {
    fn can_push(&self, e: usize) -> bool {
        let g = self.groups.group_of[e];
        if self.groups.taken[g] > 0 {
            return false;
        }
        let mut open = self.open.iter().filter(|&&(_, h)| h != g);
        open.next().is_none_or(|&(last, _)| last > e)
    }
    fn push(&mut self, e: usize) {
        let g = self.groups.group_of[e];
        self.groups.taken[g] += 1;
        let key = self.key(g);
        self.open.remove(&key);
    }
    fn pop(&mut self, e: usize) {
        let g = self.groups.group_of[e];
        self.groups.taken[g] -= 1;
        let key = self.key(g);
        self.open.insert(key);
    }
    fn is_complete(&self) -> bool {
        self.open.is_empty()
    }
}

/// Unions of whole maximal components: the m-stable family. `pending`
/// holds `(next missing member, group)` for every touched but incomplete
/// group; the next pushed element may not skip past any of them.
struct WholeGroups {
    groups: GroupRule,
    pending: BTreeSet<(usize, usize)>,
}

impl WholeGroups {
    fn new(groups: GroupRule) -> Self {
        Self { groups, pending: BTreeSet::new() }
    }

    fn next_missing(&self, g: usize) -> Option<(usize, usize)> {
        self.groups.members[g].get(self.groups.taken[g]).map(|&m| (m, g))
    }
}

impl PrefixRule for WholeGroups {
    fn can_push(&self, e: usize) -> bool {
        let g = self.groups.group_of[e];
        self.next_missing(g) == Some((e, g)) && self.pending.first().is_none_or(|&(m, _)| m >= e)
    }
    fn push(&mut self, e: usize) {
        let g = self.groups.group_of[e];
        if self.groups.taken[g] > 0 {
            self.pending.remove(&(e, g));
        }
        self.groups.taken[g] += 1;
        if let Some(key) = self.next_missing(g) {
            self.pending.insert(key);
        }
    }
    fn pop(&mut self, e: usize) {
        let g = self.groups.group_of[e];
        if let Some(key) = self.next_missing(g) {
            self.pending.remove(&key);
        }
        self.groups.taken[g] -= 1;
        if self.groups.taken[g] > 0 {
            self.pending.insert((e, g));
        }
    }
    fn is_complete(&self) -> bool {
        self.pending.is_empty()
    }
}

// Free-function forms of the `Analysis` methods, with default settings.

pub fn core(p: &DecisionProblem) -> SolutionSet {
    Analysis::new(p).core()
}

pub fn schwartz_set(p: &DecisionProblem) -> SolutionSet {
    Analysis::new(p).schwartz_set()
}

pub fn is_vnm_stable(p: &DecisionProblem, f: &[usize]) -> bool {
    Analysis::new(p).is_vnm_stable(f)
}

pub fn is_generalized_stable(p: &DecisionProblem, f: &[usize]) -> bool {
    Analysis::new(p).is_generalized_stable(f)
}

pub fn is_m_stable(p: &DecisionProblem, f: &[usize]) -> bool {
    Analysis::new(p).is_m_stable(f)
}

pub fn is_w_stable(p: &DecisionProblem, f: &[usize]) -> bool {
    Analysis::new(p).is_w_stable(f)
}

pub fn vnm_stable_sets(p: &DecisionProblem, limit: usize) -> Result<Enumeration> {
    Analysis::new(p).vnm_stable_sets(limit)
}

pub fn generalized_stable_sets(p: &DecisionProblem, limit: usize) -> Enumeration {
    Analysis::new(p).generalized_stable_sets(limit)
}

pub fn m_stable_sets(p: &DecisionProblem, limit: usize) -> Enumeration {
    Analysis::new(p).m_stable_sets(limit)
}

pub fn w_stable_sets(p: &DecisionProblem, limit: usize) -> Enumeration {
    Analysis::new(p).w_stable_sets(limit)
}

pub fn count_w_stable(p: &DecisionProblem) -> BigUint {
    Analysis::new(p).count_w_stable()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(n: usize, edges: &[(usize, usize)]) -> DecisionProblem {
        DecisionProblem::new(n, edges.iter().copied()).unwrap()
    }

    fn cycle(k: usize) -> DecisionProblem {
        problem(k, &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>())
    }

    fn chain() -> DecisionProblem {
        problem(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn two_pairs() -> DecisionProblem {
        problem(4, &[(0, 1), (1, 0), (2, 3), (3, 2)])
    }

    fn cycle_plus_isolated() -> DecisionProblem {
        problem(4, &[(0, 1), (1, 2), (2, 0)])
    }

    fn sets(e: &Enumeration) -> Vec<Vec<usize>> {
        e.member_sets()
    }

    #[test]
    fn concept_names_round_trip() {
        for c in Concept::ALL {
            assert_eq!(c.name().parse::<Concept>().unwrap(), c);
        }
        assert!("kernel".parse::<Concept>().is_err());
    }

    #[test]
    fn core_examples() {
        assert!(core(&cycle(3)).members.is_empty());
        assert_eq!(core(&chain()).members, vec![0]);
        assert_eq!(core(&problem(2, &[(0, 1), (1, 0)])).members, vec![0, 1]);
    }

    #[test]
    fn schwartz_examples() {
        assert_eq!(schwartz_set(&cycle(3)).members, vec![0, 1, 2]);
        assert_eq!(schwartz_set(&chain()).members, vec![0]);
        assert_eq!(schwartz_set(&two_pairs()).members, vec![0, 1, 2, 3]);
        assert!(schwartz_set(&two_pairs()).verified);
    }

    #[test]
    fn deb_choice_set_diverges_on_mutual_pairs() {
        // 0 and 1 dominate each other; 2 dominates 0 strictly.
        let p = problem(3, &[(0, 1), (1, 0), (2, 0)]);
        let a = Analysis::new(&p);
        assert_eq!(a.schwartz_set().members, vec![2]);
        assert_eq!(a.deb_choice_set(), vec![1, 2]);
        assert_eq!(a.core().members, vec![1, 2]);
        let cmp = a.compare_choice_sets();
        assert!(cmp.diverge);
        assert_eq!(cmp.maximal_of_closure, vec![2]);
    }

    #[test]
    fn vnm_checker_examples() {
        let open_chain = problem(3, &[(0, 1), (1, 2)]);
        assert!(is_vnm_stable(&open_chain, &[0, 2]));
        assert!(!is_vnm_stable(&cycle(3), &[0]));
        assert!(is_vnm_stable(&problem(3, &[]), &[0, 1, 2]));
        assert!(!is_vnm_stable(&problem(3, &[]), &[]));
    }

    #[test]
    fn vnm_self_loop_does_not_break_internal_stability() {
        let p = problem(2, &[(0, 0), (0, 1)]);
        assert!(is_vnm_stable(&p, &[0]));
    }

    #[test]
    fn vnm_enumeration_examples() {
        assert!(sets(&vnm_stable_sets(&cycle(3), 10).unwrap()).is_empty());
        assert_eq!(sets(&vnm_stable_sets(&cycle(4), 10).unwrap()), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(sets(&vnm_stable_sets(&problem(2, &[]), 10).unwrap()), vec![vec![0, 1]]);
    }

    #[test]
    fn vnm_enumeration_respects_ceiling() {
        let p = problem(21, &[]);
        assert_eq!(vnm_stable_sets(&p, 1), Err(Error::TooLarge { n: 21, ceiling: 20 }));
        let p = problem(5, &[]);
        assert!(Analysis::new(&p).with_ceiling(4).vnm_stable_sets(1).is_err());
    }

    #[test]
    fn generalized_examples() {
        assert_eq!(sets(&generalized_stable_sets(&cycle(3), 10)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(sets(&generalized_stable_sets(&chain(), 10)), vec![vec![0]]);
        assert_eq!(
            sets(&generalized_stable_sets(&two_pairs(), 10)),
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        assert!(generalized_stable_sets(&two_pairs(), 10).all_verified());
    }

    #[test]
    fn generalized_with_interleaved_components() {
        // components {0,3} and {1,2}
        let p = problem(4, &[(0, 3), (3, 0), (1, 2), (2, 1)]);
        let e = generalized_stable_sets(&p, 10);
        assert_eq!(sets(&e), vec![vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(e.total, BigUint::from(4u32));
    }

    #[test]
    fn m_checker_examples() {
        assert!(is_m_stable(&cycle(3), &[0, 1, 2]));
        assert!(!is_m_stable(&cycle(3), &[0]));
        assert!(is_m_stable(&chain(), &[0]));
    }

    #[test]
    fn m_enumeration_examples() {
        assert_eq!(sets(&m_stable_sets(&cycle(3), 10)), vec![vec![0, 1, 2]]);
        assert_eq!(
            sets(&m_stable_sets(&two_pairs(), 10)),
            vec![vec![0, 1], vec![0, 1, 2, 3], vec![2, 3]]
        );
        assert_eq!(sets(&m_stable_sets(&chain(), 10)), vec![vec![0]]);
        assert!(m_stable_sets(&two_pairs(), 10).fast_path);
    }

    #[test]
    fn m_enumeration_with_interleaved_components() {
        let p = problem(5, &[(0, 3), (3, 0), (1, 4), (4, 1), (2, 2)]);
        let e = m_stable_sets(&p, 100);
        let mut expected = vec![
            vec![0, 3],
            vec![1, 4],
            vec![2],
            vec![0, 1, 3, 4],
            vec![0, 2, 3],
            vec![1, 2, 4],
            vec![0, 1, 2, 3, 4],
        ];
        expected.sort();
        assert_eq!(sets(&e), expected);
        assert!(e.all_verified());
    }

    #[test]
    fn w_checker_examples() {
        assert!(is_w_stable(&cycle(3), &[0]));
        assert!(!is_w_stable(&cycle(3), &[0, 1]));
        assert!(!is_w_stable(&chain(), &[1]));
        assert!(!is_w_stable(&chain(), &[]));
    }

    #[test]
    fn w_enumeration_examples() {
        assert_eq!(sets(&w_stable_sets(&cycle(3), 10)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(sets(&w_stable_sets(&chain(), 10)), vec![vec![0]]);
        assert_eq!(
            sets(&w_stable_sets(&cycle_plus_isolated(), 10)),
            vec![vec![0], vec![0, 3], vec![1], vec![1, 3], vec![2], vec![2, 3], vec![3]]
        );
    }

    #[test]
    fn w_counts() {
        assert_eq!(count_w_stable(&cycle(3)), BigUint::from(3u32));
        assert_eq!(count_w_stable(&cycle_plus_isolated()), BigUint::from(7u32));
        assert_eq!(count_w_stable(&problem(1, &[(0, 0)])), BigUint::from(1u32));
    }

    #[test]
    fn truncation_keeps_exact_total() {
        let p = problem(10, &[]);
        let e = w_stable_sets(&p, 5);
        assert_eq!(e.sets.len(), 5);
        assert!(e.truncated);
        assert_eq!(e.total, BigUint::from(1023u32));
        assert_eq!(sets(&e)[..2], [vec![0], vec![0, 1]]);
    }

    #[test]
    fn large_counts_do_not_overflow() {
        let p = problem(200, &[]);
        let a = Analysis::new(&p).with_verification(false);
        assert_eq!(a.count_w_stable(), (BigUint::from(1u32) << 200) - 1u32);
        assert_eq!(a.count_m_stable(), (BigUint::from(1u32) << 200) - 1u32);
        assert_eq!(a.count_generalized_stable(), BigUint::from(1u32));
    }

    #[test]
    fn check_dispatch() {
        let a_cycle = cycle(3);
        let a = Analysis::new(&a_cycle);
        assert!(a.check(Concept::WStable, &[2]));
        assert!(a.check(Concept::Schwartz, &[2, 1, 0]));
        assert!(a.check(Concept::Core, &[]));
        assert!(!a.check(Concept::MStable, &[0]));
    }
}
