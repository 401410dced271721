//! Oracle-equivalence sweep over exhaustive and random corpora.
//!
//! Every instance is solved twice, once through the structural paths and
//! once through [`crate::oracle`], and each property below is compared.
//! Instances are checked in parallel; the report is assembled in corpus
//! order.

use rayon::prelude::*;
use serde::Serialize;

use crate::contraction::strong_components;
use crate::corpus::{exhaustive, random_corpus};
use crate::io::format::write_problem;
use crate::oracle::{self, OracleRelations};
use crate::relation::DecisionProblem;
use crate::solutions::{Analysis, Concept};
use crate::witness::verify_theorem1_forward;

pub const DEFAULT_RANDOM_INSTANCES: usize = 500;
pub const DEFAULT_RANDOM_N_MAX: usize = 10;

#[derive(Debug, Clone)]
pub struct SelftestConfig {
    /// Exhaustive corpora for every `n` up to this (at most 4).
    pub exhaustive_n_max: usize,
    pub random_instances: usize,
    pub random_n_max: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            exhaustive_n_max: 3,
            random_instances: DEFAULT_RANDOM_INSTANCES,
            random_n_max: DEFAULT_RANDOM_N_MAX,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: &'static str,
    pub detail: String,
    pub problem: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct InstanceOutcome {
    pub mismatches: Vec<Mismatch>,
    /// M(X, P(R̄)) differs from M(X, P(closure of P(R))).
    pub choice_sets_diverge: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub instances: usize,
    pub mismatches: Vec<Mismatch>,
    pub choice_set_divergences: usize,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the structural answers for `p` against the oracle. `p.n()` must
/// be within the oracle ceiling.
pub fn check_instance(p: &DecisionProblem) -> InstanceOutcome {
    let mut out = InstanceOutcome::default();
    let mut fail = |check: &'static str, detail: String| {
        out.mismatches.push(Mismatch { check, detail, problem: write_problem(p) });
    };
    let a = Analysis::new(p);
    let rel = OracleRelations::new(p);
    let n = p.n();

    // closure: BFS vs Warshall
    let bfs: Vec<Vec<bool>> =
        (0..n).map(|u| (0..n).map(|v| a.closure().reaches(u, v)).collect()).collect();
    if bfs != rel.closure {
        fail("closure", "BFS closure differs from Warshall".into());
    }

    // components vs mutual reachability
    let comps = strong_components(p);
    let mut comp_of = vec![0; n];
    for c in &comps {
        for &x in &c.members {
            comp_of[x] = c.index;
        }
    }
    for u in 0..n {
        for v in 0..n {
            let mutual = u == v || (rel.closure[u][v] && rel.closure[v][u]);
            if (comp_of[u] == comp_of[v]) != mutual {
                fail("components", format!("alternatives {u} and {v}"));
            }
        }
    }

    let oracle_sets = |c: Concept| oracle::oracle_enumerate(p, c).expect("within ceiling").sets;

    let w = a.w_stable_sets(usize::MAX);
    let w_oracle = oracle_sets(Concept::WStable);
    if w.sets.is_empty() {
        fail("existence", "no w-stable set".into());
    }
    if w.member_sets() != w_oracle {
        fail("w_stable", format!("fast {:?} vs oracle {:?}", w.member_sets(), w_oracle));
    }
    if !w.all_verified() {
        fail("w_stable", "an emitted set failed is_w_stable".into());
    }
    if a.count_w_stable() != w_oracle.len().into() {
        fail("w_count", format!("formula {} vs oracle {}", a.count_w_stable(), w_oracle.len()));
    }

    let g = a.generalized_stable_sets(usize::MAX);
    let g_oracle = oracle_sets(Concept::GeneralizedStable);
    if g.member_sets() != g_oracle {
        fail("generalized_stable", format!("fast {:?} vs oracle {:?}", g.member_sets(), g_oracle));
    }
    if let Some(bad) = g.sets.iter().find(|s| !a.is_w_stable(&s.members)) {
        fail("generalized_in_w", format!("{:?} is not w-stable", bad.members));
    }

    let m = a.m_stable_sets(usize::MAX);
    let m_oracle = oracle_sets(Concept::MStable);
    if !m.fast_path || m.member_sets() != m_oracle {
        fail("m_stable", format!("fast {:?} vs oracle {:?} {:?}", m.member_sets(), m_oracle, m.notes));
    }

    match a.vnm_stable_sets(usize::MAX) {
        Ok(v) if v.member_sets() == oracle_sets(Concept::VnmStable) => {}
        Ok(v) => fail("vnm_stable", format!("search {:?} vs oracle", v.member_sets())),
        Err(e) => fail("vnm_stable", e.to_string()),
    }

    // union law
    let schwartz = a.schwartz_set().members;
    let mu_union = a.maximal_family().union();
    let gocha = oracle::oracle_gocha(p).expect("within ceiling");
    let mut w_union: Vec<usize> = w_oracle.iter().flatten().copied().collect();
    w_union.sort_unstable();
    w_union.dedup();
    if !(w_union == schwartz && schwartz == mu_union && mu_union == gocha) {
        fail("union_law", format!("w {w_union:?} schwartz {schwartz:?} mu {mu_union:?} gocha {gocha:?}"));
    }

    // core inclusion: into the Deb set always, into the Schwartz set when
    // R is asymmetric
    let core = a.core().members;
    if core != oracle::core(p) {
        fail("core", format!("{core:?} vs oracle {:?}", oracle::core(p)));
    }
    let deb = a.deb_choice_set();
    if !core.iter().all(|x| deb.contains(x)) {
        fail("core_in_deb", format!("core {core:?} deb {deb:?}"));
    }
    if p.is_asymmetric() && !core.iter().all(|x| schwartz.contains(x)) {
        fail("core_in_schwartz", format!("core {core:?} schwartz {schwartz:?}"));
    }
    out.choice_sets_diverge = deb != schwartz;
    if p.is_asymmetric() && out.choice_sets_diverge {
        fail("deb_equivalence", format!("deb {deb:?} schwartz {schwartz:?}"));
    }

    let witness = verify_theorem1_forward(&a, usize::MAX);
    if !witness.passes() {
        fail("witness", format!("{:?}", witness.failures));
    }

    out
}

pub fn run_corpus(problems: &[DecisionProblem]) -> SelftestReport {
    let outcomes: Vec<InstanceOutcome> = problems.par_iter().map(check_instance).collect();
    let mut report = SelftestReport { instances: problems.len(), ..Default::default() };
    for o in outcomes {
        report.choice_set_divergences += usize::from(o.choice_sets_diverge);
        report.mismatches.extend(o.mismatches);
    }
    report
}

pub fn run(config: &SelftestConfig) -> SelftestReport {
    let mut problems: Vec<DecisionProblem> = Vec::new();
    for n in 1..=config.exhaustive_n_max.min(4) {
        problems.extend(exhaustive(n));
    }
    problems.extend(random_corpus(config.seed, config.random_instances, config.random_n_max));
    run_corpus(&problems)
}
