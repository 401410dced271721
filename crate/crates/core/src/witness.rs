//! Finite witnesses for the existence theorem of w-stable sets.
//!
//! Given a w-stable set `F`, the excluded-set topology generated by `F`
//! declares a set open when it is disjoint from `F` or is the whole space.
//! Every open cover must then contain `X` itself, so the space is compact,
//! and the relation is generalized upper tc-semicontinuous when every set
//! `xP(R̄) = { y : x R̄ y and not y R̄ x }` is open. The witness records each
//! of these sets and its openness verdict; topologies are never
//! materialized, only the openness rule is applied.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::DecisionProblem;
use crate::solutions::Analysis;

pub const OPEN_SET_RULE: &str = "U is open iff U is disjoint from F or U = X";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Openness {
    DisjointFromExcluded,
    WholeSpace,
    NotOpen,
}

impl Openness {
    pub fn is_open(self) -> bool {
        self != Openness::NotOpen
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Compactness {
    /// Every open cover contains X, so {X} is a finite subcover.
    CoverContainsWholeSpace,
    /// F is empty, the topology is discrete and X is finite.
    FiniteDiscrete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointVerdict {
    pub point: usize,
    /// `xP(R̄)`, ascending.
    pub strict_upper: Vec<usize>,
    pub openness: Openness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyWitness {
    pub excluded_set: Vec<usize>,
    pub open_set_rule: String,
    pub points: Vec<PointVerdict>,
    pub compact: bool,
    pub compactness: Compactness,
}

impl TopologyWitness {
    pub fn passes(&self) -> bool {
        self.compact && self.points.iter().all(|v| v.openness.is_open())
    }
}

/// Openness of `set` under the excluded-set rule for `excluded` on `0..n`.
/// Both slices must be sorted.
pub fn excluded_set_openness(n: usize, excluded: &[usize], set: &[usize]) -> Openness {
    if set.len() == n {
        Openness::WholeSpace
    } else if set.iter().all(|x| excluded.binary_search(x).is_err()) {
        Openness::DisjointFromExcluded
    } else {
        Openness::NotOpen
    }
}

/// Builds the witness for `f`, which must be w-stable.
pub fn build_witness(analysis: &Analysis<'_>, f: &[usize]) -> Result<TopologyWitness> {
    let mut excluded = f.to_vec();
    excluded.sort_unstable();
    excluded.dedup();
    if !analysis.is_w_stable(&excluded) {
        return Err(Error::NotWStable { members: excluded });
    }
    let n = analysis.problem().n();
    let reach = analysis.closure();
    let points = (0..n)
        .map(|x| {
            let strict_upper: Vec<usize> = reach
                .relation()
                .successors(x)
                .filter(|&y| !reach.reaches(y, x))
                .collect();
            let openness = excluded_set_openness(n, &excluded, &strict_upper);
            PointVerdict { point: x, strict_upper, openness }
        })
        .collect();
    let compactness = if excluded.is_empty() {
        Compactness::FiniteDiscrete
    } else {
        Compactness::CoverContainsWholeSpace
    };
    Ok(TopologyWitness {
        excluded_set: excluded,
        open_set_rule: OPEN_SET_RULE.to_string(),
        points,
        compact: true,
        compactness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFailure {
    pub excluded_set: Vec<usize>,
    /// Points whose `xP(R̄)` is not open, or the checker's complaint.
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub checked: usize,
    pub passed: usize,
    #[serde(with = "crate::io::report::biguint_string")]
    pub total_w_stable: BigUint,
    pub truncated: bool,
    pub failures: Vec<WitnessFailure>,
}

impl WitnessReport {
    /// True when at least one witness was built and none failed.
    pub fn passes(&self) -> bool {
        self.checked > 0 && self.failures.is_empty()
    }
}

/// Builds and checks a witness for every w-stable set, up to `limit` sets.
pub fn verify_theorem1_forward(analysis: &Analysis<'_>, limit: usize) -> WitnessReport {
    let enumeration = analysis.w_stable_sets(limit);
    let mut report = WitnessReport {
        checked: 0,
        passed: 0,
        total_w_stable: enumeration.total.clone(),
        truncated: enumeration.truncated,
        failures: Vec::new(),
    };
    for set in &enumeration.sets {
        report.checked += 1;
        match build_witness(analysis, &set.members) {
            Ok(w) if w.passes() => report.passed += 1,
            Ok(w) => {
                let closed: Vec<usize> =
                    w.points.iter().filter(|v| !v.openness.is_open()).map(|v| v.point).collect();
                report.failures.push(WitnessFailure {
                    excluded_set: set.members.clone(),
                    reason: format!("xP(R̄) not open for x in {closed:?}"),
                });
            }
            Err(e) => report
                .failures
                .push(WitnessFailure { excluded_set: set.members.clone(), reason: e.to_string() }),
        }
    }
    report
}

/// [`verify_theorem1_forward`] with default analysis settings.
pub fn verify_problem(p: &DecisionProblem, limit: usize) -> WitnessReport {
    verify_theorem1_forward(&Analysis::new(p), limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(n: usize, edges: &[(usize, usize)]) -> DecisionProblem {
        DecisionProblem::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn cycle_witness_has_empty_strict_sets() {
        let p = problem(3, &[(0, 1), (1, 2), (2, 0)]);
        let w = build_witness(&Analysis::new(&p), &[0]).unwrap();
        assert!(w.points.iter().all(|v| v.strict_upper.is_empty()));
        assert!(w.passes());
        assert_eq!(w.compactness, Compactness::CoverContainsWholeSpace);
    }

    #[test]
    fn chain_witness() {
        let p = problem(3, &[(0, 1), (1, 2), (0, 2)]);
        let w = build_witness(&Analysis::new(&p), &[0]).unwrap();
        let uppers: Vec<_> = w.points.iter().map(|v| v.strict_upper.clone()).collect();
        assert_eq!(uppers, vec![vec![1, 2], vec![2], vec![]]);
        assert!(w.points.iter().all(|v| v.openness == Openness::DisjointFromExcluded));
        assert!(w.passes());
    }

    #[test]
    fn non_w_stable_set_is_rejected() {
        let p = problem(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            build_witness(&Analysis::new(&p), &[1]),
            Err(Error::NotWStable { members: vec![1] })
        );
    }

    #[test]
    fn openness_rule() {
        assert_eq!(excluded_set_openness(3, &[0], &[0, 1, 2]), Openness::WholeSpace);
        assert_eq!(excluded_set_openness(3, &[0], &[1, 2]), Openness::DisjointFromExcluded);
        assert_eq!(excluded_set_openness(3, &[0], &[0, 1]), Openness::NotOpen);
        assert_eq!(excluded_set_openness(3, &[0], &[]), Openness::DisjointFromExcluded);
    }

    #[test]
    fn forward_direction_examples() {
        let cycle = problem(3, &[(0, 1), (1, 2), (2, 0)]);
        let r = verify_problem(&cycle, 100);
        assert_eq!((r.checked, r.passed), (3, 3));
        assert!(r.passes());

        let chain = problem(3, &[(0, 1), (1, 2), (0, 2)]);
        let r = verify_problem(&chain, 100);
        assert_eq!((r.checked, r.passed), (1, 1));
    }
}
