//! Property tests against a brute-force model written here from the
//! definitions, independent of the crate's own oracle module.

#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use stableset::contraction::{contraction, strong_components};
use stableset::relation::{asymmetric_part, StrictRelation};
use stableset::{transitive_closure, Analysis, DecisionProblem};

fn problem(max_n: usize) -> impl Strategy<Value = DecisionProblem> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * n)
            .prop_map(move |edges| DecisionProblem::new(n, edges).unwrap())
    })
}

fn matrix(p: &DecisionProblem) -> Vec<Vec<bool>> {
    let n = p.n();
    (0..n).map(|u| (0..n).map(|v| p.dominates(u, v)).collect()).collect()
}

/// Paths of length >= 1: extend by one R step until nothing changes.
fn model_closure(r: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = r.len();
    let mut c = r.to_vec();
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in 0..n {
                if !c[u][v] && (0..n).any(|w| c[u][w] && r[w][v]) {
                    c[u][v] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return c;
        }
    }
}

fn model_w_stable(c: &[Vec<bool>], f: &[usize]) -> bool {
    let n = c.len();
    if f.is_empty() {
        return false;
    }
    let inside_free = f.iter().all(|&x| f.iter().all(|&y| x == y || !c[x][y]));
    let outside_answered = (0..n)
        .filter(|y| !f.contains(y))
        .all(|y| f.iter().all(|&x| !c[y][x] || c[x][y]));
    inside_free && outside_answered
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_matches_model(p in problem(7)) {
        let c = transitive_closure(&p);
        let model = model_closure(&matrix(&p));
        for u in 0..p.n() {
            for v in 0..p.n() {
                prop_assert_eq!(c.reaches(u, v), model[u][v], "pair ({}, {})", u, v);
            }
        }
    }

    #[test]
    fn closure_is_idempotent_and_contains_r(p in problem(7)) {
        let c = transitive_closure(&p);
        let again = DecisionProblem::new(p.n(), c.relation().pairs()).unwrap();
        let closed_again = transitive_closure(&again);
        prop_assert_eq!(closed_again.relation(), c.relation());
        for &(u, v) in p.edges() {
            prop_assert!(c.reaches(u, v));
        }
    }

    #[test]
    fn asymmetric_part_has_no_mutual_pair(p in problem(7)) {
        let strict = StrictRelation::of_problem(&p);
        prop_assert!(strict.is_asymmetric());
        for (u, v) in strict.relation().pairs() {
            prop_assert!(p.dominates(u, v) && !p.dominates(v, u));
        }
        let twice = asymmetric_part(strict.relation());
        prop_assert_eq!(&twice, strict.relation());
    }

    #[test]
    fn components_partition_and_condensation_is_acyclic(p in problem(9)) {
        let comps = strong_components(&p);
        let mut seen: Vec<usize> = comps.iter().flat_map(|c| c.members.clone()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..p.n()).collect::<Vec<_>>());
        let c = contraction(&p);
        prop_assert!(c.topological_order().is_some());
        prop_assert!(c.edges().iter().all(|&(i, j)| i != j));
        let model = model_closure(&matrix(&p));
        for u in 0..p.n() {
            for v in 0..p.n() {
                let mutual = u == v || (model[u][v] && model[v][u]);
                prop_assert_eq!(c.component_of(u) == c.component_of(v), mutual);
            }
        }
    }

    #[test]
    fn w_stable_enumeration_matches_model(p in problem(8)) {
        let a = Analysis::new(&p);
        let c = model_closure(&matrix(&p));
        let mut model: Vec<Vec<usize>> = subsets(p.n()).filter(|f| model_w_stable(&c, f)).collect();
        model.sort();
        let fast = a.w_stable_sets(usize::MAX);
        prop_assert_eq!(fast.member_sets(), model.clone());
        prop_assert_eq!(a.count_w_stable(), model.len().into());
        prop_assert!(!fast.truncated);
    }

    #[test]
    fn limit_returns_lex_prefix(p in problem(8), limit in 1usize..6) {
        let a = Analysis::new(&p);
        let all = a.w_stable_sets(usize::MAX).member_sets();
        let some = a.w_stable_sets(limit);
        prop_assert_eq!(some.member_sets(), all[..limit.min(all.len())].to_vec());
        prop_assert_eq!(some.truncated, all.len() > limit);
    }

    #[test]
    fn core_is_undominated_and_within_deb_set(p in problem(8)) {
        let a = Analysis::new(&p);
        let core = a.core().members;
        let m = matrix(&p);
        let model: Vec<usize> =
            (0..p.n()).filter(|&x| (0..p.n()).all(|y| !(m[y][x] && !m[x][y]))).collect();
        prop_assert_eq!(&core, &model);
        let deb = a.deb_choice_set();
        prop_assert!(core.iter().all(|x| deb.contains(x)));
    }

    #[test]
    fn checkers_agree_with_enumerations(p in problem(6)) {
        let a = Analysis::new(&p);
        let w = a.w_stable_sets(usize::MAX).member_sets();
        let g = a.generalized_stable_sets(usize::MAX).member_sets();
        let m = a.m_stable_sets(usize::MAX).member_sets();
        let v = a.vnm_stable_sets(usize::MAX).unwrap().member_sets();
        for f in subsets(p.n()) {
            prop_assert_eq!(a.is_w_stable(&f), w.contains(&f));
            prop_assert_eq!(a.is_generalized_stable(&f), g.contains(&f));
            prop_assert_eq!(a.is_m_stable(&f), m.contains(&f));
            prop_assert_eq!(a.is_vnm_stable(&f), v.contains(&f));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn schwartz_equals_deb_on_asymmetric_relations(
        n in 1usize..8,
        bits in proptest::collection::vec(any::<(bool, bool)>(), 28),
    ) {
        // at most one direction per unordered pair
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                match bits[k] {
                    (true, true) => edges.push((u, v)),
                    (true, false) => edges.push((v, u)),
                    _ => {}
                }
                k += 1;
            }
        }
        let p = DecisionProblem::new(n, edges).unwrap();
        let a = Analysis::new(&p);
        prop_assert_eq!(a.schwartz_set().members, a.deb_choice_set());
        let schwartz = a.schwartz_set().members;
        prop_assert!(a.core().members.iter().all(|x| schwartz.contains(x)));
    }
}
