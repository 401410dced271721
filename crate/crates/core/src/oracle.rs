//! Brute-force reference implementations, written straight from the
//! definitions.
//!
//! Nothing here touches the closure, contraction or enumeration code of the
//! rest of the crate: the oracle computes R̄ itself with Warshall's
//! algorithm over a boolean matrix and tests every non-empty subset of `X`
//! in order of increasing cardinality, then lexicographically. Results are
//! returned in lexicographic order of sorted member lists, the same order
//! the fast enumerators use.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::relation::DecisionProblem;
use crate::solutions::Concept;

pub const ORACLE_CEILING: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub concept: Concept,
    pub sets: Vec<Vec<usize>>,
    /// Subsets the definitional test was applied to.
    pub examined: u64,
    pub elapsed: Duration,
}

/// R and R̄ as plain boolean matrices.
#[derive(Debug, Clone)]
pub struct OracleRelations {
    pub n: usize,
    pub r: Vec<Vec<bool>>,
    pub closure: Vec<Vec<bool>>,
}

impl OracleRelations {
    pub fn new(p: &DecisionProblem) -> Self {
        let n = p.n();
        let mut r = vec![vec![false; n]; n];
        for &(u, v) in p.edges() {
            r[u][v] = true;
        }
        let closure = warshall(&r);
        Self { n, r, closure }
    }
}

/// Warshall's algorithm. Paths have length at least one, so `c[x][x]` holds
/// only when `x` lies on a cycle or carries a self-pair.
#[allow(clippy::needless_range_loop)]
pub fn warshall(r: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = r.len();
    let mut c = r.to_vec();
    for k in 0..n {
        for i in 0..n {
            if c[i][k] {
                for j in 0..n {
                    if c[k][j] {
                        c[i][j] = true;
                    }
                }
            }
        }
    }
    c
}

/// Closure as the fixed point of R ∪ R∘R ∪ …, for cross-checking
/// [`warshall`] and the BFS closure.
pub fn closure_by_composition(r: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = r.len();
    let mut c = r.to_vec();
    loop {
        let mut next = c.clone();
        for i in 0..n {
            for k in 0..n {
                if c[i][k] {
                    for j in 0..n {
                        if r[k][j] {
                            next[i][j] = true;
                        }
                    }
                }
            }
        }
        if next == c {
            return c;
        }
        c = next;
    }
}

fn in_set(f: &[usize], n: usize) -> Vec<bool> {
    let mut inside = vec![false; n];
    for &x in f {
        inside[x] = true;
    }
    inside
}

/// (i) no alternative in F is dominated by another in F;
/// (ii) every alternative outside F is dominated by one inside.
fn stable_under(rel: &[Vec<bool>], f: &[usize]) -> bool {
    let n = rel.len();
    let inside = in_set(f, n);
    for &x in f {
        for &y in f {
            if x != y && rel[y][x] {
                return false;
            }
        }
    }
    for z in 0..n {
        if !inside[z] && !f.iter().any(|&x| rel[x][z]) {
            return false;
        }
    }
    true
}

pub fn vnm_stable(rel: &OracleRelations, f: &[usize]) -> bool {
    !f.is_empty() && stable_under(&rel.r, f)
}

pub fn generalized_stable(rel: &OracleRelations, f: &[usize]) -> bool {
    !f.is_empty() && stable_under(&rel.closure, f)
}

/// (i) x R̄ y implies y R̄ x inside F; (ii) nothing outside F reaches F.
pub fn m_stable(rel: &OracleRelations, f: &[usize]) -> bool {
    if f.is_empty() {
        return false;
    }
    let c = &rel.closure;
    let inside = in_set(f, rel.n);
    for &x in f {
        for &y in f {
            if c[x][y] && !c[y][x] {
                return false;
            }
        }
        for y in 0..rel.n {
            if !inside[y] && c[y][x] {
                return false;
            }
        }
    }
    true
}

/// (i) no closure pair between distinct members; (ii) an outsider that
/// reaches a member is reached back by it.
pub fn w_stable(rel: &OracleRelations, f: &[usize]) -> bool {
    if f.is_empty() {
        return false;
    }
    let c = &rel.closure;
    let inside = in_set(f, rel.n);
    for &x in f {
        for &y in f {
            if x != y && c[x][y] {
                return false;
            }
        }
        for y in 0..rel.n {
            if !inside[y] && c[y][x] && !c[x][y] {
                return false;
            }
        }
    }
    true
}

/// No member is R-dominated from outside.
pub fn undominated(rel: &OracleRelations, d: &[usize]) -> bool {
    let inside = in_set(d, rel.n);
    d.iter().all(|&x| (0..rel.n).all(|y| inside[y] || !rel.r[y][x]))
}

/// Alternatives with no y such that y R x and not x R y.
pub fn core(p: &DecisionProblem) -> Vec<usize> {
    let rel = OracleRelations::new(p);
    (0..rel.n)
        .filter(|&x| (0..rel.n).all(|y| !(rel.r[y][x] && !rel.r[x][y])))
        .collect()
}

/// Every non-empty subset of `0..n`, by increasing size, then
/// lexicographically.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).flat_map(move |k| Combinations::new(n, k))
}

struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self { n, current: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

fn check_size(p: &DecisionProblem) -> Result<()> {
    if p.n() > ORACLE_CEILING {
        return Err(Error::TooLarge { n: p.n(), ceiling: ORACLE_CEILING });
    }
    Ok(())
}

/// All non-empty R-undominated sets that contain no smaller undominated set.
pub fn oracle_minimal_undominated(p: &DecisionProblem) -> Result<Vec<Vec<usize>>> {
    check_size(p)?;
    let rel = OracleRelations::new(p);
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for d in subsets_by_size(rel.n) {
        if !undominated(&rel, &d) {
            continue;
        }
        // every strictly smaller undominated set has been seen already
        if minimal.iter().any(|m| m.iter().all(|x| d.contains(x))) {
            continue;
        }
        minimal.push(d);
    }
    minimal.sort();
    Ok(minimal)
}

/// Union of the minimal R-undominated sets.
pub fn oracle_gocha(p: &DecisionProblem) -> Result<Vec<usize>> {
    let mut all: Vec<usize> = oracle_minimal_undominated(p)?.into_iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    Ok(all)
}

/// Every non-empty subset passing the definitional test for `concept`.
/// Core and Schwartz yield a single set: the core, and the union of the
/// minimal undominated sets.
pub fn oracle_enumerate(p: &DecisionProblem, concept: Concept) -> Result<OracleResult> {
    check_size(p)?;
    let start = Instant::now();
    let rel = OracleRelations::new(p);
    let test: fn(&OracleRelations, &[usize]) -> bool = match concept {
        Concept::VnmStable => vnm_stable,
        Concept::GeneralizedStable => generalized_stable,
        Concept::MStable => m_stable,
        Concept::WStable => w_stable,
        Concept::Core => {
            return Ok(OracleResult { concept, sets: vec![core(p)], examined: 0, elapsed: start.elapsed() });
        }
        Concept::Schwartz => {
            let sets = vec![oracle_gocha(p)?];
            let examined = (1u64 << p.n()) - 1;
            return Ok(OracleResult { concept, sets, examined, elapsed: start.elapsed() });
        }
    };
    let mut examined = 0;
    let mut sets = Vec::new();
    for f in subsets_by_size(rel.n) {
        examined += 1;
        if test(&rel, &f) {
            sets.push(f);
        }
    }
    sets.sort();
    Ok(OracleResult { concept, sets, examined, elapsed: start.elapsed() })
}
