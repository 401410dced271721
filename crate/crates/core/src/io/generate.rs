//! Seeded random problem generators. Output is a pure function of
//! `(kind, n, density, seed)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::DecisionProblem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    /// Each ordered pair `u != v` independently with probability `density`.
    ErdosDigraph,
    /// One direction per unordered pair, by fair coin.
    Tournament,
    /// `0 -> 1 -> ... -> n-1 -> 0`.
    KCycle,
    /// About `sqrt(n)` layers; forward pairs between layers with
    /// probability `density`.
    LayeredDag,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 4] =
        [GeneratorKind::ErdosDigraph, GeneratorKind::Tournament, GeneratorKind::KCycle, GeneratorKind::LayeredDag];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::ErdosDigraph => "erdos_digraph",
            GeneratorKind::Tournament => "tournament",
            GeneratorKind::KCycle => "k_cycle",
            GeneratorKind::LayeredDag => "layered_dag",
        }
    }

    pub fn uses_density(self) -> bool {
        matches!(self, GeneratorKind::ErdosDigraph | GeneratorKind::LayeredDag)
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown generator `{s}`")))
    }
}

pub fn generate(kind: GeneratorKind, n: usize, density: f64, seed: u64) -> Result<DecisionProblem> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if kind.uses_density() && !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!("density {density} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = match kind {
        GeneratorKind::ErdosDigraph => erdos(&mut rng, n, density),
        GeneratorKind::Tournament => {
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    edges.push(if rng.random::<bool>() { (u, v) } else { (v, u) });
                }
            }
            edges
        }
        GeneratorKind::KCycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        GeneratorKind::LayeredDag => {
            let layers = ((n as f64).sqrt().round() as usize).max(1);
            let layer = |x: usize| x * layers / n;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if layer(u) < layer(v) && rng.random::<f64>() < density {
                        edges.push((u, v));
                    }
                }
            }
            edges
        }
    };
    DecisionProblem::new(n, edges)
}

/// Geometric skipping over the `n(n-1)` off-diagonal pairs, so the cost is
/// linear in the number of edges drawn.
fn erdos(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let slots = (n * (n - 1)) as u64;
    let pair = |idx: u64| {
        let u = (idx / (n as u64 - 1)) as usize;
        let w = (idx % (n as u64 - 1)) as usize;
        (u, if w >= u { w + 1 } else { w })
    };
    if p <= 0.0 || slots == 0 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (0..slots).map(pair).collect();
    }
    let log_q = (1.0 - p).ln();
    let mut edges = Vec::new();
    let mut idx: u64 = 0;
    loop {
        let r: f64 = rng.random();
        let skip = ((1.0 - r).ln() / log_q).floor();
        if !skip.is_finite() || skip >= (slots - idx) as f64 {
            break;
        }
        idx += skip as u64;
        edges.push(pair(idx));
        idx += 1;
        if idx >= slots {
            break;
        }
    }
    edges
}
