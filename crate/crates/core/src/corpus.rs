//! Test corpora: every relation on a small ground set, and seeded random
//! problems of mixed shapes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::io::generate::{generate, GeneratorKind};
use crate::relation::DecisionProblem;

/// Largest `n` for exhaustive enumeration (2^(n²) relations).
pub const EXHAUSTIVE_MAX_N: usize = 4;

/// The relation encoded by `mask`: bit `u * n + v` is the pair `(u, v)`.
pub fn relation_from_mask(n: usize, mask: u64) -> DecisionProblem {
    let edges = (0..n * n).filter(|b| mask >> b & 1 == 1).map(|b| (b / n, b % n));
    DecisionProblem::new(n, edges).expect("mask ids are in range")
}

/// All `2^(n²)` relations on `0..n`, self-pairs included.
pub fn exhaustive(n: usize) -> impl Iterator<Item = DecisionProblem> {
    assert!((1..=EXHAUSTIVE_MAX_N).contains(&n), "exhaustive corpus supports 1 <= n <= {EXHAUSTIVE_MAX_N}");
    (0..1u64 << (n * n)).map(move |mask| relation_from_mask(n, mask))
}

/// `count` problems with `1 <= n <= n_max`, mixing Erdős digraphs of
/// varied density (some with self-pairs), tournaments, layered DAGs and
/// cycles. Deterministic in `seed`.
pub fn random_corpus(seed: u64, count: usize, n_max: usize) -> Vec<DecisionProblem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=n_max.max(1));
            let sub_seed: u64 = rng.random();
            let density = rng.random_range(0.05..0.7);
            match rng.random_range(0..10) {
                0..=4 => generate(GeneratorKind::ErdosDigraph, n, density, sub_seed),
                5 => generate(GeneratorKind::Tournament, n, density, sub_seed),
                6 => generate(GeneratorKind::LayeredDag, n, density, sub_seed),
                7 => generate(GeneratorKind::KCycle, n, density, sub_seed),
                _ => {
                    let base = generate(GeneratorKind::ErdosDigraph, n, density, sub_seed).expect("valid parameters");
                    let loops: Vec<(usize, usize)> =
                        (0..n).filter(|_| rng.random_bool(0.3)).map(|x| (x, x)).collect();
                    DecisionProblem::new(n, base.edges().iter().copied().chain(loops))
                }
            }
            .expect("valid parameters")
        })
        .collect()
}
