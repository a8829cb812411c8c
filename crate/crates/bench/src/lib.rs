//! Shared seeded inputs for the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toughcert::{random_connected_gnp, ExtremalSpec, Graph};

pub const BENCH_SEED: u64 = 1729;

/// The two-singleton family K_delta v (K_{n-2 delta} + delta K_1).
pub fn hub_family(n: usize, delta: usize) -> Graph {
    assert!(n > 2 * delta, "family needs n > 2 delta");
    let mut parts = vec![n - 2 * delta];
    parts.extend(std::iter::repeat(1).take(delta));
    let spec = ExtremalSpec::new(delta, parts).expect("family parameters");
    toughcert::build_family(&spec)
}

/// Deterministic corpus of connected G(n, p) graphs.
pub fn random_corpus(count: usize, n: usize, p: f64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(BENCH_SEED);
    (0..count)
        .map(|_| random_connected_gnp(&mut rng, n, p).expect("corpus generation"))
        .collect()
}
