//! Seeded fixtures shared by the benchmark targets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ringdet_core::{Matrix, Ring};

/// Reproducible random square matrix; the same (ring, n, seed) always
/// yields the same entries.
pub fn square(ring: &Ring, n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Matrix::sample(ring, n, n, &mut rng).expect("sampling valid dims cannot fail")
}

/// The rings the benchmarks sweep: cheap machine-sized residues, unbounded
/// integers, and polynomial entries that grow under multiplication.
pub fn bench_rings() -> Vec<(&'static str, Ring)> {
    vec![
        ("zmod6", Ring::zmod(6u32).expect("modulus is valid")),
        ("integers", Ring::integers()),
        ("poly_zmod5", Ring::poly_over(Ring::zmod(5u32).expect("modulus is valid"))),
    ]
}
