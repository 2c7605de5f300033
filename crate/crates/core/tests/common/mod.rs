#![allow(dead_code)]

pub mod oracles;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use scrambling::qla::ComplexMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_hermitian(d: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(d, d, |_, _| gaussian(rng));
    (&g + &g.dagger()).scale_real(0.5)
}

/// Random density matrix of rank `rank` (Wishart with `rank` columns).
pub fn random_density(d: usize, rank: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(d, rank, |_, _| gaussian(rng));
    let w = g.matmul(&g.dagger());
    let tr = w.trace().re;
    w.scale_real(1.0 / tr)
}
