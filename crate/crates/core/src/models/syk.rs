use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::pauli::PauliMask;
use crate::qla::ComplexMatrix;
use crate::{Error, Result, C64};

/// A Majorana operator on `2 n_qubits` modes realized on qubits by a
/// Jordan–Wigner string.
#[derive(Clone, Debug)]
pub struct MajoranaOperator {
    pub index: usize,
    pub matrix: ComplexMatrix,
}

/// `χ_{2k-1} = X_1…X_{k-1} Z_k / √2`, `χ_{2k} = X_1…X_{k-1} Y_k / √2`.
pub(crate) fn majorana_mask(i: usize, n_qubits: usize) -> Result<PauliMask> {
    let n_maj = 2 * n_qubits;
    if i == 0 || i > n_maj {
        return Err(Error::IndexOutOfRange { index: i, max: n_maj });
    }
    let k = i.div_ceil(2);
    let mut m = PauliMask::identity(n_qubits);
    for site in 1..k {
        m.x |= 1 << (n_qubits - site);
    }
    let bit = 1 << (n_qubits - k);
    m.z |= bit;
    if i.is_multiple_of(2) {
        // Y = i X Z
        m.x |= bit;
        m.phase = C64::new(0.0, 1.0);
    }
    Ok(m.scaled(C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)))
}

pub fn jordan_wigner_majorana(i: usize, n_qubits: usize) -> Result<MajoranaOperator> {
    Ok(MajoranaOperator {
        index: i,
        matrix: majorana_mask(i, n_qubits)?.to_matrix(),
    })
}

/// Variance `3! J² / ((N-1)(N-2)(N-3))` of each quartic coupling.
pub fn syk_coupling_variance(n_majorana: usize, j: f64) -> f64 {
    let n = n_majorana as f64;
    6.0 * j * j / ((n - 1.0) * (n - 2.0) * (n - 3.0))
}

/// Couplings `J_{ijkl}`, `i<j<k<l`, drawn in lexicographic order from a
/// ChaCha8 stream seeded with `seed`.
pub fn sample_syk_couplings(
    n_qubits: usize,
    j: f64,
    seed: u64,
) -> Result<Vec<([usize; 4], f64)>> {
    if n_qubits < 2 {
        return Err(Error::TooFewQubits { min: 2, found: n_qubits });
    }
    let n = 2 * n_qubits;
    let sd = syk_coupling_variance(n, j).sqrt();
    let normal = Normal::new(0.0, sd).map_err(|e| Error::InvalidInput(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    out.push(([a, b, c, d], normal.sample(&mut rng)));
                }
            }
        }
    }
    Ok(out)
}

/// SYK Hamiltonian `Σ_{i<j<k<l} J_{ijkl} χ_i χ_j χ_k χ_l`.
pub fn build_syk(n_qubits: usize, j: f64, seed: u64) -> Result<ComplexMatrix> {
    let couplings = sample_syk_couplings(n_qubits, j, seed)?;
    let chis = (1..=2 * n_qubits)
        .map(|i| majorana_mask(i, n_qubits))
        .collect::<Result<Vec<_>>>()?;
    let d = 1usize << n_qubits;
    let mut h = ComplexMatrix::zeros(d, d);
    for ([a, b, c, e], jv) in couplings {
        let term = chis[a - 1]
            .mul(&chis[b - 1])
            .mul(&chis[c - 1])
            .mul(&chis[e - 1])
            .scaled(C64::new(jv, 0.0));
        term.add_to(&mut h);
    }
    Ok(h)
}
