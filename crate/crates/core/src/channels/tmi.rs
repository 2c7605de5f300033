use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::choi::{build_choi_q1, ChoiState};
use super::partition::PartitionSpec;
use crate::models::haar_unitary;
use crate::qla::{region_entropy, QubitRegister};
use crate::{Error, Result};

/// Mutual informations in `[-MI_CLAMP, 0)` are numerical noise and read as 0.
pub const MI_CLAMP: f64 = 1e-9;

/// `-I3 = I(A:CD) - I(A:C) - I(A:D)` with its constituents, in bits.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TmiReport {
    pub minus_i3: f64,
    pub i_a_cd: f64,
    pub i_a_c: f64,
    pub i_a_d: f64,
}

fn clamp_mi(v: f64) -> f64 {
    if (-MI_CLAMP..0.0).contains(&v) {
        0.0
    } else {
        v
    }
}

pub fn tripartite_mutual_information(choi: &ChoiState, part: &PartitionSpec) -> Result<TmiReport> {
    if part.n_qubits() != choi.n_qubits() {
        return Err(Error::InvalidPartition(format!(
            "partition is for {} qubits, channel acts on {}",
            part.n_qubits(),
            choi.n_qubits()
        )));
    }
    if !part.region_a().is_subset_of(choi.input_region()) {
        return Err(Error::InvalidPartition(format!(
            "input region {} has no reference in the Choi state",
            part.region_a()
        )));
    }
    let rho = choi.state();
    let (a, c, d) = (part.region_a(), part.region_c(), part.region_d());
    let s = |r: &QubitRegister| region_entropy(rho, r);
    let cd = c.concat(d)?;
    let s_a = s(a)?;
    let s_c = s(c)?;
    let s_d = s(d)?;
    let s_ac = s(&a.concat(c)?)?;
    let s_ad = s(&a.concat(d)?)?;
    let s_cd = s(&cd)?;
    let s_acd = s(&a.concat(&cd)?)?;
    let i_a_cd = clamp_mi(s_a + s_cd - s_acd);
    let i_a_c = clamp_mi(s_a + s_c - s_ac);
    let i_a_d = clamp_mi(s_a + s_d - s_ad);
    Ok(TmiReport {
        minus_i3: i_a_cd - i_a_c - i_a_d,
        i_a_cd,
        i_a_c,
        i_a_d,
    })
}

/// Mean of `-I3` over Haar-random channels, with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaselineEstimate {
    pub mean: f64,
    pub std_err: f64,
    pub n_samples: usize,
}

pub fn haar_scrambled_baseline(
    n_qubits: usize,
    part: &PartitionSpec,
    n_samples: usize,
    seed: u64,
) -> Result<BaselineEstimate> {
    if n_samples == 0 {
        return Err(Error::InvalidInput("baseline needs at least one sample".into()));
    }
    if part.n_qubits() != n_qubits {
        return Err(Error::InvalidPartition("partition size differs from register".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let u = haar_unitary(1 << n_qubits, &mut rng);
        values.push(tripartite_mutual_information(&build_choi_q1(&u, n_qubits)?, part)?.minus_i3);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = if values.len() > 1 {
        values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    Ok(BaselineEstimate {
        mean,
        std_err: (var / n).sqrt(),
        n_samples,
    })
}
