use serde::{Deserialize, Serialize};

use super::assemblage::{encode_and_evolve, reduce_assemblage, temporal_steerable_weight_with, Assemblage};
use super::MeasurementSet;
use crate::channels::PartitionSpec;
use crate::qla::{ComplexMatrix, QubitRegister};
use crate::sdp::SolverOptions;
use crate::Result;

/// Steerable weights of the whole output and of both regions, and their
/// signed combination `-T3 = TSW(tot) - TSW(C) - TSW(D)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub t: f64,
    pub tsw_tot: f64,
    pub tsw_c: f64,
    pub tsw_d: f64,
    pub minus_t3: f64,
}

impl WitnessRecord {
    pub fn new(t: f64, tsw_tot: f64, tsw_c: f64, tsw_d: f64) -> Self {
        Self {
            t,
            tsw_tot,
            tsw_c,
            tsw_d,
            minus_t3: tsw_tot - tsw_c - tsw_d,
        }
    }
}

/// How `TSW(tot)` is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TotalWeightMode {
    /// From the single-qubit assemblage `{E_{a|x}/2}`: a global unitary and
    /// appended maximally mixed qubits leave the steerable weight unchanged.
    #[default]
    Encoded,
    /// Solve the full-register program directly.
    Direct,
}

#[derive(Clone, Debug, Default)]
pub struct WitnessOptions {
    pub solver: SolverOptions,
    pub total: TotalWeightMode,
}

/// Steerable weight of the encoded single-qubit assemblage `{E_{a|x}/2}`.
pub fn encoded_weight(meas: &MeasurementSet, solver: &SolverOptions) -> Result<f64> {
    let members = (0..meas.n_settings())
        .flat_map(|x| (0..meas.n_outcomes()).map(move |a| (x, a)))
        .map(|(x, a)| meas.projector(x, a).scale_real(0.5))
        .collect();
    let asm = Assemblage::new(
        meas.n_settings(),
        meas.n_outcomes(),
        members,
        QubitRegister::sys(&[1])?,
    )?;
    temporal_steerable_weight_with(&asm, solver)
}

/// Region weights for an evolved full-register assemblage.
pub fn witness_from_assemblage(
    asm: &Assemblage,
    part: &PartitionSpec,
    tsw_tot: f64,
    t: f64,
    solver: &SolverOptions,
) -> Result<WitnessRecord> {
    let c = reduce_assemblage(asm, part.region_c())?;
    let d = reduce_assemblage(asm, part.region_d())?;
    let tsw_c = temporal_steerable_weight_with(&c, solver)?;
    let tsw_d = temporal_steerable_weight_with(&d, solver)?;
    Ok(WitnessRecord::new(t, tsw_tot, tsw_c, tsw_d))
}

pub fn minus_t3(meas: &MeasurementSet, unitary: &ComplexMatrix, part: &PartitionSpec) -> Result<WitnessRecord> {
    minus_t3_with(meas, unitary, part, 0.0, &WitnessOptions::default())
}

pub fn minus_t3_with(
    meas: &MeasurementSet,
    unitary: &ComplexMatrix,
    part: &PartitionSpec,
    t: f64,
    opts: &WitnessOptions,
) -> Result<WitnessRecord> {
    let asm = encode_and_evolve(meas, unitary, part.n_qubits())?;
    let tsw_tot = match opts.total {
        TotalWeightMode::Encoded => encoded_weight(meas, &opts.solver)?,
        TotalWeightMode::Direct => temporal_steerable_weight_with(&asm, &opts.solver)?,
    };
    witness_from_assemblage(&asm, part, tsw_tot, t, &opts.solver)
}
