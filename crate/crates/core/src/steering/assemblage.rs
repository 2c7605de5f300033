use super::MeasurementSet;
use crate::models::embed_operator;
use crate::qla::{hermitian_eigenvalues, partial_trace, ComplexMatrix, DensityMatrix, QubitRegister};
use crate::sdp::{
    solve_steering_weight_with, SdpSolution, SolverOptions, SteeringWeightProblem,
};
use crate::{Error, Result};

/// Tolerance of the assemblage consistency checks.
pub const ASSEMBLAGE_TOL: f64 = 1e-9;

/// Unnormalized conditional states `σ_{a|x}` on a common register.
#[derive(Clone, Debug)]
pub struct Assemblage {
    n_settings: usize,
    n_outcomes: usize,
    /// Indexed by `x * n_outcomes + a`.
    members: Vec<DensityMatrix>,
    register: QubitRegister,
}

impl Assemblage {
    /// Checks normalization per setting, the common marginal and positivity.
    pub fn new(n_settings: usize, n_outcomes: usize, members: Vec<ComplexMatrix>, register: QubitRegister) -> Result<Self> {
        if n_settings == 0 || n_outcomes == 0 || members.len() != n_settings * n_outcomes {
            return Err(Error::DimensionMismatch {
                expected: n_settings * n_outcomes,
                found: members.len(),
            });
        }
        let d = register.dim();
        for m in &members {
            if !m.is_square() || m.rows() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: m.rows(),
                });
            }
            let herm = m.hermiticity_error();
            if herm > ASSEMBLAGE_TOL {
                return Err(Error::NotHermitian(herm));
            }
            let lo = hermitian_eigenvalues(m)?[0];
            if lo < -ASSEMBLAGE_TOL {
                return Err(Error::InvalidState(format!("member eigenvalue {lo:.3e}")));
            }
        }
        let asm = Self::from_members_unchecked(n_settings, n_outcomes, members, register);
        let reference = asm.marginal(0);
        if (reference.trace().re - 1.0).abs() > ASSEMBLAGE_TOL {
            return Err(Error::InvalidState(format!(
                "outcome probabilities sum to {}",
                reference.trace().re
            )));
        }
        for x in 1..n_settings {
            let dev = asm.marginal(x).max_abs_diff(&reference);
            if dev > ASSEMBLAGE_TOL {
                return Err(Error::InvalidState(format!(
                    "marginal of setting {x} differs by {dev:.3e}"
                )));
            }
        }
        Ok(asm)
    }

    pub(crate) fn from_members_unchecked(
        n_settings: usize,
        n_outcomes: usize,
        members: Vec<ComplexMatrix>,
        register: QubitRegister,
    ) -> Self {
        let members = members
            .into_iter()
            .map(|m| DensityMatrix::from_parts(m.hermitian_part(), register.clone(), false).expect("shape checked"))
            .collect();
        Self {
            n_settings,
            n_outcomes,
            members,
            register,
        }
    }

    pub fn n_settings(&self) -> usize {
        self.n_settings
    }

    pub fn n_outcomes(&self) -> usize {
        self.n_outcomes
    }

    pub fn register(&self) -> &QubitRegister {
        &self.register
    }

    pub fn dim(&self) -> usize {
        self.register.dim()
    }

    pub fn member(&self, setting: usize, outcome: usize) -> &DensityMatrix {
        &self.members[setting * self.n_outcomes + outcome]
    }

    pub fn members(&self) -> &[DensityMatrix] {
        &self.members
    }

    /// `p(a|x) = tr σ_{a|x}`.
    pub fn probability(&self, setting: usize, outcome: usize) -> f64 {
        self.member(setting, outcome).trace()
    }

    /// `Σ_a σ_{a|x}`.
    pub fn marginal(&self, setting: usize) -> ComplexMatrix {
        let d = self.dim();
        (0..self.n_outcomes).fold(ComplexMatrix::zeros(d, d), |acc, a| &acc + self.member(setting, a).matrix())
    }

    /// Members conjugated by `unitary`.
    pub fn conjugate_by(&self, unitary: &ComplexMatrix) -> Result<Self> {
        if unitary.rows() != self.dim() || unitary.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: unitary.rows(),
            });
        }
        let members = self.members.iter().map(|m| unitary.conjugate(m.matrix())).collect();
        Ok(Self::from_members_unchecked(
            self.n_settings,
            self.n_outcomes,
            members,
            self.register.clone(),
        ))
    }

    /// Steerable-weight program of this assemblage.
    pub fn problem(&self) -> Result<SteeringWeightProblem> {
        SteeringWeightProblem::new(
            self.n_settings,
            self.n_outcomes,
            self.members.iter().map(|m| m.matrix().clone()).collect(),
        )
    }
}

/// Encodes `(a, x)` on `q1` of a maximally mixed `n`-qubit register and
/// evolves: `σ_{a|x} = U (E_{a|x} ⊗ I) U† / 2^n`, so `p(a|x) = 1/2` for a
/// qubit measurement.
pub fn encode_and_evolve(meas: &MeasurementSet, unitary: &ComplexMatrix, n_qubits: usize) -> Result<Assemblage> {
    let register = QubitRegister::system(n_qubits);
    let d = register.dim();
    if !unitary.is_square() || unitary.rows() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: unitary.rows(),
        });
    }
    if meas.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: meas.dim(),
        });
    }
    let q1 = QubitRegister::sys(&[1])?;
    let scale = 1.0 / d as f64;
    let mut members = Vec::with_capacity(meas.n_settings() * meas.n_outcomes());
    for x in 0..meas.n_settings() {
        for a in 0..meas.n_outcomes() {
            let e = embed_operator(meas.projector(x, a), &q1, n_qubits)?;
            members.push(unitary.conjugate(&e).scale_real(scale));
        }
    }
    Ok(Assemblage::from_members_unchecked(
        meas.n_settings(),
        meas.n_outcomes(),
        members,
        register,
    ))
}

/// Memberwise partial trace onto `region`.
pub fn reduce_assemblage(asm: &Assemblage, region: &QubitRegister) -> Result<Assemblage> {
    let kept = asm.register().restrict(region)?;
    if kept.len() == asm.register().len() {
        return Ok(asm.clone());
    }
    let mut members = Vec::with_capacity(asm.members.len());
    for m in &asm.members {
        members.push(partial_trace(m, &kept)?.into_matrix());
    }
    Ok(Assemblage::from_members_unchecked(
        asm.n_settings,
        asm.n_outcomes,
        members,
        kept,
    ))
}

/// Full solver output for the steerable weight of `asm`.
pub fn steering_weight_solution(asm: &Assemblage, opts: &SolverOptions) -> Result<SdpSolution> {
    solve_steering_weight_with(&asm.problem()?, opts)?.into_result()
}

/// `TSW = 1 - μ*`, clipped to `[0, 1]` against solver-tolerance overshoot.
pub fn temporal_steerable_weight(asm: &Assemblage) -> Result<f64> {
    temporal_steerable_weight_with(asm, &SolverOptions::default())
}

pub fn temporal_steerable_weight_with(asm: &Assemblage, opts: &SolverOptions) -> Result<f64> {
    Ok(steering_weight_solution(asm, opts)?.steerable_weight().clamp(0.0, 1.0))
}

/// `|TSW(asm) - TSW(U asm U†)|`.
pub fn tsw_unitary_invariance_check(asm: &Assemblage, unitary: &ComplexMatrix) -> Result<f64> {
    let rotated = asm.conjugate_by(unitary)?;
    Ok((temporal_steerable_weight(asm)? - temporal_steerable_weight(&rotated)?).abs())
}
