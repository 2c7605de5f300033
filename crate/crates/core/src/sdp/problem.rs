use super::strategy::{enumerate_strategies, DeterministicStrategy};
use crate::qla::{hermitian_eigenvalues, ComplexMatrix};
use crate::{Error, Result};

/// Members whose trace falls below this carry no constraint.
pub const DEGENERATE_TRACE: f64 = 1e-12;

/// Tolerated negativity of assemblage members.
pub const MEMBER_PSD_TOL: f64 = 1e-9;

/// Steerable-weight program for an assemblage `σ_{a|x}` of `d×d` matrices:
/// maximize `Σ_λ tr σ_λ` over `σ_λ ⪰ 0` with
/// `σ_{a|x} - Σ_λ D_λ(a|x) σ_λ ⪰ 0`.
#[derive(Clone, Debug)]
pub struct SteeringWeightProblem {
    dim: usize,
    n_settings: usize,
    n_outcomes: usize,
    /// Indexed by `x * n_outcomes + a`.
    members: Vec<ComplexMatrix>,
    strategies: Vec<DeterministicStrategy>,
}

impl SteeringWeightProblem {
    pub fn new(n_settings: usize, n_outcomes: usize, members: Vec<ComplexMatrix>) -> Result<Self> {
        let strategies = enumerate_strategies(n_settings, n_outcomes)?;
        if members.len() != n_settings * n_outcomes {
            return Err(Error::DimensionMismatch {
                expected: n_settings * n_outcomes,
                found: members.len(),
            });
        }
        let dim = members[0].rows();
        for m in &members {
            if !m.is_square() {
                return Err(Error::NotSquare {
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if m.rows() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.rows(),
                });
            }
            let herm = m.hermiticity_error();
            if herm > MEMBER_PSD_TOL {
                return Err(Error::NotHermitian(herm));
            }
            let lo = hermitian_eigenvalues(m)?[0];
            if lo < -MEMBER_PSD_TOL {
                return Err(Error::InvalidState(format!(
                    "assemblage member has eigenvalue {lo:.3e}"
                )));
            }
        }
        let members = members.into_iter().map(|m| m.hermitian_part()).collect();
        Ok(Self {
            dim,
            n_settings,
            n_outcomes,
            members,
            strategies,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_settings(&self) -> usize {
        self.n_settings
    }

    pub fn n_outcomes(&self) -> usize {
        self.n_outcomes
    }

    pub fn member(&self, setting: usize, outcome: usize) -> &ComplexMatrix {
        &self.members[setting * self.n_outcomes + outcome]
    }

    pub fn members(&self) -> &[ComplexMatrix] {
        &self.members
    }

    pub fn strategies(&self) -> &[DeterministicStrategy] {
        &self.strategies
    }

    pub(crate) fn member_index(&self, setting: usize, outcome: usize) -> usize {
        setting * self.n_outcomes + outcome
    }

    /// Members with non-negligible trace.
    pub(crate) fn active_members(&self) -> Vec<bool> {
        self.members
            .iter()
            .map(|m| m.trace().re >= DEGENERATE_TRACE)
            .collect()
    }
}
