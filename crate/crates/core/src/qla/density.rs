use super::{hermitian_eigenvalues, ComplexMatrix, Propagator, QubitRegister};
use crate::{Error, Result, C64};

/// Entrywise Hermiticity, trace and eigenvalue tolerance for validated states.
pub const STATE_TOL: f64 = 1e-10;

/// Hermitian, positive semidefinite matrix over a labeled qubit register.
///
/// A normalized state has unit trace. Assemblage members are stored
/// unnormalized, with trace in `(0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    register: QubitRegister,
    normalized: bool,
}

impl DensityMatrix {
    /// Validated unit-trace state.
    pub fn new(matrix: ComplexMatrix, register: QubitRegister) -> Result<Self> {
        let rho = Self::from_parts(matrix, register, true)?;
        rho.validate()?;
        Ok(rho)
    }

    /// Validated state with trace in `(0, 1]`.
    pub fn new_unnormalized(matrix: ComplexMatrix, register: QubitRegister) -> Result<Self> {
        let rho = Self::from_parts(matrix, register, false)?;
        rho.validate()?;
        Ok(rho)
    }

    /// Shape-checked but otherwise trusted construction, for states produced
    /// by operations that preserve the invariants.
    pub(crate) fn from_parts(
        matrix: ComplexMatrix,
        register: QubitRegister,
        normalized: bool,
    ) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rows() != register.dim() {
            return Err(Error::DimensionMismatch {
                expected: register.dim(),
                found: matrix.rows(),
            });
        }
        Ok(Self {
            matrix,
            register,
            normalized,
        })
    }

    pub fn maximally_mixed(register: QubitRegister) -> Self {
        let d = register.dim();
        let matrix = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
        Self {
            matrix,
            register,
            normalized: true,
        }
    }

    /// `|psi><psi|` for a normalized state vector.
    pub fn from_pure(state: &[C64], register: QubitRegister) -> Result<Self> {
        let norm: f64 = state.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState(format!("state vector norm² = {norm}")));
        }
        Self::from_parts(ComplexMatrix::outer(state, state), register, true)
    }

    /// Checks Hermiticity, trace and positivity.
    pub fn validate(&self) -> Result<()> {
        let herr = self.matrix.hermiticity_error();
        if herr > STATE_TOL {
            return Err(Error::NotHermitian(herr));
        }
        let tr = self.trace();
        if self.normalized {
            if (tr - 1.0).abs() > STATE_TOL {
                return Err(Error::InvalidState(format!("trace {tr} != 1")));
            }
        } else if tr <= 0.0 || tr > 1.0 + STATE_TOL {
            return Err(Error::InvalidState(format!("trace {tr} outside (0, 1]")));
        }
        let min = self.eigenvalues()?.first().copied().unwrap_or(0.0);
        if min < -STATE_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn register(&self) -> &QubitRegister {
        &self.register
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn n_qubits(&self) -> usize {
        self.register.len()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Unit-trace copy.
    pub fn normalize(&self) -> Result<Self> {
        let tr = self.trace();
        if tr <= 0.0 {
            return Err(Error::InvalidState(format!("cannot normalize trace {tr}")));
        }
        Ok(Self {
            matrix: self.matrix.scale_real(1.0 / tr),
            register: self.register.clone(),
            normalized: true,
        })
    }

    /// Same state relabeled onto another register of equal size.
    pub fn relabel(&self, register: QubitRegister) -> Result<Self> {
        Self::from_parts(self.matrix.clone(), register, self.normalized)
    }

    /// `U rho U†`; the spectrum is unchanged.
    pub fn conjugate_by(&self, unitary: &ComplexMatrix) -> Result<Self> {
        if unitary.rows() != self.dim() || !unitary.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: unitary.rows(),
            });
        }
        let m = unitary.conjugate(&self.matrix).hermitian_part();
        Self::from_parts(m, self.register.clone(), self.normalized)
    }
}

/// `U_t rho U_t†` with `U_t = exp(-iHt)`.
pub fn evolve(rho: &DensityMatrix, hamiltonian: &ComplexMatrix, t: f64) -> Result<DensityMatrix> {
    if hamiltonian.rows() != rho.dim() || !hamiltonian.is_square() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: hamiltonian.rows(),
        });
    }
    let prop = Propagator::new(hamiltonian)?;
    rho.conjugate_by(&prop.unitary(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qla::kron;

    #[test]
    fn validation_catches_bad_states() {
        let reg = QubitRegister::system(1);
        let not_psd = ComplexMatrix::from_real_diagonal(&[1.5, -0.5]);
        assert!(DensityMatrix::new(not_psd, reg.clone()).is_err());
        let bad_trace = ComplexMatrix::from_real_diagonal(&[0.5, 0.6]);
        assert!(DensityMatrix::new(bad_trace.clone(), reg.clone()).is_err());
        assert!(DensityMatrix::new_unnormalized(bad_trace, reg.clone()).is_err());
        let half = ComplexMatrix::from_real_diagonal(&[0.25, 0.25]);
        assert!(DensityMatrix::new_unnormalized(half, reg.clone()).is_ok());
        let wrong_dim = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(matches!(
            DensityMatrix::new(wrong_dim, reg),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn evolve_at_zero_is_identity() {
        let reg = QubitRegister::system(2);
        let rho = DensityMatrix::new(
            ComplexMatrix::from_real_diagonal(&[0.4, 0.3, 0.2, 0.1]),
            reg,
        )
        .unwrap();
        let z = ComplexMatrix::from_real_diagonal(&[1.0, -1.0]);
        let h = kron(&z, &z);
        let out = evolve(&rho, &h, 0.0).unwrap();
        assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-15);
    }

    #[test]
    fn sigma_z_quarter_period() {
        // exp(-i Z pi/2)|+> = (e^{-i pi/2}, e^{i pi/2})/sqrt2 = -i|->
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = [C64::new(h, 0.0), C64::new(h, 0.0)];
        let rho = DensityMatrix::from_pure(&plus, QubitRegister::system(1)).unwrap();
        let z = ComplexMatrix::from_real_diagonal(&[1.0, -1.0]);
        let t = std::f64::consts::FRAC_PI_2;
        let out = evolve(&rho, &z, t).unwrap();
        let psi = [C64::from_polar(h, -t), C64::from_polar(h, t)];
        let expected = ComplexMatrix::outer(&psi, &psi);
        assert!(out.matrix().max_abs_diff(&expected) < 1e-14);
        let minus = [C64::new(h, 0.0), C64::new(-h, 0.0)];
        assert!(out.matrix().max_abs_diff(&ComplexMatrix::outer(&minus, &minus)) < 1e-14);
    }
}
