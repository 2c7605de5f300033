use faer::Side;

use super::ComplexMatrix;
use crate::{Error, Result, C64};

/// Hermiticity tolerance for decomposition inputs, relative to `max(1, ‖m‖_max)`.
pub const HERMITIAN_TOL: f64 = 1e-8;

/// Spectral decomposition `m = V diag(values) V†` of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Columns are the eigenvectors, in the order of `values`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// `V f(Λ) V†`
    pub fn map(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        let mut scaled = v.clone();
        for j in 0..n {
            let s = f(self.values[j]);
            for i in 0..n {
                scaled[(i, j)] *= s;
            }
        }
        scaled.matmul(&v.dagger())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map(|x| C64::new(x, 0.0))
    }
}

fn check_hermitian(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let err = m.hermiticity_error();
    if err > HERMITIAN_TOL * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian(err));
    }
    Ok(())
}

/// Eigenvalues (ascending) and a unitary eigenvector matrix of a Hermitian matrix.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianEigen> {
    check_hermitian(m)?;
    let evd = m
        .hermitian_part()
        .to_faer()
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Decomposition(format!("{e:?}")))?;
    let s = evd.S();
    let values = (0..m.rows()).map(|i| s[i].re).collect();
    let u = evd.U();
    let vectors = ComplexMatrix::from_fn(m.rows(), m.cols(), |i, j| u[(i, j)]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only (ascending); cheaper than [`hermitian_eig`].
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    check_hermitian(m)?;
    m.hermitian_part()
        .to_faer()
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Decomposition(format!("{e:?}")))
}

/// Time-evolution operator `exp(-iHt)` built from one cached
/// eigendecomposition of `H`.
#[derive(Clone, Debug)]
pub struct Propagator {
    eigen: HermitianEigen,
}

impl Propagator {
    pub fn new(hamiltonian: &ComplexMatrix) -> Result<Self> {
        Ok(Self {
            eigen: hermitian_eig(hamiltonian)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigen.values.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.eigen.values
    }

    pub fn unitary(&self, t: f64) -> ComplexMatrix {
        self.eigen.map(|e| C64::from_polar(1.0, -e * t))
    }
}
