//! Dense complex linear algebra and quantum-state primitives.

mod density;
mod eig;
mod entropy;
mod matrix;
mod ops;
mod register;

pub use density::{evolve, DensityMatrix, STATE_TOL};
pub use eig::{hermitian_eig, hermitian_eigenvalues, HermitianEigen, Propagator, HERMITIAN_TOL};
pub use entropy::{
    mutual_information, region_entropy, spectrum_entropy, von_neumann_entropy, ENTROPY_CUTOFF,
};
pub use matrix::{kron, kron_all, ComplexMatrix};
pub use ops::{partial_trace, partial_trace_operator, partial_transpose};
pub use register::{Qubit, QubitRegister};
