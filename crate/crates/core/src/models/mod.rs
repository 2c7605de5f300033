//! Operators of the model studies: Pauli strings, Ising and SYK Hamiltonians,
//! the three-qubit Clifford scrambler, and random/structured unitaries.

mod clifford;
mod ising;
mod pauli;
mod random;
mod syk;

use serde::{Deserialize, Serialize};

pub use clifford::{clifford_scan_unitary, clifford_scrambler_unitary, operator_growth_table, rz_gate, xx_gate};
pub use ising::{build_ising, ising_terms};
pub use pauli::{pauli_matrix, pauli_sum, Pauli, PauliString};
pub use random::{
    embed_operator, haar_unitary, haar_unitary_seeded, random_local_unitary, random_swap_layers,
    swap_circuit, swap_network,
};
pub use syk::{
    build_syk, jordan_wigner_majorana, sample_syk_couplings, syk_coupling_variance, MajoranaOperator,
};

use crate::qla::ComplexMatrix;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonianKind {
    IsingChain,
    Syk,
    /// Supplied externally; cannot be built from parameters.
    Custom,
}

/// Parameters of a model Hamiltonian.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianSpec {
    pub kind: HamiltonianKind,
    pub n_qubits: usize,
    #[serde(default)]
    pub g: f64,
    #[serde(default)]
    pub h: f64,
    #[serde(rename = "J", default = "default_coupling")]
    pub j: f64,
    #[serde(default)]
    pub seed: u64,
}

fn default_coupling() -> f64 {
    1.0
}

impl HamiltonianSpec {
    pub fn ising(n_qubits: usize, g: f64, h: f64) -> Self {
        Self {
            kind: HamiltonianKind::IsingChain,
            n_qubits,
            g,
            h,
            j: 1.0,
            seed: 0,
        }
    }

    pub fn syk(n_qubits: usize, j: f64, seed: u64) -> Self {
        Self {
            kind: HamiltonianKind::Syk,
            n_qubits,
            g: 0.0,
            h: 0.0,
            j,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_qubits < 2 {
            return Err(Error::TooFewQubits {
                min: 2,
                found: self.n_qubits,
            });
        }
        for (name, v) in [("g", self.g), ("h", self.h), ("J", self.j)] {
            if !v.is_finite() {
                return Err(Error::InvalidInput(format!("parameter {name} is not finite")));
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<ComplexMatrix> {
        self.validate()?;
        match self.kind {
            HamiltonianKind::IsingChain => build_ising(self.n_qubits, self.g, self.h),
            HamiltonianKind::Syk => build_syk(self.n_qubits, self.j, self.seed),
            HamiltonianKind::Custom => Err(Error::InvalidInput(
                "custom models carry their own unitary and have no Hamiltonian".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_json() {
        let s: HamiltonianSpec =
            serde_json::from_str(r#"{"kind":"syk","n_qubits":4,"J":2.0,"seed":7}"#).unwrap();
        assert_eq!(s, HamiltonianSpec::syk(4, 2.0, 7));
        assert_eq!(s.build().unwrap(), build_syk(4, 2.0, 7).unwrap());
        let i: HamiltonianSpec =
            serde_json::from_str(r#"{"kind":"ising_chain","n_qubits":3,"g":1.0,"h":0.5}"#).unwrap();
        assert_eq!(i.build().unwrap(), build_ising(3, 1.0, 0.5).unwrap());
        assert!(HamiltonianSpec::ising(1, 1.0, 0.0).build().is_err());
    }
}
