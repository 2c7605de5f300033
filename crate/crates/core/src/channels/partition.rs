use serde::{Deserialize, Serialize};

use crate::qla::{Qubit, QubitRegister};
use crate::{Error, Result};

/// Input region `A` (the reference of `q1`) and a bipartition `C | D` of the
/// output qubits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct PartitionSpec {
    n_qubits: usize,
    region_a: QubitRegister,
    region_c: QubitRegister,
    region_d: QubitRegister,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    n_qubits: usize,
    c: Vec<u32>,
    d: Vec<u32>,
}

impl PartitionSpec {
    pub fn new(n_qubits: usize, region_c: QubitRegister, region_d: QubitRegister) -> Result<Self> {
        let outputs = QubitRegister::system(n_qubits);
        for q in region_c.iter().chain(region_d.iter()) {
            if !outputs.contains(q) {
                return Err(Error::UnknownQubit(q));
            }
        }
        if let Some(q) = region_c.overlap(&region_d) {
            return Err(Error::OverlappingRegions(q));
        }
        if region_c.is_empty() || region_d.is_empty() {
            return Err(Error::InvalidPartition("regions C and D must be non-empty".into()));
        }
        if region_c.len() + region_d.len() != n_qubits {
            return Err(Error::InvalidPartition(format!(
                "C and D cover {} of {} output qubits",
                region_c.len() + region_d.len(),
                n_qubits
            )));
        }
        Ok(Self {
            n_qubits,
            region_a: QubitRegister::new(vec![Qubit::Ref(1)])?,
            region_c: outputs.restrict(&region_c)?,
            region_d: outputs.restrict(&region_d)?,
        })
    }

    /// `C = {q1..q_nc}`, `D` the remaining qubits.
    pub fn contiguous(n_qubits: usize, n_c: usize) -> Result<Self> {
        let c: Vec<u32> = (1..=n_c as u32).collect();
        let d: Vec<u32> = (n_c as u32 + 1..=n_qubits as u32).collect();
        Self::new(n_qubits, QubitRegister::sys(&c)?, QubitRegister::sys(&d)?)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_c(&self) -> usize {
        self.region_c.len()
    }

    pub fn n_d(&self) -> usize {
        self.region_d.len()
    }

    pub fn region_a(&self) -> &QubitRegister {
        &self.region_a
    }

    pub fn region_c(&self) -> &QubitRegister {
        &self.region_c
    }

    pub fn region_d(&self) -> &QubitRegister {
        &self.region_d
    }

    /// Same partition with `C` and `D` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            n_qubits: self.n_qubits,
            region_a: self.region_a.clone(),
            region_c: self.region_d.clone(),
            region_d: self.region_c.clone(),
        }
    }
}

impl TryFrom<RawPartition> for PartitionSpec {
    type Error = Error;
    fn try_from(r: RawPartition) -> Result<Self> {
        Self::new(r.n_qubits, QubitRegister::sys(&r.c)?, QubitRegister::sys(&r.d)?)
    }
}

impl From<PartitionSpec> for RawPartition {
    fn from(p: PartitionSpec) -> Self {
        RawPartition {
            n_qubits: p.n_qubits,
            c: p.region_c.iter().map(Qubit::index).collect(),
            d: p.region_d.iter().map(Qubit::index).collect(),
        }
    }
}
