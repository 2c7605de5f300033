use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A qubit label. System qubits are numbered from 1; a reference qubit carries
/// the number of the system qubit it purifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Qubit {
    Sys(u32),
    Ref(u32),
}

impl Qubit {
    pub fn index(self) -> u32 {
        match self {
            Qubit::Sys(i) | Qubit::Ref(i) => i,
        }
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Qubit::Sys(i) => write!(f, "q{i}"),
            Qubit::Ref(i) => write!(f, "r{i}"),
        }
    }
}

/// Ordered list of distinct qubit labels; the first label is the leftmost
/// tensor factor (most significant bit of a basis index).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Qubit>", into = "Vec<Qubit>")]
pub struct QubitRegister {
    labels: Vec<Qubit>,
}

impl QubitRegister {
    pub fn new(labels: Vec<Qubit>) -> Result<Self> {
        for (i, q) in labels.iter().enumerate() {
            if labels[..i].contains(q) {
                return Err(Error::DuplicateQubit(*q));
            }
        }
        Ok(Self { labels })
    }

    /// System qubits `q1..=qn`.
    pub fn system(n: usize) -> Self {
        Self {
            labels: (1..=n as u32).map(Qubit::Sys).collect(),
        }
    }

    /// System qubits from a list of 1-based indices.
    pub fn sys(indices: &[u32]) -> Result<Self> {
        Self::new(indices.iter().map(|&i| Qubit::Sys(i)).collect())
    }

    pub fn empty() -> Self {
        Self { labels: Vec::new() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Hilbert-space dimension `2^len`.
    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    pub fn labels(&self) -> &[Qubit] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = Qubit> + '_ {
        self.labels.iter().copied()
    }

    pub fn position(&self, q: Qubit) -> Option<usize> {
        self.labels.iter().position(|&l| l == q)
    }

    pub fn contains(&self, q: Qubit) -> bool {
        self.labels.contains(&q)
    }

    pub fn is_subset_of(&self, other: &QubitRegister) -> bool {
        self.labels.iter().all(|&q| other.contains(q))
    }

    /// First shared label, if any.
    pub fn overlap(&self, other: &QubitRegister) -> Option<Qubit> {
        self.labels.iter().copied().find(|&q| other.contains(q))
    }

    /// Labels of `self` not in `other`, in `self` order.
    pub fn difference(&self, other: &QubitRegister) -> QubitRegister {
        Self {
            labels: self.iter().filter(|&q| !other.contains(q)).collect(),
        }
    }

    /// Concatenation; fails on a repeated label.
    pub fn concat(&self, other: &QubitRegister) -> Result<QubitRegister> {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Self::new(labels)
    }

    /// `subset` reordered to follow the order of `self`.
    pub fn restrict(&self, subset: &QubitRegister) -> Result<QubitRegister> {
        if let Some(q) = subset.iter().find(|&q| !self.contains(q)) {
            return Err(Error::UnknownQubit(q));
        }
        Ok(Self {
            labels: self.iter().filter(|&q| subset.contains(q)).collect(),
        })
    }

    /// Bit shift of each label inside a basis index of this register.
    pub(crate) fn shift_of(&self, q: Qubit) -> Option<usize> {
        self.position(q).map(|p| self.labels.len() - 1 - p)
    }
}

impl TryFrom<Vec<Qubit>> for QubitRegister {
    type Error = Error;
    fn try_from(labels: Vec<Qubit>) -> Result<Self> {
        Self::new(labels)
    }
}

impl From<QubitRegister> for Vec<Qubit> {
    fn from(r: QubitRegister) -> Self {
        r.labels
    }
}

impl fmt::Display for QubitRegister {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}
