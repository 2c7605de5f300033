use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::qla::ComplexMatrix;
use crate::{Error, Result, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> ComplexMatrix {
        let o = C64::new(0.0, 0.0);
        let l = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        let data = match self {
            Pauli::I => vec![l, o, o, l],
            Pauli::X => vec![o, l, l, o],
            Pauli::Y => vec![o, -i, i, o],
            Pauli::Z => vec![l, o, o, -l],
        };
        ComplexMatrix::from_vec(2, 2, data).expect("2x2")
    }

    /// (x bit, z bit) with the phase of `X^x Z^z` needed to recover this Pauli.
    fn symplectic(self) -> (bool, bool, C64) {
        match self {
            Pauli::I => (false, false, C64::new(1.0, 0.0)),
            Pauli::X => (true, false, C64::new(1.0, 0.0)),
            // Y = i X Z
            Pauli::Y => (true, true, C64::new(0.0, 1.0)),
            Pauli::Z => (false, true, C64::new(1.0, 0.0)),
        }
    }
}

impl TryFrom<char> for Pauli {
    type Error = Error;
    fn try_from(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::InvalidInput(format!("not a Pauli letter: {other:?}"))),
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        };
        write!(f, "{c}")
    }
}

/// A weighted tensor product of single-qubit Paulis; `word[0]` acts on `q1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliString {
    pub word: Vec<Pauli>,
    pub coefficient: C64,
}

impl PauliString {
    pub fn new(word: Vec<Pauli>, coefficient: C64) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidInput("empty Pauli word".into()));
        }
        if !(coefficient.re.is_finite() && coefficient.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite Pauli coefficient".into()));
        }
        Ok(Self { word, coefficient })
    }

    /// `p` on qubit `site` (1-based) of an `n`-qubit register.
    pub fn single(n: usize, site: usize, p: Pauli) -> Result<Self> {
        if site == 0 || site > n {
            return Err(Error::IndexOutOfRange { index: site, max: n });
        }
        let mut word = vec![Pauli::I; n];
        word[site - 1] = p;
        Self::new(word, C64::new(1.0, 0.0))
    }

    pub fn with_coefficient(mut self, c: C64) -> Self {
        self.coefficient = c;
        self
    }

    pub fn n_qubits(&self) -> usize {
        self.word.len()
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> usize {
        self.word.iter().filter(|&&p| p != Pauli::I).count()
    }

    pub(crate) fn to_mask(&self) -> PauliMask {
        let n = self.word.len();
        let mut m = PauliMask {
            n,
            x: 0,
            z: 0,
            phase: self.coefficient,
        };
        // X^x Z^z per site; sites commute with each other, so phases multiply.
        for (k, &p) in self.word.iter().enumerate() {
            let (xb, zb, ph) = p.symplectic();
            let bit = 1usize << (n - 1 - k);
            if xb {
                m.x |= bit;
            }
            if zb {
                m.z |= bit;
            }
            m.phase *= ph;
        }
        m
    }
}

impl FromStr for PauliString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let word = s.chars().map(Pauli::try_from).collect::<Result<Vec<_>>>()?;
        Self::new(word, C64::new(1.0, 0.0))
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient != C64::new(1.0, 0.0) {
            write!(f, "({})·", self.coefficient)?;
        }
        for p in &self.word {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// `phase · X^x Z^z` on `n` qubits, bit `n-1-k` addressing qubit `k+1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct PauliMask {
    pub n: usize,
    pub x: usize,
    pub z: usize,
    pub phase: C64,
}

impl PauliMask {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            x: 0,
            z: 0,
            phase: C64::new(1.0, 0.0),
        }
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        // Z^b X^c = (-1)^{|b & c|} X^c Z^b
        let sign = if (self.z & other.x).count_ones() % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        Self {
            n: self.n,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
            phase: self.phase * other.phase * sign,
        }
    }

    pub fn scaled(mut self, s: C64) -> Self {
        self.phase *= s;
        self
    }

    /// `target += self` as a dense matrix.
    pub fn add_to(&self, target: &mut ComplexMatrix) {
        let d = 1usize << self.n;
        debug_assert_eq!(target.rows(), d);
        for c in 0..d {
            let v = if (self.z & c).count_ones() % 2 == 1 {
                -self.phase
            } else {
                self.phase
            };
            target[(c ^ self.x, c)] += v;
        }
    }

    pub fn to_matrix(self) -> ComplexMatrix {
        let d = 1usize << self.n;
        let mut m = ComplexMatrix::zeros(d, d);
        self.add_to(&mut m);
        m
    }
}

/// Dense matrix of a Pauli string: coefficient times the Kronecker product of
/// its letters in register order.
pub fn pauli_matrix(word: &PauliString) -> ComplexMatrix {
    word.to_mask().to_matrix()
}

/// Dense matrix of `Σ c_k P_k`; all strings must have the same length.
pub fn pauli_sum(terms: &[PauliString]) -> Result<ComplexMatrix> {
    let n = terms
        .first()
        .ok_or_else(|| Error::InvalidInput("empty Pauli sum".into()))?
        .n_qubits();
    let d = 1usize << n;
    let mut m = ComplexMatrix::zeros(d, d);
    for t in terms {
        if t.n_qubits() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.n_qubits(),
            });
        }
        t.to_mask().add_to(&mut m);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qla::{kron, kron_all};

    #[test]
    fn single_letters() {
        let i = pauli_matrix(&"I".parse().unwrap());
        assert_eq!(i, ComplexMatrix::identity(2));
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            let s = PauliString::new(vec![p], C64::new(1.0, 0.0)).unwrap();
            assert!(pauli_matrix(&s).max_abs_diff(&p.matrix()) < 1e-15);
        }
    }

    #[test]
    fn zz_is_diagonal() {
        let zz = pauli_matrix(&"ZZ".parse().unwrap());
        assert!(zz.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[1., -1., -1., 1.])) < 1e-15);
    }

    #[test]
    fn words_match_kron() {
        let xy = pauli_matrix(&"XY".parse().unwrap());
        assert!(xy.max_abs_diff(&kron(&Pauli::X.matrix(), &Pauli::Y.matrix())) < 1e-15);
        let words = ["YZXI", "IYYX", "ZIXY", "XXXX", "YYYY"];
        for w in words {
            let s: PauliString = w.parse().unwrap();
            let s = s.with_coefficient(C64::new(0.3, -1.2));
            let mats: Vec<_> = s.word.iter().map(|p| p.matrix()).collect();
            let oracle = kron_all(mats.iter()).scale(s.coefficient);
            assert!(pauli_matrix(&s).max_abs_diff(&oracle) < 1e-15, "{w}");
        }
    }

    #[test]
    fn mask_product_matches_matmul() {
        let words = ["XYZ", "ZZY", "YIX", "IXY"];
        for a in words {
            for b in words {
                let pa: PauliString = a.parse().unwrap();
                let pb: PauliString = b.parse().unwrap();
                let prod = pa.to_mask().mul(&pb.to_mask()).to_matrix();
                let oracle = pauli_matrix(&pa).matmul(&pauli_matrix(&pb));
                assert!(prod.max_abs_diff(&oracle) < 1e-15);
            }
        }
    }

    #[test]
    fn parse_and_weight() {
        let s: PauliString = "xIzY".parse().unwrap();
        assert_eq!(s.weight(), 3);
        assert_eq!(s.to_string(), "XIZY");
        assert!("XQ".parse::<PauliString>().is_err());
        assert!("".parse::<PauliString>().is_err());
        assert!(PauliString::single(3, 4, Pauli::X).is_err());
    }
}
