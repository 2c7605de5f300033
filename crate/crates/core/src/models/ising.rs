use super::pauli::{Pauli, PauliString};
use crate::qla::ComplexMatrix;
use crate::{Error, Result, C64};

/// Pauli terms of the open transverse/longitudinal-field Ising chain
/// `H = -Σ Z_i Z_{i+1} - h Σ Z_i - g Σ X_i`.
pub fn ising_terms(n: usize, g: f64, h: f64) -> Result<Vec<PauliString>> {
    if n < 2 {
        return Err(Error::TooFewQubits { min: 2, found: n });
    }
    let mut terms = Vec::with_capacity(3 * n);
    for i in 1..n {
        let mut word = vec![Pauli::I; n];
        word[i - 1] = Pauli::Z;
        word[i] = Pauli::Z;
        terms.push(PauliString::new(word, C64::new(-1.0, 0.0))?);
    }
    for i in 1..=n {
        if h != 0.0 {
            terms.push(PauliString::single(n, i, Pauli::Z)?.with_coefficient(C64::new(-h, 0.0)));
        }
        if g != 0.0 {
            terms.push(PauliString::single(n, i, Pauli::X)?.with_coefficient(C64::new(-g, 0.0)));
        }
    }
    Ok(terms)
}

/// Dense Ising-chain Hamiltonian with open boundary.
pub fn build_ising(n: usize, g: f64, h: f64) -> Result<ComplexMatrix> {
    let d = 1usize << n;
    let mut m = ComplexMatrix::zeros(d, d);
    for t in ising_terms(n, g, h)? {
        t.to_mask().add_to(&mut m);
    }
    Ok(m)
}
