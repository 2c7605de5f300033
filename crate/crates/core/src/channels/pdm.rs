use super::choi::build_choi;
use crate::models::{pauli_matrix, Pauli, PauliString};
use crate::qla::{
    hermitian_eigenvalues, kron, partial_trace_operator, partial_transpose, ComplexMatrix, Qubit, QubitRegister,
};
use crate::steering::{Assemblage, MeasurementSet};
use crate::{Error, Result, C64};

/// Largest register for which the correlator sum (`16^N` Pauli pairs) is run.
pub const MAX_CORRELATOR_QUBITS: usize = 3;

/// Two-time pseudo-density matrix on `[inputs | outputs]`. Hermitian with unit
/// trace; negative eigenvalues signal temporal correlations.
#[derive(Clone, Debug)]
pub struct PseudoDensityMatrix {
    matrix: ComplexMatrix,
    input_region: QubitRegister,
    output_region: QubitRegister,
}

impl PseudoDensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn input_region(&self) -> &QubitRegister {
        &self.input_region
    }

    pub fn output_region(&self) -> &QubitRegister {
        &self.output_region
    }

    pub fn register(&self) -> QubitRegister {
        self.input_region
            .concat(&self.output_region)
            .expect("input and output labels are distinct")
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }
}

/// PDM of `U` for a maximally mixed input, as the input-side partial
/// transpose of the fully referenced Choi state.
pub fn build_pdm(unitary: &ComplexMatrix, n_qubits: usize) -> Result<PseudoDensityMatrix> {
    let choi = build_choi(unitary, n_qubits, &QubitRegister::system(n_qubits))?;
    let register = choi.state().register().clone();
    let matrix = partial_transpose(choi.state().matrix(), choi.input_region(), &register)?;
    Ok(PseudoDensityMatrix {
        matrix,
        input_region: choi.input_region().clone(),
        output_region: choi.output_region().clone(),
    })
}

fn pauli_words(n: usize) -> Vec<PauliString> {
    const LETTERS: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
    (0..1usize << (2 * n))
        .map(|mut w| {
            let mut word = vec![Pauli::I; n];
            for k in (0..n).rev() {
                word[k] = LETTERS[w & 3];
                w >>= 2;
            }
            PauliString::new(word, C64::new(1.0, 0.0)).expect("non-empty word")
        })
        .collect()
}

/// `E[{σ_i, σ_j}] = 2^-N tr(σ_j U σ_i U†)`: expectation of the product of the
/// outcomes of `σ_i` measured on the maximally mixed input and `σ_j` measured
/// after the channel.
pub fn two_time_correlator(unitary: &ComplexMatrix, before: &PauliString, after: &PauliString) -> f64 {
    let evolved = unitary.conjugate(&pauli_matrix(before));
    pauli_matrix(after).real_trace_product(&evolved) / unitary.rows() as f64
}

/// PDM assembled term by term, `R = 4^-N Σ_{i,j} C_ij σ_i ⊗ σ_j`, from the
/// two-time Pauli correlators.
pub fn build_pdm_from_correlators(unitary: &ComplexMatrix, n_qubits: usize) -> Result<PseudoDensityMatrix> {
    if n_qubits > MAX_CORRELATOR_QUBITS {
        return Err(Error::InvalidInput(format!(
            "correlator assembly limited to {MAX_CORRELATOR_QUBITS} qubits"
        )));
    }
    let d = 1usize << n_qubits;
    if !unitary.is_square() || unitary.rows() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: unitary.rows(),
        });
    }
    let words = pauli_words(n_qubits);
    let mats: Vec<ComplexMatrix> = words.iter().map(pauli_matrix).collect();
    let norm = 1.0 / (d * d) as f64;
    let mut r = ComplexMatrix::zeros(d * d, d * d);
    for (si, mi) in mats.iter().enumerate() {
        let evolved = unitary.conjugate(mi);
        for mj in &mats {
            let c = mj.real_trace_product(&evolved) / d as f64;
            if c.abs() < 1e-15 {
                continue;
            }
            r.axpy(C64::new(c * norm, 0.0), &kron(&mats[si], mj));
        }
    }
    let outputs = QubitRegister::system(n_qubits);
    let inputs = QubitRegister::new(outputs.iter().map(|q| Qubit::Ref(q.index())).collect())?;
    Ok(PseudoDensityMatrix {
        matrix: r,
        input_region: inputs,
        output_region: outputs,
    })
}

/// Born rule on the PDM: `σ_{a|x} = tr_In[(E_{a|x} ⊗ I) R]`, with `E`
/// acting on the reference of `q1`.
pub fn assemblage_from_pdm(pdm: &PseudoDensityMatrix, meas: &MeasurementSet) -> Result<Assemblage> {
    if meas.dim() != 2 {
        return Err(Error::NonProjective("measurements must act on a single qubit".into()));
    }
    let register = pdm.register();
    let shift = register
        .shift_of(Qubit::Ref(1))
        .ok_or(Error::UnknownQubit(Qubit::Ref(1)))?;
    let dim = register.dim();
    let mut members = Vec::with_capacity(meas.n_settings() * meas.n_outcomes());
    for x in 0..meas.n_settings() {
        for a in 0..meas.n_outcomes() {
            let e = meas.projector(x, a);
            // (E ⊗ I) R, touching only the r1 bit of the row index
            let m = pdm.matrix();
            let prod = ComplexMatrix::from_fn(dim, dim, |i, j| {
                let bi = (i >> shift) & 1;
                let base = i & !(1 << shift);
                e[(bi, 0)] * m[(base, j)] + e[(bi, 1)] * m[(base | (1 << shift), j)]
            });
            let (reduced, _) = partial_trace_operator(&prod, &register, pdm.output_region())?;
            members.push(reduced);
        }
    }
    Assemblage::new(meas.n_settings(), meas.n_outcomes(), members, pdm.output_region().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::haar_unitary_seeded;
    use crate::steering::encode_and_evolve;

    #[test]
    fn identity_process() {
        let pdm = build_pdm_from_correlators(&ComplexMatrix::identity(2), 1).unwrap();
        let ev = pdm.eigenvalues().unwrap();
        let expect = [-0.5, 0.5, 0.5, 0.5];
        for (a, b) in ev.iter().zip(expect) {
            assert!((a - b).abs() < 1e-14);
        }
        assert!((pdm.trace() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn routes_agree() {
        for (n, seed) in [(1, 1), (2, 2), (3, 3)] {
            let u = haar_unitary_seeded(1 << n, seed);
            let a = build_pdm(&u, n).unwrap();
            let b = build_pdm_from_correlators(&u, n).unwrap();
            assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-10, "n={n}");
            assert!(a.matrix().hermiticity_error() < 1e-12);
            assert!((a.trace() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn pdm_assemblage_matches_operational() {
        let meas = MeasurementSet::pauli();
        let id = assemblage_from_pdm(&build_pdm(&ComplexMatrix::identity(2), 1).unwrap(), &meas).unwrap();
        let z0 = id.member(2, 0).matrix();
        assert!(z0.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.5, 0.0])) < 1e-14);
        for x in 1..3 {
            assert!(id.marginal(x).max_abs_diff(&id.marginal(0)) < 1e-14);
        }
        let u = haar_unitary_seeded(8, 5);
        let from_pdm = assemblage_from_pdm(&build_pdm(&u, 3).unwrap(), &meas).unwrap();
        let direct = encode_and_evolve(&meas, &u, 3).unwrap();
        for (p, q) in from_pdm.members().iter().zip(direct.members()) {
            assert!(p.matrix().max_abs_diff(q.matrix()) < 1e-12);
        }
    }

    #[test]
    fn correlator_size_guard() {
        assert!(build_pdm_from_correlators(&ComplexMatrix::identity(16), 4).is_err());
    }

    #[test]
    fn correlator_values() {
        let u = ComplexMatrix::identity(2);
        let x: PauliString = "X".parse().unwrap();
        let z: PauliString = "Z".parse().unwrap();
        assert!((two_time_correlator(&u, &x, &x) - 1.0).abs() < 1e-15);
        assert!(two_time_correlator(&u, &x, &z).abs() < 1e-15);
    }
}
