use crate::qla::{ComplexMatrix, DensityMatrix, Qubit, QubitRegister};
use crate::{Error, Result};

/// Choi state of a unitary channel on `q1..qN`, with references
/// `r_i` maximally entangled with the inputs of the referenced qubits.
/// Register order: references (in system order), then outputs `q1..qN`.
#[derive(Clone, Debug)]
pub struct ChoiState {
    state: DensityMatrix,
    input_region: QubitRegister,
    output_region: QubitRegister,
    channel: ComplexMatrix,
}

impl ChoiState {
    pub fn state(&self) -> &DensityMatrix {
        &self.state
    }

    pub fn input_region(&self) -> &QubitRegister {
        &self.input_region
    }

    pub fn output_region(&self) -> &QubitRegister {
        &self.output_region
    }

    pub fn channel(&self) -> &ComplexMatrix {
        &self.channel
    }

    pub fn n_qubits(&self) -> usize {
        self.output_region.len()
    }

    /// True when every input carries a reference (the state is then pure).
    pub fn is_fully_referenced(&self) -> bool {
        self.input_region.len() == self.output_region.len()
    }
}

/// Columns of `u` whose row index, restricted to the bits in `shifts`, equals
/// `value`; column order is preserved.
fn column_block(u: &ComplexMatrix, shifts: &[usize], value: usize) -> ComplexMatrix {
    let k = shifts.len();
    let cols: Vec<usize> = (0..u.cols())
        .filter(|&c| {
            shifts
                .iter()
                .enumerate()
                .all(|(p, &s)| ((c >> s) & 1) == ((value >> (k - 1 - p)) & 1))
        })
        .collect();
    ComplexMatrix::from_fn(u.rows(), cols.len(), |i, j| u[(i, cols[j])])
}

/// `ρ = 2^-N Σ_{i,j} |i⟩⟨j| ⊗ U_i U_j†`, where `U_i` collects the columns of
/// `U` with the referenced input bits equal to `i`. Unreferenced inputs enter
/// maximally mixed, which equals tracing their references out of the full
/// Choi state.
pub fn build_choi(unitary: &ComplexMatrix, n_qubits: usize, referenced: &QubitRegister) -> Result<ChoiState> {
    let outputs = QubitRegister::system(n_qubits);
    let d = outputs.dim();
    if !unitary.is_square() || unitary.rows() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: unitary.rows(),
        });
    }
    let referenced = outputs.restrict(referenced)?;
    let input_region = QubitRegister::new(referenced.iter().map(|q| Qubit::Ref(q.index())).collect())?;
    let shifts: Vec<usize> = referenced
        .iter()
        .map(|q| outputs.shift_of(q).expect("restricted"))
        .collect();
    let r = referenced.dim();
    let blocks: Vec<ComplexMatrix> = (0..r).map(|i| column_block(unitary, &shifts, i)).collect();
    let scale = 1.0 / d as f64;
    let mut rho = ComplexMatrix::zeros(r * d, r * d);
    for i in 0..r {
        for j in i..r {
            let b = blocks[i].matmul(&blocks[j].dagger());
            for a in 0..d {
                for c in 0..d {
                    let v = b[(a, c)] * scale;
                    rho[(i * d + a, j * d + c)] = v;
                    if i != j {
                        rho[(j * d + c, i * d + a)] = v.conj();
                    }
                }
            }
        }
    }
    let register = input_region.concat(&outputs)?;
    Ok(ChoiState {
        state: DensityMatrix::from_parts(rho, register, true)?,
        input_region,
        output_region: outputs,
        channel: unitary.clone(),
    })
}

/// Choi state with a reference for `q1` only.
pub fn build_choi_q1(unitary: &ComplexMatrix, n_qubits: usize) -> Result<ChoiState> {
    build_choi(unitary, n_qubits, &QubitRegister::sys(&[1])?)
}
