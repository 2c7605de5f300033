use super::pauli::{pauli_matrix, Pauli, PauliString};
use crate::qla::{ComplexMatrix, Qubit};
use crate::{Error, Result, C64};

const SCRAMBLER: [[i8; 8]; 8] = [
    [-1, 0, 0, -1, 0, -1, -1, 0],
    [0, 1, -1, 0, -1, 0, 0, 1],
    [0, -1, 1, 0, -1, 0, 0, 1],
    [1, 0, 0, 1, 0, -1, -1, 0],
    [0, -1, -1, 0, 1, 0, 0, 1],
    [1, 0, 0, -1, 0, 1, -1, 0],
    [1, 0, 0, -1, 0, -1, 1, 0],
    [0, -1, -1, 0, -1, 0, 0, -1],
];

/// The three-qubit Clifford scrambler `U_s = (i/2) M`.
pub fn clifford_scrambler_unitary() -> ComplexMatrix {
    ComplexMatrix::from_fn(8, 8, |r, c| C64::new(0.0, 0.5 * SCRAMBLER[r][c] as f64))
}

/// Images of the nine single-qubit Paulis under conjugation by `U_s`; each
/// image carries coefficient -1.
pub fn operator_growth_table() -> Vec<(PauliString, PauliString)> {
    const ROWS: [(&str, &str); 9] = [
        ("XII", "XYY"),
        ("YII", "YZZ"),
        ("ZII", "ZXX"),
        ("IXI", "YXY"),
        ("IYI", "ZYZ"),
        ("IZI", "XZX"),
        ("IIX", "YYX"),
        ("IIY", "ZZY"),
        ("IIZ", "XXZ"),
    ];
    ROWS.iter()
        .map(|(a, b)| {
            let input: PauliString = a.parse().expect("valid word");
            let image: PauliString = b.parse().expect("valid word");
            (input, image.with_coefficient(C64::new(-1.0, 0.0)))
        })
        .collect()
}

/// `exp(-i θ/2 X_i X_j)` on `n` qubits (1-based sites).
pub fn xx_gate(n: usize, i: usize, j: usize, theta: f64) -> Result<ComplexMatrix> {
    for s in [i, j] {
        if s == 0 || s > n {
            return Err(Error::IndexOutOfRange { index: s, max: n });
        }
    }
    if i == j {
        return Err(Error::DuplicateQubit(Qubit::Sys(i as u32)));
    }
    let mut word = vec![Pauli::I; n];
    word[i - 1] = Pauli::X;
    word[j - 1] = Pauli::X;
    let p = PauliString::new(word, C64::new(1.0, 0.0))?;
    Ok(rotation(&pauli_matrix(&p), theta))
}

/// `exp(-i θ/2 Z_i)` on `n` qubits.
pub fn rz_gate(n: usize, i: usize, theta: f64) -> Result<ComplexMatrix> {
    Ok(rotation(&pauli_matrix(&PauliString::single(n, i, Pauli::Z)?), theta))
}

/// `cos(θ/2) I - i sin(θ/2) P` for an involutory Pauli `P`.
fn rotation(p: &ComplexMatrix, theta: f64) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(p.rows()).scale_real((theta / 2.0).cos());
    u.axpy(C64::new(0.0, -(theta / 2.0).sin()), p);
    u
}

/// θ-parametrized three-qubit scrambling circuit: an `XX(θ)` coupling on each
/// pair, `R_z(θ)` on every qubit, then the couplings again. The identity at
/// θ = 0; at θ = π/2 every single-qubit Pauli grows to weight three, as under
/// `U_s`.
pub fn clifford_scan_unitary(theta: f64) -> ComplexMatrix {
    const PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];
    let mut u = ComplexMatrix::identity(8);
    let mut apply = |g: ComplexMatrix| u = g.matmul(&u);
    for &(i, j) in &PAIRS {
        apply(xx_gate(3, i, j, theta).expect("valid sites"));
    }
    for q in 1..=3 {
        apply(rz_gate(3, q, theta).expect("valid site"));
    }
    for &(i, j) in &PAIRS {
        apply(xx_gate(3, i, j, theta).expect("valid sites"));
    }
    u
}
