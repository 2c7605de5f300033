use super::{ComplexMatrix, DensityMatrix, QubitRegister};
use crate::{Error, Result, C64};

fn check_operator(m: &ComplexMatrix, full: &QubitRegister) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != full.dim() {
        return Err(Error::DimensionMismatch {
            expected: full.dim(),
            found: m.rows(),
        });
    }
    Ok(())
}

/// For each value of the bits selected by `part`, the offset it contributes
/// to a basis index of `full`.
fn index_offsets(full: &QubitRegister, part: &QubitRegister) -> Vec<usize> {
    let shifts: Vec<usize> = part
        .iter()
        .map(|q| full.shift_of(q).expect("label checked by caller"))
        .collect();
    let k = shifts.len();
    (0..1usize << k)
        .map(|v| {
            shifts
                .iter()
                .enumerate()
                .filter(|&(p, _)| (v >> (k - 1 - p)) & 1 == 1)
                .map(|(_, &s)| 1usize << s)
                .sum()
        })
        .collect()
}

/// Partial trace of an operator on `full`, keeping the labels in `keep`
/// (output factor order follows `full`).
pub fn partial_trace_operator(
    m: &ComplexMatrix,
    full: &QubitRegister,
    keep: &QubitRegister,
) -> Result<(ComplexMatrix, QubitRegister)> {
    check_operator(m, full)?;
    let kept = full.restrict(keep)?;
    let traced = full.difference(&kept);
    let kept_off = index_offsets(full, &kept);
    let traced_off = index_offsets(full, &traced);
    let dk = kept_off.len();
    let mut out = ComplexMatrix::zeros(dk, dk);
    for (i, &oi) in kept_off.iter().enumerate() {
        for (j, &oj) in kept_off.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for &e in &traced_off {
                acc += m[(oi + e, oj + e)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok((out, kept))
}

/// Reduced state on `keep`.
pub fn partial_trace(rho: &DensityMatrix, keep: &QubitRegister) -> Result<DensityMatrix> {
    let (m, reg) = partial_trace_operator(rho.matrix(), rho.register(), keep)?;
    DensityMatrix::from_parts(m, reg, rho.is_normalized())
}

/// Transpose on the factors in `subsystem` only. Involutive.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    subsystem: &QubitRegister,
    full: &QubitRegister,
) -> Result<ComplexMatrix> {
    check_operator(rho, full)?;
    let sub = full.restrict(subsystem)?;
    let mask: usize = sub
        .iter()
        .map(|q| 1usize << full.shift_of(q).expect("restricted"))
        .sum();
    let n = rho.rows();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        let i2 = (i & !mask) | (j & mask);
        let j2 = (j & !mask) | (i & mask);
        rho[(i2, j2)]
    }))
}
