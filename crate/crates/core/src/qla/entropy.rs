use super::{partial_trace, DensityMatrix, QubitRegister};
use crate::{Error, Result};

/// Eigenvalues at or below this are dropped from entropy sums.
pub const ENTROPY_CUTOFF: f64 = 1e-12;

/// Shannon entropy in bits of a spectrum; tiny negatives count as zero.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> f64 {
    eigenvalues
        .iter()
        .filter(|&&l| l > ENTROPY_CUTOFF)
        .map(|&l| -l * l.log2())
        .sum()
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    // eigenvalues of a constructed state cannot fail to decompose
    rho.eigenvalues()
        .map(|ev| spectrum_entropy(&ev))
        .expect("density matrix is Hermitian")
}

/// Entropy of the reduced state on `region`.
pub fn region_entropy(rho: &DensityMatrix, region: &QubitRegister) -> Result<f64> {
    if region.len() == rho.n_qubits() {
        rho.register().restrict(region)?;
        return Ok(von_neumann_entropy(rho));
    }
    Ok(von_neumann_entropy(&partial_trace(rho, region)?))
}

/// `S(A) + S(B) - S(AB)` in bits.
pub fn mutual_information(
    rho: &DensityMatrix,
    region_a: &QubitRegister,
    region_b: &QubitRegister,
) -> Result<f64> {
    if let Some(q) = region_a.overlap(region_b) {
        return Err(Error::OverlappingRegions(q));
    }
    let ab = rho.register().restrict(&region_a.concat(region_b)?)?;
    let sa = region_entropy(rho, region_a)?;
    let sb = region_entropy(rho, region_b)?;
    let sab = region_entropy(rho, &ab)?;
    Ok(sa + sb - sab)
}
