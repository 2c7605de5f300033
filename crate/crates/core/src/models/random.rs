use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::channels::PartitionSpec;
use crate::qla::{ComplexMatrix, Qubit, QubitRegister};
use crate::{Error, Result, C64};

/// Haar-random `d×d` unitary: QR of a complex Ginibre matrix with the phases
/// of `diag(R)` absorbed into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let g = faer::Mat::<C64>::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re * s, im * s)
    });
    let qr = g.qr();
    let q = qr.compute_Q();
    let r = qr.R();
    ComplexMatrix::from_fn(d, d, |i, j| {
        let rjj = r[(j, j)];
        let n = rjj.norm();
        let phase = if n > 0.0 { rjj / n } else { C64::new(1.0, 0.0) };
        q[(i, j)] * phase
    })
}

pub fn haar_unitary_seeded(d: usize, seed: u64) -> ComplexMatrix {
    haar_unitary(d, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Lifts `op`, acting on `targets` (factor order as listed), to `q1..qn`.
pub fn embed_operator(op: &ComplexMatrix, targets: &QubitRegister, n: usize) -> Result<ComplexMatrix> {
    let full = QubitRegister::system(n);
    if op.rows() != targets.dim() || op.cols() != targets.dim() {
        return Err(Error::DimensionMismatch {
            expected: targets.dim(),
            found: op.rows(),
        });
    }
    let shifts = targets
        .iter()
        .map(|q| full.shift_of(q).ok_or(Error::UnknownQubit(q)))
        .collect::<Result<Vec<_>>>()?;
    let mask: usize = shifts.iter().map(|s| 1usize << s).sum();
    let k = shifts.len();
    let sub = |x: usize| {
        shifts
            .iter()
            .enumerate()
            .fold(0usize, |acc, (p, &s)| acc | (((x >> s) & 1) << (k - 1 - p)))
    };
    let d = 1usize << n;
    let mut out = ComplexMatrix::zeros(d, d);
    for r in 0..d {
        let sr = sub(r);
        let rest = r & !mask;
        for sc in 0..targets.dim() {
            let mut c = rest;
            for (p, &s) in shifts.iter().enumerate() {
                c |= ((sc >> (k - 1 - p)) & 1) << s;
            }
            out[(r, c)] = op[(sr, sc)];
        }
    }
    Ok(out)
}

/// Haar-random `U_C ⊗ U_D` for the output regions of `partition`.
pub fn random_local_unitary(partition: &PartitionSpec, seed: u64) -> Result<ComplexMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = partition.n_qubits();
    let uc = haar_unitary(partition.region_c().dim(), &mut rng);
    let ud = haar_unitary(partition.region_d().dim(), &mut rng);
    let a = embed_operator(&uc, partition.region_c(), n)?;
    let b = embed_operator(&ud, partition.region_d(), n)?;
    Ok(a.matmul(&b))
}

/// Permutation matrix applying SWAPs on pairwise disjoint qubit pairs
/// (one layer of a SWAP network).
pub fn swap_network(n: usize, pairs: &[(u32, u32)]) -> Result<ComplexMatrix> {
    let mut seen: Vec<u32> = Vec::new();
    for &(a, b) in pairs {
        for q in [a, b] {
            if q == 0 || q as usize > n {
                return Err(Error::IndexOutOfRange { index: q as usize, max: n });
            }
            if seen.contains(&q) {
                return Err(Error::OverlappingRegions(Qubit::Sys(q)));
            }
            seen.push(q);
        }
    }
    let d = 1usize << n;
    let mut out = ComplexMatrix::zeros(d, d);
    for c in 0..d {
        let mut r = c;
        for &(a, b) in pairs {
            let (sa, sb) = (n - a as usize, n - b as usize);
            let (ba, bb) = ((c >> sa) & 1, (c >> sb) & 1);
            r = (r & !(1 << sa) & !(1 << sb)) | (bb << sa) | (ba << sb);
        }
        out[(r, c)] = C64::new(1.0, 0.0);
    }
    Ok(out)
}

/// Product of SWAP layers, first layer applied first.
pub fn swap_circuit(n: usize, layers: &[Vec<(u32, u32)>]) -> Result<ComplexMatrix> {
    let mut u = ComplexMatrix::identity(1 << n);
    for layer in layers {
        u = swap_network(n, layer)?.matmul(&u);
    }
    Ok(u)
}

/// `depth` layers, each a random non-empty set of disjoint pairs.
pub fn random_swap_layers<R: Rng + ?Sized>(n: usize, depth: usize, rng: &mut R) -> Vec<Vec<(u32, u32)>> {
    (0..depth)
        .map(|_| {
            let mut qs: Vec<u32> = (1..=n as u32).collect();
            for i in (1..qs.len()).rev() {
                qs.swap(i, rng.random_range(0..=i));
            }
            let n_pairs = rng.random_range(1..=n / 2);
            qs.chunks_exact(2).take(n_pairs).map(|p| (p[0], p[1])).collect()
        })
        .collect()
}
