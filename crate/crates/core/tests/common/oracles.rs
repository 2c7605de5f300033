//! Slow reference implementations. None of these call into the library's
//! linear algebra; they work from index formulas or their own iterations.

use num_complex::Complex64 as C64;
use scrambling::qla::ComplexMatrix;

fn bit(index: usize, pos: usize, n: usize) -> usize {
    (index >> (n - 1 - pos)) & 1
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = ComplexMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar * br {
        for j in 0..ac * bc {
            out[(i, j)] = a[(i / br, j / bc)] * b[(i % br, j % bc)];
        }
    }
    out
}

/// Partial trace over every qubit whose position (0 = leftmost) is not in
/// `keep`; the kept qubits stay in ascending position order.
pub fn partial_trace(m: &ComplexMatrix, n: usize, keep: &[usize]) -> ComplexMatrix {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    let traced: Vec<usize> = (0..n).filter(|p| !keep.contains(p)).collect();
    let k = keep.len();
    let mut out = ComplexMatrix::zeros(1 << k, 1 << k);
    for i in 0..1usize << n {
        for j in 0..1usize << n {
            if traced.iter().any(|&p| bit(i, p, n) != bit(j, p, n)) {
                continue;
            }
            let ri = keep.iter().fold(0, |acc, &p| (acc << 1) | bit(i, p, n));
            let rj = keep.iter().fold(0, |acc, &p| (acc << 1) | bit(j, p, n));
            out[(ri, rj)] += m[(i, j)];
        }
    }
    out
}

/// Transpose of the qubits at `positions`.
pub fn partial_transpose(m: &ComplexMatrix, n: usize, positions: &[usize]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(1 << n, 1 << n);
    for i in 0..1usize << n {
        for j in 0..1usize << n {
            let (mut ni, mut nj) = (i, j);
            for &p in positions {
                let s = n - 1 - p;
                let (bi, bj) = ((i >> s) & 1, (j >> s) & 1);
                ni = (ni & !(1 << s)) | (bj << s);
                nj = (nj & !(1 << s)) | (bi << s);
            }
            out[(ni, nj)] = m[(i, j)];
        }
    }
    out
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on its real
/// symmetric embedding `[[A, -B], [B, A]]`.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
    let d = h.rows();
    let n = 2 * d;
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..d {
        for j in 0..d {
            let z = h[(i, j)];
            a[i][j] = z.re;
            a[i + d][j + d] = z.re;
            a[i][j + d] = -z.im;
            a[i + d][j] = z.im;
        }
    }
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // each eigenvalue appears twice in the embedding
    ev.chunks(2).map(|c| 0.5 * (c[0] + c[1])).collect()
}

pub fn entropy_bits(h: &ComplexMatrix) -> f64 {
    hermitian_eigenvalues(h)
        .into_iter()
        .filter(|&l| l > 1e-12)
        .map(|l| -l * l.log2())
        .sum()
}

/// `I(A:B)` of a state on `n` qubits, regions given as positions.
pub fn mutual_information(rho: &ComplexMatrix, n: usize, a: &[usize], b: &[usize]) -> f64 {
    let ab: Vec<usize> = a.iter().chain(b).copied().collect();
    entropy_bits(&partial_trace(rho, n, a)) + entropy_bits(&partial_trace(rho, n, b))
        - entropy_bits(&partial_trace(rho, n, &ab))
}

pub fn pauli(k: usize) -> ComplexMatrix {
    let (o, z, i) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 1.0));
    let v = match k {
        0 => [o, z, z, o],
        1 => [z, o, o, z],
        2 => [z, -i, i, z],
        _ => [o, z, z, -o],
    };
    ComplexMatrix::from_vec(2, 2, v.to_vec()).unwrap()
}

type Bloch = [f64; 4];

fn to_bloch(h: &ComplexMatrix) -> Bloch {
    [
        0.5 * (h[(0, 0)] + h[(1, 1)]).re,
        h[(0, 1)].re,
        -h[(0, 1)].im,
        0.5 * (h[(0, 0)] - h[(1, 1)]).re,
    ]
}

fn project_psd(h: &mut Bloch) {
    let r = (h[1] * h[1] + h[2] * h[2] + h[3] * h[3]).sqrt();
    if r < 1e-300 {
        h[0] = h[0].max(0.0);
        return;
    }
    let up = (h[0] + r).max(0.0);
    let dn = (h[0] - r).max(0.0);
    h[0] = 0.5 * (up + dn);
    let s = 0.5 * (up - dn) / r;
    for c in &mut h[1..] {
        *c *= s;
    }
}

fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].abs().partial_cmp(&a[y][col].abs()).unwrap()).unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    x
}

/// Steerable weight of a qubit assemblage (members indexed `x * o + a`) by
/// Douglas-Rachford splitting between the PSD cone and the affine set
/// `S_k + sum_l D_l(k) X_l = sigma_k`, written in Bloch coordinates.
pub fn steering_weight_qubit(members: &[ComplexMatrix], m: usize, o: usize, max_iter: usize) -> f64 {
    let k = m * o;
    let l = o.pow(m as u32);
    let response = |kk: usize, lam: usize| -> f64 {
        let (x, a) = (kk / o, kk % o);
        let digit = (lam / o.pow((m - 1 - x) as u32)) % o;
        if digit == a {
            1.0
        } else {
            0.0
        }
    };
    let mut aat = vec![vec![0.0; k]; k];
    for (r, row) in aat.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = (0..l).map(|lam| response(r, lam) * response(c, lam)).sum::<f64>() + if r == c { 1.0 } else { 0.0 };
        }
    }
    let b: Vec<Bloch> = members.iter().map(to_bloch).collect();
    let nv = l + k;
    let gamma = 0.5;
    let mut z = vec![[0.0; 4]; nv];
    let mut x = vec![[0.0; 4]; nv];
    let mut y = vec![[0.0; 4]; nv];
    for it in 0..max_iter {
        // x = Proj_aff(z - gamma c), with c = -2 on the identity coordinate of each X_l
        for v in 0..nv {
            x[v] = z[v];
            if v < l {
                x[v][0] += 2.0 * gamma;
            }
        }
        for mu in 0..4 {
            let resid: Vec<f64> = (0..k)
                .map(|kk| x[l + kk][mu] + (0..l).map(|lam| response(kk, lam) * x[lam][mu]).sum::<f64>() - b[kk][mu])
                .collect();
            let w = solve_dense(aat.clone(), resid);
            for lam in 0..l {
                x[lam][mu] -= (0..k).map(|kk| response(kk, lam) * w[kk]).sum::<f64>();
            }
            for kk in 0..k {
                x[l + kk][mu] -= w[kk];
            }
        }
        let mut diff = 0.0f64;
        for v in 0..nv {
            let mut t = [0.0; 4];
            for c in 0..4 {
                t[c] = 2.0 * x[v][c] - z[v][c];
            }
            project_psd(&mut t);
            for c in 0..4 {
                diff = diff.max((t[c] - x[v][c]).abs());
                z[v][c] += t[c] - x[v][c];
            }
            y[v] = t;
        }
        if diff < 1e-12 && it > 100 {
            break;
        }
    }
    let mu_star: f64 = y[..l].iter().map(|h| 2.0 * h[0]).sum();
    1.0 - mu_star
}

/// Explicit local-hidden-state assemblage: `sigma_{a|x} = sum_l p(a|x,l) rho_l`.
pub fn lhs_assemblage(hidden: &[ComplexMatrix], response: &[Vec<Vec<f64>>], m: usize, o: usize) -> Vec<ComplexMatrix> {
    let d = hidden[0].rows();
    let mut out = Vec::with_capacity(m * o);
    for x in 0..m {
        for a in 0..o {
            let mut s = ComplexMatrix::zeros(d, d);
            for (lam, rho) in hidden.iter().enumerate() {
                s.axpy(C64::new(response[lam][x][a], 0.0), rho);
            }
            out.push(s);
        }
    }
    out
}

/// Random qubit assemblage: `m` projective measurements along random axes on
/// one half of a random two-qubit state of the given rank; members are
/// indexed `x * 2 + a`.
pub fn random_qubit_assemblage<R: rand::Rng + ?Sized>(m: usize, rank: usize, rng: &mut R) -> Vec<ComplexMatrix> {
    let normal = |rng: &mut R| -> f64 {
        // Box-Muller keeps this file free of distribution crates
        let u1: f64 = rng.random_range(f64::EPSILON..1.0);
        let u2: f64 = rng.random::<f64>();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    };
    let g = ComplexMatrix::from_fn(4, rank, |_, _| C64::new(normal(rng), normal(rng)));
    let w = g.matmul(&g.dagger());
    let rho = w.scale_real(1.0 / w.trace().re);
    let mut out = Vec::with_capacity(2 * m);
    for _ in 0..m {
        let v = [normal(rng), normal(rng), normal(rng)];
        let r = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        for sign in [1.0, -1.0] {
            let mut proj = pauli(0).scale_real(0.5);
            for (k, c) in v.iter().enumerate() {
                proj.axpy(C64::new(0.5 * sign * c / r, 0.0), &pauli(k + 1));
            }
            let lifted = kron(&proj, &pauli(0)).matmul(&rho);
            out.push(partial_trace(&lifted, 2, &[1]).hermitian_part());
        }
    }
    out
}
