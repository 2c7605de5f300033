use crate::qla::ComplexMatrix;
use crate::C64;

/// Orthonormal real basis of `d×d` Hermitian matrices under `Re tr(AB)`:
/// `E_aa`, `(E_ab + E_ba)/√2` and `i(E_ab - E_ba)/√2` for `a < b`.
#[derive(Clone, Debug)]
pub(crate) struct HermitianBasis {
    d: usize,
    /// Nonzero entries `(row, col, value)` of each basis element.
    elements: Vec<Vec<(usize, usize, C64)>>,
}

impl HermitianBasis {
    pub fn new(d: usize) -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut elements = Vec::with_capacity(d * d);
        for a in 0..d {
            elements.push(vec![(a, a, C64::new(1.0, 0.0))]);
        }
        for a in 0..d {
            for b in a + 1..d {
                elements.push(vec![(a, b, C64::new(s, 0.0)), (b, a, C64::new(s, 0.0))]);
                elements.push(vec![(a, b, C64::new(0.0, s)), (b, a, C64::new(0.0, -s))]);
            }
        }
        Self { d, elements }
    }

    /// Number of real coordinates, `d²`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Coordinates `Re tr(B_p H)`, written into `out`.
    pub fn coordinates(&self, h: &ComplexMatrix, out: &mut [f64]) {
        let s = std::f64::consts::SQRT_2;
        let d = self.d;
        let mut p = d;
        for a in 0..d {
            out[a] = h[(a, a)].re;
        }
        for a in 0..d {
            for b in a + 1..d {
                // average the two triangles so non-Hermitian noise cancels
                let z = (h[(a, b)] + h[(b, a)].conj()) * 0.5;
                out[p] = s * z.re;
                out[p + 1] = s * z.im;
                p += 2;
            }
        }
    }

    /// Hermitian matrix with the given coordinates.
    pub fn matrix(&self, v: &[f64]) -> ComplexMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let d = self.d;
        let mut m = ComplexMatrix::zeros(d, d);
        for a in 0..d {
            m[(a, a)] = C64::new(v[a], 0.0);
        }
        let mut p = d;
        for a in 0..d {
            for b in a + 1..d {
                let z = C64::new(v[p], v[p + 1]) * s;
                m[(a, b)] = z;
                m[(b, a)] = z.conj();
                p += 2;
            }
        }
        m
    }

    /// `G_pq = Re tr(B_p X B_q Y)` with `B_p` from this basis and `B_q` from
    /// `other` (`X` is `d×d'`, `Y` is `d'×d`), accumulated as
    /// `target[off + p*stride + q] += G_pq` for every offset in `offsets`.
    pub fn accumulate_congruence(
        &self,
        other: &HermitianBasis,
        x: &ComplexMatrix,
        y: &ComplexMatrix,
        target: &mut [f64],
        stride: usize,
        offsets: &[usize],
    ) {
        let n = other.len();
        let mut row = vec![0.0; n];
        for (p, bp) in self.elements.iter().enumerate() {
            for (q, bq) in other.elements.iter().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for &(a, b, beta) in bp {
                    for &(c, e, gamma) in bq {
                        acc += beta * gamma * x[(b, c)] * y[(e, a)];
                    }
                }
                row[q] = acc.re;
            }
            for &off in offsets {
                let base = off + p * stride;
                for (t, &g) in target[base..base + n].iter_mut().zip(&row) {
                    *t += g;
                }
            }
        }
    }
}
