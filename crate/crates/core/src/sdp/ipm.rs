use std::time::{Duration, Instant};

use faer::linalg::solvers::{Lblt, Llt, Solve};
use faer::{Mat, Side};
use serde::{Deserialize, Serialize};

use super::basis::HermitianBasis;
use super::certificate::CERTIFICATE_PSD_TOL;
use super::problem::SteeringWeightProblem;
use crate::qla::{hermitian_eig, ComplexMatrix};
use crate::{Error, Result, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveStatus {
    Optimal,
    MaxIter,
    Infeasible,
    NumericalError,
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Bound on the duality gap and on `<X, Z>` at termination.
    pub gap_tol: f64,
    /// Bound on the largest entry of the primal residual.
    pub feas_tol: f64,
    pub max_iter: usize,
    /// Fraction of the distance to the cone boundary taken per step.
    pub step_fraction: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            gap_tol: 1e-7,
            feas_tol: 1e-8,
            max_iter: 200,
            step_fraction: 0.95,
        }
    }
}

impl SolverOptions {
    pub fn with_gap_tol(mut self, tol: f64) -> Self {
        self.gap_tol = tol;
        self.feas_tol = self.feas_tol.min(tol);
        self
    }
}

#[derive(Clone, Debug)]
pub struct SdpSolution {
    /// Primal value `Σ_λ tr σ_λ`.
    pub mu_star: f64,
    /// Dual value `Σ <σ_{a|x}, F_{a|x}>`, an upper bound on `mu_star`.
    pub dual_objective: f64,
    /// One hidden state per strategy, in enumeration order.
    pub hidden_states: Vec<ComplexMatrix>,
    /// Dual blocks `F_{a|x}`, indexed by `x * n_outcomes + a`.
    pub dual_certificate: Vec<ComplexMatrix>,
    pub status: SolveStatus,
    /// `dual_objective - mu_star`.
    pub gap: f64,
    pub primal_residual: f64,
    pub iterations: usize,
    pub elapsed: Duration,
}

impl SdpSolution {
    /// `1 - μ*`.
    pub fn steerable_weight(&self) -> f64 {
        1.0 - self.mu_star
    }

    pub fn into_result(self) -> Result<Self> {
        match self.status {
            SolveStatus::Optimal => Ok(self),
            status => Err(Error::Solver {
                status,
                iterations: self.iterations,
                gap: self.gap,
            }),
        }
    }
}

pub fn solve_steering_weight(problem: &SteeringWeightProblem) -> Result<SdpSolution> {
    solve_steering_weight_with(problem, &SolverOptions::default())
}

/// Spectral data of a positive-definite block.
struct PdBlock {
    inv: ComplexMatrix,
    inv_sqrt: ComplexMatrix,
}

impl PdBlock {
    fn new(m: &ComplexMatrix) -> Option<Self> {
        let e = hermitian_eig(m).ok()?;
        if e.values[0] <= 0.0 || !e.values[0].is_finite() {
            return None;
        }
        Some(Self {
            inv: e.map(|l| C64::new(1.0 / l, 0.0)),
            inv_sqrt: e.map(|l| C64::new(1.0 / l.sqrt(), 0.0)),
        })
    }

    /// Largest `α` with `M + α dM ⪰ 0` (infinite if the direction never
    /// leaves the cone).
    fn max_step(&self, dm: &ComplexMatrix) -> f64 {
        let y = self.inv_sqrt.matmul(dm).matmul(&self.inv_sqrt);
        let lo = crate::qla::hermitian_eigenvalues(&y.hermitian_part())
            .map(|v| v[0])
            .unwrap_or(f64::NEG_INFINITY);
        if lo >= 0.0 {
            f64::INFINITY
        } else {
            -1.0 / lo
        }
    }
}

fn inner(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.real_trace_product(b)
}

/// Eigenvalues below this fraction of a member's largest one are treated as
/// zero when restricting the member to its range.
const RANGE_TOL: f64 = 1e-10;
/// Bound on the eigenvalues of `Σ_k (I - P_k)` for directions shared by the
/// ranges of all members a strategy touches.
const INTERSECTION_TOL: f64 = 1e-8;

/// An assemblage member restricted to its range.
struct MemberBlock {
    /// Isometry onto the range; `None` when the member has full rank.
    v: Option<ComplexMatrix>,
    /// The member in range coordinates.
    s: ComplexMatrix,
    basis: HermitianBasis,
    offset: usize,
}

impl MemberBlock {
    fn rank(&self) -> usize {
        self.s.rows()
    }

    /// `F` lifted back to the full space, with `t` on the complement of the range.
    fn lift(&self, f: &ComplexMatrix, t: f64) -> ComplexMatrix {
        match &self.v {
            None => f.clone(),
            Some(v) => {
                let d = v.rows();
                let p = v.matmul(&v.dagger());
                let mut out = v.conjugate(f);
                out += &(&ComplexMatrix::identity(d) - &p).scale_real(t);
                out
            }
        }
    }
}

/// A deterministic strategy whose hidden state is confined to the common
/// range of the members it touches.
struct StrategyBlock {
    id: usize,
    /// Isometry onto the common range; `None` when unrestricted.
    w: Option<ComplexMatrix>,
    members: Vec<usize>,
    /// `V_k† W` per touched member; `None` when both are the identity.
    maps: Vec<Option<ComplexMatrix>>,
}

impl StrategyBlock {
    fn dim(&self, d: usize) -> usize {
        self.w.as_ref().map_or(d, |w| w.cols())
    }
}

fn pull(map: &Option<ComplexMatrix>, f: &ComplexMatrix) -> ComplexMatrix {
    match map {
        None => f.clone(),
        Some(a) => a.dagger().matmul(f).matmul(a),
    }
}

fn push(map: &Option<ComplexMatrix>, y: &ComplexMatrix) -> ComplexMatrix {
    match map {
        None => y.clone(),
        Some(a) => a.conjugate(y),
    }
}

fn columns(m: &ComplexMatrix, cols: &[usize]) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.rows(), cols.len(), |i, j| m[(i, cols[j])])
}

struct Layout {
    d: usize,
    members: Vec<MemberBlock>,
    /// Problem index of each kept member.
    member_ids: Vec<usize>,
    strategies: Vec<StrategyBlock>,
    /// `(strategy, slot)` pairs touching each kept member.
    touching: Vec<Vec<(usize, usize)>>,
    n_coords: usize,
}

impl Layout {
    fn new(problem: &SteeringWeightProblem) -> Result<Self> {
        let d = problem.dim();
        let active = problem.active_members();
        let mut members = Vec::new();
        let mut member_ids = Vec::new();
        let mut offset = 0;
        for (g, sigma) in problem.members().iter().enumerate() {
            if !active[g] {
                continue;
            }
            let eig = hermitian_eig(sigma)?;
            let top = eig.values[d - 1];
            let keep: Vec<usize> = (0..d).filter(|&i| eig.values[i] > RANGE_TOL * top).collect();
            let (v, s) = if keep.len() == d {
                (None, sigma.clone())
            } else {
                let v = columns(&eig.vectors, &keep);
                let s = ComplexMatrix::from_real_diagonal(&keep.iter().map(|&i| eig.values[i]).collect::<Vec<_>>());
                (Some(v), s)
            };
            let r = s.rows();
            members.push(MemberBlock {
                v,
                s,
                basis: HermitianBasis::new(r),
                offset,
            });
            member_ids.push(g);
            offset += r * r;
        }
        let local = |global: usize| member_ids.iter().position(|&g| g == global);

        let mut strategies = Vec::new();
        for s in problem.strategies() {
            let ks: Option<Vec<usize>> = (0..problem.n_settings())
                .map(|x| local(problem.member_index(x, s.outcome(x))))
                .collect();
            let Some(ks) = ks else { continue };
            if ks.iter().all(|&k| members[k].v.is_none()) {
                strategies.push(StrategyBlock {
                    id: s.index,
                    w: None,
                    maps: vec![None; ks.len()],
                    members: ks,
                });
                continue;
            }
            let mut outside = ComplexMatrix::zeros(d, d);
            for &k in &ks {
                if let Some(v) = &members[k].v {
                    outside += &ComplexMatrix::identity(d);
                    outside -= &v.matmul(&v.dagger());
                }
            }
            let eig = hermitian_eig(&outside)?;
            let shared: Vec<usize> = (0..d).filter(|&i| eig.values[i] < INTERSECTION_TOL).collect();
            if shared.is_empty() {
                continue;
            }
            let w = columns(&eig.vectors, &shared);
            let maps = ks
                .iter()
                .map(|&k| Some(members[k].v.as_ref().map_or_else(|| w.clone(), |v| v.dagger().matmul(&w))))
                .collect();
            strategies.push(StrategyBlock {
                id: s.index,
                w: Some(w),
                maps,
                members: ks,
            });
        }
        let mut touching = vec![Vec::new(); members.len()];
        for (l, st) in strategies.iter().enumerate() {
            for (j, &k) in st.members.iter().enumerate() {
                touching[k].push((l, j));
            }
        }
        Ok(Self {
            d,
            members,
            member_ids,
            strategies,
            touching,
            n_coords: offset,
        })
    }

    /// `Z_λ = Σ_k A_k† F_k A_k - I`.
    fn slack(&self, f: &[ComplexMatrix], l: usize) -> ComplexMatrix {
        let st = &self.strategies[l];
        let s = st.dim(self.d);
        let mut z = ComplexMatrix::identity(s).scale_real(-1.0);
        for (j, &k) in st.members.iter().enumerate() {
            z += &pull(&st.maps[j], &f[k]);
        }
        z
    }

    /// Dual blocks in the full space. On the complement of a member's range
    /// the certificate is free; it is raised until every strategy slack is
    /// positive semidefinite.
    fn certificate(&self, problem: &SteeringWeightProblem, f: &[ComplexMatrix]) -> Vec<ComplexMatrix> {
        let d = self.d;
        let assemble = |t: f64| {
            let mut cert = vec![ComplexMatrix::identity(d).scale_real(t.max(1.0)); problem.members().len()];
            for (k, &g) in self.member_ids.iter().enumerate() {
                cert[g] = self.members[k].lift(&f[k], t);
            }
            cert
        };
        let reduced = self.members.iter().any(|m| m.v.is_some()) || self.member_ids.len() < problem.members().len();
        if !reduced {
            return assemble(0.0);
        }
        let lowest = |cert: &[ComplexMatrix]| {
            problem
                .strategies()
                .iter()
                .map(|s| {
                    let mut z = ComplexMatrix::identity(d).scale_real(-1.0);
                    for x in 0..problem.n_settings() {
                        z += &cert[problem.member_index(x, s.outcome(x))];
                    }
                    crate::qla::hermitian_eigenvalues(&z).map_or(f64::NEG_INFINITY, |v| v[0])
                })
                .fold(f64::INFINITY, f64::min)
        };
        let mut t = 1.0;
        let mut cert = assemble(t);
        while lowest(&cert) < -CERTIFICATE_PSD_TOL * 0.1 && t < 1e8 {
            t *= 4.0;
            cert = assemble(t);
        }
        cert
    }
}

/// Newton system factorization for one iteration.
struct Newton<'a> {
    lay: &'a Layout,
    factor: Factor,
}

enum Factor {
    Llt(Llt<f64>),
    Lblt(Lblt<f64>),
}

struct Direction {
    dxk: Vec<ComplexMatrix>,
    dxl: Vec<ComplexMatrix>,
    dfk: Vec<ComplexMatrix>,
    dzl: Vec<ComplexMatrix>,
}

impl<'a> Newton<'a> {
    fn factor(
        lay: &'a Layout,
        xk: &[ComplexMatrix],
        xl: &[ComplexMatrix],
        fk: &[PdBlock],
        zl: &[PdBlock],
    ) -> Option<Self> {
        let big = lay.n_coords;
        let mut m = vec![0.0; big * big];
        for (k, x) in xk.iter().enumerate() {
            let mb = &lay.members[k];
            mb.basis
                .accumulate_congruence(&mb.basis, x, &fk[k].inv, &mut m, big, &[mb.offset * big + mb.offset]);
        }
        for (l, x) in xl.iter().enumerate() {
            let st = &lay.strategies[l];
            let zi = &zl[l].inv;
            if st.maps.iter().all(Option::is_none) {
                let offsets: Vec<usize> = st
                    .members
                    .iter()
                    .flat_map(|&a| st.members.iter().map(move |&b| (a, b)))
                    .map(|(a, b)| lay.members[a].offset * big + lay.members[b].offset)
                    .collect();
                let basis = &lay.members[st.members[0]].basis;
                basis.accumulate_congruence(basis, x, zi, &mut m, big, &offsets);
                continue;
            }
            for (i, &a) in st.members.iter().enumerate() {
                for (j, &b) in st.members.iter().enumerate() {
                    let (ma, mb) = (st.maps[i].as_ref()?, st.maps[j].as_ref()?);
                    let p = ma.matmul(x).matmul(&mb.dagger());
                    let q = mb.matmul(zi).matmul(&ma.dagger());
                    let (ba, bb) = (&lay.members[a], &lay.members[b]);
                    ba.basis
                        .accumulate_congruence(&bb.basis, &p, &q, &mut m, big, &[ba.offset * big + bb.offset]);
                }
            }
        }
        let mat = Mat::<f64>::from_fn(big, big, |i, j| 0.5 * (m[i * big + j] + m[j * big + i]));
        if !mat.as_ref().is_all_finite() {
            return None;
        }
        // near the optimum M can lose definiteness to rounding; the pivoted
        // symmetric factorization still solves it without a diagonal shift
        let factor = match mat.llt(Side::Lower) {
            Ok(llt) => Factor::Llt(llt),
            Err(_) => Factor::Lblt(mat.lblt(Side::Lower)),
        };
        Some(Self { lay, factor })
    }

    /// Direction for right-hand sides `H` (per block) and primal residuals `R`.
    #[allow(clippy::too_many_arguments)]
    fn solve(
        &self,
        hk: &[ComplexMatrix],
        hl: &[ComplexMatrix],
        rk: &[ComplexMatrix],
        xk: &[ComplexMatrix],
        xl: &[ComplexMatrix],
        fk: &[PdBlock],
        zl: &[PdBlock],
    ) -> Direction {
        let lay = self.lay;
        let mut rhs = Mat::<f64>::zeros(lay.n_coords, 1);
        for (k, mb) in lay.members.iter().enumerate() {
            let mut t = &hk[k] - &rk[k];
            for &(l, j) in &lay.touching[k] {
                t += &push(&lay.strategies[l].maps[j], &hl[l]);
            }
            let mut buf = vec![0.0; mb.basis.len()];
            mb.basis.coordinates(&t, &mut buf);
            for (p, v) in buf.into_iter().enumerate() {
                rhs[(mb.offset + p, 0)] = v;
            }
        }
        match &self.factor {
            Factor::Llt(f) => f.solve_in_place(rhs.as_mut()),
            Factor::Lblt(f) => f.solve_in_place(rhs.as_mut()),
        }
        let dfk: Vec<ComplexMatrix> = lay
            .members
            .iter()
            .map(|mb| {
                let v: Vec<f64> = (0..mb.basis.len()).map(|p| rhs[(mb.offset + p, 0)]).collect();
                mb.basis.matrix(&v)
            })
            .collect();
        let dzl: Vec<ComplexMatrix> = lay
            .strategies
            .iter()
            .map(|st| {
                let s = st.dim(lay.d);
                let mut z = ComplexMatrix::zeros(s, s);
                for (j, &k) in st.members.iter().enumerate() {
                    z += &pull(&st.maps[j], &dfk[k]);
                }
                z
            })
            .collect();
        let dir = |h: &ComplexMatrix, x: &ComplexMatrix, dz: &ComplexMatrix, zi: &ComplexMatrix| {
            (h - &x.matmul(dz).matmul(zi)).hermitian_part()
        };
        let dxk = (0..lay.members.len())
            .map(|k| dir(&hk[k], &xk[k], &dfk[k], &fk[k].inv))
            .collect();
        let dxl = (0..lay.strategies.len())
            .map(|l| dir(&hl[l], &xl[l], &dzl[l], &zl[l].inv))
            .collect();
        Direction { dxk, dxl, dfk, dzl }
    }
}

/// Primal-dual interior-point method (HKM direction, Mehrotra
/// predictor-corrector) on the pair
///
/// ```text
/// max Σ_λ tr X_λ   s.t.  X_k + Σ_λ D_λ(k) X_λ = σ_k,  X ⪰ 0
/// min Σ_k <σ_k, F_k>  s.t.  F_k ⪰ 0,  Z_λ = Σ_k D_λ(k) F_k - I ⪰ 0
/// ```
///
/// Each member is first restricted to its range and each hidden state to the
/// common range of its members; a rank-deficient member otherwise leaves the
/// primal without interior points. The dual iterate is kept exactly feasible;
/// the primal one starts infeasible and its residual contracts with every
/// step.
pub fn solve_steering_weight_with(
    problem: &SteeringWeightProblem,
    opts: &SolverOptions,
) -> Result<SdpSolution> {
    let start = Instant::now();
    let lay = Layout::new(problem)?;
    let d = lay.d;
    let kn = lay.members.len();
    let ln = lay.strategies.len();
    let n_set = problem.n_settings() as f64;

    let finish = |xl: &[ComplexMatrix],
                  fk: &[ComplexMatrix],
                  status: SolveStatus,
                  pres: f64,
                  iterations: usize| {
        let mu_star: f64 = xl.iter().map(|x| x.trace().re).sum();
        let dual_objective: f64 = lay.members.iter().zip(fk).map(|(m, f)| inner(&m.s, f)).sum();
        let mut hidden = vec![ComplexMatrix::zeros(d, d); problem.strategies().len()];
        for (st, x) in lay.strategies.iter().zip(xl) {
            hidden[st.id] = match &st.w {
                None => x.clone(),
                Some(w) => w.conjugate(x),
            };
        }
        SdpSolution {
            mu_star,
            dual_objective,
            hidden_states: hidden,
            dual_certificate: lay.certificate(problem, fk),
            status,
            gap: dual_objective - mu_star,
            primal_residual: pres,
            iterations,
            elapsed: start.elapsed(),
        }
    };

    if ln == 0 {
        let zeros: Vec<ComplexMatrix> = lay.members.iter().map(|m| ComplexMatrix::zeros(m.rank(), m.rank())).collect();
        return Ok(finish(&[], &zeros, SolveStatus::Optimal, 0.0, 0));
    }

    let n_cone = (lay.members.iter().map(MemberBlock::rank).sum::<usize>()
        + lay.strategies.iter().map(|s| s.dim(d)).sum::<usize>()) as f64;
    let mut fk: Vec<ComplexMatrix> = lay
        .members
        .iter()
        .map(|m| ComplexMatrix::identity(m.rank()).scale_real(2.0 / n_set))
        .collect();
    let x0 = |r: usize| ComplexMatrix::identity(r).scale_real(1.0 / (2.0 * d as f64));
    let mut xk: Vec<ComplexMatrix> = lay.members.iter().map(|m| x0(m.rank())).collect();
    let mut xl: Vec<ComplexMatrix> = lay.strategies.iter().map(|s| x0(s.dim(d))).collect();
    let mut pres = f64::INFINITY;

    for iter in 0..opts.max_iter {
        let zl: Vec<ComplexMatrix> = (0..ln).map(|l| lay.slack(&fk, l)).collect();
        let fpd: Option<Vec<PdBlock>> = fk.iter().map(PdBlock::new).collect();
        let zpd: Option<Vec<PdBlock>> = zl.iter().map(PdBlock::new).collect();
        let xkpd: Option<Vec<PdBlock>> = xk.iter().map(PdBlock::new).collect();
        let xlpd: Option<Vec<PdBlock>> = xl.iter().map(PdBlock::new).collect();
        let (Some(fpd), Some(zpd), Some(xkpd), Some(xlpd)) = (fpd, zpd, xkpd, xlpd) else {
            return Ok(finish(&xl, &fk, SolveStatus::NumericalError, pres, iter));
        };

        let rk: Vec<ComplexMatrix> = (0..kn)
            .map(|k| {
                let mut r = &lay.members[k].s - &xk[k];
                for &(l, j) in &lay.touching[k] {
                    r -= &push(&lay.strategies[l].maps[j], &xl[l]);
                }
                r
            })
            .collect();
        pres = rk.iter().map(|r| r.max_abs()).fold(0.0, f64::max);
        let pobj: f64 = xl.iter().map(|x| x.trace().re).sum();
        let dobj: f64 = lay.members.iter().zip(&fk).map(|(m, f)| inner(&m.s, f)).sum();
        let comp: f64 = xk.iter().zip(&fk).map(|(x, f)| inner(x, f)).sum::<f64>()
            + xl.iter().zip(&zl).map(|(x, z)| inner(x, z)).sum::<f64>();
        let mu = comp / n_cone;
        if pres <= opts.feas_tol && (dobj - pobj).abs() <= opts.gap_tol && comp <= opts.gap_tol {
            return Ok(finish(&xl, &fk, SolveStatus::Optimal, pres, iter));
        }
        if dobj.abs() > 1e12 {
            return Ok(finish(&xl, &fk, SolveStatus::Infeasible, pres, iter));
        }

        let Some(newton) = Newton::factor(&lay, &xk, &xl, &fpd, &zpd) else {
            return Ok(finish(&xl, &fk, SolveStatus::NumericalError, pres, iter));
        };

        // predictor
        let hk: Vec<ComplexMatrix> = xk.iter().map(|x| -x).collect();
        let hl: Vec<ComplexMatrix> = xl.iter().map(|x| -x).collect();
        let aff = newton.solve(&hk, &hl, &rk, &xk, &xl, &fpd, &zpd);
        let (ap, ad) = step_lengths(&aff, &xkpd, &xlpd, &fpd, &zpd);
        let (ap, ad) = (ap.min(1.0), ad.min(1.0));
        let mut comp_aff = 0.0;
        for k in 0..kn {
            let x = &xk[k] + &aff.dxk[k].scale_real(ap);
            let f = &fk[k] + &aff.dfk[k].scale_real(ad);
            comp_aff += inner(&x, &f);
        }
        for l in 0..ln {
            let x = &xl[l] + &aff.dxl[l].scale_real(ap);
            let z = &zl[l] + &aff.dzl[l].scale_real(ad);
            comp_aff += inner(&x, &z);
        }
        let sigma = (comp_aff.max(0.0) / comp).powi(3).clamp(0.0, 1.0);

        // corrector
        let target = sigma * mu;
        let corr = |x: &ComplexMatrix, zi: &ComplexMatrix, dx: &ComplexMatrix, dz: &ComplexMatrix| {
            let mut h = &zi.scale_real(target) - x;
            h -= &dx.matmul(dz).matmul(zi).hermitian_part();
            h
        };
        let hk: Vec<ComplexMatrix> = (0..kn)
            .map(|k| corr(&xk[k], &fpd[k].inv, &aff.dxk[k], &aff.dfk[k]))
            .collect();
        let hl: Vec<ComplexMatrix> = (0..ln)
            .map(|l| corr(&xl[l], &zpd[l].inv, &aff.dxl[l], &aff.dzl[l]))
            .collect();
        let dir = newton.solve(&hk, &hl, &rk, &xk, &xl, &fpd, &zpd);
        let (ap, ad) = step_lengths(&dir, &xkpd, &xlpd, &fpd, &zpd);
        let ap = (opts.step_fraction * ap).min(1.0);
        let ad = (opts.step_fraction * ad).min(1.0);
        if ap < 1e-14 && ad < 1e-14 {
            return Ok(finish(&xl, &fk, SolveStatus::NumericalError, pres, iter));
        }
        for k in 0..kn {
            xk[k].axpy(C64::new(ap, 0.0), &dir.dxk[k]);
            fk[k].axpy(C64::new(ad, 0.0), &dir.dfk[k]);
            xk[k] = xk[k].hermitian_part();
            fk[k] = fk[k].hermitian_part();
        }
        for l in 0..ln {
            xl[l].axpy(C64::new(ap, 0.0), &dir.dxl[l]);
            xl[l] = xl[l].hermitian_part();
        }
    }
    Ok(finish(&xl, &fk, SolveStatus::MaxIter, pres, opts.max_iter))
}

fn step_lengths(
    dir: &Direction,
    xk: &[PdBlock],
    xl: &[PdBlock],
    fk: &[PdBlock],
    zl: &[PdBlock],
) -> (f64, f64) {
    let mut ap = f64::INFINITY;
    let mut ad = f64::INFINITY;
    for (b, d) in xk.iter().zip(&dir.dxk).chain(xl.iter().zip(&dir.dxl)) {
        ap = ap.min(b.max_step(d));
    }
    for (b, d) in fk.iter().zip(&dir.dfk).chain(zl.iter().zip(&dir.dzl)) {
        ad = ad.min(b.max_step(d));
    }
    (ap, ad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::Pauli;
    use crate::sdp::verify_certificate;

    fn pauli_members(axes: &[Pauli], scale: f64) -> Vec<ComplexMatrix> {
        let id = ComplexMatrix::identity(2);
        axes.iter()
            .flat_map(|p| {
                let m = p.matrix();
                [(&id + &m).scale_real(0.25 * scale), (&id - &m).scale_real(0.25 * scale)]
            })
            .collect()
    }

    #[test]
    fn pauli_assemblage_is_fully_steerable() {
        let prob = SteeringWeightProblem::new(3, 2, pauli_members(&[Pauli::X, Pauli::Y, Pauli::Z], 1.0)).unwrap();
        let sol = solve_steering_weight(&prob).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.steerable_weight() - 1.0).abs() < 1e-6, "{}", sol.mu_star);
        assert!(sol.gap.abs() <= 1e-7 && sol.primal_residual <= 1e-8);
        assert!(verify_certificate(&prob, &sol));
    }

    #[test]
    fn proportional_members_are_unsteerable() {
        let rho = ComplexMatrix::from_vec(
            2,
            2,
            vec![C64::new(0.6, 0.0), C64::new(0.1, 0.2), C64::new(0.1, -0.2), C64::new(0.4, 0.0)],
        )
        .unwrap();
        let probs = [0.3, 0.7, 0.5, 0.5, 0.9, 0.1];
        let members = probs.iter().map(|&p| rho.scale_real(p)).collect();
        let prob = SteeringWeightProblem::new(3, 2, members).unwrap();
        let sol = solve_steering_weight(&prob).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!(sol.steerable_weight().abs() < 1e-6);
        assert!(verify_certificate(&prob, &sol));
    }

    #[test]
    fn zero_members_are_dropped() {
        // deterministic outcome for setting z: σ_{1|z} = 0
        let id = ComplexMatrix::identity(2);
        let x = Pauli::X.matrix();
        let members = vec![
            (&id + &x).scale_real(0.25),
            (&id - &x).scale_real(0.25),
            id.scale_real(0.5),
            ComplexMatrix::zeros(2, 2),
        ];
        let prob = SteeringWeightProblem::new(2, 2, members).unwrap();
        let sol = solve_steering_weight(&prob).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!(sol.steerable_weight().abs() < 1e-6);
        assert!(verify_certificate(&prob, &sol));
        assert_eq!(sol.hidden_states.len(), 4);
    }

    #[test]
    fn corrupted_certificate_fails() {
        let prob = SteeringWeightProblem::new(2, 2, pauli_members(&[Pauli::X, Pauli::Z], 1.0)).unwrap();
        let mut sol = solve_steering_weight(&prob).unwrap();
        assert!(verify_certificate(&prob, &sol));
        sol.dual_certificate[1] = -&sol.dual_certificate[1];
        assert!(!verify_certificate(&prob, &sol));
    }

    #[test]
    fn invalid_problems_rejected() {
        let bad = vec![ComplexMatrix::from_real_diagonal(&[1.0, -0.1]); 2];
        assert!(SteeringWeightProblem::new(1, 2, bad).is_err());
        assert!(SteeringWeightProblem::new(2, 2, pauli_members(&[Pauli::X], 1.0)).is_err());
    }
}
