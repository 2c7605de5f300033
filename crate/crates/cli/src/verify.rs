use std::f64::consts::{FRAC_PI_2, PI};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use scrambling::channels::{
    build_choi_q1, build_pdm, build_pdm_from_correlators, tripartite_mutual_information, PartitionSpec,
};
use scrambling::models::{
    clifford_scan_unitary, clifford_scrambler_unitary, haar_unitary, operator_growth_table, pauli_matrix,
    random_local_unitary, random_swap_layers, swap_circuit, HamiltonianSpec,
};
use scrambling::qla::{ComplexMatrix, QubitRegister};
use scrambling::sdp::SolverOptions;
use scrambling::steering::{
    encode_and_evolve, minus_t3_with, reduce_assemblage, temporal_steerable_weight_with,
    tsw_unitary_invariance_check, MeasurementSet, WitnessOptions,
};

use crate::backflow::{backflow_integral, Quantity};
use crate::config::{ExperimentConfig, ModelSpec, TimeGrid};
use crate::output::scan_csv_string;
use crate::scan::{run_clifford_scan, run_scan};
use crate::Result;

pub const WITNESS_ZERO_TOL: f64 = 2e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut s = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            s += &format!("{mark}  {:width$}  {}\n", c.name, c.detail);
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        s += &format!("{passed}/{} checks passed\n", self.checks.len());
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub sdp_tol: f64,
    pub seed: u64,
    /// Random instances per randomized check.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            sdp_tol: SolverOptions::default().gap_tol,
            seed: 2024,
            samples: 10,
        }
    }
}

struct Suite {
    report: VerifyReport,
}

impl Suite {
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.report.checks.push(CheckResult {
            name: name.into(),
            passed,
            detail,
        });
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

/// Runs the invariant suite. Failures are reported as results, never as
/// errors.
pub fn verify(opts: &VerifyOptions) -> VerifyReport {
    let mut suite = Suite {
        report: VerifyReport::default(),
    };
    let solver = SolverOptions::default().with_gap_tol(opts.sdp_tol);
    let witness = WitnessOptions {
        solver: solver.clone(),
        ..Default::default()
    };
    let meas = MeasurementSet::pauli();
    let n_samples = opts.samples.max(1);

    suite.check("local product unitaries: -T3 = 0", || {
        let part = PartitionSpec::contiguous(4, 2)?;
        let mut worst = 0.0f64;
        for k in 0..n_samples {
            let u = random_local_unitary(&part, opts.seed.wrapping_add(k as u64))?;
            worst = worst.max(minus_t3_with(&meas, &u, &part, 0.0, &witness)?.minus_t3.abs());
        }
        Ok((worst <= WITNESS_ZERO_TOL, format!("max |-T3| = {worst:.3e} over {n_samples} samples")))
    });

    suite.check("SWAP networks: -T3 = 0 and -I3 = 0", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5a);
        let (mut worst_t3, mut worst_i3) = (0.0f64, 0.0f64);
        for k in 0..n_samples {
            let n = 4 + k % 2;
            let part = PartitionSpec::contiguous(n, 1 + k % (n - 1))?;
            let depth = 1 + k % 5;
            let u = swap_circuit(n, &random_swap_layers(n, depth, &mut rng))?;
            worst_t3 = worst_t3.max(minus_t3_with(&meas, &u, &part, 0.0, &witness)?.minus_t3.abs());
            let tmi = tripartite_mutual_information(&build_choi_q1(&u, n)?, &part)?;
            worst_i3 = worst_i3.max(tmi.minus_i3.abs());
        }
        Ok((
            worst_t3 <= WITNESS_ZERO_TOL && worst_i3 <= 1e-9,
            format!("max |-T3| = {worst_t3:.3e}, max |-I3| = {worst_i3:.3e}"),
        ))
    });

    suite.check("partial-transposed Choi state equals correlator PDM", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xc401);
        let mut worst = 0.0f64;
        for n in 1..=3 {
            for _ in 0..if n == 3 { 2 } else { 5 } {
                let u = haar_unitary(1 << n, &mut rng);
                let a = build_pdm(&u, n)?;
                let b = build_pdm_from_correlators(&u, n)?;
                worst = worst.max(a.matrix().max_abs_diff(b.matrix()));
            }
        }
        Ok((worst <= 1e-10, format!("max entry difference {worst:.3e}")))
    });

    suite.check("t = 0 assemblage has TSW = 1", || {
        let mut worst = 0.0f64;
        for n in 1..=3 {
            let asm = encode_and_evolve(&meas, &ComplexMatrix::identity(1 << n), n)?;
            let q1 = reduce_assemblage(&asm, &QubitRegister::sys(&[1])?)?;
            worst = worst.max((temporal_steerable_weight_with(&q1, &solver)? - 1.0).abs());
        }
        Ok((worst <= 1e-6, format!("max |TSW - 1| = {worst:.3e}")))
    });

    suite.check("TSW invariant under unitaries on the steered side", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7);
        let u = haar_unitary(4, &mut rng);
        let asm = reduce_assemblage(&encode_and_evolve(&meas, &u, 2)?, &QubitRegister::sys(&[1])?)?;
        let v = haar_unitary(2, &mut rng);
        let diff = tsw_unitary_invariance_check(&asm, &v)?;
        Ok((diff <= 2e-6, format!("|ΔTSW| = {diff:.3e}")))
    });

    suite.check("Clifford scrambler conjugation table", || {
        let u = clifford_scrambler_unitary();
        let table = operator_growth_table();
        let worst = max_of(table.iter().map(|(input, image)| {
            u.matmul(&pauli_matrix(input)).matmul(&u.dagger()).max_abs_diff(&pauli_matrix(image))
        }));
        Ok((worst <= 1e-10, format!("{} identities, max deviation {worst:.3e}", table.len())))
    });

    suite.check("Clifford scan: zero at θ = 0, maximal at θ = π/2, π-periodic", || {
        let thetas: Vec<f64> = (0..25).map(|k| PI * k as f64 / 24.0).collect();
        let pts = run_clifford_scan(&thetas, &solver)?;
        let argmax = pts.iter().max_by(|a, b| a.minus_i3.total_cmp(&b.minus_i3)).map(|p| p.theta).unwrap_or(0.0);
        let part = PartitionSpec::contiguous(3, 1)?;
        let shifted = |theta: f64| -> Result<f64> {
            Ok(tripartite_mutual_information(&build_choi_q1(&clifford_scan_unitary(theta + PI), 3)?, &part)?.minus_i3)
        };
        let period = max_of(pts.iter().map(|p| shifted(p.theta).map_or(f64::INFINITY, |v| (v - p.minus_i3).abs())));
        let ok = pts[0].minus_i3.abs() <= 1e-9 && (argmax - FRAC_PI_2).abs() < 1e-12 && period <= 1e-6;
        Ok((ok, format!("-I3(0) = {:.1e}, argmax {argmax:.4}, period deviation {period:.1e}", pts[0].minus_i3)))
    });

    suite.check("Ising scan rows: witness identity and hierarchy", || {
        let mut cfg = ExperimentConfig::new(
            ModelSpec::Hamiltonian(HamiltonianSpec::ising(4, 1.0, 0.5)),
            PartitionSpec::contiguous(4, 2)?,
        );
        cfg.time_grid = TimeGrid::new(0.0, 6.0, 13)?;
        cfg.sdp_tol = opts.sdp_tol;
        let report = run_scan(&cfg)?;
        let ident = report.witness_identity_violations(1e-9).len();
        let hier = report.hierarchy_violations(1e-4, 1e-6).len();
        let failed = report.failed_rows();
        let series: Vec<f64> = report
            .times()
            .iter()
            .map(|&t| backflow_integral(&report, Quantity::I3, t).map_or(f64::NAN, |b| b.value))
            .collect();
        let monotone = series.windows(2).all(|w| w[1] >= w[0]) && series.iter().all(|v| *v >= 0.0);
        Ok((
            ident == 0 && hier == 0 && failed == 0 && monotone,
            format!("{ident} identity, {hier} hierarchy, {failed} solver failures; backflow monotone: {monotone}"),
        ))
    });

    suite.check("scan CSV is reproducible", || {
        let mut cfg = ExperimentConfig::new(
            ModelSpec::Hamiltonian(HamiltonianSpec::syk(3, 1.0, opts.seed)),
            PartitionSpec::contiguous(3, 1)?,
        );
        cfg.time_grid = TimeGrid::new(0.0, 5.0, 6)?;
        cfg.sdp_tol = opts.sdp_tol;
        let a = scan_csv_string(&run_scan(&cfg)?)?;
        let b = scan_csv_string(&run_scan(&cfg)?)?;
        Ok((a == b, format!("{} bytes", a.len())))
    });

    suite.report
}
