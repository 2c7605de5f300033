use serde::{Deserialize, Serialize};

use scrambling::channels::PartitionSpec;
use scrambling::models::HamiltonianSpec;

use crate::backflow::{backflow_integral, Quantity};
use crate::config::{ExperimentConfig, ModelSpec, TimeGrid};
use crate::scan::{run_scan, ScramblingReport};
use crate::Result;

pub const DEFAULT_SIZES: [usize; 4] = [3, 4, 5, 8];

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum ModelFamily {
    IntegrableChain { g: f64 },
    ChaoticChain { g: f64, h: f64 },
    Syk { j: f64, seed: u64 },
}

impl ModelFamily {
    pub fn hamiltonian(&self, n: usize) -> HamiltonianSpec {
        match *self {
            Self::IntegrableChain { g } => HamiltonianSpec::ising(n, g, 0.0),
            Self::ChaoticChain { g, h } => HamiltonianSpec::ising(n, g, h),
            Self::Syk { j, seed } => HamiltonianSpec::syk(n, j, seed),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::IntegrableChain { .. } => "integrable-chain",
            Self::ChaoticChain { .. } => "chaotic-chain",
            Self::Syk { .. } => "syk",
        }
    }
}

/// Size of region `C` for a register of `n` qubits: 1, 2, 3, 4 for
/// 3, 4, 5, 8 qubits, otherwise half the register.
pub fn default_n_c(n: usize) -> usize {
    match n {
        3 => 1,
        4 => 2,
        5 => 3,
        8 => 4,
        n => (n / 2).max(1),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub n_points: usize,
    pub sdp_tol: f64,
    pub steering: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            n_points: 200,
            sdp_tol: scrambling::sdp::SolverOptions::default().gap_tol,
            steering: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n_qubits: usize,
    pub n_c: usize,
    pub t_end: f64,
    pub backflow_i3: f64,
    /// `None` when the steering side was skipped or a row failed.
    pub backflow_t3: Option<f64>,
    pub report: ScramblingReport,
}

/// Backflow of both witnesses over the default window for every size.
pub fn size_sweep(family: ModelFamily, sizes: &[usize], opts: &SweepOptions) -> Result<Vec<SweepRow>> {
    sizes
        .iter()
        .map(|&n| {
            let n_c = default_n_c(n);
            let model = ModelSpec::Hamiltonian(family.hamiltonian(n));
            let mut cfg = ExperimentConfig::new(model, PartitionSpec::contiguous(n, n_c)?);
            let window = TimeGrid::default_for(&cfg.model);
            cfg.time_grid = TimeGrid::new(window.t_start, window.t_end, opts.n_points)?;
            cfg.sdp_tol = opts.sdp_tol;
            cfg.steering = opts.steering;
            let report = run_scan(&cfg)?;
            let t_end = cfg.time_grid.t_end;
            let backflow_i3 = backflow_integral(&report, Quantity::I3, t_end)?.value;
            let backflow_t3 = backflow_integral(&report, Quantity::T3, t_end).ok().map(|b| b.value);
            Ok(SweepRow {
                n_qubits: n,
                n_c,
                t_end,
                backflow_i3,
                backflow_t3,
                report,
            })
        })
        .collect()
}
