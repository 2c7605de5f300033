use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use scrambling::channels::{build_choi_q1, tripartite_mutual_information, PartitionSpec};
use scrambling::models::clifford_scan_unitary;
use scrambling::qla::{ComplexMatrix, Propagator};
use scrambling::sdp::SolverOptions;
use scrambling::steering::{minus_t3_with, MeasurementSet, WitnessOptions};

use crate::config::{ExperimentConfig, ModelSpec};
use crate::unitary_file::read_unitary;
use crate::Result;

/// Outcome of the steering side of one grid point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum RowStatus {
    Ok,
    /// Steering columns were not requested.
    Skipped,
    /// The steering-weight solver failed; steering columns are NaN.
    SolverError(String),
}

impl RowStatus {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::Skipped => "skipped",
            Self::SolverError(_) => "solver_error",
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Self::Ok)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub t: f64,
    pub minus_i3: f64,
    pub minus_t3: f64,
    pub i_a_c: f64,
    pub i_a_d: f64,
    pub tsw_c: f64,
    pub tsw_d: f64,
    pub tsw_tot: f64,
    pub status: RowStatus,
}

/// One row per grid point, sorted by `t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScramblingReport {
    pub rows: Vec<ScanRow>,
}

impl ScramblingReport {
    pub fn from_rows(mut rows: Vec<ScanRow>) -> Self {
        rows.sort_by(|a, b| a.t.total_cmp(&b.t));
        Self { rows }
    }

    pub fn times(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.t).collect()
    }

    /// Rows violating `-T3 = TSW(tot) - TSW(C) - TSW(D)` beyond `tol`.
    pub fn witness_identity_violations(&self, tol: f64) -> Vec<f64> {
        self.rows
            .iter()
            .filter(|r| r.status.is_ok())
            .filter(|r| (r.minus_t3 - (r.tsw_tot - r.tsw_c - r.tsw_d)).abs() > tol)
            .map(|r| r.t)
            .collect()
    }

    /// Rows where a region carries steerable weight above `tsw_tol` but its
    /// mutual information with the reference is at most `mi_tol`.
    pub fn hierarchy_violations(&self, tsw_tol: f64, mi_tol: f64) -> Vec<f64> {
        self.rows
            .iter()
            .filter(|r| r.status.is_ok())
            .filter(|r| (r.tsw_c > tsw_tol && r.i_a_c <= mi_tol) || (r.tsw_d > tsw_tol && r.i_a_d <= mi_tol))
            .map(|r| r.t)
            .collect()
    }

    pub fn failed_rows(&self) -> usize {
        self.rows.iter().filter(|r| matches!(r.status, RowStatus::SolverError(_))).count()
    }
}

/// Both witnesses for a single unitary.
pub fn evaluate_point(
    t: f64,
    u: &ComplexMatrix,
    part: &PartitionSpec,
    meas: Option<&MeasurementSet>,
    solver: &SolverOptions,
) -> Result<ScanRow> {
    let tmi = tripartite_mutual_information(&build_choi_q1(u, part.n_qubits())?, part)?;
    let mut row = ScanRow {
        t,
        minus_i3: tmi.minus_i3,
        minus_t3: f64::NAN,
        i_a_c: tmi.i_a_c,
        i_a_d: tmi.i_a_d,
        tsw_c: f64::NAN,
        tsw_d: f64::NAN,
        tsw_tot: f64::NAN,
        status: RowStatus::Skipped,
    };
    let Some(meas) = meas else {
        return Ok(row);
    };
    let opts = WitnessOptions {
        solver: solver.clone(),
        ..Default::default()
    };
    match minus_t3_with(meas, u, part, t, &opts) {
        Ok(w) => {
            row.minus_t3 = w.minus_t3;
            row.tsw_c = w.tsw_c;
            row.tsw_d = w.tsw_d;
            row.tsw_tot = w.tsw_tot;
            row.status = RowStatus::Ok;
        }
        Err(e @ scrambling::Error::Solver { .. }) => row.status = RowStatus::SolverError(e.to_string()),
        Err(e) => return Err(e.into()),
    }
    Ok(row)
}

enum Source {
    Propagator(Propagator),
    Clifford,
    Powers(ComplexMatrix),
}

impl Source {
    fn unitary(&self, t: f64) -> ComplexMatrix {
        match self {
            Self::Propagator(p) => p.unitary(t),
            Self::Clifford => clifford_scan_unitary(t),
            Self::Powers(u) => {
                let k = t.round() as usize;
                (0..k).fold(ComplexMatrix::identity(u.rows()), |acc, _| u.matmul(&acc))
            }
        }
    }
}

/// Evaluates both witnesses at every grid point. Points are processed in
/// parallel and gathered in time order; solver failures are recorded in the
/// row status and do not abort the scan.
pub fn run_scan(config: &ExperimentConfig) -> Result<ScramblingReport> {
    config.validate()?;
    let part = &config.partition;
    let (source, times) = match &config.model {
        ModelSpec::Hamiltonian(h) => (Source::Propagator(Propagator::new(&h.build()?)?), config.time_grid.points()),
        ModelSpec::Clifford => (Source::Clifford, config.time_grid.points()),
        ModelSpec::CustomUnitary { path } => {
            let u = read_unitary(path, part.n_qubits())?;
            let steps = (0..config.time_grid.n_points).map(|k| k as f64).collect();
            (Source::Powers(u), steps)
        }
    };
    let meas = config.measurement_set()?;
    let meas = config.steering.then_some(&meas);
    let solver = config.solver();
    let rows = times
        .par_iter()
        .map(|&t| evaluate_point(t, &source.unitary(t), part, meas, &solver))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScramblingReport::from_rows(rows))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliffordPoint {
    pub theta: f64,
    pub minus_i3: f64,
    pub minus_t3: f64,
}

/// `-I3` and `-T3` of the angle-parametrized Clifford circuit with
/// `C = {q1}`, `D = {q2, q3}`.
pub fn run_clifford_scan(thetas: &[f64], solver: &SolverOptions) -> Result<Vec<CliffordPoint>> {
    if thetas.is_empty() {
        return Err(crate::CliError::Config("angle grid is empty".into()));
    }
    let part = PartitionSpec::contiguous(3, 1)?;
    let meas = MeasurementSet::pauli();
    let mut points = thetas
        .par_iter()
        .map(|&theta| {
            let row = evaluate_point(theta, &clifford_scan_unitary(theta), &part, Some(&meas), solver)?;
            Ok(CliffordPoint {
                theta,
                minus_i3: row.minus_i3,
                minus_t3: row.minus_t3,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(|a, b| a.theta.total_cmp(&b.theta));
    Ok(points)
}
