use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use scrambling::channels::PartitionSpec;
use scrambling::models::{HamiltonianSpec, Pauli};
use scrambling::sdp::SolverOptions;
use scrambling::steering::MeasurementSet;

use crate::{CliError, Result};

/// What generates the unitary at each grid point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ModelSpec {
    /// `U(t) = exp(-iHt)`.
    Hamiltonian(HamiltonianSpec),
    /// The three-qubit Clifford circuit; the grid coordinate is the angle θ.
    Clifford,
    /// A fixed unitary read from a text file, applied `k` times at grid
    /// point `k`.
    CustomUnitary { path: PathBuf },
}

impl ModelSpec {
    pub fn n_qubits(&self) -> Option<usize> {
        match self {
            Self::Hamiltonian(h) => Some(h.n_qubits),
            Self::Clifford => Some(3),
            Self::CustomUnitary { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    pub t_start: f64,
    pub t_end: f64,
    pub n_points: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, t_end: f64, n_points: usize) -> Result<Self> {
        let grid = Self {
            t_start,
            t_end,
            n_points,
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_points < 2 {
            return Err(CliError::Config(format!("time grid needs at least 2 points, got {}", self.n_points)));
        }
        if !(self.t_start >= 0.0 && self.t_end > self.t_start && self.t_end.is_finite()) {
            return Err(CliError::Config(format!(
                "time grid requires t_end > t_start >= 0, got [{}, {}]",
                self.t_start, self.t_end
            )));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        (self.t_end - self.t_start) / (self.n_points - 1) as f64
    }

    pub fn points(&self) -> Vec<f64> {
        let dt = self.spacing();
        (0..self.n_points)
            .map(|k| if k + 1 == self.n_points { self.t_end } else { self.t_start + k as f64 * dt })
            .collect()
    }

    /// Default window for a model: `[0, 40/g]` for spin chains, `[0, 148/J]`
    /// for SYK, `[0, π]` for the Clifford angle.
    pub fn default_for(model: &ModelSpec) -> Self {
        let (t_end, n_points) = match model {
            ModelSpec::Hamiltonian(h) => match h.kind {
                scrambling::models::HamiltonianKind::Syk => (148.0 / h.j.abs().max(f64::MIN_POSITIVE), 200),
                _ => (40.0 / h.g.abs().max(f64::MIN_POSITIVE), 200),
            },
            ModelSpec::Clifford => (std::f64::consts::PI, 25),
            ModelSpec::CustomUnitary { .. } => (10.0, 11),
        };
        Self {
            t_start: 0.0,
            t_end,
            n_points,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Outputs {
    #[serde(default)]
    pub csv: Option<PathBuf>,
    #[serde(default)]
    pub svg: Option<PathBuf>,
}

/// A complete scan description. JSON on disk; every field can be overridden
/// from the command line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub model: ModelSpec,
    pub partition: PartitionSpec,
    pub time_grid: TimeGrid,
    /// Pauli axes measured on `q1`, e.g. `"XYZ"`.
    #[serde(default = "default_axes")]
    pub measurements: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub outputs: Outputs,
    /// Duality-gap tolerance of the steering-weight solver.
    #[serde(default = "default_sdp_tol")]
    pub sdp_tol: f64,
    /// Skip the steering-side columns (Choi quantities only).
    #[serde(default = "default_true")]
    pub steering: bool,
}

fn default_axes() -> String {
    "XYZ".into()
}

fn default_sdp_tol() -> f64 {
    SolverOptions::default().gap_tol
}

fn default_true() -> bool {
    true
}

impl ExperimentConfig {
    pub fn new(model: ModelSpec, partition: PartitionSpec) -> Self {
        let time_grid = TimeGrid::default_for(&model);
        Self {
            model,
            partition,
            time_grid,
            measurements: default_axes(),
            seed: 0,
            outputs: Outputs::default(),
            sdp_tol: default_sdp_tol(),
            steering: true,
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let cfg: Self = serde_json::from_str(&text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.time_grid.validate()?;
        if let Some(n) = self.model.n_qubits() {
            if n != self.partition.n_qubits() {
                return Err(CliError::Config(format!(
                    "model has {n} qubits but the partition covers {}",
                    self.partition.n_qubits()
                )));
            }
        }
        if !(self.sdp_tol > 0.0 && self.sdp_tol < 1.0) {
            return Err(CliError::Config(format!("sdp_tol must lie in (0, 1), got {}", self.sdp_tol)));
        }
        self.measurement_set()?;
        Ok(())
    }

    pub fn measurement_set(&self) -> Result<MeasurementSet> {
        let axes = parse_axes(&self.measurements)?;
        Ok(MeasurementSet::pauli_bases(&axes)?)
    }

    pub fn solver(&self) -> SolverOptions {
        SolverOptions::default().with_gap_tol(self.sdp_tol)
    }
}

pub fn parse_axes(s: &str) -> Result<Vec<Pauli>> {
    let axes: Vec<Pauli> = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c.to_ascii_uppercase() {
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(CliError::Config(format!("unknown measurement axis '{other}'"))),
        })
        .collect::<Result<_>>()?;
    if axes.is_empty() {
        return Err(CliError::Config("at least one measurement axis is required".into()));
    }
    Ok(axes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let cfg = ExperimentConfig::new(
            ModelSpec::Hamiltonian(HamiltonianSpec::ising(4, 1.0, 0.5)),
            PartitionSpec::contiguous(4, 2).unwrap(),
        );
        let text = serde_json::to_string_pretty(&cfg).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(cfg, back);
        assert_eq!(back.time_grid.n_points, 200);
        assert!((back.time_grid.t_end - 40.0).abs() < 1e-15);
    }

    #[test]
    fn minimal_json_fills_defaults() {
        let cfg: ExperimentConfig = serde_json::from_str(
            r#"{
                "model": {"type": "hamiltonian", "kind": "syk", "n_qubits": 4, "J": 1.0, "seed": 3},
                "partition": {"n_qubits": 4, "c": [1, 2], "d": [3, 4]},
                "time_grid": {"t_start": 0.0, "t_end": 148.0, "n_points": 200}
            }"#,
        )
        .unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.measurements, "XYZ");
        assert!(cfg.steering);
    }

    #[test]
    fn grid_validation() {
        assert!(TimeGrid::new(0.0, 1.0, 1).is_err());
        assert!(TimeGrid::new(1.0, 1.0, 5).is_err());
        assert!(TimeGrid::new(-1.0, 1.0, 5).is_err());
        let g = TimeGrid::new(0.0, 1.0, 5).unwrap();
        assert_eq!(g.points(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn mismatched_partition_rejected() {
        let cfg = ExperimentConfig::new(
            ModelSpec::Hamiltonian(HamiltonianSpec::ising(5, 1.0, 0.5)),
            PartitionSpec::contiguous(4, 2).unwrap(),
        );
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn axes() {
        assert_eq!(parse_axes("xz").unwrap(), vec![Pauli::X, Pauli::Z]);
        assert!(parse_axes("XQ").is_err());
        assert!(parse_axes("").is_err());
    }
}
