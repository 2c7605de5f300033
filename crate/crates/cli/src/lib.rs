//! Experiment runner on top of the `scrambling` library: time scans of both
//! witnesses, Clifford angle scans, backflow integrals, size sweeps and the
//! invariant suite behind `scrambling verify`.

pub mod backflow;
pub mod config;
pub mod output;
pub mod scan;
pub mod sweep;
pub mod unitary_file;
pub mod verify;

use thiserror::Error;

pub use backflow::{backflow_integral, BackflowResult, Quantity};
pub use config::{ExperimentConfig, ModelSpec, Outputs, TimeGrid};
pub use scan::{evaluate_point, run_clifford_scan, run_scan, CliffordPoint, RowStatus, ScanRow, ScramblingReport};
pub use sweep::{default_n_c, size_sweep, ModelFamily, SweepOptions, SweepRow, DEFAULT_SIZES};
pub use verify::{verify, CheckResult, VerifyOptions, VerifyReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] scrambling::Error),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unitary file: {0}")]
    UnitaryFile(String),

    #[error("backflow: {0}")]
    Backflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
