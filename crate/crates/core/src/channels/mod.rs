//! Choi states, pseudo-density matrices and the tripartite mutual information.

mod choi;
mod partition;
mod pdm;
mod tmi;

pub use choi::{build_choi, build_choi_q1, ChoiState};
pub use partition::PartitionSpec;
pub use pdm::{
    assemblage_from_pdm, build_pdm, build_pdm_from_correlators, two_time_correlator, PseudoDensityMatrix,
    MAX_CORRELATOR_QUBITS,
};
pub use tmi::{haar_scrambled_baseline, tripartite_mutual_information, BaselineEstimate, TmiReport, MI_CLAMP};
