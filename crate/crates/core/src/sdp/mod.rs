//! Steerable-weight semidefinite program: deterministic strategies, the
//! interior-point solver and dual-certificate checks.

mod basis;
mod certificate;
mod ipm;
mod problem;
mod strategy;

pub use certificate::{
    check_certificate, verify_certificate, CertificateCheck, CERTIFICATE_PSD_TOL, CERTIFICATE_VALUE_TOL,
};
pub use ipm::{solve_steering_weight, solve_steering_weight_with, SdpSolution, SolveStatus, SolverOptions};
pub use problem::{SteeringWeightProblem, DEGENERATE_TRACE, MEMBER_PSD_TOL};
pub use strategy::{enumerate_strategies, DeterministicStrategy, MAX_STRATEGIES};
