use super::ipm::{SdpSolution, SolveStatus};
use super::problem::SteeringWeightProblem;
use crate::qla::{hermitian_eigenvalues, ComplexMatrix};

/// Negativity tolerated in the dual blocks.
pub const CERTIFICATE_PSD_TOL: f64 = 1e-9;
/// Allowed mismatch between the certificate's value and the primal optimum.
pub const CERTIFICATE_VALUE_TOL: f64 = 1e-6;

/// Diagnostics of a dual certificate check.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateCheck {
    /// Smallest eigenvalue over all `F_{a|x}`.
    pub min_block_eigenvalue: f64,
    /// Smallest eigenvalue over all `Σ_{a,x} D_λ(a|x) F_{a|x} - I`.
    pub min_strategy_eigenvalue: f64,
    /// `Σ <σ_{a|x}, F_{a|x}>`.
    pub dual_objective: f64,
    /// `|dual_objective - μ*|`.
    pub value_mismatch: f64,
    pub optimal: bool,
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        self.optimal
            && self.min_block_eigenvalue >= -CERTIFICATE_PSD_TOL
            && self.min_strategy_eigenvalue >= -CERTIFICATE_PSD_TOL
            && self.value_mismatch <= CERTIFICATE_VALUE_TOL
    }
}

/// Re-derives dual feasibility and the dual value from the returned blocks.
/// A feasible certificate bounds the unsteerable weight from above, so
/// `1 - dual_objective` is a certified lower bound on the steerable weight.
pub fn check_certificate(problem: &SteeringWeightProblem, solution: &SdpSolution) -> CertificateCheck {
    let d = problem.dim();
    let f = &solution.dual_certificate;
    let lowest = |m: &ComplexMatrix| {
        hermitian_eigenvalues(&m.hermitian_part())
            .map(|v| v[0])
            .unwrap_or(f64::NEG_INFINITY)
    };
    let shape_ok = f.len() == problem.members().len() && f.iter().all(|b| b.rows() == d && b.cols() == d);
    if !shape_ok {
        return CertificateCheck {
            min_block_eigenvalue: f64::NEG_INFINITY,
            min_strategy_eigenvalue: f64::NEG_INFINITY,
            dual_objective: f64::NAN,
            value_mismatch: f64::INFINITY,
            optimal: false,
        };
    }
    let min_block = f.iter().map(lowest).fold(f64::INFINITY, f64::min);
    let mut min_strategy = f64::INFINITY;
    for s in problem.strategies() {
        let mut z = ComplexMatrix::identity(d).scale_real(-1.0);
        for x in 0..problem.n_settings() {
            z += &f[problem.member_index(x, s.outcome(x))];
        }
        min_strategy = min_strategy.min(lowest(&z));
    }
    let dual_objective: f64 = problem
        .members()
        .iter()
        .zip(f)
        .map(|(s, b)| s.real_trace_product(b))
        .sum();
    CertificateCheck {
        min_block_eigenvalue: min_block,
        min_strategy_eigenvalue: min_strategy,
        dual_objective,
        value_mismatch: (dual_objective - solution.mu_star).abs(),
        optimal: solution.status == SolveStatus::Optimal,
    }
}

pub fn verify_certificate(problem: &SteeringWeightProblem, solution: &SdpSolution) -> bool {
    check_certificate(problem, solution).is_valid()
}
