use crate::models::Pauli;
use crate::qla::ComplexMatrix;
use crate::{Error, Result, C64};

const PROJECTOR_TOL: f64 = 1e-10;

/// Projective measurements on the encoded qubit; `projector(x, a)` is `E_{a|x}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementSet {
    settings: Vec<Vec<ComplexMatrix>>,
}

impl MeasurementSet {
    /// Validates `E² = E = E†` and `Σ_a E_{a|x} = I` for every setting; all
    /// settings must share one outcome count.
    pub fn new(settings: Vec<Vec<ComplexMatrix>>) -> Result<Self> {
        let first = settings
            .first()
            .ok_or_else(|| Error::InvalidInput("measurement set has no settings".into()))?;
        let outcomes = first.len();
        let d = first
            .first()
            .ok_or_else(|| Error::InvalidInput("setting has no outcomes".into()))?
            .rows();
        for (x, s) in settings.iter().enumerate() {
            if s.len() != outcomes {
                return Err(Error::InvalidInput(format!(
                    "setting {x} has {} outcomes, expected {outcomes}",
                    s.len()
                )));
            }
            let mut total = ComplexMatrix::zeros(d, d);
            for (a, e) in s.iter().enumerate() {
                if !e.is_square() || e.rows() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: e.rows(),
                    });
                }
                if e.hermiticity_error() > PROJECTOR_TOL {
                    return Err(Error::NonProjective(format!("E[{a}|{x}] is not Hermitian")));
                }
                if e.matmul(e).max_abs_diff(e) > PROJECTOR_TOL {
                    return Err(Error::NonProjective(format!("E[{a}|{x}]^2 != E[{a}|{x}]")));
                }
                total += e;
            }
            if total.max_abs_diff(&ComplexMatrix::identity(d)) > PROJECTOR_TOL {
                return Err(Error::NonProjective(format!("projectors of setting {x} do not sum to I")));
            }
        }
        Ok(Self { settings })
    }

    /// Eigenprojectors `(I ± P)/2` of the given Pauli axes; outcome 0 is the
    /// `+1` eigenvalue.
    pub fn pauli_bases(axes: &[Pauli]) -> Result<Self> {
        let id = ComplexMatrix::identity(2);
        let settings = axes
            .iter()
            .map(|p| {
                let m = p.matrix();
                let mut plus = id.clone();
                plus.axpy(C64::new(1.0, 0.0), &m);
                let mut minus = id.clone();
                minus.axpy(C64::new(-1.0, 0.0), &m);
                vec![plus.scale_real(0.5), minus.scale_real(0.5)]
            })
            .collect();
        Self::new(settings)
    }

    /// The three Pauli bases `x, y, z`.
    pub fn pauli() -> Self {
        Self::pauli_bases(&[Pauli::X, Pauli::Y, Pauli::Z]).expect("Pauli projectors are valid")
    }

    pub fn n_settings(&self) -> usize {
        self.settings.len()
    }

    pub fn n_outcomes(&self) -> usize {
        self.settings[0].len()
    }

    /// Dimension of the measured system.
    pub fn dim(&self) -> usize {
        self.settings[0][0].rows()
    }

    pub fn projector(&self, setting: usize, outcome: usize) -> &ComplexMatrix {
        &self.settings[setting][outcome]
    }
}
