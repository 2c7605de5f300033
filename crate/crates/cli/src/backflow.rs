use serde::{Deserialize, Serialize};

use crate::scan::ScramblingReport;
use crate::{CliError, Result};

/// Which witness the backflow is accumulated for. Backflow counts increases
/// of `Q`, i.e. decreases of the plotted `-Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    I3,
    T3,
}

impl Quantity {
    fn value(self, minus_i3: f64, minus_t3: f64) -> f64 {
        match self {
            Self::I3 => -minus_i3,
            Self::T3 => -minus_t3,
        }
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::I3 => "I3",
            Self::T3 => "T3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BackflowResult {
    pub quantity: Quantity,
    pub t_end: f64,
    pub value: f64,
    /// Largest spacing between consecutive grid points used.
    pub spacing: f64,
}

/// Sum of the positive increments of `Q` over the grid points in `[t0, T]`.
pub fn backflow_integral(report: &ScramblingReport, quantity: Quantity, t_end: f64) -> Result<BackflowResult> {
    let rows = &report.rows;
    let (Some(first), Some(last)) = (rows.first(), rows.last()) else {
        return Err(CliError::Backflow("report has no rows".into()));
    };
    let slack = 1e-9 * last.t.abs().max(1.0);
    if !(t_end >= first.t && t_end <= last.t + slack) {
        return Err(CliError::Backflow(format!(
            "T = {t_end} lies outside the report range [{}, {}]",
            first.t, last.t
        )));
    }
    let mut value = 0.0;
    let mut spacing = 0.0f64;
    let mut prev: Option<(f64, f64)> = None;
    for row in rows.iter().take_while(|r| r.t <= t_end + slack) {
        let q = quantity.value(row.minus_i3, row.minus_t3);
        if q.is_nan() {
            return Err(CliError::Backflow(format!("{quantity} is missing at t = {}", row.t)));
        }
        if let Some((t0, q0)) = prev {
            value += (q - q0).max(0.0);
            spacing = spacing.max(row.t - t0);
        }
        prev = Some((row.t, q));
    }
    Ok(BackflowResult {
        quantity,
        t_end,
        value,
        spacing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::{RowStatus, ScanRow};

    fn report(series: &[f64]) -> ScramblingReport {
        ScramblingReport::from_rows(
            series
                .iter()
                .enumerate()
                .map(|(k, &q)| ScanRow {
                    t: k as f64 * 0.5,
                    minus_i3: -q,
                    minus_t3: -2.0 * q,
                    i_a_c: 0.0,
                    i_a_d: 0.0,
                    tsw_c: 0.0,
                    tsw_d: 0.0,
                    tsw_tot: 0.0,
                    status: RowStatus::Ok,
                })
                .collect(),
        )
    }

    #[test]
    fn telescoping_and_monotone_cases() {
        let up = report(&[0.0, 0.1, 0.5, 0.9, 1.3]);
        let r = backflow_integral(&up, Quantity::I3, 2.0).unwrap();
        assert!((r.value - 1.3).abs() < 1e-15);
        assert!((r.spacing - 0.5).abs() < 1e-15);
        let down = report(&[1.0, 0.6, 0.6, 0.1]);
        assert_eq!(backflow_integral(&down, Quantity::I3, 1.5).unwrap().value, 0.0);
    }

    #[test]
    fn oscillation_counts_rises_only() {
        let r = report(&[0.0, 1.0, 0.0, 1.0, 0.5]);
        assert!((backflow_integral(&r, Quantity::I3, 2.0).unwrap().value - 2.0).abs() < 1e-15);
        assert!((backflow_integral(&r, Quantity::T3, 2.0).unwrap().value - 4.0).abs() < 1e-15);
        assert!((backflow_integral(&r, Quantity::I3, 1.0).unwrap().value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn out_of_range() {
        let r = report(&[0.0, 1.0]);
        assert!(backflow_integral(&r, Quantity::I3, 3.0).is_err());
    }
}
