use crate::{Error, Result};

/// Upper bound on the number of enumerated strategies.
pub const MAX_STRATEGIES: usize = 1_000_000;

/// A deterministic response function `x ↦ a(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeterministicStrategy {
    pub index: usize,
    pub table: Vec<usize>,
}

impl DeterministicStrategy {
    pub fn outcome(&self, setting: usize) -> usize {
        self.table[setting]
    }

    /// `D_λ(a|x)`.
    pub fn response(&self, outcome: usize, setting: usize) -> f64 {
        if self.table[setting] == outcome {
            1.0
        } else {
            0.0
        }
    }
}

/// All `o^m` strategies; strategy `λ` reads its outcomes off the base-`o`
/// digits of `λ`, most significant digit first.
pub fn enumerate_strategies(n_settings: usize, n_outcomes: usize) -> Result<Vec<DeterministicStrategy>> {
    if n_settings == 0 || n_outcomes == 0 {
        return Err(Error::InvalidInput("need at least one setting and one outcome".into()));
    }
    let too_many = || Error::TooManyStrategies {
        settings: n_settings,
        outcomes: n_outcomes,
    };
    let count = (0..n_settings).try_fold(1usize, |acc, _| {
        acc.checked_mul(n_outcomes).filter(|&c| c <= MAX_STRATEGIES)
    });
    let count = count.ok_or_else(too_many)?;
    Ok((0..count)
        .map(|index| {
            let mut table = vec![0; n_settings];
            let mut rest = index;
            for x in (0..n_settings).rev() {
                table[x] = rest % n_outcomes;
                rest /= n_outcomes;
            }
            DeterministicStrategy { index, table }
        })
        .collect())
}
