//! Convergence comparison: per-generation best-so-far traces are averaged
//! over trials and the resulting mean series are compared like trial sets.

use log::warn;

use crate::error::{Error, Result};
use crate::matrix::{ComparisonConfig, TrialSet};
use crate::scores::{score_pair, ScoreSet};

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTrace {
    pub algorithm_id: String,
    pub problem_id: String,
    pub dimension: usize,
    trials: Vec<Vec<f64>>,
}

impl ConvergenceTrace {
    /// Checks that every trial has the same, non-zero number of generations
    /// and only finite values. Monotonicity is repaired later by
    /// [`mean_trace`].
    pub fn new(
        algorithm_id: impl Into<String>,
        problem_id: impl Into<String>,
        dimension: usize,
        trials: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let algorithm_id = algorithm_id.into();
        let first = trials
            .first()
            .ok_or_else(|| Error::EmptyInput(format!("trace for `{algorithm_id}` has no trials")))?;
        let generations = first.len();
        if generations == 0 {
            return Err(Error::EmptyInput(format!(
                "trace for `{algorithm_id}` has no generations"
            )));
        }
        for (i, t) in trials.iter().enumerate() {
            if t.len() != generations {
                return Err(Error::RaggedTrace {
                    trial: i,
                    expected: generations,
                    found: t.len(),
                });
            }
            if let Some(&bad) = t.iter().find(|v| !v.is_finite()) {
                return Err(Error::NonFiniteValue {
                    value: bad,
                    context: format!("trace for `{algorithm_id}`, trial {i}"),
                });
            }
        }
        Ok(ConvergenceTrace {
            algorithm_id,
            problem_id: problem_id.into(),
            dimension,
            trials,
        })
    }

    pub fn trials(&self) -> &[Vec<f64>] {
        &self.trials
    }

    pub fn generations(&self) -> usize {
        self.trials[0].len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeanSeries {
    pub values: Vec<f64>,
    pub trials_count: usize,
}

fn is_non_increasing(s: &[f64]) -> bool {
    s.windows(2).all(|w| w[1] <= w[0])
}

/// Iteration-wise mean over trials. Trials that are not best-so-far series
/// are replaced by their running minimum first.
pub fn mean_trace(trace: &ConvergenceTrace) -> MeanSeries {
    let g = trace.generations();
    let mut sums = vec![0.0; g];
    let mut repaired = 0usize;
    for t in &trace.trials {
        if is_non_increasing(t) {
            for (s, v) in sums.iter_mut().zip(t) {
                *s += v;
            }
        } else {
            repaired += 1;
            let mut best = f64::INFINITY;
            for (s, &v) in sums.iter_mut().zip(t) {
                best = best.min(v);
                *s += best;
            }
        }
    }
    if repaired > 0 {
        warn!(
            "{}/{}/{}: {repaired} trial(s) were not best-so-far; replaced by running minimum",
            trace.algorithm_id, trace.problem_id, trace.dimension
        );
    }
    let count = trace.trials.len();
    let values = sums.into_iter().map(|s| s / count as f64).collect();
    MeanSeries {
        values,
        trials_count: count,
    }
}

/// Scores two mean series as if they were trial sets with `n = G`.
pub fn convergence_scores(primary: &MeanSeries, alternative: &MeanSeries, cfg: &ComparisonConfig) -> Result<ScoreSet> {
    if primary.values.len() != alternative.values.len() {
        return Err(Error::LengthMismatch {
            primary: primary.values.len(),
            alternative: alternative.values.len(),
        });
    }
    let p = TrialSet::anonymous(primary.values.clone())?;
    let q = TrialSet::anonymous(alternative.values.clone())?;
    score_pair(&p, &q, cfg)
}
