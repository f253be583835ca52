//! Direct pairwise comparison of stochastic optimizers.
//!
//! Two algorithms' best-of-trial values on the same problem are sorted and
//! paired position by position. Each pair is classified by comparability
//! (Win / Tie / Lose against the alternative) and by optimality (Best /
//! Average / Worst against the pooled universe), giving a 3x3 count matrix
//! from which five scores are derived: DO, DC (direct) and KO, KC, KT
//! (overall). Scores are averaged one-to-many and over dimensions and
//! problems for ranking; the same machinery runs over mean convergence
//! series. A Wilcoxon rank-sum test is provided for cross-checking.

pub mod aggregation;
pub mod bench;
pub mod commands;
pub mod convergence;
pub mod error;
pub mod io;
pub mod matrix;
pub mod report;
pub mod scores;
pub mod stats;

pub use aggregation::{
    one_to_many, overall_rank, problem_wise_rank, rank_order, AveragedScores, PairScore, RankTable, ScoreKey,
};
pub use convergence::{convergence_scores, mean_trace, ConvergenceTrace, MeanSeries};
pub use error::{Error, Result};
pub use matrix::{
    build_matrix, classify_comparability, classify_optimality, compute_universe, ComparabilityLevel, ComparisonConfig,
    OptimalityLevel, Orientation, PrasatulMatrix, TrialSet, UniverseStats,
};
pub use scores::{score_pair, DScoreComponents, ScoreSet};
pub use stats::{rank_sum_test, Direction, RankSumResult};
