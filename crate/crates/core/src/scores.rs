//! D-scores (direct optimality / comparability) and K-scores (overall
//! optimality / comparability / together) read off a count matrix.
//!
//! D-score components divide one cell by one plus its column (optimality)
//! or row (comparability) total, so every component lies in `[0, 1)` and
//! the D-scores lie strictly inside `(-1, 1.5)`. K-scores are margin ratios
//! over `n`: KO and KC lie in `[-1, 1]`, KT in `[0, 1]`.

use crate::error::Result;
use crate::matrix::{build_matrix, ComparisonConfig, Orientation, PrasatulMatrix, TrialSet};

/// Weight of the middle level (Average / Tie) in every composite score.
const MIDDLE_WEIGHT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DScoreComponents {
    pub o1: f64,
    pub o2: f64,
    pub o3: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl DScoreComponents {
    pub fn from_matrix(m: &PrasatulMatrix) -> Self {
        let (o1, o2, o3) = optimality_components(m);
        let (c1, c2, c3) = comparability_components(m);
        DScoreComponents { o1, o2, o3, c1, c2, c3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreSet {
    pub do_score: f64,
    pub dc_score: f64,
    pub ko: f64,
    pub kc: f64,
    pub kt: f64,
    pub n: u64,
}

impl ScoreSet {
    /// All five measures from one matrix; the matrix must already be in the
    /// orientation the caller wants the formulas applied to.
    pub fn from_matrix(m: &PrasatulMatrix) -> Self {
        ScoreSet {
            do_score: direct_optimality(m),
            dc_score: direct_comparability(m),
            ko: overall_optimality(m),
            kc: overall_comparability(m),
            kt: overall_together(m),
            n: m.n(),
        }
    }

    pub fn with_orientation(m: &PrasatulMatrix, orientation: Orientation) -> Self {
        Self::from_matrix(&m.oriented(orientation))
    }

    pub fn as_array(&self) -> [f64; 5] {
        [self.do_score, self.dc_score, self.ko, self.kc, self.kt]
    }
}

fn ratio(num: u64, den: u64) -> f64 {
    num as f64 / den as f64
}

/// `(O1, O2, O3)`: Win-row cell of each optimality column over one plus the
/// column total.
pub fn optimality_components(m: &PrasatulMatrix) -> (f64, f64, f64) {
    let o = |j| ratio(m.cell(0, j), 1 + m.col_total(j));
    (o(0), o(1), o(2))
}

/// `(C1, C2, C3)`: Best-column cell of each comparability row over one plus
/// the row total.
pub fn comparability_components(m: &PrasatulMatrix) -> (f64, f64, f64) {
    let c = |i| ratio(m.cell(i, 0), 1 + m.row_total(i));
    (c(0), c(1), c(2))
}

pub fn direct_optimality(m: &PrasatulMatrix) -> f64 {
    let (o1, o2, o3) = optimality_components(m);
    o1 + MIDDLE_WEIGHT * o2 - o3
}

pub fn direct_comparability(m: &PrasatulMatrix) -> f64 {
    let (c1, c2, c3) = comparability_components(m);
    c1 + MIDDLE_WEIGHT * c2 - c3
}

pub fn overall_optimality(m: &PrasatulMatrix) -> f64 {
    let cols = [m.col_total(0), m.col_total(1), m.col_total(2)].map(|v| v as f64);
    (cols[0] + MIDDLE_WEIGHT * cols[1] - cols[2]) / m.n() as f64
}

pub fn overall_comparability(m: &PrasatulMatrix) -> f64 {
    let rows = [m.row_total(0), m.row_total(1), m.row_total(2)].map(|v| v as f64);
    (rows[0] + MIDDLE_WEIGHT * rows[1] - rows[2]) / m.n() as f64
}

/// Share of pairs that are both Win/Tie and Best/Average.
pub fn overall_together(m: &PrasatulMatrix) -> f64 {
    let block = m.cell(0, 0) + m.cell(0, 1) + m.cell(1, 0) + m.cell(1, 1);
    ratio(block, m.n())
}

/// Builds the matrix for `(p, q)` and scores it under `cfg.orientation`.
pub fn score_pair(p: &TrialSet, q: &TrialSet, cfg: &ComparisonConfig) -> Result<ScoreSet> {
    let m = build_matrix(p, q, cfg)?;
    Ok(ScoreSet::with_orientation(&m, cfg.orientation))
}
