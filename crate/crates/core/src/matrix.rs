//! Trial sets, universe landmarks and the 3x3 comparability/optimality
//! count matrix for one ordered pair of algorithms.

use std::fmt;
use std::str::FromStr;

use log::warn;

use crate::error::{Error, Result};

/// One algorithm's best-of-trial objective values for one problem and
/// dimension, held in non-decreasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialSet {
    algorithm_id: String,
    problem_id: String,
    dimension: usize,
    values: Vec<f64>,
}

impl TrialSet {
    /// Validates and sorts `values`. Input order is never trusted.
    pub fn new(
        algorithm_id: impl Into<String>,
        problem_id: impl Into<String>,
        dimension: usize,
        mut values: Vec<f64>,
    ) -> Result<Self> {
        let algorithm_id = algorithm_id.into();
        if values.is_empty() {
            return Err(Error::EmptyInput(format!(
                "trial set for `{algorithm_id}` has no values"
            )));
        }
        if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue {
                value: bad,
                context: format!("trial set for `{algorithm_id}`"),
            });
        }
        if dimension == 0 {
            return Err(Error::InvalidConfig("dimension must be positive".into()));
        }
        values.sort_by(f64::total_cmp);
        Ok(TrialSet {
            algorithm_id,
            problem_id: problem_id.into(),
            dimension,
            values,
        })
    }

    /// A trial set without meaningful identifiers, for ad-hoc comparisons.
    pub fn anonymous(values: Vec<f64>) -> Result<Self> {
        Self::new("", "", 1, values)
    }

    pub fn algorithm_id(&self) -> &str {
        &self.algorithm_id
    }

    pub fn problem_id(&self) -> &str {
        &self.problem_id
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Landmarks of the pooled solutions of both algorithms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniverseStats {
    pub u_best: f64,
    pub u_mean: f64,
    pub u_worst: f64,
    pub optimum: Option<f64>,
    pub universe_size: usize,
}

impl UniverseStats {
    /// Attaches a known optimum. Values below it are reported, not rejected;
    /// classification never consults the optimum.
    pub fn with_optimum(mut self, optimum: f64, cfg: &ComparisonConfig) -> Self {
        if self.u_best < optimum - cfg.equality_tolerance {
            warn!(
                "universe best {} lies below the supplied optimum {}; data suspect",
                self.u_best, optimum
            );
        }
        self.optimum = Some(optimum);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComparabilityLevel {
    Win,
    Tie,
    Lose,
}

impl ComparabilityLevel {
    pub const ALL: [ComparabilityLevel; 3] = [Self::Win, Self::Tie, Self::Lose];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OptimalityLevel {
    Best,
    Average,
    Worst,
}

impl OptimalityLevel {
    pub const ALL: [OptimalityLevel; 3] = [Self::Best, Self::Average, Self::Worst];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Which way round the score formulas read the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    #[default]
    AsPrinted,
    /// Every score formula is applied to the transposed matrix.
    Transposed,
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "as-printed" | "asprinted" | "printed" => Ok(Orientation::AsPrinted),
            "transposed" => Ok(Orientation::Transposed),
            other => Err(Error::InvalidConfig(format!("unknown orientation `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComparisonConfig {
    /// Absolute tolerance for ties and band boundaries. Zero means exact.
    pub equality_tolerance: f64,
    pub orientation: Orientation,
}

impl ComparisonConfig {
    pub fn new(equality_tolerance: f64, orientation: Orientation) -> Result<Self> {
        if !(equality_tolerance >= 0.0 && equality_tolerance.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "equality tolerance must be a finite non-negative number, got {equality_tolerance}"
            )));
        }
        Ok(ComparisonConfig {
            equality_tolerance,
            orientation,
        })
    }
}

/// Counts of (comparability, optimality) co-classifications. Rows are
/// Win/Tie/Lose, columns Best/Average/Worst.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrasatulMatrix {
    counts: [[u64; 3]; 3],
}

impl PrasatulMatrix {
    pub fn from_counts(counts: [[u64; 3]; 3]) -> Result<Self> {
        let m = PrasatulMatrix { counts };
        if m.n() == 0 {
            return Err(Error::EmptyInput("matrix has no trials".into()));
        }
        Ok(m)
    }

    pub fn counts(&self) -> &[[u64; 3]; 3] {
        &self.counts
    }

    pub fn n(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn cell(&self, row: usize, col: usize) -> u64 {
        self.counts[row][col]
    }

    pub fn get(&self, c: ComparabilityLevel, o: OptimalityLevel) -> u64 {
        self.counts[c.index()][o.index()]
    }

    pub fn row_total(&self, row: usize) -> u64 {
        self.counts[row].iter().sum()
    }

    pub fn col_total(&self, col: usize) -> u64 {
        self.counts.iter().map(|r| r[col]).sum()
    }

    pub fn transposed(&self) -> Self {
        let mut t = [[0u64; 3]; 3];
        for (i, row) in self.counts.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                t[j][i] = v;
            }
        }
        PrasatulMatrix { counts: t }
    }

    /// The matrix the score formulas should read under `orientation`.
    pub fn oriented(&self, orientation: Orientation) -> Self {
        match orientation {
            Orientation::AsPrinted => *self,
            Orientation::Transposed => self.transposed(),
        }
    }
}

impl fmt::Display for PrasatulMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.counts;
        write!(
            f,
            "[[{},{},{}],[{},{},{}],[{},{},{}]]",
            c[0][0], c[0][1], c[0][2], c[1][0], c[1][1], c[1][2], c[2][0], c[2][1], c[2][2]
        )
    }
}

fn check_same_context(p: &TrialSet, q: &TrialSet) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            primary: p.len(),
            alternative: q.len(),
        });
    }
    if p.problem_id != q.problem_id || p.dimension != q.dimension {
        return Err(Error::MixedContext(format!(
            "cannot compare {}/{} against {}/{}",
            p.problem_id, p.dimension, q.problem_id, q.dimension
        )));
    }
    Ok(())
}

pub fn compute_universe(p: &TrialSet, q: &TrialSet) -> Result<UniverseStats> {
    check_same_context(p, q)?;
    let pooled = p.values.iter().chain(&q.values).copied();
    let mut best = f64::INFINITY;
    let mut worst = f64::NEG_INFINITY;
    let mut sum = 0.0;
    for v in pooled {
        best = best.min(v);
        worst = worst.max(v);
        sum += v;
    }
    let size = p.len() + q.len();
    let mean = (sum / size as f64).clamp(best, worst);
    Ok(UniverseStats {
        u_best: best,
        u_mean: mean,
        u_worst: worst,
        optimum: None,
        universe_size: size,
    })
}

fn ensure_finite(v: f64, what: &str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteValue {
            value: v,
            context: what.to_string(),
        })
    }
}

/// Minimization: smaller is better.
pub fn classify_comparability(p: f64, q: f64, cfg: &ComparisonConfig) -> Result<ComparabilityLevel> {
    ensure_finite(p, "primary value")?;
    ensure_finite(q, "alternative value")?;
    let tol = cfg.equality_tolerance;
    Ok(if (p - q).abs() <= tol {
        ComparabilityLevel::Tie
    } else if p < q {
        ComparabilityLevel::Win
    } else {
        ComparabilityLevel::Lose
    })
}

/// Chained `<=` tests against the universe best and mean. The optimum is
/// not consulted.
pub fn classify_optimality(p: f64, universe: &UniverseStats, cfg: &ComparisonConfig) -> Result<OptimalityLevel> {
    ensure_finite(p, "primary value")?;
    let tol = cfg.equality_tolerance;
    Ok(if p <= universe.u_best + tol {
        OptimalityLevel::Best
    } else if p <= universe.u_mean + tol {
        OptimalityLevel::Average
    } else {
        OptimalityLevel::Worst
    })
}

/// Pairs the i-th best primary solution with the i-th best alternative
/// solution and counts each pair into exactly one cell.
pub fn build_matrix(p: &TrialSet, q: &TrialSet, cfg: &ComparisonConfig) -> Result<PrasatulMatrix> {
    let universe = compute_universe(p, q)?;
    let mut counts = [[0u64; 3]; 3];
    for (&pi, &qi) in p.values.iter().zip(&q.values) {
        let row = classify_comparability(pi, qi, cfg)?;
        let col = classify_optimality(pi, &universe, cfg)?;
        counts[row.index()][col.index()] += 1;
    }
    PrasatulMatrix::from_counts(counts)
}
