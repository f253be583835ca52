//! One-to-many averaging and problem-wise / overall ranking of pairwise
//! scores.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scores::ScoreSet;

/// A [`ScoreSet`] together with the context it was computed in.
#[derive(Debug, Clone, PartialEq)]
pub struct PairScore {
    pub primary: String,
    pub alternative: String,
    pub problem: String,
    pub dimension: usize,
    pub scores: ScoreSet,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AveragedScores {
    pub ado: f64,
    pub adc: f64,
    pub ako: f64,
    pub akc: f64,
    pub akt: f64,
    pub k: usize,
}

impl AveragedScores {
    pub fn as_array(&self) -> [f64; 5] {
        [self.ado, self.adc, self.ako, self.akc, self.akt]
    }
}

/// Running mean. Identical inputs reproduce themselves exactly and the
/// result never leaves the hull of the inputs.
fn mean_scores<'a>(sets: impl IntoIterator<Item = &'a ScoreSet>) -> ([f64; 5], usize) {
    let mut acc = [0.0; 5];
    let mut count = 0usize;
    for s in sets {
        count += 1;
        for (a, x) in acc.iter_mut().zip(s.as_array()) {
            *a += (x - *a) / count as f64;
        }
    }
    (acc, count)
}

/// Averages a primary's scores against `k` alternatives on one problem and
/// dimension.
pub fn one_to_many(pairs: &[PairScore]) -> Result<AveragedScores> {
    let first = pairs
        .first()
        .ok_or_else(|| Error::EmptyInput("no pairwise scores to average".into()))?;
    if let Some(odd) = pairs
        .iter()
        .find(|p| p.primary != first.primary || p.problem != first.problem || p.dimension != first.dimension)
    {
        return Err(Error::MixedContext(format!(
            "expected primary `{}` on {}/{}, found `{}` on {}/{}",
            first.primary, first.problem, first.dimension, odd.primary, odd.problem, odd.dimension
        )));
    }
    let (m, k) = mean_scores(pairs.iter().map(|p| &p.scores));
    Ok(AveragedScores {
        ado: m[0],
        adc: m[1],
        ako: m[2],
        akc: m[3],
        akt: m[4],
        k,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreKey {
    Do,
    Dc,
    Ko,
    Kc,
    Kt,
}

impl ScoreKey {
    pub const ALL: [ScoreKey; 5] = [Self::Do, Self::Dc, Self::Ko, Self::Kc, Self::Kt];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            ScoreKey::Do => "DO",
            ScoreKey::Dc => "DC",
            ScoreKey::Ko => "KO",
            ScoreKey::Kc => "KC",
            ScoreKey::Kt => "KT",
        }
    }
}

impl fmt::Display for ScoreKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScoreKey {
    type Err = Error;

    /// Accepts bare names (`kt`) and the averaged / problem-wise / overall
    /// prefixed forms (`akt`, `pkt`, `okt`), case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let bare = match lower.len() {
            3 => lower.strip_prefix(['a', 'p', 'o']).unwrap_or(&lower),
            _ => lower.as_str(),
        };
        match bare {
            "do" => Ok(ScoreKey::Do),
            "dc" => Ok(ScoreKey::Dc),
            "ko" => Ok(ScoreKey::Ko),
            "kc" => Ok(ScoreKey::Kc),
            "kt" => Ok(ScoreKey::Kt),
            _ => Err(Error::UnknownKey(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankScope {
    ProblemWise,
    Overall,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankRow {
    pub algorithm: String,
    /// Means of DO, DC, KO, KC, KT in that order.
    pub means: [f64; 5],
    pub cells_used: usize,
    pub cells_expected: usize,
}

impl RankRow {
    pub fn get(&self, key: ScoreKey) -> f64 {
        self.means[key.index()]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    pub scope: RankScope,
    /// Set for problem-wise tables.
    pub problem: Option<String>,
    /// Rows in algorithm-id order.
    pub rows: Vec<RankRow>,
    pub k: usize,
    pub d: usize,
    pub p: usize,
    pub key: ScoreKey,
    pub rank_order: Vec<String>,
    /// Human-readable notes on grid cells that were absent.
    pub skipped: Vec<String>,
}

impl RankTable {
    pub fn row(&self, algorithm: &str) -> Option<&RankRow> {
        self.rows.iter().find(|r| r.algorithm == algorithm)
    }

    /// Score names with the scope prefix, e.g. `OKT` or `PDO`.
    pub fn column_name(&self, key: ScoreKey) -> String {
        let prefix = match self.scope {
            RankScope::ProblemWise => 'P',
            RankScope::Overall => 'O',
        };
        format!("{prefix}{}", key.name())
    }
}

/// Sorts algorithms by `key` descending. Ties fall back to the KT mean, then
/// the DO mean (both descending), then the algorithm id ascending.
pub fn rank_order(table: &RankTable, key: ScoreKey) -> Vec<String> {
    let mut rows: Vec<&RankRow> = table.rows.iter().collect();
    rows.sort_by(|a, b| {
        b.get(key)
            .total_cmp(&a.get(key))
            .then_with(|| b.get(ScoreKey::Kt).total_cmp(&a.get(ScoreKey::Kt)))
            .then_with(|| b.get(ScoreKey::Do).total_cmp(&a.get(ScoreKey::Do)))
            .then_with(|| a.algorithm.cmp(&b.algorithm))
    });
    rows.into_iter().map(|r| r.algorithm.clone()).collect()
}

fn rank_grid(pairs: &[&PairScore], scope: RankScope, problem: Option<String>, key: ScoreKey) -> Result<RankTable> {
    if pairs.is_empty() {
        return Err(Error::EmptyInput("no pairwise scores to rank".into()));
    }
    let algorithms: BTreeSet<&str> = pairs
        .iter()
        .flat_map(|p| [p.primary.as_str(), p.alternative.as_str()])
        .collect();
    let contexts: BTreeSet<(&str, usize)> = pairs.iter().map(|p| (p.problem.as_str(), p.dimension)).collect();
    let problems: BTreeSet<&str> = contexts.iter().map(|c| c.0).collect();
    let dims: BTreeSet<usize> = contexts.iter().map(|c| c.1).collect();

    let mut cells: BTreeMap<(&str, &str, &str, usize), &ScoreSet> = BTreeMap::new();
    for p in pairs {
        cells.insert(
            (
                p.primary.as_str(),
                p.alternative.as_str(),
                p.problem.as_str(),
                p.dimension,
            ),
            &p.scores,
        );
    }

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &alg in &algorithms {
        let mut present = Vec::new();
        let mut expected = 0;
        for &alt in algorithms.iter().filter(|&&a| a != alg) {
            for &(prob, dim) in &contexts {
                expected += 1;
                match cells.get(&(alg, alt, prob, dim)) {
                    Some(s) => present.push(*s),
                    None => skipped.push(format!("{alg} vs {alt} on {prob}/{dim}")),
                }
            }
        }
        if present.is_empty() {
            skipped.push(format!("{alg}: no scores as primary; row omitted"));
            continue;
        }
        let (means, used) = mean_scores(present);
        rows.push(RankRow {
            algorithm: alg.to_string(),
            means,
            cells_used: used,
            cells_expected: expected,
        });
    }

    let mut table = RankTable {
        scope,
        problem,
        rows,
        k: algorithms.len().saturating_sub(1),
        d: dims.len(),
        p: problems.len(),
        key,
        rank_order: Vec::new(),
        skipped,
    };
    table.rank_order = rank_order(&table, key);
    Ok(table)
}

/// Means over every alternative and dimension of one problem, ranked by
/// `key` (KT by default in the command layer).
pub fn problem_wise_rank(pairs: &[PairScore], problem: &str, key: ScoreKey) -> Result<RankTable> {
    let selected: Vec<&PairScore> = pairs.iter().filter(|p| p.problem == problem).collect();
    rank_grid(&selected, RankScope::ProblemWise, Some(problem.to_string()), key)
}

/// Means over every alternative, dimension and problem.
pub fn overall_rank(pairs: &[PairScore], key: ScoreKey) -> Result<RankTable> {
    let all: Vec<&PairScore> = pairs.iter().collect();
    rank_grid(&all, RankScope::Overall, None, key)
}
