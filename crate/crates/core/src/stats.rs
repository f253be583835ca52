//! Two-sample Wilcoxon rank-sum (Mann-Whitney) test.

use std::fmt;

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::matrix::TrialSet;

/// Largest sample size for which the exact null distribution is used.
pub const EXACT_MAX_SAMPLE: usize = 12;

pub const DEFAULT_ALPHA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Significant, and the primary's values rank lower (better).
    PrimaryBetter,
    NotSignificant,
}

impl Direction {
    pub fn mark(self) -> char {
        match self {
            Direction::PrimaryBetter => '+',
            Direction::NotSignificant => '-',
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mark())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    NormalApprox,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSumResult {
    pub p_value: f64,
    pub significant: bool,
    pub direction: Direction,
    /// Mann-Whitney U of the primary sample.
    pub statistic: f64,
    /// Sum of the primary sample's mid-ranks.
    pub rank_sum: f64,
    pub method: Method,
    pub ties: bool,
    /// Every pooled value identical; reported with `p = 1`.
    pub degenerate: bool,
}

/// Mid-ranks (1-based) of the pooled sample and the tie term
/// `sum(t^3 - t)` over tie groups.
fn mid_ranks(pooled: &[f64]) -> (Vec<f64>, f64) {
    let mut order: Vec<usize> = (0..pooled.len()).collect();
    order.sort_by(|&a, &b| pooled[a].total_cmp(&pooled[b]));
    let mut ranks = vec![0.0; pooled.len()];
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && pooled[order[j]] == pooled[order[i]] {
            j += 1;
        }
        let rank = (i + 1 + j) as f64 / 2.0;
        for &idx in &order[i..j] {
            ranks[idx] = rank;
        }
        let t = (j - i) as f64;
        tie_term += t * t * t - t;
        i = j;
    }
    (ranks, tie_term)
}

struct RankSummary {
    m: usize,
    n: usize,
    rank_sum: f64,
    tie_term: f64,
}

impl RankSummary {
    fn new(p: &[f64], q: &[f64]) -> Result<Self> {
        if p.is_empty() || q.is_empty() {
            return Err(Error::EmptyInput("rank-sum test needs two non-empty samples".into()));
        }
        if let Some(&bad) = p.iter().chain(q).find(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue {
                value: bad,
                context: "rank-sum sample".into(),
            });
        }
        let pooled: Vec<f64> = p.iter().chain(q).copied().collect();
        let (ranks, tie_term) = mid_ranks(&pooled);
        Ok(RankSummary {
            m: p.len(),
            n: q.len(),
            rank_sum: ranks[..p.len()].iter().sum(),
            tie_term,
        })
    }

    fn u(&self) -> f64 {
        let m = self.m as f64;
        self.rank_sum - m * (m + 1.0) / 2.0
    }

    fn normal_p(&self) -> f64 {
        let (m, n) = (self.m as f64, self.n as f64);
        let total = m + n;
        let tie_adj = if total > 1.0 {
            self.tie_term / (total * (total - 1.0))
        } else {
            0.0
        };
        let var = m * n / 12.0 * ((total + 1.0) - tie_adj);
        if var <= 0.0 {
            return 1.0;
        }
        let dev = ((self.u() - m * n / 2.0).abs() - 0.5).max(0.0);
        let z = dev / var.sqrt();
        let sf = Normal::standard().sf(z);
        (2.0 * sf).min(1.0)
    }

    fn exact_p(&self) -> f64 {
        let counts = rank_sum_counts(self.m, self.n);
        let total: f64 = counts.iter().sum();
        // Tie-free, so the rank sum is an integer.
        let w = self.rank_sum.round() as usize;
        let le: f64 = counts[..=w].iter().sum();
        let ge: f64 = counts[w..].iter().sum();
        (2.0 * le.min(ge) / total).min(1.0)
    }
}

/// `counts[s]` is the number of `m`-subsets of `{1, ..., m + n}` whose sum
/// is `s`.
fn rank_sum_counts(m: usize, n: usize) -> Vec<f64> {
    let total = m + n;
    let max_sum = total * (total + 1) / 2;
    // table[k][s]: k-subsets of the ranks seen so far summing to s
    let mut table = vec![vec![0.0f64; max_sum + 1]; m + 1];
    table[0][0] = 1.0;
    for r in 1..=total {
        for k in (1..=m.min(r)).rev() {
            for s in (r..=max_sum).rev() {
                let add = table[k - 1][s - r];
                if add != 0.0 {
                    table[k][s] += add;
                }
            }
        }
    }
    table.swap_remove(m)
}

/// Two-sided p-value by the normal approximation with mid-ranks,
/// tie-corrected variance and continuity correction.
pub fn normal_approx_p(p: &[f64], q: &[f64]) -> Result<f64> {
    Ok(RankSummary::new(p, q)?.normal_p())
}

/// Two-sided p-value from the exact null distribution of the rank sum.
/// `None` when the pooled sample contains ties.
pub fn exact_p(p: &[f64], q: &[f64]) -> Result<Option<f64>> {
    let s = RankSummary::new(p, q)?;
    Ok((s.tie_term == 0.0).then(|| s.exact_p()))
}

pub fn rank_sum_test(p: &TrialSet, q: &TrialSet, alpha: f64) -> Result<RankSumResult> {
    rank_sum_test_values(p.values(), q.values(), alpha)
}

/// Exact distribution when both samples have at most
/// [`EXACT_MAX_SAMPLE`] values and no ties; normal approximation otherwise.
pub fn rank_sum_test_values(p: &[f64], q: &[f64], alpha: f64) -> Result<RankSumResult> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidConfig(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let s = RankSummary::new(p, q)?;
    let ties = s.tie_term > 0.0;
    let first = p[0];
    let degenerate = p.iter().chain(q).all(|&v| v == first);
    let small = s.m <= EXACT_MAX_SAMPLE && s.n <= EXACT_MAX_SAMPLE;
    let (p_value, method) = if degenerate {
        (1.0, Method::NormalApprox)
    } else if small && !ties {
        (s.exact_p(), Method::Exact)
    } else {
        if small {
            log::info!("ties present; exact rank-sum distribution unavailable, using normal approximation");
        }
        (s.normal_p(), Method::NormalApprox)
    };
    let significant = p_value < alpha;
    let mean_rank_p = s.rank_sum / s.m as f64;
    let total_rank = ((s.m + s.n) * (s.m + s.n + 1)) as f64 / 2.0;
    let mean_rank_q = (total_rank - s.rank_sum) / s.n as f64;
    let direction = if significant && mean_rank_p < mean_rank_q {
        Direction::PrimaryBetter
    } else {
        Direction::NotSignificant
    };
    Ok(RankSumResult {
        p_value,
        significant,
        direction,
        statistic: s.u(),
        rank_sum: s.rank_sum,
        method,
        ties,
        degenerate,
    })
}

/// One significant digit in scientific notation with a two-digit signed
/// exponent, e.g. `7.00E-18`.
pub fn format_p_value(p: f64) -> String {
    if p == 0.0 {
        return "0.00E+00".to_string();
    }
    let short = format!("{p:.0e}");
    let (mantissa, exp) = short.split_once('e').unwrap_or((&short, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}.00E{sign}{:02}", exp.abs())
}
