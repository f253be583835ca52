//! Shifted benchmark functions. Each base function has its global minimum
//! value 0 at `z = 0`; the shifted form evaluates `base(x - shift) + bias`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use log::debug;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BenchFunction {
    ShiftedSphere,
    ShiftedSchwefel12,
    ShiftedRosenbrock,
    ShiftedRastrigin,
    ShiftedAckley,
    ShiftedGriewank,
}

impl BenchFunction {
    pub const ALL: [BenchFunction; 6] = [
        Self::ShiftedSphere,
        Self::ShiftedSchwefel12,
        Self::ShiftedRosenbrock,
        Self::ShiftedRastrigin,
        Self::ShiftedAckley,
        Self::ShiftedGriewank,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::ShiftedSphere => "sphere",
            Self::ShiftedSchwefel12 => "schwefel12",
            Self::ShiftedRosenbrock => "rosenbrock",
            Self::ShiftedRastrigin => "rastrigin",
            Self::ShiftedAckley => "ackley",
            Self::ShiftedGriewank => "griewank",
        }
    }

    /// Unshifted, unbiased objective.
    pub fn base(self, z: &[f64]) -> f64 {
        match self {
            Self::ShiftedSphere => z.iter().map(|v| v * v).sum(),
            Self::ShiftedSchwefel12 => {
                let mut prefix = 0.0;
                z.iter()
                    .map(|v| {
                        prefix += v;
                        prefix * prefix
                    })
                    .sum()
            }
            // Rosenbrock moved so that its minimum sits at z = 0.
            Self::ShiftedRosenbrock => z
                .windows(2)
                .map(|w| {
                    let (a, b) = (w[0] + 1.0, w[1] + 1.0);
                    100.0 * (a * a - b).powi(2) + (a - 1.0).powi(2)
                })
                .sum(),
            Self::ShiftedRastrigin => z.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0).sum(),
            Self::ShiftedAckley => {
                let d = z.len() as f64;
                let rms = (z.iter().map(|v| v * v).sum::<f64>() / d).sqrt();
                let mean_cos = z.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
                // Grouped so that z = 0 evaluates to exactly 0.
                20.0 * (1.0 - (-0.2 * rms).exp()) + (1.0f64.exp() - mean_cos.exp())
            }
            Self::ShiftedGriewank => {
                let sum: f64 = z.iter().map(|v| v * v).sum::<f64>() / 4000.0;
                let prod: f64 = z
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
                    .product();
                sum + (1.0 - prod)
            }
        }
    }

    /// Convex members, for which `evaluate >= optimum` holds everywhere.
    pub fn is_convex(self) -> bool {
        matches!(self, Self::ShiftedSphere | Self::ShiftedSchwefel12)
    }
}

impl fmt::Display for BenchFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BenchFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|f| f.id() == lower)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown benchmark function `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec {
    pub function: BenchFunction,
    shift: Vec<f64>,
    pub bias: f64,
    pub bounds: (f64, f64),
}

impl BenchmarkSpec {
    pub fn new(function: BenchFunction, shift: Vec<f64>, bias: f64, bounds: (f64, f64)) -> Result<Self> {
        let (lo, hi) = bounds;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidConfig(format!("invalid bounds [{lo}, {hi}]")));
        }
        if shift.is_empty() {
            return Err(Error::InvalidConfig("dimension must be positive".into()));
        }
        if !bias.is_finite() {
            return Err(Error::InvalidConfig(format!("invalid bias {bias}")));
        }
        if let Some(s) = shift.iter().find(|&&s| !(s > lo && s < hi)) {
            return Err(Error::InvalidConfig(format!(
                "shift component {s} not strictly inside [{lo}, {hi}]"
            )));
        }
        Ok(BenchmarkSpec {
            function,
            shift,
            bias,
            bounds,
        })
    }

    pub fn dimension(&self) -> usize {
        self.shift.len()
    }

    pub fn shift_vector(&self) -> &[f64] {
        &self.shift
    }

    /// Problem identifier used in results files.
    pub fn problem_id(&self) -> &'static str {
        self.function.id()
    }

    /// Objective value at `x`. Coordinates outside the bounds are clamped.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: x.len(),
            });
        }
        let (lo, hi) = self.bounds;
        if x.iter().any(|v| !(lo..=hi).contains(v)) {
            debug!("{}: point outside [{lo}, {hi}] clamped", self.function);
        }
        Ok(self.evaluate_in_bounds(x))
    }

    pub(crate) fn evaluate_in_bounds(&self, x: &[f64]) -> f64 {
        let (lo, hi) = self.bounds;
        let z: Vec<f64> = x.iter().zip(&self.shift).map(|(&v, &s)| v.clamp(lo, hi) - s).collect();
        self.function.base(&z) + self.bias
    }

    /// Global minimum value, attained at the shift vector.
    pub fn optimum(&self) -> f64 {
        self.bias
    }
}
