//! The versioned plain-text file holding shift vectors, biases and bounds.
//!
//! ```text
//! # format-version: 1
//! <function> <bias> <lower> <upper> <shift_1> ... <shift_D>
//! ```
//!
//! Blank lines and lines starting with `#` are ignored, except that a
//! `# format-version:` line, when present, must name a supported version.

use std::collections::BTreeMap;

use super::functions::{BenchFunction, BenchmarkSpec};
use crate::error::{Error, Result};

pub const SHIFT_FORMAT_VERSION: u32 = 1;

/// The shift data shipped with the crate.
pub const SHIFT_DATA: &str = include_str!("../../data/shifts.txt");

#[derive(Debug, Clone, PartialEq)]
pub struct ShiftRecord {
    pub bias: f64,
    pub bounds: (f64, f64),
    pub shift: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ShiftTable {
    records: BTreeMap<BenchFunction, ShiftRecord>,
}

fn number(tok: &str, line: u64, what: &str) -> Result<f64> {
    let v: f64 = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("non-finite {what} `{tok}`")));
    }
    Ok(v)
}

impl ShiftTable {
    pub fn builtin() -> Self {
        Self::parse(SHIFT_DATA).expect("bundled shift data is valid")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut records = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx as u64 + 1;
            let trimmed = raw.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("format-version:") {
                    let v: u32 = v
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(line, "invalid format version"))?;
                    if v != SHIFT_FORMAT_VERSION {
                        return Err(Error::parse(line, format!("unsupported format version {v}")));
                    }
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            let mut toks = trimmed.split_whitespace();
            let name = toks.next().unwrap_or_default();
            let function: BenchFunction = name
                .parse()
                .map_err(|_| Error::parse(line, format!("unknown function `{name}`")))?;
            let mut field = |what: &str| -> Result<f64> {
                let tok = toks
                    .next()
                    .ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
                number(tok, line, what)
            };
            let bias = field("bias")?;
            let lower = field("lower bound")?;
            let upper = field("upper bound")?;
            let shift = toks
                .map(|t| number(t, line, "shift component"))
                .collect::<Result<Vec<f64>>>()?;
            // Validate through BenchmarkSpec::new.
            BenchmarkSpec::new(function, shift.clone(), bias, (lower, upper))
                .map_err(|e| Error::parse(line, e.to_string()))?;
            if records
                .insert(
                    function,
                    ShiftRecord {
                        bias,
                        bounds: (lower, upper),
                        shift,
                    },
                )
                .is_some()
            {
                return Err(Error::parse(line, format!("duplicate record for `{name}`")));
            }
        }
        Ok(ShiftTable { records })
    }

    pub fn record(&self, function: BenchFunction) -> Option<&ShiftRecord> {
        self.records.get(&function)
    }

    pub fn functions(&self) -> impl Iterator<Item = BenchFunction> + '_ {
        self.records.keys().copied()
    }

    /// The benchmark for `function` in `dimension`, using the first `dimension`
    /// shift components.
    pub fn spec(&self, function: BenchFunction, dimension: usize) -> Result<BenchmarkSpec> {
        let rec = self
            .records
            .get(&function)
            .ok_or_else(|| Error::InvalidConfig(format!("no shift data for `{function}`")))?;
        if dimension == 0 || dimension > rec.shift.len() {
            return Err(Error::DimensionMismatch {
                expected: rec.shift.len(),
                found: dimension,
            });
        }
        BenchmarkSpec::new(function, rec.shift[..dimension].to_vec(), rec.bias, rec.bounds)
    }
}
