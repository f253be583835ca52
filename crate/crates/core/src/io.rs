//! Results and trace files.
//!
//! Both are comma-separated with a mandatory header:
//!
//! ```text
//! algorithm,problem,dimension,trial,best_value
//! algorithm,problem,dimension,trial,generation,best_value
//! ```
//!
//! Values are written with Rust's shortest round-trip formatting, so a
//! load after an emit reproduces every value bit-exactly.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use csv::{ReaderBuilder, StringRecord, WriterBuilder};

use crate::convergence::ConvergenceTrace;
use crate::error::{Error, Result};
use crate::matrix::TrialSet;

pub const RESULTS_HEADER: [&str; 5] = ["algorithm", "problem", "dimension", "trial", "best_value"];
pub const TRACE_HEADER: [&str; 6] = ["algorithm", "problem", "dimension", "trial", "generation", "best_value"];

/// `(problem, dimension)`.
pub type Context = (String, usize);

#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub algorithm: String,
    pub problem: String,
    pub dimension: usize,
    pub trial: usize,
    pub best_value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub algorithm: String,
    pub problem: String,
    pub dimension: usize,
    pub trial: usize,
    pub generation: usize,
    pub best_value: f64,
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        kind => Error::parse(line, format!("{kind:?}")),
    }
}

fn records<R: Read, const N: usize>(
    reader: R,
    header: &[&str; N],
) -> Result<impl Iterator<Item = Result<(u64, StringRecord)>>> {
    let mut rdr = ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let found = rdr.headers().map_err(csv_error)?.clone();
    if found.len() != N || found.iter().zip(header).any(|(a, b)| a != *b) {
        if found.is_empty() {
            return Err(Error::parse(1, "missing header"));
        }
        return Err(Error::parse(
            1,
            format!(
                "expected header `{}`, found `{}`",
                header.join(","),
                found.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    Ok(rdr.into_records().map(move |r| {
        let rec = r.map_err(csv_error)?;
        let line = rec.position().map(|p| p.line()).unwrap_or(0);
        if rec.len() != N {
            return Err(Error::parse(line, format!("expected {N} fields, found {}", rec.len())));
        }
        Ok((line, rec))
    }))
}

fn field_id(rec: &StringRecord, idx: usize, name: &str, line: u64) -> Result<String> {
    let v = &rec[idx];
    if v.is_empty() {
        return Err(Error::parse(line, format!("empty {name}")));
    }
    Ok(v.to_string())
}

fn field_count(rec: &StringRecord, idx: usize, name: &str, line: u64) -> Result<usize> {
    rec[idx]
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid {name} `{}`", &rec[idx])))
}

fn field_value(rec: &StringRecord, idx: usize, line: u64) -> Result<f64> {
    let raw = &rec[idx];
    let v: f64 = raw
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid best_value `{raw}`")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("non-finite best_value `{raw}`")));
    }
    Ok(v)
}

/// Parses a results file. Rows must be unique per
/// `(algorithm, problem, dimension, trial)`.
pub fn read_results<R: Read>(reader: R) -> Result<Vec<ResultRow>> {
    let mut seen = BTreeMap::new();
    let mut rows = Vec::new();
    for item in records(reader, &RESULTS_HEADER)? {
        let (line, rec) = item?;
        let row = ResultRow {
            algorithm: field_id(&rec, 0, "algorithm", line)?,
            problem: field_id(&rec, 1, "problem", line)?,
            dimension: field_count(&rec, 2, "dimension", line)?,
            trial: field_count(&rec, 3, "trial", line)?,
            best_value: field_value(&rec, 4, line)?,
        };
        if row.dimension == 0 {
            return Err(Error::parse(line, "dimension must be positive"));
        }
        let key = (row.algorithm.clone(), row.problem.clone(), row.dimension, row.trial);
        if let Some(first) = seen.insert(key, line) {
            return Err(Error::DuplicateRow {
                line,
                key: format!(
                    "{},{},{},{} (first seen at line {first})",
                    row.algorithm, row.problem, row.dimension, row.trial
                ),
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parses a trace file. Generations must run contiguously from 1 within
/// every trial and all trials of one series must have the same length.
pub fn read_traces<R: Read>(reader: R) -> Result<Vec<TraceRow>> {
    let mut rows = Vec::new();
    for item in records(reader, &TRACE_HEADER)? {
        let (line, rec) = item?;
        let row = TraceRow {
            algorithm: field_id(&rec, 0, "algorithm", line)?,
            problem: field_id(&rec, 1, "problem", line)?,
            dimension: field_count(&rec, 2, "dimension", line)?,
            trial: field_count(&rec, 3, "trial", line)?,
            generation: field_count(&rec, 4, "generation", line)?,
            best_value: field_value(&rec, 5, line)?,
        };
        if row.dimension == 0 {
            return Err(Error::parse(line, "dimension must be positive"));
        }
        rows.push((line, row));
    }
    // Contiguity is checked per (algorithm, problem, dimension, trial).
    type TrialKey<'a> = (&'a str, &'a str, usize, usize);
    let mut series: BTreeMap<TrialKey, Vec<(usize, u64)>> = BTreeMap::new();
    for (line, r) in &rows {
        series
            .entry((&r.algorithm, &r.problem, r.dimension, r.trial))
            .or_default()
            .push((r.generation, *line));
    }
    for (key, mut gens) in series {
        gens.sort_unstable();
        for (expected, &(g, line)) in (1..).zip(&gens) {
            if g != expected {
                let (a, p, d, t) = key;
                if g < expected {
                    return Err(Error::DuplicateRow {
                        line,
                        key: format!("{a},{p},{d},{t},{g}"),
                    });
                }
                return Err(Error::parse(
                    line,
                    format!("generations of {a}/{p}/{d} trial {t} are not contiguous from 1 (missing {expected})"),
                ));
            }
        }
    }
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

/// Trial sets keyed by `(algorithm, problem, dimension)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResultsData {
    sets: BTreeMap<(String, String, usize), TrialSet>,
}

impl ResultsData {
    pub fn from_rows(rows: &[ResultRow]) -> Result<Self> {
        let mut grouped: BTreeMap<(String, String, usize), Vec<f64>> = BTreeMap::new();
        for r in rows {
            grouped
                .entry((r.algorithm.clone(), r.problem.clone(), r.dimension))
                .or_default()
                .push(r.best_value);
        }
        let mut sets = BTreeMap::new();
        for ((a, p, d), values) in grouped {
            let ts = TrialSet::new(a.clone(), p.clone(), d, values)?;
            sets.insert((a, p, d), ts);
        }
        Ok(ResultsData { sets })
    }

    pub fn from_sets(sets: impl IntoIterator<Item = TrialSet>) -> Self {
        ResultsData {
            sets: sets
                .into_iter()
                .map(|t| {
                    (
                        (t.algorithm_id().to_string(), t.problem_id().to_string(), t.dimension()),
                        t,
                    )
                })
                .collect(),
        }
    }

    pub fn get(&self, algorithm: &str, problem: &str, dimension: usize) -> Option<&TrialSet> {
        self.sets.get(&(algorithm.to_string(), problem.to_string(), dimension))
    }

    pub fn sets(&self) -> impl Iterator<Item = &TrialSet> {
        self.sets.values()
    }

    pub fn algorithms(&self) -> Vec<String> {
        let mut v: Vec<String> = self.sets.keys().map(|k| k.0.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Every `(problem, dimension)` any algorithm has results for, sorted.
    pub fn contexts(&self) -> Vec<Context> {
        let mut v: Vec<Context> = self.sets.keys().map(|k| (k.1.clone(), k.2)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn contains_algorithm(&self, algorithm: &str) -> bool {
        self.sets.keys().any(|k| k.0 == algorithm)
    }
}

/// Convergence traces keyed by `(algorithm, problem, dimension)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TracesData {
    traces: BTreeMap<(String, String, usize), ConvergenceTrace>,
}

impl TracesData {
    pub fn from_rows(rows: &[TraceRow]) -> Result<Self> {
        type ByTrial = BTreeMap<usize, Vec<(usize, f64)>>;
        let mut grouped: BTreeMap<(String, String, usize), ByTrial> = BTreeMap::new();
        for r in rows {
            grouped
                .entry((r.algorithm.clone(), r.problem.clone(), r.dimension))
                .or_default()
                .entry(r.trial)
                .or_default()
                .push((r.generation, r.best_value));
        }
        let mut traces = BTreeMap::new();
        for ((a, p, d), trials) in grouped {
            let series: Vec<Vec<f64>> = trials
                .into_values()
                .map(|mut gens| {
                    gens.sort_by_key(|g| g.0);
                    gens.into_iter().map(|g| g.1).collect()
                })
                .collect();
            let trace = ConvergenceTrace::new(a.clone(), p.clone(), d, series)?;
            traces.insert((a, p, d), trace);
        }
        Ok(TracesData { traces })
    }

    pub fn from_traces(traces: impl IntoIterator<Item = ConvergenceTrace>) -> Self {
        TracesData {
            traces: traces
                .into_iter()
                .map(|t| ((t.algorithm_id.clone(), t.problem_id.clone(), t.dimension), t))
                .collect(),
        }
    }

    pub fn get(&self, algorithm: &str, problem: &str, dimension: usize) -> Option<&ConvergenceTrace> {
        self.traces
            .get(&(algorithm.to_string(), problem.to_string(), dimension))
    }

    pub fn traces(&self) -> impl Iterator<Item = &ConvergenceTrace> {
        self.traces.values()
    }

    pub fn algorithms(&self) -> Vec<String> {
        let mut v: Vec<String> = self.traces.keys().map(|k| k.0.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn contexts(&self) -> Vec<Context> {
        let mut v: Vec<Context> = self.traces.keys().map(|k| (k.1.clone(), k.2)).collect();
        v.sort();
        v.dedup();
        v
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(File::open(path)?))
}

pub fn load_results(path: impl AsRef<Path>) -> Result<ResultsData> {
    ResultsData::from_rows(&read_results(open(path.as_ref())?)?)
}

pub fn load_traces(path: impl AsRef<Path>) -> Result<TracesData> {
    TracesData::from_rows(&read_traces(open(path.as_ref())?)?)
}

fn write_csv<W: Write, I, const N: usize>(writer: W, header: &[&str; N], rows: I) -> Result<()>
where
    I: IntoIterator<Item = [String; N]>,
{
    let mut w = WriterBuilder::new().from_writer(writer);
    w.write_record(header).map_err(csv_error)?;
    for r in rows {
        w.write_record(&r).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_results<W: Write>(writer: W, rows: &[ResultRow]) -> Result<()> {
    write_csv(
        writer,
        &RESULTS_HEADER,
        rows.iter().map(|r| {
            [
                r.algorithm.clone(),
                r.problem.clone(),
                r.dimension.to_string(),
                r.trial.to_string(),
                r.best_value.to_string(),
            ]
        }),
    )
}

pub fn write_traces<W: Write>(writer: W, rows: &[TraceRow]) -> Result<()> {
    write_csv(
        writer,
        &TRACE_HEADER,
        rows.iter().map(|r| {
            [
                r.algorithm.clone(),
                r.problem.clone(),
                r.dimension.to_string(),
                r.trial.to_string(),
                r.generation.to_string(),
                r.best_value.to_string(),
            ]
        }),
    )
}

pub fn save_results(path: impl AsRef<Path>, rows: &[ResultRow]) -> Result<()> {
    write_results(BufWriter::new(File::create(path)?), rows)
}

pub fn save_traces(path: impl AsRef<Path>, rows: &[TraceRow]) -> Result<()> {
    write_traces(BufWriter::new(File::create(path)?), rows)
}

/// A trial set's rows, numbering trials from 1 in value order.
pub fn rows_from_trial_set(set: &TrialSet) -> Vec<ResultRow> {
    set.values()
        .iter()
        .enumerate()
        .map(|(i, &v)| ResultRow {
            algorithm: set.algorithm_id().to_string(),
            problem: set.problem_id().to_string(),
            dimension: set.dimension(),
            trial: i + 1,
            best_value: v,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "algorithm,problem,dimension,trial,best_value
a,sphere,10,1,0.5
a,sphere,10,2,0.25
a,sphere,10,3,1e-3
b,sphere,10,1,3
b,sphere,10,2,2
b,sphere,10,3,1
";

    #[test]
    fn loads_two_trial_sets() {
        let data = ResultsData::from_rows(&read_results(SAMPLE.as_bytes()).unwrap()).unwrap();
        assert_eq!(data.algorithms(), vec!["a", "b"]);
        let a = data.get("a", "sphere", 10).unwrap();
        assert_eq!(a.values(), &[1e-3, 0.25, 0.5]);
        assert_eq!(data.get("b", "sphere", 10).unwrap().len(), 3);
        assert_eq!(data.contexts(), vec![("sphere".to_string(), 10)]);
    }

    #[test]
    fn nan_is_a_parse_error_naming_the_row() {
        let text = "algorithm,problem,dimension,trial,best_value\na,f,2,1,1.0\na,f,2,2,NaN\n";
        match read_results(text.as_bytes()) {
            Err(Error::Parse { line: 3, message }) => assert!(message.contains("NaN")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_rows_rejected() {
        let text = "algorithm,problem,dimension,trial,best_value\na,f,2,1,1.0\na,f,2,1,2.0\n";
        assert!(matches!(
            read_results(text.as_bytes()),
            Err(Error::DuplicateRow { line: 3, .. })
        ));
    }

    #[test]
    fn header_is_mandatory() {
        assert!(matches!(
            read_results("a,f,2,1,1.0\n".as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(read_results("".as_bytes()), Err(Error::Parse { .. })));
    }

    #[test]
    fn malformed_fields() {
        let h = "algorithm,problem,dimension,trial,best_value\n";
        for body in [
            "a,f,x,1,1.0\n",
            "a,f,2,-1,1.0\n",
            "a,f,2,1\n",
            ",f,2,1,1.0\n",
            "a,f,0,1,1.0\n",
        ] {
            let text = format!("{h}{body}");
            assert!(
                matches!(read_results(text.as_bytes()), Err(Error::Parse { line: 2, .. })),
                "{body}"
            );
        }
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let rows: Vec<ResultRow> = [
            0.1 + 0.2,
            -450.0000000000001,
            1e-300,
            123456789.12345679,
            f64::MIN_POSITIVE,
        ]
        .iter()
        .enumerate()
        .map(|(i, &v)| ResultRow {
            algorithm: "alg, with comma".into(),
            problem: "f\"1".into(),
            dimension: 30,
            trial: i + 1,
            best_value: v,
        })
        .collect();
        let mut buf = Vec::new();
        write_results(&mut buf, &rows).unwrap();
        let back = read_results(buf.as_slice()).unwrap();
        assert_eq!(back.len(), rows.len());
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(a.best_value.to_bits(), b.best_value.to_bits());
            assert_eq!(a, b);
        }
    }

    const TRACES: &str = "algorithm,problem,dimension,trial,generation,best_value
a,f,2,1,1,5
a,f,2,1,2,4
a,f,2,2,2,1
a,f,2,2,1,3
";

    #[test]
    fn traces_group_by_trial_and_generation() {
        let data = TracesData::from_rows(&read_traces(TRACES.as_bytes()).unwrap()).unwrap();
        let t = data.get("a", "f", 2).unwrap();
        assert_eq!(t.trials(), &[vec![5.0, 4.0], vec![3.0, 1.0]]);
    }

    #[test]
    fn trace_gaps_rejected() {
        let text = "algorithm,problem,dimension,trial,generation,best_value\na,f,2,1,1,5\na,f,2,1,3,4\n";
        assert!(matches!(
            read_traces(text.as_bytes()),
            Err(Error::Parse { line: 3, .. })
        ));
        let dup = "algorithm,problem,dimension,trial,generation,best_value\na,f,2,1,1,5\na,f,2,1,1,4\n";
        assert!(matches!(read_traces(dup.as_bytes()), Err(Error::DuplicateRow { .. })));
    }

    #[test]
    fn ragged_traces_rejected() {
        let text = "algorithm,problem,dimension,trial,generation,best_value\na,f,2,1,1,5\na,f,2,1,2,4\na,f,2,2,1,3\n";
        let rows = read_traces(text.as_bytes()).unwrap();
        assert!(matches!(TracesData::from_rows(&rows), Err(Error::RaggedTrace { .. })));
    }
}
