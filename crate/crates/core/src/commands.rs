//! The workflows behind the command-line verbs. Each returns a typed result
//! that can be rendered into a [`Report`].

use std::path::Path;

use crate::aggregation::{
    one_to_many, overall_rank, problem_wise_rank, AveragedScores, PairScore, RankTable, ScoreKey,
};
use crate::bench::{run_optimizer, BenchFunction, OptimizerKind, RunConfig, ShiftTable};
use crate::convergence::{convergence_scores, mean_trace, MeanSeries};
use crate::error::{Error, Result};
use crate::io::{save_results, save_traces, Context, ResultRow, ResultsData, TraceRow, TracesData};
use crate::matrix::{build_matrix, ComparabilityLevel, ComparisonConfig, PrasatulMatrix};
use crate::report::{Cell, Report, Table};
use crate::scores::ScoreSet;
use crate::stats::{rank_sum_test, Method, RankSumResult};

#[derive(Debug, Clone, PartialEq)]
pub struct PairResult {
    pub pair: PairScore,
    pub matrix: PrasatulMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareOutput {
    pub primary: String,
    pub pairs: Vec<PairResult>,
    /// Per `(problem, dimension)`: the averages over the alternatives that
    /// were present, and the number of alternatives requested.
    pub averages: Vec<(Context, AveragedScores, usize)>,
    pub notes: Vec<String>,
}

fn resolve_alternatives(all: &[String], primary: &str, requested: &[String]) -> Result<Vec<String>> {
    if !all.iter().any(|a| a == primary) {
        return Err(Error::UnknownAlgorithm(primary.to_string()));
    }
    if requested.is_empty() {
        return Ok(all.iter().filter(|a| *a != primary).cloned().collect());
    }
    let mut out = Vec::new();
    for r in requested {
        if !all.contains(r) {
            return Err(Error::UnknownAlgorithm(r.clone()));
        }
        if r != primary && !out.contains(r) {
            out.push(r.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// Pairs `primary` with each alternative on every shared problem and
/// dimension. Absent pairs are skipped and noted.
pub fn compare_command(
    data: &ResultsData,
    primary: &str,
    alternatives: &[String],
    cfg: &ComparisonConfig,
) -> Result<CompareOutput> {
    let alts = resolve_alternatives(&data.algorithms(), primary, alternatives)?;
    if alts.is_empty() {
        return Err(Error::InvalidConfig(
            "no alternative algorithms to compare against".into(),
        ));
    }
    let mut pairs = Vec::new();
    let mut averages = Vec::new();
    let mut notes = Vec::new();
    for (problem, dim) in data.contexts() {
        let Some(p) = data.get(primary, &problem, dim) else {
            if alts.iter().any(|a| data.get(a, &problem, dim).is_some()) {
                notes.push(format!("{primary} has no results on {problem}/{dim}; skipped"));
            }
            continue;
        };
        let mut here = Vec::new();
        for alt in &alts {
            let Some(q) = data.get(alt, &problem, dim) else {
                notes.push(format!(
                    "{primary} vs {alt} on {problem}/{dim}: {alt} has no results; skipped"
                ));
                continue;
            };
            let matrix = build_matrix(p, q, cfg)?;
            let pair = PairScore {
                primary: primary.to_string(),
                alternative: alt.clone(),
                problem: problem.clone(),
                dimension: dim,
                scores: ScoreSet::with_orientation(&matrix, cfg.orientation),
            };
            here.push(PairResult { pair, matrix });
        }
        if here.is_empty() {
            continue;
        }
        let scores: Vec<PairScore> = here.iter().map(|r| r.pair.clone()).collect();
        let avg = one_to_many(&scores)?;
        if avg.k < alts.len() {
            notes.push(format!(
                "{problem}/{dim}: averages over k={} of {} alternatives",
                avg.k,
                alts.len()
            ));
        }
        averages.push(((problem.clone(), dim), avg, alts.len()));
        pairs.extend(here);
    }
    if pairs.is_empty() {
        return Err(Error::EmptyInput(format!("no comparable pairs for `{primary}`")));
    }
    Ok(CompareOutput {
        primary: primary.to_string(),
        pairs,
        averages,
        notes,
    })
}

fn score_cells(v: [f64; 5]) -> impl Iterator<Item = Cell> {
    v.into_iter().map(Cell::Score)
}

impl CompareOutput {
    pub fn report(&self) -> Report {
        let mut pairwise = Table::new(
            format!("pairwise scores: {} as primary", self.primary),
            &["problem", "dimension", "alternative", "n", "DO", "DC", "KO", "KC", "KT"],
        );
        for r in &self.pairs {
            let p = &r.pair;
            let mut row = vec![
                Cell::from(p.problem.as_str()),
                Cell::Int(p.dimension as u64),
                Cell::from(p.alternative.as_str()),
                Cell::Int(p.scores.n),
            ];
            row.extend(score_cells(p.scores.as_array()));
            pairwise.push(row);
        }
        let mut averaged = Table::new(
            format!("averaged scores: {} as primary", self.primary),
            &["problem", "dimension", "k", "ADO", "ADC", "AKO", "AKC", "AKT"],
        );
        for ((problem, dim), avg, _) in &self.averages {
            let mut row = vec![
                Cell::from(problem.as_str()),
                Cell::Int(*dim as u64),
                Cell::Int(avg.k as u64),
            ];
            row.extend(score_cells(avg.as_array()));
            averaged.push(row);
        }
        Report {
            tables: vec![pairwise, averaged],
            notes: self.notes.clone(),
        }
    }

    /// The raw matrices with their row and column totals.
    pub fn matrix_report(&self) -> Report {
        let mut t = Table::new(
            format!("matrices: {} as primary", self.primary),
            &[
                "problem",
                "dimension",
                "alternative",
                "level",
                "Best",
                "Average",
                "Worst",
                "Total",
            ],
        );
        for r in &self.pairs {
            let m = &r.matrix;
            let lead = |level: &str| {
                vec![
                    Cell::from(r.pair.problem.as_str()),
                    Cell::Int(r.pair.dimension as u64),
                    Cell::from(r.pair.alternative.as_str()),
                    Cell::from(level),
                ]
            };
            for c in ComparabilityLevel::ALL {
                let i = c.index();
                let mut row = lead(&format!("{c:?}"));
                row.extend((0..3).map(|j| Cell::Int(m.cell(i, j))));
                row.push(Cell::Int(m.row_total(i)));
                t.push(row);
            }
            let mut total = lead("Total");
            total.extend((0..3).map(|j| Cell::Int(m.col_total(j))));
            total.push(Cell::Int(m.n()));
            t.push(total);
        }
        Report {
            tables: vec![t],
            notes: self.notes.clone(),
        }
    }
}

/// Which data the pairwise scores come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreSource {
    /// Final best-of-trial values.
    Quality,
    /// Iteration-wise mean convergence series.
    Convergence,
}

#[derive(Debug, Clone, Copy)]
pub enum RankInput<'a> {
    Results(&'a ResultsData),
    Traces(&'a TracesData),
}

impl RankInput<'_> {
    pub fn source(&self) -> ScoreSource {
        match self {
            RankInput::Results(_) => ScoreSource::Quality,
            RankInput::Traces(_) => ScoreSource::Convergence,
        }
    }
}

/// Every ordered pair of distinct algorithms on every shared problem and
/// dimension, scored from final results.
pub fn quality_pair_scores(data: &ResultsData, cfg: &ComparisonConfig) -> Result<Vec<PairScore>> {
    let algs = data.algorithms();
    let mut out = Vec::new();
    for (problem, dim) in data.contexts() {
        for a in &algs {
            let Some(p) = data.get(a, &problem, dim) else { continue };
            for b in algs.iter().filter(|b| *b != a) {
                let Some(q) = data.get(b, &problem, dim) else { continue };
                let m = build_matrix(p, q, cfg)?;
                out.push(PairScore {
                    primary: a.clone(),
                    alternative: b.clone(),
                    problem: problem.clone(),
                    dimension: dim,
                    scores: ScoreSet::with_orientation(&m, cfg.orientation),
                });
            }
        }
    }
    Ok(out)
}

/// As [`quality_pair_scores`], but over mean convergence series.
pub fn convergence_pair_scores(traces: &TracesData, cfg: &ComparisonConfig) -> Result<Vec<PairScore>> {
    let algs = traces.algorithms();
    let mut out = Vec::new();
    for (problem, dim) in traces.contexts() {
        let means: Vec<(&String, MeanSeries)> = algs
            .iter()
            .filter_map(|a| traces.get(a, &problem, dim).map(|t| (a, mean_trace(t))))
            .collect();
        for (a, pm) in &means {
            for (b, qm) in means.iter().filter(|(b, _)| b != a) {
                out.push(PairScore {
                    primary: (*a).clone(),
                    alternative: (*b).clone(),
                    problem: problem.clone(),
                    dimension: dim,
                    scores: convergence_scores(pm, qm, cfg)?,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankOutput {
    pub source: ScoreSource,
    pub tables: Vec<RankTable>,
}

/// Each algorithm takes the primary role against all others. With
/// `per_problem`, one problem-wise table per problem; otherwise a single
/// overall table.
pub fn rank_command(
    input: RankInput<'_>,
    per_problem: bool,
    key: ScoreKey,
    cfg: &ComparisonConfig,
) -> Result<RankOutput> {
    let (algorithms, pairs) = match input {
        RankInput::Results(d) => (d.algorithms(), quality_pair_scores(d, cfg)?),
        RankInput::Traces(t) => (t.algorithms(), convergence_pair_scores(t, cfg)?),
    };
    if algorithms.len() < 2 {
        return Err(Error::InvalidConfig("ranking needs at least two algorithms".into()));
    }
    let tables = if per_problem {
        let mut problems: Vec<&str> = pairs.iter().map(|p| p.problem.as_str()).collect();
        problems.sort_unstable();
        problems.dedup();
        problems
            .into_iter()
            .map(|p| problem_wise_rank(&pairs, p, key))
            .collect::<Result<Vec<_>>>()?
    } else {
        vec![overall_rank(&pairs, key)?]
    };
    Ok(RankOutput {
        source: input.source(),
        tables,
    })
}

impl RankOutput {
    pub fn report(&self) -> Report {
        let source = match self.source {
            ScoreSource::Quality => "quality",
            ScoreSource::Convergence => "convergence",
        };
        let mut report = Report::default();
        for table in &self.tables {
            let title = match &table.problem {
                Some(p) => format!("problem-wise ranking ({source}): {p}"),
                None => format!("overall ranking ({source})"),
            };
            let names: Vec<String> = ScoreKey::ALL.iter().map(|&k| table.column_name(k)).collect();
            let mut headers = vec!["rank", "algorithm"];
            headers.extend(names.iter().map(String::as_str));
            headers.extend(["cells", "expected"]);
            let mut t = Table::new(title, &headers);
            for (i, alg) in table.rank_order.iter().enumerate() {
                let Some(row) = table.row(alg) else { continue };
                let mut cells = vec![Cell::Int(i as u64 + 1), Cell::from(alg.as_str())];
                cells.extend(score_cells(row.means));
                cells.push(Cell::Int(row.cells_used as u64));
                cells.push(Cell::Int(row.cells_expected as u64));
                t.push(cells);
            }
            report.tables.push(t);
            report.notes.push(format!(
                "{}: ranked by {} descending; ties by KT, then DO, then id",
                table.problem.as_deref().unwrap_or("overall"),
                table.column_name(table.key)
            ));
            for s in &table.skipped {
                report
                    .notes
                    .push(format!("missing pair skipped, denominator reduced: {s}"));
            }
        }
        report
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WilcoxonRow {
    pub problem: String,
    pub dimension: usize,
    pub alternative: String,
    pub result: RankSumResult,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WilcoxonOutput {
    pub primary: String,
    pub alpha: f64,
    pub rows: Vec<WilcoxonRow>,
    pub notes: Vec<String>,
}

/// Rank-sum test of `primary` against every other algorithm on every
/// shared problem and dimension.
pub fn wilcoxon_command(data: &ResultsData, primary: &str, alpha: f64) -> Result<WilcoxonOutput> {
    let alts = resolve_alternatives(&data.algorithms(), primary, &[])?;
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for (problem, dim) in data.contexts() {
        let Some(p) = data.get(primary, &problem, dim) else {
            continue;
        };
        for alt in &alts {
            let Some(q) = data.get(alt, &problem, dim) else {
                notes.push(format!(
                    "{primary} vs {alt} on {problem}/{dim}: {alt} has no results; skipped"
                ));
                continue;
            };
            let result = rank_sum_test(p, q, alpha)?;
            if result.degenerate {
                notes.push(format!("{primary} vs {alt} on {problem}/{dim}: all values identical"));
            }
            rows.push(WilcoxonRow {
                problem: problem.clone(),
                dimension: dim,
                alternative: alt.clone(),
                result,
            });
        }
    }
    Ok(WilcoxonOutput {
        primary: primary.to_string(),
        alpha,
        rows,
        notes,
    })
}

impl WilcoxonOutput {
    pub fn report(&self) -> Report {
        let mut t = Table::new(
            format!("rank-sum tests: {} as primary, alpha = {}", self.primary, self.alpha),
            &["problem", "dimension", "alternative", "p_value", "T", "U", "method"],
        );
        for r in &self.rows {
            t.push(vec![
                Cell::from(r.problem.as_str()),
                Cell::Int(r.dimension as u64),
                Cell::from(r.alternative.as_str()),
                Cell::PValue(r.result.p_value),
                Cell::Text(r.result.direction.mark().to_string()),
                Cell::Score(r.result.statistic),
                Cell::from(match r.result.method {
                    Method::Exact => "exact",
                    Method::NormalApprox => "normal",
                }),
            ]);
        }
        let mut notes = self.notes.clone();
        notes.push("'+' = significant and favoring the primary; '-' = otherwise".into());
        Report { tables: vec![t], notes }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSelection {
    pub functions: Vec<BenchFunction>,
    pub dimensions: Vec<usize>,
    pub optimizers: Vec<OptimizerKind>,
    pub population: usize,
    pub generations: usize,
    pub trials: usize,
    pub seed: u64,
}

/// Runs every (function, dimension, optimizer) combination. Rows come out
/// ordered by function, dimension, optimizer, trial and generation.
pub fn generate(sel: &RunSelection, shifts: &ShiftTable) -> Result<(Vec<ResultRow>, Vec<TraceRow>)> {
    let mut functions = sel.functions.clone();
    functions.sort();
    functions.dedup();
    let mut dims = sel.dimensions.clone();
    dims.sort();
    dims.dedup();
    let mut optimizers = sel.optimizers.clone();
    optimizers.sort();
    optimizers.dedup();
    if functions.is_empty() || dims.is_empty() || optimizers.is_empty() {
        return Err(Error::InvalidConfig(
            "run needs at least one function, dimension and optimizer".into(),
        ));
    }

    let mut results = Vec::new();
    let mut traces = Vec::new();
    for &f in &functions {
        for &d in &dims {
            let spec = shifts.spec(f, d)?;
            for &o in &optimizers {
                let cfg = RunConfig {
                    optimizer: o,
                    population: sel.population,
                    generations: sel.generations,
                    trials: sel.trials,
                    seed: sel.seed,
                };
                let out = run_optimizer(&spec, &cfg)?;
                for (t, &best) in out.final_bests.iter().enumerate() {
                    results.push(ResultRow {
                        algorithm: o.id().to_string(),
                        problem: f.id().to_string(),
                        dimension: d,
                        trial: t + 1,
                        best_value: best,
                    });
                }
                for (t, series) in out.trace.trials().iter().enumerate() {
                    for (g, &v) in series.iter().enumerate() {
                        traces.push(TraceRow {
                            algorithm: o.id().to_string(),
                            problem: f.id().to_string(),
                            dimension: d,
                            trial: t + 1,
                            generation: g + 1,
                            best_value: v,
                        });
                    }
                }
            }
        }
    }
    Ok((results, traces))
}

pub fn run_command(sel: &RunSelection, results_path: &Path, traces_path: Option<&Path>) -> Result<(usize, usize)> {
    let (results, traces) = generate(sel, &ShiftTable::builtin())?;
    save_results(results_path, &results)?;
    if let Some(p) = traces_path {
        save_traces(p, &traces)?;
    }
    Ok((results.len(), traces.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::TrialSet;

    fn set(alg: &str, problem: &str, dim: usize, v: &[f64]) -> TrialSet {
        TrialSet::new(alg, problem, dim, v.to_vec()).unwrap()
    }

    #[test]
    fn one_alternative_gives_one_pair() {
        let data = ResultsData::from_sets([set("a", "f", 2, &[1.0, 2.0]), set("b", "f", 2, &[3.0, 4.0])]);
        let out = compare_command(&data, "a", &[], &ComparisonConfig::default()).unwrap();
        assert_eq!(out.pairs.len(), 1);
        let avg = out.averages[0].1;
        assert_eq!(avg.as_array(), out.pairs[0].pair.scores.as_array());
    }

    #[test]
    fn five_alternatives_average() {
        let mut sets = vec![set("p", "f", 2, &[1.0, 2.0, 3.0])];
        let alts = ["a", "b", "c", "d", "e"];
        for (i, a) in alts.iter().enumerate() {
            let off = i as f64 - 1.5;
            sets.push(set(a, "f", 2, &[1.0 + off, 2.5 + off, 2.0 * off]));
        }
        let data = ResultsData::from_sets(sets);
        let out = compare_command(&data, "p", &[], &ComparisonConfig::default()).unwrap();
        assert_eq!(out.pairs.len(), 5);
        let mean: f64 = out.pairs.iter().map(|r| r.pair.scores.do_score).sum::<f64>() / 5.0;
        assert!((out.averages[0].1.ado - mean).abs() < 1e-12);
    }

    #[test]
    fn missing_alternative_cell_is_noted() {
        let data = ResultsData::from_sets([
            set("a", "f", 2, &[1.0]),
            set("a", "g", 2, &[1.0]),
            set("b", "f", 2, &[2.0]),
            set("c", "f", 2, &[2.0]),
            set("c", "g", 2, &[2.0]),
        ]);
        let out = compare_command(&data, "a", &[], &ComparisonConfig::default()).unwrap();
        assert_eq!(out.pairs.len(), 3);
        let g = out.averages.iter().find(|a| a.0 .0 == "g").unwrap();
        assert_eq!(g.1.k, 1);
        assert!(out.notes.iter().any(|n| n.contains("b has no results")));
        assert!(out.notes.iter().any(|n| n.contains("k=1 of 2")));
    }

    #[test]
    fn unknown_algorithm() {
        let data = ResultsData::from_sets([set("a", "f", 2, &[1.0]), set("b", "f", 2, &[2.0])]);
        assert!(matches!(
            compare_command(&data, "zz", &[], &ComparisonConfig::default()),
            Err(Error::UnknownAlgorithm(_))
        ));
        assert!(matches!(
            compare_command(&data, "a", &["zz".into()], &ComparisonConfig::default()),
            Err(Error::UnknownAlgorithm(_))
        ));
        assert!(matches!(
            wilcoxon_command(&data, "zz", 0.05),
            Err(Error::UnknownAlgorithm(_))
        ));
    }

    #[test]
    fn two_algorithm_rank_equals_pair_scores() {
        let data = ResultsData::from_sets([set("a", "f", 2, &[1.0, 4.0]), set("b", "f", 2, &[2.0, 3.0])]);
        let cfg = ComparisonConfig::default();
        let out = rank_command(RankInput::Results(&data), false, ScoreKey::Kt, &cfg).unwrap();
        let t = &out.tables[0];
        let ab =
            crate::scores::score_pair(data.get("a", "f", 2).unwrap(), data.get("b", "f", 2).unwrap(), &cfg).unwrap();
        assert_eq!(t.row("a").unwrap().means, ab.as_array());
    }

    #[test]
    fn transitive_domination_ranks_in_order() {
        let data = ResultsData::from_sets([
            set("c", "f", 3, &[20.0, 21.0, 22.0, 23.0]),
            set("a", "f", 3, &[0.0, 1.0, 2.0, 3.0]),
            set("b", "f", 3, &[10.0, 11.0, 12.0, 13.0]),
            set("a", "g", 3, &[0.0, 0.5, 0.7, 0.9]),
            set("b", "g", 3, &[1.0, 1.5, 1.7, 1.9]),
            set("c", "g", 3, &[2.0, 2.5, 2.7, 2.9]),
        ]);
        let out = rank_command(
            RankInput::Results(&data),
            false,
            ScoreKey::Kt,
            &ComparisonConfig::default(),
        )
        .unwrap();
        assert_eq!(out.tables[0].rank_order, ["a", "b", "c"]);
        let per = rank_command(
            RankInput::Results(&data),
            true,
            ScoreKey::Kt,
            &ComparisonConfig::default(),
        )
        .unwrap();
        assert_eq!(per.tables.len(), 2);
        for t in &per.tables {
            assert_eq!(t.rank_order, ["a", "b", "c"]);
        }
    }

    #[test]
    fn rank_needs_two_algorithms() {
        let data = ResultsData::from_sets([set("a", "f", 2, &[1.0])]);
        assert!(rank_command(
            RankInput::Results(&data),
            false,
            ScoreKey::Kt,
            &ComparisonConfig::default()
        )
        .is_err());
    }

    #[test]
    fn convergence_scope_has_same_structure() {
        use crate::convergence::ConvergenceTrace;
        let traces = TracesData::from_traces([
            ConvergenceTrace::new("a", "f", 2, vec![vec![5.0, 2.0, 1.0], vec![4.0, 2.0, 0.5]]).unwrap(),
            ConvergenceTrace::new("b", "f", 2, vec![vec![6.0, 5.0, 4.0], vec![6.0, 4.0, 3.0]]).unwrap(),
        ]);
        let out = rank_command(
            RankInput::Traces(&traces),
            false,
            ScoreKey::Kt,
            &ComparisonConfig::default(),
        )
        .unwrap();
        assert_eq!(out.source, ScoreSource::Convergence);
        assert_eq!(out.tables[0].rank_order, ["a", "b"]);
        let rep = out.report();
        assert_eq!(
            rep.tables[0].headers,
            [
                "rank",
                "algorithm",
                "ODO",
                "ODC",
                "OKO",
                "OKC",
                "OKT",
                "cells",
                "expected"
            ]
        );
    }

    #[test]
    fn wilcoxon_identical_and_alpha() {
        let v: Vec<f64> = (0..10).map(f64::from).collect();
        let w: Vec<f64> = (0..10).map(|i| f64::from(i) + 4.5).collect();
        let data = ResultsData::from_sets([set("a", "f", 2, &v), set("b", "f", 2, &v), set("c", "f", 2, &w)]);
        let out = wilcoxon_command(&data, "a", 0.05).unwrap();
        let ab = &out.rows[0].result;
        assert_eq!((ab.p_value, ab.direction.mark()), (1.0, '-'));
        let ac = out.rows[1].result;
        let strict = wilcoxon_command(&data, "a", 0.01).unwrap().rows[1].result;
        assert_eq!(ac.p_value, strict.p_value);
        assert_eq!(ac.significant, ac.p_value < 0.05);
        assert_eq!(strict.significant, strict.p_value < 0.01);
    }

    #[test]
    fn matrix_report_has_margins() {
        let data = ResultsData::from_sets([set("a", "f", 2, &[1.0, 4.0]), set("b", "f", 2, &[2.0, 3.0])]);
        let out = compare_command(&data, "a", &[], &ComparisonConfig::default()).unwrap();
        let rep = out.matrix_report();
        let rows = &rep.tables[0].rows;
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[3][7], Cell::Int(2));
        assert_eq!(rows[0][4], Cell::Int(1));
        assert_eq!(rows[2][6], Cell::Int(1));
    }

    #[test]
    fn single_trial_run_has_one_row_per_combination() {
        let sel = RunSelection {
            functions: vec![BenchFunction::ShiftedSphere, BenchFunction::ShiftedAckley],
            dimensions: vec![2, 3],
            optimizers: OptimizerKind::ALL.to_vec(),
            population: 4,
            generations: 5,
            trials: 1,
            seed: 9,
        };
        let (results, traces) = generate(&sel, &ShiftTable::builtin()).unwrap();
        assert_eq!(results.len(), 2 * 2 * 3);
        assert_eq!(traces.len(), 2 * 2 * 3 * 5);
    }
}
