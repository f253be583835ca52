use prasatul::bench::{BenchFunction, OptimizerKind, ShiftTable};
use prasatul::commands::{generate, RunSelection};
use prasatul::io::{read_results, read_traces, write_results, write_traces, ResultRow, TraceRow, TracesData};
use prasatul::Error;
use proptest::prelude::*;

fn result_rows() -> impl Strategy<Value = Vec<ResultRow>> {
    prop::collection::btree_map(
        ("[a-z]{1,4}", "[a-z][a-z0-9_]{0,5}", 1usize..60, 1usize..60),
        prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO,
        1..40,
    )
    .prop_map(|m| {
        m.into_iter()
            .map(|((algorithm, problem, dimension, trial), best_value)| ResultRow {
                algorithm,
                problem,
                dimension,
                trial,
                best_value,
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn results_survive_write_then_read(rows in result_rows()) {
        let mut buf = Vec::new();
        write_results(&mut buf, &rows).unwrap();
        let back = read_results(buf.as_slice()).unwrap();
        prop_assert_eq!(back.len(), rows.len());
        for (a, b) in rows.iter().zip(&back) {
            prop_assert_eq!(&a.algorithm, &b.algorithm);
            prop_assert_eq!(a.best_value.to_bits(), b.best_value.to_bits());
            prop_assert_eq!((a.dimension, a.trial), (b.dimension, b.trial));
        }
        let mut again = Vec::new();
        write_results(&mut again, &back).unwrap();
        prop_assert_eq!(buf, again);
    }

    #[test]
    fn traces_survive_write_then_read(
        series in prop::collection::vec(prop::collection::vec(-1e300f64..1e300, 5), 1..4)
    ) {
        let rows: Vec<TraceRow> = series
            .iter()
            .enumerate()
            .flat_map(|(t, s)| {
                s.iter().enumerate().map(move |(g, &v)| TraceRow {
                    algorithm: "de".into(),
                    problem: "sphere".into(),
                    dimension: 3,
                    trial: t + 1,
                    generation: g + 1,
                    best_value: v,
                })
            })
            .collect();
        let mut buf = Vec::new();
        write_traces(&mut buf, &rows).unwrap();
        prop_assert_eq!(read_traces(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn arbitrary_bytes_never_panic_the_readers(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let _ = read_results(bytes.as_slice());
        let _ = read_traces(bytes.as_slice());
        let _ = ShiftTable::parse(&String::from_utf8_lossy(&bytes));
    }
}

#[test]
fn generated_traces_satisfy_file_invariants() {
    let sel = RunSelection {
        functions: vec![BenchFunction::ShiftedAckley],
        dimensions: vec![3],
        optimizers: vec![OptimizerKind::ParticleSwarm, OptimizerKind::RandomSearch],
        population: 8,
        generations: 15,
        trials: 2,
        seed: 3,
    };
    let (_, traces) = generate(&sel, &ShiftTable::builtin()).unwrap();
    let mut buf = Vec::new();
    write_traces(&mut buf, &traces).unwrap();
    let loaded = read_traces(buf.as_slice()).unwrap();
    let data = TracesData::from_rows(&loaded).unwrap();
    assert_eq!(data.algorithms(), vec!["pso".to_string(), "rs".to_string()]);
    for t in data.traces() {
        assert_eq!(t.generations(), 15);
        assert_eq!(t.trials().len(), 2);
    }
}

#[test]
fn malformed_rows_report_their_line() {
    let text = "algorithm,problem,dimension,trial,best_value\nde,sphere,10,1,1.5\nde,sphere,10,2,abc\n";
    match read_results(text.as_bytes()) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("unexpected {other:?}"),
    }
    let dup = "algorithm,problem,dimension,trial,best_value\nde,sphere,10,1,1.5\nde,sphere,10,1,2.5\n";
    assert!(matches!(
        read_results(dup.as_bytes()),
        Err(Error::DuplicateRow { line: 3, .. })
    ));
    let nan = "algorithm,problem,dimension,trial,best_value\nde,sphere,10,1,NaN\n";
    assert!(matches!(
        read_results(nan.as_bytes()),
        Err(Error::Parse { line: 2, .. })
    ));
}
