#![no_main]

use libfuzzer_sys::fuzz_target;
use prasatul::io::{read_results, write_results, ResultsData};

fuzz_target!(|data: &[u8]| {
    let Ok(rows) = read_results(data) else { return };
    assert!(rows.iter().all(|r| r.best_value.is_finite() && r.dimension > 0));
    let mut buf = Vec::new();
    write_results(&mut buf, &rows).unwrap();
    assert_eq!(read_results(buf.as_slice()).unwrap(), rows);
    let _ = ResultsData::from_rows(&rows);
});
