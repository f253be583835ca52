#![no_main]

use libfuzzer_sys::fuzz_target;
use prasatul::io::{read_traces, write_traces, TracesData};

fuzz_target!(|data: &[u8]| {
    let Ok(rows) = read_traces(data) else { return };
    let mut buf = Vec::new();
    write_traces(&mut buf, &rows).unwrap();
    assert_eq!(read_traces(buf.as_slice()).unwrap(), rows);
    if let Ok(traces) = TracesData::from_rows(&rows) {
        for t in traces.traces() {
            let _ = prasatul::mean_trace(t);
        }
    }
});
