#![no_main]

use libfuzzer_sys::fuzz_target;
use prasatul::bench::ShiftTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(table) = ShiftTable::parse(text) else { return };
    for f in table.functions() {
        let rec = table.record(f).unwrap();
        if let Ok(spec) = table.spec(f, rec.shift.len().min(4)) {
            assert_eq!(spec.evaluate(spec.shift_vector()).unwrap(), spec.optimum());
        }
    }
});
