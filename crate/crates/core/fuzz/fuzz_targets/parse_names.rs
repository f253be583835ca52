#![no_main]

use libfuzzer_sys::fuzz_target;
use prasatul::bench::{BenchFunction, OptimizerKind};
use prasatul::{Orientation, ScoreKey};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(k) = s.parse::<ScoreKey>() {
        assert_eq!(k.name().parse::<ScoreKey>().unwrap(), k);
    }
    let _ = s.parse::<Orientation>();
    if let Ok(f) = s.parse::<BenchFunction>() {
        assert_eq!(f.id().parse::<BenchFunction>().unwrap(), f);
    }
    if let Ok(o) = s.parse::<OptimizerKind>() {
        assert_eq!(o.id().parse::<OptimizerKind>().unwrap(), o);
    }
});
