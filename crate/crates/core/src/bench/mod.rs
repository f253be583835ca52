//! Desk-scale data generation: shifted benchmark functions, their shift
//! data file, and baseline optimizers that produce trial sets and
//! convergence traces.

mod functions;
mod optimizers;
mod shifts;

pub use functions::{BenchFunction, BenchmarkSpec};
pub use optimizers::{derive_trial_seed, run_optimizer, OptimizerKind, RunConfig, RunOutput};
pub use shifts::{ShiftRecord, ShiftTable, SHIFT_DATA, SHIFT_FORMAT_VERSION};
