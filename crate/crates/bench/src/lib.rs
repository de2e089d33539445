//! Benchmark cases, file formats and the acceptance runner for `urel-core`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod acceptance;
pub mod cases;
pub mod compare;
pub mod config;
pub mod error;
pub mod io;
pub mod runner;

pub use cases::{case, registry, BenchmarkCase};
pub use compare::{compare, ComparisonReport, Profile};
pub use error::{BenchError, Result};
pub use runner::{detect_focus, run_case, Artifacts, RunRequest, SolverChoice};
