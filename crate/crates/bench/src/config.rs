//! `key = value` run files.
//!
//! ```text
//! # Example 3 on a fine radial grid
//! case = 3
//! solver = radsym
//! n = 5000
//! out = runs/ex3
//! stride = 100
//! ```

use std::path::{Path, PathBuf};

use crate::error::{BenchError, Result};
use crate::runner::{RunRequest, SolverChoice};

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub request: RunRequest,
    pub out: PathBuf,
}

pub fn parse(text: &str) -> Result<RunConfig> {
    let mut case = None;
    let mut solver = None;
    let mut n = None;
    let mut d = 2;
    let mut t_end = None;
    let mut stride = None;
    let mut out = PathBuf::from(".");
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| BenchError::Config { line, message };
        let (key, value) = content.split_once('=').ok_or_else(|| err(format!("expected key = value, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |e: &dyn std::fmt::Display| err(format!("{key}: {e}"));
        match key {
            "case" => case = Some(value.parse::<u32>().map_err(|e| bad(&e))?),
            "solver" => solver = Some(value.parse::<SolverChoice>().map_err(|e| bad(&e))?),
            "n" | "grid" => n = Some(value.parse::<usize>().map_err(|e| bad(&e))?),
            "d" => d = value.parse::<u32>().map_err(|e| bad(&e))?,
            "t_end" => t_end = Some(value.parse::<f64>().map_err(|e| bad(&e))?),
            "stride" => stride = Some(value.parse::<usize>().map_err(|e| bad(&e))?),
            "out" => out = PathBuf::from(value),
            _ => return Err(err(format!("unknown key `{key}`"))),
        }
    }
    let missing = |what: &str| BenchError::Config { line: 0, message: format!("missing `{what}`") };
    Ok(RunConfig {
        request: RunRequest {
            case: case.ok_or_else(|| missing("case"))?,
            d,
            solver: solver.ok_or_else(|| missing("solver"))?,
            resolution: n.ok_or_else(|| missing("n"))?,
            t_end,
            stride,
        },
        out,
    })
}

pub fn load(path: &Path) -> Result<RunConfig> {
    parse(&std::fs::read_to_string(path).map_err(BenchError::io(path))?)
}
