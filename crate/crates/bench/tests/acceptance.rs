//! One line per criterion; the process fails if any criterion fails.
//!
//! Pass criterion ids as arguments to run a subset.

use std::process::ExitCode;

use urel_bench::acceptance::{run_selected, CRITERIA};

fn main() -> ExitCode {
    let ids: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { (1..=CRITERIA).collect() } else { ids };
    let results = run_selected(&ids);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
