//! Runs the twelve acceptance criteria and prints one line per criterion.
//!
//! Criterion 4 cannot hold as stated: for θ^∨ in A2 the minimal element
//! `w_λ = s₀` has a single reduced word, so there are no two gallery types to
//! compare. Its line prints FAIL; the target only fails if that reason
//! changes, if the same check at 2θ^∨ stops passing, or if anything else fails.

use std::process::ExitCode;

use mv_cli::suite::{run, summary_line, SuiteConfig};
use mv_looplab::DEFAULT_PREC;

const UNATTAINABLE: u8 = 4;

fn main() -> ExitCode {
    let reports = run(&SuiteConfig::desk(DEFAULT_PREC), &[]);
    let mut unexpected = Vec::new();
    for r in &reports {
        println!("{}", summary_line(r));
        let expected = if r.criterion == UNATTAINABLE {
            !r.pass && r.detail.contains("single reduced word") && r.detail.contains("pairwise isomorphic") && r.checks == 2
        } else {
            r.pass
        };
        if !expected {
            unexpected.push(r.criterion);
        }
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    println!("{} criteria, {passed} passed, {} failed", reports.len(), reports.len() - passed);
    if reports.len() != 12 || !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
