//! Runs every reproduction check and prints one PASS/FAIL line per check.
//!
//! Pass check ids as arguments to run a subset: `cargo test --test acceptance -- 2 7`.

use std::process::ExitCode;

use circlemap::verify::{self, CRITERIA};

fn main() -> ExitCode {
    let selected: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    let mut ran = 0;
    for c in CRITERIA.iter().filter(|c| selected.is_empty() || selected.contains(&c.id)) {
        let outcome = verify::run(c);
        println!("{outcome}");
        ran += 1;
        failed += usize::from(!outcome.passed);
    }
    println!("acceptance: {} of {ran} passed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
