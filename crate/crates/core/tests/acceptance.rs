//! One PASS/FAIL line per criterion. Criterion 6 is a known failure: the
//! computed degree-n group of a wedge of spheres is free abelian, so the
//! run only succeeds when 6 fails in exactly that way and all others pass.

use std::process::ExitCode;

use sechom::verify::acceptance::{run, Config};

const KNOWN_FAILURE: usize = 6;

fn main() -> ExitCode {
    let seed = std::env::var("SECHOM_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(Config::default().seed);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get()).min(4);
    let outcomes = run(&Config { seed, jobs });
    let mut ok = true;
    for o in &outcomes {
        println!("{}", o.line());
        if o.id == KNOWN_FAILURE {
            let expected = !o.passed && o.detail.starts_with("h1 mismatches: 0;")
                && !o.detail.contains("over the")
                && !o.detail.contains("not Z[E]");
            if !expected {
                eprintln!("criterion {} did not fail in the documented way", o.id);
                ok = false;
            }
        } else if !o.passed {
            ok = false;
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{}/{} criteria passed ({} known failure)", passed, outcomes.len(), 1);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
