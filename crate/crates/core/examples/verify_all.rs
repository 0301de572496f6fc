//! Runs every identity on its default grid and prints one line per report.

use std::time::Instant;

use lemniscate::relations::{verify_all, DEFAULT_TOLERANCE};

fn main() -> lemniscate::Result<()> {
    let start = Instant::now();
    let reports = verify_all(DEFAULT_TOLERANCE)?;
    for r in &reports {
        println!(
            "{:<15} max |residual| = {:.3e} at {:<22} samples = {:<4} {}",
            r.name,
            r.max_abs_residual,
            r.argmax,
            r.samples,
            if r.pass { "pass" } else { "FAIL" }
        );
    }
    println!("{} identities in {:.2?}", reports.len(), start.elapsed());
    Ok(())
}
