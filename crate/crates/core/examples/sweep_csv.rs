//! Tabulates the configuration for α across the first octant and writes it
//! as CSV. Usage: `cargo run --example sweep_csv [steps] [path]`.

use std::path::PathBuf;

use lemniscate::cli::{sweep, to_csv, write_atomic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let steps: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(17);
    let rows = sweep(steps)?;
    let worst = rows.iter().map(|r| r.residual_thm1.abs()).fold(0.0, f64::max);
    match args.next() {
        Some(path) => {
            let path = PathBuf::from(path);
            write_atomic(&path, to_csv(&rows).as_bytes())?;
            println!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => print!("{}", to_csv(&rows)),
    }
    eprintln!("largest |l − 2√2 a| over the sweep: {worst:.2e}");
    Ok(())
}
