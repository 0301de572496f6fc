//! Renders both figure variants as SVG files.
//! Usage: `cargo run --example figure_svg [alpha] [output-dir]`.

use std::path::PathBuf;

use lemniscate::cli::{render_svg, write_atomic, FigureSpec, Variant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let alpha: f64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0.5);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| ".".to_owned()));
    for (variant, name) in [(Variant::Fig1, "fig1.svg"), (Variant::Fig3, "fig3.svg")] {
        let path = dir.join(name);
        write_atomic(&path, render_svg(&FigureSpec::new(alpha, variant))?.as_bytes())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
