//! sl and cl as radius against arc length, with the identities that tie them
//! together.

use lemniscate::lemnifuncs::{cl, cl_duplication, extend_cl, extend_sl, sl, varpi};

fn main() -> lemniscate::Result<()> {
    let w = varpi()?;
    println!("{:>8} {:>20} {:>20} {:>10}", "u", "sl(u)", "cl(u)", "pythag");
    for k in 0..=8 {
        let u = w / 2.0 * k as f64 / 8.0;
        let (s, c) = (sl(u)?, cl(u)?);
        println!("{u:>8.5} {s:>20.17} {c:>20.17} {:>10.1e}", c * c + s * s + c * c * s * s - 1.0);
    }
    println!("sl(ϖ/4) = cl(ϖ/4) = {:.17}, √(√2 − 1) = {:.17}", sl(w / 4.0)?, (2f64.sqrt() - 1.0).sqrt());
    println!("duplication at u = 0.3: {:.17} vs cl(0.6) = {:.17}", cl_duplication(0.3)?, cl(0.6)?);
    println!("extended: sl(7) = {:.17}, cl(−2) = {:.17}", extend_sl(7.0)?, extend_cl(-2.0)?);
    Ok(())
}
