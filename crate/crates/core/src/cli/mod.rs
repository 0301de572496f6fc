//! The `lemnis` command line: constants, function evaluation, identity
//! verification, configuration sweeps and figure rendering.
//!
//! Exit codes: 0 on success (all selected identities pass), 1 when a
//! verification fails, 2 on usage, domain, numeric or I/O errors.

mod figure;
mod format;
mod io;
mod sweep;

use std::ffi::OsString;
use std::f64::consts::SQRT_2;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use figure::{figure_geometry, render_svg, FigureGeometry, FigureSpec, Label, Variant, VIEW_EXTENT};
pub use format::format_sig17;
pub use io::write_atomic;
pub use sweep::{parse_csv, sweep, to_csv, SweepRow, SWEEP_HEADER};

use crate::curves::{beta_of_alpha, lemniscate_arc_radial, squircle_sector_area, Angle};
use crate::error::{Error, Result};
use crate::lemnifuncs::{cl, cos4, sin4, sl, slh, tan4, Constants};
use crate::numerics::ToleranceConfig;
use crate::relations::{verify_selected, Identity, IdentityReport, DEFAULT_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Functions reachable from `lemnis eval`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Sl,
    Cl,
    Slh,
    Cos4,
    Sin4,
    Tan4,
    /// β(α), the polar angle of C
    Beta,
    /// Lemniscate arc length from the origin out to radius x
    Arc,
    /// Squircle sector area from the x-axis to angle x
    Area,
}

/// Evaluates `function` at `x`. `tol` is the absolute quadrature tolerance
/// used by `arc` and `area`.
pub fn eval(function: Function, x: f64, tol: f64) -> Result<f64> {
    let quad = ToleranceConfig::with_abs_tol(tol);
    quad.validate()?;
    match function {
        Function::Sl => sl(x),
        Function::Cl => cl(x),
        Function::Slh => slh(x),
        Function::Cos4 => cos4(x),
        Function::Sin4 => sin4(x),
        Function::Tan4 => tan4(x),
        Function::Beta => beta_of_alpha(Angle(x)).map(Angle::radians),
        Function::Arc => lemniscate_arc_radial(0.0, x, &quad),
        Function::Area => squircle_sector_area(Angle(x), &quad),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
struct ConstantsView {
    varpi: f64,
    gamma_quarter: f64,
    half_varpi: f64,
    varpi_over_2sqrt2: f64,
    squircle_area: f64,
}

/// The named constants as text (`name = value` lines) or a JSON object.
pub fn constants_output(format: Format) -> Result<String> {
    let c = Constants::get()?;
    let view = ConstantsView {
        varpi: c.varpi,
        gamma_quarter: c.gamma_quarter,
        half_varpi: 0.5 * c.varpi,
        varpi_over_2sqrt2: c.varpi / (2.0 * SQRT_2),
        squircle_area: c.squircle_area,
    };
    match format {
        Format::Text => {
            let rows = [
                ("varpi", view.varpi),
                ("gamma_quarter", view.gamma_quarter),
                ("half_varpi", view.half_varpi),
                ("varpi_over_2sqrt2", view.varpi_over_2sqrt2),
                ("squircle_area", view.squircle_area),
            ];
            Ok(rows.iter().map(|(k, v)| format!("{k} = {}\n", format_sig17(*v))).collect())
        }
        Format::Json => Ok(serde_json::to_string(&view).expect("plain struct serializes") + "\n"),
        Format::Csv => Err(Error::domain("constants supports --format text or json")),
    }
}

/// Renders reports for `verify`.
pub fn reports_output(reports: &[IdentityReport], single: bool, format: Format) -> String {
    match format {
        Format::Text => reports
            .iter()
            .map(|r| {
                format!(
                    "{} {} {} {}\n",
                    r.name,
                    format_sig17(r.max_abs_residual),
                    format_sig17(r.argmax),
                    if r.pass { "pass" } else { "FAIL" }
                )
            })
            .collect(),
        Format::Json => {
            let text = if single && reports.len() == 1 {
                serde_json::to_string(&reports[0])
            } else {
                serde_json::to_string(reports)
            };
            text.expect("reports serialize") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("name,max_abs_residual,argmax,tolerance,pass,samples\n");
            for r in reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.name,
                    format_sig17(r.max_abs_residual),
                    format_sig17(r.argmax),
                    format_sig17(r.tolerance),
                    r.pass,
                    r.samples
                ));
            }
            out
        }
    }
}

/// Exit code for a finished verification run.
pub fn verify_exit_code(reports: &[IdentityReport]) -> i32 {
    if reports.iter().any(IdentityReport::has_errors) {
        EXIT_ERROR
    } else if reports.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

#[derive(Debug, Parser)]
#[command(name = "lemnis", version, about = "Lemniscate and squircle arc/area identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the lemniscate constant and related values
    Constants {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate one function at one point
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(allow_negative_numbers = true)]
        x: f64,
        /// Absolute quadrature tolerance for arc and area
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Check identities over their sampling grids
    Verify {
        /// An identity name, or "all"
        which: String,
        /// Override the sample count of every grid
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate the configuration for α from 0 to π/4 as CSV
    Sweep {
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a figure as SVG
    Figure {
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value = "fig1", value_parser = ["fig1", "fig3"])]
        variant: String,
        #[arg(long, default_value_t = 600)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Numeric(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => write_atomic(p, text.as_bytes()).map_err(|e| {
            Failure::Io(std::io::Error::new(e.kind(), format!("cannot write {}: {e}", p.display())))
        }),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match command {
        Command::Constants { format } => {
            out.write_all(constants_output(format)?.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Eval { function, x, tol } => {
            writeln!(out, "{}", format_sig17(eval(function, x, tol)?))?;
            Ok(EXIT_OK)
        }
        Command::Verify { which, grid, tol, format } => {
            let single = which != "all";
            let selected: Vec<Identity> =
                if single { vec![which.parse()?] } else { Identity::ALL.to_vec() };
            let reports = verify_selected(&selected, grid, tol, None)?;
            out.write_all(reports_output(&reports, single, format).as_bytes())?;
            Ok(verify_exit_code(&reports))
        }
        Command::Sweep { steps, out: path } => {
            let csv = to_csv(&sweep(steps)?);
            emit(out, path.as_ref(), &csv)?;
            Ok(EXIT_OK)
        }
        Command::Figure { alpha, variant, width, height, out: path } => {
            let spec = FigureSpec { alpha, variant: variant.parse()?, width_px: width, height_px: height };
            emit(out, path.as_ref(), &render_svg(&spec)?)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("lemnis").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn constants_text_and_json() {
        let (code, out, _) = call(&["constants"]);
        assert_eq!(code, 0);
        let varpi: f64 = out.lines().find_map(|l| l.strip_prefix("varpi = ")).unwrap().parse().unwrap();
        assert!((varpi - 2.622_057_554_292_119_8).abs() <= 1e-11, "{out}");
        assert_eq!(out.lines().count(), 5);
        let (code, out, _) = call(&["constants", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let ratio = v["squircle_area"].as_f64().unwrap() / v["varpi"].as_f64().unwrap();
        assert!((ratio - SQRT_2).abs() <= 2.3e-16);
        assert_eq!(call(&["constants", "--format", "csv"]).0, 2);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(call(&["eval", "sl", "0"]).1, "0\n");
        let beta: f64 = call(&["eval", "beta", "0.39269908169872414"]).1.trim().parse().unwrap();
        assert!((beta - 0.523_598_775_598_298_8).abs() <= 1e-12);
        let (code, out, err) = call(&["eval", "cl", "5.0"]);
        assert_eq!((code, out.as_str()), (2, ""));
        assert!(err.contains("[0, ϖ/2]"), "{err}");
        assert_eq!(call(&["eval", "sl", "-0.1"]).0, 2);
        assert_eq!(call(&["eval", "nope", "0.1"]).0, 2);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", "theorem1", "--grid", "9"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("theorem1 ") && out.trim_end().ends_with("pass"));
        assert_eq!(call(&["verify", "theorem1", "--grid", "9", "--tol", "1e-20"]).0, 1);
        assert_eq!(call(&["verify", "theorem9"]).0, 2);
        assert_eq!(call(&["verify", "theorem1", "--grid", "1"]).0, 2);
        let (_, out, _) = call(&["verify", "historic", "--format", "csv"]);
        assert!(out.starts_with("name,max_abs_residual,argmax,tolerance,pass,samples\nhistoric,"));
        let (_, out, _) = call(&["verify", "siegel", "--grid", "5", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["samples"], 5);
    }

    #[test]
    fn sweep_and_figure_to_stdout() {
        let (code, out, _) = call(&["sweep", "--steps", "3"]);
        assert_eq!(code, 0);
        assert_eq!(parse_csv(&out).unwrap().len(), 3);
        assert_eq!(call(&["sweep", "--steps", "1"]).0, 2);
        let (code, out, _) = call(&["figure", "--variant", "fig3", "--alpha", "0.2"]);
        assert_eq!(code, 0);
        assert!(out.contains("<svg"));
        assert_eq!(call(&["figure", "--alpha", "1.0"]).0, 2);
        assert_eq!(call(&["figure", "--variant", "fig2"]).0, 2);
        assert_eq!(call(&["sweep", "--steps", "3", "--out", "/nonexistent-dir/x.csv"]).0, 2);
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
