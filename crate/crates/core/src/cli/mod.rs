//! Command-line front end. `run_with` is the whole program; the binary only
//! forwards `std::env::args` and the standard streams to it.

mod cache;
mod figure;
mod theta;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::asymptotics::{default_n_values, verify_all, verify_tag, TheoremTag, VerificationReport};
use crate::coeffs::{coefficients, Kind};
use crate::constants::{ConstantsSet, REFERENCE_VALUES};
use crate::error::{Error, Result};
use crate::norms::{function_norm, lp_norm_coefficients, NormResult};
use crate::pointeval::log_abs_product;
use crate::quadrature::{CONSTANTS_TOL, NORMS_TOL};

pub use cache::{cache_path, cache_read, cache_write, load_or_compute, resolve_cache_dir, CACHE_DIR_ENV};
pub use figure::{curve_rows, emit_figure, ratio_rows, write_figure, FigureSpec, CURVE_SAMPLES};
pub use theta::parse_theta;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "trigprod", version, about = "Coefficients, values and norms of ∏(1 ∓ e^{ikθ})")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficient table as `j,coeff` rows.
    Coeffs {
        kind: Kind,
        #[arg(long)]
        n: u32,
        /// Read from / write to this cache directory (default: $TRIGPROD_CACHE_DIR).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Evaluate |P_n(θ)| or |Q_n(θ)|.
    Eval {
        kind: Kind,
        #[arg(long)]
        n: u32,
        /// `2pi/5`, `pi/3`, `0.5pi`, `1.25`, ...
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Print the numerical constants next to their reference values.
    Constants {
        #[arg(long, default_value_t = CONSTANTS_TOL)]
        tol: f64,
    },
    /// `L^p` norm on the circle, or `ℓ^p` of the coefficients with `--coefficients`.
    Norms {
        kind: Kind,
        #[arg(long)]
        n: u32,
        /// Exponent `>= 1`, or `inf`.
        #[arg(long, value_parser = parse_exponent)]
        p: f64,
        #[arg(long)]
        coefficients: bool,
        #[arg(long, default_value_t = NORMS_TOL)]
        tol: f64,
    },
    /// Check one theorem or all of them and print JSON reports.
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        theorem: Option<TheoremTag>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n_max: u32,
        /// Exponent for the `L^p` checks.
        #[arg(long, default_value = "1", value_parser = parse_exponent)]
        p: f64,
    },
    /// Write the CSV data of one figure.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        id: u8,
        #[arg(long)]
        out: PathBuf,
        /// Stop the ratio figures early (default: the captioned range).
        #[arg(long)]
        n_max: Option<u32>,
    },
}

fn parse_exponent(s: &str) -> std::result::Result<f64, String> {
    let p = match s {
        "inf" | "infinity" | "∞" => f64::INFINITY,
        _ => s.parse::<f64>().map_err(|e| e.to_string())?,
    };
    if p >= 1.0 {
        Ok(p)
    } else {
        Err(format!("exponent must be >= 1 or inf, got {s}"))
    }
}

/// Parses `argv` (program name first) and runs the subcommand, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// 2 for bad arguments, 1 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::UnknownTag(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Coeffs { kind, n, cache } => {
            let dir = resolve_cache_dir(cache, std::env::var_os(CACHE_DIR_ENV));
            let table = match dir {
                Some(dir) => load_or_compute(kind, n, &dir)?,
                None => coefficients(kind, n, Default::default())?,
            };
            let mut w = std::io::BufWriter::new(out);
            writeln!(w, "j,coeff")?;
            for (j, c) in table.coeffs().iter().enumerate() {
                writeln!(w, "{j},{c}")?;
            }
            w.flush()?;
        }
        Command::Eval { kind, n, theta } => {
            if n == 0 {
                return Err(Error::InvalidInput("n must be at least 1".into()));
            }
            let angle = parse_theta(&theta)?;
            let v = log_abs_product(kind, n, angle);
            writeln!(out, "kind,n,theta,log_magnitude,magnitude")?;
            writeln!(out, "{kind},{n},{angle},{:.16e},{:.16e}", v.ln(), v.to_f64())?;
        }
        Command::Constants { tol } => {
            let set = ConstantsSet::compute(tol)?;
            writeln!(out, "name,value,error,reference")?;
            for (name, est) in set.rows() {
                let reference = REFERENCE_VALUES
                    .iter()
                    .find(|(r, _)| *r == name)
                    .map(|(_, v)| format!("{v:.16e}"))
                    .unwrap_or_default();
                writeln!(out, "{name},{:.16e},{:.16e},{reference}", est.value, est.error)?;
            }
        }
        Command::Norms {
            kind,
            n,
            p,
            coefficients: hat,
            tol,
        } => {
            let r = if hat {
                lp_norm_coefficients(&coefficients(kind, n, Default::default())?, p)?
            } else {
                function_norm(kind, n, p, tol)?
            };
            writeln!(out, "n,p,value_log,method,error")?;
            writeln!(out, "{}", norm_row(n, &r))?;
        }
        Command::Verify { theorem, all, n_max, p } => {
            let c = crate::constants::standard();
            let reports: Vec<VerificationReport> = if all {
                verify_all(n_max, c)?
            } else {
                let tag = theorem.expect("clap requires --theorem without --all");
                vec![verify_tag(tag, &default_n_values(tag, n_max), p, c)?]
            };
            let json = if all {
                serde_json::to_string_pretty(&reports)
            } else {
                serde_json::to_string_pretty(&reports[0])
            }
            .map_err(|e| Error::Io(e.into()))?;
            writeln!(out, "{json}")?;
            if reports.iter().any(|r| !r.pass) {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Figure { id, out: path, n_max } => {
            let spec = match n_max {
                Some(m) => FigureSpec::truncated(id, m, path)?,
                None => FigureSpec::captioned(id, path)?,
            };
            emit_figure(&spec)?;
            writeln!(out, "{}", spec.out.display())?;
        }
    }
    Ok(EXIT_OK)
}

/// `n,p,value_log,method,error` with `p = inf` spelled out.
pub fn norm_row(n: u32, r: &NormResult) -> String {
    let p = if r.p.is_infinite() { "inf".to_string() } else { format!("{}", r.p) };
    format!("{n},{p},{:.16e},{},{:.16e}", r.value.ln(), r.method, r.error_estimate)
}
