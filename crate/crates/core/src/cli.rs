//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on argument/parse errors (usage on stderr),
//! 1 on domain errors (error name on stderr). All floats are printed in
//! shortest round-trip decimal form, so identical invocations produce
//! byte-identical output.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::conjugacy::{classify, decompose, power};
use crate::lorentz::boost_zt;
use crate::mat2::RealMatrix2;
use crate::twolevel::{crossing_sweep, regime, transition_matrix, TwoLevelParams};
use crate::Error;

#[derive(Parser)]
#[command(
    name = "squeeze2",
    about = "Squeeze-transformation calculus for unimodular 2x2 matrices",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MatrixArg {
    /// Matrix entries as a single comma-separated list: a,b,c,d
    #[arg(long, allow_hyphen_values = true)]
    matrix: String,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy class of a unimodular matrix
    Classify(MatrixArg),
    /// Squeeze-similarity decomposition of a unimodular matrix
    Decompose(MatrixArg),
    /// N-th power of a unimodular matrix, computed in O(1)
    Power {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        n: u64,
    },
    /// Two-level transition matrix for couplings h, g at time t
    Evolve {
        #[arg(long, allow_negative_numbers = true)]
        h: f64,
        #[arg(long, allow_negative_numbers = true)]
        g: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Sweep the dissipative coupling g and emit a CSV of regimes/classes
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        h: f64,
        #[arg(long = "g-min", allow_negative_numbers = true)]
        g_min: f64,
        #[arg(long = "g-max", allow_negative_numbers = true)]
        g_max: f64,
        #[arg(long)]
        steps: u64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long)]
        out: Option<String>,
    },
    /// Lorentz boost of (z, t) by rapidity eta
    Boost {
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
    },
}

enum CmdError {
    /// Bad arguments beyond what clap checks; exit 2.
    Usage(String),
    /// Domain error from the library; exit 1.
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Domain(e)
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e)
    }
}

fn parse_matrix(raw: &str) -> Result<RealMatrix2, CmdError> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 4 {
        return Err(CmdError::Usage(format!(
            "--matrix expects four comma-separated entries a,b,c,d, got {raw:?}"
        )));
    }
    let mut vals = [0.0f64; 4];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p
            .trim()
            .parse()
            .map_err(|_| CmdError::Usage(format!("invalid matrix entry {p:?}")))?;
        if !v.is_finite() {
            return Err(CmdError::Usage(format!("matrix entry {p:?} is not finite")));
        }
    }
    Ok(RealMatrix2::new(vals[0], vals[1], vals[2], vals[3]))
}

fn sign_str(sign: f64) -> &'static str {
    if sign < 0.0 {
        "-1"
    } else {
        "+1"
    }
}

fn exec(command: Command, out: &mut dyn Write) -> Result<(), CmdError> {
    match command {
        Command::Classify(m) => {
            let c = classify(&parse_matrix(&m.matrix)?)?;
            writeln!(
                out,
                "class={} param={} sign={}",
                c.tag(),
                c.parameter(),
                sign_str(c.sign())
            )?;
        }
        Command::Decompose(arg) => {
            let m = parse_matrix(&arg.matrix)?;
            let d = decompose(&m)?;
            let residual = d.reconstruct().max_abs_diff(&m);
            writeln!(
                out,
                "theta={} eta={} class={} param={} residual={}",
                d.theta,
                d.eta,
                d.core.tag(),
                d.core.parameter(),
                residual
            )?;
        }
        Command::Power { matrix, n } => {
            let p = power(&parse_matrix(&matrix.matrix)?, n)?;
            writeln!(out, "{} {} {} {}", p.a, p.b, p.c, p.d)?;
        }
        Command::Evolve { h, g, t } => {
            if !(h * t).is_finite() || (h * t).abs() > 300.0 || (g * t).abs() > 300.0 {
                return Err(CmdError::Usage(
                    "evolve requires |h*t| and |g*t| <= 300".into(),
                ));
            }
            let reg = regime(h, g)?;
            let m = transition_matrix(&TwoLevelParams::new(h, g, t))?;
            writeln!(out, "{} {} {} {} regime={}", m.a, m.b, m.c, m.d, reg.tag())?;
        }
        Command::Sweep {
            h,
            g_min,
            g_max,
            steps,
            t,
            out: out_file,
        } => {
            if !(h > 0.0) {
                return Err(CmdError::Usage("sweep requires --h > 0".into()));
            }
            if !(g_min < g_max) {
                return Err(CmdError::Usage("sweep requires --g-min < --g-max".into()));
            }
            if steps == 0 {
                return Err(CmdError::Usage("sweep requires --steps >= 1".into()));
            }
            if (h * t).abs() > 300.0 || (g_min * t).abs() > 300.0 || (g_max * t).abs() > 300.0 {
                return Err(CmdError::Usage(
                    "sweep requires |h*t| and |g*t| <= 300".into(),
                ));
            }
            let g_values: Vec<f64> = (0..=steps)
                .map(|i| {
                    if i == steps {
                        g_max
                    } else {
                        g_min + (i as f64) * (g_max - g_min) / (steps as f64)
                    }
                })
                .collect();
            let rows = crossing_sweep(h, &g_values, t)?;
            let mut csv = String::from("g,regime,class,m11,m12,m21,m22,eta\n");
            for r in &rows {
                let m = r.matrix;
                writeln!(
                    csv,
                    "{},{},{},{},{},{},{},{}",
                    r.g,
                    r.regime.tag(),
                    r.class.tag(),
                    m.a,
                    m.b,
                    m.c,
                    m.d,
                    r.regime.eta()
                )
                .expect("string write cannot fail");
            }
            match out_file {
                Some(path) => fs::write(path, csv)?,
                None => out.write_all(csv.as_bytes())?,
            }
        }
        Command::Boost { z, t, eta } => {
            if eta.abs() > 700.0 {
                return Err(CmdError::Usage("boost requires |eta| <= 700".into()));
            }
            let (zb, tb) = boost_zt(z, t, eta);
            writeln!(out, "z'={} t'={} invariant={}", zb, tb, zb * zb - tb * tb)?;
        }
    }
    Ok(())
}

/// Runs one command. Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String> + Clone,
{
    let cli = match Cli::try_parse_from(args.into_iter().map(Into::into)) {
        Ok(cli) => cli,
        Err(e) => {
            let help = matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            if help {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    match exec(cli.command, out) {
        Ok(()) => 0,
        Err(CmdError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CmdError::Domain(e)) => {
            let _ = writeln!(err, "{e}");
            1
        }
        Err(CmdError::Io(e)) => {
            let _ = writeln!(err, "io error: {e}");
            1
        }
    }
}
