//! Command-line front end: single invariants, full reports and the
//! verification suites.

mod render;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use detvar_core::detvar::{self, VarietyId};
use detvar_core::{partitions, Error};

pub use verify::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Tex,
}

#[derive(Debug, Parser)]
#[command(
    name = "detvar",
    version,
    about = "Invariants of generic determinantal varieties"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Littlewood-Richardson cache file, loaded if present and saved on exit
    #[arg(long, global = true, env = "DETVAR_LR_CACHE")]
    lr_cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
struct Variety {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

impl Variety {
    fn id(&self) -> Result<VarietyId, Error> {
        VarietyId::new(self.m, self.n, self.k)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Local Euler obstruction of tau(m,n,k) along tau(m,n,k+i)
    Eu {
        #[command(flatten)]
        variety: Variety,
        #[arg(long)]
        i: usize,
        /// Print both fiber integrals
        #[arg(long)]
        both_forms: bool,
    },
    /// Matrix e(j,i) of Euler obstructions
    EuTable {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Chern-Mather degrees beta_l
    Cm(Variety),
    /// Conormal cycle coefficients |con_j|
    Conormal(Variety),
    /// Polar degrees deg M_l
    Polar(Variety),
    /// Microlocal multiplicities of the intersection cohomology sheaf
    Cc(Variety),
    /// Euler characteristic of G(k,n)
    Chi {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Every invariant of tau(m,n,k)
    Report(Variety),
    /// Run the verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Bound on m for the exhaustive sweeps
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

/// Exit status for a failed computation: 2 for bad input, 1 otherwise.
fn exit_code(e: &Error) -> i32 {
    if e.is_user_error() {
        2
    } else {
        1
    }
}

/// Parses `args` (including the program name), runs one subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 2,
            };
            // clap's message spans several lines; keep everything before the
            // usage block on one line
            let text = e.to_string();
            let line = text
                .lines()
                .take_while(|l| !l.trim().is_empty() && !l.starts_with("Usage:"))
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(err, "{line}");
            return code;
        }
    };

    if let Some(path) = &cli.lr_cache {
        if path.exists() {
            if let Err(e) = partitions::load_lr_cache(path) {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return 2;
            }
        }
    }

    let mut buffer = Vec::new();
    let code = match execute(&cli, &mut buffer) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    };
    if out.write_all(&buffer).is_err() {
        return 1;
    }

    if let Some(path) = &cli.lr_cache {
        if let Err(e) = partitions::save_lr_cache(path) {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return 1;
        }
    }
    code
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<i32, Error> {
    let fmt = cli.format;
    let text = match &cli.command {
        Command::Eu {
            variety,
            i,
            both_forms,
        } => {
            let Variety { m, n, k } = *variety;
            if *both_forms {
                let forms = detvar::euler_obstruction_forms(m, n, k, *i)?;
                render::euler_forms(fmt, variety, *i, &forms)
            } else {
                let value = detvar::euler_obstruction(m, n, k, *i)?;
                render::euler_value(fmt, variety, *i, &value)
            }
        }
        Command::EuTable { m, n } => {
            let e = detvar::euler_obstruction_matrix(*m, *n)?;
            render::eu_table(fmt, *m, *n, &e)
        }
        Command::Cm(v) => {
            let id = v.id()?;
            render::vector(fmt, id, "beta", &detvar::chern_mather(v.m, v.n, v.k)?)
        }
        Command::Conormal(v) => {
            let id = v.id()?;
            render::conormal(fmt, id, &detvar::conormal_cycle(v.m, v.n, v.k)?)
        }
        Command::Polar(v) => {
            let id = v.id()?;
            render::vector(fmt, id, "polar", &detvar::polar_degrees(v.m, v.n, v.k)?)
        }
        Command::Cc(v) => {
            let id = v.id()?;
            let c = detvar::microlocal_multiplicities(v.m, v.n, v.k)?;
            render::vector(fmt, id, "microlocal", &c)
        }
        Command::Chi { k, n } => {
            let chi = detvar::grassmann_euler_char(*k, *n)?;
            render::chi(fmt, *k, *n, &chi)
        }
        Command::Report(v) => {
            v.id()?;
            render::report(fmt, &detvar::invariant_report(v.m, v.n, v.k)?)
        }
        Command::Verify { suite, max_size } => {
            if *max_size == 0 {
                return Err(Error::OutOfRange("--max-size must be at least 1".into()));
            }
            let summary = verify::run_suite(*suite, *max_size);
            out.extend_from_slice(render::verification(fmt, &summary).as_bytes());
            return Ok(if summary.failed() == 0 { 0 } else { 1 });
        }
    };
    out.extend_from_slice(text.as_bytes());
    Ok(0)
}
