use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use drlattice::lattice::{Family, GraphLattice, SizeCaps};
use drlattice::norton::Norton;
use drlattice::spectral::SpectralContext;
use drlattice::suite::{self, SuiteOptions};
use drlattice::Error;

mod render;

#[derive(Parser)]
#[command(name = "drlattice", version, about = "Exact spectra, tight frames and Norton products of Johnson, Grassmann and Hamming graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the lattice and export it.
    Build(Common),
    /// Verify the eigenspaces and print the spectral table.
    Eigen(Common),
    /// Check the tight-frame identity on one or every eigenspace.
    Frame {
        #[command(flatten)]
        common: Common,
        /// Level to check; all levels when omitted.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Compare Norton products of projected atoms with their closed forms.
    Norton(Common),
    /// Run the verification suite on one instance or on the built-in battery.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run the built-in battery instead of a single instance.
        #[arg(long, conflicts_with_all = ["family", "n", "k", "q"])]
        all: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Johnson,
    Grassmann,
    Hamming,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    family: Option<FamilyName>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Field size (prime) for the Grassmann family.
    #[arg(long)]
    q: Option<u32>,
    /// Output format; Markdown on a terminal, JSON otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest vertex count accepted when building.
    #[arg(long, env = "DRLATTICE_MAX_VERTICES", default_value_t = SizeCaps::default().max_vertices)]
    max_vertices: usize,
    /// Largest vertex count accepted by the exact verification suite.
    #[arg(long, env = "DRLATTICE_MAX_VERIFY_VERTICES", default_value_t = suite::DEFAULT_MAX_VERIFY_VERTICES)]
    max_verify_vertices: usize,
}

impl Common {
    fn family(&self) -> Result<Family, Error> {
        let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| Error::InvalidParameters(format!("--{flag} is required")));
        let Some(name) = self.family else {
            return Err(Error::InvalidParameters("--family is required".into()));
        };
        let family = match name {
            FamilyName::Johnson => Family::Johnson {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
            },
            FamilyName::Grassmann => Family::Grassmann {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
                q: need(self.q, "q")?,
            },
            FamilyName::Hamming => Family::Hamming { n: need(self.n, "n")? },
        };
        family.validate()?;
        Ok(family)
    }

    fn caps(&self) -> SizeCaps {
        SizeCaps {
            max_vertices: self.max_vertices,
            ..SizeCaps::default()
        }
    }

    fn format(&self) -> Format {
        self.format.unwrap_or(if std::io::stdout().is_terminal() && self.out.is_none() {
            Format::Md
        } else {
            Format::Json
        })
    }

    fn build(&self) -> Result<GraphLattice, Error> {
        GraphLattice::build_with_caps(self.family()?, self.caps())
    }

    fn emit(&self, text: &str) -> Result<(), Error> {
        let io = |e: std::io::Error| Error::InvalidParameters(format!("cannot write output: {e}"));
        match &self.out {
            Some(path) => std::fs::write(path, text).map_err(io),
            None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
        }
    }
}

/// Outcome of a command that ran to completion; `false` means a check failed.
type Outcome = Result<bool, Error>;

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build(c) => {
            let lattice = c.build()?;
            let fmt = c.format();
            c.emit(&render::lattice(&lattice, fmt))?;
            if c.out.is_some() {
                println!("level sizes {:?}", lattice.level_sizes());
            }
            Ok(true)
        }
        Command::Eigen(c) => {
            let lattice = c.build()?;
            let ctx = SpectralContext::new(&lattice)?;
            let table = ctx.verify_eigenspaces()?;
            c.emit(&render::spectral(&table, c.format()))?;
            Ok(true)
        }
        Command::Frame { common: c, j } => {
            let lattice = c.build()?;
            let ctx = SpectralContext::new(&lattice)?;
            let levels: Vec<usize> = match j {
                Some(j) => vec![j],
                None => (0..=lattice.diameter()).collect(),
            };
            let reports = levels
                .into_iter()
                .map(|j| ctx.tight_frame_check(j))
                .collect::<Result<Vec<_>, _>>()?;
            c.emit(&render::frames(lattice.family(), &reports, c.format()))?;
            Ok(true)
        }
        Command::Norton(c) => {
            let lattice = c.build()?;
            let ctx = SpectralContext::new(&lattice)?;
            let report = Norton::new(&ctx)?.verify()?;
            c.emit(&render::norton(&report, c.format()))?;
            Ok(report.verified)
        }
        Command::Verify { common: c, all } => {
            let options = SuiteOptions {
                caps: c.caps(),
                max_verify_vertices: c.max_verify_vertices,
            };
            let report = if all {
                suite::run_battery(&suite::battery(), &options)?
            } else {
                let instance = suite::verify_instance(c.family()?, &options)?;
                suite::SuiteReport::from_instances(vec![instance])
            };
            c.emit(&render::suite(&report, c.format()))?;
            if let Some(f) = report.instances.iter().find_map(|i| i.first_failure().map(|f| (i, f))) {
                eprintln!(
                    "verification failed: {} {}: {}",
                    f.0.label,
                    f.1.name,
                    f.1.detail.as_deref().unwrap_or("")
                );
            }
            Ok(report.passed)
        }
    }
}

/// 0 ok, 1 verification failure, 2 bad parameters, 3 resource cap.
fn exit_code(outcome: &Outcome) -> u8 {
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Error::InvalidParameters(_) | Error::Parse(_)) => 2,
        Err(Error::SizeCap(_)) => 3,
        Err(_) => 1,
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    if let Err(e) = &outcome {
        eprintln!("error: {e}");
    }
    ExitCode::from(exit_code(&outcome))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(true)), 0);
        assert_eq!(exit_code(&Ok(false)), 1);
        assert_eq!(exit_code(&Err(Error::verification("frame.tight_frame", "mismatch"))), 1);
        assert_eq!(exit_code(&Err(Error::InvalidParameters("2k > n".into()))), 2);
        assert_eq!(exit_code(&Err(Error::SizeCap("too many vertices".into()))), 3);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
