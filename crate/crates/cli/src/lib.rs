//! Command-line front end for `higher-jones`: dimension tables, single
//! dimensions, verification suites and golden fixtures.

pub mod fixtures;
pub mod render;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use higher_jones::{AlgebraConfig, Weight};

use render::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or inputs; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A check, diff or I/O step failed; exit code 1.
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl From<higher_jones::Error> for CliError {
    fn from(e: higher_jones::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "higher-jones",
    version,
    about = "Dimensions of simple modules for higher Jones algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print simple-module dimensions for r = 1..=rmax.
    Table {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        rmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the dimension of one simple module.
    Dim {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        r: usize,
        /// Comma-separated label, e.g. 4,2 or 1,1,-1.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Write or compare the golden table fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Fixtures,
    Oracles,
    Laws,
}

#[derive(Debug, Subcommand)]
pub enum FixtureAction {
    /// Write six table CSVs and the errata file into DIR.
    Emit { dir: PathBuf },
    /// Compare DIR against freshly computed fixtures.
    Diff { dir: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraKind {
    Symmetric,
    Hecke,
    Brauer,
    BrauerB,
    Bmw,
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[arg(long, value_enum)]
    pub algebra: AlgebraKind,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub delta: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
}

impl AlgebraArgs {
    /// Builds the configuration, insisting on exactly the flags the algebra uses.
    pub fn config(&self) -> Result<AlgebraConfig, CliError> {
        use AlgebraKind::*;
        let needed: &[&str] = match self.algebra {
            Symmetric => &["p"],
            Hecke => &["ell"],
            Brauer => &["delta", "p"],
            BrauerB => &["m", "p"],
            Bmw => &["n", "ell"],
        };
        let given = [
            ("p", self.p),
            ("ell", self.ell),
            ("delta", self.delta),
            ("n", self.n),
            ("m", self.m),
        ];
        let name = self
            .algebra
            .to_possible_value()
            .expect("no skipped variants");
        for (flag, value) in given {
            match (value.is_some(), needed.contains(&flag)) {
                (true, false) => {
                    return Err(CliError::Usage(format!(
                        "--{flag} does not apply to --algebra {}",
                        name.get_name()
                    )))
                }
                (false, true) => {
                    return Err(CliError::Usage(format!(
                        "--algebra {} requires --{flag}",
                        name.get_name()
                    )))
                }
                _ => {}
            }
        }
        let v = |flag: &str| {
            given
                .iter()
                .find(|(f, _)| *f == flag)
                .and_then(|(_, v)| *v)
                .unwrap_or(0)
        };
        Ok(match self.algebra {
            Symmetric => AlgebraConfig::symmetric(v("p"))?,
            Hecke => AlgebraConfig::hecke(v("ell"))?,
            Brauer => AlgebraConfig::brauer(v("delta"), v("p"))?,
            BrauerB => AlgebraConfig::brauer_type_b(v("m"), v("p"))?,
            Bmw => AlgebraConfig::bmw(v("n"), v("ell"))?,
        })
    }
}

/// What a command produced: text for stdout and whether it counts as success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

fn finished(stdout: String) -> Outcome {
    Outcome { stdout, ok: true }
}

/// Runs one command to completion without touching stdout, so that a failure
/// never leaves a partial table behind.
pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Table {
            algebra,
            rmax,
            format,
        } => {
            let config = algebra.config()?;
            if rmax < 1 {
                return Err(CliError::Usage("--rmax must be at least 1".into()));
            }
            let rows = (1..=rmax)
                .map(|r| config.simple_dims(r))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(finished(render::render(format, &config, &rows)))
        }
        Command::Dim { algebra, r, weight } => {
            let config = algebra.config()?;
            let label = Weight::parse_commas(&weight)
                .ok_or_else(|| CliError::Usage(format!("cannot parse weight {weight:?}")))?;
            let row = config.simple_dims(r)?;
            let key = if config.regularity().is_some() {
                label.trimmed()
            } else {
                label
            };
            match row.get(&key) {
                Some(d) => Ok(finished(format!("{d}\n"))),
                None => {
                    let valid: Vec<String> = row.labels().iter().map(|l| l.to_string()).collect();
                    Err(CliError::Usage(format!(
                        "{key} is not a label of {config} at r={r}; valid labels: {}",
                        valid.join(" ")
                    )))
                }
            }
        }
        Command::Verify { suite } => {
            let report = match suite {
                Suite::Fixtures => verify::fixtures_suite()?,
                Suite::Oracles => verify::oracles_suite(),
                Suite::Laws => verify::laws_suite(),
            };
            Ok(Outcome {
                stdout: report.render(),
                ok: report.passed(),
            })
        }
        Command::Fixtures { action } => match action {
            FixtureAction::Emit { dir } => {
                let written = fixtures::emit(&dir)?;
                Ok(finished(
                    written.iter().map(|w| format!("wrote {w}\n")).collect(),
                ))
            }
            FixtureAction::Diff { dir } => {
                let problems = fixtures::diff(&dir)?;
                if problems.is_empty() {
                    Ok(finished("fixtures match\n".into()))
                } else {
                    Ok(Outcome {
                        stdout: problems.iter().map(|p| format!("{p}\n")).collect(),
                        ok: false,
                    })
                }
            }
        },
    }
}
