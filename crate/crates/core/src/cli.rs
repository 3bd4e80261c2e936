//! Command-line front end. `run` does all the work so the binary stays a
//! one-liner and tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad input, 3 the map
//! does not lie in `N`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::endomorphism::{inner, jablow, random_element, twist, Auto, NWitness, TwistVariant};
use crate::error::{Error, Result};
use crate::format::{self, AutomorphismFile, Loaded};
use crate::freegroup::{Surface, Word};
use crate::report::{evaluate, Selector};
use crate::verify::{self, Config, Suite, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_NOT_IN_N: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mcg-cocycles",
    version,
    about = "Twisted 1-cocycles on the mapping class group, in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate rho, f~, f and psi on an element of N.
    Eval {
        /// `builtin:<name>`; alternatively pass `--in`.
        source: Option<String>,
        /// Automorphism file (JSON).
        #[arg(long = "in", value_name = "PATH", conflicts_with = "source")]
        input: Option<PathBuf>,
        /// Genus for builtins (default 2); must match the file when given.
        #[arg(long = "g")]
        genus: Option<u32>,
        /// Restrict output; repeatable or comma-separated. Default: all.
        #[arg(long, value_enum, value_delimiter = ',')]
        cocycle: Vec<Selector>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Seed for `random:<budget>`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the automorphism file of a named element.
    Builtin {
        /// identity, iota, inner:<word>, twist:<k>:<a|b|bridge> or random:<budget>.
        name: String,
        #[arg(long = "g", default_value_t = 2)]
        genus: u32,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for `random:<budget>`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run property suites over random and fixed inputs.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        /// A genus `3` or an inclusive range `2..6`.
        #[arg(long = "g", value_parser = parse_genus_range, default_value = "2..5")]
        genera: GenusRange,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum random word length.
        #[arg(long, default_value_t = 50)]
        max_len: usize,
        /// Factors per random element of N.
        #[arg(long, default_value_t = 4)]
        budget: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusRange(pub Vec<u32>);

pub fn parse_genus_range(text: &str) -> std::result::Result<GenusRange, String> {
    let parse = |s: &str| s.trim().parse::<u32>().map_err(|e| format!("bad genus {s:?}: {e}"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let g = parse(text)?;
            (g, g)
        }
    };
    if lo < 2 {
        return Err(format!("genus must be at least 2, got {lo}"));
    }
    if hi < lo {
        return Err(format!("empty genus range {text:?}"));
    }
    Ok(GenusRange((lo..=hi).collect()))
}

/// Resolves a builtin name at the given genus.
pub fn builtin(surface: Surface, name: &str, seed: u64) -> Result<Auto> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    match name {
        "identity" => return Ok(Auto::identity(surface)),
        "iota" => return Ok(jablow(surface)),
        _ => {}
    }
    let (head, rest) = name.split_once(':').ok_or_else(unknown)?;
    match head {
        "inner" => Ok(inner(&Word::parse(surface, rest)?)),
        "twist" => {
            let (k, variant) = rest.split_once(':').ok_or_else(unknown)?;
            let k: u32 = k.parse().map_err(|_| unknown())?;
            let variant: TwistVariant = variant.parse()?;
            twist(surface, k, variant).map_err(|_| unknown())
        }
        "random" => {
            let budget: usize = rest.parse().map_err(|_| unknown())?;
            Ok(random_element(surface, budget, seed))
        }
        _ => Err(unknown()),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInN { .. } => EXIT_NOT_IN_N,
        _ => EXIT_BAD_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Eval { source, input, genus, cocycle, format, seed } => {
            let loaded = match (source, input) {
                (_, Some(path)) => {
                    let loaded = format::read(&path)?;
                    let found = loaded.endo().surface().genus();
                    match genus {
                        Some(expected) if expected != found => {
                            return Err(Error::GenusMismatch { expected, found })
                        }
                        _ => loaded,
                    }
                }
                (Some(src), None) => {
                    let name = src
                        .strip_prefix("builtin:")
                        .ok_or_else(|| Error::Format(format!("expected builtin:<name>, got {src:?}")))?;
                    Loaded::Auto(builtin(Surface::new(genus.unwrap_or(2))?, name, seed)?)
                }
                (None, None) => {
                    return Err(Error::Format("nothing to evaluate: pass builtin:<name> or --in".into()))
                }
            };
            let witness = NWitness::certify(loaded.endo())?;
            let report = evaluate(&loaded, &witness, &cocycle)?;
            match format {
                Format::Text => write!(out, "{}", report.to_text())?,
                Format::Structured => writeln!(out, "{}", report.to_json())?,
            }
            Ok(EXIT_OK)
        }
        Command::Builtin { name, genus, out: path, seed } => {
            let auto = builtin(Surface::new(genus)?, &name, seed)?;
            let text = AutomorphismFile::from_auto(&auto).to_json() + "\n";
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, genera, samples, seed, max_len, budget, format } => {
            let cfg = Config { genera: genera.0, samples, seed, max_len, budget };
            let report = VerifyReport::new(suite, &cfg, verify::run(suite, &cfg));
            match format {
                Format::Text => write!(out, "{}", report.to_text())?,
                Format::Structured => writeln!(out, "{}", report.to_json())?,
            }
            Ok(if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}
