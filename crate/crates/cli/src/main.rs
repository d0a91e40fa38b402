//! `incpat`: counts words avoiding (or containing) increasing consecutive
//! patterns, and runs the verification checks.
//!
//! Exit codes: 0 on success, 1 when a verification or OEIS comparison
//! fails, 2 on usage errors.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use incpat::oeis::{compare_sequence, parse_bfile, BindingTable};
use incpat::oracle::verify_clusters;
use incpat::permutations::permutation_counts;
use incpat::series::{egf_check, verify_against_recurrence};
use incpat::uniform::UniformEnumerator;
use incpat::{canonicalize, count_avoiders, weight_enumerator, PatternLength};

use render::{Renderer, Value};

#[derive(Parser)]
#[command(name = "incpat", version, about = "Words avoiding the consecutive pattern 12...r")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One value per line.
    Plain,
    /// `<n> <value>` lines, readable as an OEIS b-file.
    Bfile,
    /// One JSON object per line.
    Structured,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of arrangements of a multiset avoiding 12...r.
    Count {
        /// Letter multiplicities, comma separated (e.g. 2,1,1).
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        m: Vec<i64>,
        #[arg(long, value_parser = pattern_length)]
        r: PatternLength,
        #[command(flatten)]
        output: Output,
    },
    /// Weight enumerator by number of occurrences, as ascending coefficients of t.
    Weight {
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        m: Vec<i64>,
        #[arg(long, value_parser = pattern_length)]
        r: PatternLength,
        #[command(flatten)]
        output: Output,
    },
    /// Permutations of length 0..=nmax avoiding 12...r.
    Perm {
        #[arg(long, value_parser = pattern_length)]
        r: PatternLength,
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Words using each of 1..n exactly s times, for n = 0..=nmax.
    Uniform {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long, value_parser = pattern_length)]
        r: PatternLength,
        #[arg(long)]
        nmax: u32,
        /// Print weight enumerators instead of avoider counts.
        #[arg(long)]
        weighted: bool,
        /// Report per-term progress on standard error.
        #[arg(long)]
        progress: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check an identity; exits 1 if it fails.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
    /// Compare computed terms with OEIS b-files.
    OeisCheck {
        /// Binding table (TOML). Defaults to the built-in table.
        #[arg(long)]
        bindings: Option<PathBuf>,
        /// Directory holding b-files named like b049774.txt.
        #[arg(long, default_value = "data/oeis")]
        data_dir: PathBuf,
        /// Only check these ids (repeatable). Default: every bound id.
        #[arg(long = "id")]
        ids: Vec<String>,
        /// Compare at most this many terms per sequence.
        #[arg(long)]
        max_terms: Option<usize>,
    },
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Expand the denominator reciprocal and compare with the recurrence.
    Series {
        #[arg(long, value_parser = pattern_length)]
        r: PatternLength,
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        weighted: bool,
    },
    /// Multiply the permutation EGF by its denominator.
    Egf {
        #[arg(long, value_parser = pattern_length)]
        r: PatternLength,
        #[arg(long)]
        nmax: usize,
    },
    /// Compare direct cluster enumeration with the cluster polynomials.
    Cluster {
        #[arg(long, value_parser = pattern_length)]
        r: PatternLength,
        #[arg(long)]
        kmax: usize,
    },
}

fn pattern_length(s: &str) -> Result<PatternLength, String> {
    let v: u32 = s.parse().map_err(|e| format!("{e}"))?;
    PatternLength::new(v).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Check,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn open_output(output: &Output) -> Result<Box<dyn Write>, Failure> {
    Ok(match &output.out {
        Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn multiplicities(raw: &[i64]) -> Result<incpat::MultiplicityVector, Failure> {
    canonicalize(raw).map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { m, r, output } => {
            let raw = m.clone();
            let mv = multiplicities(&m)?;
            let value = count_avoiders(&mv, r);
            let mut out = open_output(&output)?;
            Renderer::new("count", output.format)
                .param("m", raw)
                .param("r", r.get())
                .point(&mut out, mv.total(), &Value::Int(value.into()))?;
            out.flush()?;
        }
        Command::Weight { m, r, output } => {
            let raw = m.clone();
            let mv = multiplicities(&m)?;
            let value = weight_enumerator(&mv, r);
            let mut out = open_output(&output)?;
            Renderer::new("weight", output.format)
                .param("m", raw)
                .param("r", r.get())
                .point(&mut out, mv.total(), &Value::Poly(value))?;
            out.flush()?;
        }
        Command::Perm { r, nmax, output } => {
            let values: Vec<Value> = permutation_counts(nmax, r)
                .into_iter()
                .map(|v| Value::Int(BigInt::from(v)))
                .collect();
            let mut out = open_output(&output)?;
            Renderer::new("perm", output.format)
                .param("r", r.get())
                .param("nmax", nmax)
                .sequence(&mut out, &values)?;
            out.flush()?;
        }
        Command::Uniform {
            s,
            r,
            nmax,
            weighted,
            progress,
            output,
        } => {
            let mut values = Vec::with_capacity(nmax as usize + 1);
            if weighted {
                let mut e = UniformEnumerator::occurrences(s, r).map_err(|e| Failure::Usage(e.to_string()))?;
                for n in 0..=nmax {
                    values.push(Value::Poly(e.term(n)));
                    if progress {
                        eprintln!("n={n} done ({} states)", e.memo_len());
                    }
                }
            } else {
                let mut e = UniformEnumerator::avoiders(s, r).map_err(|e| Failure::Usage(e.to_string()))?;
                for n in 0..=nmax {
                    values.push(Value::Int(e.term(n)));
                    if progress {
                        eprintln!("n={n} done ({} states)", e.memo_len());
                    }
                }
            }
            let mut out = open_output(&output)?;
            Renderer::new("uniform", output.format)
                .param("s", s)
                .param("r", r.get())
                .param("nmax", nmax)
                .param("weighted", weighted)
                .sequence(&mut out, &values)?;
            out.flush()?;
        }
        Command::Verify { kind } => {
            let rep = match kind {
                VerifyKind::Series {
                    r,
                    nvars,
                    degree,
                    weighted,
                } => verify_against_recurrence(nvars, r, degree, weighted)
                    .map_err(|e| Failure::Usage(e.to_string()))?,
                VerifyKind::Egf { r, nmax } => egf_check(r, nmax),
                VerifyKind::Cluster { r, kmax } => verify_clusters(r, kmax),
            };
            println!("{rep}");
            if !rep.passed() {
                return Err(Failure::Check);
            }
        }
        Command::OeisCheck {
            bindings,
            data_dir,
            ids,
            max_terms,
        } => return oeis_check(bindings, data_dir, ids, max_terms),
    }
    Ok(())
}

fn oeis_check(
    bindings: Option<PathBuf>,
    data_dir: PathBuf,
    ids: Vec<String>,
    max_terms: Option<usize>,
) -> Result<(), Failure> {
    let table = match bindings {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            BindingTable::parse(&text).map_err(|e| Failure::Usage(e.to_string()))?
        }
        None => BindingTable::builtin(),
    };
    let selected: Vec<_> = if ids.is_empty() {
        table.iter().collect()
    } else {
        ids.iter()
            .map(|id| {
                table
                    .get(id)
                    .ok_or_else(|| Failure::Usage(format!("no binding for {id}")))
            })
            .collect::<Result<_, _>>()?
    };

    let mut all_ok = true;
    for binding in selected {
        let path = data_dir.join(format!("b{}.txt", binding.id.trim_start_matches('A')));
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => {
                println!("MISSING {}: {}: {e}", binding.id, path.display());
                all_ok = false;
                continue;
            }
        };
        let record = match parse_bfile(&binding.id, &text) {
            Ok(r) => r,
            Err(e) => {
                println!("INVALID {}: {}: {e}", binding.id, path.display());
                all_ok = false;
                continue;
            }
        };
        let rep = compare_sequence(binding, &record, max_terms.unwrap_or(usize::MAX))
            .map_err(|e| Failure::Usage(e.to_string()))?;
        println!("{rep}");
        all_ok &= rep.passed();
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
