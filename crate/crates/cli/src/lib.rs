//! Command-line front end for `iposet-core`.
//!
//! [`run`] executes one invocation in-process and returns the exit status
//! with the captured output: 0 for success or a true predicate, 1 for a
//! false predicate, 2 for usage and validation errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use iposet_core::enumerate::{census_with, CensusClass, CensusOptions};
use iposet_core::forbidden::{minimal_forbidden, minimal_forbidden_extended};
use iposet_core::recognition::{
    build_witness, is_interval_order, is_sp, is_step_sequence,
};
use iposet_core::{format, glue, gp_level, gp_term, is_gp, is_isomorphic, par, subsumes, Iposet};

#[derive(Parser, Debug)]
#[command(name = "iposet", version, about = "Posets with interfaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check that a file holds a valid iposet.
    Validate { file: PathBuf },
    /// Gluing composition A ∗ B.
    Glue {
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Parallel composition A ⊗ B.
    Par {
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Opposite iposet.
    Op {
        file: PathBuf,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Are A and B isomorphic?
    Iso { a: PathBuf, b: PathBuf },
    /// Does A subsume B?
    Subsume { a: PathBuf, b: PathBuf },
    /// Class membership test.
    Recognize {
        #[arg(long, value_enum)]
        class: Class,
        file: PathBuf,
    },
    /// Hierarchy level of a gp-iposet.
    Level { file: PathBuf },
    /// A gp term for the iposet.
    Decompose { file: PathBuf },
    /// Counts by class and size, as TSV.
    Census {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated subset of P,SP,IO,GP,IP,GPI.
        #[arg(long, value_delimiter = ',')]
        classes: Option<Vec<String>>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Raise size caps to 10 (posets) and 8 (iposets).
        #[arg(long)]
        extended: bool,
        /// Largest size whose gp counts are re-derived by closure generation.
        #[arg(long)]
        closure_check: Option<usize>,
    },
    /// Minimal non-gp posets up to a size.
    Forbidden {
        #[arg(long)]
        max_points: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        extended: bool,
    },
    /// The witness poset P_n.
    Witness {
        n: usize,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Class {
    Sp,
    Interval,
    Step,
    Gp,
    Consistent,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn predicate(value: bool) -> Self {
        Outcome {
            code: if value { 0 } else { 1 },
            stdout: format!("{value}\n"),
            stderr: String::new(),
        }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        let first = msg.to_string();
        let line = first.lines().find(|l| !l.trim().is_empty()).unwrap_or("error");
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("{}\n", line.trim()),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome::error(e.render()),
            };
        }
    };
    match execute(cli.cmd) {
        Ok(outcome) => outcome,
        Err(msg) => Outcome::error(format!("error: {msg}")),
    }
}

fn read(path: &Path) -> Result<Iposet, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(p: &Iposet, out: Option<PathBuf>) -> Result<Outcome, String> {
    let text = format::write(p);
    match out {
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, String> {
    match jobs {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| e.to_string())?;
            Ok(pool.install(f))
        }
    }
}

fn execute(cmd: Cmd) -> Result<Outcome, String> {
    match cmd {
        Cmd::Validate { file } => {
            let p = read(&file)?;
            Ok(Outcome::ok(format!(
                "valid: {} points, {} sources, {} targets\n",
                p.len(),
                p.dom(),
                p.cod()
            )))
        }
        Cmd::Glue { a, b, out } => {
            let r = glue(&read(&a)?, &read(&b)?).map_err(|e| e.to_string())?;
            emit(&r, out)
        }
        Cmd::Par { a, b, out } => {
            let r = par(&read(&a)?, &read(&b)?).map_err(|e| e.to_string())?;
            emit(&r, out)
        }
        Cmd::Op { file, out } => emit(&read(&file)?.opposite(), out),
        Cmd::Iso { a, b } => Ok(Outcome::predicate(
            is_isomorphic(&read(&a)?, &read(&b)?).is_some(),
        )),
        Cmd::Subsume { a, b } => Ok(Outcome::predicate(subsumes(&read(&a)?, &read(&b)?).is_some())),
        Cmd::Recognize { class, file } => {
            let p = read(&file)?;
            Ok(Outcome::predicate(match class {
                Class::Sp => is_sp(&p),
                Class::Interval => is_interval_order(&p),
                Class::Step => is_step_sequence(&p),
                Class::Gp => is_gp(&p),
                Class::Consistent => p.is_interface_consistent(),
            }))
        }
        Cmd::Level { file } => Ok(match gp_level(&read(&file)?) {
            Some(l) => Outcome::ok(format!("{l}\n")),
            None => Outcome {
                code: 1,
                stdout: "none\n".into(),
                stderr: String::new(),
            },
        }),
        Cmd::Decompose { file } => Ok(match gp_term(&read(&file)?) {
            Some(t) => Outcome::ok(format!("{t}\n")),
            None => Outcome {
                code: 1,
                stdout: "none\n".into(),
                stderr: String::new(),
            },
        }),
        Cmd::Census {
            max_n,
            classes,
            jobs,
            extended,
            closure_check,
        } => {
            let mut opts = CensusOptions::new(max_n);
            if let Some(list) = classes {
                opts.classes = list
                    .iter()
                    .map(|c| c.parse::<CensusClass>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
            }
            opts.extended = extended;
            if let Some(c) = closure_check {
                opts.closure_check = c;
            }
            let table = with_jobs(jobs, || census_with(&opts))?.map_err(|e| e.to_string())?;
            Ok(Outcome::ok(table.to_tsv()))
        }
        Cmd::Forbidden {
            max_points,
            jobs,
            extended,
        } => {
            let found = with_jobs(jobs, || {
                if extended {
                    minimal_forbidden_extended(max_points)
                } else {
                    minimal_forbidden(max_points)
                }
            })?
            .map_err(|e| e.to_string())?;
            let mut out = format!(
                "# {} minimal forbidden posets with at most {max_points} points\n",
                found.len()
            );
            for p in &found {
                writeln!(out, "{}", format::write(p).trim_end()).unwrap();
            }
            Ok(Outcome::ok(out))
        }
        Cmd::Witness { n, out } => {
            if n == 0 {
                return Err("witness index starts at 1".into());
            }
            // |P_1| = 2 and |P_{k+1}| = 1 + 2|P_k|
            let size = (1..n).try_fold(2usize, |s, _| s.checked_mul(2).map(|d| d + 1));
            if size.map_or(true, |s| s > iposet_core::MAX_POINTS) {
                return Err(format!("witness {n} exceeds {} points", iposet_core::MAX_POINTS));
            }
            emit(&build_witness(n), out)
        }
    }
}
