//! Command-line front end. Exit codes: 0 success or PASS, 1 verification
//! FAIL, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cells::{classify_cell, survey, CellReport, SurveyOptions, SurveyResult, DEFAULT_MAX_N};
use crate::error::Error;
use crate::knuth::{knuth_class, knuth_neighbors};
use crate::perm::Permutation;
use crate::report::{load_cached, store_cached, survey_to_csv, survey_to_json};
use crate::smoothness::{is_smooth, is_smooth_oracle, smoothness_witness};
use crate::tableau::{rs_insert, StandardTableau};
use crate::verify::{self, VerificationOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "klcells", version, about = "Robinson-Schensted cells of S_n and Schubert smoothness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Insertion tableau and shape of a permutation.
    Rsk { perm: Permutation },
    /// Row or column reading word of a tableau.
    Word {
        #[arg(long, conflicts_with = "column", required_unless_present = "column")]
        row: bool,
        #[arg(long)]
        column: bool,
        tableau: StandardTableau,
    },
    /// Whether a permutation avoids 3412 and 4231.
    Smooth {
        perm: Permutation,
        /// Report the first forbidden occurrence with 1-based positions.
        #[arg(long)]
        witness: bool,
        /// Use the exhaustive scan instead of the quadratic one.
        #[arg(long)]
        oracle: bool,
    },
    /// Knuth classes and single moves.
    Knuth {
        #[command(subcommand)]
        action: KnuthAction,
    },
    /// Per-cell reports.
    Cell {
        #[command(subcommand)]
        action: CellAction,
    },
    /// Census of every cell of S_n.
    Survey {
        n: usize,
        #[arg(long, value_enum, default_value_t = SurveyFormat::Json)]
        format: SurveyFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Brute-force verification of a classification statement.
    Verify {
        check: Check,
        n: usize,
        /// Random samples for oracle-equivalence.
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// Length of sampled permutations for oracle-equivalence.
        #[arg(long, default_value_t = 12)]
        sample_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Family parameter for section5 (repeatable; default 3 and 4).
        #[arg(long = "k")]
        k: Vec<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Debug, Subcommand)]
enum KnuthAction {
    Class { perm: Permutation },
    Neighbors { perm: Permutation },
}

#[derive(Debug, Subcommand)]
enum CellAction {
    Classify {
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        tableau: Option<StandardTableau>,
        #[arg(long)]
        perm: Option<Permutation>,
        #[arg(long, value_enum, default_value_t = CellFormat::Text)]
        format: CellFormat,
    },
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Worker lanes over disjoint Lehmer-rank ranges.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value = "cache")]
    cache_dir: PathBuf,
    /// Neither read nor write the survey cache.
    #[arg(long)]
    no_cache: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SurveyFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CellFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Census,
    TheoremMain,
    Hohlweg,
    InverseSmooth,
    KnuthVsRsk,
    AdjacentOrder,
    OracleEquivalence,
    Section5,
    Section6,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Rsk { perm } => {
            let tab = rs_insert(&perm);
            writeln!(out, "tableau: {tab}")?;
            writeln!(out, "shape: {}", tab.shape())?;
        }
        Command::Word { row, tableau, .. } => {
            let word = if row { tableau.row_word() } else { tableau.column_word() };
            writeln!(out, "{word}")?;
        }
        Command::Smooth { perm, witness, oracle } => {
            let smooth = if oracle { is_smooth_oracle(&perm) } else { is_smooth(&perm) };
            writeln!(out, "{smooth}")?;
            if witness {
                match smoothness_witness(&perm) {
                    Some(occ) => {
                        let pos: Vec<String> = occ.positions.iter().map(usize::to_string).collect();
                        let vals: Vec<String> = occ.values(&perm).iter().map(u32::to_string).collect();
                        let name: String = occ.pattern.as_slice().iter().map(u32::to_string).collect();
                        writeln!(out, "pattern {name} at positions {} (values {})", pos.join(","), vals.join(","))?;
                    }
                    None => writeln!(out, "no occurrence of 3412 or 4231")?,
                }
            }
        }
        Command::Knuth { action } => {
            let members = match action {
                KnuthAction::Class { perm } => knuth_class(&perm),
                KnuthAction::Neighbors { perm } => knuth_neighbors(&perm),
            };
            for w in members {
                writeln!(out, "{w}")?;
            }
        }
        Command::Cell { action: CellAction::Classify { tableau, perm, format } } => {
            let tableau = match (tableau, perm) {
                (Some(t), _) => t,
                (None, Some(w)) => rs_insert(&w),
                (None, None) => return Err(CliError::Usage("need --tableau or --perm".into())),
            };
            let report = classify_cell(&tableau);
            match format {
                CellFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?
                }
                CellFormat::Text => write_cell_text(out, &report)?,
            }
        }
        Command::Survey { n, format, out: path, run } => {
            let result = obtain_survey(n, &run, err)?;
            let text = match format {
                SurveyFormat::Json => survey_to_json(&result),
                SurveyFormat::Csv => survey_to_csv(&result),
            };
            match path {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Verify { check, n, samples, sample_n, seed, k, run } => {
            if n == 0 || n > run.max_n {
                return Err(Error::SurveyRange { n, max: run.max_n }.into());
            }
            warn_large(n, err)?;
            let outcome = run_check(check, n, samples, sample_n, seed, &k, &run, err)?;
            write!(out, "{outcome}")?;
            return Ok(if outcome.passed() { EXIT_OK } else { EXIT_FAIL });
        }
    }
    Ok(EXIT_OK)
}

fn write_cell_text(out: &mut dyn Write, r: &CellReport) -> std::io::Result<()> {
    writeln!(out, "tableau: {}", r.tableau)?;
    writeln!(out, "shape: {}", r.shape)?;
    writeln!(out, "size: {}", r.size)?;
    writeln!(out, "smooth: {}", r.smooth_count)?;
    writeln!(out, "nonsmooth: {}", r.nonsmooth_count)?;
    writeln!(out, "classification: {}", r.classification)?;
    let show = |s: &Option<Permutation>| s.as_ref().map_or_else(|| "-".to_string(), Permutation::to_string);
    writeln!(out, "sample smooth: {}", show(&r.sample_smooth))?;
    writeln!(out, "sample nonsmooth: {}", show(&r.sample_nonsmooth))
}

fn warn_large(n: usize, err: &mut dyn Write) -> std::io::Result<()> {
    if n > DEFAULT_MAX_N {
        writeln!(err, "warning: n = {n} enumerates {n}! permutations; expect factorial growth in runtime")?;
    }
    Ok(())
}

fn obtain_survey(n: usize, run: &RunArgs, err: &mut dyn Write) -> Result<SurveyResult, CliError> {
    let cache: Option<&Path> = (!run.no_cache).then_some(run.cache_dir.as_path());
    if let Some(hit) = cache.and_then(|dir| load_cached(dir, n)) {
        return Ok(hit);
    }
    warn_large(n, err)?;
    let result = survey(n, SurveyOptions { jobs: run.jobs, max_n: run.max_n })?;
    if let Some(dir) = cache {
        if let Err(e) = store_cached(dir, &result) {
            writeln!(err, "warning: could not write survey cache: {e}")?;
        }
    }
    Ok(result)
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    check: Check,
    n: usize,
    samples: u64,
    sample_n: usize,
    seed: u64,
    ks: &[usize],
    run: &RunArgs,
    err: &mut dyn Write,
) -> Result<VerificationOutcome, CliError> {
    Ok(match check {
        Check::Census => verify::verify_census(&obtain_survey(n, run, err)?),
        Check::TheoremMain => verify::verify_theorem_main(&obtain_survey(n, run, err)?),
        Check::Hohlweg => verify::verify_hohlweg(n)?,
        Check::InverseSmooth => verify::verify_inverse_smooth(n)?,
        Check::KnuthVsRsk => verify::verify_knuth_vs_rsk(n)?,
        Check::AdjacentOrder => verify::verify_adjacent_order(n)?,
        Check::OracleEquivalence => {
            if sample_n == 0 {
                return Err(CliError::Usage("--sample-n must be at least 1".into()));
            }
            verify::verify_oracle_equivalence(n, samples, sample_n, seed)?
        }
        Check::Section5 => {
            let ks = if ks.is_empty() { vec![3, 4] } else { ks.to_vec() };
            verify::verify_section5(&obtain_survey(n, run, err)?, &ks)?
        }
        Check::Section6 => verify::verify_section6(&obtain_survey(n, run, err)?),
    })
}
