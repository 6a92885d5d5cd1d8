//! Command-line front end.
//!
//! Input is one p-value per line (blank lines ignored), or a CSV file with a
//! header when `--column` names the column to read. Output indices are
//! 1-based and always follow input order. Numbers are printed in the
//! shortest form that parses back to the same `f64`.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adjust::{adjust_hochberg, adjust_hommel, reject_hochberg_at, reject_hommel_at};
use crate::bench::{run_benchmark, write_csv, BenchConfig, BenchMethod};
use crate::error::Error;
use crate::jumps::find_jumps;
use crate::schedule::h_at;
use crate::study::PValueStudy;
use crate::weights::{StepWeights, WeightKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hommel",
    version,
    about = "Hommel and Hochberg familywise error control"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write adjusted p-values as `index,p,adjusted`.
    Adjust {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        procedure: ProcedureArgs,
    },
    /// List the hypotheses rejected at a given level.
    Reject {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        procedure: ProcedureArgs,
        #[arg(long)]
        alpha: f64,
    },
    /// Write the jump levels of h(alpha) as `i,alpha_star,alpha`.
    Jumps {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = WeightsArg::Simes)]
        weights: WeightsArg,
    },
    /// Time the procedures on squared-uniform p-values, CSV to stdout.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file; `-` or absent reads stdin.
    input: Option<PathBuf>,
    /// Read a CSV with a header and take p-values from this column (name or
    /// 1-based position).
    #[arg(long)]
    column: Option<String>,
}

#[derive(Debug, Args)]
struct ProcedureArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Hommel)]
    method: MethodArg,
    /// Local-test constants; ignored by hochberg.
    #[arg(long, value_enum, default_value_t = WeightsArg::Simes)]
    weights: WeightsArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Hommel,
    Hochberg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WeightsArg {
    Simes,
    Robust,
}

impl From<WeightsArg> for WeightKind {
    fn from(w: WeightsArg) -> Self {
        match w {
            WeightsArg::Simes => WeightKind::Simes,
            WeightsArg::Robust => WeightKind::Robust,
        }
    }
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [1_000usize, 10_000, 100_000, 1_000_000, 10_000_000])]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = BenchMethod::ALL)]
    methods: Vec<BenchMethod>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = crate::reference::QUADRATIC_LIMIT)]
    quadratic_cap: usize,
    /// Run hommel-quadratic above the cap anyway.
    #[arg(long)]
    allow_over_cap: bool,
    /// Skip checking fast against quadratic results before timing.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Debug)]
struct CliError(String);

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(CliError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Adjust { input, procedure } => {
            let study = read_study(&input, stdin)?;
            let result = match procedure.method {
                MethodArg::Hochberg => adjust_hochberg(&study),
                MethodArg::Hommel => {
                    let weights = StepWeights::new(procedure.weights.into(), study.m())?;
                    let schedule = find_jumps(&study, &weights)?;
                    adjust_hommel(&study, &schedule, &weights)?
                }
            };
            writeln!(out, "index,p,adjusted")?;
            for (i, (p, a)) in study.raw().iter().zip(result.adjusted()).enumerate() {
                writeln!(out, "{},{},{}", i + 1, p, a)?;
            }
        }
        Command::Reject {
            input,
            procedure,
            alpha,
        } => {
            crate::check_alpha(alpha)?;
            let study = read_study(&input, stdin)?;
            let rejected = match procedure.method {
                MethodArg::Hochberg => reject_hochberg_at(&study, alpha)?,
                MethodArg::Hommel => {
                    let weights = StepWeights::new(procedure.weights.into(), study.m())?;
                    let schedule = find_jumps(&study, &weights)?;
                    writeln!(out, "# h(alpha)={}", h_at(&schedule, alpha))?;
                    reject_hommel_at(&study, &schedule, &weights, alpha)?
                }
            };
            for i in rejected.indices() {
                writeln!(out, "{}", i + 1)?;
            }
        }
        Command::Jumps { input, weights } => {
            let study = read_study(&input, stdin)?;
            let weights = StepWeights::new(weights.into(), study.m())?;
            let schedule = find_jumps(&study, &weights)?;
            writeln!(out, "i,alpha_star,alpha")?;
            for (i, (star, a)) in schedule
                .alpha_star()
                .iter()
                .zip(schedule.alpha())
                .enumerate()
            {
                writeln!(out, "{},{},{}", i + 1, star, a)?;
            }
        }
        Command::Bench(args) => {
            let config = BenchConfig {
                sizes: args.sizes,
                methods: args.methods,
                seed: args.seed,
                repetitions: args.reps,
                quadratic_cap: args.quadratic_cap,
                allow_over_cap: args.allow_over_cap,
                verify: !args.no_verify,
            };
            let records = run_benchmark(&config)?;
            write_csv(&mut *out, &records)?;
        }
    }
    Ok(())
}

fn read_study(args: &InputArgs, stdin: &mut dyn Read) -> CliResult<PValueStudy> {
    let text = match &args.input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf)?;
            buf
        }
    };
    let values = match &args.column {
        Some(column) => parse_csv_column(&text, column)?,
        None => parse_lines(&text)?,
    };
    let raw: Vec<f64> = values.iter().map(|&(_, p)| p).collect();
    PValueStudy::new(&raw).map_err(|e| match e {
        Error::InvalidPValue { index, value } => CliError(format!(
            "line {}: p-value {value} is outside [0, 1]",
            values[index].0
        )),
        Error::EmptyInput => CliError("input contains no p-values".into()),
        other => other.into(),
    })
}

/// `(line number, value)` pairs.
fn parse_lines(text: &str) -> CliResult<Vec<(usize, f64)>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(n, line)| parse_value(line.trim(), n + 1))
        .collect()
}

fn parse_csv_column(text: &str, column: &str) -> CliResult<Vec<(usize, f64)>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError(format!("line 1: {e}")))?
        .clone();
    let position = headers
        .iter()
        .position(|h| h == column)
        .or_else(|| {
            column
                .parse::<usize>()
                .ok()
                .filter(|&k| k >= 1 && k <= headers.len())
                .map(|k| k - 1)
        })
        .ok_or_else(|| CliError(format!("no column '{column}' in header")))?;

    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            CliError(format!("line {line}: {e}"))
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let field = record
            .get(position)
            .ok_or_else(|| CliError(format!("line {line}: missing column '{column}'")))?;
        values.push(parse_value(field, line)?);
    }
    Ok(values)
}

fn parse_value(field: &str, line: usize) -> CliResult<(usize, f64)> {
    field
        .parse::<f64>()
        .map(|p| (line, p))
        .map_err(|_| CliError(format!("line {line}: cannot parse '{field}' as a p-value")))
}
