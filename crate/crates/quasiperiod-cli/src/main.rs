use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasiperiod::bench::{emit_csv, run_benchmark, BenchConfig, Distribution};
use quasiperiod::indet::{pcind_trace, rooted_cover_check, sliding_cover_check};
use quasiperiod::prefix::{
    border_array_from_prefix_table, check_feasible, format_csv, parse_csv, prefix_table_indet, prefix_table_regular,
};
use quasiperiod::regular::pcr_trace;
use quasiperiod::strings::{parse_indeterminate, parse_regular};
use quasiperiod::{pcind, pcr, PrefixTable};

/// Covers of regular and indeterminate strings, computed from prefix tables.
///
/// Results go to stdout as comma-separated integers; diagnostics go to stderr.
/// Exit status: 0 on success, 1 on bad input data, 2 on bad arguments.
#[derive(Parser)]
#[command(name = "quasiperiod", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the prefix table of a string.
    Prefix(PrefixArgs),
    /// Print the cover array of a regular string.
    Covers(CoversArgs),
    /// Print the rooted cover lengths of a whole (indeterminate) string.
    Rooted(RootedArgs),
    /// Print whether a string has a sliding cover of length k.
    Sliding(SlidingArgs),
    /// Check that an array is a feasible prefix table.
    Validate(ValidateArgs),
    /// Run the candidate-loop scaling benchmark and write CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PrefixInput {
    /// Regular string, letters [a-zA-Z0-9].
    #[arg(long)]
    string: Option<String>,
    /// Indeterminate string, e.g. "a[ab]b".
    #[arg(long)]
    indet: Option<String>,
}

#[derive(Args)]
struct PrefixArgs {
    #[command(flatten)]
    input: PrefixInput,
    /// Print the border array instead (regular strings only).
    #[arg(long, requires = "string")]
    border_array: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RegularInput {
    /// Regular string, letters [a-zA-Z0-9].
    #[arg(long, alias = "regular")]
    string: Option<String>,
    /// Prefix table as comma-separated integers.
    #[arg(long)]
    from_pi: Option<String>,
}

#[derive(Args)]
struct CoversArgs {
    #[command(flatten)]
    input: RegularInput,
    /// After the cover array, print one `start;first;end;maxlive` line per range.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct IndetInput {
    /// Indeterminate string, e.g. "[ab]c[ac][ac]ac".
    #[arg(long, alias = "indet")]
    string: Option<String>,
    /// Prefix table as comma-separated integers.
    #[arg(long)]
    from_pi: Option<String>,
}

#[derive(Args)]
struct RootedArgs {
    #[command(flatten)]
    input: IndetInput,
    /// After the cover lengths, print one `i;maxlive;candidates` line per position.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct SlidingArgs {
    /// Indeterminate string, e.g. "[ab]c[ac][ac]ca".
    #[arg(long, alias = "indet")]
    string: String,
    /// Cover length.
    #[arg(long)]
    k: usize,
    /// Check for a rooted cover instead.
    #[arg(long)]
    rooted: bool,
}

#[derive(Args)]
struct ValidateArgs {
    /// Array as comma-separated integers.
    #[arg(long)]
    from_pi: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dist {
    /// Prefix tables of random strings over four letters, random nonempty sets.
    Strings,
    /// Independent uniform entries.
    Uniform,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated string lengths.
    #[arg(long, default_value = "100,200,400,800,1600,3200,6400,12800,25600")]
    lengths: String,
    /// Random inputs per length.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use the prefix table of a^n instead of random input.
    #[arg(long, conflicts_with = "dist")]
    unary: bool,
    #[arg(long, value_enum, default_value_t = Dist::Strings)]
    dist: Dist,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Input(#[from] quasiperiod::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
}

fn table(csv: &str) -> Result<PrefixTable, Failure> {
    Ok(PrefixTable::new(parse_csv(csv)?)?)
}

fn prefix(args: PrefixArgs) -> Result<String, Failure> {
    if let Some(text) = args.input.string {
        let pi = prefix_table_regular(&parse_regular(&text)?);
        if args.border_array {
            return Ok(border_array_from_prefix_table(&pi).to_string());
        }
        return Ok(pi.to_string());
    }
    let text = args.input.indet.expect("clap enforces one input");
    Ok(prefix_table_indet(&parse_indeterminate(&text)?).to_string())
}

fn covers(args: CoversArgs) -> Result<String, Failure> {
    let pi = match (args.input.string, args.input.from_pi) {
        (Some(text), _) => prefix_table_regular(&parse_regular(&text)?),
        (_, Some(csv)) => table(&csv)?,
        _ => unreachable!("clap enforces one input"),
    };
    if !args.trace {
        return Ok(pcr(&pi).to_string());
    }
    let (gamma, trace) = pcr_trace(&pi);
    let mut lines = vec![gamma.to_string()];
    for t in trace {
        let maxlive: Vec<String> = t.maxlive.iter().map(isize::to_string).collect();
        lines.push(format!("{};{};{};{}", t.start, t.first, t.end, maxlive.join(",")));
    }
    Ok(lines.join("\n"))
}

fn rooted(args: RootedArgs) -> Result<String, Failure> {
    let pi = match (args.input.string, args.input.from_pi) {
        (Some(text), _) => prefix_table_indet(&parse_indeterminate(&text)?),
        (_, Some(csv)) => table(&csv)?,
        _ => unreachable!("clap enforces one input"),
    };
    let mut lines = vec![pcind(&pi).to_string()];
    if args.trace {
        for row in pcind_trace(&pi) {
            let maxlive: Vec<String> = row.maxlive.iter().map(isize::to_string).collect();
            lines.push(format!("{};{};{}", row.i, maxlive.join(","), format_csv(&row.candidates)));
        }
    }
    Ok(lines.join("\n"))
}

fn sliding(args: SlidingArgs) -> Result<String, Failure> {
    let x = parse_indeterminate(&args.string)?;
    let found = if args.rooted { rooted_cover_check(&x, args.k)? } else { sliding_cover_check(&x, args.k)? };
    Ok(found.to_string())
}

fn validate(args: ValidateArgs) -> Result<String, Failure> {
    check_feasible(&parse_csv(&args.from_pi)?)?;
    Ok("true".to_string())
}

fn bench(args: BenchArgs) -> Result<Option<String>, Failure> {
    let distribution = match (args.unary, args.dist) {
        (true, _) => Distribution::Unary,
        (false, Dist::Strings) => Distribution::Strings,
        (false, Dist::Uniform) => Distribution::Uniform,
    };
    let cfg = BenchConfig { lengths: parse_csv(&args.lengths)?, trials: args.trials, seed: args.seed, distribution };
    let report = run_benchmark(&cfg)?;
    match args.out {
        Some(path) => {
            emit_csv(&report, BufWriter::new(File::create(&path)?))?;
            Ok(None)
        }
        None => {
            let mut out = Vec::new();
            emit_csv(&report, &mut out)?;
            Ok(Some(String::from_utf8(out).expect("ascii").trim_end().to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Prefix(a) => prefix(a).map(Some),
        Command::Covers(a) => covers(a).map(Some),
        Command::Rooted(a) => rooted(a).map(Some),
        Command::Sliding(a) => sliding(a).map(Some),
        Command::Validate(a) => validate(a).map(Some),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(text) => {
            if let Some(text) = text {
                let mut stdout = io::stdout().lock();
                if writeln!(stdout, "{text}").is_err() {
                    return ExitCode::FAILURE;
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::FAILURE
        }
    }
}
