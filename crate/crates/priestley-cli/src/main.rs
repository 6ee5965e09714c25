//! Command-line front end: parse a JSON input document (poset, lattice, or
//! space), run check suites or emit artifacts, and report results as
//! schema-versioned JSON or DOT. Exit codes: 0 all checks pass, 1 a check
//! failed (the report carries the witness), 2 input or usage error.

mod emit;
mod input;
mod report;
mod suites;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use priestley::Bounds;

use emit::{Artifact, Format, Target};
use input::{parse_input, ParsedInput, UsageError, DEFAULT_SEED};
use suites::Suite;

#[derive(Parser)]
#[command(
    name = "priestley",
    version,
    about = "Priestley duality and Hofmann–Mislove checks for finite lattices, \
             posets, and spaces, plus two finitely described infinite frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    /// Duality-side checks: reconstruction, filter correspondence,
    /// separation, spatiality, the prime spectrum.
    Dual,
    /// Scott-open / compact-saturated checks.
    Hm,
    /// Both.
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Dual => Suite::Dual,
            SuiteArg::Hm => Suite::Hm,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Dot => Format::Dot,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    /// The Priestley dual (of the lattice, the poset's downset lattice,
    /// or the space's open-set frame).
    Dual,
    /// The topological side (the space itself, a poset's upset topology,
    /// or the spectral companion of a lattice's dual).
    Space,
    /// The full check report for --suite all.
    Report,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Dual => Target::Dual,
            TargetArg::Space => Target::Space,
            TargetArg::Report => Target::Report,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite on an input document and print the report as JSON.
    Check {
        /// Input file (JSON); reads stdin when omitted.
        input: Option<PathBuf>,
        /// Which suite to run.
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Raise the subset-enumeration and Scott-scan size caps to this value.
        #[arg(long)]
        max_size: Option<usize>,
        /// Seed for sampled cross-checks.
        #[arg(long)]
        seed: Option<u64>,
        /// Include wall-clock timings in the report (breaks byte determinism).
        #[arg(long)]
        timings: bool,
    },
    /// Print the Priestley dual of the input (same as emit --target dual).
    Dual {
        /// Input file (JSON); reads stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Print the topological side of the input (same as emit --target space).
    Space {
        /// Input file (JSON); reads stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Run the symbolic fixture battery (the ω+1 chain and the cofinite
    /// frame over ℕ) and print the report as JSON.
    Fixtures {
        /// Seed for sampled cross-checks.
        #[arg(long)]
        seed: Option<u64>,
        /// Include wall-clock timings in the report (breaks byte determinism).
        #[arg(long)]
        timings: bool,
    },
    /// Emit an artifact for the input: its dual, its space, or the full
    /// check report.
    Emit {
        /// Input file (JSON); reads stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        timings: bool,
    },
}

fn read_document(
    path: &Option<PathBuf>,
    max_size: Option<usize>,
    seed: Option<u64>,
) -> Result<ParsedInput, UsageError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| UsageError(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| UsageError(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let mut parsed = parse_input(&text)?;
    if let Some(v) = max_size {
        parsed.bounds.enumeration = v;
        parsed.bounds.scott = v;
    }
    if let Some(s) = seed {
        parsed.seed = s;
    }
    Ok(parsed)
}

fn exit_code(artifact: Artifact) -> i32 {
    print!("{}", artifact.text);
    if artifact.failed {
        1
    } else {
        0
    }
}

fn dispatch(cli: Cli) -> Result<i32, UsageError> {
    match cli.command {
        Command::Check { input, suite, max_size, seed, timings } => {
            let parsed = read_document(&input, max_size, seed)?;
            let report = suites::run_suite(&parsed, suite.into(), timings)?;
            print!("{}", report.render());
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Fixtures { seed, timings } => {
            let report =
                suites::run_fixtures(&Bounds::default(), seed.unwrap_or(DEFAULT_SEED), timings);
            print!("{}", report.render());
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Dual { input, format, max_size } => {
            let parsed = read_document(&input, max_size, None)?;
            let artifact = emit::emit(&parsed, Target::Dual, format.into(), false)?;
            Ok(exit_code(artifact))
        }
        Command::Space { input, format, max_size } => {
            let parsed = read_document(&input, max_size, None)?;
            let artifact = emit::emit(&parsed, Target::Space, format.into(), false)?;
            Ok(exit_code(artifact))
        }
        Command::Emit { input, target, format, max_size, seed, timings } => {
            let parsed = read_document(&input, max_size, seed)?;
            let artifact = emit::emit(&parsed, target.into(), format.into(), timings)?;
            Ok(exit_code(artifact))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
