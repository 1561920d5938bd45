//! Command-line surface: counting, enumeration, bijection mapping,
//! triangle/series generation, and the full verification run.
//!
//! Identical invocations produce byte-identical output. Every error path
//! exits nonzero and writes a single-line JSON object to stderr.

/// `println!` that tolerates a closed stdout, so long enumerations can be
/// piped into `head` without a panic; exits with the conventional SIGPIPE
/// code on a broken pipe.
macro_rules! outln {
    ($($arg:tt)*) => { crate::write_stdout(format_args!($($arg)*), true) };
}

/// [`outln!`] without the trailing newline.
macro_rules! out {
    ($($arg:tt)*) => { crate::write_stdout(format_args!($($arg)*), false) };
}

mod verify;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fibperm_core::biject::{self, Family};
use fibperm_core::dyck;
use fibperm_core::fountain;
use fibperm_core::partition;
use fibperm_core::perm::{self, Pattern, PermClass, Permutation};
use fibperm_core::polyomino;
use fibperm_core::series;
use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

/// Environment variable overriding the brute-force oracle bound.
const ORACLE_BOUND_VAR: &str = "FIBPERM_ORACLE_BOUND";

fn write_stdout(args: fmt::Arguments, newline: bool) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let result = out.write_fmt(args).and_then(|()| {
        if newline {
            out.write_all(b"\n")
        } else {
            Ok(())
        }
    });
    if let Err(e) = result {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(141);
        }
        report(&CliError::new("io", e));
        std::process::exit(1);
    }
}

#[derive(Parser)]
#[command(
    name = "fibperm",
    version,
    about = "Pattern classes counted by odd-indexed Fibonacci numbers: enumeration, bijections, triangles",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count a permutation class or an object family at size n
    Count(SelectArgs),
    /// List the members of a class or family at size n
    Enumerate(SelectArgs),
    /// Apply one of the four bijections to a single object
    Map {
        /// Family: dyck | fountain | partition | polyomino
        #[arg(long)]
        family: String,
        /// forward maps an object to its permutation; inverse goes back
        #[arg(long)]
        direction: Direction,
        /// Textual object, or "-" to read it from stdin
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print a positional triangle (rows n, columns k)
    Triangle {
        /// Class selector: 321-4123 | 321-21_43 | 321-3412 | 231-3124
        #[arg(long)]
        which: String,
        /// Number of rows
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the class counting sequence
    Series {
        /// Expansion order: gf prints n + 1 coefficients, fib-odd n values
        #[arg(long)]
        n: usize,
        /// gf: coefficients c_0..c_n of the counting series; fib-odd: the
        /// values F(2k-1) for k = 1..n
        #[arg(long, value_enum, default_value_t = SeriesKind::Gf)]
        which: SeriesKind,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the full verification matrix and exit nonzero on any failure
    Verify {
        /// Cap on the sizes exercised by each check
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Directory holding triangle_*.csv reference files (defaults to the
        /// copies embedded at build time)
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SelectArgs {
    /// Class selector: 321-4123 | 321-21_43 | 321-3412 | 231-3124
    #[arg(long, conflicts_with_all = ["patterns", "family"])]
    class: Option<String>,
    /// Comma-separated pattern list, e.g. "321,21-4-3"
    #[arg(long, conflicts_with = "family")]
    patterns: Option<String>,
    /// Object family: dyck | fountain | partition | polyomino
    #[arg(long)]
    family: Option<String>,
    /// Size: permutation size, semilength, base coins, elements, or area
    #[arg(long)]
    n: usize,
    /// Height bound for the dyck family
    #[arg(long, default_value_t = 3)]
    hmax: u32,
    /// pruned: backtracking generator; filter: brute-force oracle (bounded)
    #[arg(long, value_enum, default_value_t = Generator::Pruned)]
    generator: Generator,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Generator {
    Pruned,
    Filter,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Gf,
    FibOdd,
}

/// An error with the machine-readable kind it reports on stderr.
struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl fmt::Display) -> Self {
        CliError {
            kind,
            message: message.to_string(),
        }
    }

    fn usage(message: impl fmt::Display) -> Self {
        CliError::new("usage", message)
    }

    fn parse(message: impl fmt::Display) -> Self {
        CliError::new("parse", message)
    }
}

impl From<perm::PermError> for CliError {
    fn from(e: perm::PermError) -> Self {
        let kind = match e {
            perm::PermError::OracleBoundExceeded { .. } => "bound",
            perm::PermError::Parse { .. } => "parse",
            _ => "invalid-input",
        };
        CliError::new(kind, e)
    }
}

impl From<biject::BijectError> for CliError {
    fn from(e: biject::BijectError) -> Self {
        let kind = match e {
            biject::BijectError::OutOfClass { .. } => "out-of-class",
            biject::BijectError::Precondition(_) => "precondition",
        };
        CliError::new(kind, e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                out!("{e}");
                return ExitCode::SUCCESS;
            }
            report(&CliError::usage(e.render()));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            report(&e);
            ExitCode::FAILURE
        }
    }
}

fn report(e: &CliError) {
    let line = serde_json::json!({
        "kind": e.kind,
        "message": e.message.trim(),
    });
    eprintln!("{line}");
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count(args) => count(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Map {
            family,
            direction,
            input,
            format,
        } => map(&family, direction, &input, format),
        Command::Triangle { which, n, format } => triangle(&which, n, format),
        Command::Series { n, which, format } => print_series(n, which, format),
        Command::Verify { max_n, fixtures } => verify::run(max_n, fixtures.as_deref()),
    }
}

fn oracle_bound() -> Result<usize, CliError> {
    match std::env::var(ORACLE_BOUND_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::usage(format!("{ORACLE_BOUND_VAR} must be an integer"))),
        Err(_) => Ok(perm::DEFAULT_ORACLE_BOUND),
    }
}

fn parse_patterns(text: &str) -> Result<Vec<Pattern>, CliError> {
    text.split(',')
        .map(|t| Pattern::from_str(t).map_err(CliError::from))
        .collect()
}

/// Resolves --class / --patterns into a pattern list.
fn class_patterns(args: &SelectArgs) -> Result<Vec<Pattern>, CliError> {
    if let Some(selector) = &args.class {
        let class = PermClass::from_selector(selector)
            .ok_or_else(|| CliError::usage(format!("unknown class selector {selector:?}")))?;
        Ok(class.patterns())
    } else if let Some(patterns) = &args.patterns {
        parse_patterns(patterns)
    } else {
        Err(CliError::usage(
            "one of --class, --patterns or --family is required",
        ))
    }
}

fn class_members(args: &SelectArgs) -> Result<Vec<Permutation>, CliError> {
    let pats = class_patterns(args)?;
    match args.generator {
        Generator::Pruned => Ok(perm::avoiders_pruned(args.n, &pats)),
        Generator::Filter => Ok(perm::avoiders_filter_bounded(
            args.n,
            &pats,
            oracle_bound()?,
        )?),
    }
}

fn require_positive(n: usize) -> Result<(), CliError> {
    if n == 0 {
        Err(CliError::usage("--n must be at least 1"))
    } else {
        Ok(())
    }
}

fn count(args: SelectArgs) -> Result<(), CliError> {
    require_positive(args.n)?;
    let total = match &args.family {
        Some(f) => family_lines(f, args.n, args.hmax, Format::Plain)?.len(),
        None => class_members(&args)?.len(),
    };
    outln!("{total}");
    Ok(())
}

fn enumerate(args: SelectArgs) -> Result<(), CliError> {
    require_positive(args.n)?;
    let lines = match &args.family {
        Some(f) => family_lines(f, args.n, args.hmax, args.format)?,
        None => {
            let members = class_members(&args)?;
            match args.format {
                Format::Json => members
                    .iter()
                    .map(|p| serde_json::to_string(p).expect("serializable"))
                    .collect(),
                _ => members.iter().map(Permutation::to_string).collect(),
            }
        }
    };
    match args.format {
        Format::Json => outln!("[{}]", lines.join(",")),
        _ => {
            for line in lines {
                outln!("{line}");
            }
        }
    }
    Ok(())
}

/// One output line per family object.
fn family_lines(
    family: &str,
    n: usize,
    hmax: u32,
    format: Format,
) -> Result<Vec<String>, CliError> {
    let family = Family::from_selector(family)
        .ok_or_else(|| CliError::usage(format!("unknown family {family:?}")))?;
    require_positive(n)?;
    if family == Family::Dyck && hmax == 0 {
        return Err(CliError::usage("--hmax must be at least 1"));
    }
    let json = matches!(format, Format::Json);
    fn render<T: fmt::Display + serde::Serialize>(items: Vec<T>, json: bool) -> Vec<String> {
        items
            .iter()
            .map(|x| {
                if json {
                    serde_json::to_string(x).expect("serializable")
                } else {
                    x.to_string()
                }
            })
            .collect()
    }
    Ok(match family {
        Family::Dyck => render(dyck::enumerate_bounded(n, hmax), json),
        Family::Fountain => render(fountain::enumerate_fountains(n), json),
        Family::Partition => render(partition::enumerate_ncn(n), json),
        Family::Polyomino => render(polyomino::enumerate_dcc(n), json),
    })
}

fn map(family: &str, direction: Direction, input: &str, format: Format) -> Result<(), CliError> {
    let family = Family::from_selector(family)
        .ok_or_else(|| CliError::usage(format!("unknown family {family:?}")))?;
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::new("io", e))?;
        buf
    } else {
        input.to_string()
    };
    let text = text.trim();
    let json = matches!(format, Format::Json);

    fn emit<T: fmt::Display + serde::Serialize>(value: &T, json: bool) {
        if json {
            outln!("{}", serde_json::to_string(value).expect("serializable"));
        } else {
            outln!("{value}");
        }
    }

    match direction {
        Direction::Forward => {
            let image = match family {
                Family::Dyck => {
                    let d: dyck::DyckPath = text.parse().map_err(CliError::parse)?;
                    biject::dyck_to_perm(&d)
                }
                Family::Fountain => {
                    let f: fountain::BlockFountain = text.parse().map_err(CliError::parse)?;
                    biject::fountain_to_perm(&f)
                }
                Family::Partition => {
                    let q: partition::SetPartition = text.parse().map_err(CliError::parse)?;
                    biject::partition_to_perm(&q)?
                }
                Family::Polyomino => {
                    let q: polyomino::DccPolyomino = text.parse().map_err(CliError::parse)?;
                    biject::polyomino_to_perm(&q)
                }
            };
            emit(&image, json);
        }
        Direction::Inverse => {
            let p: Permutation = text.parse()?;
            match family {
                Family::Dyck => emit(&biject::perm_to_dyck(&p)?, json),
                Family::Fountain => emit(&biject::perm_to_fountain(&p)?, json),
                Family::Partition => emit(&biject::perm_to_partition(&p)?, json),
                Family::Polyomino => emit(&biject::perm_to_polyomino(&p)?, json),
            }
        }
    }
    Ok(())
}

fn triangle(which: &str, n: usize, format: Format) -> Result<(), CliError> {
    require_positive(n)?;
    let class = PermClass::from_selector(which)
        .ok_or_else(|| CliError::usage(format!("unknown class selector {which:?}")))?;
    let t = match class {
        PermClass::Av321_4123 => series::triangle_321_4123(n),
        PermClass::Av321Vinc2143 => series::triangle_321_2143(n),
        PermClass::Av321_3412 => series::triangle_321_3412(n),
        PermClass::Av231_3124 => series::triangle_231_3124(n),
    };
    match format {
        Format::Csv => out!("{}", t.to_csv()),
        Format::Json => outln!("{}", serde_json::to_string(&t).expect("serializable")),
        Format::Plain => {
            for row in t.rows() {
                let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                outln!("{}", line.join(" "));
            }
        }
    }
    Ok(())
}

fn print_series(n: usize, which: SeriesKind, format: Format) -> Result<(), CliError> {
    require_positive(n)?;
    let values: Vec<i64> = match which {
        SeriesKind::Gf => series::gf_class_counts()
            .expand_series(n)
            .expect("class counting series expands")
            .coeffs()
            .to_vec(),
        SeriesKind::FibOdd => (1..=n).map(series::fib_odd).collect(),
    };
    let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    match format {
        Format::Plain => outln!("{}", rendered.join(" ")),
        Format::Csv => outln!("{}", rendered.join(",")),
        Format::Json => outln!("[{}]", rendered.join(",")),
    }
    Ok(())
}
