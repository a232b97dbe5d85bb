//! Command-line front end: count, unrank, rank and list objects of any family.
//!
//! Vectors travel as ASCII decimal integers joined by commas with no spaces;
//! serials and counts are plain decimal of any length. With `--format json`
//! each output line is one JSON object instead.
//!
//! Exit status is 0 on success, 1 when `selftest` finds a failure and 2 for
//! usage or validation errors.

pub mod family;
pub mod selftest;

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serialrank::{Count, Serial};

pub use family::{Family, FamilySelector, Unranked, Unranker};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SELFTEST_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "serialrank",
    version,
    about = "Rank and unrank combinatorial objects"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of objects in a family.
    Count {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the object at a serial number.
    Unrank {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long)]
        serial: String,
        /// Print set partitions as "(1, 4, 5)(2, 3)".
        #[arg(long)]
        stylized: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the serial number of an object.
    Rank {
        #[arg(long, value_enum)]
        family: Family,
        /// Defaults to what the vector implies; required for ksubset.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the objects with serials from..=to, one per line.
    Range {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        stylized: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the built-in golden-value checks.
    Selftest,
}

#[derive(Debug, Clone, Args)]
pub struct SelectorArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
}

impl SelectorArgs {
    fn selector(&self) -> Result<FamilySelector, CliError> {
        FamilySelector::new(self.family, self.n, self.k).map_err(CliError::Invalid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Serials from..=to, both within the family count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeRequest {
    pub from: Serial,
    pub to: Serial,
}

impl RangeRequest {
    pub fn new(from: Serial, to: Serial, count: &Count) -> Result<Self, String> {
        if from > to {
            return Err(format!("--from {from} is greater than --to {to}"));
        }
        to.check_within(count).map_err(|e| e.to_string())?;
        Ok(RangeRequest { from, to })
    }
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serialrank::Error> for CliError {
    fn from(e: serialrank::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

#[derive(Serialize)]
struct CountRecord<'a> {
    family: &'a str,
    n: usize,
    k: Option<usize>,
    count: String,
}

#[derive(Serialize)]
struct ObjectRecord<'a> {
    family: &'a str,
    n: usize,
    k: Option<usize>,
    serial: String,
    vector: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    stylized: Option<&'a str>,
}

/// Comma-joined decimal integers.
pub fn format_vector(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Inverse of [`format_vector`]; the empty string is the empty vector.
pub fn parse_vector(text: &str) -> Result<Vec<usize>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{item}` is not a non-negative integer"))
        })
        .collect()
}

fn parse_serial(text: &str, flag: &str) -> Result<Serial, CliError> {
    text.parse::<Serial>()
        .map_err(|e| CliError::Invalid(format!("{flag}: {e}")))
}

fn write_object(
    out: &mut dyn Write,
    format: Format,
    sel: &FamilySelector,
    serial: &Serial,
    object: &Unranked,
    stylized: bool,
) -> io::Result<()> {
    match format {
        Format::Text => match (&object.stylized, stylized) {
            (Some(text), true) => writeln!(out, "{text}"),
            _ => writeln!(out, "{}", format_vector(&object.vector)),
        },
        Format::Json => {
            let record = ObjectRecord {
                family: sel.family.name(),
                n: sel.n,
                k: sel.k,
                serial: serial.to_string(),
                vector: &object.vector,
                stylized: object.stylized.as_deref(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&record).expect("plain record")
            )
        }
    }
}

/// Executes one parsed command, writing results to `out`.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Count { sel, format } => {
            let sel = sel.selector()?;
            let count = sel.count()?;
            match format {
                Format::Text => writeln!(out, "{count}")?,
                Format::Json => {
                    let record = CountRecord {
                        family: sel.family.name(),
                        n: sel.n,
                        k: sel.k,
                        count: count.to_string(),
                    };
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&record).expect("plain record")
                    )?;
                }
            }
        }
        Command::Unrank {
            sel,
            serial,
            stylized,
            format,
        } => {
            let sel = sel.selector()?;
            let serial = parse_serial(serial, "--serial")?;
            let object = sel.unranker()?.unrank(&serial)?;
            write_object(out, *format, &sel, &serial, &object, *stylized)?;
        }
        Command::Rank {
            family,
            n,
            k,
            vector,
            format,
        } => {
            let vector = parse_vector(vector).map_err(CliError::Invalid)?;
            let sel = rank_selector(*family, *n, *k, &vector)?;
            let serial = sel.rank(vector.clone())?;
            match format {
                Format::Text => writeln!(out, "{serial}")?,
                Format::Json => {
                    let object = sel.unranker()?.unrank(&serial)?;
                    write_object(out, Format::Json, &sel, &serial, &object, false)?;
                }
            }
        }
        Command::Range {
            sel,
            from,
            to,
            stylized,
            format,
        } => {
            let sel = sel.selector()?;
            let from = parse_serial(from, "--from")?;
            let to = parse_serial(to, "--to")?;
            let range = RangeRequest::new(from, to, &sel.count()?).map_err(CliError::Invalid)?;
            let unranker = sel.unranker()?;
            let mut serial = range.from;
            loop {
                let object = unranker.unrank(&serial)?;
                write_object(out, *format, &sel, &serial, &object, *stylized)?;
                if serial == range.to {
                    break;
                }
                serial = serial.next();
            }
        }
        Command::Selftest => {
            let report = selftest::run(&selftest::Fixtures::golden());
            report.write(out)?;
            return Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_SELFTEST_FAILED
            });
        }
    }
    Ok(EXIT_OK)
}

/// Fills in whatever of `n`/`k` the vector implies and validates the rest.
fn rank_selector(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    vector: &[usize],
) -> Result<FamilySelector, CliError> {
    let (n, k) = match family {
        Family::Composition => (
            n.unwrap_or_else(|| vector.iter().sum()),
            Some(k.unwrap_or(vector.len())),
        ),
        Family::Ksubset => {
            let n = n.ok_or_else(|| CliError::Invalid("--n is required for ksubset".into()))?;
            (n, Some(k.unwrap_or(vector.len())))
        }
        _ => (n.unwrap_or(vector.len()), k),
    };
    FamilySelector::new(family, n, k).map_err(CliError::Invalid)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(CliError::Invalid(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs `args` (without the program name) and returns
/// (stdout, stderr, exit status).
pub fn run_captured(args: &[&str]) -> (String, String, i32) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("serialrank").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
        code,
    )
}
