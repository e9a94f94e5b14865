use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use divides::braid::{alexander, divide_to_braid};
use divides::families::FamilySpec;
use divides::tracer::{component_census, trace};
use divides::Region;
use divides_cli::records::{census_csv, census_json, BraidRecord, DivideRecord};
use divides_cli::report::RangeSpec;
use divides_cli::suites::{self, Suite};
use divides_cli::svg;

#[derive(Parser)]
#[command(
    name = "divides",
    version,
    about = "Staircase regions, their divide curves, and link invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family's region, trace it, and report its invariants
    Family {
        /// Family spec such as "P:3", "Pm:-2", "PIX:2", "PX:1", "B:3,7", "C:4"
        spec: String,
        #[arg(long, value_enum, default_value_t = PictureEmit::Json)]
        emit: PictureEmit,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace a region read from a JSON file ("-" or no path reads stdin)
    Trace {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = PictureEmit::Json)]
        emit: PictureEmit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification sweep and write its JSON report
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Parameter range, half-open "A..B" or inclusive "A..=B"
        #[arg(long)]
        range: Option<RangeSpec>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract the band word of a family's divide
    Braid {
        spec: String,
        #[arg(long, value_enum, default_value_t = TextEmit::Text)]
        emit: TextEmit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace every staircase within bounds and tabulate component profiles
    Census {
        max_n: usize,
        max_dim: i64,
        #[arg(long, value_enum, default_value_t = TableEmit::Csv)]
        emit: TableEmit,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PictureEmit {
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextEmit {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableEmit {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Coefficient,
    Genus,
    Oracle,
}

impl From<SuiteArg> for Suite {
    fn from(arg: SuiteArg) -> Suite {
        match arg {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Coefficient => Suite::Coefficient,
            SuiteArg::Genus => Suite::Genus,
            SuiteArg::Oracle => Suite::Oracle,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Family { spec, emit, out } => {
            let spec: FamilySpec = spec.parse()?;
            let region = spec.region()?;
            let divide = trace(&region)?;
            let text = match emit {
                PictureEmit::Json => {
                    pretty(&DivideRecord::new(Some(spec), &region, &divide))?
                }
                PictureEmit::Svg => svg::render(&region, &divide),
            };
            write_output(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { input, emit, out } => {
            let raw = read_input(input)?;
            let region: Region =
                serde_json::from_str(&raw).context("region JSON did not parse")?;
            let divide = trace(&region)?;
            let text = match emit {
                PictureEmit::Json => pretty(&DivideRecord::new(None, &region, &divide))?,
                PictureEmit::Svg => svg::render(&region, &divide),
            };
            write_output(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, range, out } => {
            let report = suites::run(suite.into(), range);
            eprintln!(
                "{}: {} records, {} passed, {} failed",
                report.suite,
                report.records.len(),
                report.passed,
                report.failed
            );
            write_output(out, &pretty(&report)?)?;
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Braid { spec, emit, out } => {
            let spec: FamilySpec = spec.parse()?;
            let region = spec.region()?;
            let divide = trace(&region)?;
            let word = divide_to_braid(&divide)?;
            let text = match emit {
                TextEmit::Text => format!("{word}\n"),
                TextEmit::Json => {
                    let delta = alexander(&word)?;
                    pretty(&BraidRecord::new(spec, &divide, &word, &delta))?
                }
            };
            write_output(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { max_n, max_dim, emit, out } => {
            anyhow::ensure!(max_n >= 1 && max_dim >= 1, "census bounds must be at least 1");
            let rows = component_census(max_n, max_dim);
            let text = match emit {
                TableEmit::Csv => census_csv(&rows),
                TableEmit::Json => census_json(&rows),
            };
            write_output(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn read_input(path: Option<PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(&p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("cannot read stdin")?;
            Ok(buf)
        }
    }
}

fn write_output(path: Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => {
            fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
