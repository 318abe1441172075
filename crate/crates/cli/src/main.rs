//! `orbimod`: exact invariants of orbifold surfaces and rank-2 V-bundle
//! moduli from JSON input documents.
//!
//! Exit codes: 0 on success, 1 when a mathematical precondition fails (or a
//! self-check suite fails), 2 when the input document violates the schema.

mod input;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use input::SchemaError;

#[derive(Parser)]
#[command(
    name = "orbimod",
    version,
    about = "Exact invariants of orbifold surfaces and rank-2 V-bundle moduli"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct IoArgs {
    /// Input document: a file path, or `-` for standard input
    #[arg(long, default_value = "-")]
    input: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic, hyperbolicity, metric and root data of a surface
    Surface(IoArgs),
    /// Determinant class, dimensions, weights and reducibility of a bundle
    Bundle(IoArgs),
    /// Critical strata, minimum, topology and real fixed components
    Strata(IoArgs),
    /// Poincare-polynomial assembly and Euler number of the moduli space
    Poincare(IoArgs),
    /// Determinant-map base, spectral curve and generic fibre
    Spectral(IoArgs),
    /// Group presentations and representation-variety bookkeeping
    Reps(IoArgs),
    /// Run the built-in self-check suites
    Check {
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

enum Failure {
    Schema(SchemaError),
    Domain(orbimod_core::Error),
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        Failure::Schema(e)
    }
}

impl From<orbimod_core::Error> for Failure {
    fn from(e: orbimod_core::Error) -> Self {
        Failure::Domain(e)
    }
}

fn render<T: serde::Serialize>(
    report: &T,
    format: Format,
    text: impl Fn(&T) -> String,
) -> String {
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(report).expect("reports serialize to JSON");
            s.push('\n');
            s
        }
        Format::Text => text(report),
    }
}

struct Outcome {
    output: String,
    failed: bool,
}

fn success(output: String) -> Result<Outcome, Failure> {
    Ok(Outcome {
        output,
        failed: false,
    })
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Surface(io) => {
            let doc = input::read_document(&io.input)?;
            let parsed = input::parse_surface(&doc)?;
            let r = report::surface_report(&parsed);
            success(render(&r, io.format, report::SurfaceReport::text))
        }
        Command::Bundle(io) => {
            let doc = input::read_document(&io.input)?;
            let parsed = input::parse_bundle(&doc)?;
            let r = report::bundle_report(&parsed)?;
            success(render(&r, io.format, report::BundleReport::text))
        }
        Command::Strata(io) => {
            let doc = input::read_document(&io.input)?;
            let bundle = input::parse_plain_bundle(&doc)?;
            let r = report::strata_report(&bundle)?;
            success(render(&r, io.format, report::StrataReport::text))
        }
        Command::Poincare(io) => {
            let doc = input::read_document(&io.input)?;
            let parsed = input::parse_poincare(&doc)?;
            let r = report::poincare_report(&parsed)?;
            success(render(&r, io.format, report::PoincareReport::text))
        }
        Command::Spectral(io) => {
            let doc = input::read_document(&io.input)?;
            let bundle = input::parse_plain_bundle(&doc)?;
            let r = report::spectral_report(&bundle)?;
            success(render(&r, io.format, report::SpectralReport::text))
        }
        Command::Reps(io) => {
            let doc = input::read_document(&io.input)?;
            let parsed = input::parse_reps(&doc)?;
            let r = report::reps_report(&parsed)?;
            success(render(&r, io.format, report::RepsReport::text))
        }
        Command::Check { format } => {
            let r = report::check_report();
            let failed = !r.all_passed();
            Ok(Outcome {
                output: render(&r, format, report::CheckReport::text),
                failed,
            })
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse().command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Schema(e)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
