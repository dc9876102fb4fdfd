//! Command-line front end: certificate suite, curve rendering and JSON
//! reports over the exact core.

pub mod commands;
pub mod locus;
pub mod report;
pub mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use per4_core::family::{standard_loci, LocusComponent};
use per4_core::{Ext, Rational};

use crate::locus::Window;
use crate::report::ReportDocument;

pub use verify::verify_with;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "per4",
    version,
    about = "Exact checks on the Per4(0)* parameter surface"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub json_out: Option<PathBuf>,
    /// Write the SVG rendering here (locus only).
    #[arg(long, global = true, value_name = "PATH")]
    pub svg_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Run every certificate and report pass, fail or flagged per check.
    Verify,
    /// Render the real picture of the degeneracy loci and the diagonal.
    Locus {
        #[arg(
            long,
            default_value = "-2,3,-2,3",
            allow_hyphen_values = true,
            value_name = "XMIN,XMAX,YMIN,YMAX"
        )]
        window: Window,
        #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
    },
    /// Describe the blown-up surface: charts, divisors, intersections, limits.
    Blowup,
    /// Boundary strata with subtypes and equalizer verdicts.
    Strata,
    /// Locate a parameter point relative to the loci.
    Classify {
        #[arg(value_parser = commands::parse_coordinate, allow_hyphen_values = true)]
        x: Ext<Rational>,
        #[arg(value_parser = commands::parse_coordinate, allow_hyphen_values = true)]
        y: Ext<Rational>,
    },
}

pub struct Outcome {
    pub document: ReportDocument,
    pub svg: Option<String>,
    pub exit: i32,
}

pub fn execute(command: &Command) -> Result<Outcome, String> {
    execute_with(command, &standard_loci())
}

pub fn execute_with(command: &Command, loci: &[LocusComponent]) -> Result<Outcome, String> {
    let start = Instant::now();
    let mut svg = None;
    let mut exit = EXIT_OK;
    let mut doc = match command {
        Command::Verify => {
            let checks = verify_with(loci)?;
            let doc = ReportDocument::new("verify", json!({})).with_checks(checks);
            if !doc.failed().is_empty() {
                exit = EXIT_FAILED;
            }
            doc
        }
        Command::Locus { window, samples } => {
            let samples = *samples as usize;
            let r = locus::render_paths(window, samples);
            svg = Some(locus::svg(window, &r));
            let result = locus::locus_json(window, samples, &r, loci)?;
            let input = json!({ "window": result["window"], "samples": samples });
            ReportDocument::new("locus", input).with_result(result)
        }
        Command::Blowup => {
            ReportDocument::new("blowup", json!({})).with_result(commands::blowup(loci)?)
        }
        Command::Strata => {
            ReportDocument::new("strata", json!({})).with_result(commands::strata()?)
        }
        Command::Classify { x, y } => {
            let input = json!({ "x": x.to_string(), "y": y.to_string() });
            ReportDocument::new("classify", input).with_result(commands::classify(x, y, loci)?)
        }
    };
    doc.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Outcome {
        document: doc,
        svg,
        exit,
    })
}
