//! Command line and HTTP front end: barcodes and persistent 1-cycles as JSON.

pub mod config;
pub mod dataset;
pub mod error;
pub mod service;

use std::io::Write;
use std::path::Path;

pub use config::{InputKind, JobConfig, Selection};
pub use dataset::{BarcodeRecord, CycleRecord, CyclesRecord, Dataset, IntervalRecord};
pub use error::CliError;

fn emit(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, format!("{body}\n")).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{body}").map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}

/// Writes the barcode JSON of the configured input.
pub fn run_barcode(cfg: &JobConfig) -> Result<(), CliError> {
    let ds = Dataset::load(cfg)?;
    emit(cfg.output.as_deref(), &dataset::to_json(&ds.barcode_record()))
}

/// Writes verified cycle records for the selected bars.
pub fn run_cycles(cfg: &JobConfig) -> Result<(), CliError> {
    let ds = Dataset::load(cfg)?;
    emit(cfg.output.as_deref(), &dataset::to_json(&ds.cycles_record(&cfg.selection)?))
}

/// Loads the dataset, precomputes the barcode and serves the HTTP API.
pub fn run_serve(cfg: &JobConfig) -> Result<(), CliError> {
    let ds = Dataset::load(cfg)?;
    let runtime = tokio::runtime::Runtime::new().map_err(|source| CliError::Io {
        path: "<runtime>".into(),
        source,
    })?;
    runtime.block_on(service::serve(ds, cfg.port.unwrap_or(8080), cfg.static_dir.clone()))
}
