use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pcycles_cli::config::parse_interval;
use pcycles_cli::{run_barcode, run_cycles, run_serve, InputKind, JobConfig, Selection};
use pcycles_core::Interval;

/// H1 barcodes and persistent 1-cycles for point clouds, images and filtration files.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the H1 barcode as JSON.
    Barcode(Common),
    /// Write persistent cycles for selected bars as JSON.
    Cycles {
        #[command(flatten)]
        common: Common,
        /// Only the k most persistent bars.
        #[arg(long, conflicts_with = "interval")]
        top: Option<usize>,
        /// Explicit bar `b:d` (`d` may be `inf`); repeatable.
        #[arg(long, value_parser = parse_interval)]
        interval: Vec<Interval>,
    },
    /// Serve the barcode and on-demand cycles over HTTP.
    Serve {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Directory of UI assets served at `/`.
        #[arg(long)]
        static_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: InputKind,
    /// Rips edge-length threshold (point clouds only).
    #[arg(long)]
    threshold: Option<f64>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn config(self) -> JobConfig {
        JobConfig {
            kind: self.kind,
            input: self.input,
            threshold: self.threshold,
            selection: Selection::All,
            output: self.out,
            port: None,
            static_dir: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Barcode(common) => run_barcode(&common.config()),
        Command::Cycles {
            common,
            top,
            interval,
        } => {
            let selection = match (top, interval.is_empty()) {
                (Some(k), _) => Selection::Top(k),
                (None, false) => Selection::Intervals(interval),
                (None, true) => Selection::All,
            };
            run_cycles(&common.config().with_selection(selection))
        }
        Command::Serve {
            common,
            port,
            static_dir,
        } => {
            let mut cfg = common.config();
            cfg.port = Some(port);
            cfg.static_dir = static_dir;
            run_serve(&cfg)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
