//! Job configuration shared by the subcommands.

use std::path::PathBuf;
use std::str::FromStr;

use pcycles_core::Interval;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    Points,
    Image,
    Filtration,
}

/// Which bars to compute cycles for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    /// The `k` most persistent bars.
    Top(usize),
    Intervals(Vec<Interval>),
}

/// Parses `b:d` with `d` an index or `inf`.
pub fn parse_interval(s: &str) -> Result<Interval, String> {
    let (b, d) = s
        .split_once(':')
        .ok_or_else(|| format!("expected b:d, got `{s}`"))?;
    let birth = usize::from_str(b.trim()).map_err(|_| format!("invalid birth `{b}`"))?;
    let death = match d.trim() {
        "inf" | "∞" => None,
        d => Some(usize::from_str(d).map_err(|_| format!("invalid death `{d}`"))?),
    };
    Ok(Interval { birth, death })
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub kind: InputKind,
    pub input: PathBuf,
    pub threshold: Option<f64>,
    pub selection: Selection,
    pub output: Option<PathBuf>,
    pub port: Option<u16>,
    pub static_dir: Option<PathBuf>,
}

impl JobConfig {
    pub fn new(kind: InputKind, input: impl Into<PathBuf>) -> Self {
        Self {
            kind,
            input: input.into(),
            threshold: None,
            selection: Selection::All,
            output: None,
            port: None,
            static_dir: None,
        }
    }

    pub fn with_threshold(mut self, t: f64) -> Self {
        self.threshold = Some(t);
        self
    }

    pub fn with_selection(mut self, s: Selection) -> Self {
        self.selection = s;
        self
    }

    pub fn with_output(mut self, p: impl Into<PathBuf>) -> Self {
        self.output = Some(p.into());
        self
    }

    /// Threshold present iff the input is a point cloud; `k ≥ 1` for top-k.
    pub fn validate(&self) -> Result<(), CliError> {
        match (self.kind, self.threshold) {
            (InputKind::Points, None) => {
                return Err(CliError::Config("--threshold is required for point clouds".into()))
            }
            (InputKind::Points, Some(t)) if t.is_nan() || t < 0.0 => {
                return Err(CliError::Config(format!("threshold {t} must be non-negative")))
            }
            (InputKind::Image | InputKind::Filtration, Some(_)) => {
                return Err(CliError::Config("--threshold only applies to point clouds".into()))
            }
            _ => {}
        }
        if self.selection == Selection::Top(0) {
            return Err(CliError::Config("--top must be at least 1".into()));
        }
        Ok(())
    }
}
