//! A loaded input with its analysis and the JSON records built from it.

use std::path::Path;

use base64::Engine;
use pcycles_core::builders::{
    build_rips, lower_star_with_vertices, parse_filtration_file, parse_pgm, parse_points, write_pgm, GrayImage,
    PointCloud,
};
use pcycles_core::{Analysis, Interval, PersistentCycle};
use serde::{Deserialize, Serialize};

use crate::config::{InputKind, JobConfig, Selection};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub id: usize,
    pub birth: usize,
    pub death: Option<usize>,
    pub birth_value: Option<f64>,
    pub death_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BarcodeRecord {
    pub intervals: Vec<IntervalRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub interval_id: usize,
    #[serde(rename = "G")]
    pub generators: Vec<usize>,
    /// Endpoints (vertex cell ids) of each edge, in the order of `cell_ids`.
    pub edges: Vec<[usize; 2]>,
    pub cell_ids: Vec<usize>,
    pub weight: f64,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CyclesRecord {
    pub cycles: Vec<CycleRecord>,
}

#[derive(Debug)]
pub enum Geometry {
    Points(PointCloud),
    Image {
        image: GrayImage,
        /// Vertex cell id of each pixel, row-major.
        vertex_of: Vec<usize>,
    },
    None,
}

#[derive(Debug)]
pub struct Dataset {
    pub kind: InputKind,
    pub analysis: Analysis,
    pub geometry: Geometry,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

impl Dataset {
    pub fn load(cfg: &JobConfig) -> Result<Self, CliError> {
        cfg.validate()?;
        let text = read(&cfg.input)?;
        Self::from_text(cfg.kind, &text, cfg.threshold).map_err(|source| CliError::Input {
            path: cfg.input.clone(),
            source,
        })
    }

    pub fn from_text(kind: InputKind, text: &str, threshold: Option<f64>) -> pcycles_core::Result<Self> {
        let (filtration, geometry) = match kind {
            InputKind::Points => {
                let cloud = parse_points(text)?;
                let f = build_rips(&cloud, threshold.unwrap_or(0.0))?;
                (f, Geometry::Points(cloud))
            }
            InputKind::Image => {
                let image = parse_pgm(text)?;
                let (f, vertex_of) = lower_star_with_vertices(&image)?;
                (f, Geometry::Image { image, vertex_of })
            }
            InputKind::Filtration => (parse_filtration_file(text)?, Geometry::None),
        };
        Ok(Self {
            kind,
            analysis: Analysis::new(filtration),
            geometry,
        })
    }

    fn value(&self, id: usize) -> Option<f64> {
        self.analysis.filtration().cells()[id - 1].value
    }

    /// Whether persistence is measured in filtration values or indices.
    pub fn uses_values(&self) -> bool {
        self.analysis.filtration().has_values()
    }

    /// `death − birth` in value terms when values exist, else in index terms.
    pub fn persistence(&self, iv: &Interval) -> f64 {
        let Some(d) = iv.death else { return f64::INFINITY };
        match (self.value(iv.birth), self.value(d)) {
            (Some(b), Some(d)) => d - b,
            _ => (d - iv.birth) as f64,
        }
    }

    pub fn barcode_record(&self) -> BarcodeRecord {
        let intervals = self
            .analysis
            .barcode()
            .iter()
            .enumerate()
            .map(|(id, iv)| IntervalRecord {
                id,
                birth: iv.birth,
                death: iv.death,
                birth_value: self.value(iv.birth),
                death_value: iv.death.and_then(|d| self.value(d)),
            })
            .collect();
        BarcodeRecord { intervals }
    }

    /// Barcode indices for `selection`. Top-k is ordered by persistence,
    /// descending, ties by index.
    pub fn select(&self, selection: &Selection) -> Result<Vec<usize>, CliError> {
        let barcode = self.analysis.barcode();
        match selection {
            Selection::All => Ok((0..barcode.len()).collect()),
            Selection::Top(k) => {
                let mut ids: Vec<usize> = (0..barcode.len()).collect();
                ids.sort_by(|&a, &b| {
                    let (pa, pb) = (
                        self.persistence(&barcode.intervals[a]),
                        self.persistence(&barcode.intervals[b]),
                    );
                    pb.total_cmp(&pa).then(a.cmp(&b))
                });
                ids.truncate(*k);
                Ok(ids)
            }
            Selection::Intervals(list) => list
                .iter()
                .map(|iv| {
                    barcode
                        .index_of(iv)
                        .ok_or_else(|| CliError::UnknownInterval(iv.to_string()))
                })
                .collect(),
        }
    }

    /// Computes, verifies and serializes the cycle of barcode interval `id`.
    pub fn cycle_record(&self, id: usize) -> Result<CycleRecord, CliError> {
        let interval = *self
            .analysis
            .barcode()
            .intervals
            .get(id)
            .ok_or_else(|| CliError::UnknownInterval(id.to_string()))?;
        let pc = self
            .analysis
            .persistent_cycle_for(&interval)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        self.record_for(id, &pc)
    }

    /// Serializes an already computed cycle after passing it through the verifier.
    pub fn record_for(&self, id: usize, pc: &PersistentCycle) -> Result<CycleRecord, CliError> {
        let verdict = self.analysis.verify(&pc.interval, &pc.chain);
        if let Some(reason) = verdict.reason() {
            return Err(CliError::Internal(format!(
                "cycle for {} failed verification: {reason}",
                pc.interval
            )));
        }
        let f = self.analysis.filtration();
        let edges = pc
            .chain
            .ids()
            .iter()
            .map(|&e| {
                let (a, b) = f.endpoints(e).map_err(|e| CliError::Internal(e.to_string()))?;
                Ok([a, b])
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(CycleRecord {
            interval_id: id,
            generators: pc.generators.clone(),
            edges,
            cell_ids: pc.chain.ids().to_vec(),
            weight: f.weight(&pc.chain),
            components: pc.components.len(),
        })
    }

    pub fn cycles_record(&self, selection: &Selection) -> Result<CyclesRecord, CliError> {
        let ids = self.select(selection)?;
        let cycles = if *selection == Selection::All {
            let barcode = self.analysis.barcode();
            self.analysis
                .persistent_basis_all()
                .map_err(|e| CliError::Internal(e.to_string()))?
                .iter()
                .map(|pc| {
                    let id = barcode
                        .index_of(&pc.interval)
                        .ok_or_else(|| CliError::Internal(format!("{} not in barcode", pc.interval)))?;
                    self.record_for(id, pc)
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            ids.into_iter()
                .map(|id| self.cycle_record(id))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(CyclesRecord { cycles })
    }

    pub fn meta(&self) -> serde_json::Value {
        let f = self.analysis.filtration();
        let mut meta = serde_json::json!({
            "kind": self.kind,
            "cells": f.len(),
            "vertices": f.dim_count(0),
            "edges": f.dim_count(1),
            "faces": f.dim_count(2),
            "bars": self.analysis.barcode().len(),
            "persistence": if self.uses_values() { "value" } else { "index" },
        });
        match &self.geometry {
            Geometry::Points(cloud) => {
                let (lo, hi) = cloud.bounding_box();
                meta["bounding_box"] = serde_json::json!({ "min": lo, "max": hi });
            }
            Geometry::Image { image, .. } => {
                meta["image"] = serde_json::json!({ "width": image.width(), "height": image.height() });
            }
            Geometry::None => {}
        }
        meta
    }

    pub fn geometry(&self) -> serde_json::Value {
        match &self.geometry {
            Geometry::Points(cloud) => {
                // Rips vertices come first, in point order.
                let ids: Vec<usize> = (1..=cloud.len()).collect();
                serde_json::json!({ "kind": "points", "points": cloud.points(), "vertex_ids": ids })
            }
            Geometry::Image { image, vertex_of } => serde_json::json!({
                "kind": "image",
                "width": image.width(),
                "height": image.height(),
                "pgm_base64": base64::engine::general_purpose::STANDARD.encode(write_pgm(image)),
                "vertex_ids": vertex_of,
            }),
            Geometry::None => serde_json::json!({ "kind": "filtration" }),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}
