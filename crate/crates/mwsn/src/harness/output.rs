//! File outputs: per-iteration metrics CSV, structured JSON trace,
//! summary JSON, and the final-deployment SVG.
//!
//! Floats are written in Rust's shortest round-trip decimal form, so a
//! re-parsed value is bit-identical to the original and repeated runs of
//! the same scenario produce byte-identical files.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algorithms::IterationTrace;
use crate::error::Error;
use crate::geometry::Point;

use super::config::Scenario;
use super::experiment::{RunOutput, Summary};

pub const METRICS_CSV_HEADER: &str =
    "iter,distortion,lifetime,area_coverage,target_coverage,backbone_size,max_energy_spent";

/// On-disk trace document: the resolved scenario plus the full run
/// history.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceFile {
    pub schema_version: String,
    pub scenario: Scenario,
    #[serde(flatten)]
    pub trace: IterationTrace<f64>,
}

pub fn render_metrics_csv(trace: &IterationTrace<f64>) -> String {
    let mut out = String::from(METRICS_CSV_HEADER);
    out.push('\n');
    for rec in &trace.iterations {
        let max_spent = rec.spent.iter().cloned().fold(0.0f64, f64::max);
        let target = rec
            .target_coverage
            .map(|t| t.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            rec.iter,
            rec.distortion,
            rec.lifetime,
            rec.area_coverage,
            target,
            rec.backbone_size,
            max_spent
        ));
    }
    out
}

pub fn render_trace_json(scenario: &Scenario, trace: &IterationTrace<f64>) -> String {
    let doc = TraceFile {
        schema_version: "1".to_string(),
        scenario: scenario.clone(),
        trace: trace.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("trace serialization cannot fail")
}

pub fn render_summary_json(summary: &Summary) -> String {
    serde_json::to_string_pretty(summary).expect("summary serialization cannot fail")
}

pub fn load_trace(path: &Path) -> Result<TraceFile, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| Error::Trace(e.to_string()))
}

/// Final deployment picture: region outline, movement polylines, sensing
/// disks, green initial dots, red active / black inactive final dots.
pub fn render_svg(scenario: &Scenario, trace: &IterationTrace<f64>) -> String {
    let final_rec = trace.final_record();
    let (min, max) = bbox(&scenario.region);
    let span_x = max.x - min.x;
    let span_y = max.y - min.y;
    let scale = 760.0 / span_x.max(span_y);
    let pad = 20.0;
    let width = span_x * scale + 2.0 * pad;
    let height = span_y * scale + 2.0 * pad;
    let tx = |p: Point<f64>| -> (f64, f64) {
        ((p.x - min.x) * scale + pad, (max.y - p.y) * scale + pad)
    };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    ));

    let outline: Vec<String> = scenario
        .region
        .iter()
        .map(|v| {
            let (x, y) = tx(Point::new(v[0], v[1]));
            format!("{x:.2},{y:.2}")
        })
        .collect();
    svg.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"#fcfcfc\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        outline.join(" ")
    ));

    // Movement polylines: initial position through every recorded stop.
    for idx in 0..scenario.n {
        let mut pts = vec![trace.initial.positions[idx]];
        pts.extend(trace.iterations.iter().map(|r| r.positions[idx]));
        let path: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = tx(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        svg.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#3060c0\" stroke-width=\"0.8\"/>\n",
            path.join(" ")
        ));
    }

    // Sensing disks and final dots.
    for idx in 0..scenario.n {
        let active = final_rec.active[idx];
        let (x, y) = tx(final_rec.positions[idx]);
        let r = scenario.sensing_radius[idx] * scale;
        let stroke = if active { "#3060c0" } else { "black" };
        svg.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r:.2}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"0.8\"/>\n"
        ));
    }
    for idx in 0..scenario.n {
        let (x, y) = tx(trace.initial.positions[idx]);
        svg.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"green\"/>\n"
        ));
    }
    for idx in 0..scenario.n {
        let active = final_rec.active[idx];
        let (x, y) = tx(final_rec.positions[idx]);
        let fill = if active { "red" } else { "black" };
        svg.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"{fill}\"/>\n"
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn bbox(region: &[[f64; 2]]) -> (Point<f64>, Point<f64>) {
    let mut min = Point::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in region {
        min.x = min.x.min(v[0]);
        min.y = min.y.min(v[1]);
        max.x = max.x.max(v[0]);
        max.y = max.y.max(v[1]);
    }
    (min, max)
}

/// Writes metrics.csv, trace.json, summary.json, and deployment.svg into
/// `dir`, creating it if needed. Returns the written paths.
pub fn emit_outputs(run: &RunOutput, dir: &Path) -> Result<Vec<PathBuf>, Error> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
    let write = |name: &str, contents: String| -> Result<PathBuf, Error> {
        let path = dir.join(name);
        fs::write(&path, contents).map_err(|e| Error::io(path.display().to_string(), e))?;
        Ok(path)
    };
    Ok(vec![
        write("metrics.csv", render_metrics_csv(&run.trace))?,
        write("trace.json", render_trace_json(&run.scenario, &run.trace))?,
        write("summary.json", render_summary_json(&run.summary))?,
        write("deployment.svg", render_svg(&run.scenario, &run.trace))?,
    ])
}
