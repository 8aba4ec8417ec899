//! Input parsing: weighted graphs (JSON or TSV edge lists), distance
//! matrices (CSV or JSON), and posets with optional filtrations (JSON).

use std::path::Path;

use clap::ValueEnum;
use reeb_forest_core::dist::DistanceMatrix;
use reeb_forest_core::poset::Poset;
use reeb_forest_core::reeb::FilteredPoset;
use reeb_forest_core::{FiniteMetricSpace, MetricGraph};
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    GraphJson,
    EdgeTsv,
    MatrixCsv,
    MatrixJson,
    PosetJson,
}

/// A parsed input, ready for one of the pipelines.
pub enum Input {
    Graph(MetricGraph),
    Metric(FiniteMetricSpace),
    /// Poset with an optional filtration.
    Poset(Poset, Option<Vec<f64>>),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Graph(_) => "graph",
            Input::Metric(_) => "metric",
            Input::Poset(..) => "poset",
        }
    }
}

pub fn read_input(path: &Path, format: InputFormat) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let format = match format {
        InputFormat::Auto => sniff(path, &text),
        explicit => explicit,
    };
    match format {
        InputFormat::GraphJson => parse_graph_json(&text),
        InputFormat::EdgeTsv => parse_edge_tsv(&text),
        InputFormat::MatrixCsv => parse_matrix_csv(&text),
        InputFormat::MatrixJson => parse_matrix_json(&text),
        InputFormat::PosetJson => parse_poset_json(&text),
        InputFormat::Auto => unreachable!(),
    }
}

/// Format detection: file extension first, then a peek at the content.
fn sniff(path: &Path, text: &str) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("tsv") => return InputFormat::EdgeTsv,
        Some("csv") => return InputFormat::MatrixCsv,
        _ => {}
    }
    let head = text.trim_start();
    if head.starts_with('{') {
        if head.contains("\"covers\"") {
            InputFormat::PosetJson
        } else if head.contains("\"edges\"") {
            InputFormat::GraphJson
        } else {
            InputFormat::MatrixJson
        }
    } else if head.contains('\t') {
        InputFormat::EdgeTsv
    } else {
        InputFormat::MatrixCsv
    }
}

#[derive(Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(serde_json::Value, serde_json::Value, f64)>,
    base: Option<String>,
}

fn parse_graph_json(text: &str) -> Result<Input, CliError> {
    let raw: GraphJson = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("graph json, line {} column {}: {e}", e.line(), e.column())))?;
    let index = |v: &serde_json::Value| -> Result<usize, CliError> {
        match v {
            serde_json::Value::String(s) => raw
                .vertices
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| CliError::Parse(format!("unknown vertex {s:?}"))),
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|i| i as usize)
                .filter(|&i| i < raw.vertices.len())
                .ok_or_else(|| CliError::Parse(format!("vertex index {n} out of range"))),
            other => Err(CliError::Parse(format!("bad vertex reference {other}"))),
        }
    };
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (u, v, len) in &raw.edges {
        edges.push((index(u)?, index(v)?, *len));
    }
    let mut g = MetricGraph::new(raw.vertices.len(), edges)
        .map_err(|e| CliError::Invariant(e.to_string()))?
        .with_labels(raw.vertices);
    if let Some(b) = raw.base {
        let idx = g
            .vertex_by_label(&b)
            .ok_or_else(|| CliError::Parse(format!("unknown base vertex {b:?}")))?;
        g = g.with_base(idx);
    }
    Ok(Input::Graph(g))
}

/// One edge per line: `u<TAB>v<TAB>length`, vertices named by label.
fn parse_edge_tsv(text: &str) -> Result<Input, CliError> {
    let mut labels: Vec<String> = Vec::new();
    let intern = |name: &str, labels: &mut Vec<String>| -> usize {
        match labels.iter().position(|l| l == name) {
            Some(i) => i,
            None => {
                labels.push(name.to_string());
                labels.len() - 1
            }
        }
    };
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(CliError::Parse(format!(
                "line {}: expected u<TAB>v<TAB>length, got {} fields",
                lineno + 1,
                fields.len()
            )));
        }
        let u = intern(fields[0].trim(), &mut labels);
        let v = intern(fields[1].trim(), &mut labels);
        let len: f64 = fields[2].trim().parse().map_err(|e| {
            CliError::Parse(format!("line {}: bad length {:?}: {e}", lineno + 1, fields[2]))
        })?;
        edges.push((u, v, len));
    }
    if labels.is_empty() {
        return Err(CliError::Parse("no edges found".to_string()));
    }
    let g = MetricGraph::new(labels.len(), edges)
        .map_err(|e| CliError::Invariant(e.to_string()))?
        .with_labels(labels);
    Ok(Input::Graph(g))
}

/// Square matrix: header row of labels, then one row of numbers per point.
fn parse_matrix_csv(text: &str) -> Result<Input, CliError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty matrix".to_string()))?;
    let labels: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
    let n = labels.len();
    let mut rows = Vec::with_capacity(n);
    for (i, line) in lines.enumerate() {
        let row: Result<Vec<f64>, _> = line.split(',').map(|s| s.trim().parse::<f64>()).collect();
        let row = row.map_err(|e| CliError::Parse(format!("row {}: {e}", i + 2)))?;
        if row.len() != n {
            return Err(CliError::Parse(format!(
                "row {}: expected {n} entries, got {}",
                i + 2,
                row.len()
            )));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(CliError::Parse(format!(
            "expected {n} rows to match the header, got {}",
            rows.len()
        )));
    }
    let space = FiniteMetricSpace::new(DistanceMatrix::from_rows(&rows))
        .map_err(|e| CliError::Invariant(e.to_string()))?
        .with_labels(labels);
    Ok(Input::Metric(space))
}

#[derive(Deserialize)]
struct MatrixJson {
    labels: Option<Vec<String>>,
    d: Vec<Vec<f64>>,
}

fn parse_matrix_json(text: &str) -> Result<Input, CliError> {
    let raw: MatrixJson = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("matrix json, line {} column {}: {e}", e.line(), e.column())))?;
    for row in &raw.d {
        if row.len() != raw.d.len() {
            return Err(CliError::Parse("matrix is not square".to_string()));
        }
    }
    let mut space = FiniteMetricSpace::new(DistanceMatrix::from_rows(&raw.d))
        .map_err(|e| CliError::Invariant(e.to_string()))?;
    if let Some(labels) = raw.labels {
        if labels.len() != space.len() {
            return Err(CliError::Parse("label count does not match matrix".to_string()));
        }
        space = space.with_labels(labels);
    }
    Ok(Input::Metric(space))
}

#[derive(Deserialize)]
struct PosetJson {
    n: usize,
    covers: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
    f: Option<Vec<f64>>,
}

fn parse_poset_json(text: &str) -> Result<Input, CliError> {
    let raw: PosetJson = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("poset json, line {} column {}: {e}", e.line(), e.column())))?;
    let mut poset = Poset::from_covers(&raw.covers, raw.n)
        .map_err(|e| CliError::Invariant(e.to_string()))?;
    if let Some(labels) = raw.labels {
        if labels.len() != raw.n {
            return Err(CliError::Parse("label count does not match n".to_string()));
        }
        poset = poset.with_labels(labels);
    }
    if let Some(f) = &raw.f {
        // validate eagerly so the error is reported against the input
        FilteredPoset::new(poset.clone(), f.clone())
            .map_err(|e| CliError::Invariant(e.to_string()))?;
    }
    Ok(Input::Poset(poset, raw.f))
}
