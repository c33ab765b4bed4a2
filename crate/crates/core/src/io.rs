//! Polygon JSON files and scan CSV output.
//!
//! A polygon document looks like
//!
//! ```json
//! {"model": "klein", "vertices": [[0.3, 0], [-0.15, 0.26], [-0.15, -0.26]],
//!  "name": "optional", "thickness": 1.0, "provenance": "optional"}
//! ```
//!
//! `model` is one of `hyperboloid` (vertex triples `[x, y, t]`), `klein` or
//! `poincare` (pairs inside the open unit disk).

use crate::error::{Error, Result};
use crate::extremal::ScanRow;
use crate::hcore::{chart_to_hyperboloid, hyperboloid_to_chart, Chart, HLine, HPoint};
use crate::polygon::ConvexPolygon;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt::Write as _;
use std::path::Path;

impl Serialize for HPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl Serialize for HLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.normal().serialize(s)
    }
}

/// Coordinate model of a polygon document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Hyperboloid,
    Klein,
    Poincare,
}

impl Model {
    fn chart(self) -> Option<Chart> {
        match self {
            Model::Hyperboloid => None,
            Model::Klein => Some(Chart::Klein),
            Model::Poincare => Some(Chart::Poincare),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonDoc {
    model: Model,
    vertices: Vec<Vec<f64>>,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    thickness: Option<f64>,
    #[serde(default)]
    provenance: Option<String>,
}

/// A parsed polygon document.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonFile {
    pub model: Model,
    pub polygon: ConvexPolygon,
    pub name: Option<String>,
    pub thickness: Option<f64>,
    pub provenance: Option<String>,
}

fn schema(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        location: location.into(),
        message: message.into(),
    }
}

pub fn parse_polygon_file(text: &str) -> Result<PolygonFile> {
    let doc: PolygonDoc = serde_json::from_str(text).map_err(|e| {
        schema(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let arity = if doc.model == Model::Hyperboloid { 3 } else { 2 };
    let mut points = Vec::with_capacity(doc.vertices.len());
    for (k, v) in doc.vertices.iter().enumerate() {
        let at = format!("vertices[{k}]");
        if v.len() != arity {
            return Err(schema(at, format!("expected {arity} coordinates, got {}", v.len())));
        }
        let p = match doc.model.chart() {
            Some(chart) => chart_to_hyperboloid(v[0], v[1], chart),
            None => HPoint::new(v[0], v[1], v[2]),
        }
        .map_err(|e| schema(at, e.to_string()))?;
        points.push(p);
    }
    let polygon = ConvexPolygon::new(points)?;
    Ok(PolygonFile {
        model: doc.model,
        polygon,
        name: doc.name,
        thickness: doc.thickness,
        provenance: doc.provenance,
    })
}

/// Parses and validates a polygon document.
pub fn parse_polygon(text: &str) -> Result<ConvexPolygon> {
    parse_polygon_file(text).map(|f| f.polygon)
}

/// Formats a number with 17 significant digits.
pub fn format_num(v: f64) -> String {
    format!("{v:.16e}")
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Serializes a polygon document.
pub fn emit_polygon_file(file: &PolygonFile) -> String {
    let mut out = String::new();
    write!(out, "{{\"model\":\"{}\",\"vertices\":[", match file.model {
        Model::Hyperboloid => "hyperboloid",
        Model::Klein => "klein",
        Model::Poincare => "poincare",
    })
    .unwrap();
    for (k, p) in file.polygon.vertices().iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let coords: Vec<f64> = match file.model.chart() {
            Some(chart) => {
                let (x, y) = hyperboloid_to_chart(p, chart);
                vec![x, y]
            }
            None => p.coords().to_vec(),
        };
        let parts: Vec<String> = coords.into_iter().map(format_num).collect();
        write!(out, "[{}]", parts.join(",")).unwrap();
    }
    out.push(']');
    if let Some(name) = &file.name {
        write!(out, ",\"name\":{}", json_string(name)).unwrap();
    }
    if let Some(t) = file.thickness {
        write!(out, ",\"thickness\":{}", format_num(t)).unwrap();
    }
    if let Some(p) = &file.provenance {
        write!(out, ",\"provenance\":{}", json_string(p)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Serializes a bare polygon in the given coordinate model.
pub fn emit_polygon(poly: &ConvexPolygon, model: Model) -> String {
    emit_polygon_file(&PolygonFile {
        model,
        polygon: poly.clone(),
        name: None,
        thickness: None,
        provenance: None,
    })
}

pub const CSV_HEADER: [&str; 9] = [
    "n",
    "delta",
    "polygon_id",
    "diameter",
    "ratio",
    "perimeter",
    "area",
    "circumradius",
    "inradius",
];

/// Writes scan rows as CSV with `\n` line endings.
pub fn scan_csv(rows: &[ScanRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            format_num(r.delta),
            r.polygon_id.clone(),
            format_num(r.diameter),
            format_num(r.ratio),
            format_num(r.perimeter),
            format_num(r.area),
            format_num(r.circumradius),
            format_num(r.inradius),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Writes `contents` to `path` through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::Io(format!("{} has no file name", path.display())))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(file_name);
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    std::fs::write(&tmp, contents).map_err(|e| Error::Io(format!("{}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
