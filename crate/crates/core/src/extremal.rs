//! Circumscribed and inscribed disks, rhombi, and diameter/thickness ratio scans.

use crate::corpus::{reduced_from_perturbation, side_spread};
use crate::error::{Error, Result};
use crate::hcore::{chart_to_hyperboloid, dist, mink, mink_cross, Chart, HPoint, Isometry};
use crate::optimize::golden_section_min;
use crate::polygon::ConvexPolygon;
use crate::reduced::regular_ngon_with_thickness;
use crate::width::diameter;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

const CHART_TOL: f64 = 1e-13;

/// A closed disk in H².
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Disk {
    pub center: HPoint,
    pub radius: f64,
}

/// Smallest disk containing every vertex.
///
/// The polygon is first moved so its Klein centroid sits at the origin. Distance
/// sublevel sets are ellipses in the Klein chart, so the objective is
/// quasiconvex there and a nested golden-section search over the vertex
/// bounding box converges to the centre.
pub fn circumdisk(poly: &ConvexPolygon) -> Disk {
    let g = Isometry::to_origin(&poly.klein_centroid());
    let verts: Vec<HPoint> = poly.vertices().iter().map(|v| g.apply_point(v)).collect();
    let k: Vec<[f64; 2]> = verts.iter().map(HPoint::klein).collect();
    let (x0, x1) = bounds(k.iter().map(|p| p[0]));
    let (y0, y1) = bounds(k.iter().map(|p| p[1]));
    // max cosh(dist), evaluated without normalizing the chart lift.
    let objective = |x: f64, y: f64| {
        let w = (1.0 - x * x - y * y).max(f64::MIN_POSITIVE).sqrt();
        verts
            .iter()
            .map(|v| (v.t() - x * v.x() - y * v.y()) / w)
            .fold(f64::MIN, f64::max)
    };
    let inner = |x: f64| golden_section_min(|y| objective(x, y), y0, y1, CHART_TOL);
    let (x, _) = golden_section_min(|x| inner(x).1, x0, x1, CHART_TOL);
    let (y, _) = inner(x);
    let c = chart_to_hyperboloid(x, y, Chart::Klein).expect("inside the vertex hull");
    let radius = verts.iter().map(|v| dist(&c, v)).fold(0.0, f64::max);
    Disk {
        center: g.inverse().apply_point(&c),
        radius,
    }
}

fn bounds(it: impl Iterator<Item = f64>) -> (f64, f64) {
    it.fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Largest disk inside the polygon.
///
/// The optimum touches at least three side lines: with two or fewer active
/// sides the centre can move to increase every active distance, since distance
/// to a line is convex. Every triple of side lines is therefore tried, keeping
/// the feasible equidistant point with the largest distance.
pub fn indisk(poly: &ConvexPolygon) -> Disk {
    let lines: Vec<_> = poly.side_lines().iter().map(|l| *l.normal()).collect();
    let n = lines.len();
    let mut best: Option<(f64, HPoint)> = None;
    for a in 0..n {
        for b in a + 1..n {
            let dab = sub(&lines[a], &lines[b]);
            for c in b + 1..n {
                let Some(p) = equidistant(&dab, &sub(&lines[a], &lines[c])) else {
                    continue;
                };
                let k = mink(p.coords(), &lines[a]);
                if k <= 0.0 || best.as_ref().is_some_and(|(bk, _)| *bk >= k) {
                    continue;
                }
                let slack = 1e-12 * k.max(1.0);
                if lines.iter().all(|u| mink(p.coords(), u) >= k - slack) {
                    best = Some((k, p));
                }
            }
        }
    }
    let (k, center) = best.expect("a convex polygon has an incircle touching three sides");
    Disk {
        center,
        radius: k.asinh(),
    }
}

fn sub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// The point `p` with `B(p, d1) = B(p, d2) = 0`, if it lies in H².
fn equidistant(d1: &[f64; 3], d2: &[f64; 3]) -> Option<HPoint> {
    let v = mink_cross(d1, d2);
    if mink(&v, &v) >= -1e-300 {
        return None;
    }
    let v = if v[2] < 0.0 { [-v[0], -v[1], -v[2]] } else { v };
    HPoint::from_timelike(v).ok()
}

/// The rhombus with diagonal half-lengths `a` (along x) and `b` (along y).
pub fn rhombus(a: f64, b: f64) -> Result<ConvexPolygon> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "rhombus half-diagonals must be positive, got {a} and {b}"
        )));
    }
    ConvexPolygon::new(vec![
        HPoint::polar(a, 0.0),
        HPoint::polar(b, PI / 2.0),
        HPoint::polar(a, PI),
        HPoint::polar(b, 3.0 * PI / 2.0),
    ])
}

/// One polygon of a ratio scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub delta: f64,
    pub diameter: f64,
    pub ratio: f64,
    pub perimeter: f64,
    pub area: f64,
    pub circumradius: f64,
    pub inradius: f64,
    pub polygon_id: String,
    pub regular: bool,
}

impl ScanRow {
    pub fn measure(n: usize, delta: f64, polygon_id: String, regular: bool, poly: &ConvexPolygon) -> Self {
        let d = diameter(poly).0;
        ScanRow {
            n,
            delta,
            diameter: d,
            ratio: d / delta,
            perimeter: poly.perimeter(),
            area: poly.area(),
            circumradius: circumdisk(poly).radius,
            inradius: indisk(poly).radius,
            polygon_id,
            regular,
        }
    }
}

/// A polygon the scan could not produce.
#[derive(Debug, Clone, Serialize)]
pub struct ScanFailure {
    pub n: usize,
    pub delta: f64,
    pub polygon_id: String,
    pub error: String,
}

/// Output of [`ratio_scan`].
#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanOutcome {
    pub rows: Vec<ScanRow>,
    pub failures: Vec<ScanFailure>,
    /// Observations that contradict the expected `1 < ratio < 2`, or a
    /// non-regular polygon with smaller diameter than the regular one.
    pub findings: Vec<String>,
}

/// Options of [`ratio_scan`].
#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub ns: Vec<usize>,
    pub deltas: Vec<f64>,
    /// Non-regular polygons per `(n, Δ)`; ignored for triangles, which are
    /// reduced only when regular.
    pub perturbations: usize,
    pub rng_seed: u64,
    /// Relative radial perturbation of the regular seed.
    pub amplitude: f64,
}

/// Regular and perturbed ordinary reduced polygons for every `(n, Δ)`, ordered
/// by `n`, then `Δ`, then polygon id.
pub fn ratio_scan(opts: &ScanOptions) -> ScanOutcome {
    let mut out = ScanOutcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
    for &n in &opts.ns {
        for &delta in &opts.deltas {
            let base = format!("n{n}-d{delta}");
            let regular = match regular_ngon_with_thickness(n, delta) {
                Ok(p) => ScanRow::measure(n, delta, format!("{base}-regular"), true, &p),
                Err(e) => {
                    out.failures.push(ScanFailure {
                        n,
                        delta,
                        polygon_id: format!("{base}-regular"),
                        error: e.to_string(),
                    });
                    continue;
                }
            };
            let extra = if n == 3 { 0 } else { opts.perturbations };
            let mut rows = vec![regular.clone()];
            for k in 0..extra {
                let id = format!("{base}-p{k:03}");
                match reduced_from_perturbation(&mut rng, n, delta, opts.amplitude) {
                    Ok(p) if side_spread(&p) > 1e-6 => {
                        rows.push(ScanRow::measure(n, delta, id, false, &p))
                    }
                    Ok(_) => out.failures.push(ScanFailure {
                        n,
                        delta,
                        polygon_id: id,
                        error: "solver returned the regular polygon".into(),
                    }),
                    Err(e) => out.failures.push(ScanFailure {
                        n,
                        delta,
                        polygon_id: id,
                        error: e.to_string(),
                    }),
                }
            }
            for row in &rows {
                if !(row.ratio > 1.0 && row.ratio < 2.0) {
                    out.findings
                        .push(format!("{}: ratio {} outside (1, 2)", row.polygon_id, row.ratio));
                }
                if !row.regular && row.diameter < regular.diameter - 1e-9 {
                    out.findings.push(format!(
                        "{}: diameter {} below the regular {}",
                        row.polygon_id, row.diameter, regular.diameter
                    ));
                }
            }
            out.rows.extend(rows);
        }
    }
    out
}
