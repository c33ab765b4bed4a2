//! Width determined by a supporting line, thickness, and diameter.
//!
//! Supporting lines of a polygon are either side lines or members of a
//! vertex pencil: the lines through `v_k` whose inward normals rotate from
//! the normal of side `k − 1` to the normal of side `k`.

use crate::error::{Error, Result};
use crate::hcore::{dist, mink, HLine, Isometry, Vec3};
use std::f64::consts::PI;
use crate::optimize::{sampled_max, sampled_min};
use crate::polygon::ConvexPolygon;

/// Slack for the supporting-line test of [`width_line`].
pub const SUPPORT_TOL: f64 = 1e-9;
/// Samples per pencil before golden-section refinement.
pub const PENCIL_SAMPLES: usize = 64;
/// Golden-section tolerance on the pencil angle.
pub const PENCIL_TOL: f64 = 1e-12;

/// Width of a polygon determined by one supporting line.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct WidthReport {
    /// The supporting line, oriented with the polygon on its positive side.
    pub line: HLine,
    pub width: f64,
    pub farthest_vertex_index: usize,
}

/// Minimum width over all supporting lines.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ThicknessReport {
    pub thickness: f64,
    pub argmin_line: HLine,
    /// Side whose line attains the minimum, when a side line does (within 1e-9).
    pub achieved_on_side: Option<usize>,
}

/// The one-parameter family of supporting lines through a vertex.
///
/// Widths along the pencil are evaluated in a frame where the vertex sits at
/// the origin, so pencil lines have normals `(cos φ, sin φ, 0)` and the far
/// vertices keep full relative precision even when the polygon is large.
#[derive(Debug, Clone)]
pub struct SupportPencil {
    pub vertex: usize,
    /// Exterior angle at the vertex; the parameter runs over `[0, span]`.
    pub span: f64,
    start: f64,
    local: Vec<Vec3>,
    to_global: Isometry,
}

impl SupportPencil {
    pub fn new(poly: &ConvexPolygon, k: usize) -> Self {
        let n = poly.len();
        let k = k % n;
        let v = poly.vertex(k);
        let r = v.x().hypot(v.y());
        let (s, c) = if r > 0.0 { (v.y() / r, v.x() / r) } else { (0.0, 1.0) };
        // Rotate v onto the +x axis, then boost it back to the origin.
        let local: Vec<Vec3> = poly
            .vertices()
            .iter()
            .enumerate()
            .map(|(j, w)| {
                if j == k {
                    return [0.0, 0.0, 1.0];
                }
                let a = c * w.x() + s * w.y();
                let b = -s * w.x() + c * w.y();
                [v.t() * a - r * w.t(), b, v.t() * w.t() - r * a]
            })
            .collect();
        let prev = local[(k + n - 1) % n];
        let next = local[(k + 1) % n];
        // Inward normal angle of the line through the origin and `w`.
        let normal_angle = |w: &Vec3, other: &Vec3| {
            let (mut ux, mut uy) = (-w[1], w[0]);
            if ux * other[0] + uy * other[1] < 0.0 {
                ux = -ux;
                uy = -uy;
            }
            uy.atan2(ux)
        };
        let start = normal_angle(&prev, &next);
        let end = normal_angle(&next, &prev);
        let span = (end - start).rem_euclid(2.0 * PI);
        let to_global = Isometry::rotation(s.atan2(c)).compose(&Isometry::boost_x(r.asinh()));
        Self {
            vertex: k,
            span,
            start,
            local,
            to_global,
        }
    }

    fn local_normal(&self, theta: f64) -> Vec3 {
        let (s, c) = (self.start + theta).sin_cos();
        [c, s, 0.0]
    }

    /// Width determined by the pencil line at `theta`, with the farthest vertex.
    pub fn width_at(&self, theta: f64) -> (f64, usize) {
        let u = self.local_normal(theta);
        self.local
            .iter()
            .enumerate()
            .map(|(j, w)| ((u[0] * w[0] + u[1] * w[1]).asinh(), j))
            .fold((f64::NEG_INFINITY, 0), |acc, c| if c.0 > acc.0 { c } else { acc })
    }

    /// Supporting line at parameter `theta`; `0` is the previous side line and
    /// `span` the next one.
    pub fn line(&self, theta: f64) -> HLine {
        let u = HLine::new(self.local_normal(theta)).expect("unit spacelike normal");
        self.to_global.apply_line(&u)
    }
}

/// All vertex pencils of a polygon.
pub fn pencils(poly: &ConvexPolygon) -> Vec<SupportPencil> {
    (0..poly.len()).map(|k| SupportPencil::new(poly, k)).collect()
}

/// Largest vertex distance from an inward-oriented supporting line.
fn farthest(poly: &ConvexPolygon, line: &HLine) -> (f64, usize) {
    poly.vertices()
        .iter()
        .enumerate()
        .map(|(k, v)| (mink(v.coords(), line.normal()).asinh(), k))
        .fold((f64::NEG_INFINITY, 0), |acc, c| if c.0 > acc.0 { c } else { acc })
}

/// Orients `line` inward after checking that it supports `poly`.
fn supporting_orientation(poly: &ConvexPolygon, line: &HLine) -> Result<HLine> {
    let s: Vec<f64> = poly
        .vertices()
        .iter()
        .map(|v| crate::hcore::signed_dist(v, line))
        .collect();
    let oriented = if s.iter().all(|&d| d >= -SUPPORT_TOL) {
        *line
    } else if s.iter().all(|&d| d <= SUPPORT_TOL) {
        line.flipped()
    } else {
        return Err(Error::NotSupporting("vertices on both sides".into()));
    };
    let touch = s.iter().fold(f64::INFINITY, |m, d| m.min(d.abs()));
    if touch > SUPPORT_TOL {
        return Err(Error::NotSupporting(format!(
            "no vertex on the line (closest at {touch:e})"
        )));
    }
    Ok(oriented)
}

/// Width determined by the supporting line `line`: the largest vertex distance.
pub fn width_line(poly: &ConvexPolygon, line: &HLine) -> Result<WidthReport> {
    let line = supporting_orientation(poly, line)?;
    let (width, idx) = farthest(poly, &line);
    Ok(WidthReport {
        line,
        width: width.max(0.0),
        farthest_vertex_index: idx,
    })
}

/// Width from its definition: the distance from `line` to the farthest
/// supporting line ultraparallel to it, found by searching every vertex pencil.
pub fn width_ultraparallel_oracle(poly: &ConvexPolygon, line: &HLine) -> Result<f64> {
    let base = supporting_orientation(poly, line)?;
    let separation = |m: &HLine| {
        let c = mink(base.normal(), m.normal()).abs();
        if c > 1.0 + crate::hcore::RELATION_EPS {
            c.acosh()
        } else {
            f64::NEG_INFINITY
        }
    };
    let best = pencils(poly)
        .iter()
        .map(|p| {
            sampled_max(|t| separation(&p.line(t)), 0.0, p.span, PENCIL_SAMPLES, PENCIL_TOL).1
        })
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(best.max(0.0))
}

/// Minimum width over side lines and all vertex pencils.
pub fn thickness(poly: &ConvexPolygon) -> ThicknessReport {
    let sides: Vec<(f64, HLine)> = poly
        .side_lines()
        .into_iter()
        .map(|l| (farthest(poly, &l).0, l))
        .collect();
    let (side_idx, side_best) = sides
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (j, (w, _))| if *w < acc.1 { (j, *w) } else { acc });
    let mut best = (side_best, sides[side_idx].1);
    for p in pencils(poly) {
        let (t, w) = sampled_min(|t| p.width_at(t).0, 0.0, p.span, PENCIL_SAMPLES, PENCIL_TOL);
        if w < best.0 {
            best = (w, p.line(t));
        }
    }
    ThicknessReport {
        thickness: best.0,
        argmin_line: best.1,
        achieved_on_side: (side_best <= best.0 + 1e-9).then_some(side_idx),
    }
}

/// Largest vertex-to-vertex distance with its witnessing pair
/// (the lowest index pair among values within 1e-12 of the maximum).
pub fn diameter(poly: &ConvexPolygon) -> (f64, (usize, usize)) {
    let n = poly.len();
    let pairs: Vec<(f64, (usize, usize))> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .map(|(i, j)| (dist(poly.vertex(i), poly.vertex(j)), (i, j)))
        .collect();
    let max = pairs.iter().fold(0.0f64, |m, p| m.max(p.0));
    *pairs
        .iter()
        .find(|p| p.0 >= max - 1e-12)
        .expect("a polygon has at least one vertex pair")
}

/// Diameter as the largest width over all supporting lines.
pub fn diameter_via_width(poly: &ConvexPolygon) -> f64 {
    let sides = poly
        .side_lines()
        .iter()
        .map(|l| farthest(poly, l).0)
        .fold(f64::NEG_INFINITY, f64::max);
    pencils(poly)
        .iter()
        .map(|p| sampled_max(|t| p.width_at(t).0, 0.0, p.span, PENCIL_SAMPLES, PENCIL_TOL).1)
        .fold(sides, f64::max)
}
