//! Strictly convex, positively oriented polygons in H².

use crate::error::{Error, Result};
use crate::hcore::{
    angle_at, dist, mink, oriented_line_through, orientation, signed_dist, HLine, HPoint,
    Isometry,
};
use std::f64::consts::PI;

/// Minimum Klein-chart cross product for a strict left turn.
pub const TURN_EPS: f64 = 1e-12;
/// Slack for boundary points in [`ConvexPolygon::contains`].
pub const CONTAINS_TOL: f64 = 1e-10;

/// A convex polygon `v₀ v₁ … v_{n−1}` listed counter-clockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<HPoint>,
}

/// Validates `points` as a strictly convex polygon, reversing clockwise input.
pub fn make_polygon(points: Vec<HPoint>) -> Result<ConvexPolygon> {
    ConvexPolygon::new(points)
}

impl ConvexPolygon {
    pub fn new(mut points: Vec<HPoint>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let turns: Vec<f64> = (0..n)
            .map(|i| orientation(&points[(i + n - 1) % n], &points[i], &points[(i + 1) % n]))
            .collect();
        let sign = if turns[0] > 0.0 { 1.0 } else { -1.0 };
        if let Some(bad) = turns.iter().position(|t| sign * t <= TURN_EPS) {
            return Err(Error::NonConvex(bad));
        }
        if sign < 0.0 {
            points.reverse();
        }
        // Locally convex but winding more than once (star polygons).
        let k: Vec<[f64; 2]> = points.iter().map(HPoint::klein).collect();
        let winding: f64 = (0..n)
            .map(|i| {
                let a = k[(i + n - 1) % n];
                let b = k[i];
                let c = k[(i + 1) % n];
                let d1 = (b[1] - a[1]).atan2(b[0] - a[0]);
                let d2 = (c[1] - b[1]).atan2(c[0] - b[0]);
                (d2 - d1).rem_euclid(2.0 * PI)
            })
            .sum();
        if (winding - 2.0 * PI).abs() > 1e-6 {
            return Err(Error::NonConvex(0));
        }
        Ok(Self { vertices: points })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.vertices
    }

    /// Vertex with the index taken modulo `n`.
    pub fn vertex(&self, i: usize) -> &HPoint {
        &self.vertices[i % self.vertices.len()]
    }

    /// Sum of side lengths.
    pub fn perimeter(&self) -> f64 {
        let n = self.len();
        (0..n).map(|i| dist(self.vertex(i), self.vertex(i + 1))).sum()
    }

    /// Interior angle at vertex `i`.
    pub fn interior_angle(&self, i: usize) -> f64 {
        let n = self.len();
        angle_at(self.vertex(i + n - 1), self.vertex(i), self.vertex(i + 1))
            .expect("vertices of a valid polygon are distinct")
    }

    /// Gauss–Bonnet area `(n − 2)π − Σ interior angles`.
    pub fn area(&self) -> f64 {
        let n = self.len();
        let angles: f64 = (0..n).map(|i| self.interior_angle(i)).sum();
        (n as f64 - 2.0) * PI - angles
    }

    /// Line through side `v_j v_{j+1}`, oriented with the interior on its positive side.
    pub fn side_line(&self, j: usize) -> HLine {
        oriented_line_through(self.vertex(j), self.vertex(j + 1))
            .expect("vertices of a valid polygon are distinct")
    }

    pub fn side_lines(&self) -> Vec<HLine> {
        (0..self.len()).map(|j| self.side_line(j)).collect()
    }

    /// Closed containment test; the boundary counts as inside.
    pub fn contains(&self, p: &HPoint) -> bool {
        (0..self.len()).all(|j| signed_dist(p, &self.side_line(j)) >= -CONTAINS_TOL)
    }

    /// The point whose Klein coordinates are the average of the vertices'.
    pub fn klein_centroid(&self) -> HPoint {
        let n = self.len() as f64;
        let (sx, sy) = self
            .vertices
            .iter()
            .map(HPoint::klein)
            .fold((0.0, 0.0), |(ax, ay), k| (ax + k[0], ay + k[1]));
        crate::hcore::chart_to_hyperboloid(sx / n, sy / n, crate::hcore::Chart::Klein)
            .expect("a convex combination of disk points stays in the disk")
    }

    /// Image under an isometry (orientation-preserving maps keep the vertex order valid).
    pub fn transformed(&self, g: &Isometry) -> Result<Self> {
        Self::new(self.vertices.iter().map(|p| g.apply_point(p)).collect())
    }

    /// The same polygon with vertex `k` deleted.
    pub fn without_vertex(&self, k: usize) -> Result<Self> {
        let mut v = self.vertices.clone();
        v.remove(k % v.len());
        Self::new(v)
    }

    /// Cuts off a small cap at vertex `k` by the line through the points at
    /// distance `depth` from `v_k` along its two sides.
    pub fn truncate_vertex(&self, k: usize, depth: f64) -> Result<Self> {
        let n = self.len();
        let v = self.vertex(k);
        let a = v.toward(self.vertex(k + n - 1), depth)?;
        let b = v.toward(self.vertex(k + 1), depth)?;
        let cut = oriented_line_through(&a, &b)?;
        self.clip(&cut)
    }

    /// The part of the polygon on the non-negative side of `line`.
    pub fn clip(&self, line: &HLine) -> Result<Self> {
        let n = self.len();
        let u = line.normal();
        let mut out: Vec<HPoint> = Vec::with_capacity(n + 1);
        for i in 0..n {
            let a = self.vertex(i);
            let b = self.vertex(i + 1);
            let sa = mink(a.coords(), u);
            let sb = mink(b.coords(), u);
            if sa >= 0.0 {
                out.push(*a);
            }
            if (sa >= 0.0) != (sb >= 0.0) {
                let (ca, cb) = (a.coords(), b.coords());
                let v = [
                    sb * ca[0] - sa * cb[0],
                    sb * ca[1] - sa * cb[1],
                    sb * ca[2] - sa * cb[2],
                ];
                out.push(HPoint::from_timelike(v)?);
            }
        }
        out.dedup_by(|a, b| dist(a, b) < 1e-12);
        if out.len() > 1 && dist(&out[0], &out[out.len() - 1]) < 1e-12 {
            out.pop();
        }
        Self::new(out)
    }
}

/// Strict convex hull of a point set (Andrew's monotone chain in the Klein chart).
pub fn convex_hull(points: &[HPoint]) -> Result<ConvexPolygon> {
    let mut pts: Vec<(HPoint, [f64; 2])> = points.iter().map(|p| (*p, p.klein())).collect();
    pts.sort_by(|a, b| {
        a.1[0]
            .total_cmp(&b.1[0])
            .then(a.1[1].total_cmp(&b.1[1]))
    });
    pts.dedup_by(|a, b| (a.1[0] - b.1[0]).abs() < 1e-15 && (a.1[1] - b.1[1]).abs() < 1e-15);
    if pts.len() < 3 {
        return Err(Error::TooFewVertices(pts.len()));
    }
    let cross = |o: &[f64; 2], a: &[f64; 2], b: &[f64; 2]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut hull: Vec<(HPoint, [f64; 2])> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(HPoint, [f64; 2])>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2
                && cross(&hull[hull.len() - 2].1, &hull[hull.len() - 1].1, &p.1) <= TURN_EPS
            {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
    }
    ConvexPolygon::new(hull.into_iter().map(|(p, _)| p).collect())
}
