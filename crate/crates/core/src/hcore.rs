//! Minkowski-form primitives for the hyperboloid model of the hyperbolic plane.
//!
//! Points live on the upper sheet `x² + y² − t² = −1, t > 0`; geodesic lines
//! are represented by unit spacelike normals `u` so that the line is
//! `{p : B(p, u) = 0}`. The sign of `u` orients the line: points with
//! `B(p, u) > 0` are on its positive side.

use crate::error::{Error, Result};

/// Raw Minkowski coordinates `(x, y, t)`.
pub type Vec3 = [f64; 3];

/// Tolerance on `B(p,p) = −1` and `B(u,u) = 1`, relative to the squared scale.
pub const NORM_TOL: f64 = 1e-12;
/// Largest roundoff absorbed by clamping before an inverse hyperbolic function.
pub const CLAMP_TOL: f64 = 1e-9;
/// Threshold separating intersecting, asymptotic and ultraparallel lines.
pub const RELATION_EPS: f64 = 1e-10;

/// The Minkowski bilinear form `p.x q.x + p.y q.y − p.t q.t`.
#[inline]
pub fn mink(p: &Vec3, q: &Vec3) -> f64 {
    p[0] * q[0] + p[1] * q[1] - p[2] * q[2]
}

#[inline]
fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
fn scale(a: &Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
fn axpy(a: f64, x: &Vec3, y: &Vec3) -> Vec3 {
    [a * x[0] + y[0], a * x[1] + y[1], a * x[2] + y[2]]
}

/// Minkowski cross product: the result `w` satisfies `B(w,a) = B(w,b) = 0`.
#[inline]
pub fn mink_cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        -(a[0] * b[1] - a[1] * b[0]),
    ]
}

/// Euclidean determinant of the 3×3 matrix with rows `a, b, c`.
#[inline]
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn norm_scale(v: &Vec3) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().max(1.0)
}

/// A point of H² on the upper hyperboloid sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint {
    c: Vec3,
}

impl HPoint {
    /// Validating constructor.
    pub fn new(x: f64, y: f64, t: f64) -> Result<Self> {
        let c = [x, y, t];
        if !c.iter().all(|v| v.is_finite()) {
            return Err(Error::OffHyperboloid(format!("non-finite coordinates {c:?}")));
        }
        let defect = mink(&c, &c) + 1.0;
        if t < 1.0 - NORM_TOL || defect.abs() > NORM_TOL * norm_scale(&c) {
            return Err(Error::OffHyperboloid(format!(
                "({x}, {y}, {t}) has B(p,p) + 1 = {defect:e}"
            )));
        }
        Ok(Self { c })
    }

    /// Lifts `(x, y)` to the sheet by solving for `t`.
    pub fn lift(x: f64, y: f64) -> Self {
        Self {
            c: [x, y, (1.0 + x * x + y * y).sqrt()],
        }
    }

    pub fn origin() -> Self {
        Self { c: [0.0, 0.0, 1.0] }
    }

    /// Point at distance `r` from the origin in direction `theta`.
    pub fn polar(r: f64, theta: f64) -> Self {
        let s = r.sinh();
        Self {
            c: [s * theta.cos(), s * theta.sin(), r.cosh()],
        }
    }

    /// Rescales a future timelike vector onto the sheet.
    pub(crate) fn from_timelike(v: Vec3) -> Result<Self> {
        let n = -mink(&v, &v);
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::OffHyperboloid(format!("{v:?} is not timelike")));
        }
        let s = if v[2] < 0.0 { -1.0 } else { 1.0 } / n.sqrt();
        let c = scale(&v, s);
        // Recompute t from (x, y) to sit exactly on the sheet.
        Ok(Self::lift(c[0], c[1]))
    }

    pub fn x(&self) -> f64 {
        self.c[0]
    }
    pub fn y(&self) -> f64 {
        self.c[1]
    }
    pub fn t(&self) -> f64 {
        self.c[2]
    }
    pub fn coords(&self) -> &Vec3 {
        &self.c
    }

    /// Klein chart coordinates.
    pub fn klein(&self) -> [f64; 2] {
        [self.c[0] / self.c[2], self.c[1] / self.c[2]]
    }

    /// Unit tangent vector at `self` pointing toward `q`.
    pub fn direction_to(&self, q: &HPoint) -> Result<Vec3> {
        let v = tangent_toward(self, q);
        let n = mink(&v, &v);
        if !(n > 0.0) || n.sqrt() < 1e-15 {
            return Err(Error::Coincident);
        }
        Ok(scale(&v, 1.0 / n.sqrt()))
    }

    /// Follows the geodesic leaving `self` with unit tangent `dir` for length `s`.
    pub fn exp(&self, dir: &Vec3, s: f64) -> HPoint {
        let v = axpy(s.sinh(), dir, &scale(&self.c, s.cosh()));
        HPoint::from_timelike(v).unwrap_or(*self)
    }

    /// Point at distance `s` from `self` along the geodesic toward `q`.
    pub fn toward(&self, q: &HPoint, s: f64) -> Result<HPoint> {
        let dir = self.direction_to(q)?;
        Ok(self.exp(&dir, s))
    }

    /// Geodesic midpoint.
    pub fn midpoint(&self, q: &HPoint) -> HPoint {
        let v = [self.c[0] + q.c[0], self.c[1] + q.c[1], self.c[2] + q.c[2]];
        HPoint::from_timelike(v).unwrap_or(*self)
    }
}

/// Tangent vector at `b` toward `a`: `a + B(a,b) b`, rewritten as
/// `(a − b) − ½B(a−b, a−b) b` so nearby points keep full relative precision.
fn tangent_toward(b: &HPoint, a: &HPoint) -> Vec3 {
    let d = sub(&a.c, &b.c);
    axpy(-0.5 * mink(&d, &d), &b.c, &d)
}

/// A geodesic line, stored as an oriented unit spacelike normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HLine {
    u: Vec3,
}

impl HLine {
    /// Validating constructor; keeps the given orientation.
    pub fn new(u: Vec3) -> Result<Self> {
        if !u.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidLine(format!("non-finite normal {u:?}")));
        }
        let defect = mink(&u, &u) - 1.0;
        if defect.abs() > NORM_TOL * norm_scale(&u) {
            return Err(Error::InvalidLine(format!("{u:?} has B(u,u) − 1 = {defect:e}")));
        }
        Ok(Self { u })
    }

    /// Normalizes any spacelike vector into a line normal.
    pub fn from_spacelike(v: Vec3) -> Result<Self> {
        let n = mink(&v, &v);
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidLine(format!("{v:?} is not spacelike")));
        }
        Ok(Self {
            u: scale(&v, 1.0 / n.sqrt()),
        })
    }

    pub fn normal(&self) -> &Vec3 {
        &self.u
    }

    pub fn flipped(&self) -> Self {
        Self {
            u: scale(&self.u, -1.0),
        }
    }

    /// Same line with the first non-negligible coordinate positive.
    pub fn canonical(&self) -> Self {
        match self.u.iter().find(|c| c.abs() > RELATION_EPS) {
            Some(c) if *c < 0.0 => self.flipped(),
            _ => *self,
        }
    }

    /// True when both normals describe the same point set.
    pub fn same_line(&self, other: &HLine) -> bool {
        let a = self.canonical().u;
        let b = other.canonical().u;
        a.iter().zip(b.iter()).all(|(x, y)| (x - y).abs() <= RELATION_EPS)
    }

    /// The line reoriented so that `p` is on its non-negative side.
    pub fn oriented_toward(&self, p: &HPoint) -> Self {
        if mink(p.coords(), &self.u) < 0.0 {
            self.flipped()
        } else {
            *self
        }
    }

    /// The two ideal endpoints of the line, in the Klein (and Poincaré) disk.
    pub fn ideal_endpoints(&self) -> [[f64; 2]; 2] {
        // Chord a·x + b·y = c of the unit circle.
        let [a, b, c] = self.u;
        let n2 = a * a + b * b;
        let (fx, fy) = (a * c / n2, b * c / n2);
        let h = ((n2 - c * c) / n2).max(0.0).sqrt() / n2.sqrt();
        [[fx - b * h, fy + a * h], [fx + b * h, fy - a * h]]
    }
}

/// Kind of relation between two geodesic lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    Coincident,
    Intersecting,
    Asymptotic,
    Ultraparallel,
}

/// Relation between two lines with its measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineRelation {
    Coincident,
    /// Acute angle in `[0, π/2]` between the lines.
    Intersecting { angle: f64 },
    Asymptotic,
    /// Length of the common perpendicular.
    Ultraparallel { distance: f64 },
}

impl LineRelation {
    pub fn kind(&self) -> RelationKind {
        match self {
            LineRelation::Coincident => RelationKind::Coincident,
            LineRelation::Intersecting { .. } => RelationKind::Intersecting,
            LineRelation::Asymptotic => RelationKind::Asymptotic,
            LineRelation::Ultraparallel { .. } => RelationKind::Ultraparallel,
        }
    }

    /// Angle for intersecting lines, distance for ultraparallel ones, else 0.
    pub fn measure(&self) -> f64 {
        match *self {
            LineRelation::Intersecting { angle } => angle,
            LineRelation::Ultraparallel { distance } => distance,
            _ => 0.0,
        }
    }
}

/// Geodesic distance `arccosh(−B(p,q))`.
///
/// Near the diagonal the equivalent form `2·arcsinh(½·√B(p−q, p−q))` is used,
/// which avoids the square-root loss of `arccosh` at arguments close to 1.
pub fn dist_pp(p: &HPoint, q: &HPoint) -> Result<f64> {
    let c = -mink(p.coords(), q.coords());
    if !(c >= 1.0 - CLAMP_TOL) {
        return Err(Error::OffHyperboloid(format!(
            "−B(p,q) = {c} is below 1 for p = {:?}, q = {:?}",
            p.coords(),
            q.coords()
        )));
    }
    if c < 2.0 {
        let d = sub(p.coords(), q.coords());
        let chord = mink(&d, &d).max(0.0).sqrt();
        Ok(2.0 * (0.5 * chord).asinh())
    } else {
        Ok(c.acosh())
    }
}

/// Distance between points that are known to be valid `HPoint`s.
pub(crate) fn dist(p: &HPoint, q: &HPoint) -> f64 {
    dist_pp(p, q).expect("HPoint invariant guarantees −B(p,q) ≥ 1")
}

/// The line through two distinct points, in canonical sign form.
pub fn line_through(p: &HPoint, q: &HPoint) -> Result<HLine> {
    if dist_pp(p, q)? <= 1e-9 {
        return Err(Error::Coincident);
    }
    oriented_line_through(p, q).map(|l| l.canonical())
}

/// Line through `p` then `q`, oriented so that points to the left of the
/// direction `p → q` (counter-clockwise in the charts) are on its positive side.
pub(crate) fn oriented_line_through(p: &HPoint, q: &HPoint) -> Result<HLine> {
    let d = sub(q.coords(), p.coords());
    HLine::from_spacelike(mink_cross(p.coords(), &d)).map_err(|_| Error::Coincident)
}

/// Signed distance `arcsinh(B(p,u))`; the sign identifies the side of `line`.
pub fn signed_dist(p: &HPoint, line: &HLine) -> f64 {
    mink(p.coords(), line.normal()).asinh()
}

/// Orthogonal projection of `p` onto `line`.
pub fn foot(p: &HPoint, line: &HLine) -> HPoint {
    let s = mink(p.coords(), line.normal());
    let v = axpy(-s, line.normal(), p.coords());
    HPoint::from_timelike(v).expect("projection of a timelike point stays timelike")
}

/// Classifies the relative position of two lines.
pub fn line_relation(l1: &HLine, l2: &HLine) -> LineRelation {
    let c = mink(l1.normal(), l2.normal()).abs();
    if (c - 1.0).abs() <= RELATION_EPS {
        if l1.same_line(l2) {
            LineRelation::Coincident
        } else {
            LineRelation::Asymptotic
        }
    } else if c < 1.0 {
        LineRelation::Intersecting {
            angle: c.clamp(0.0, 1.0).acos(),
        }
    } else {
        LineRelation::Ultraparallel { distance: c.acosh() }
    }
}

/// Interior angle at `b` of the triangle `a b c`, in `(0, π)`.
///
/// Computed from the tangent vectors at `b`: `atan2(|det[b, ta, tc]|, B(ta, tc))`.
/// This agrees with the hyperbolic law of cosines but keeps full precision on
/// small triangles, where the cosine law cancels catastrophically.
pub fn angle_at(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<f64> {
    let ta = tangent_toward(b, a);
    let tc = tangent_toward(b, c);
    let na = mink(&ta, &ta);
    let nc = mink(&tc, &tc);
    if !(na > 0.0) || !(nc > 0.0) || na.sqrt() < 1e-15 || nc.sqrt() < 1e-15 {
        return Err(Error::Coincident);
    }
    let ta = scale(&ta, 1.0 / na.sqrt());
    let tc = scale(&tc, 1.0 / nc.sqrt());
    let cos = mink(&ta, &tc);
    let sin = det3(b.coords(), &ta, &tc).abs();
    Ok(sin.atan2(cos))
}

/// Signed turn `det[a, b, c]`: positive when `a → b → c` turns left.
pub(crate) fn orientation(a: &HPoint, b: &HPoint, c: &HPoint) -> f64 {
    let ka = a.klein();
    let kb = b.klein();
    let kc = c.klein();
    (kb[0] - ka[0]) * (kc[1] - ka[1]) - (kb[1] - ka[1]) * (kc[0] - ka[0])
}

/// Planar disk charts of H².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    Klein,
    Poincare,
}

/// Maps chart coordinates onto the hyperboloid.
pub fn chart_to_hyperboloid(x: f64, y: f64, chart: Chart) -> Result<HPoint> {
    let r2 = x * x + y * y;
    if !(r2 < 1.0) {
        return Err(Error::OutsideDisk { x, y });
    }
    let p = match chart {
        Chart::Klein => {
            let s = 1.0 / (1.0 - r2).sqrt();
            HPoint::lift(x * s, y * s)
        }
        Chart::Poincare => {
            let s = 2.0 / (1.0 - r2);
            HPoint::lift(x * s, y * s)
        }
    };
    Ok(p)
}

/// Projects a hyperboloid point to chart coordinates.
pub fn hyperboloid_to_chart(p: &HPoint, chart: Chart) -> (f64, f64) {
    match chart {
        Chart::Klein => (p.x() / p.t(), p.y() / p.t()),
        Chart::Poincare => (p.x() / (1.0 + p.t()), p.y() / (1.0 + p.t())),
    }
}

/// A form-preserving linear map of the upper sheet (an isometry of H²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    m: [[f64; 3]; 3],
}

impl Isometry {
    pub fn identity() -> Self {
        Self {
            m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Rotation about the origin by `theta`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            m: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Translation by `d` along the x-axis geodesic.
    pub fn boost_x(d: f64) -> Self {
        let (s, c) = (d.sinh(), d.cosh());
        Self {
            m: [[c, 0.0, s], [0.0, 1.0, 0.0], [s, 0.0, c]],
        }
    }

    /// Translation by `d` along the geodesic through the origin at angle `phi`.
    pub fn translation(phi: f64, d: f64) -> Self {
        Self::rotation(phi)
            .compose(&Self::boost_x(d))
            .compose(&Self::rotation(-phi))
    }

    /// The translation carrying `p` to the origin.
    pub fn to_origin(p: &HPoint) -> Self {
        let d = dist(&HPoint::origin(), p);
        let phi = p.y().atan2(p.x());
        Self::translation(phi, -d)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Self {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Self { m }
    }

    /// Inverse via `J Mᵀ J` with `J = diag(1, 1, −1)`.
    pub fn inverse(&self) -> Self {
        let sign = [1.0, 1.0, -1.0];
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = sign[i] * self.m[j][i] * sign[j];
            }
        }
        Self { m }
    }

    fn apply(&self, v: &Vec3) -> Vec3 {
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|k| self.m[i][k] * v[k]).sum();
        }
        out
    }

    pub fn apply_point(&self, p: &HPoint) -> HPoint {
        HPoint::from_timelike(self.apply(p.coords())).expect("isometry preserves the sheet")
    }

    pub fn apply_line(&self, l: &HLine) -> HLine {
        HLine::from_spacelike(self.apply(l.normal())).expect("isometry preserves spacelike normals")
    }
}
