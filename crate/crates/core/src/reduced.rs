//! Ordinary reduced odd-gons.
//!
//! In a convex odd-gon `v₀ … v_{n−1}` (indices modulo `n`) the side opposite
//! to `v_i` is `S_i = v_{i+(n−1)/2} v_{i+(n+1)/2}` and `L_i` is its line. The
//! polygon is *ordinary reduced* when every foot `p_i` of the perpendicular
//! from `v_i` to `L_i` lies in the relative interior of `S_i` and all the
//! distances `|v_i p_i|` are equal; the common value is then the thickness.
//!
//! Vertex indices in this module are zero-based.

use crate::error::{Error, Result};
use crate::hcore::{
    angle_at, dist, foot, line_relation, oriented_line_through, signed_dist, HPoint,
    RelationKind,
};
use crate::polygon::ConvexPolygon;
use crate::width::{diameter, thickness};
use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use std::f64::consts::PI;

/// Default absolute tolerance of [`check_ordinary_reduced`].
pub const DEFAULT_TOL: f64 = 1e-9;

/// Endpoints `(i + (n−1)/2, i + (n+1)/2) mod n` of the side opposite vertex `i`.
pub fn opposite_side(i: usize, n: usize) -> Result<(usize, usize)> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if n % 2 == 0 {
        return Err(Error::EvenGon(n));
    }
    Ok(((i + (n - 1) / 2) % n, (i + (n + 1) / 2) % n))
}

/// Line through the side opposite vertex `i`, oriented inward.
fn opposite_line(poly: &ConvexPolygon, i: usize) -> crate::hcore::HLine {
    let n = poly.len();
    poly.side_line(i + (n - 1) / 2)
}

/// Per-vertex data of the reducedness criterion.
#[derive(Debug, Clone, Serialize)]
pub struct VertexRecord {
    pub i: usize,
    pub opposite_side: (usize, usize),
    pub foot: HPoint,
    pub distance: f64,
    pub foot_interior: bool,
    /// Klein-chart barycentric distance of the foot from the nearer endpoint.
    pub interior_margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReducednessReport {
    pub vertices: Vec<VertexRecord>,
    pub verdict: bool,
    pub max_distance_spread: f64,
    /// Thickness computed independently; present when the local criteria pass.
    pub thickness: Option<f64>,
}

impl ReducednessReport {
    /// Mean of the vertex-to-opposite-line distances.
    pub fn common_distance(&self) -> f64 {
        self.vertices.iter().map(|r| r.distance).sum::<f64>() / self.vertices.len() as f64
    }
}

/// Evaluates the ordinary-reduced criterion with absolute tolerance `tol`.
///
/// When the foot and equal-distance conditions hold, the common distance is
/// also compared with [`thickness`]; a mismatch larger than `tol` fails the verdict.
pub fn check_ordinary_reduced(poly: &ConvexPolygon, tol: f64) -> Result<ReducednessReport> {
    let n = poly.len();
    opposite_side(0, n)?;
    let records: Vec<VertexRecord> = (0..n)
        .map(|i| {
            let (a, b) = opposite_side(i, n).expect("n checked above");
            let line = opposite_line(poly, i);
            let v = poly.vertex(i);
            let p = foot(v, &line);
            let ka = poly.vertex(a).klein();
            let kb = poly.vertex(b).klein();
            let kp = p.klein();
            let (dx, dy) = (kb[0] - ka[0], kb[1] - ka[1]);
            let lambda = ((kp[0] - ka[0]) * dx + (kp[1] - ka[1]) * dy) / (dx * dx + dy * dy);
            let margin = lambda.min(1.0 - lambda);
            VertexRecord {
                i,
                opposite_side: (a, b),
                foot: p,
                distance: signed_dist(v, &line),
                foot_interior: margin >= tol,
                interior_margin: margin,
            }
        })
        .collect();
    let (lo, hi) = records.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
        (lo.min(r.distance), hi.max(r.distance))
    });
    let spread = hi - lo;
    let local = records.iter().all(|r| r.foot_interior) && spread <= tol;
    let mut report = ReducednessReport {
        vertices: records,
        verdict: local,
        max_distance_spread: spread,
        thickness: None,
    };
    if local {
        let th = thickness(poly).thickness;
        report.thickness = Some(th);
        report.verdict = (th - report.common_distance()).abs() <= tol;
    }
    Ok(report)
}

fn check_odd(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need n ≥ 3, got {n}")));
    }
    if n % 2 == 0 {
        return Err(Error::EvenGon(n));
    }
    Ok(())
}

/// Regular odd-gon with circumradius `r` centred at the origin, `v₀` on the +x axis.
pub fn regular_ngon(n: usize, r: f64) -> Result<ConvexPolygon> {
    check_odd(n)?;
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidArgument(format!("circumradius must be positive, got {r}")));
    }
    ConvexPolygon::new(
        (0..n)
            .map(|k| HPoint::polar(r, 2.0 * PI * k as f64 / n as f64))
            .collect(),
    )
}

/// Distance from a vertex of the regular polygon to its opposite side line.
///
/// For odd `n` the vertex, the centre, and the midpoint of the opposite side
/// are collinear, so this is the circumradius plus the apothem.
fn regular_side_width(n: usize, r: f64) -> f64 {
    r + (r.tanh() * (PI / n as f64).cos()).atanh()
}

/// Regular odd-gon whose thickness is `delta`, found by bisection on the circumradius.
pub fn regular_ngon_with_thickness(n: usize, delta: f64) -> Result<ConvexPolygon> {
    check_odd(n)?;
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::InvalidArgument(format!("thickness must be positive, got {delta}")));
    }
    const R_MIN: f64 = 1e-8;
    const R_MAX: f64 = 50.0;
    let failure = Error::BracketFailure { lo: R_MIN, hi: R_MAX };
    let mut lo = R_MIN;
    if regular_side_width(n, lo) >= delta {
        return Err(failure);
    }
    let mut hi = 1.0;
    while regular_side_width(n, hi) <= delta {
        if hi >= R_MAX {
            return Err(failure);
        }
        lo = hi;
        hi = (2.0 * hi).min(R_MAX);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if regular_side_width(n, mid) < delta {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = if delta - regular_side_width(n, lo) <= regular_side_width(n, hi) - delta {
        lo
    } else {
        hi
    };
    let poly = regular_ngon(n, r)?;
    let th = thickness(&poly).thickness;
    if (th - delta).abs() > 1e-10 {
        return Err(Error::InvalidArgument(format!(
            "thickness {th} of the bisected polygon misses the target {delta}"
        )));
    }
    Ok(poly)
}

/// Options of [`solve_ordinary_reduced`].
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub max_iterations: usize,
    /// Convergence threshold on `max |r_i|`.
    pub tolerance: f64,
    /// Central-difference step, relative to the coordinate scale.
    pub fd_step: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            max_iterations: 200,
            tolerance: 1e-10,
            fd_step: 1e-7,
        }
    }
}

/// Parametrization of a gauge-fixed polygon: `v₀` fixed, `v₁` on the fixed ray
/// from `v₀`, the remaining vertices free in hyperboloid `(x, y)` coordinates.
struct Gauge {
    v0: HPoint,
    dir: crate::hcore::Vec3,
    n: usize,
}

impl Gauge {
    fn new(seed: &ConvexPolygon) -> Result<(Self, Vec<f64>)> {
        let v0 = *seed.vertex(0);
        let dir = v0.direction_to(seed.vertex(1))?;
        let n = seed.len();
        let mut params = Vec::with_capacity(2 * n - 3);
        params.push(dist(&v0, seed.vertex(1)));
        for v in &seed.vertices()[2..] {
            params.push(v.x());
            params.push(v.y());
        }
        Ok((Self { v0, dir, n }, params))
    }

    fn points(&self, params: &[f64]) -> Vec<HPoint> {
        let mut pts = Vec::with_capacity(self.n);
        pts.push(self.v0);
        pts.push(self.v0.exp(&self.dir, params[0]));
        for k in 0..self.n - 2 {
            pts.push(HPoint::lift(params[1 + 2 * k], params[2 + 2 * k]));
        }
        pts
    }

    /// `r_i = signed_dist(v_i, L_i) − delta`, with `L_i` oriented left of its side.
    fn residuals(&self, params: &[f64], delta: f64) -> Option<Vec<f64>> {
        let pts = self.points(params);
        let n = self.n;
        (0..n)
            .map(|i| {
                let a = (i + (n - 1) / 2) % n;
                let line = oriented_line_through(&pts[a], &pts[(a + 1) % n]).ok()?;
                let r = signed_dist(&pts[i], &line) - delta;
                r.is_finite().then_some(r)
            })
            .collect()
    }
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

fn sq_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

/// Damped Gauss–Newton solve for an ordinary reduced polygon of thickness
/// `delta` near `seed`.
///
/// The system has `n` equations in `2n − 3` gauge-fixed unknowns; each step is
/// the minimum-norm solution of the linearized system, so the iterate stays
/// as close to the seed as the constraints allow.
pub fn solve_ordinary_reduced(
    seed: &ConvexPolygon,
    delta: f64,
    opts: &SolveOptions,
) -> Result<ConvexPolygon> {
    let n = seed.len();
    check_odd(n)?;
    if !(delta > 0.0) {
        return Err(Error::InvalidArgument(format!("thickness must be positive, got {delta}")));
    }
    let (gauge, mut params) = Gauge::new(seed)?;
    let m = params.len();
    let mut r = gauge
        .residuals(&params, delta)
        .ok_or_else(|| Error::InvalidArgument("seed residuals are undefined".into()))?;
    let mut iterations = 0;
    while max_abs(&r) > opts.tolerance {
        if iterations >= opts.max_iterations {
            return Err(Error::NoConvergence {
                iterations,
                residual: max_abs(&r),
            });
        }
        iterations += 1;

        let mut jac = DMatrix::<f64>::zeros(n, m);
        for k in 0..m {
            let h = opts.fd_step * params[k].abs().max(1.0);
            let mut plus = params.clone();
            let mut minus = params.clone();
            plus[k] += h;
            minus[k] -= h;
            let (rp, rm) = match (gauge.residuals(&plus, delta), gauge.residuals(&minus, delta)) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::NoConvergence {
                        iterations,
                        residual: max_abs(&r),
                    })
                }
            };
            for i in 0..n {
                jac[(i, k)] = (rp[i] - rm[i]) / (2.0 * h);
            }
        }

        // Minimum-norm step: δ = −Jᵀ (J Jᵀ + μI)⁻¹ r.
        let jjt = &jac * jac.transpose();
        let mu = 1e-14 * jjt.diagonal().max().max(1e-300);
        let system = jjt + DMatrix::<f64>::identity(n, n) * mu;
        let rhs = DVector::from_column_slice(&r);
        let y = system
            .lu()
            .solve(&rhs)
            .ok_or(Error::NoConvergence {
                iterations,
                residual: max_abs(&r),
            })?;
        let step = -(jac.transpose() * y);

        let current = sq_norm(&r);
        let mut alpha = 1.0;
        let mut accepted = None;
        while alpha > 1e-10 {
            let trial: Vec<f64> = params
                .iter()
                .zip(step.iter())
                .map(|(p, s)| p + alpha * s)
                .collect();
            if let Some(rt) = gauge.residuals(&trial, delta) {
                if sq_norm(&rt) < current {
                    accepted = Some((trial, rt));
                    break;
                }
            }
            alpha *= 0.5;
        }
        match accepted {
            Some((p, rt)) => {
                params = p;
                r = rt;
            }
            None => {
                return Err(Error::NoConvergence {
                    iterations,
                    residual: max_abs(&r),
                })
            }
        }
    }

    let pts = gauge.points(&params);
    let positive = (0..n).all(|i| {
        crate::hcore::orientation(&pts[(i + n - 1) % n], &pts[i], &pts[(i + 1) % n]) > 0.0
    });
    if !positive {
        return Err(Error::LeftFamily("convexity lost".into()));
    }
    let poly = ConvexPolygon::new(pts).map_err(|e| Error::LeftFamily(format!("convexity lost: {e}")))?;
    let report = check_ordinary_reduced(&poly, DEFAULT_TOL)?;
    if !report.verdict {
        let why = if report.vertices.iter().any(|v| !v.foot_interior) {
            "a foot left the relative interior of its side"
        } else {
            "distances do not match the thickness"
        };
        return Err(Error::LeftFamily(why.into()));
    }
    Ok(poly)
}

/// Per-vertex quantities around the feet of an ordinary reduced polygon.
///
/// With `h = (n+1)/2` and `j = i + h`: `chord_left = |v_i p_j|`,
/// `chord_right = |p_i v_j|`, `alpha = ∠v_{i+1} v_i p_i` and
/// `beta = ∠p_i v_i v_j` (the angle the chord comparison controls).
#[derive(Debug, Clone, Serialize)]
pub struct FootRecord {
    pub i: usize,
    pub chord_left: f64,
    pub chord_right: f64,
    /// Boundary length from `v_i` to `p_i` in the positive direction.
    pub arc_forward: f64,
    /// Boundary length from `p_i` back to `v_i` in the positive direction.
    pub arc_backward: f64,
    pub half_perimeter_gap: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Relation between `L_i` and `L_{i+h}`.
    pub lines_relation: RelationKind,
}

#[derive(Debug, Clone, Serialize)]
pub struct FootReport {
    pub records: Vec<FootRecord>,
}

impl FootReport {
    pub fn max_chord_gap(&self) -> f64 {
        self.records
            .iter()
            .fold(0.0, |m, r| m.max((r.chord_left - r.chord_right).abs()))
    }

    pub fn max_half_perimeter_gap(&self) -> f64 {
        self.records
            .iter()
            .fold(0.0, |m, r| m.max(r.half_perimeter_gap.abs()))
    }

    /// Smallest `alpha − beta` over the vertices.
    pub fn min_angle_margin(&self) -> f64 {
        self.records
            .iter()
            .fold(f64::INFINITY, |m, r| m.min(r.alpha - r.beta))
    }

    /// Whether some pair `L_i`, `L_{i+h}` is ultraparallel.
    pub fn has_ultraparallel_pair(&self) -> bool {
        self.records
            .iter()
            .any(|r| r.lines_relation == RelationKind::Ultraparallel)
    }
}

/// Chord symmetry, perimeter halving and angle order at every vertex of an
/// ordinary reduced polygon.
pub fn verify_feet(poly: &ConvexPolygon) -> Result<FootReport> {
    let n = poly.len();
    let check = check_ordinary_reduced(poly, 1e-8)?;
    if !check.verdict {
        return Err(Error::NotOrdinaryReduced(format!(
            "distance spread {:e}",
            check.max_distance_spread
        )));
    }
    let feet: Vec<HPoint> = check.vertices.iter().map(|r| r.foot).collect();
    let half = (n - 1) / 2;
    let h = (n + 1) / 2;
    let side = |k: usize| dist(poly.vertex(k), poly.vertex(k + 1));
    let records = (0..n)
        .map(|i| {
            let j = (i + h) % n;
            let vi = poly.vertex(i);
            let vj = poly.vertex(j);
            let pi = &feet[i];
            let pj = &feet[j];
            let arc_forward: f64 = (0..half).map(|k| side(i + k)).sum::<f64>()
                + dist(poly.vertex(i + half), pi);
            let arc_backward: f64 =
                dist(pi, vj) + (0..(n - h)).map(|k| side(i + h + k)).sum::<f64>();
            FootRecord {
                i,
                chord_left: dist(vi, pj),
                chord_right: dist(pi, vj),
                arc_forward,
                arc_backward,
                half_perimeter_gap: arc_forward - arc_backward,
                alpha: angle_at(poly.vertex(i + 1), vi, pi).expect("distinct points"),
                beta: angle_at(pi, vi, vj).expect("distinct points"),
                lines_relation: line_relation(&opposite_line(poly, i), &opposite_line(poly, j))
                    .kind(),
            }
        })
        .collect();
    Ok(FootReport { records })
}

/// Upper bound on the diameter of an ordinary reduced polygon of thickness
/// `delta`: `arccosh(cosh Δ · √(1 + sinh²Δ / 3))`.
pub fn diameter_bound(delta: f64) -> f64 {
    let s = delta.sinh();
    (delta.cosh() * (1.0 + s * s / 3.0).sqrt()).acosh()
}

/// Quantities behind the diameter bound, taken at the diameter-witnessing pair
/// written as `(v_i, v_{i+h})`.
#[derive(Debug, Clone, Serialize)]
pub struct DiameterBoundReport {
    pub thickness: f64,
    pub diameter: f64,
    pub bound: f64,
    pub pair: (usize, usize),
    pub i: usize,
    /// `|p_i v_{i+h}|`.
    pub r: f64,
    /// `|v_i v_{i+h}|`.
    pub s: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `∠p_i v_{i+h} v_i`.
    pub gamma: f64,
    pub holds: bool,
}

/// `diameter(V) < diameter_bound(thickness(V))`.
pub fn verify_diameter_bound(poly: &ConvexPolygon) -> bool {
    diameter(poly).0 < diameter_bound(thickness(poly).thickness)
}

/// Full report for the diameter bound, including the right-triangle identities.
pub fn diameter_bound_report(poly: &ConvexPolygon) -> Result<DiameterBoundReport> {
    let n = poly.len();
    check_odd(n)?;
    let h = (n + 1) / 2;
    let (d, (a, b)) = diameter(poly);
    let i = if (a + h) % n == b {
        a
    } else if (b + h) % n == a {
        b
    } else {
        return Err(Error::NotOrdinaryReduced(format!(
            "diameter pair ({a}, {b}) has index gap outside (n ± 1)/2"
        )));
    };
    let j = (i + h) % n;
    let th = thickness(poly).thickness;
    let vi = poly.vertex(i);
    let vj = poly.vertex(j);
    let pi = foot(vi, &opposite_line(poly, i));
    let bound = diameter_bound(th);
    Ok(DiameterBoundReport {
        thickness: th,
        diameter: d,
        bound,
        pair: (a, b),
        i,
        r: dist(&pi, vj),
        s: dist(vi, vj),
        alpha: angle_at(poly.vertex(i + 1), vi, &pi)?,
        beta: angle_at(&pi, vi, vj)?,
        gamma: angle_at(&pi, vj, vi)?,
        holds: d < bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::diameter_via_width;

    #[test]
    fn opposite_side_examples() {
        // One-based (1,3) → (2,3); (1,5) → (3,4); (7,7) → (3,4).
        assert_eq!(opposite_side(0, 3).unwrap(), (1, 2));
        assert_eq!(opposite_side(0, 5).unwrap(), (2, 3));
        assert_eq!(opposite_side(6, 7).unwrap(), (2, 3));
        assert_eq!(opposite_side(0, 4), Err(Error::EvenGon(4)));
    }

    #[test]
    fn regular_pentagon_is_ordinary_reduced() {
        let p = regular_ngon(5, 1.0).unwrap();
        let rep = check_ordinary_reduced(&p, DEFAULT_TOL).unwrap();
        assert!(rep.verdict);
        assert!(rep.max_distance_spread < 1e-12);
        assert!(rep.vertices.iter().all(|v| (v.interior_margin - 0.5).abs() < 1e-12));
    }

    #[test]
    fn scalene_triangle_fails() {
        let t = ConvexPolygon::new(vec![
            HPoint::polar(1.0, 0.0),
            HPoint::polar(0.7, 2.0),
            HPoint::polar(1.2, 4.0),
        ])
        .unwrap();
        let rep = check_ordinary_reduced(&t, DEFAULT_TOL).unwrap();
        assert!(!rep.verdict);
        assert!(rep.max_distance_spread > 1e-3);
    }

    #[test]
    fn pushed_vertex_fails() {
        let mut v = regular_ngon(5, 1.0).unwrap().vertices().to_vec();
        v[0] = HPoint::polar(1.05, 0.0);
        let rep = check_ordinary_reduced(&ConvexPolygon::new(v).unwrap(), DEFAULT_TOL).unwrap();
        assert!(!rep.verdict);
    }

    #[test]
    fn even_gon_is_rejected() {
        let sq = ConvexPolygon::new((0..4).map(|k| HPoint::polar(1.0, k as f64 * PI / 2.0)).collect())
            .unwrap();
        assert!(matches!(check_ordinary_reduced(&sq, DEFAULT_TOL), Err(Error::EvenGon(4))));
        assert!(regular_ngon(4, 1.0).is_err());
        assert!(regular_ngon(5, -1.0).is_err());
    }

    #[test]
    fn regular_triangle_side() {
        let t = regular_ngon(3, 1.0).unwrap();
        let expected = 2.0 * (1f64.sinh() * (PI / 3.0).sin()).asinh();
        for k in 0..3 {
            assert!((dist(t.vertex(k), t.vertex(k + 1)) - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn regular_thickness_closed_form() {
        for n in [3, 5, 9] {
            for r in [0.3, 1.0, 2.5] {
                let p = regular_ngon(n, r).unwrap();
                let closed = r + (r.tanh() * (PI / n as f64).cos()).atanh();
                assert!((thickness(&p).thickness - closed).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn thickness_targeting() {
        let t = regular_ngon_with_thickness(3, 1.0).unwrap();
        assert!((thickness(&t).thickness - 1.0).abs() < 1e-10);
        let rep = check_ordinary_reduced(&t, DEFAULT_TOL).unwrap();
        assert!((rep.common_distance() - 1.0).abs() < 1e-9);
        assert!(matches!(
            regular_ngon_with_thickness(3, 500.0),
            Err(Error::BracketFailure { .. })
        ));
        assert!(regular_ngon_with_thickness(4, 1.0).is_err());
    }

    #[test]
    fn ratio_tends_to_one_for_many_sides() {
        let ratio = |n| {
            let p = regular_ngon_with_thickness(n, 1.0).unwrap();
            diameter(&p).0
        };
        assert!(ratio(99) < ratio(3));
        assert!(ratio(99) - 1.0 < 0.01);
    }

    #[test]
    fn solver_fixed_point() {
        let seed = regular_ngon_with_thickness(5, 1.0).unwrap();
        let out = solve_ordinary_reduced(&seed, 1.0, &SolveOptions::default()).unwrap();
        for (a, b) in out.vertices().iter().zip(seed.vertices()) {
            assert!(dist(a, b) < 1e-9);
        }
    }

    fn perturbed(n: usize, delta: f64, amp: &[f64]) -> ConvexPolygon {
        let base = regular_ngon_with_thickness(n, delta).unwrap();
        let r = dist(&HPoint::origin(), base.vertex(0));
        ConvexPolygon::new(
            (0..n)
                .map(|k| HPoint::polar(r + amp[k % amp.len()], 2.0 * PI * k as f64 / n as f64))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn solver_finds_non_regular_pentagon() {
        let seed = perturbed(5, 1.0, &[0.05, -0.05, 0.03, -0.02, 0.05]);
        let out = solve_ordinary_reduced(&seed, 1.0, &SolveOptions::default()).unwrap();
        let rep = check_ordinary_reduced(&out, 1e-9).unwrap();
        assert!(rep.verdict);
        let sides: Vec<f64> = (0..5).map(|k| dist(out.vertex(k), out.vertex(k + 1))).collect();
        let spread = sides.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - sides.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(spread > 1e-3, "solution is regular");
    }

    #[test]
    fn solver_returns_regular_triangle() {
        let seed = perturbed(3, 1.0, &[0.05, -0.04, 0.02]);
        let out = solve_ordinary_reduced(&seed, 1.0, &SolveOptions::default()).unwrap();
        let s: Vec<f64> = (0..3).map(|k| dist(out.vertex(k), out.vertex(k + 1))).collect();
        assert!((s[0] - s[1]).abs() < 1e-9 && (s[1] - s[2]).abs() < 1e-9);
        let reg = regular_ngon_with_thickness(3, 1.0).unwrap();
        assert!((s[0] - dist(reg.vertex(0), reg.vertex(1))).abs() < 1e-9);
    }

    #[test]
    fn solver_rejects_bad_input() {
        let sq = ConvexPolygon::new((0..4).map(|k| HPoint::polar(1.0, k as f64 * PI / 2.0)).collect())
            .unwrap();
        assert!(matches!(
            solve_ordinary_reduced(&sq, 1.0, &SolveOptions::default()),
            Err(Error::EvenGon(4))
        ));
        let seed = regular_ngon(5, 1.0).unwrap();
        let opts = SolveOptions {
            max_iterations: 0,
            ..SolveOptions::default()
        };
        assert!(matches!(
            solve_ordinary_reduced(&seed, 1.7, &opts),
            Err(Error::NoConvergence { .. })
        ));
    }

    #[test]
    fn regular_triangle_angles_coincide() {
        let t = regular_ngon_with_thickness(3, 1.0).unwrap();
        let rep = verify_feet(&t).unwrap();
        for r in &rep.records {
            assert!((r.alpha - r.beta).abs() < 1e-9);
        }
    }

    #[test]
    fn regular_pentagon_halves_perimeter() {
        let p = regular_ngon(5, 1.3).unwrap();
        let rep = verify_feet(&p).unwrap();
        assert!(rep.max_half_perimeter_gap() < 1e-10);
        assert!(rep.max_chord_gap() < 1e-10);
        assert!(rep.min_angle_margin() > 0.0);
    }

    #[test]
    fn angle_toward_neighbouring_foot_is_alpha() {
        // p_{i+h} lies on side v_i v_{i+1}, so ∠p_i v_i p_{i+h} = ∠v_{i+1} v_i p_i.
        let seed = perturbed(5, 1.0, &[0.04, -0.03, 0.02, 0.0, -0.04]);
        let p = solve_ordinary_reduced(&seed, 1.0, &SolveOptions::default()).unwrap();
        let rep = check_ordinary_reduced(&p, 1e-9).unwrap();
        for i in 0..5 {
            let j = (i + 3) % 5;
            let via_foot = angle_at(&rep.vertices[i].foot, p.vertex(i), &rep.vertices[j].foot).unwrap();
            let alpha = angle_at(p.vertex(i + 1), p.vertex(i), &rep.vertices[i].foot).unwrap();
            assert!((via_foot - alpha).abs() < 1e-9);
        }
    }

    #[test]
    fn non_reduced_input_is_rejected_by_verifier() {
        let t = ConvexPolygon::new(vec![
            HPoint::polar(1.0, 0.0),
            HPoint::polar(0.7, 2.0),
            HPoint::polar(1.2, 4.0),
        ])
        .unwrap();
        assert!(matches!(verify_feet(&t), Err(Error::NotOrdinaryReduced(_))));
    }

    #[test]
    fn bound_small_thickness_limit() {
        let d = 1e-4;
        let ratio = diameter_bound(d) / d;
        assert!((ratio - 2.0 / 3f64.sqrt()).abs() / (2.0 / 3f64.sqrt()) < 1e-3);
    }

    #[test]
    fn bound_holds_for_regular_triangle() {
        let t = regular_ngon_with_thickness(3, 1.0).unwrap();
        assert!(verify_diameter_bound(&t));
        let rep = diameter_bound_report(&t).unwrap();
        assert!(rep.holds);
        assert!((rep.s.cosh() - rep.r.cosh() * rep.thickness.cosh()).abs() < 1e-10);
        assert!((rep.gamma - rep.alpha - rep.beta).abs() < 1e-10);
        assert!((diameter_via_width(&t) - rep.diameter).abs() < 1e-8);
    }

    #[test]
    fn vertex_removal_decreases_thickness() {
        let p = regular_ngon_with_thickness(7, 1.5).unwrap();
        for k in 0..7 {
            let q = p.without_vertex(k).unwrap();
            assert!(thickness(&q).thickness < 1.5 - 1e-6);
        }
    }
}
