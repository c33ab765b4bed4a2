//! Seeded generators for test and scan polygons.

use crate::error::Result;
use crate::hcore::{Chart, HPoint, Isometry};
use crate::polygon::ConvexPolygon;
use crate::reduced::{regular_ngon_with_thickness, solve_ordinary_reduced, SolveOptions};
use rand::Rng;
use std::f64::consts::PI;

/// A random orientation-preserving isometry moving the origin at most `max_shift`.
pub fn random_isometry<R: Rng>(rng: &mut R, max_shift: f64) -> Isometry {
    let phi = rng.gen_range(0.0..2.0 * PI);
    let d = rng.gen_range(0.0..=max_shift);
    let theta = rng.gen_range(0.0..2.0 * PI);
    Isometry::translation(phi, d).compose(&Isometry::rotation(theta))
}

/// A random strictly convex `n`-gon.
///
/// Vertices start on a Klein-chart circle at sorted random angles, the circle
/// is squashed along a random axis, and a random isometry is applied.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, n: usize) -> ConvexPolygon {
    loop {
        let radius = rng.gen_range(0.3..0.85);
        let min_gap = PI / (2.0 * n as f64);
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..n).all(|k| {
            let next = if k + 1 == n { angles[0] + 2.0 * PI } else { angles[k + 1] };
            next - angles[k] >= min_gap
        });
        if !gaps_ok {
            continue;
        }
        let squash = rng.gen_range(0.4..1.0);
        let axis = rng.gen_range(0.0..PI);
        let (s, c) = axis.sin_cos();
        let pts: Vec<HPoint> = angles
            .iter()
            .map(|a| {
                let (x, y) = (radius * a.cos(), radius * a.sin());
                let u = c * x + s * y;
                let w = squash * (-s * x + c * y);
                crate::hcore::chart_to_hyperboloid(c * u - s * w, s * u + c * w, Chart::Klein)
                    .expect("inside the unit disk")
            })
            .collect();
        let g = random_isometry(rng, 1.5);
        if let Ok(p) = ConvexPolygon::new(pts.iter().map(|p| g.apply_point(p)).collect()) {
            return p;
        }
    }
}

/// A convex pair `U ⊂ W`: `W` random, `U` obtained by cutting a cap off `W`.
pub fn nested_pair<R: Rng>(rng: &mut R, n: usize) -> (ConvexPolygon, ConvexPolygon) {
    loop {
        let w = random_convex_polygon(rng, n);
        let k = rng.gen_range(0..n);
        let depth = rng.gen_range(0.01..0.2);
        if let Ok(u) = w.truncate_vertex(k, depth) {
            return (u, w);
        }
    }
}

/// The regular `n`-gon of thickness `delta` with every vertex moved radially
/// by a relative amount up to `amplitude`.
pub fn perturbed_regular<R: Rng>(
    rng: &mut R,
    n: usize,
    delta: f64,
    amplitude: f64,
) -> Result<ConvexPolygon> {
    let reg = regular_ngon_with_thickness(n, delta)?;
    let origin = HPoint::origin();
    let pts = reg
        .vertices()
        .iter()
        .map(|v| {
            let scale = 1.0 + rng.gen_range(-amplitude..=amplitude);
            let r = crate::hcore::dist_pp(&origin, v)?;
            Ok(HPoint::polar(r * scale, v.y().atan2(v.x())))
        })
        .collect::<Result<Vec<_>>>()?;
    ConvexPolygon::new(pts)
}

/// Solves for an ordinary reduced polygon of thickness `delta` from a
/// perturbed regular seed.
pub fn reduced_from_perturbation<R: Rng>(
    rng: &mut R,
    n: usize,
    delta: f64,
    amplitude: f64,
) -> Result<ConvexPolygon> {
    let seed = perturbed_regular(rng, n, delta, amplitude)?;
    solve_ordinary_reduced(&seed, delta, &SolveOptions::default())
}

/// Largest difference between two side lengths; zero for regular polygons.
pub fn side_spread(poly: &ConvexPolygon) -> f64 {
    let sides: Vec<f64> = (0..poly.len())
        .map(|i| crate::hcore::dist(poly.vertex(i), poly.vertex(i + 1)))
        .collect();
    let max = sides.iter().cloned().fold(f64::MIN, f64::max);
    let min = sides.iter().cloned().fold(f64::MAX, f64::min);
    max - min
}
