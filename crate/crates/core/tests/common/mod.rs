#![allow(dead_code)]

use hyperreduce::corpus::{random_convex_polygon, reduced_from_perturbation};
use hyperreduce::hcore::{dist_pp, mink, mink_cross, HPoint};
use hyperreduce::reduced::regular_ngon_with_thickness;
use hyperreduce::ConvexPolygon;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

pub fn dist(p: &HPoint, q: &HPoint) -> f64 {
    dist_pp(p, q).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A named ordinary reduced polygon.
pub struct Reduced {
    pub name: String,
    pub poly: ConvexPolygon,
    pub regular: bool,
}

pub const CORPUS_DELTAS: [f64; 4] = [0.5, 1.0, 2.0, 3.0];

/// Regular polygons plus solver-generated pentagons and heptagons.
pub fn reduced_corpus() -> Vec<Reduced> {
    let mut out = Vec::new();
    for n in [3, 5, 7, 9] {
        for d in CORPUS_DELTAS {
            out.push(Reduced {
                name: format!("regular n={n} delta={d}"),
                poly: regular_ngon_with_thickness(n, d).unwrap(),
                regular: true,
            });
        }
    }
    let mut r = rng(2024);
    for n in [5, 7] {
        for d in CORPUS_DELTAS {
            for k in 0..3 {
                let poly = reduced_from_perturbation(&mut r, n, d, 0.05)
                    .unwrap_or_else(|e| panic!("solver failed for n={n} delta={d}: {e}"));
                out.push(Reduced {
                    name: format!("solved n={n} delta={d} #{k}"),
                    poly,
                    regular: false,
                });
            }
        }
    }
    out
}

/// Seeded random convex polygons with `n` drawn from `ns`.
pub fn random_polygons(count: usize, seed: u64, ns: std::ops::RangeInclusive<usize>) -> Vec<ConvexPolygon> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(ns.clone());
            random_convex_polygon(&mut r, n)
        })
        .collect()
}

/// Thickness by sampling supporting lines over Klein-chart directions.
///
/// For a unit direction `m`, the supporting line `{m · k = h}` with
/// `h = max m · k_v` has hyperboloid normal proportional to `(m_x, m_y, h)`.
pub fn dense_thickness_oracle(poly: &ConvexPolygon, samples: usize) -> f64 {
    let k: Vec<[f64; 2]> = poly.vertices().iter().map(HPoint::klein).collect();
    let n = k.len();
    let mut dirs: Vec<[f64; 2]> = (0..samples)
        .map(|s| {
            let a = 2.0 * PI * s as f64 / samples as f64;
            [a.cos(), a.sin()]
        })
        .collect();
    for i in 0..n {
        let (a, b) = (k[i], k[(i + 1) % n]);
        let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
        let l = dx.hypot(dy);
        // Outward normal of a counter-clockwise side.
        dirs.push([dy / l, -dx / l]);
    }
    dirs.iter()
        .map(|m| {
            let h = k.iter().map(|p| m[0] * p[0] + m[1] * p[1]).fold(f64::MIN, f64::max);
            let s = (1.0 - h * h).sqrt();
            let u = [-m[0] / s, -m[1] / s, -h / s];
            poly.vertices()
                .iter()
                .map(|v| mink(v.coords(), &u).asinh())
                .fold(f64::MIN, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

fn sub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Smallest enclosing disk radius over all disks spanned by two or three vertices.
pub fn circumradius_oracle(poly: &ConvexPolygon) -> f64 {
    let v = poly.vertices();
    let n = v.len();
    let covers = |c: &HPoint, r: f64| v.iter().all(|p| dist(c, p) <= r + 1e-12);
    let mut best = f64::INFINITY;
    for a in 0..n {
        for b in a + 1..n {
            let c = v[a].midpoint(&v[b]);
            let r = dist(&c, &v[a]);
            if r < best && covers(&c, r) {
                best = r;
            }
            for d in b + 1..n {
                // Equidistant from three points: B(c, a − b) = B(c, a − d) = 0.
                let w = mink_cross(&sub(v[a].coords(), v[b].coords()), &sub(v[a].coords(), v[d].coords()));
                if mink(&w, &w) >= 0.0 {
                    continue;
                }
                let s = (-mink(&w, &w)).sqrt() * w[2].signum();
                let c = HPoint::lift(w[0] / s, w[1] / s);
                let r = dist(&c, &v[a]);
                if r < best && covers(&c, r) {
                    best = r;
                }
            }
        }
    }
    best
}
