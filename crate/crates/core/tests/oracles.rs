mod common;

use common::{dense_thickness_oracle, dist, random_polygons, rng};
use hyperreduce::hcore::{angle_at, line_through, signed_dist, HPoint};
use hyperreduce::width::thickness;
use rand::Rng;
use std::f64::consts::PI;
use twofloat::TwoFloat;

/// `arccosh(−B(p, q) / √(B(p, p) B(q, q)))`, with the cancellation in
/// `−B(p, q) − √(B(p, p) B(q, q))` carried out in double-double.
fn dist_oracle(p: &HPoint, q: &HPoint) -> f64 {
    let form = |a: &[f64; 3], b: &[f64; 3]| {
        TwoFloat::new_mul(a[0], b[0]) + TwoFloat::new_mul(a[1], b[1]) - TwoFloat::new_mul(a[2], b[2])
    };
    let (a, b) = (p.coords(), q.coords());
    let norm = (form(a, a) * form(b, b)).sqrt();
    let excess = f64::from(-form(a, b) - norm) / f64::from(norm);
    if excess <= 0.0 {
        return 0.0;
    }
    // arccosh(1 + e) = log1p(e + √(e (2 + e))).
    (excess + (excess * (2.0 + excess)).sqrt()).ln_1p()
}

#[test]
fn distance_matches_double_double_oracle() {
    let mut r = rng(77);
    for _ in 0..2000 {
        let p = HPoint::polar(r.gen_range(0.0..4.0), r.gen_range(0.0..2.0 * PI));
        // Separations from 1e-9 to 10 on a log scale.
        let s = 10f64.powf(r.gen_range(-9.0..1.0));
        let target = HPoint::polar(r.gen_range(0.5..3.0), r.gen_range(0.0..2.0 * PI));
        let Ok(dir) = p.direction_to(&target) else { continue };
        let q = p.exp(&dir, s);
        let (d, o) = (dist(&p, &q), dist_oracle(&p, &q));
        // Stored points sit off the sheet by up to an ulp of t², which no
        // formula can resolve; beyond that the agreement is relative.
        let tol = 1e-12 * o + 4e-16 * (p.t() * p.t() + q.t() * q.t());
        assert!((d - o).abs() <= tol, "s={s:e}: {d:e} vs {o:e}");
        if s < 1e-3 && p.t() < 2.5 {
            // Short distances near the origin keep full relative precision.
            assert!((d - o).abs() <= 1e-12 * o, "s={s:e}: {d:e} vs {o:e}");
        }
    }
}

#[test]
fn angle_matches_law_of_cosines() {
    let mut r = rng(78);
    for _ in 0..500 {
        let pts: Vec<HPoint> = (0..3)
            .map(|_| HPoint::polar(r.gen_range(0.0..2.0), r.gen_range(0.0..2.0 * PI)))
            .collect();
        let (a, b, c) = (&pts[0], &pts[1], &pts[2]);
        let (ab, bc, ac) = (dist(a, b), dist(b, c), dist(a, c));
        if ab.min(bc).min(ac) < 0.05 {
            continue;
        }
        let cos = (ab.cosh() * bc.cosh() - ac.cosh()) / (ab.sinh() * bc.sinh());
        let oracle = cos.clamp(-1.0, 1.0).acos();
        assert!((angle_at(a, b, c).unwrap() - oracle).abs() < 1e-7);
    }
}

#[test]
fn signed_distance_matches_sampled_minimum() {
    let mut r = rng(79);
    for _ in 0..100 {
        let a = HPoint::polar(r.gen_range(0.0..1.5), r.gen_range(0.0..2.0 * PI));
        let b = HPoint::polar(r.gen_range(0.0..1.5), r.gen_range(0.0..2.0 * PI));
        if dist(&a, &b) < 0.1 {
            continue;
        }
        let l = line_through(&a, &b).unwrap();
        let p = HPoint::polar(r.gen_range(0.0..2.0), r.gen_range(0.0..2.0 * PI));
        let dir = a.direction_to(&b).unwrap();
        let sampled = (-20_000..=20_000)
            .map(|k| dist(&p, &a.exp(&dir, k as f64 * 5e-4)))
            .fold(f64::INFINITY, f64::min);
        let sd = signed_dist(&p, &l).abs();
        assert!(sampled >= sd - 1e-12);
        assert!(sampled - sd < 1e-6, "{sampled} vs {sd}");
    }
}

#[test]
fn regular_area_and_perimeter_closed_forms() {
    for (n, rr) in [(3usize, 0.5), (5, 1.0), (7, 2.0)] {
        let p = hyperreduce::reduced::regular_ngon(n, rr).unwrap();
        let side = 2.0 * (rr.sinh() * (PI / n as f64).sin()).asinh();
        assert!((p.perimeter() - n as f64 * side).abs() < 1e-12);
        // Interior angle from the right triangle centre–midpoint–vertex.
        let half = (1.0 / (rr.cosh() * (PI / n as f64).tan())).atan();
        let area = (n as f64 - 2.0) * PI - 2.0 * n as f64 * half;
        assert!((p.area() - area).abs() < 1e-10);
    }
}

#[test]
fn thickness_matches_dense_sampling() {
    for p in random_polygons(10, 80, 3..=6) {
        let th = thickness(&p).thickness;
        assert!((th - dense_thickness_oracle(&p, 10_000)).abs() < 1e-5);
    }
}
