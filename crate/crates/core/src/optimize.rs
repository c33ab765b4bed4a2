//! One-dimensional minimization used by the pencil searches and bisections.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a minimum of `f` on `[a, b]`.
///
/// Returns the best abscissa seen together with its value; the endpoints are
/// included in the comparison so boundary minima are not lost.
pub fn golden_section_min<F>(f: F, a: f64, b: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let fa = f(lo);
    let fb = f(hi);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        iterations += 1;
    }
    [(a, fa), (b, fb), (x1, f1), (x2, f2)]
        .into_iter()
        .fold((x1, f1), |best, cand| if cand.1 < best.1 { cand } else { best })
}

/// Samples `f` at `samples` equispaced points of `[a, b]`, then refines with
/// golden-section search between the neighbours of the best sample.
///
/// No unimodality is assumed on the whole interval.
pub fn sampled_min<F>(f: F, a: f64, b: f64, samples: usize, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let samples = samples.max(2);
    let step = (b - a) / (samples - 1) as f64;
    let xs: Vec<f64> = (0..samples)
        .map(|k| if k + 1 == samples { b } else { a + step * k as f64 })
        .collect();
    let (best, fbest) = xs
        .iter()
        .map(|&x| (x, f(x)))
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (k, (_, v))| if v < acc.1 { (k, v) } else { acc });
    let lo = xs[best.saturating_sub(1)];
    let hi = xs[(best + 1).min(samples - 1)];
    let (x, fx) = golden_section_min(&f, lo, hi, tol);
    if fx <= fbest {
        (x, fx)
    } else {
        (xs[best], fbest)
    }
}

/// Maximizing counterpart of [`sampled_min`].
pub fn sampled_max<F>(f: F, a: f64, b: f64, samples: usize, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let (x, v) = sampled_min(|t| -f(t), a, b, samples, tol);
    (x, -v)
}
