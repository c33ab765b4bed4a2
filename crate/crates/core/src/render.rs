//! Deterministic SVG figures in the Klein or Poincaré disk.

use crate::hcore::{foot, hyperboloid_to_chart, Chart, HLine, HPoint};
use crate::polygon::ConvexPolygon;
use crate::reduced::opposite_side;
use std::fmt::Write as _;

/// Drawing options.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub chart: Chart,
    /// Mark the feet `p_i` and draw the perpendiculars `v_i p_i` (odd polygons only).
    pub show_feet: bool,
    /// Draw the full lines through the opposite sides (odd polygons only).
    pub show_opposite_lines: bool,
    pub stroke_width: f64,
    pub side_color: String,
    pub aux_color: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            chart: Chart::Klein,
            show_feet: false,
            show_opposite_lines: false,
            stroke_width: 0.006,
            side_color: "#1f3b73".into(),
            aux_color: "#b04a2f".into(),
        }
    }
}

/// Centre and radius of the circle through chart points `a` and `b` that is
/// orthogonal to the unit circle, or `None` when the geodesic is a diameter.
///
/// Orthogonality means `|c|² = r² + 1`, which turns `|c − a| = r` into the
/// linear condition `c·a = (1 + |a|²) / 2`.
pub fn poincare_arc_center(a: [f64; 2], b: [f64; 2]) -> Option<([f64; 2], f64)> {
    let det = a[0] * b[1] - a[1] * b[0];
    let scale = (a[0].hypot(a[1]) * b[0].hypot(b[1])).max(f64::MIN_POSITIVE);
    if det.abs() <= 1e-12 * scale {
        return None;
    }
    let ra = 0.5 * (1.0 + a[0] * a[0] + a[1] * a[1]);
    let rb = 0.5 * (1.0 + b[0] * b[0] + b[1] * b[1]);
    let c = [(ra * b[1] - rb * a[1]) / det, (rb * a[0] - ra * b[0]) / det];
    let r = (c[0] - a[0]).hypot(c[1] - a[1]);
    Some((c, r))
}

fn num(v: f64) -> String {
    // Avoid "-0.000000000".
    let s = format!("{v:.9}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000000".into()
    } else {
        s
    }
}

/// Screen coordinates: the chart with y pointing down.
fn screen(p: [f64; 2]) -> (String, String) {
    (num(p[0]), num(-p[1]))
}

/// SVG path data for the geodesic segment between two chart points.
fn geodesic_path(a: [f64; 2], b: [f64; 2], chart: Chart) -> String {
    let (ax, ay) = screen(a);
    let (bx, by) = screen(b);
    let arc = match chart {
        Chart::Klein => None,
        Chart::Poincare => poincare_arc_center(a, b),
    };
    match arc {
        None => format!("M {ax} {ay} L {bx} {by}"),
        Some((c, r)) => {
            let cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
            // y is flipped on screen, which reverses the sweep direction.
            let sweep = if cross > 0.0 { 0 } else { 1 };
            format!("M {ax} {ay} A {r} {r} 0 0 {sweep} {bx} {by}", r = num(r))
        }
    }
}

fn chart_point(p: &HPoint, chart: Chart) -> [f64; 2] {
    let (x, y) = hyperboloid_to_chart(p, chart);
    [x, y]
}

/// Ideal endpoints are the same boundary points in both charts.
fn full_line_path(l: &HLine, chart: Chart) -> String {
    let [a, b] = l.ideal_endpoints();
    geodesic_path(a, b, chart)
}

/// Renders the polygon with optional construction overlays.
pub fn render_svg(poly: &ConvexPolygon, spec: &RenderSpec) -> String {
    let chart = spec.chart;
    let sw = num(spec.stroke_width);
    let thin = num(0.5 * spec.stroke_width);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"-1.05 -1.05 2.1 2.1\" width=\"600\" height=\"600\">\n",
    );
    writeln!(
        out,
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{thin}\"/>"
    )
    .unwrap();

    let n = poly.len();
    let odd = opposite_side(0, n).is_ok();
    if spec.show_opposite_lines && odd {
        out.push_str("<g id=\"opposite-lines\" fill=\"none\"");
        writeln!(out, " stroke=\"{}\" stroke-width=\"{thin}\" stroke-dasharray=\"0.02 0.015\">", spec.aux_color).unwrap();
        for i in 0..n {
            let (a, _) = opposite_side(i, n).expect("odd polygon");
            writeln!(out, "<path d=\"{}\"/>", full_line_path(&poly.side_line(a), chart)).unwrap();
        }
        out.push_str("</g>\n");
    }

    writeln!(out, "<g id=\"sides\" fill=\"none\" stroke=\"{}\" stroke-width=\"{sw}\">", spec.side_color).unwrap();
    for i in 0..n {
        let a = chart_point(poly.vertex(i), chart);
        let b = chart_point(poly.vertex(i + 1), chart);
        writeln!(out, "<path d=\"{}\"/>", geodesic_path(a, b, chart)).unwrap();
    }
    out.push_str("</g>\n");

    if spec.show_feet && odd {
        let feet: Vec<[f64; 2]> = (0..n)
            .map(|i| {
                let (a, _) = opposite_side(i, n).expect("odd polygon");
                chart_point(&foot(poly.vertex(i), &poly.side_line(a)), chart)
            })
            .collect();
        writeln!(out, "<g id=\"perpendiculars\" fill=\"none\" stroke=\"{}\" stroke-width=\"{thin}\">", spec.aux_color).unwrap();
        for (i, p) in feet.iter().enumerate() {
            let v = chart_point(poly.vertex(i), chart);
            writeln!(out, "<path d=\"{}\"/>", geodesic_path(v, *p, chart)).unwrap();
        }
        out.push_str("</g>\n");
        writeln!(out, "<g id=\"feet\" fill=\"{}\">", spec.aux_color).unwrap();
        for p in &feet {
            let (x, y) = screen(*p);
            writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"0.012\"/>").unwrap();
        }
        out.push_str("</g>\n");
    }

    writeln!(out, "<g id=\"vertices\" fill=\"{}\">", spec.side_color).unwrap();
    for v in poly.vertices() {
        let (x, y) = screen(chart_point(v, chart));
        writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"0.015\"/>").unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduced::regular_ngon;

    fn count(hay: &str, needle: &str) -> usize {
        hay.matches(needle).count()
    }

    #[test]
    fn klein_pentagon_has_five_chords_and_feet() {
        let p = regular_ngon(5, 1.0).unwrap();
        let spec = RenderSpec {
            show_feet: true,
            ..RenderSpec::default()
        };
        let svg = render_svg(&p, &spec);
        assert!(svg.contains("viewBox=\"-1.05 -1.05 2.1 2.1\""));
        let sides = svg.split("<g id=\"sides\"").nth(1).unwrap().split("</g>").next().unwrap();
        assert_eq!(count(sides, "<path"), 5);
        assert_eq!(count(sides, " L "), 5);
        let feet = svg.split("<g id=\"feet\"").nth(1).unwrap().split("</g>").next().unwrap();
        assert_eq!(count(feet, "<circle"), 5);
    }

    #[test]
    fn arc_center_is_orthogonal_to_boundary() {
        let pts = [[0.3, 0.1], [-0.2, 0.5], [0.6, -0.6], [0.05, 0.0]];
        for a in pts {
            for b in pts {
                if a == b {
                    continue;
                }
                let (c, r) = poincare_arc_center(a, b).unwrap();
                assert!((c[0] * c[0] + c[1] * c[1] - r * r - 1.0).abs() < 1e-9);
                assert!(((c[0] - b[0]).hypot(c[1] - b[1]) - r).abs() < 1e-9);
            }
        }
        assert!(poincare_arc_center([0.2, 0.2], [-0.4, -0.4]).is_none());
    }

    #[test]
    fn poincare_sides_are_arcs_through_the_geodesic_midpoint() {
        let p = regular_ngon(5, 1.0).unwrap();
        for i in 0..5 {
            let a = chart_point(p.vertex(i), Chart::Poincare);
            let b = chart_point(p.vertex(i + 1), Chart::Poincare);
            let m = chart_point(&p.vertex(i).midpoint(p.vertex(i + 1)), Chart::Poincare);
            let (c, r) = poincare_arc_center(a, b).unwrap();
            assert!(((c[0] - m[0]).hypot(c[1] - m[1]) - r).abs() < 1e-6);
        }
        let svg = render_svg(&p, &RenderSpec { chart: Chart::Poincare, ..RenderSpec::default() });
        assert_eq!(count(&svg, " A "), 5);
    }

    #[test]
    fn rendering_is_deterministic() {
        let p = regular_ngon(7, 0.8).unwrap();
        let spec = RenderSpec {
            chart: Chart::Poincare,
            show_feet: true,
            show_opposite_lines: true,
            ..RenderSpec::default()
        };
        assert_eq!(render_svg(&p, &spec), render_svg(&p, &spec));
        assert!(svg_has_opposite_lines(&render_svg(&p, &spec), 7));
    }

    fn svg_has_opposite_lines(svg: &str, n: usize) -> bool {
        let g = svg.split("<g id=\"opposite-lines\"").nth(1).unwrap().split("</g>").next().unwrap();
        count(g, "<path") == n
    }

    #[test]
    fn even_polygon_skips_overlays() {
        let q = crate::extremal::rhombus(1.0, 0.5).unwrap();
        let spec = RenderSpec {
            show_feet: true,
            show_opposite_lines: true,
            ..RenderSpec::default()
        };
        let svg = render_svg(&q, &spec);
        assert!(!svg.contains("feet") && !svg.contains("opposite-lines"));
    }
}
