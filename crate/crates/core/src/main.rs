use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use hyperreduce::extremal::{ratio_scan, ScanOptions};
use hyperreduce::hcore::{Chart, HLine};
use hyperreduce::io::{emit_polygon_file, parse_polygon, scan_csv, write_atomic, Model, PolygonFile};
use hyperreduce::reduced::{
    check_ordinary_reduced, diameter_bound_report, regular_ngon, regular_ngon_with_thickness,
    solve_ordinary_reduced, verify_feet, SolveOptions, DEFAULT_TOL,
};
use hyperreduce::render::{render_svg, RenderSpec};
use hyperreduce::width::{diameter, diameter_via_width, thickness, width_line, width_ultraparallel_oracle};
use hyperreduce::{ConvexPolygon, Error, Result};
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hyperreduce", version, about = "Width, thickness and ordinary reduced polygons in H²")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Hyperboloid,
    Klein,
    Poincare,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Hyperboloid => Model::Hyperboloid,
            ModelArg::Klein => Model::Klein,
            ModelArg::Poincare => Model::Poincare,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartArg {
    Klein,
    Poincare,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    Claims,
}

#[derive(Subcommand)]
enum Command {
    /// Width determined by a side line or an explicit supporting line.
    #[command(group(ArgGroup::new("which").required(true).args(["side", "line"])))]
    Width {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        side: Option<usize>,
        /// Line normal `a,b,c`, any vector with a² + b² − c² > 0 (rescaled to unit length).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        line: Option<Vec<f64>>,
    },
    /// Minimum width over all supporting lines.
    Thickness {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Largest vertex distance.
    Diameter {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Evaluate the ordinary reduced criterion.
    CheckReduced {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Regular odd-gon centred at the origin.
    #[command(group(ArgGroup::new("size").required(true).args(["thickness", "circumradius"])))]
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        thickness: Option<f64>,
        #[arg(long)]
        circumradius: Option<f64>,
        #[arg(long, value_enum, default_value = "hyperboloid")]
        model: ModelArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve for an ordinary reduced polygon near a seed polygon.
    Solve {
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 200)]
        max_iter: usize,
        #[arg(long, value_enum, default_value = "hyperboloid")]
        model: ModelArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numerical checks of the criterion, the feet properties, the diameter
    /// bound, or the width characterizations.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Diameter/thickness ratio scan written as CSV.
    Scan {
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        ns: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        deltas: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        perturbations: usize,
        #[arg(long, default_value_t = 0)]
        seed_rng: u64,
        #[arg(long, default_value_t = 0.05)]
        amplitude: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG figure in a disk chart.
    Render {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, value_enum, default_value = "klein")]
        chart: ChartArg,
        #[arg(long)]
        show_feet: bool,
        #[arg(long)]
        show_opposite_lines: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ConvexPolygon> {
    parse_polygon(&read(path)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// A closed pipe on stdout is not an error.
fn emit(text: &str) -> Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Io(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

/// Writes `text` to `out`, or prints it when no path is given.
fn deliver(text: &str, out: Option<&Path>, summary: Value) -> Result<Option<Value>> {
    match out {
        Some(path) => {
            write_atomic(path, text)?;
            eprintln!("hyperreduce: wrote {}", path.display());
            Ok(Some(summary))
        }
        None => {
            emit(text)?;
            Ok(None)
        }
    }
}

fn run(cmd: Command) -> Result<Option<Value>> {
    match cmd {
        Command::Width { polygon, side, line } => {
            let poly = load(&polygon)?;
            let l = match (side, line) {
                (Some(j), _) => {
                    if j >= poly.len() {
                        return Err(Error::InvalidArgument(format!(
                            "side {j} out of range for {} vertices",
                            poly.len()
                        )));
                    }
                    poly.side_line(j)
                }
                (None, Some(u)) => match u[..] {
                    [a, b, c] => HLine::from_spacelike([a, b, c])?,
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "--line expects 3 comma-separated values, got {}",
                            u.len()
                        )))
                    }
                },
                (None, None) => unreachable!("clap enforces the group"),
            };
            let report = width_line(&poly, &l)?;
            Ok(Some(json!({
                "width": report.width,
                "farthest_vertex_index": report.farthest_vertex_index,
                "line": report.line,
                "ultraparallel_width": width_ultraparallel_oracle(&poly, &l)?,
            })))
        }
        Command::Thickness { polygon } => Ok(Some(to_json(&thickness(&load(&polygon)?)))),
        Command::Diameter { polygon } => {
            let poly = load(&polygon)?;
            let (d, pair) = diameter(&poly);
            Ok(Some(json!({
                "diameter": d,
                "pair": pair,
                "via_width": diameter_via_width(&poly),
            })))
        }
        Command::CheckReduced { polygon, tol } => {
            let report = check_ordinary_reduced(&load(&polygon)?, tol)?;
            Ok(Some(to_json(&report)))
        }
        Command::Regular { n, thickness: delta, circumradius, model, out } => {
            let poly = match (delta, circumradius) {
                (Some(d), _) => regular_ngon_with_thickness(n, d)?,
                (None, Some(r)) => regular_ngon(n, r)?,
                (None, None) => unreachable!("clap enforces the group"),
            };
            let th = thickness(&poly).thickness;
            let file = PolygonFile {
                model: model.into(),
                polygon: poly,
                name: Some(format!("regular-{n}")),
                thickness: Some(th),
                provenance: Some("regular".into()),
            };
            deliver(&emit_polygon_file(&file), out.as_deref(), json!({ "n": n, "thickness": th }))
        }
        Command::Solve { seed, delta, max_iter, model, out } => {
            let seed_poly = load(&seed)?;
            let opts = SolveOptions {
                max_iterations: max_iter,
                ..SolveOptions::default()
            };
            let poly = solve_ordinary_reduced(&seed_poly, delta, &opts)?;
            let n = poly.len();
            let file = PolygonFile {
                model: model.into(),
                polygon: poly,
                name: Some(format!("reduced-{n}")),
                thickness: Some(delta),
                provenance: Some(format!("solved from {}", seed.display())),
            };
            deliver(&emit_polygon_file(&file), out.as_deref(), json!({ "n": n, "thickness": delta }))
        }
        Command::Verify { theorem, polygon } => {
            let poly = load(&polygon)?;
            verify(theorem, &poly).map(Some)
        }
        Command::Scan { ns, deltas, perturbations, seed_rng, amplitude, out } => {
            let outcome = ratio_scan(&ScanOptions {
                ns,
                deltas,
                perturbations,
                rng_seed: seed_rng,
                amplitude,
            });
            for f in &outcome.failures {
                eprintln!("hyperreduce: {}: {}", f.polygon_id, f.error);
            }
            for f in &outcome.findings {
                eprintln!("hyperreduce: finding: {f}");
            }
            let csv = scan_csv(&outcome.rows)?;
            let summary = json!({
                "rows": outcome.rows.len(),
                "failures": outcome.failures,
                "findings": outcome.findings,
            });
            deliver(&csv, out.as_deref(), summary)
        }
        Command::Render { polygon, chart, show_feet, show_opposite_lines, out } => {
            let poly = load(&polygon)?;
            let spec = RenderSpec {
                chart: match chart {
                    ChartArg::Klein => Chart::Klein,
                    ChartArg::Poincare => Chart::Poincare,
                },
                show_feet,
                show_opposite_lines,
                ..RenderSpec::default()
            };
            let svg = render_svg(&poly, &spec);
            deliver(&svg, out.as_deref(), json!({ "vertices": poly.len() }))
        }
    }
}

fn verify(theorem: Theorem, poly: &ConvexPolygon) -> Result<Value> {
    match theorem {
        Theorem::One => {
            let report = check_ordinary_reduced(poly, DEFAULT_TOL)?;
            let th = thickness(poly).thickness;
            // Deleting a vertex must lower the thickness of a reduced polygon.
            let removals: Vec<Value> = (0..poly.len())
                .map(|k| {
                    let smaller = poly.without_vertex(k).map(|q| thickness(&q).thickness);
                    json!({ "vertex": k, "thickness": smaller.as_ref().ok(), "decreases": smaller.map(|t| t < th).unwrap_or(true) })
                })
                .collect();
            let all = removals.iter().all(|r| r["decreases"] == json!(true));
            Ok(json!({
                "criterion": report.verdict,
                "thickness": th,
                "vertex_removals": removals,
                "holds": report.verdict && all,
            }))
        }
        Theorem::Two => {
            let report = verify_feet(poly)?;
            let holds = report.max_chord_gap() <= 1e-8
                && report.max_half_perimeter_gap() <= 1e-8
                && report.min_angle_margin() > -1e-12;
            Ok(json!({
                "records": report.records,
                "max_chord_gap": report.max_chord_gap(),
                "max_half_perimeter_gap": report.max_half_perimeter_gap(),
                "min_angle_margin": report.min_angle_margin(),
                "holds": holds,
            }))
        }
        Theorem::Three => {
            let check = check_ordinary_reduced(poly, 1e-8)?;
            if !check.verdict {
                return Err(Error::NotOrdinaryReduced(format!(
                    "distance spread {:e}",
                    check.max_distance_spread
                )));
            }
            Ok(to_json(&diameter_bound_report(poly)?))
        }
        Theorem::Claims => {
            let sides: Vec<Value> = (0..poly.len())
                .map(|j| {
                    let l = poly.side_line(j);
                    let w = width_line(poly, &l)?.width;
                    let o = width_ultraparallel_oracle(poly, &l)?;
                    Ok(json!({ "side": j, "width": w, "ultraparallel_width": o, "gap": (w - o).abs() }))
                })
                .collect::<Result<_>>()?;
            let (d, _) = diameter(poly);
            let dw = diameter_via_width(poly);
            let width_ok = sides.iter().all(|s| s["gap"].as_f64().unwrap_or(f64::INFINITY) <= 1e-7);
            Ok(json!({
                "sides": sides,
                "diameter": d,
                "diameter_via_width": dw,
                "holds": width_ok && (d - dw).abs() <= 1e-8,
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|v| match v {
        Some(v) => emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("values serialize"))),
        None => Ok(()),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hyperreduce: error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
