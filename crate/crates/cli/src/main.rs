//! `kappachain`: solve triangles, redraw chains between surfaces, run the
//! randomized comparison suites and sweep chord length against curvature.

mod svg;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kappachain::harness::{
    redraw_pipeline, run_suite, strictly_decreasing_in_kappa, sweep_radius, Suite, TheoremReport,
};
use kappachain::lemma_lab::{geometric_grid, legendre_order_fit, ScaleMode, ORDER_WINDOW};
use kappachain::triangulate::{fan_triangulate, redraw};
use kappachain::{
    solve_sss, spherical_excess, ChainSpec, ConvexChain, Curvature, GeomError, Tolerance, Triangle,
};

#[derive(Parser)]
#[command(
    name = "kappachain",
    version,
    about = "Convex chains on spheres and the plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Angles and excess of a triangle given by its sides.
    Solve {
        /// Comma-separated side lengths a,b,c.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        sides: Vec<f64>,
        #[arg(long, default_value_t = 0.0)]
        kappa: f64,
    },
    /// Redraw a chain's fan triangulation on another surface.
    Redraw {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long = "kappa-to")]
        kappa_to: f64,
        /// Write the redrawn triangulation as JSON.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run a randomized suite and print one report per instance.
    Verify {
        /// cauchy, sphere-to-plane, growing-sphere, thin-triangle, all-angles or legendre-order.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Relative margin for strict inequalities (at least 1e-12).
        #[arg(long)]
        tolerance: Option<f64>,
        /// Write the report stream here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Chord length of a chain over a grid of curvatures.
    Sweep {
        /// Chain record file.
        #[arg(long)]
        chain: PathBuf,
        /// `k1,k2,...` or `geom:from:to:n`.
        #[arg(long)]
        grid: String,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ChainArgs {
    /// Chain record file.
    #[arg(long)]
    chain: PathBuf,
    /// Overrides the curvature in the record.
    #[arg(long)]
    kappa: Option<f64>,
}

enum Failure {
    /// A checked property did not hold.
    Property(String),
    Validation(String),
    Embeddability(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Property(_) => 1,
            Failure::Validation(_) => 2,
            Failure::Embeddability(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Property(m) | Failure::Validation(m) | Failure::Embeddability(m) => m,
        }
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Embeddability(_) => Failure::Embeddability(e.to_string()),
            GeomError::GeneratorExhausted { .. } => Failure::Property(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Validation(format!("{}: {e}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_err(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_chain(args: &ChainArgs) -> Result<(ConvexChain, Curvature), Failure> {
    let text = fs::read_to_string(&args.chain).map_err(|e| io_err(&args.chain, e))?;
    let spec = ChainSpec::parse(&text)
        .map_err(|e| Failure::Validation(format!("{}: {e}", args.chain.display())))?;
    let curv = match (args.kappa, spec.curvature) {
        (Some(k), _) => Curvature::new(k)?,
        (None, Some(k)) => k,
        (None, None) => {
            return Err(Failure::Validation(
                "no curvature: pass --kappa or set curvature in the chain record".into(),
            ))
        }
    };
    Ok((spec.to_chain()?, curv))
}

fn cmd_solve(sides: &[f64], kappa: f64) -> CmdResult {
    let [a, b, c] = <[f64; 3]>::try_from(sides)
        .map_err(|_| Failure::Validation(format!("--sides needs 3 values, got {}", sides.len())))?;
    let tri = Triangle::new(a, b, c, Curvature::new(kappa)?)?;
    let angles = solve_sss(&tri);
    let excess = spherical_excess(&tri);
    let mut out = String::new();
    let _ = writeln!(out, "kappa   {kappa}");
    let _ = writeln!(out, "sides   {a} {b} {c}");
    for (name, x) in [
        ("alpha", angles.alpha),
        ("beta", angles.beta),
        ("gamma", angles.gamma),
        ("excess", excess),
    ] {
        let _ = writeln!(out, "{name:<7} {:>12.6} deg  {x:.12} rad", x.to_degrees());
    }
    print!("{out}");
    Ok(())
}

fn cmd_redraw(args: &ChainArgs, kappa_to: f64, export: Option<&Path>) -> CmdResult {
    let (chain, from) = load_chain(args)?;
    let to = Curvature::new(kappa_to)?;
    if let Some(path) = export {
        let moved = redraw(&fan_triangulate(&chain, from)?, to)?;
        let json = serde_json::to_string_pretty(&moved)
            .map_err(|e| Failure::Validation(format!("export: {e}")))?;
        fs::write(path, json + "\n").map_err(|e| io_err(path, e))?;
    }
    let p = redraw_pipeline(&chain, from, to)?;
    let mut out = String::new();
    let _ = writeln!(out, "vertex  theta_from          theta_to            delta");
    for (i, (th, d)) in chain
        .interior_angles()
        .iter()
        .zip(&p.angle_drops)
        .enumerate()
    {
        let delta = 0.0 - d;
        let _ = writeln!(
            out,
            "{:<6}  {th:<18.12}  {:<18.12}  {delta:.6e}",
            i + 1,
            th - d
        );
    }
    let _ = writeln!(
        out,
        "endpoint distance on kappa={}: {:.12}",
        from.kappa(),
        p.d_source
    );
    let _ = writeln!(
        out,
        "boundary chain on kappa={}: {:.12}",
        to.kappa(),
        p.d_reembedded
    );
    let _ = writeln!(out, "chain on kappa={}: {:.12}", to.kappa(), p.d_target);
    let _ = writeln!(out, "boundary convex: {}", p.boundary_convex);
    print!("{out}");
    Ok(())
}

fn report_stream(reports: &[TheoremReport]) -> String {
    let mut out = String::from(TheoremReport::HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.to_line());
        out.push('\n');
    }
    out
}

fn cmd_verify(
    suite: &str,
    seed: u64,
    count: u64,
    tolerance: Option<f64>,
    csv: Option<&Path>,
) -> CmdResult {
    let tol = match tolerance {
        Some(t) => Tolerance::new(t)?,
        None => Tolerance::default(),
    };
    if suite == "legendre-order" {
        return verify_legendre_order();
    }
    let suite: Suite = suite.parse()?;
    if count == 0 {
        return Err(Failure::Validation("--count must be positive".into()));
    }
    let mut reports = Vec::with_capacity(count as usize);
    let mut errors = Vec::new();
    for (i, r) in run_suite(suite, seed, count, &tol).into_iter().enumerate() {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) => errors.push(format!("instance {i}: {e}")),
        }
    }
    write_or_print(csv, &report_stream(&reports))?;
    let passed = reports.iter().filter(|r| r.verdict.is_pass()).count();
    let min_margin = reports
        .iter()
        .map(|r| r.margin)
        .fold(f64::INFINITY, f64::min);
    for e in &errors {
        eprintln!("error: {e}");
    }
    eprintln!(
        "{suite}: {passed} pass, {} fail, {} error (seed {seed}, min margin {min_margin:.3e})",
        reports.len() - passed,
        errors.len()
    );
    if passed as u64 == count {
        Ok(())
    } else {
        Err(Failure::Property(format!(
            "{suite}: {} of {count} instances did not pass",
            count - passed as u64
        )))
    }
}

/// Residual order for the family `(1, 1.2, 1.5)·t` on the unit sphere.
fn verify_legendre_order() -> CmdResult {
    let tri = Triangle::new(1.0, 1.2, 1.5, Curvature::UNIT_SPHERE)?;
    let fit = legendre_order_fit(
        &tri,
        &geometric_grid(0.02, 0.2, 12),
        ScaleMode::FixedCurvature,
    )?;
    println!("scale,max_abs_residual");
    for (t, r) in &fit.samples {
        println!("{t:.6e},{r:.6e}");
    }
    eprintln!(
        "legendre-order: slope {:.4}, window [{}, {}], {}",
        fit.slope,
        ORDER_WINDOW.0,
        ORDER_WINDOW.1,
        if fit.inconclusive {
            "inconclusive"
        } else {
            "conclusive"
        }
    );
    if fit.in_window() {
        Ok(())
    } else {
        Err(Failure::Property(format!(
            "fitted order {:.4} outside the window",
            fit.slope
        )))
    }
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, Failure> {
    let bad = || {
        Failure::Validation(format!(
            "bad grid {spec:?}: use k1,k2,... or geom:from:to:n"
        ))
    };
    if let Some(rest) = spec.strip_prefix("geom:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let [from, to, n] = parts.as_slice() else {
            return Err(bad());
        };
        let from: f64 = from.parse().map_err(|_| bad())?;
        let to: f64 = to.parse().map_err(|_| bad())?;
        let n: usize = n.parse().map_err(|_| bad())?;
        if !(from > 0.0 && to > 0.0 && n >= 1) {
            return Err(Failure::Validation(
                "geometric grid needs positive ends and n >= 1".into(),
            ));
        }
        return Ok(geometric_grid(from, to, n));
    }
    let grid = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(grid)
}

fn cmd_sweep(file: &Path, grid: &str, csv: Option<&Path>, svg_path: Option<&Path>) -> CmdResult {
    let text = fs::read_to_string(file).map_err(|e| io_err(file, e))?;
    let chain = ChainSpec::parse(&text)
        .and_then(|s| s.to_chain())
        .map_err(|e| Failure::Validation(format!("{}: {e}", file.display())))?;
    let grid = parse_grid(grid)?;
    let points = sweep_radius(&chain, &grid);
    let mut out = String::from("kappa,radius,endpoint_distance\n");
    let mut plot = Vec::new();
    for p in &points {
        let d = match &p.distance {
            Ok(d) => *d,
            Err(e) => return Err(Failure::Embeddability(format!("kappa = {}: {e}", p.kappa))),
        };
        let radius = p.radius.map(|r| r.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{},{radius},{d}", p.kappa);
        if let Some(r) = p.radius {
            plot.push((r, d));
        }
    }
    write_or_print(csv, &out)?;
    if let Some(path) = svg_path {
        plot.sort_by(|a, b| a.0.total_cmp(&b.0));
        let doc = svg::line_plot(
            &plot,
            "radius",
            "endpoint distance",
            "endpoint distance against radius",
        );
        fs::write(path, doc).map_err(|e| io_err(path, e))?;
    }
    if chain.edge_count() > 1 && !strictly_decreasing_in_kappa(&points) {
        eprintln!("note: distances are not strictly decreasing in kappa");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve { sides, kappa } => cmd_solve(sides, *kappa),
        Command::Redraw {
            chain,
            kappa_to,
            export,
        } => cmd_redraw(chain, *kappa_to, export.as_deref()),
        Command::Verify {
            suite,
            seed,
            count,
            tolerance,
            csv,
        } => cmd_verify(suite, *seed, *count, *tolerance, csv.as_deref()),
        Command::Sweep {
            chain,
            grid,
            csv,
            svg,
        } => cmd_sweep(chain, grid, csv.as_deref(), svg.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
