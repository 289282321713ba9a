//! `annulus` — command-line lab for folding rotations, the banded distal
//! map, rotation numbers, transversal checks, and constructive
//! linearization.
//!
//! Exit codes: 0 success, 2 usage/config error, 3 mathematical precondition
//! failure.

mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use annulus_core::approximant::Alpha;
use annulus_core::curve::CurveSample;
use annulus_core::dynamics::{
    orbit, radial_arc_image, rotation_number, transversal_report, MapHandle, TransversalReport,
};
use annulus_core::error::Error as CoreError;
use annulus_core::fold::FoldMap;
use annulus_core::gmap::{BandReport, GMap};
use annulus_core::io::{read_curve_csv, write_atomic, write_curve_csv};
use annulus_core::linearize::{
    build_linearization, conjugacy_residual, round_circle_crossings, synthetic_linearizable,
    window_consistency, Transversal,
};
use annulus_core::metrics::drawdown_mfa;
use annulus_core::point::AnnulusPoint;

#[derive(Parser)]
#[command(name = "annulus", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the folding map for p/q, validate it, and write its report.
    Fold(FoldArgs),
    /// Assemble the band map and write per-band reports and witness curves.
    Gmap(GmapArgs),
    /// Estimate the rotation number of a map along an orbit.
    Rotnum(RotnumArgs),
    /// Iterate a map and export the orbit as CSV.
    Orbit(OrbitArgs),
    /// Maximal folding angle (lifted-angle drawdown) of a curve.
    Mfa(MfaArgs),
    /// Crossing counts of an arc against sampled invariant circles.
    Transversal(TransversalArgs),
    /// Build the conjugacy to a rigid rotation and report its residual.
    Linearize(LinearizeArgs),
}

#[derive(Args)]
struct FoldArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Samples for the folded-circle export.
    #[arg(long, default_value_t = 4096)]
    samples: usize,
    /// Same-radius pairs for the Lipschitz scan.
    #[arg(long, default_value_t = 20_000)]
    pairs: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Also render the folded circle to SVG.
    #[arg(long)]
    svg: bool,
}

#[derive(Args, Clone)]
struct AlphaArgs {
    /// Rotation angle as a decimal string (or the word "golden").
    #[arg(long)]
    alpha: Option<String>,
    /// Rotation angle as continued-fraction coefficients, e.g. "0,1,1,1,1".
    #[arg(long, value_delimiter = ',')]
    alpha_cf: Option<Vec<u64>>,
}

impl AlphaArgs {
    fn parse(&self) -> anyhow::Result<Alpha> {
        match (&self.alpha, &self.alpha_cf) {
            (Some(_), Some(_)) => Err(anyhow!("give either --alpha or --alpha-cf, not both")),
            (Some(s), None) if s == "golden" => Ok(Alpha::golden_mean()),
            (Some(s), None) => Ok(Alpha::from_decimal_str(s)?),
            (None, Some(cf)) => Ok(Alpha::from_continued_fraction(cf)?),
            (None, None) => Err(anyhow!("missing --alpha or --alpha-cf")),
        }
    }
}

#[derive(Args)]
struct GmapArgs {
    #[command(flatten)]
    alpha: AlphaArgs,
    #[arg(long, default_value_t = 8)]
    levels: usize,
    /// Samples for witness-curve exports.
    #[arg(long, default_value_t = 4096)]
    samples: usize,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// JSON config file ({"alpha": ..or.. "alpha_cf": [...], "levels": n, "samples": n});
    /// overrides the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    svg: bool,
}

#[derive(Args)]
struct MapArgs {
    /// One of: rigid, g, hconj, synthetic.
    #[arg(long, default_value = "g")]
    map: String,
    #[command(flatten)]
    alpha: AlphaArgs,
    /// Rotation (turns) for --map rigid.
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value_t = 8)]
    levels: usize,
    /// Fold parameters for --map hconj.
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    /// Twist amplitude for --map synthetic.
    #[arg(long, default_value_t = 0.3)]
    amplitude: f64,
}

impl MapArgs {
    fn build(&self) -> anyhow::Result<MapHandle> {
        match self.map.as_str() {
            "rigid" => {
                let beta = self
                    .beta
                    .ok_or_else(|| anyhow!("--map rigid needs --beta"))?;
                Ok(MapHandle::rigid(beta))
            }
            "g" => {
                let alpha = self.alpha.parse()?;
                if self.levels == 0 {
                    Ok(MapHandle::rigid(alpha.value()))
                } else {
                    Ok(MapHandle::from_gmap(GMap::build(&alpha, self.levels)?))
                }
            }
            "hconj" => {
                let (p, q) = self
                    .p
                    .zip(self.q)
                    .ok_or_else(|| anyhow!("--map hconj needs --p and --q"))?;
                let alpha = self.alpha.parse()?;
                Ok(MapHandle::fold_conjugate(
                    FoldMap::build(p, q)?,
                    alpha.value(),
                ))
            }
            "synthetic" => {
                let alpha = self.alpha.parse()?;
                let (map, _) = synthetic_linearizable(alpha.value(), self.amplitude)?;
                Ok(map)
            }
            other => Err(anyhow!("unknown map {other:?}")),
        }
    }
}

#[derive(Args)]
struct RotnumArgs {
    #[command(flatten)]
    map: MapArgs,
    #[arg(long, default_value_t = 100_000)]
    iters: usize,
    /// Seed point "theta,r" (theta in radians).
    #[arg(long, default_value = "0.0,1.5")]
    seed: String,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    map: MapArgs,
    #[arg(long, default_value_t = 1000)]
    iters: usize,
    #[arg(long, default_value = "0.0,1.5")]
    seed: String,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct MfaArgs {
    /// Curve CSV to measure; alternative to --p/--q.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, default_value_t = 4096)]
    samples: usize,
}

#[derive(Args)]
struct TransversalArgs {
    #[command(flatten)]
    alpha: AlphaArgs,
    #[arg(long, default_value_t = 3)]
    levels: usize,
    /// Arc spec: "radial:<theta>", "iterate:<k>:<theta>", or "csv:<path>".
    #[arg(long)]
    arc: String,
    #[arg(long, default_value_t = 16)]
    circles: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LinearizeArgs {
    #[command(flatten)]
    map: MapArgs,
    /// Rotation number used by the conjugacy (defaults to the map's angle).
    #[arg(long)]
    theta: Option<f64>,
    /// Orbit window half-length N.
    #[arg(long, default_value_t = 10_000)]
    n_orbit: usize,
    /// Table grid "labels x samples-per-circle", e.g. "64x64".
    #[arg(long, default_value = "64x64")]
    grid: String,
    /// Largest tolerated angular hole in an orbit table, turns.
    #[arg(long, default_value_t = 0.05)]
    max_gap: f64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<CoreError>() {
        Some(
            CoreError::NotTransversal(_)
            | CoreError::PeriodicOrbit { .. }
            | CoreError::NonMonotoneCircleOrder { .. }
            | CoreError::InterpolationGap { .. }
            | CoreError::InverseMismatch { .. }
            | CoreError::PerturbationDisagreement(..)
            | CoreError::Undersampled { .. }
            | CoreError::PointLocation { .. }
            | CoreError::FoldConstruction(..),
        ) => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Fold(args) => cmd_fold(args),
        Command::Gmap(args) => cmd_gmap(args),
        Command::Rotnum(args) => cmd_rotnum(args),
        Command::Orbit(args) => cmd_orbit(args),
        Command::Mfa(args) => cmd_mfa(args),
        Command::Transversal(args) => cmd_transversal(args),
        Command::Linearize(args) => cmd_linearize(args),
    }
}

fn parse_seed(text: &str) -> anyhow::Result<AnnulusPoint> {
    let (theta, r) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("seed must be \"theta,r\""))?;
    let theta: f64 = theta.trim().parse().context("seed angle")?;
    let r: f64 = r.trim().parse().context("seed radius")?;
    Ok(AnnulusPoint::new(theta, r)?)
}

fn write_json(path: &Path, value: &impl Serialize) -> anyhow::Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    write_atomic(path, &bytes)?;
    Ok(())
}

#[derive(Serialize)]
struct FoldReportJson {
    schema: u32,
    p: u64,
    q: u64,
    commutation_residual: f64,
    lipschitz_ratio: f64,
    lipschitz_bound: f64,
    lipschitz_bound_sharp: f64,
    mfa: f64,
    mfa_bound: f64,
    simple: bool,
}

fn cmd_fold(args: FoldArgs) -> anyhow::Result<()> {
    let map = FoldMap::build(args.p, args.q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.rng_seed);
    let report = map.validation_report(&mut rng)?;
    let ratio = if args.pairs > 20_000 {
        map.angular_lipschitz_ratio(args.pairs, &mut rng)?
    } else {
        report.lipschitz_ratio
    };
    let json = FoldReportJson {
        schema: 1,
        p: report.p,
        q: report.q,
        commutation_residual: report.commutation_residual,
        lipschitz_ratio: ratio,
        lipschitz_bound: report.lipschitz_bound,
        lipschitz_bound_sharp: report.lipschitz_bound_sharp,
        mfa: report.mfa,
        mfa_bound: report.mfa_bound,
        simple: report.simple,
    };
    write_json(&args.out.join("fold_report.json"), &json)?;
    let circle = map.folded_circle(args.samples.max(16 * args.q as usize))?;
    write_curve_csv(&args.out.join("folded_circle.csv"), &circle)?;
    if args.svg {
        let rendered = svg::render_curves(&[("#1f77b4", &circle)]);
        write_atomic(&args.out.join("folded_circle.svg"), rendered.as_bytes())?;
    }
    println!(
        "fold p/q = {}/{}: mfa = {:.6} (bound {:.6}), commutation residual {:.3e}, simple = {}",
        report.p,
        report.q,
        report.mfa,
        report.mfa_bound,
        report.commutation_residual,
        report.simple
    );
    Ok(())
}

#[derive(Deserialize)]
struct RunConfig {
    alpha: Option<String>,
    alpha_cf: Option<Vec<u64>>,
    levels: Option<usize>,
    samples: Option<usize>,
}

#[derive(Serialize)]
struct GmapReportJson {
    schema: u32,
    alpha: f64,
    levels: usize,
    pure_rotation: bool,
    /// Angular displacement outside the bands, radians.
    rotation_displacement: f64,
    bands: Vec<BandReport>,
}

fn cmd_gmap(args: GmapArgs) -> anyhow::Result<()> {
    let (alpha, levels, samples) = if let Some(cfg_path) = &args.config {
        let text = std::fs::read_to_string(cfg_path).context("reading --config")?;
        let cfg: RunConfig = serde_json::from_str(&text).context("parsing --config")?;
        let alpha_args = AlphaArgs {
            alpha: cfg.alpha,
            alpha_cf: cfg.alpha_cf,
        };
        (
            alpha_args.parse()?,
            cfg.levels.unwrap_or(8),
            cfg.samples.unwrap_or(4096),
        )
    } else {
        (args.alpha.parse()?, args.levels, args.samples)
    };

    let tau = std::f64::consts::TAU;
    if levels == 0 {
        let json = GmapReportJson {
            schema: 1,
            alpha: alpha.value(),
            levels: 0,
            pure_rotation: true,
            rotation_displacement: tau * alpha.value(),
            bands: vec![],
        };
        write_json(&args.out.join("gmap_report.json"), &json)?;
        println!(
            "gmap levels = 0: rigid rotation, displacement = {:.12} rad everywhere",
            tau * alpha.value()
        );
        return Ok(());
    }

    let g = GMap::build(&alpha, levels)?;
    let mut bands = Vec::with_capacity(levels);
    let mut curves = Vec::new();
    for level in 1..=levels {
        let report = g.band_report(level, samples)?;
        let q = report.q as usize;
        let witness = g.witness_circle(level, samples.max(16 * q))?;
        write_curve_csv(
            &args.out.join(format!("band_{level}_witness.csv")),
            &witness,
        )?;
        println!(
            "band {level}: p/q = {}/{}, r in [{:.6}, {:.6}], mfa = {:.6}, continuity {:.6} <= {:.6}",
            report.p,
            report.q,
            report.r_in,
            report.r_out,
            report.mfa,
            report.continuity_measured,
            report.continuity_bound
        );
        bands.push(report);
        curves.push(witness);
    }
    if args.svg {
        let palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
        let list: Vec<(&str, &CurveSample)> = curves
            .iter()
            .enumerate()
            .map(|(i, c)| (palette[i % palette.len()], c))
            .collect();
        write_atomic(
            &args.out.join("bands.svg"),
            svg::render_curves(&list).as_bytes(),
        )?;
    }
    let json = GmapReportJson {
        schema: 1,
        alpha: alpha.value(),
        levels,
        pure_rotation: false,
        rotation_displacement: tau * alpha.value(),
        bands,
    };
    write_json(&args.out.join("gmap_report.json"), &json)?;
    Ok(())
}

fn cmd_rotnum(args: RotnumArgs) -> anyhow::Result<()> {
    let map = args.map.build()?;
    let seed = parse_seed(&args.seed)?;
    let est = rotation_number(&map, seed, args.iters)?;
    println!("{} ± {}", est, 1.0 / args.iters as f64);
    Ok(())
}

fn cmd_orbit(args: OrbitArgs) -> anyhow::Result<()> {
    let map = args.map.build()?;
    let seed = parse_seed(&args.seed)?;
    let record = orbit(&map, seed, args.iters)?;
    let mut csv = String::from("k,x,y,theta_lifted\n");
    for (k, (p, lift)) in record.points.iter().zip(&record.lifted_angles).enumerate() {
        let (x, y) = p.to_plane();
        csv.push_str(&format!("{k},{x:.16e},{y:.16e},{lift:.16e}\n"));
    }
    write_atomic(&args.out.join("orbit.csv"), csv.as_bytes())?;
    println!(
        "orbit: {} states of {} written",
        record.points.len(),
        map.label()
    );
    Ok(())
}

fn cmd_mfa(args: MfaArgs) -> anyhow::Result<()> {
    let curve = match (&args.input, args.p, args.q) {
        (Some(path), None, None) => read_curve_csv(path)?,
        (None, Some(p), Some(q)) => {
            FoldMap::build(p, q)?.folded_circle(args.samples.max(16 * q as usize))?
        }
        _ => return Err(anyhow!("give either --input or both --p and --q")),
    };
    let mfa = drawdown_mfa(&curve)?;
    let threshold = std::f64::consts::PI / 3.0;
    println!("mfa {mfa}");
    println!("threshold {threshold}");
    println!("exceeds {}", mfa > threshold);
    Ok(())
}

#[derive(Serialize)]
struct TransversalJson {
    schema: u32,
    crossing_counts: Vec<usize>,
    verdict: String,
    violations: Vec<f64>,
    circles: Vec<annulus_core::dynamics::CircleCheck>,
}

fn build_arc(spec: &str, g: &GMap) -> anyhow::Result<CurveSample> {
    if let Some(theta) = spec.strip_prefix("radial:") {
        let theta: f64 = theta.parse().context("radial angle")?;
        Ok(CurveSample::radial_arc(theta, 1.0, 2.0, 64)?)
    } else if let Some(rest) = spec.strip_prefix("iterate:") {
        let (k, theta) = match rest.split_once(':') {
            Some((k, theta)) => (k.parse::<i64>()?, theta.parse::<f64>()?),
            None => (rest.parse::<i64>()?, 0.0),
        };
        Ok(radial_arc_image(g, theta, k, 64)?)
    } else if let Some(path) = spec.strip_prefix("csv:") {
        Ok(read_curve_csv(Path::new(path))?)
    } else {
        Err(anyhow!(
            "arc spec must be radial:<theta>, iterate:<k>[:<theta>], or csv:<path>"
        ))
    }
}

fn report_to_json(report: &TransversalReport) -> TransversalJson {
    TransversalJson {
        schema: 1,
        crossing_counts: report.crossing_counts(),
        verdict: report.verdict().to_string(),
        violations: report.violations.clone(),
        circles: report.circles.clone(),
    }
}

fn cmd_transversal(args: TransversalArgs) -> anyhow::Result<()> {
    let alpha = args.alpha.parse()?;
    let g = if args.levels == 0 {
        GMap::pure_rotation(alpha.value())
    } else {
        GMap::build(&alpha, args.levels)?
    };
    let arc = build_arc(&args.arc, &g)?;
    let report = transversal_report(&g, &arc, args.circles)?;
    for c in &report.circles {
        println!(
            "{:8} r = {:.6}  crossings = {}",
            c.kind, c.radius, c.crossings
        );
    }
    println!("verdict {}", report.verdict());
    if let Some(out) = &args.out {
        write_json(
            &out.join("transversal_report.json"),
            &report_to_json(&report),
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct LinearizeJson {
    schema: u32,
    #[serde(rename = "N")]
    n: usize,
    grid: [usize; 2],
    residual: f64,
    worst_gap: f64,
    window_max_diff: f64,
    window_bound: f64,
}

fn cmd_linearize(args: LinearizeArgs) -> anyhow::Result<()> {
    let (labels, per_circle) = {
        let (a, b) = args
            .grid
            .split_once('x')
            .ok_or_else(|| anyhow!("grid must be AxB"))?;
        (a.parse::<usize>()?, b.parse::<usize>()?)
    };

    let (map, gamma, theta) = match args.map.map.as_str() {
        "synthetic" => {
            let alpha = args.map.alpha.parse()?;
            let (map, gamma) = synthetic_linearizable(alpha.value(), args.map.amplitude)?;
            (map, gamma, args.theta.unwrap_or(alpha.value()))
        }
        "rigid" => {
            let beta = args
                .map
                .beta
                .ok_or_else(|| anyhow!("--map rigid needs --beta"))?;
            let gamma = Transversal::new(CurveSample::radial_arc(0.0, 1.0, 2.0, 64)?)?;
            (MapHandle::rigid(beta), gamma, args.theta.unwrap_or(beta))
        }
        "g" => {
            // The band map: look for a transversal among radial arcs; every
            // candidate fails on the fold-witness circles.
            let alpha = args.map.alpha.parse()?;
            let g = GMap::build(&alpha, args.map.levels.max(1))?;
            let mut all_violations = Vec::new();
            for i in 0..8 {
                let theta = std::f64::consts::TAU * i as f64 / 8.0;
                let arc = CurveSample::radial_arc(theta, 1.0, 2.0, 64)?;
                let report = transversal_report(&g, &arc, g.levels() + 5)?;
                if report.transversal {
                    return Err(anyhow!(
                        "unexpected: radial arc at {theta} passed the transversal check"
                    ));
                }
                all_violations.extend(report.violations);
            }
            all_violations.sort_by(f64::total_cmp);
            all_violations.dedup();
            return Err(CoreError::NotTransversal(all_violations).into());
        }
        other => {
            return Err(anyhow!(
                "linearize supports synthetic, rigid, or g; got {other:?}"
            ))
        }
    };

    // Evidence that the section really is a transversal for this map.
    let counts = round_circle_crossings(gamma.curve(), 16)?;
    if counts.iter().any(|&c| c != 1) {
        return Err(CoreError::NotTransversal(
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 1)
                .map(|(i, _)| 1.0 + (i as f64 + 0.5) / 16.0)
                .collect(),
        )
        .into());
    }

    let table = build_linearization(&map, &gamma, theta, args.n_orbit, labels, args.max_gap)?;
    let residual = conjugacy_residual(&table, &map, theta, labels * per_circle)?;
    let windows = window_consistency(&map, &gamma, theta, args.n_orbit, labels.min(8), 64)?;
    write_atomic(&args.out.join("psi_table.csv"), table.to_csv().as_bytes())?;
    let json = LinearizeJson {
        schema: 1,
        n: args.n_orbit,
        grid: [labels, per_circle],
        residual,
        worst_gap: table.worst_gap,
        window_max_diff: windows.max_diff,
        window_bound: windows.bound,
    };
    write_json(&args.out.join("linearize_report.json"), &json)?;
    println!(
        "linearize: residual {residual:.3e}, worst gap {:.3e} turns, window diff {:.3e} <= {:.3e}",
        table.worst_gap, windows.max_diff, windows.bound
    );
    Ok(())
}
