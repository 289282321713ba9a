//! Orbit computation and measurable diagnostics: rotation numbers,
//! proximality probes, and transversal crossing reports.
//!
//! A [`MapHandle`] wraps a homeomorphism by its *lift* to the strip, i.e. an
//! evaluator commuting with the unit x-translation. Working with lifts keeps
//! angle tracking exact: orbit lifted angles are just `2 pi x`, with no
//! branch-choice heuristics. (For the band map the single-step displacement
//! inside a band ranges over more than a half turn, so inferring the branch
//! from wrapped differences would mis-track.)

use std::sync::Arc;

use serde::Serialize;

use crate::curve::CurveSample;
use crate::error::{Error, Result};
use crate::fold::FoldMap;
use crate::gmap::GMap;
use crate::metrics::count_crossings;
use crate::point::{annulus_dist, cover_lift, cover_project, AnnulusPoint, StripPoint};

type Evaluator = Arc<dyn Fn(StripPoint) -> Result<StripPoint> + Send + Sync>;
type PowerEvaluator = Arc<dyn Fn(StripPoint, i64) -> Result<StripPoint> + Send + Sync>;

pub use crate::point::rotation_steps_mod1;

/// A homeomorphism of the annulus, wrapped as a pair of strip-lift
/// evaluators, optionally with a collapsed k-th power form.
#[derive(Clone)]
pub struct MapHandle {
    label: String,
    forward: Evaluator,
    inverse: Evaluator,
    /// Collapsed evaluator of `g^k`. Returns *some* lift of the k-th image:
    /// accurate modulo one turn, with no per-step accumulation, but its
    /// x-displacement may differ from the canonical lift by an integer.
    power: Option<PowerEvaluator>,
}

impl std::fmt::Debug for MapHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MapHandle")
            .field("label", &self.label)
            .finish()
    }
}

impl MapHandle {
    /// Registers a map; the forward/inverse pair is checked on a fixed
    /// low-discrepancy sample set (residual < 1e-9 required).
    pub fn new(
        label: impl Into<String>,
        forward: impl Fn(StripPoint) -> Result<StripPoint> + Send + Sync + 'static,
        inverse: impl Fn(StripPoint) -> Result<StripPoint> + Send + Sync + 'static,
    ) -> Result<MapHandle> {
        let handle = MapHandle {
            label: label.into(),
            forward: Arc::new(forward),
            inverse: Arc::new(inverse),
            power: None,
        };
        for i in 0..32 {
            let x = (i as f64 * 0.618_033_988_749_894_9).fract();
            let y = 1.0 + (i as f64 * std::f64::consts::SQRT_2).fract();
            let z = StripPoint::new(x, y);
            let back = (handle.inverse)((handle.forward)(z)?)?;
            let residual = (back.x - z.x).hypot(back.y - z.y);
            if residual > 1e-9 {
                return Err(Error::InverseMismatch { index: i, residual });
            }
        }
        Ok(handle)
    }

    /// Attaches a collapsed k-th power evaluator (see [`MapHandle::power`]).
    pub fn with_power(
        mut self,
        power: impl Fn(StripPoint, i64) -> Result<StripPoint> + Send + Sync + 'static,
    ) -> MapHandle {
        self.power = Some(Arc::new(power));
        self
    }

    /// The rigid rotation by `beta` turns.
    pub fn rigid(beta: f64) -> MapHandle {
        let beta_mod = beta.rem_euclid(1.0);
        MapHandle {
            label: format!("rigid({beta})"),
            forward: Arc::new(move |z| Ok(StripPoint::new(z.x + beta, z.y))),
            inverse: Arc::new(move |z| Ok(StripPoint::new(z.x - beta, z.y))),
            power: Some(Arc::new(move |z, k| {
                Ok(StripPoint::new(z.x + rotation_steps_mod1(beta_mod, k), z.y))
            })),
        }
    }

    /// The band map `g`.
    pub fn from_gmap(g: GMap) -> MapHandle {
        let g2 = g.clone();
        let g3 = g.clone();
        MapHandle {
            label: format!("g(alpha={}, levels={})", g.alpha(), g.levels()),
            forward: Arc::new(move |z| g.forward_strip(z)),
            inverse: Arc::new(move |z| g2.inverse_strip(z)),
            power: Some(Arc::new(move |z, k| g3.power_strip_mod1(z, k))),
        }
    }

    /// The fold conjugate `H R_alpha H^{-1}`.
    pub fn fold_conjugate(fold: FoldMap, alpha: f64) -> MapHandle {
        let fold2 = fold.clone();
        let fold3 = fold.clone();
        let alpha_mod = alpha.rem_euclid(1.0);
        MapHandle {
            label: format!("H R_a H^-1 (p={}, q={}, a={alpha})", fold.p(), fold.q()),
            forward: Arc::new(move |z| {
                let w = fold.eval_strip_inv(z)?;
                fold.eval_strip(StripPoint::new(w.x + alpha, w.y))
            }),
            inverse: Arc::new(move |z| {
                let w = fold2.eval_strip_inv(z)?;
                fold2.eval_strip(StripPoint::new(w.x - alpha, w.y))
            }),
            power: Some(Arc::new(move |z, k| {
                let w = fold3.eval_strip_inv(z)?;
                fold3.eval_strip(StripPoint::new(
                    w.x + rotation_steps_mod1(alpha_mod, k),
                    w.y,
                ))
            })),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Whether a collapsed power evaluator is attached.
    pub fn has_collapsed_power(&self) -> bool {
        self.power.is_some()
    }

    /// Collapsed `g^k` when available (see the field note: the result is a
    /// lift accurate mod 1, not the canonical displacement).
    pub fn collapsed_power(&self, z: StripPoint, k: i64) -> Result<StripPoint> {
        match &self.power {
            Some(p) => p(z, k),
            None => self.iterate(z, k),
        }
    }

    pub fn forward(&self, z: StripPoint) -> Result<StripPoint> {
        (self.forward)(z)
    }

    pub fn inverse(&self, z: StripPoint) -> Result<StripPoint> {
        (self.inverse)(z)
    }

    pub fn forward_annulus(&self, z: AnnulusPoint) -> Result<AnnulusPoint> {
        cover_project(self.forward(cover_lift(z, 0.0))?)
    }

    /// `k`-fold iteration of the lift (negative `k` uses the inverse).
    pub fn iterate(&self, z: StripPoint, k: i64) -> Result<StripPoint> {
        let mut cur = z;
        for _ in 0..k.abs() {
            cur = if k >= 0 {
                self.forward(cur)?
            } else {
                self.inverse(cur)?
            };
        }
        Ok(cur)
    }
}

/// A computed orbit with its exact lifted angles.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub seed: AnnulusPoint,
    pub points: Vec<AnnulusPoint>,
    pub lifted_angles: Vec<f64>,
    /// Strip lifts of the orbit points.
    pub strip_points: Vec<StripPoint>,
}

/// Forward orbit of length `n` (so `n + 1` samples including the seed).
pub fn orbit(map: &MapHandle, seed: AnnulusPoint, n: usize) -> Result<OrbitRecord> {
    if n == 0 {
        return Err(Error::InvalidArgument("orbit length must be >= 1".into()));
    }
    let mut strip_points = Vec::with_capacity(n + 1);
    let mut points = Vec::with_capacity(n + 1);
    let mut lifted_angles = Vec::with_capacity(n + 1);
    let mut cur = cover_lift(seed, 0.0);
    for _ in 0..=n {
        strip_points.push(cur);
        points.push(cover_project(cur)?);
        lifted_angles.push(std::f64::consts::TAU * cur.x);
        cur = map.forward(cur)?;
    }
    Ok(OrbitRecord {
        seed,
        points,
        lifted_angles,
        strip_points,
    })
}

/// Rotation number estimate from `n` iterates, as a value in `[0, 1)` turns.
///
/// For the lift of a circle homeomorphism the estimator error is at most
/// `1/n`.
pub fn rotation_number(map: &MapHandle, seed: AnnulusPoint, n: usize) -> Result<f64> {
    if n < 1000 {
        return Err(Error::InvalidArgument(
            "rotation number estimation needs n >= 1000".into(),
        ));
    }
    let start = cover_lift(seed, 0.0);
    let mut cur = start;
    for _ in 0..n {
        cur = map.forward(cur)?;
    }
    let mean = (cur.x - start.x) / n as f64;
    Ok(mean.rem_euclid(1.0))
}

/// Distance of two rotation-number estimates on the circle of turns.
pub fn rotation_number_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

/// Minimum distance between the iterates of `x` and `y` over `0 <= k <= n`
/// (also over `-n <= k <= n` when `symmetric` is set).
pub fn proximality_probe(
    map: &MapHandle,
    x: AnnulusPoint,
    y: AnnulusPoint,
    n: usize,
    symmetric: bool,
) -> Result<f64> {
    let mut floor = f64::INFINITY;
    let mut scan = |k_sign: i64| -> Result<()> {
        let mut u = cover_lift(x, 0.0);
        let mut v = cover_lift(y, 0.0);
        let steps = if k_sign == 0 { 0 } else { n };
        let d0 = annulus_dist(cover_project(u)?, cover_project(v)?);
        floor = floor.min(d0);
        for _ in 0..steps {
            (u, v) = if k_sign >= 0 {
                (map.forward(u)?, map.forward(v)?)
            } else {
                (map.inverse(u)?, map.inverse(v)?)
            };
            let d = annulus_dist(cover_project(u)?, cover_project(v)?);
            if d < floor {
                floor = d;
            }
        }
        Ok(())
    };
    scan(1)?;
    if symmetric {
        scan(-1)?;
    }
    Ok(floor)
}

/// How one sampled invariant circle was chosen.
#[derive(Debug, Clone, Serialize)]
pub struct CircleCheck {
    /// "gap" for round circles in rotation regions, "band" for generic band
    /// circles, "witness" for the maximal-fold circle of a band.
    pub kind: String,
    /// Radius of the generating point.
    pub radius: f64,
    pub crossings: usize,
}

/// Per-circle crossing counts of an arc against sampled invariant circles.
#[derive(Debug, Clone, Serialize)]
pub struct TransversalReport {
    pub circles: Vec<CircleCheck>,
    pub transversal: bool,
    /// Radii of the circles with crossing count != 1.
    pub violations: Vec<f64>,
}

impl TransversalReport {
    pub fn verdict(&self) -> &'static str {
        if self.transversal {
            "TRANSVERSAL"
        } else {
            "NOT"
        }
    }

    pub fn crossing_counts(&self) -> Vec<usize> {
        self.circles.iter().map(|c| c.crossings).collect()
    }

    /// Largest crossing count seen on a fold-witness circle.
    pub fn max_witness_crossings(&self) -> usize {
        self.circles
            .iter()
            .filter(|c| c.kind == "witness")
            .map(|c| c.crossings)
            .max()
            .unwrap_or(0)
    }
}

/// Checks whether `arc` crosses each of `n_circles` sampled invariant
/// circles of `g` exactly once.
///
/// The sample always contains each band's fold-witness circle; the remaining
/// budget is spread over the rotation gaps and the band interiors.
pub fn transversal_report(
    g: &GMap,
    arc: &CurveSample,
    n_circles: usize,
) -> Result<TransversalReport> {
    if arc.closed() {
        return Err(Error::InvalidArgument(
            "transversal arc must be open".into(),
        ));
    }
    let pts = arc.points();
    let (y0, y1) = (pts[0].y, pts[pts.len() - 1].y);
    let joins = ((y0 - 1.0).abs() < 1e-9 && (y1 - 2.0).abs() < 1e-9)
        || ((y0 - 2.0).abs() < 1e-9 && (y1 - 1.0).abs() < 1e-9);
    if !joins {
        return Err(Error::InvalidArgument(
            "arc must join the two boundary circles".into(),
        ));
    }
    let levels = g.levels();
    if n_circles < levels + 1 {
        return Err(Error::InvalidArgument(format!(
            "need at least levels + 1 = {} circles",
            levels + 1
        )));
    }

    // Regions: the gaps around the bands, then the band interiors.
    let mut regions: Vec<(String, f64, f64)> = Vec::new();
    let mut lo = 1.0;
    for b in g.bands() {
        regions.push(("gap".into(), lo, b.r_in));
        regions.push(("band".into(), b.r_in, b.r_out));
        lo = b.r_out;
    }
    regions.push(("gap".into(), lo, 2.0));

    let budget = n_circles - levels;
    let mut picks: Vec<(String, f64)> = Vec::new();
    for (i, (kind, lo, hi)) in regions.iter().enumerate() {
        let share = budget / regions.len() + usize::from(i < budget % regions.len());
        for j in 0..share {
            let r = lo + (j as f64 + 0.5) / share as f64 * (hi - lo);
            picks.push((kind.clone(), r));
        }
    }

    let mut circles: Vec<CircleCheck> = Vec::new();
    let mut violations = Vec::new();
    for level in 1..=levels {
        let q = g.approximants()[level - 1].q as usize;
        let witness = g.witness_circle(level, 16 * q)?;
        let crossings = count_crossings(arc, &witness)?;
        if crossings != 1 {
            violations.push(witness_radius(g, level));
        }
        circles.push(CircleCheck {
            kind: "witness".into(),
            radius: witness_radius(g, level),
            crossings,
        });
    }
    for (kind, r) in picks {
        let z = AnnulusPoint::new(0.0, r)?;
        let q = match g.bands().iter().position(|b| b.contains_r(r)) {
            Some(i) => g.approximants()[i].q as usize,
            None => 32,
        };
        let circle = g.invariant_circle_through(z, 16 * q.max(32))?;
        let crossings = count_crossings(arc, &circle)?;
        if crossings != 1 {
            violations.push(r);
        }
        circles.push(CircleCheck {
            kind,
            radius: r,
            crossings,
        });
    }
    let transversal = violations.is_empty();
    Ok(TransversalReport {
        circles,
        transversal,
        violations,
    })
}

fn witness_radius(g: &GMap, level: usize) -> f64 {
    let b = g.bands()[level - 1];
    b.unsqueeze_y(1.5)
}

/// The image of the radial arc at `theta` under `g^k`, sampled adaptively.
///
/// The composed map is piecewise affine, so midpoint refinement terminates
/// quickly away from fold breakpoints and the returned polyline deviates
/// from the true image by at most ~1e-9.
pub fn radial_arc_image(g: &GMap, theta: f64, k: i64, base_points: usize) -> Result<CurveSample> {
    let x = theta / std::f64::consts::TAU;
    let mut ys: Vec<f64> = vec![1.0, 2.0];
    for b in g.bands() {
        ys.push(b.r_in);
        ys.push(b.r_out);
    }
    for j in 1..base_points {
        ys.push(1.0 + j as f64 / base_points as f64);
    }
    ys.sort_by(f64::total_cmp);
    ys.dedup_by(|a, b| (*a - *b).abs() < 1e-14);

    let eval = |y: f64| -> Result<StripPoint> { g.power_strip(StripPoint::new(x, y), k) };
    let mut out: Vec<StripPoint> = vec![eval(ys[0])?];
    for w in ys.windows(2) {
        refine_segment(
            &eval,
            w[0],
            w[1],
            out[out.len() - 1],
            eval(w[1])?,
            0,
            &mut out,
        )?;
    }
    out.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    CurveSample::new(out, false, 0)
}

const REFINE_MAX_DEPTH: usize = 40;
const REFINE_GAP_X: f64 = 1.0 / 32.0;
const REFINE_GAP_Y: f64 = 1.0 / 32.0;
const REFINE_DEV: f64 = 1e-9;

fn refine_segment(
    eval: &impl Fn(f64) -> Result<StripPoint>,
    y0: f64,
    y1: f64,
    img0: StripPoint,
    img1: StripPoint,
    depth: usize,
    out: &mut Vec<StripPoint>,
) -> Result<()> {
    let gaps_ok =
        (img1.x - img0.x).abs() <= REFINE_GAP_X && (img1.y - img0.y).abs() <= REFINE_GAP_Y;
    if depth >= REFINE_MAX_DEPTH {
        out.push(img1);
        return Ok(());
    }
    let y_mid = 0.5 * (y0 + y1);
    let img_mid = eval(y_mid)?;
    let chord_x = 0.5 * (img0.x + img1.x);
    let chord_y = 0.5 * (img0.y + img1.y);
    let dev = (img_mid.x - chord_x).hypot(img_mid.y - chord_y);
    if gaps_ok && dev <= REFINE_DEV {
        out.push(img1);
        return Ok(());
    }
    refine_segment(eval, y0, y_mid, img0, img_mid, depth + 1, out)?;
    refine_segment(eval, y_mid, y1, img_mid, img1, depth + 1, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approximant::Alpha;
    use crate::metrics::max_deviation_from_curve;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{PI, TAU};

    fn golden_g(levels: usize) -> GMap {
        GMap::build(&Alpha::golden_mean(), levels).unwrap()
    }

    #[test]
    fn registration_rejects_mismatched_pair() {
        let err = MapHandle::new(
            "broken",
            |z| Ok(StripPoint::new(z.x + 0.25, z.y)),
            |z| Ok(StripPoint::new(z.x - 0.3, z.y)),
        );
        assert!(matches!(err, Err(Error::InverseMismatch { .. })));
    }

    #[test]
    fn orbit_of_quarter_rotation() {
        let map = MapHandle::rigid(0.25);
        let seed = AnnulusPoint::new(0.0, 1.5).unwrap();
        let rec = orbit(&map, seed, 4).unwrap();
        let expect = [0.0, PI / 2.0, PI, 3.0 * PI / 2.0, TAU];
        for (got, want) in rec.lifted_angles.iter().zip(expect) {
            assert!((got - want).abs() < 1e-14);
        }
        assert!((rec.points[4].theta() - 0.0).abs() < 1e-12);
    }

    #[test]
    fn orbit_of_identity_is_constant() {
        let map = MapHandle::rigid(0.0);
        let seed = AnnulusPoint::new(1.0, 1.3).unwrap();
        let rec = orbit(&map, seed, 10).unwrap();
        assert!(rec.points.iter().all(|p| annulus_dist(*p, seed) == 0.0));
    }

    #[test]
    fn orbit_of_g_stays_on_invariant_circle() {
        let g = golden_g(2);
        let seed = AnnulusPoint::new(0.4, 1.58).unwrap();
        let circle = g.invariant_circle_through(seed, 16 * 8).unwrap();
        let map = MapHandle::from_gmap(g);
        let rec = orbit(&map, seed, 500).unwrap();
        let dev = max_deviation_from_curve(&rec.strip_points, &circle);
        assert!(dev < 1e-6, "dev = {dev:.3e}");
    }

    #[test]
    fn rotation_number_of_rigid_rotations() {
        let seed = AnnulusPoint::new(0.1, 1.4).unwrap();
        for beta in [0.0, 0.25, 0.618, 0.93] {
            let est = rotation_number(&MapHandle::rigid(beta), seed, 1000).unwrap();
            assert!((est - beta).abs() < 1e-12, "beta = {beta}, est = {est}");
        }
        assert!(rotation_number(&MapHandle::rigid(0.5), seed, 10).is_err());
    }

    #[test]
    fn rotation_number_of_fold_conjugate() {
        let alpha = Alpha::golden_mean().value();
        let fold = FoldMap::build(1, 7).unwrap();
        let map = MapHandle::fold_conjugate(fold, alpha);
        let seed = AnnulusPoint::new(0.0, 1.5).unwrap();
        let est = rotation_number(&map, seed, 100_000).unwrap();
        assert!(
            rotation_number_distance(est, alpha) < 1e-4,
            "est = {est}, alpha = {alpha}"
        );
    }

    #[test]
    fn rotation_numbers_of_g_share_the_angle() {
        let g = golden_g(3);
        let alpha = g.alpha();
        let map = MapHandle::from_gmap(g);
        let seeds = [
            AnnulusPoint::new(0.0, 1.2).unwrap(),  // gap
            AnnulusPoint::new(1.0, 1.55).unwrap(), // band 1
            AnnulusPoint::new(2.0, 1.7).unwrap(),  // gap
            AnnulusPoint::new(3.0, 1.78).unwrap(), // band 2
            AnnulusPoint::new(4.0, 1.84).unwrap(), // band 3
        ];
        let mut estimates = Vec::new();
        for seed in seeds {
            let est = rotation_number(&map, seed, 100_000).unwrap();
            assert!(rotation_number_distance(est, alpha) < 2e-4);
            estimates.push(est);
        }
        for i in 0..estimates.len() {
            for j in i + 1..estimates.len() {
                assert!(rotation_number_distance(estimates[i], estimates[j]) < 2e-4);
            }
        }
    }

    #[test]
    fn proximality_constant_for_rigid_rotation() {
        let map = MapHandle::rigid(0.37);
        let x = AnnulusPoint::new(0.0, 1.5).unwrap();
        let y = AnnulusPoint::new(1.0, 1.5).unwrap();
        let d0 = annulus_dist(x, y);
        let floor = proximality_probe(&map, x, y, 2_000, true).unwrap();
        assert!((floor - d0).abs() < 1e-12);
    }

    #[test]
    fn proximality_floor_positive_for_g() {
        let g = golden_g(2);
        let band = g.bands()[0];
        let fold_q = g.approximants()[0].q as usize;
        // Two points on the same folded circle.
        let circle = g
            .invariant_circle_through(
                AnnulusPoint::new(0.0, band.unsqueeze_y(1.5)).unwrap(),
                16 * fold_q,
            )
            .unwrap();
        let a = cover_project(circle.points()[3]).unwrap();
        let b = cover_project(circle.points()[circle.len() / 3]).unwrap();
        let map = MapHandle::from_gmap(g);
        let floor = proximality_probe(&map, a, b, 20_000, false).unwrap();
        assert!(floor > 1e-6, "floor = {floor:.3e}");
        // Degenerate pair: forced zero.
        let z = proximality_probe(&map, a, a, 10, false).unwrap();
        assert_eq!(z, 0.0);
    }

    #[test]
    fn transversal_report_on_pure_rotation() {
        let g = GMap::pure_rotation(0.618);
        let arc = CurveSample::radial_arc(0.3, 1.0, 2.0, 64).unwrap();
        let report = transversal_report(&g, &arc, 9).unwrap();
        assert!(report.transversal);
        assert_eq!(report.verdict(), "TRANSVERSAL");
        assert!(report.crossing_counts().iter().all(|&c| c == 1));
    }

    #[test]
    fn transversal_report_detects_folds() {
        let g = golden_g(1);
        // Any radial arc crosses the band-1 witness at least 3 times: the
        // fold sweeps every angle both ways.
        let arc = CurveSample::radial_arc(0.0, 1.0, 2.0, 64).unwrap();
        let report = transversal_report(&g, &arc, 8).unwrap();
        assert_eq!(report.verdict(), "NOT");
        assert!(report.max_witness_crossings() >= 3);
        // Round gap circles still meet the radial arc once.
        assert!(report
            .circles
            .iter()
            .filter(|c| c.kind == "gap")
            .all(|c| c.crossings == 1));
    }

    #[test]
    fn iterated_arcs_remain_non_transversal() {
        let g = golden_g(2);
        for k in [1i64, 3, 7] {
            let arc = radial_arc_image(&g, 1.234, k, 64).unwrap();
            let report = transversal_report(&g, &arc, 6).unwrap();
            assert_eq!(report.verdict(), "NOT", "k = {k}");
            assert!(report.max_witness_crossings() >= 3);
        }
    }

    #[test]
    fn radial_arc_image_matches_pointwise_iteration() {
        let g = golden_g(2);
        let map = MapHandle::from_gmap(g.clone());
        let arc = radial_arc_image(&g, 0.77, 4, 64).unwrap();
        // Arc endpoints remain on the boundary circles.
        let pts = arc.points();
        assert!((pts[0].y - 1.0).abs() < 1e-12);
        assert!((pts[pts.len() - 1].y - 2.0).abs() < 1e-12);
        // Spot-check interior points against honest iteration.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let y = rng.gen_range(1.0..=2.0);
            let src = StripPoint::new(0.77 / TAU, y);
            let img = map.iterate(src, 4).unwrap();
            let dev = crate::metrics::distance_to_curve(img, &arc);
            assert!(dev < 1e-6, "dev = {dev:.3e}");
        }
    }
}
