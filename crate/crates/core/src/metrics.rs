//! Geometric predicates on sampled curves: Hausdorff distance, transversal
//! crossing counts, and the maximal angular drawdown of a closed curve.
//!
//! Crossing counts work on the annulus: the second curve is tested through
//! all integer x-translates of its strip polyline that can meet the first.
//! Contacts within `VERTEX_TOL` of a polyline vertex are resolved by a
//! deterministic perturbation of the first curve (+1e-9 and +2e-9 radians in
//! angle); the two perturbed counts must agree.

use std::f64::consts::TAU;

use crate::curve::CurveSample;
use crate::error::{Error, Result};
use crate::point::StripPoint;

/// Contacts closer than this to a segment endpoint trigger the perturbation rule.
pub const VERTEX_TOL: f64 = 1e-12;

/// Relative threshold under which an orientation test counts as degenerate.
const ORIENT_REL_EPS: f64 = 1e-13;

/// Perturbation angles (radians) used to resolve vertex contacts.
const PERTURB_RADS: [f64; 2] = [1e-9, 2e-9];

#[derive(Clone, Copy, Debug)]
struct Seg {
    ax: f64,
    ay: f64,
    bx: f64,
    by: f64,
}

impl Seg {
    fn shifted(&self, s: f64) -> Seg {
        Seg {
            ax: self.ax + s,
            ay: self.ay,
            bx: self.bx + s,
            by: self.by,
        }
    }

    fn min_x(&self) -> f64 {
        self.ax.min(self.bx)
    }

    fn max_x(&self) -> f64 {
        self.ax.max(self.bx)
    }

    fn min_y(&self) -> f64 {
        self.ay.min(self.by)
    }

    fn max_y(&self) -> f64 {
        self.ay.max(self.by)
    }

    fn len(&self) -> f64 {
        (self.bx - self.ax).hypot(self.by - self.ay)
    }
}

fn segments(curve: &CurveSample) -> Vec<Seg> {
    curve
        .points()
        .windows(2)
        .map(|w| Seg {
            ax: w[0].x,
            ay: w[0].y,
            bx: w[1].x,
            by: w[1].y,
        })
        .collect()
}

fn orient(ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64) -> f64 {
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

#[derive(Debug, PartialEq)]
enum SegHit {
    None,
    Proper,
    /// Contact at or near a vertex, or a grazing/collinear touch.
    Touch,
    /// Collinear segments sharing a subsegment of positive length.
    Overlap,
}

fn point_seg_dist2(px: f64, py: f64, ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    let (dx, dy) = (bx - ax, by - ay);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((px - ax) * dx + (py - ay) * dy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (ax + t * dx, ay + t * dy);
    (px - cx) * (px - cx) + (py - cy) * (py - cy)
}

fn seg_hit(s: &Seg, t: &Seg) -> SegHit {
    if s.max_x() + VERTEX_TOL < t.min_x()
        || t.max_x() + VERTEX_TOL < s.min_x()
        || s.max_y() + VERTEX_TOL < t.min_y()
        || t.max_y() + VERTEX_TOL < s.min_y()
    {
        return SegHit::None;
    }
    let ls = s.len();
    let lt = t.len();
    let o1 = orient(s.ax, s.ay, s.bx, s.by, t.ax, t.ay);
    let o2 = orient(s.ax, s.ay, s.bx, s.by, t.bx, t.by);
    let o3 = orient(t.ax, t.ay, t.bx, t.by, s.ax, s.ay);
    let o4 = orient(t.ax, t.ay, t.bx, t.by, s.bx, s.by);
    let eps_s = ORIENT_REL_EPS * ls * lt.max(1e-30);
    let eps_t = ORIENT_REL_EPS * lt * ls.max(1e-30);

    if (o1.abs() <= eps_s && o2.abs() <= eps_s) || (o3.abs() <= eps_t && o4.abs() <= eps_t) {
        // Collinear. Measure 1D overlap along the dominant axis of s.
        let (sa, sb, ta, tb) = if (s.bx - s.ax).abs() >= (s.by - s.ay).abs() {
            (s.min_x(), s.max_x(), t.min_x(), t.max_x())
        } else {
            (s.min_y(), s.max_y(), t.min_y(), t.max_y())
        };
        let overlap = sb.min(tb) - sa.max(ta);
        return if overlap > VERTEX_TOL {
            SegHit::Overlap
        } else if overlap >= -VERTEX_TOL {
            SegHit::Touch
        } else {
            SegHit::None
        };
    }

    // A vertex of one segment resting on the other segment is a contact the
    // sign tests cannot classify; lying merely on the other's extended line
    // is not.
    let tol2 = VERTEX_TOL * VERTEX_TOL;
    if point_seg_dist2(t.ax, t.ay, s.ax, s.ay, s.bx, s.by) <= tol2
        || point_seg_dist2(t.bx, t.by, s.ax, s.ay, s.bx, s.by) <= tol2
        || point_seg_dist2(s.ax, s.ay, t.ax, t.ay, t.bx, t.by) <= tol2
        || point_seg_dist2(s.bx, s.by, t.ax, t.ay, t.bx, t.by) <= tol2
    {
        return SegHit::Touch;
    }

    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        // Proper crossing; flag proximity to any of the four vertices.
        let u = o1 / (o1 - o2);
        let px = t.ax + u * (t.bx - t.ax);
        let py = t.ay + u * (t.by - t.ay);
        let near = |x: f64, y: f64| (px - x).hypot(py - y) < VERTEX_TOL;
        if near(s.ax, s.ay) || near(s.bx, s.by) || near(t.ax, t.ay) || near(t.bx, t.by) {
            return SegHit::Touch;
        }
        return SegHit::Proper;
    }
    SegHit::None
}

/// Range of integer x-shifts of `t` that can meet `s`.
fn shift_range(s_min: f64, s_max: f64, t_min: f64, t_max: f64) -> (i64, i64) {
    let lo = (s_min - t_max - 1e-9).floor() as i64;
    let hi = (s_max - t_min + 1e-9).ceil() as i64;
    (lo, hi)
}

struct CountOutcome {
    count: usize,
    touched: bool,
}

/// Deterministic perturbation of the arc: a shift in angle together with a
/// tiny radial contraction toward the inner boundary. The radial part is
/// needed because an angular shift alone cannot separate an arc vertex from
/// a horizontal target segment (a round circle, say) passing through it.
fn perturb(seg: &Seg, rad: f64) -> Seg {
    let dx = rad / TAU;
    let shrink = 1.0 - rad / 10.0;
    Seg {
        ax: seg.ax + dx,
        ay: 1.0 + (seg.ay - 1.0) * shrink,
        bx: seg.bx + dx,
        by: 1.0 + (seg.by - 1.0) * shrink,
    }
}

fn count_once(arc: &[Seg], target: &[Seg], perturb_rad: f64) -> Result<CountOutcome> {
    let mut count = 0;
    let mut touched = false;
    // Window queries against the target: segments sorted by min_x, widest
    // segment width as the search slack.
    let mut sorted: Vec<Seg> = target.to_vec();
    sorted.sort_by(|a, b| a.min_x().total_cmp(&b.min_x()));
    let max_w = sorted
        .iter()
        .map(|t| t.max_x() - t.min_x())
        .fold(0.0, f64::max);
    let t_min = sorted.first().map_or(f64::INFINITY, Seg::min_x);
    let t_max = sorted
        .iter()
        .map(Seg::max_x)
        .fold(f64::NEG_INFINITY, f64::max);
    for seg in arc {
        let seg = if perturb_rad == 0.0 {
            *seg
        } else {
            perturb(seg, perturb_rad)
        };
        let (lo_s, hi_s) = shift_range(seg.min_x(), seg.max_x(), t_min, t_max);
        for s in lo_s..=hi_s {
            let s = s as f64;
            // In target coordinates the arc segment spans this x-window.
            let lo = seg.min_x() - s - max_w - VERTEX_TOL;
            let hi = seg.max_x() - s + VERTEX_TOL;
            let start = sorted.partition_point(|t| t.min_x() < lo);
            for tseg in &sorted[start..] {
                if tseg.min_x() > hi {
                    break;
                }
                match seg_hit(&seg, &tseg.shifted(s)) {
                    SegHit::None => {}
                    SegHit::Proper => count += 1,
                    SegHit::Touch => touched = true,
                    SegHit::Overlap => return Err(Error::DegenerateOverlap),
                }
            }
        }
    }
    Ok(CountOutcome { count, touched })
}

/// Number of transversal intersection points of two sampled curves on the
/// annulus.
///
/// `arc` is usually an open arc and `target` a closed essential curve, but
/// any combination is accepted; both are interpreted through all integer
/// translates of the strip polylines. Endpoints of an open `arc` must stay
/// off `target`.
pub fn count_crossings(arc: &CurveSample, target: &CurveSample) -> Result<usize> {
    if arc.is_empty() || target.is_empty() {
        return Err(Error::InvalidArgument("empty curve".into()));
    }
    let arc_segs = segments(arc);
    let target_segs = segments(target);
    let base = count_once(&arc_segs, &target_segs, 0.0)?;
    if !arc.closed() {
        let pts = arc.points();
        for endpoint in [pts[0], pts[pts.len() - 1]] {
            let d = distance_to_curve(endpoint, target);
            if d < VERTEX_TOL {
                return Err(Error::InvalidArgument(format!(
                    "arc endpoint ({}, {}) lies on the target curve",
                    endpoint.x, endpoint.y
                )));
            }
        }
    }
    if !base.touched {
        return Ok(base.count);
    }
    let mut counts = [0usize; 2];
    for (i, rad) in PERTURB_RADS.iter().enumerate() {
        let outcome = count_once(&arc_segs, &target_segs, *rad)?;
        if outcome.touched {
            return Err(Error::InvalidArgument(
                "vertex contact persisted under perturbation".into(),
            ));
        }
        counts[i] = outcome.count;
    }
    if counts[0] != counts[1] {
        return Err(Error::PerturbationDisagreement(counts[0], counts[1]));
    }
    Ok(counts[0])
}

/// Number of proper self-intersections of a sampled curve (0 for a simple one).
///
/// Vertex contacts between non-adjacent segments are reported as errors: the
/// perturbation rule cannot separate a curve from itself.
pub fn count_self_intersections(curve: &CurveSample) -> Result<usize> {
    let segs = segments(curve);
    let n = segs.len();
    let mut count = 0;
    for i in 0..n {
        for j in i..n {
            let (lo, hi) = shift_range(
                segs[i].min_x(),
                segs[i].max_x(),
                segs[j].min_x(),
                segs[j].max_x(),
            );
            for s in lo..=hi {
                if i == j && s == 0 {
                    continue;
                }
                // Consecutive segments share a vertex, as do the first and
                // last of a closed curve across the winding shift.
                if j == i + 1 && s == 0 {
                    continue;
                }
                if curve.closed() && i == 0 && j == n - 1 && s == -i64::from(curve.winding()) {
                    continue;
                }
                match seg_hit(&segs[i], &segs[j].shifted(s as f64)) {
                    SegHit::None => {}
                    SegHit::Proper => count += 1,
                    SegHit::Touch | SegHit::Overlap => {
                        return Err(Error::DegenerateOverlap);
                    }
                }
            }
        }
    }
    // Each unordered pair is visited once per relative shift, except i == j
    // pairs which are visited for both signs of the shift.
    Ok(count)
}

/// Symmetric Hausdorff distance between the projected sample point sets,
/// measured in the plane.
pub fn hausdorff_distance(a: &CurveSample, b: &CurveSample) -> f64 {
    let pa: Vec<(f64, f64)> = a.points().iter().map(StripPoint::to_plane).collect();
    let pb: Vec<(f64, f64)> = b.points().iter().map(StripPoint::to_plane).collect();
    directed_hausdorff(&pa, &pb).max(directed_hausdorff(&pb, &pa))
}

fn directed_hausdorff(p: &[(f64, f64)], q: &[(f64, f64)]) -> f64 {
    let mut worst = 0.0f64;
    let mut cursor = 0usize;
    let m = q.len();
    for &(px, py) in p {
        let mut best = f64::INFINITY;
        let mut best_at = cursor;
        for k in 0..m {
            let j = (cursor + k) % m;
            let (qx, qy) = q[j];
            let d2 = (px - qx) * (px - qx) + (py - qy) * (py - qy);
            if d2 < best {
                best = d2;
                best_at = j;
                if best <= worst {
                    break;
                }
            }
        }
        cursor = best_at;
        if best > worst {
            worst = best;
        }
    }
    worst.sqrt()
}

/// Distance from a strip point to a sampled curve, minimized over the
/// curve's integer x-translates. Locally scaled so that points lying on a
/// segment report (numerically) zero.
pub fn distance_to_curve(p: StripPoint, curve: &CurveSample) -> f64 {
    let mut best = f64::INFINITY;
    for w in curve.points().windows(2) {
        let mid = 0.5 * (w[0].x + w[1].x);
        let shift = (p.x - mid).round();
        let d = point_segment_dist(p.x - shift, p.y, w[0].x, w[0].y, w[1].x, w[1].y);
        if d < best {
            best = d;
        }
    }
    best
}

/// Largest [`distance_to_curve`] over a set of points: the one-directional
/// deviation of the points from the curve.
pub fn max_deviation_from_curve(points: &[StripPoint], curve: &CurveSample) -> f64 {
    points
        .iter()
        .map(|&p| distance_to_curve(p, curve))
        .fold(0.0, f64::max)
}

fn point_segment_dist(px: f64, py: f64, ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    // Scale x by the local circumference so the value approximates the
    // annulus metric near the segment.
    let scale = TAU * 0.5 * (ay + by);
    let (px, ax, bx) = (px * scale, ax * scale, bx * scale);
    let (dx, dy) = (bx - ax, by - ay);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((px - ax) * dx + (py - ay) * dy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (ax + t * dx, ay + t * dy);
    (px - cx).hypot(py - cy)
}

/// Maximal drawdown of the lifted angle along a closed winding-1 curve: the
/// largest angular backtrack `lift(i) - lift(j)` over sample indices `i < j`
/// within one period, in radians.
pub fn drawdown_mfa(curve: &CurveSample) -> Result<f64> {
    if !curve.closed() || curve.winding() != 1 {
        return Err(Error::InvalidArgument(
            "drawdown needs a closed winding-1 curve".into(),
        ));
    }
    curve.assert_density()?;
    let pts = curve.points();
    let n = pts.len() - 1;
    let mut run_max = f64::NEG_INFINITY;
    let mut best = 0.0f64;
    for i in 0..2 * n + 1 {
        let x = if i <= n { pts[i].x } else { pts[i - n].x + 1.0 };
        let theta = TAU * x;
        if theta > run_max {
            run_max = theta;
        }
        let drop = run_max - theta;
        if drop > best {
            best = drop;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveSample;
    use proptest::prelude::*;

    fn circle(r: f64, n: usize) -> CurveSample {
        CurveSample::circle(r, n).unwrap()
    }

    #[test]
    fn hausdorff_concentric_circles() {
        let a = circle(1.2, 512);
        let b = circle(1.4, 512);
        let d = hausdorff_distance(&a, &b);
        assert!((d - 0.2).abs() < 1e-3, "d = {d}");
    }

    #[test]
    fn hausdorff_identical_curves_is_zero() {
        let a = circle(1.7, 256);
        assert_eq!(hausdorff_distance(&a, &a), 0.0);
    }

    #[test]
    fn hausdorff_matches_brute_force() {
        // Independent O(n*m) evaluation without the early-exit scan.
        let a = circle(1.25, 173);
        let pts: Vec<StripPoint> = (0..=100)
            .map(|k| {
                let t = k as f64 / 100.0;
                StripPoint::new(
                    t + 0.03 * (TAU * 3.0 * t).sin(),
                    1.6 + 0.2 * (TAU * t).cos(),
                )
            })
            .collect();
        let mut pts = pts;
        let last = pts.len() - 1;
        pts[last] = StripPoint::new(pts[0].x + 1.0, pts[0].y);
        let b = CurveSample::new(pts, true, 1).unwrap();

        let brute = |p: &CurveSample, q: &CurveSample| -> f64 {
            p.points()
                .iter()
                .map(|u| {
                    q.points()
                        .iter()
                        .map(|v| crate::point::strip_dist(*u, *v))
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max)
        };
        let expect = brute(&a, &b).max(brute(&b, &a));
        let got = hausdorff_distance(&a, &b);
        assert!((got - expect).abs() < 1e-12, "got {got}, expect {expect}");
    }

    #[test]
    fn crossing_radial_through_circle() {
        let arc = CurveSample::radial_arc(0.0, 1.0, 2.0, 32).unwrap();
        let c = circle(1.5, 256);
        assert_eq!(count_crossings(&arc, &c).unwrap(), 1);
    }

    #[test]
    fn crossing_short_radial_misses_circle() {
        let arc = CurveSample::radial_arc(0.0, 1.0, 1.2, 8).unwrap();
        let c = circle(1.5, 256);
        assert_eq!(count_crossings(&arc, &c).unwrap(), 0);
    }

    #[test]
    fn crossing_perturbation_resolves_vertex_hit() {
        // Arc aimed exactly at a sample vertex of the circle.
        let arc = CurveSample::radial_arc(0.0, 1.0, 2.0, 4).unwrap();
        let c = circle(1.5, 64); // has a vertex at x = 0
        let n = count_crossings(&arc, &c).unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn crossing_rejects_endpoint_on_target() {
        let arc = CurveSample::radial_arc(0.0, 1.0, 1.5, 8).unwrap();
        let c = circle(1.5, 64);
        assert!(count_crossings(&arc, &c).is_err());
    }

    #[test]
    fn crossing_rejects_shared_subsegment() {
        let arc = CurveSample::new(
            vec![StripPoint::new(-0.1, 1.5), StripPoint::new(0.1, 1.5)],
            false,
            0,
        )
        .unwrap();
        let c = circle(1.5, 64);
        assert!(matches!(
            count_crossings(&arc, &c),
            Err(Error::DegenerateOverlap)
        ));
    }

    #[test]
    fn self_intersections_of_simple_curves() {
        assert_eq!(count_self_intersections(&circle(1.5, 128)).unwrap(), 0);
        let arc = CurveSample::radial_arc(1.0, 1.0, 2.0, 16).unwrap();
        assert_eq!(count_self_intersections(&arc).unwrap(), 0);
    }

    #[test]
    fn self_intersections_of_figure_eight() {
        // An open zigzag crossing itself once.
        let pts = vec![
            StripPoint::new(0.00, 1.2),
            StripPoint::new(0.10, 1.8),
            StripPoint::new(0.20, 1.2),
            StripPoint::new(0.05, 1.8),
        ];
        let c = CurveSample::new(pts, false, 0).unwrap();
        assert_eq!(count_self_intersections(&c).unwrap(), 1);
    }

    #[test]
    fn drawdown_of_round_circle_is_zero() {
        assert_eq!(drawdown_mfa(&circle(1.5, 256)).unwrap(), 0.0);
    }

    #[test]
    fn drawdown_detects_backtrack() {
        // One backtrack of 0.05 turns per period.
        let xs = [0.0, 0.3, 0.25, 0.6, 1.0];
        let pts: Vec<StripPoint> = xs.iter().map(|&x| StripPoint::new(x, 1.5)).collect();
        // Refine to satisfy the density contract.
        let mut fine = Vec::new();
        for w in pts.windows(2) {
            let steps = ((w[1].x - w[0].x).abs() / 0.01).ceil().max(1.0) as usize;
            for k in 0..steps {
                let t = k as f64 / steps as f64;
                fine.push(StripPoint::new(
                    w[0].x + t * (w[1].x - w[0].x),
                    w[0].y + t * (w[1].y - w[0].y),
                ));
            }
        }
        fine.push(StripPoint::new(1.0, 1.5));
        let c = CurveSample::new(fine, true, 1).unwrap();
        let d = drawdown_mfa(&c).unwrap();
        assert!((d - 0.05 * TAU).abs() < 1e-12, "d = {d}");
    }

    #[test]
    fn distance_to_curve_vanishes_on_samples() {
        let c = circle(1.5, 200);
        for p in c.points().iter().step_by(7) {
            assert!(distance_to_curve(*p, &c) < 1e-14);
        }
        // Shift-invariance across periods.
        let p = StripPoint::new(5.37, 1.5);
        assert!(distance_to_curve(p, &c) < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn drawdown_invariant_under_rotation_and_reindex(
            rot in 0.0f64..1.0,
            start in 0usize..100,
            m in 2usize..5,
            amp in 0.0f64..0.02,
        ) {
            let n = 128usize;
            let base: Vec<StripPoint> = (0..n)
                .map(|k| {
                    let t = k as f64 / n as f64;
                    StripPoint::new(t + amp * (TAU * m as f64 * t).sin(), 1.5)
                })
                .collect();
            let close = |v: &mut Vec<StripPoint>| {
                let first = v[0];
                v.push(StripPoint::new(first.x + 1.0, first.y));
            };
            let mut plain = base.clone();
            close(&mut plain);
            let c0 = CurveSample::new(plain, true, 1).unwrap();
            let d0 = drawdown_mfa(&c0).unwrap();

            let mut rotated: Vec<StripPoint> = base.iter().map(|p| StripPoint::new(p.x + rot, p.y)).collect();
            close(&mut rotated);
            let c1 = CurveSample::new(rotated, true, 1).unwrap();
            let d1 = drawdown_mfa(&c1).unwrap();

            let start = start % n;
            let mut reindexed: Vec<StripPoint> = (0..n)
                .map(|k| {
                    let j = (start + k) % n;
                    let wrap = if start + k >= n { 1.0 } else { 0.0 };
                    StripPoint::new(base[j].x + wrap, base[j].y)
                })
                .collect();
            close(&mut reindexed);
            let c2 = CurveSample::new(reindexed, true, 1).unwrap();
            let d2 = drawdown_mfa(&c2).unwrap();

            prop_assert!((d0 - d1).abs() < 1e-9);
            prop_assert!((d0 - d2).abs() < 1e-9);
        }

        #[test]
        fn hausdorff_metric_properties(
            r1 in 1.05f64..1.95,
            r2 in 1.05f64..1.95,
            r3 in 1.05f64..1.95,
            m in 1usize..4,
            amp in 0.0f64..0.04,
        ) {
            let mk = |r: f64, amp: f64| -> CurveSample {
                let n = 128usize;
                let mut pts: Vec<StripPoint> = (0..n)
                    .map(|k| {
                        let t = k as f64 / n as f64;
                        let y = (r + amp * (TAU * m as f64 * t).cos()).clamp(1.0, 2.0);
                        StripPoint::new(t, y)
                    })
                    .collect();
                let first = pts[0];
                pts.push(StripPoint::new(first.x + 1.0, first.y));
                CurveSample::new(pts, true, 1).unwrap()
            };
            let a = mk(r1, amp);
            let b = mk(r2, 0.0);
            let c = mk(r3, amp * 0.5);
            let dab = hausdorff_distance(&a, &b);
            let dba = hausdorff_distance(&b, &a);
            let dac = hausdorff_distance(&a, &c);
            let dcb = hausdorff_distance(&c, &b);
            prop_assert!((dab - dba).abs() < 1e-12);
            prop_assert!(hausdorff_distance(&a, &a) == 0.0);
            prop_assert!(dab <= dac + dcb + 1e-12);
        }

        #[test]
        fn boundary_arc_crosses_essential_loop_odd(
            theta in 0.0f64..TAU,
            m in 1usize..4,
            amp in 0.0f64..0.2,
            phase in 0.0f64..1.0,
        ) {
            let n = 256usize;
            let mut pts: Vec<StripPoint> = (0..n)
                .map(|k| {
                    let t = k as f64 / n as f64;
                    let y = 1.5 + amp * (TAU * (m as f64 * t + phase)).sin();
                    StripPoint::new(t, y)
                })
                .collect();
            let first = pts[0];
            pts.push(StripPoint::new(first.x + 1.0, first.y));
            let loop_ = CurveSample::new(pts, true, 1).unwrap();
            let arc = CurveSample::radial_arc(theta, 1.0, 2.0, 64).unwrap();
            // Degenerate alignments may legitimately refuse to count.
            if let Ok(count) = count_crossings(&arc, &loop_) {
                prop_assert!(count % 2 == 1, "count = {count}");
            }
        }
    }
}
