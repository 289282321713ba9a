//! Constructive linearization for maps whose invariant circles are the round
//! circles `C_r` (rigid rotations, and twisted conjugates of them built by
//! [`synthetic_linearizable`]).
//!
//! Given a transversal section `gamma` and the rotation number `theta`, the
//! conjugacy is pinned on the orbit of the section: the n-th image of
//! `gamma(alpha)` is sent to radius `alpha` at angle `n theta`. Off the orbit
//! it extends by monotone circular interpolation of the per-circle tables,
//! which is where all the measurable error lives; the residual of
//! `Psi g = R_theta Psi` quantifies it.

use serde::Serialize;

use crate::curve::CurveSample;
use crate::dynamics::MapHandle;
use crate::error::{Error, Result};
use crate::metrics::count_crossings;
use crate::point::{annulus_dist, rotation_steps_mod1, AnnulusPoint, StripPoint};

/// An arc joining the boundary circles that meets every round circle exactly
/// once (equivalently: its radius is strictly monotone along the arc).
#[derive(Debug, Clone)]
pub struct Transversal {
    curve: CurveSample,
}

impl Transversal {
    pub fn new(curve: CurveSample) -> Result<Transversal> {
        if curve.closed() {
            return Err(Error::InvalidArgument(
                "transversal must be an open arc".into(),
            ));
        }
        let mut pts = curve.points().to_vec();
        if pts[0].y > pts[pts.len() - 1].y {
            pts.reverse();
        }
        if (pts[0].y - 1.0).abs() > 1e-9 || (pts[pts.len() - 1].y - 2.0).abs() > 1e-9 {
            return Err(Error::InvalidArgument(
                "transversal must join the boundary circles".into(),
            ));
        }
        if pts.windows(2).any(|w| w[1].y <= w[0].y) {
            return Err(Error::InvalidArgument(
                "transversal radius must be strictly monotone".into(),
            ));
        }
        Ok(Transversal {
            curve: CurveSample::new(pts, false, 0)?,
        })
    }

    pub fn curve(&self) -> &CurveSample {
        &self.curve
    }

    /// The unique point of the arc at radius `label`.
    pub fn point_at_label(&self, label: f64) -> Result<StripPoint> {
        if !(1.0..=2.0).contains(&label) {
            return Err(Error::OutsideAnnulus { r: label });
        }
        let pts = self.curve.points();
        let idx = pts.partition_point(|p| p.y < label);
        if idx == 0 {
            return Ok(pts[0]);
        }
        if idx == pts.len() {
            return Ok(pts[pts.len() - 1]);
        }
        let (a, b) = (pts[idx - 1], pts[idx]);
        let t = (label - a.y) / (b.y - a.y);
        Ok(StripPoint::new(a.x + t * (b.x - a.x), label))
    }
}

/// Crossing counts of an arc against `n_circles` round circles; the
/// transversal precheck for round-circle decompositions.
pub fn round_circle_crossings(arc: &CurveSample, n_circles: usize) -> Result<Vec<usize>> {
    let mut counts = Vec::with_capacity(n_circles);
    for i in 0..n_circles {
        let r = 1.0 + (i as f64 + 0.5) / n_circles as f64;
        let circle = CurveSample::circle(r, 512)?;
        counts.push(count_crossings(arc, &circle)?);
    }
    Ok(counts)
}

/// A synthetic linearizable map `f = Phi R_alpha Phi^{-1}` with
/// `Phi(theta, r) = (theta + a (r-1) sin theta, r)`, together with an exact
/// bent transversal (the `Phi`-image of the radial segment at angle pi/2).
///
/// `twist_amplitude` must stay below 1 so `Phi` is injective on every circle.
pub fn synthetic_linearizable(
    alpha: f64,
    twist_amplitude: f64,
) -> Result<(MapHandle, Transversal)> {
    if !(0.0..1.0).contains(&twist_amplitude) {
        return Err(Error::InvalidArgument(format!(
            "twist amplitude must lie in [0, 1), got {twist_amplitude}"
        )));
    }
    let a = twist_amplitude;
    let tau = std::f64::consts::TAU;

    let twist = move |z: StripPoint| -> StripPoint {
        let c = a * (z.y - 1.0);
        StripPoint::new(z.x + c * (tau * z.x).sin() / tau, z.y)
    };
    let untwist = move |z: StripPoint| -> StripPoint {
        // Solve u + c sin u = v (radians); c < 1 makes Newton from v safe.
        let c = a * (z.y - 1.0);
        let v = tau * z.x;
        let mut u = v;
        for _ in 0..64 {
            let f = u + c * u.sin() - v;
            if f.abs() < 1e-15 {
                break;
            }
            u -= f / (1.0 + c * u.cos());
        }
        StripPoint::new(u / tau, z.y)
    };

    let fwd = move |z: StripPoint| -> Result<StripPoint> {
        let w = untwist(z);
        Ok(twist(StripPoint::new(w.x + alpha, w.y)))
    };
    let inv = move |z: StripPoint| -> Result<StripPoint> {
        let w = untwist(z);
        Ok(twist(StripPoint::new(w.x - alpha, w.y)))
    };
    let alpha_mod = alpha.rem_euclid(1.0);
    let handle = MapHandle::new(format!("synthetic(alpha={alpha}, a={a})"), fwd, inv)?.with_power(
        move |z, k| {
            let w = untwist(z);
            Ok(twist(StripPoint::new(
                w.x + rotation_steps_mod1(alpha_mod, k),
                w.y,
            )))
        },
    );

    let n = 256;
    let pts: Vec<StripPoint> = (0..=n)
        .map(|k| {
            let y = 1.0 + k as f64 / n as f64;
            twist(StripPoint::new(0.25, y))
        })
        .collect();
    let gamma = Transversal::new(CurveSample::new(pts, false, 0)?)?;
    Ok((handle, gamma))
}

/// One orbit sample of the conjugacy on a circle.
#[derive(Debug, Clone, Copy)]
pub struct TableEntry {
    /// Orbit index.
    pub k: i64,
    /// Angular position of `f^k(base)` relative to the base point, turns in `[0, 1)`.
    pub position: f64,
    /// Lifted target angle, turns (equals `k theta` up to the lift).
    pub target: f64,
}

/// The sampled conjugacy on one circle: positions of the base orbit paired
/// with the rotation orbit, circularly monotone.
#[derive(Debug, Clone)]
pub struct CircleTable {
    pub label: f64,
    pub base: StripPoint,
    entries: Vec<TableEntry>,
    pub worst_position_gap: f64,
    pub worst_target_gap: f64,
}

impl CircleTable {
    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    /// Interpolated target angle (turns, in `[0, 1)`) at a position.
    pub fn query(&self, position: f64) -> f64 {
        let s = position.rem_euclid(1.0);
        let n = self.entries.len();
        let idx = self.entries.partition_point(|e| e.position <= s);
        let (a, b, wrap) = if idx == 0 || idx == n {
            (self.entries[n - 1], self.entries[0], true)
        } else {
            (self.entries[idx - 1], self.entries[idx], false)
        };
        let width = if wrap {
            1.0 - a.position + b.position
        } else {
            b.position - a.position
        };
        let offset = if idx == 0 {
            s + 1.0 - a.position
        } else {
            s - a.position
        };
        let target_step = (b.target - a.target).rem_euclid(1.0);
        let t = a.target + offset / width * target_step;
        t.rem_euclid(1.0)
    }
}

/// Builds the conjugacy table on the circle through `base` from the orbit
/// window `k in [k_lo, k_hi]`.
pub fn circle_conjugacy_window(
    map: &MapHandle,
    base: StripPoint,
    theta: f64,
    k_lo: i64,
    k_hi: i64,
) -> Result<CircleTable> {
    if k_lo > 0 || k_hi < 0 || k_hi - k_lo < 8 {
        return Err(Error::InvalidArgument(format!(
            "bad orbit window [{k_lo}, {k_hi}]"
        )));
    }
    let label = base.y;
    // Only positions mod 1 matter here, so renormalize the lift every step
    // (x - floor(x) is exact); this keeps each step's rounding at ulp(1)
    // instead of ulp of a linearly growing coordinate. With a collapsed
    // power form there is no per-step accumulation at all.
    let reduce = |p: StripPoint| StripPoint::new(p.x - p.x.floor(), p.y);
    let mut raw = Vec::with_capacity((k_hi - k_lo + 1) as usize);
    let base_red = reduce(base);
    if map.has_collapsed_power() {
        for k in k_lo..=k_hi {
            raw.push((k, map.collapsed_power(base_red, k)?.x));
        }
    } else {
        let mut cur = base_red;
        for k in 0..=k_hi {
            raw.push((k, cur.x));
            if k < k_hi {
                cur = reduce(map.forward(cur)?);
            }
        }
        let mut cur = base_red;
        for k in 1..=(-k_lo) {
            cur = reduce(map.inverse(cur)?);
            raw.push((-k, cur.x));
        }
    }

    let theta_mod = theta.rem_euclid(1.0);
    let mut entries: Vec<TableEntry> = raw
        .iter()
        .map(|&(k, x)| TableEntry {
            k,
            position: (x - base.x).rem_euclid(1.0),
            target: rotation_steps_mod1(theta_mod, k),
        })
        .collect();
    entries.sort_by(|a, b| a.position.total_cmp(&b.position));

    for w in entries.windows(2) {
        if w[1].position - w[0].position < 1e-12 {
            return Err(Error::PeriodicOrbit { label });
        }
    }
    let seam = 1.0 - entries[entries.len() - 1].position + entries[0].position;
    if entries.len() >= 2 && seam < 1e-12 {
        return Err(Error::PeriodicOrbit { label });
    }

    // Orbit order must match rotation order: the wrapped target increments
    // (each in (0,1)) must make exactly one net turn.
    let n = entries.len();
    let mut total = 0.0;
    let mut worst_position_gap = 0.0f64;
    let mut worst_target_gap = 0.0f64;
    for i in 0..n {
        let a = &entries[i];
        let b = &entries[(i + 1) % n];
        let pos_gap = if i + 1 == n {
            1.0 - a.position + b.position
        } else {
            b.position - a.position
        };
        let t_gap = (b.target - a.target).rem_euclid(1.0);
        total += t_gap;
        worst_position_gap = worst_position_gap.max(pos_gap);
        worst_target_gap = worst_target_gap.max(t_gap);
    }
    if (total - 1.0).abs() > 1e-6 {
        return Err(Error::NonMonotoneCircleOrder { label });
    }

    Ok(CircleTable {
        label,
        base,
        entries,
        worst_position_gap,
        worst_target_gap,
    })
}

/// Conjugacy table from the symmetric window `|k| <= n`; `n >= 100`.
pub fn circle_conjugacy(
    map: &MapHandle,
    base: StripPoint,
    theta: f64,
    n: usize,
) -> Result<CircleTable> {
    if n < 100 {
        return Err(Error::InvalidArgument("circle table needs n >= 100".into()));
    }
    circle_conjugacy_window(map, base, theta, -(n as i64), n as i64)
}

/// The sampled conjugacy `Psi` on a grid of circle labels.
#[derive(Debug, Clone)]
pub struct LinearizationTable {
    theta: f64,
    n_orbit: usize,
    circles: Vec<CircleTable>,
    /// Largest angular gap between adjacent orbit samples on any circle (turns).
    pub worst_gap: f64,
    /// Largest target-side gap: the per-query interpolation error bound (turns).
    pub gap_bound: f64,
}

impl LinearizationTable {
    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn n_orbit(&self) -> usize {
        self.n_orbit
    }

    pub fn circles(&self) -> &[CircleTable] {
        &self.circles
    }

    /// `Psi` at the point of circle `i` at `position` (turns past the base
    /// point): radius is the circle label, angle the interpolated target.
    pub fn psi(&self, i: usize, position: f64) -> Result<AnnulusPoint> {
        let c = &self.circles[i];
        AnnulusPoint::new(std::f64::consts::TAU * c.query(position), c.label)
    }

    /// The orbit table as `alpha,n,angle_source,angle_target` CSV (angles in
    /// turns).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,n,angle_source,angle_target\n");
        for c in &self.circles {
            let mut rows: Vec<&TableEntry> = c.entries.iter().collect();
            rows.sort_by_key(|e| e.k);
            for e in rows {
                out.push_str(&format!(
                    "{:.16e},{},{:.16e},{:.16e}\n",
                    c.label, e.k, e.position, e.target
                ));
            }
        }
        out
    }
}

/// Builds `Psi` on `n_labels` circle labels from the orbit window `|k| <= n_orbit`.
///
/// Fails with the worst observed gap if some circle's orbit leaves an
/// angular hole larger than `max_gap` turns.
pub fn build_linearization(
    map: &MapHandle,
    gamma: &Transversal,
    theta: f64,
    n_orbit: usize,
    n_labels: usize,
    max_gap: f64,
) -> Result<LinearizationTable> {
    if n_orbit < 100 {
        return Err(Error::InvalidArgument("orbit window needs n >= 100".into()));
    }
    if n_labels < 2 {
        return Err(Error::InvalidArgument(
            "need at least 2 circle labels".into(),
        ));
    }
    let mut circles = Vec::with_capacity(n_labels);
    let mut worst_gap = 0.0f64;
    let mut gap_bound = 0.0f64;
    for i in 0..n_labels {
        let label = 1.0 + i as f64 / (n_labels - 1) as f64;
        let base = gamma.point_at_label(label)?;
        let table = circle_conjugacy(map, base, theta, n_orbit)?;
        worst_gap = worst_gap.max(table.worst_position_gap);
        gap_bound = gap_bound.max(table.worst_target_gap);
        circles.push(table);
    }
    if worst_gap > max_gap {
        return Err(Error::InterpolationGap {
            gap: worst_gap,
            limit: max_gap,
        });
    }
    Ok(LinearizationTable {
        theta,
        n_orbit,
        circles,
        worst_gap,
        gap_bound,
    })
}

/// Sup over `samples` grid points of `dist(Psi(f(x)), R_theta(Psi(x)))`.
pub fn conjugacy_residual(
    table: &LinearizationTable,
    map: &MapHandle,
    theta: f64,
    samples: usize,
) -> Result<f64> {
    let per_circle = samples.div_ceil(table.circles.len()).max(1);
    let mut worst = 0.0f64;
    for (i, c) in table.circles.iter().enumerate() {
        for j in 0..per_circle {
            let s = (j as f64 + 0.5) / per_circle as f64;
            let x = StripPoint::new(c.base.x + s, c.base.y);
            let fx = map.forward(x)?;
            let s_f = (fx.x - c.base.x).rem_euclid(1.0);
            let psi_fx = table.psi(i, s_f)?;
            let psi_x = table.psi(i, s)?;
            let rotated =
                AnnulusPoint::new(psi_x.theta() + std::f64::consts::TAU * theta, psi_x.r())?;
            let d = annulus_dist(psi_fx, rotated);
            if d > worst {
                worst = d;
            }
        }
    }
    Ok(worst)
}

/// Agreement of `Psi` built from the two disjoint half windows
/// `[-n_orbit, 0]` and `[0, n_orbit]`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WindowConsistency {
    /// Largest angular disagreement between the two estimates (turns).
    pub max_diff: f64,
    /// Sum of the two interpolation gap bounds (turns).
    pub bound: f64,
}

pub fn window_consistency(
    map: &MapHandle,
    gamma: &Transversal,
    theta: f64,
    n_orbit: usize,
    n_labels: usize,
    queries: usize,
) -> Result<WindowConsistency> {
    let mut max_diff = 0.0f64;
    let mut bound = 0.0f64;
    for i in 0..n_labels {
        let label = 1.0 + i as f64 / (n_labels - 1) as f64;
        let base = gamma.point_at_label(label)?;
        let past = circle_conjugacy_window(map, base, theta, -(n_orbit as i64), 0)?;
        let future = circle_conjugacy_window(map, base, theta, 0, n_orbit as i64)?;
        bound = bound.max(past.worst_target_gap + future.worst_target_gap);
        for j in 0..queries {
            let s = (j as f64 + 0.5) / queries as f64;
            let a = past.query(s);
            let b = future.query(s);
            let d = (a - b).rem_euclid(1.0);
            max_diff = max_diff.max(d.min(1.0 - d));
        }
    }
    Ok(WindowConsistency { max_diff, bound })
}

/// The section images `L_k = f^k(gamma)` for `k = -n ..= n`, in that order.
pub fn section_images(map: &MapHandle, gamma: &Transversal, n: usize) -> Result<Vec<CurveSample>> {
    let mut images = vec![gamma.curve().clone()];
    let mut cur = gamma.curve().clone();
    for _ in 0..n {
        cur = cur.map_points(|p| map.forward(p))?;
        images.push(cur.clone());
    }
    let mut cur = gamma.curve().clone();
    let mut past = Vec::new();
    for _ in 0..n {
        cur = cur.map_points(|p| map.inverse(p))?;
        past.push(cur.clone());
    }
    past.reverse();
    past.extend(images);
    Ok(past)
}
