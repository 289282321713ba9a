//! Coordinates on the closed annulus `1 <= r <= 2` and on its strip cover.
//!
//! The covering map sends a strip point `(x, y)` to the annulus point with
//! angle `2*pi*x` and radius `y`; `x` is measured in turns (1 = one full
//! revolution), angles on the annulus side are radians.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Radii outside `[1, 2]` by at most this much are snapped to the boundary.
pub const RADIUS_SLACK: f64 = 1e-9;

/// A point of the annulus in polar form: `theta` in `[0, 2*pi)`, `r` in `[1, 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnulusPoint {
    theta: f64,
    r: f64,
}

/// A point of the strip cover: `x` in turns, `y = r` in `[1, 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripPoint {
    pub x: f64,
    pub y: f64,
}

impl AnnulusPoint {
    /// Normalizes `theta` into `[0, 2*pi)` and validates the radius.
    pub fn new(theta: f64, r: f64) -> Result<Self> {
        if !theta.is_finite() || !r.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "non-finite polar coordinates ({theta}, {r})"
            )));
        }
        let r = snap_radius(r)?;
        Ok(Self {
            theta: normalize_angle(theta),
            r,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Planar embedding `(r cos theta, r sin theta)`.
    pub fn to_plane(&self) -> (f64, f64) {
        (self.r * self.theta.cos(), self.r * self.theta.sin())
    }
}

impl StripPoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Planar embedding of the projected point.
    pub fn to_plane(&self) -> (f64, f64) {
        let ang = TAU * self.x;
        (self.y * ang.cos(), self.y * ang.sin())
    }
}

/// Reduces an angle into `[0, 2*pi)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(TAU);
    // rem_euclid can round up to the modulus itself for tiny negative inputs.
    if t >= TAU {
        t -= TAU;
    }
    t
}

/// Signed angular difference reduced into `(-pi, pi]`.
pub fn wrap_to_pi(delta: f64) -> f64 {
    let mut d = delta.rem_euclid(TAU);
    if d > PI {
        d -= TAU;
    }
    d
}

/// Distance between two angles on the circle, in `[0, pi]`.
pub fn circle_dist(a: f64, b: f64) -> f64 {
    wrap_to_pi(a - b).abs()
}

fn snap_radius(r: f64) -> Result<f64> {
    if (1.0..=2.0).contains(&r) {
        Ok(r)
    } else if r > 1.0 - RADIUS_SLACK && r < 2.0 + RADIUS_SLACK {
        Ok(r.clamp(1.0, 2.0))
    } else {
        Err(Error::OutsideAnnulus { r })
    }
}

/// Covering projection: `(x, y) -> (theta = 2*pi*frac(x), r = y)`.
pub fn cover_project(p: StripPoint) -> Result<AnnulusPoint> {
    if !(p.y > 1.0 - RADIUS_SLACK && p.y < 2.0 + RADIUS_SLACK) {
        return Err(Error::OutsideStrip { y: p.y });
    }
    let turns = p.x.rem_euclid(1.0);
    let turns = if turns >= 1.0 { 0.0 } else { turns };
    AnnulusPoint::new(TAU * turns, p.y.clamp(1.0, 2.0))
}

/// Inverse branch of the covering map: the unique lift with `x` within
/// `(-1/2, 1/2]` of `branch_hint`.
pub fn cover_lift(a: AnnulusPoint, branch_hint: f64) -> StripPoint {
    let t = a.theta() / TAU;
    let k = (branch_hint - t + 0.5).floor();
    StripPoint::new(t + k, a.r())
}

/// Continuous lift of the angles along a discrete path.
///
/// Consecutive angular gaps must stay below pi; otherwise the branch choice is
/// ambiguous and the path is reported as undersampled.
pub fn lift_angle_path(samples: &[AnnulusPoint]) -> Result<Vec<f64>> {
    lift_angles(samples.iter().map(|p| p.theta()))
}

/// As [`lift_angle_path`], starting from raw angles in radians.
pub fn lift_angles(angles: impl IntoIterator<Item = f64>) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let mut iter = angles.into_iter();
    let Some(first) = iter.next() else {
        return Ok(out);
    };
    out.push(first);
    let mut prev_raw = first;
    let mut prev_lift = first;
    for (i, theta) in iter.enumerate() {
        let delta = wrap_to_pi(theta - prev_raw);
        if delta.abs() >= PI - 1e-12 {
            return Err(Error::Undersampled {
                index: i + 1,
                gap: delta.abs(),
                limit: PI,
            });
        }
        prev_lift += delta;
        prev_raw = theta;
        out.push(prev_lift);
    }
    Ok(out)
}

/// `k * alpha mod 1`, computed exactly through the dyadic representation of
/// the f64 `alpha` (every f64 is a rational with a power-of-two denominator,
/// so the product reduces to integer arithmetic).
pub fn rotation_steps_mod1(alpha: f64, k: i64) -> f64 {
    debug_assert!((0.0..1.0).contains(&alpha), "alpha = {alpha}");
    if alpha == 0.0 || k == 0 {
        return 0.0;
    }
    let bits = alpha.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (m, e) = if exp == 0 {
        (frac, -1074i64)
    } else {
        (frac | (1 << 52), exp - 1075)
    };
    let tz = i64::from(m.trailing_zeros());
    let m = m >> tz;
    let s = -(e + tz); // alpha = m / 2^s with m odd
    if s <= 0 {
        return 0.0;
    }
    if s >= 117 {
        // alpha <= 2^(53-s) <= 2^-64, so |k| * alpha < 1: no reduction needed.
        return (k as f64 * alpha).rem_euclid(1.0);
    }
    let modulus: u128 = 1u128 << s;
    let r = (k.unsigned_abs() as u128 * m as u128) % modulus;
    let r = if k < 0 { (modulus - r) % modulus } else { r };
    r as f64 / modulus as f64
}

/// Distance in the plane between two annulus points.
pub fn annulus_dist(a: AnnulusPoint, b: AnnulusPoint) -> f64 {
    let (ax, ay) = a.to_plane();
    let (bx, by) = b.to_plane();
    (ax - bx).hypot(ay - by)
}

/// Distance in the plane between the projections of two strip points.
pub fn strip_dist(a: StripPoint, b: StripPoint) -> f64 {
    let (ax, ay) = a.to_plane();
    let (bx, by) = b.to_plane();
    (ax - bx).hypot(ay - by)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn project_identity_case() {
        let a = cover_project(StripPoint::new(0.0, 1.0)).unwrap();
        assert_eq!(a.theta(), 0.0);
        assert_eq!(a.r(), 1.0);
    }

    #[test]
    fn project_quarter_turn() {
        let a = cover_project(StripPoint::new(0.25, 1.5)).unwrap();
        assert!((a.theta() - PI / 2.0).abs() < 1e-15);
        assert_eq!(a.r(), 1.5);
    }

    #[test]
    fn project_wraps_by_full_turn() {
        let a = cover_project(StripPoint::new(1.3, 2.0)).unwrap();
        assert!((a.theta() - TAU * 0.3).abs() < 1e-13);
        assert_eq!(a.r(), 2.0);
    }

    #[test]
    fn project_rejects_out_of_strip() {
        assert!(cover_project(StripPoint::new(0.0, 0.5)).is_err());
        assert!(cover_project(StripPoint::new(0.0, 2.5)).is_err());
    }

    #[test]
    fn lift_identity_and_branch_shift() {
        let p = cover_lift(AnnulusPoint::new(0.0, 1.0).unwrap(), 0.0);
        assert_eq!((p.x, p.y), (0.0, 1.0));

        let p = cover_lift(AnnulusPoint::new(PI / 2.0, 1.5).unwrap(), 1.2);
        assert!((p.x - 1.25).abs() < 1e-15);

        let p = cover_lift(AnnulusPoint::new(TAU * 0.9, 2.0).unwrap(), 0.0);
        assert!((p.x + 0.1).abs() < 1e-15);
    }

    #[test]
    fn lift_is_section_of_projection() {
        for k in 0..100 {
            let theta = 0.0628 * k as f64;
            let r = 1.0 + (k as f64) / 99.0;
            let a = AnnulusPoint::new(theta, r).unwrap();
            for hint in [-3.7, 0.0, 12.2] {
                let p = cover_lift(a, hint);
                assert!((p.x - hint).abs() <= 0.5 + 1e-12);
                let b = cover_project(p).unwrap();
                assert!(circle_dist(a.theta(), b.theta()) < 1e-12);
                assert_eq!(a.r(), b.r());
            }
        }
    }

    #[test]
    fn lift_angles_plain_and_wraparound() {
        let lifted = lift_angles([0.0, PI / 2.0, PI]).unwrap();
        assert_eq!(lifted, vec![0.0, PI / 2.0, PI]);

        let lifted = lift_angles([TAU - 0.1, 0.1]).unwrap();
        assert!((lifted[0] - (TAU - 0.1)).abs() < 1e-15);
        assert!((lifted[1] - (TAU + 0.1)).abs() < 1e-12);
    }

    #[test]
    fn lift_angles_rejects_half_turn_jump() {
        let err = lift_angles([0.0, PI]).unwrap_err();
        assert!(matches!(err, Error::Undersampled { .. }));
    }

    #[test]
    fn lift_reduces_back_mod_tau() {
        let angles: Vec<f64> = (0..500).map(|k| normalize_angle(0.37 * k as f64)).collect();
        let lifted = lift_angles(angles.iter().copied()).unwrap();
        for (raw, lift) in angles.iter().zip(&lifted) {
            assert!(circle_dist(*raw, normalize_angle(*lift)) < 1e-9);
        }
    }

    #[test]
    fn radius_snap_tolerance() {
        assert!(AnnulusPoint::new(0.0, 1.0 - 1e-10).is_ok());
        assert!(AnnulusPoint::new(0.0, 2.0 + 1e-10).is_ok());
        assert!(AnnulusPoint::new(0.0, 0.9).is_err());
    }

    #[test]
    fn rotation_steps_are_exact_mod_one() {
        // Simple dyadic cases agree with direct arithmetic.
        for alpha in [0.25, 0.5, 0.375] {
            for k in [-7i64, -1, 0, 1, 5, 12] {
                let got = rotation_steps_mod1(alpha, k);
                let want = (k as f64 * alpha).rem_euclid(1.0);
                assert_eq!(got, want, "alpha={alpha}, k={k}");
            }
        }
        // For any f64 angle the step sequence is exactly arithmetic mod 1:
        // consecutive values differ by alpha or alpha - 1, bit for bit.
        let alpha = 0.618_033_988_749_894_9_f64;
        let mut prev = 0.0;
        for k in 1..=10_000i64 {
            let cur = rotation_steps_mod1(alpha, k);
            let diff = cur - prev;
            assert!(
                diff == alpha || diff == alpha - 1.0,
                "k={k}: diff={diff:.20}"
            );
            prev = cur;
        }
        // Symmetry of inverse steps.
        for k in 1..=50i64 {
            let fwd = rotation_steps_mod1(alpha, k);
            let bwd = rotation_steps_mod1(alpha, -k);
            assert_eq!((fwd + bwd).rem_euclid(1.0), 0.0, "k={k}");
        }
    }
}
