//! Sampled curves in the strip cover.
//!
//! A `CurveSample` is an ordered polyline of lifted points. Closed curves
//! store one explicit closing point: the last sample equals the first shifted
//! by `winding` turns in `x` at the same `y`. Producers of curves fed to the
//! angular machinery must keep consecutive angular gaps below pi/8.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::point::{cover_project, AnnulusPoint, StripPoint};

/// Producer-side sampling contract: consecutive angular gaps stay below this.
pub const MAX_ANGULAR_GAP: f64 = PI / 8.0;

/// Closure bookkeeping tolerance, in strip units.
pub const CLOSURE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    points: Vec<StripPoint>,
    closed: bool,
    winding: i32,
}

impl CurveSample {
    /// Validates the polyline invariants and wraps the samples.
    ///
    /// For closed curves the final sample must equal the first shifted by
    /// `winding` in `x` and match it in `y`.
    pub fn new(points: Vec<StripPoint>, closed: bool, winding: i32) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidCurve("fewer than two samples".into()));
        }
        for p in &points {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::InvalidCurve("non-finite sample".into()));
            }
            if p.y < 1.0 - CLOSURE_TOL || p.y > 2.0 + CLOSURE_TOL {
                return Err(Error::OutsideStrip { y: p.y });
            }
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[0].x == w[1].x && w[0].y == w[1].y {
                return Err(Error::InvalidCurve(format!(
                    "duplicate consecutive samples at index {i}"
                )));
            }
        }
        if closed {
            let first = points[0];
            let last = points[points.len() - 1];
            if (last.x - first.x - f64::from(winding)).abs() > CLOSURE_TOL
                || (last.y - first.y).abs() > CLOSURE_TOL
            {
                return Err(Error::InvalidCurve(format!(
                    "closure mismatch: last = ({}, {}), first = ({}, {}), winding = {winding}",
                    last.x, last.y, first.x, first.y
                )));
            }
        } else if winding != 0 {
            return Err(Error::InvalidCurve("open arc with nonzero winding".into()));
        }
        Ok(Self {
            points,
            closed,
            winding,
        })
    }

    pub fn points(&self) -> &[StripPoint] {
        &self.points
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn winding(&self) -> i32 {
        self.winding
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Projected annulus samples, in order.
    pub fn to_annulus(&self) -> Result<Vec<AnnulusPoint>> {
        self.points.iter().map(|&p| cover_project(p)).collect()
    }

    /// The round circle `C_r`, sampled uniformly; winding 1.
    pub fn circle(r: f64, n_samples: usize) -> Result<Self> {
        if !(1.0..=2.0).contains(&r) {
            return Err(Error::OutsideAnnulus { r });
        }
        if n_samples < 2 {
            return Err(Error::InvalidArgument("circle needs >= 2 samples".into()));
        }
        let pts = (0..=n_samples)
            .map(|k| StripPoint::new(k as f64 / n_samples as f64, r))
            .collect();
        Self::new(pts, true, 1)
    }

    /// Radial arc at fixed angle joining radius `r0` to `r1`.
    pub fn radial_arc(theta: f64, r0: f64, r1: f64, n_samples: usize) -> Result<Self> {
        if !(1.0..=2.0).contains(&r0) || !(1.0..=2.0).contains(&r1) || r0 == r1 {
            return Err(Error::InvalidArgument(format!(
                "bad radial extent [{r0}, {r1}]"
            )));
        }
        if n_samples < 2 {
            return Err(Error::InvalidArgument("arc needs >= 2 samples".into()));
        }
        let x = theta / std::f64::consts::TAU;
        let pts = (0..=n_samples)
            .map(|k| {
                let t = k as f64 / n_samples as f64;
                StripPoint::new(x, r0 + t * (r1 - r0))
            })
            .collect();
        Self::new(pts, false, 0)
    }

    /// Largest angular gap between consecutive samples, in radians.
    pub fn max_angular_gap(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| (w[1].x - w[0].x).abs() * std::f64::consts::TAU)
            .fold(0.0, f64::max)
    }

    /// Enforces the producer-side density contract (gaps < pi/8).
    pub fn assert_density(&self) -> Result<()> {
        for (i, w) in self.points.windows(2).enumerate() {
            let gap = (w[1].x - w[0].x).abs() * std::f64::consts::TAU;
            if gap >= MAX_ANGULAR_GAP {
                return Err(Error::Undersampled {
                    index: i + 1,
                    gap,
                    limit: MAX_ANGULAR_GAP,
                });
            }
        }
        Ok(())
    }

    /// Applies a pointwise strip map, keeping closure metadata.
    ///
    /// The map must commute with the unit x-translation for the closure
    /// invariant to survive; the result is re-validated.
    pub fn map_points(&self, f: impl Fn(StripPoint) -> Result<StripPoint>) -> Result<Self> {
        let pts: Result<Vec<StripPoint>> = self.points.iter().map(|&p| f(p)).collect();
        let pts = pts?;
        let winding = if self.closed {
            let first = pts[0];
            let last = pts[pts.len() - 1];
            let w = (last.x - first.x).round();
            if (last.x - first.x - w).abs() > CLOSURE_TOL {
                return Err(Error::InvalidCurve(
                    "image of closed curve does not close up".into(),
                ));
            }
            w as i32
        } else {
            0
        };
        Self::new(pts, self.closed, winding)
    }
}
