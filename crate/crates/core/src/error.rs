//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by geometry construction, map evaluation, and diagnostics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point outside the covering strip: y = {y}")]
    OutsideStrip { y: f64 },

    #[error("radius outside the annulus: r = {r}")]
    OutsideAnnulus { r: f64 },

    #[error("angular undersampling at index {index}: gap {gap:.6} rad exceeds {limit:.6} rad")]
    Undersampled { index: usize, gap: f64, limit: f64 },

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("curves share a collinear subsegment; crossing count undefined")]
    DegenerateOverlap,

    #[error("crossing count did not stabilize under perturbation ({0} vs {1})")]
    PerturbationDisagreement(usize, usize),

    #[error("fold parameters rejected: {0}")]
    InvalidFoldSpec(String),

    #[error("fold map construction failed validation: {0}")]
    FoldConstruction(String),

    #[error("point location failed at ({x}, {y})")]
    PointLocation { x: f64, y: f64 },

    #[error("alpha is rational at working precision: {got} usable approximants, {need} requested")]
    RationalAlpha { got: usize, need: usize },

    #[error("radius {r} outside band [{lo}, {hi}]")]
    OutsideBand { r: f64, lo: f64, hi: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("map registration failed: forward/inverse residual {residual:.3e} at sample {index}")]
    InverseMismatch { index: usize, residual: f64 },

    #[error("orbit on circle label {label} is not rotation-ordered")]
    NonMonotoneCircleOrder { label: f64 },

    #[error("periodic orbit detected on circle label {label}")]
    PeriodicOrbit { label: f64 },

    #[error("interpolation gap {gap:.6} turns exceeds threshold {limit:.6}")]
    InterpolationGap { gap: f64, limit: f64 },

    #[error("arc is not a transversal; violating circle labels: {0:?}")]
    NotTransversal(Vec<f64>),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv parse: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;
