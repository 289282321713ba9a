//! Numerical construction kit for annulus homeomorphisms built from
//! piecewise-affine folding rotations.
//!
//! The crate provides:
//!
//! - strip/annulus coordinates, angle lifting, and curve sampling
//!   ([`point`], [`curve`], [`metrics`]);
//! - the periodic folding homeomorphism `H` for a rational `p/q`, with
//!   machine-checked validity and its quantitative properties ([`fold`]);
//! - rational approximants of an irrational rotation angle and the assembled
//!   band map `g` whose restriction to each nested band is a squeezed
//!   conjugate of `H R_alpha H^{-1}` ([`approximant`], [`gmap`]);
//! - orbit diagnostics: rotation numbers, proximality probes, and transversal
//!   crossing reports ([`dynamics`]);
//! - a constructive linearization for maps that admit a section through
//!   their invariant circles ([`linearize`]).

pub mod approximant;
pub mod curve;
pub mod dynamics;
pub mod error;
pub mod fold;
pub mod gmap;
pub mod io;
pub mod linearize;
pub mod metrics;
pub mod point;

pub use curve::CurveSample;
pub use error::{Error, Result};
pub use point::{AnnulusPoint, StripPoint};
