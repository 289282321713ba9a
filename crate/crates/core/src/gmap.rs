//! The assembled band map `g`.
//!
//! Nested bands `A_n = { 2 - 1/(2n) <= r <= 2 - 1/(2n+1) }` accumulate at the
//! outer boundary. Inside band `n` the map is the fold conjugate
//! `H_n R_alpha H_n^{-1}`, transported by the radial squeeze identifying the
//! band with the full annulus; everywhere else it is the rigid rotation
//! `R_alpha`. Each `H_n` is built from the n-th retained approximant `p_n/q_n`
//! of `alpha`, so the angular displacement inside band `n` differs from
//! `2 pi alpha` by at most `5 pi / q_n + 2 pi / q_n^2`, which decays to zero:
//! that is the continuity of `g` at the outer circle, and it is what
//! `continuity_modulus` measures.
//!
//! Only finitely many bands are retained (`levels`); beyond them the map is
//! the rotation itself. Diagnostics only probe retained bands, and the same
//! decaying bound quantifies what truncation discards.

use serde::Serialize;

use crate::approximant::{dirichlet_approximants, Alpha, Approximant};
use crate::curve::CurveSample;
use crate::error::{Error, Result};
use crate::fold::FoldMap;
use crate::metrics::drawdown_mfa;
use crate::point::{cover_lift, cover_project, AnnulusPoint, StripPoint};

/// One nested band `A_n`, with the radial affine change of coordinates onto
/// the standard annulus.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BandSpec {
    pub n: u32,
    pub r_in: f64,
    pub r_out: f64,
}

impl BandSpec {
    pub fn level(n: u32) -> Result<BandSpec> {
        if n == 0 {
            return Err(Error::InvalidArgument("band index starts at 1".into()));
        }
        let nf = f64::from(n);
        Ok(BandSpec {
            n,
            r_in: 2.0 - 0.5 / nf,
            r_out: 2.0 - 1.0 / (2.0 * nf + 1.0),
        })
    }

    pub fn contains_r(&self, r: f64) -> bool {
        (self.r_in..=self.r_out).contains(&r)
    }

    /// Radial affine map `[r_in, r_out] -> [1, 2]` on the y coordinate.
    pub fn squeeze_y(&self, y: f64) -> f64 {
        1.0 + (y - self.r_in) / (self.r_out - self.r_in)
    }

    /// Inverse radial affine map `[1, 2] -> [r_in, r_out]`.
    pub fn unsqueeze_y(&self, y: f64) -> f64 {
        self.r_in + (y - 1.0) * (self.r_out - self.r_in)
    }

    /// Angle-preserving identification of the band with the annulus.
    pub fn squeeze(&self, z: AnnulusPoint) -> Result<AnnulusPoint> {
        if !self.contains_r(z.r()) {
            return Err(Error::OutsideBand {
                r: z.r(),
                lo: self.r_in,
                hi: self.r_out,
            });
        }
        AnnulusPoint::new(z.theta(), self.squeeze_y(z.r()))
    }

    /// Inverse of [`BandSpec::squeeze`].
    pub fn unsqueeze(&self, z: AnnulusPoint) -> Result<AnnulusPoint> {
        AnnulusPoint::new(z.theta(), self.unsqueeze_y(z.r()))
    }
}

/// Continuity diagnostics of one band: the displacement bound and the
/// measured maximum.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ContinuityCheck {
    /// `5 pi / q + 2 pi / q^2`, radians.
    pub bound: f64,
    /// Measured `max |theta(g z) - theta(z) - 2 pi alpha|`, radians.
    pub measured: f64,
}

/// Per-band summary used by reports.
#[derive(Debug, Clone, Serialize)]
pub struct BandReport {
    pub p: u64,
    pub q: u64,
    pub gap: f64,
    pub r_in: f64,
    pub r_out: f64,
    pub mfa: f64,
    pub continuity_bound: f64,
    pub continuity_measured: f64,
}

/// The assembled homeomorphism.
#[derive(Debug, Clone)]
pub struct GMap {
    alpha: f64,
    approximants: Vec<Approximant>,
    bands: Vec<BandSpec>,
    folds: Vec<FoldMap>,
}

impl GMap {
    /// Builds `g` with the first `levels` retained approximants of `alpha`.
    pub fn build(alpha: &Alpha, levels: usize) -> Result<GMap> {
        if levels == 0 {
            return Err(Error::InvalidArgument(
                "levels must be >= 1 (use pure_rotation for the bandless map)".into(),
            ));
        }
        let approximants = dirichlet_approximants(alpha, levels)?;
        let mut bands = Vec::with_capacity(levels);
        let mut folds = Vec::with_capacity(levels);
        for (i, a) in approximants.iter().enumerate() {
            bands.push(BandSpec::level(i as u32 + 1)?);
            folds.push(FoldMap::build(a.p, a.q)?);
        }
        Ok(GMap {
            alpha: alpha.value(),
            approximants,
            bands,
            folds,
        })
    }

    /// The degenerate bandless map: the rigid rotation `R_alpha` everywhere.
    pub fn pure_rotation(alpha: f64) -> GMap {
        GMap {
            alpha,
            approximants: Vec::new(),
            bands: Vec::new(),
            folds: Vec::new(),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn levels(&self) -> usize {
        self.bands.len()
    }

    pub fn bands(&self) -> &[BandSpec] {
        &self.bands
    }

    pub fn approximants(&self) -> &[Approximant] {
        &self.approximants
    }

    pub fn fold(&self, level: usize) -> &FoldMap {
        &self.folds[level - 1]
    }

    fn band_index(&self, r: f64) -> Option<usize> {
        self.bands.iter().position(|b| b.contains_r(r))
    }

    /// The lift of `g^k` (collapsed: inside band `n` the k-th power is the
    /// fold conjugate of the rotation by `k alpha`).
    pub fn power_strip(&self, z: StripPoint, k: i64) -> Result<StripPoint> {
        self.power_rot(z, k as f64 * self.alpha)
    }

    /// As [`GMap::power_strip`], with the rotation `k alpha` computed exactly
    /// modulo one turn; the returned lift may differ from the canonical one
    /// by an integer, which is irrelevant for positions on a circle.
    pub fn power_strip_mod1(&self, z: StripPoint, k: i64) -> Result<StripPoint> {
        self.power_rot(
            z,
            crate::point::rotation_steps_mod1(self.alpha.rem_euclid(1.0), k),
        )
    }

    fn power_rot(&self, z: StripPoint, rot: f64) -> Result<StripPoint> {
        match self.band_index(z.y) {
            None => Ok(StripPoint::new(z.x + rot, z.y)),
            Some(i) => {
                let band = &self.bands[i];
                let fold = &self.folds[i];
                let w = fold.eval_strip_inv(StripPoint::new(z.x, band.squeeze_y(z.y)))?;
                let img = fold.eval_strip(StripPoint::new(w.x + rot, w.y))?;
                Ok(StripPoint::new(img.x, band.unsqueeze_y(img.y)))
            }
        }
    }

    /// The lift of `g`.
    pub fn forward_strip(&self, z: StripPoint) -> Result<StripPoint> {
        self.power_strip(z, 1)
    }

    /// The lift of `g^{-1}`.
    pub fn inverse_strip(&self, z: StripPoint) -> Result<StripPoint> {
        self.power_strip(z, -1)
    }

    /// `g` on the annulus.
    pub fn forward(&self, z: AnnulusPoint) -> Result<AnnulusPoint> {
        cover_project(self.forward_strip(cover_lift(z, 0.0))?)
    }

    /// `g^{-1}` on the annulus.
    pub fn inverse(&self, z: AnnulusPoint) -> Result<AnnulusPoint> {
        cover_project(self.inverse_strip(cover_lift(z, 0.0))?)
    }

    /// The member of the invariant circle family through `z`.
    ///
    /// Outside every band this is the round circle through `z`; inside band
    /// `n` it is the unsqueezed image under `H_n` of the round circle through
    /// the conjugated preimage.
    pub fn invariant_circle_through(
        &self,
        z: AnnulusPoint,
        n_samples: usize,
    ) -> Result<CurveSample> {
        match self.band_index(z.r()) {
            None => {
                if n_samples < 16 {
                    return Err(Error::InvalidArgument("need at least 16 samples".into()));
                }
                CurveSample::circle(z.r(), n_samples)
            }
            Some(i) => {
                let band = self.bands[i];
                let fold = &self.folds[i];
                let lifted = cover_lift(z, 0.0);
                let w = fold.eval_strip_inv(StripPoint::new(lifted.x, band.squeeze_y(lifted.y)))?;
                let rho = w.y;
                let squeezed = fold.circle_image(rho, n_samples)?;
                squeezed.map_points(|p| Ok(StripPoint::new(p.x, band.unsqueeze_y(p.y))))
            }
        }
    }

    /// The unsqueezed image of the mid circle of band `level`: the circle
    /// with the largest designed fold.
    pub fn witness_circle(&self, level: usize, n_samples: usize) -> Result<CurveSample> {
        self.check_level(level)?;
        let band = self.bands[level - 1];
        let squeezed = self.folds[level - 1].circle_image(1.5, n_samples)?;
        squeezed.map_points(|p| Ok(StripPoint::new(p.x, band.unsqueeze_y(p.y))))
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level == 0 || level > self.levels() {
            return Err(Error::InvalidArgument(format!(
                "level {level} outside 1..={}",
                self.levels()
            )));
        }
        Ok(())
    }

    /// Maximal deviation of the angular displacement from `2 pi alpha` over a
    /// grid in band `level`, against the decaying bound `5 pi/q + 2 pi/q^2`.
    pub fn continuity_modulus(&self, level: usize, n_samples: usize) -> Result<ContinuityCheck> {
        self.check_level(level)?;
        let band = self.bands[level - 1];
        let q = self.approximants[level - 1].q as f64;
        let bound = 5.0 * std::f64::consts::PI / q + std::f64::consts::TAU / (q * q);

        let rows = 8usize;
        let cols = n_samples.div_ceil(rows).max(1);
        let mut measured = 0.0f64;
        for j in 0..rows {
            let y = band.r_in + (j as f64 + 0.5) / rows as f64 * (band.r_out - band.r_in);
            for i in 0..cols {
                let x = i as f64 / cols as f64;
                let z = StripPoint::new(x, y);
                let img = self.forward_strip(z)?;
                let displacement = std::f64::consts::TAU * (img.x - z.x);
                let dev = (displacement - std::f64::consts::TAU * self.alpha).abs();
                if dev > measured {
                    measured = dev;
                }
            }
        }
        Ok(ContinuityCheck { bound, measured })
    }

    /// Assembles the report row for one band.
    pub fn band_report(&self, level: usize, n_samples: usize) -> Result<BandReport> {
        self.check_level(level)?;
        let a = self.approximants[level - 1];
        let band = self.bands[level - 1];
        let witness = self.witness_circle(level, n_samples.max(16 * a.q as usize))?;
        let mfa = drawdown_mfa(&witness)?;
        let cont = self.continuity_modulus(level, 4096)?;
        Ok(BandReport {
            p: a.p,
            q: a.q,
            gap: a.gap,
            r_in: band.r_in,
            r_out: band.r_out,
            mfa,
            continuity_bound: cont.bound,
            continuity_measured: cont.measured,
        })
    }
}
