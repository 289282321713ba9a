//! The periodic folding homeomorphism `H` for a coprime pair `p/q`, `q > 6`.
//!
//! `H` is piecewise affine on the strip. Its fundamental domain, the column
//! `B0 = [0, 1/q] x [1, 2]`, maps onto the sheared quadrilateral `B0'` with
//! vertices `z0 = (0,1)`, `z1 = (1,2)`, `z2 = (1+1/q, 2)`, `z3 = (1/q, 1)`.
//! The mid-height segment of `B0` maps onto the two-segment fold through
//! `w1 = (1/2, 3/2)`, `w2 = (3/4 + 1/(2q), 7/4)`, `w3 = w1 + 1/q`, with the
//! midpoint of the segment landing on `w2`. The interior is filled by two
//! triangle fans centred at the fold tip `w2`, and the whole map extends to
//! the strip by `H(z + n/q) = H(z) + n/q`.
//!
//! Everything geometric is validated at build time: orientation of every
//! affine piece, exact tiling of both sides, and the `1/q` edge gluing.

use std::f64::consts::TAU;

use rand::Rng;

use crate::curve::CurveSample;
use crate::error::{Error, Result};
use crate::metrics::count_self_intersections;
use crate::point::{
    annulus_dist, circle_dist, cover_lift, cover_project, AnnulusPoint, StripPoint,
};

/// Barycentric slack for point location in a triangle.
const LOCATE_TOL: f64 = 1e-12;

/// Fallback slack when the strict pass misses due to rounding at edges.
const LOCATE_FALLBACK_TOL: f64 = 1e-9;

/// Largest accepted denominator; beyond this the fold geometry approaches
/// f64 resolution.
const MAX_Q: u64 = 100_000;

#[derive(Debug, Clone, Copy)]
pub struct FoldSpec {
    p: u64,
    q: u64,
    pub z0: StripPoint,
    pub z1: StripPoint,
    pub z2: StripPoint,
    pub z3: StripPoint,
    pub w1: StripPoint,
    pub w2: StripPoint,
    pub w3: StripPoint,
}

impl FoldSpec {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidFoldSpec("p must be positive".into()));
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidFoldSpec(format!(
                "p,q must be coprime, got ({p}, {q})"
            )));
        }
        if q <= 6 {
            return Err(Error::InvalidFoldSpec(format!("q must exceed 6, got {q}")));
        }
        if q > MAX_Q {
            return Err(Error::InvalidFoldSpec(format!(
                "q = {q} exceeds the geometric resolution cap {MAX_Q}"
            )));
        }
        let qf = q as f64;
        Ok(Self {
            p,
            q,
            z0: StripPoint::new(0.0, 1.0),
            z1: StripPoint::new(1.0, 2.0),
            z2: StripPoint::new(1.0 + 1.0 / qf, 2.0),
            z3: StripPoint::new(1.0 / qf, 1.0),
            w1: StripPoint::new(0.5, 1.5),
            w2: StripPoint::new(0.75 + 0.5 / qf, 1.75),
            w3: StripPoint::new(0.5 + 1.0 / qf, 1.5),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The rotation fraction `p/q` in turns.
    pub fn rotation(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Copy)]
struct Affine {
    a: [[f64; 2]; 2],
    b: [f64; 2],
}

impl Affine {
    fn between(src: &[StripPoint; 3], dst: &[StripPoint; 3]) -> Affine {
        let (sx1, sy1) = (src[1].x - src[0].x, src[1].y - src[0].y);
        let (sx2, sy2) = (src[2].x - src[0].x, src[2].y - src[0].y);
        let (dx1, dy1) = (dst[1].x - dst[0].x, dst[1].y - dst[0].y);
        let (dx2, dy2) = (dst[2].x - dst[0].x, dst[2].y - dst[0].y);
        let det = sx1 * sy2 - sx2 * sy1;
        // A = D * S^{-1}
        let a = [
            [(dx1 * sy2 - dx2 * sy1) / det, (dx2 * sx1 - dx1 * sx2) / det],
            [(dy1 * sy2 - dy2 * sy1) / det, (dy2 * sx1 - dy1 * sx2) / det],
        ];
        let b = [
            dst[0].x - a[0][0] * src[0].x - a[0][1] * src[0].y,
            dst[0].y - a[1][0] * src[0].x - a[1][1] * src[0].y,
        ];
        Affine { a, b }
    }

    fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.a[0][0] * x + self.a[0][1] * y + self.b[0],
            self.a[1][0] * x + self.a[1][1] * y + self.b[1],
        )
    }
}

#[derive(Debug, Clone, Copy)]
struct TrianglePair {
    src: [StripPoint; 3],
    dst: [StripPoint; 3],
    fwd: Affine,
    inv: Affine,
}

impl TrianglePair {
    fn new(src: [StripPoint; 3], dst: [StripPoint; 3]) -> TrianglePair {
        TrianglePair {
            src,
            dst,
            fwd: Affine::between(&src, &dst),
            inv: Affine::between(&dst, &src),
        }
    }
}

fn signed_area(t: &[StripPoint; 3]) -> f64 {
    0.5 * ((t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[1].y - t[0].y) * (t[2].x - t[0].x))
}

/// Barycentric coordinates of `(x, y)` in triangle `t`.
fn barycentric(t: &[StripPoint; 3], x: f64, y: f64) -> (f64, f64, f64) {
    let d = (t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[1].y - t[0].y) * (t[2].x - t[0].x);
    let l1 = ((x - t[0].x) * (t[2].y - t[0].y) - (y - t[0].y) * (t[2].x - t[0].x)) / d;
    let l2 = ((t[1].x - t[0].x) * (y - t[0].y) - (t[1].y - t[0].y) * (x - t[0].x)) / d;
    (1.0 - l1 - l2, l1, l2)
}

fn min_bary(t: &[StripPoint; 3], x: f64, y: f64) -> f64 {
    let (l0, l1, l2) = barycentric(t, x, y);
    l0.min(l1).min(l2)
}

/// Area of the intersection of two triangles (Sutherland-Hodgman clip).
fn triangle_overlap_area(a: &[StripPoint; 3], b: &[StripPoint; 3]) -> f64 {
    let mut poly: Vec<(f64, f64)> = a.iter().map(|p| (p.x, p.y)).collect();
    for i in 0..3 {
        let (px, py) = (b[i].x, b[i].y);
        let j = (i + 1) % 3;
        let (qx, qy) = (b[j].x, b[j].y);
        let inside = |x: f64, y: f64| (qx - px) * (y - py) - (qy - py) * (x - px) >= 0.0;
        let mut next = Vec::with_capacity(poly.len() + 2);
        for k in 0..poly.len() {
            let cur = poly[k];
            let prev = poly[(k + poly.len() - 1) % poly.len()];
            let cur_in = inside(cur.0, cur.1);
            let prev_in = inside(prev.0, prev.1);
            if cur_in != prev_in {
                let denom = (qx - px) * (cur.1 - prev.1) - (qy - py) * (cur.0 - prev.0);
                if denom.abs() > 0.0 {
                    let t = -((qx - px) * (prev.1 - py) - (qy - py) * (prev.0 - px)) / denom;
                    next.push((prev.0 + t * (cur.0 - prev.0), prev.1 + t * (cur.1 - prev.1)));
                }
            }
            if cur_in {
                next.push(cur);
            }
        }
        poly = next;
        if poly.is_empty() {
            return 0.0;
        }
    }
    let mut area = 0.0;
    for k in 0..poly.len() {
        let (x0, y0) = poly[k];
        let (x1, y1) = poly[(k + 1) % poly.len()];
        area += x0 * y1 - x1 * y0;
    }
    0.5 * area.abs()
}

/// The folding homeomorphism, stored as its fundamental-domain triangulation.
#[derive(Debug, Clone)]
pub struct FoldMap {
    spec: FoldSpec,
    tris: Vec<TrianglePair>,
    inv_q: f64,
}

impl FoldMap {
    /// Builds and validates the fold map for the coprime pair `(p, q)`.
    pub fn build(p: u64, q: u64) -> Result<FoldMap> {
        let spec = FoldSpec::new(p, q)?;
        let qf = q as f64;
        let inv_q = 1.0 / qf;
        let half = 0.5 * inv_q;

        // Source key vertices of the column B0.
        let a0 = StripPoint::new(0.0, 1.0);
        let a1 = StripPoint::new(inv_q, 1.0);
        let mid = StripPoint::new(half, 1.5);
        let left = StripPoint::new(0.0, 1.5);
        let right = StripPoint::new(inv_q, 1.5);
        let t0 = StripPoint::new(0.0, 2.0);
        let t1 = StripPoint::new(inv_q, 2.0);

        let FoldSpec {
            z0,
            z1,
            z2,
            z3,
            w1,
            w2,
            w3,
            ..
        } = spec;

        // Two fans from the fold tip: the lower pentagon (z0 z3 w3 w2 w1) and
        // the upper pentagon (w1 w2 w3 z2 z1).
        let tris = vec![
            TrianglePair::new([mid, left, a0], [w2, w1, z0]),
            TrianglePair::new([mid, a0, a1], [w2, z0, z3]),
            TrianglePair::new([mid, a1, right], [w2, z3, w3]),
            TrianglePair::new([mid, right, t1], [w2, w3, z2]),
            TrianglePair::new([mid, t1, t0], [w2, z2, z1]),
            TrianglePair::new([mid, t0, left], [w2, z1, w1]),
        ];

        let map = FoldMap { spec, tris, inv_q };
        map.validate()?;
        Ok(map)
    }

    pub fn spec(&self) -> &FoldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn q(&self) -> u64 {
        self.spec.q
    }

    pub fn triangle_count(&self) -> usize {
        self.tris.len()
    }

    /// The coarse angular Lipschitz bound `5q`.
    pub fn lipschitz_bound(&self) -> f64 {
        5.0 * self.spec.q as f64
    }

    /// The sharper intermediate bound `2q sqrt(1 + (1 + 1/q)^2)`.
    pub fn lipschitz_bound_sharp(&self) -> f64 {
        let qf = self.spec.q as f64;
        2.0 * qf * (1.0 + (1.0 + 1.0 / qf) * (1.0 + 1.0 / qf)).sqrt()
    }

    /// Exact drawdown of the folded circle: `2 pi (1/4 - 1/(2q))` radians.
    pub fn mfa_value(&self) -> f64 {
        TAU * (0.25 - 0.5 / self.spec.q as f64)
    }

    fn validate(&self) -> Result<()> {
        let q = self.spec.q as f64;
        let cell = 1.0 / q;
        let mut src_area = 0.0;
        let mut dst_area = 0.0;
        for (i, t) in self.tris.iter().enumerate() {
            let sa = signed_area(&t.src);
            let da = signed_area(&t.dst);
            if sa <= 0.0 || da <= 0.0 {
                return Err(Error::FoldConstruction(format!(
                    "triangle {i} not positively oriented (areas {sa:.3e}, {da:.3e})"
                )));
            }
            src_area += sa;
            dst_area += da;
        }
        if (src_area - cell).abs() > 1e-12 * cell.max(1.0) {
            return Err(Error::FoldConstruction(format!(
                "source tiles cover area {src_area}, expected {cell}"
            )));
        }
        if (dst_area - cell).abs() > 1e-12 * cell.max(1.0) {
            return Err(Error::FoldConstruction(format!(
                "target tiles cover area {dst_area}, expected {cell}"
            )));
        }
        for i in 0..self.tris.len() {
            for j in i + 1..self.tris.len() {
                let s = triangle_overlap_area(&self.tris[i].src, &self.tris[j].src);
                let d = triangle_overlap_area(&self.tris[i].dst, &self.tris[j].dst);
                if s > 1e-12 * cell || d > 1e-12 * cell {
                    return Err(Error::FoldConstruction(format!(
                        "triangles {i} and {j} overlap (areas {s:.3e}, {d:.3e})"
                    )));
                }
            }
        }
        // Fold tip strictly inside B0', elbows on the side edges.
        let spec = &self.spec;
        let on_segment = |a: StripPoint, b: StripPoint, p: StripPoint| -> bool {
            let cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            cross.abs() < 1e-12 && p.x >= a.x.min(b.x) - 1e-12 && p.x <= a.x.max(b.x) + 1e-12
        };
        if !on_segment(spec.z0, spec.z1, spec.w1) || !on_segment(spec.z3, spec.z2, spec.w3) {
            return Err(Error::FoldConstruction(
                "fold elbows are not on the side edges".into(),
            ));
        }
        let inside_shear =
            spec.w2.x - (spec.w2.y - 1.0) > 1e-9 && spec.w2.x - (spec.w2.y - 1.0) < cell - 1e-9;
        if !inside_shear || spec.w2.y <= 1.0 || spec.w2.y >= 2.0 {
            return Err(Error::FoldConstruction(
                "fold tip is not strictly inside the target cell".into(),
            ));
        }
        // Edge gluing: the right edge map equals the left edge map shifted by 1/q.
        for k in 0..=64 {
            let y = 1.0 + k as f64 / 64.0;
            let (lx, ly) = self.locate_apply_src(0.0, y)?;
            let (rx, ry) = self.locate_apply_src(self.inv_q, y)?;
            if (rx - lx - self.inv_q).abs() > 1e-12 || (ry - ly).abs() > 1e-12 {
                return Err(Error::FoldConstruction(format!(
                    "edge gluing violated at height {y}"
                )));
            }
        }
        Ok(())
    }

    fn locate(
        &self,
        x: f64,
        y: f64,
        pick: impl Fn(&TrianglePair) -> &[StripPoint; 3],
    ) -> Result<usize> {
        for (i, t) in self.tris.iter().enumerate() {
            if min_bary(pick(t), x, y) >= -LOCATE_TOL {
                return Ok(i);
            }
        }
        let mut best = (f64::NEG_INFINITY, 0usize);
        for (i, t) in self.tris.iter().enumerate() {
            let m = min_bary(pick(t), x, y);
            if m > best.0 {
                best = (m, i);
            }
        }
        if best.0 >= -LOCATE_FALLBACK_TOL {
            Ok(best.1)
        } else {
            Err(Error::PointLocation { x, y })
        }
    }

    fn locate_apply_src(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        let i = self.locate(x, y, |t| &t.src)?;
        Ok(self.tris[i].fwd.apply(x, y))
    }

    fn locate_apply_dst(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        let i = self.locate(x, y, |t| &t.dst)?;
        Ok(self.tris[i].inv.apply(x, y))
    }

    /// The lift of `H`: evaluates the strip homeomorphism at any `x`.
    pub fn eval_strip(&self, z: StripPoint) -> Result<StripPoint> {
        let turn = z.x.floor();
        let frac = z.x - turn;
        let mut n = (frac * self.spec.q as f64).floor();
        let mut x0 = frac - n * self.inv_q;
        if x0 < 0.0 {
            n -= 1.0;
            x0 += self.inv_q;
        } else if x0 >= self.inv_q {
            n += 1.0;
            x0 -= self.inv_q;
        }
        let (ix, iy) = self.locate_apply_src(x0, z.y)?;
        Ok(StripPoint::new(ix + n * self.inv_q + turn, clamp_strip(iy)))
    }

    /// The lift of `H^{-1}`.
    pub fn eval_strip_inv(&self, z: StripPoint) -> Result<StripPoint> {
        let turn = z.x.floor();
        let frac = z.x - turn;
        // At height y the target cell translate containing x starts at
        // (y - 1) + n/q.
        let n = ((frac - (z.y - 1.0)) * self.spec.q as f64).floor();
        for dn in [0.0, -1.0, 1.0] {
            let shift = (n + dn) * self.inv_q;
            let x0 = frac - shift;
            if let Ok((ix, iy)) = self.locate_apply_dst(x0, z.y) {
                return Ok(StripPoint::new(ix + shift + turn, clamp_strip(iy)));
            }
        }
        Err(Error::PointLocation { x: z.x, y: z.y })
    }

    /// `H` on the annulus.
    pub fn eval(&self, z: AnnulusPoint) -> Result<AnnulusPoint> {
        cover_project(self.eval_strip(cover_lift(z, 0.0))?)
    }

    /// `H^{-1}` on the annulus.
    pub fn eval_inv(&self, z: AnnulusPoint) -> Result<AnnulusPoint> {
        cover_project(self.eval_strip_inv(cover_lift(z, 0.0))?)
    }

    /// Sup over a deterministic grid of the distance between
    /// `H R_{p/q} H^{-1}` and `R_{p/q}`.
    pub fn commutation_residual(&self, n_theta: usize, n_r: usize) -> Result<f64> {
        let rot = self.spec.rotation();
        let mut worst = 0.0f64;
        for i in 0..n_theta {
            let x = i as f64 / n_theta as f64;
            for j in 0..n_r {
                let y = 1.0 + j as f64 / (n_r - 1) as f64;
                let z = StripPoint::new(x, y);
                let w = self.eval_strip_inv(z)?;
                let w = StripPoint::new(w.x + rot, w.y);
                let img = self.eval_strip(w)?;
                let reference = StripPoint::new(x + rot, y);
                let d = annulus_dist(cover_project(img)?, cover_project(reference)?);
                if d > worst {
                    worst = d;
                }
            }
        }
        Ok(worst)
    }

    /// Largest observed ratio of image to source angular distance over
    /// same-radius pairs, scanned across radii and gap scales down to 1e-6 rad.
    pub fn angular_lipschitz_ratio(&self, n_pairs: usize, rng: &mut impl Rng) -> Result<f64> {
        if n_pairs == 0 {
            return Err(Error::InvalidArgument("n_pairs must be >= 1".into()));
        }
        let radii = [1.0, 1.25, 1.5 - 1e-7, 1.5, 1.5 + 1e-7, 1.75, 2.0];
        let mut worst = 0.0f64;
        for k in 0..n_pairs {
            let y = if k % 3 == 0 {
                radii[k / 3 % radii.len()]
            } else {
                rng.gen_range(1.0..=2.0)
            };
            let exponent = rng.gen_range(-6.0..0.45);
            let gap_rad: f64 = 10.0f64.powf(exponent); // up to ~2.8 rad
            let x1 = rng.gen_range(0.0..1.0);
            let x2 = x1 + gap_rad / TAU;
            let i1 = self.eval_strip(StripPoint::new(x1, y))?;
            let i2 = self.eval_strip(StripPoint::new(x2, y))?;
            let num = circle_dist(TAU * i1.x, TAU * i2.x);
            let den = circle_dist(TAU * x1, TAU * x2);
            if den == 0.0 {
                continue;
            }
            let ratio = num / den;
            if ratio > worst {
                worst = ratio;
            }
        }
        Ok(worst)
    }

    /// Angular distance between `H R_alpha H^{-1}(z)` and `R_{p/q}(z)`.
    pub fn conjugated_rotation_gap(&self, alpha: f64, z: AnnulusPoint) -> Result<f64> {
        let lifted = cover_lift(z, 0.0);
        let w = self.eval_strip_inv(lifted)?;
        let img = self.eval_strip(StripPoint::new(w.x + alpha, w.y))?;
        let reference = z.theta() + TAU * self.spec.rotation();
        Ok(circle_dist(TAU * img.x, reference))
    }

    /// X-offsets (within `[0, 1/q]`) where the horizontal line at height
    /// `rho` crosses a source triangle edge.
    fn breakpoints_at_height(&self, rho: f64) -> Vec<f64> {
        let mut xs = vec![0.0];
        for t in &self.tris {
            for e in 0..3 {
                let a = t.src[e];
                let b = t.src[(e + 1) % 3];
                if (a.y - rho).abs() == 0.0 {
                    xs.push(a.x);
                }
                if (a.y - rho) * (b.y - rho) < 0.0 {
                    let s = (rho - a.y) / (b.y - a.y);
                    xs.push(a.x + s * (b.x - a.x));
                }
            }
        }
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
        xs
    }

    /// Image of the circle at radius `rho` under `H`, as a lifted polyline.
    ///
    /// The sample grid contains the exact fold breakpoints, so piecewise
    /// linear features (and the drawdown) are captured exactly.
    pub fn circle_image(&self, rho: f64, n_samples: usize) -> Result<CurveSample> {
        if !(1.0..=2.0).contains(&rho) {
            return Err(Error::OutsideAnnulus { r: rho });
        }
        let q = self.spec.q;
        if n_samples < 16 * q as usize {
            return Err(Error::InvalidArgument(format!(
                "need at least 16q = {} samples, got {n_samples}",
                16 * q
            )));
        }
        let mut xs: Vec<f64> = (0..n_samples)
            .map(|k| k as f64 / n_samples as f64)
            .collect();
        for j in 0..q {
            let base = j as f64 * self.inv_q;
            for &bp in &self.breakpoints_at_height(rho) {
                xs.push(base + bp);
            }
        }
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
        xs.retain(|&x| x < 1.0 - 1e-14);

        let mut pts = Vec::with_capacity(xs.len() + 1);
        for &x in &xs {
            pts.push(self.eval_strip(StripPoint::new(x, rho))?);
        }
        let first = pts[0];
        pts.push(StripPoint::new(first.x + 1.0, first.y));
        CurveSample::new(pts, true, 1)
    }

    /// Image of the mid circle `C_{3/2}`: the designed folding witness.
    pub fn folded_circle(&self, n_samples: usize) -> Result<CurveSample> {
        self.circle_image(1.5, n_samples)
    }

    /// Validation summary used by reports: commutation, Lipschitz scan,
    /// drawdown against its bound, and simplicity of the folded circle.
    pub fn validation_report(&self, rng: &mut impl Rng) -> Result<FoldReport> {
        let commutation_residual = self.commutation_residual(256, 64)?;
        let lipschitz_ratio = self.angular_lipschitz_ratio(20_000, rng)?;
        let gamma = self.folded_circle(16 * self.spec.q as usize)?;
        let mfa = crate::metrics::drawdown_mfa(&gamma)?;
        let simple = count_self_intersections(&gamma)? == 0;
        Ok(FoldReport {
            p: self.spec.p,
            q: self.spec.q,
            commutation_residual,
            lipschitz_ratio,
            lipschitz_bound: self.lipschitz_bound(),
            lipschitz_bound_sharp: self.lipschitz_bound_sharp(),
            mfa,
            mfa_bound: std::f64::consts::PI / 3.0,
            simple,
        })
    }
}

fn clamp_strip(y: f64) -> f64 {
    y.clamp(1.0, 2.0)
}

/// Measured properties of a fold map.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FoldReport {
    pub p: u64,
    pub q: u64,
    pub commutation_residual: f64,
    pub lipschitz_ratio: f64,
    pub lipschitz_bound: f64,
    pub lipschitz_bound_sharp: f64,
    pub mfa: f64,
    pub mfa_bound: f64,
    pub simple: bool,
}
