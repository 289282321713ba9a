//! Rational approximants of an irrational rotation angle.
//!
//! The angle is kept as an exact rational (a parsed decimal string or a
//! continued-fraction coefficient list), so the approximation inequality
//! `|alpha - p/q| < 1/q^2` can be verified by integer cross-multiplication
//! instead of floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rotation angle in `(0, 1)`, stored exactly as `num/den`.
#[derive(Debug, Clone, PartialEq)]
pub struct Alpha {
    num: BigInt,
    den: BigInt,
    value: f64,
}

/// A continued-fraction convergent `p/q` of the angle with `q > 6`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Approximant {
    pub p: u64,
    pub q: u64,
    /// `|alpha - p/q|`, rounded to f64.
    pub gap: f64,
}

/// Decimal digits of the golden mean `(sqrt(5) - 1) / 2`.
pub const GOLDEN_MEAN_DECIMAL: &str = "0.6180339887498948482045868343656381177203091798058";

impl Alpha {
    /// Parses a plain decimal string like `"0.6180339887"`.
    pub fn from_decimal_str(text: &str) -> Result<Alpha> {
        let text = text.trim();
        let bad = |msg: &str| Error::InvalidArgument(format!("alpha {text:?}: {msg}"));
        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        if int_part.is_empty()
            || frac_part.len() > 5000
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad("expected an unsigned decimal number"));
        }
        let digits = format!("{int_part}{frac_part}");
        let num: BigInt = digits
            .parse()
            .map_err(|_| bad("unparseable digit string"))?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        Alpha::from_ratio(num, den)
    }

    /// Builds the angle from continued-fraction coefficients
    /// `[a0; a1, a2, ...]`; `a0` must be 0 for an angle in `(0, 1)`.
    pub fn from_continued_fraction(coeffs: &[u64]) -> Result<Alpha> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument(
                "continued fraction needs at least two coefficients".into(),
            ));
        }
        if coeffs[0] != 0 {
            return Err(Error::InvalidArgument(
                "a0 must be 0 for an angle in (0, 1)".into(),
            ));
        }
        if coeffs[1..].contains(&0) {
            return Err(Error::InvalidArgument(
                "continued-fraction coefficients after a0 must be positive".into(),
            ));
        }
        // Evaluate bottom-up: x = a_n, then x -> a + 1/x.
        let mut num = BigInt::from(*coeffs.last().unwrap());
        let mut den = BigInt::one();
        for &a in coeffs[..coeffs.len() - 1].iter().rev() {
            let new_num = BigInt::from(a) * &num + &den;
            den = std::mem::replace(&mut num, new_num);
        }
        Alpha::from_ratio(num, den)
    }

    fn from_ratio(num: BigInt, den: BigInt) -> Result<Alpha> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let num = &num / &g;
        let den = &den / &g;
        if num <= BigInt::zero() || num >= den {
            return Err(Error::InvalidArgument(
                "alpha must lie strictly between 0 and 1".into(),
            ));
        }
        let value = ratio_to_f64(&num, &den);
        Ok(Alpha { num, den, value })
    }

    /// The golden mean, to the precision of [`GOLDEN_MEAN_DECIMAL`].
    pub fn golden_mean() -> Alpha {
        Alpha::from_decimal_str(GOLDEN_MEAN_DECIMAL).expect("constant parses")
    }

    /// f64 approximation of the angle.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Exact check `|alpha - p/q| < 1/q^2` by cross-multiplication:
    /// `|num * q - p * den| * q < den`.
    pub fn dirichlet_holds(&self, p: u64, q: u64) -> bool {
        let q_big = BigInt::from(q);
        let lhs = (&self.num * &q_big - BigInt::from(p) * &self.den).abs() * &q_big;
        lhs < self.den
    }

    /// Exact `|alpha - p/q|` rounded to f64.
    pub fn gap_to(&self, p: u64, q: u64) -> f64 {
        let q_big = BigInt::from(q);
        let num = (&self.num * &q_big - BigInt::from(p) * &self.den).abs();
        let den = &self.den * &q_big;
        ratio_to_f64(&num, &den)
    }
}

/// Rounds `num/den` (both nonnegative, value < ~1) to f64 with full mantissa
/// precision regardless of the operand sizes.
fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let shift = (den.bits() as i64 - num.bits() as i64 + 64).max(0);
    if shift > 1_000 {
        return 0.0; // true value below ~1e-280
    }
    let scaled = (num << (shift as u64)) / den;
    scaled.to_f64().unwrap_or(f64::MAX) * 2f64.powi(-(shift as i32))
}

/// The first `count` continued-fraction convergents `p/q` of `alpha` with
/// `q > 6`, in increasing `q` order.
///
/// Every returned pair is coprime and satisfies `|alpha - p/q| < 1/q^2` with
/// a strictly positive gap; if the continued fraction of the (rational at
/// working precision) input terminates first, the input is rejected.
pub fn dirichlet_approximants(alpha: &Alpha, count: usize) -> Result<Vec<Approximant>> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    let mut approximants = Vec::with_capacity(count);

    // Convergent recurrence seeded for a0 = 0.
    let mut p_prev = BigInt::one();
    let mut q_prev = BigInt::zero();
    let mut p_cur = BigInt::zero();
    let mut q_cur = BigInt::one();
    // Euclidean remainders on (den, num) yield the coefficients a1, a2, ...
    let mut r_prev = alpha.den.clone();
    let mut r_cur = alpha.num.clone();

    while !r_cur.is_zero() {
        let coeff = &r_prev / &r_cur;
        let rem = &r_prev % &r_cur;
        let p_next = &coeff * &p_cur + &p_prev;
        let q_next = &coeff * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
        r_prev = std::mem::replace(&mut r_cur, rem);

        if r_cur.is_zero() {
            // This convergent equals alpha exactly; a zero gap is unusable.
            break;
        }
        if q_cur > BigInt::from(6u32) {
            let p = p_cur
                .to_u64()
                .ok_or_else(|| Error::InvalidArgument("approximant p exceeds u64".into()))?;
            let q = q_cur
                .to_u64()
                .ok_or_else(|| Error::InvalidArgument("approximant q exceeds u64".into()))?;
            debug_assert!(alpha.dirichlet_holds(p, q));
            approximants.push(Approximant {
                p,
                q,
                gap: alpha.gap_to(p, q),
            });
            if approximants.len() == count {
                return Ok(approximants);
            }
        }
    }
    Err(Error::RationalAlpha {
        got: approximants.len(),
        need: count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_mean_convergents() {
        let alpha = Alpha::golden_mean();
        let approx = dirichlet_approximants(&alpha, 3).unwrap();
        let pairs: Vec<(u64, u64)> = approx.iter().map(|a| (a.p, a.q)).collect();
        assert_eq!(pairs, vec![(5, 8), (8, 13), (13, 21)]);
        for a in &approx {
            assert!(alpha.dirichlet_holds(a.p, a.q));
            assert!(a.gap > 0.0 && a.gap < 1.0 / (a.q as f64 * a.q as f64));
            assert_eq!(num_integer::gcd(a.p, a.q), 1);
        }
    }

    #[test]
    fn golden_mean_deep_convergents_are_fibonacci() {
        let alpha = Alpha::golden_mean();
        let approx = dirichlet_approximants(&alpha, 8).unwrap();
        let qs: Vec<u64> = approx.iter().map(|a| a.q).collect();
        assert_eq!(qs, vec![8, 13, 21, 34, 55, 89, 144, 233]);
    }

    #[test]
    fn rational_alpha_rejected() {
        let alpha = Alpha::from_decimal_str("0.5").unwrap();
        assert!(matches!(
            dirichlet_approximants(&alpha, 1),
            Err(Error::RationalAlpha { .. })
        ));
        // 1/7 has q > 6 but is exact, hence still rejected.
        let alpha = Alpha::from_decimal_str("0.142857142857142857142857").unwrap();
        assert!(dirichlet_approximants(&alpha, 6).is_err());
    }

    #[test]
    fn continued_fraction_input() {
        // [0; 1, 1, 1, ...] is the golden mean.
        let mut coeffs = vec![0u64];
        coeffs.extend(std::iter::repeat_n(1, 40));
        let alpha = Alpha::from_continued_fraction(&coeffs).unwrap();
        assert!((alpha.value() - Alpha::golden_mean().value()).abs() < 1e-15);
        let approx = dirichlet_approximants(&alpha, 3).unwrap();
        assert_eq!(
            approx.iter().map(|a| (a.p, a.q)).collect::<Vec<_>>(),
            vec![(5, 8), (8, 13), (13, 21)]
        );
    }

    #[test]
    fn cf_input_validation() {
        assert!(Alpha::from_continued_fraction(&[0]).is_err());
        assert!(Alpha::from_continued_fraction(&[1, 2]).is_err());
        assert!(Alpha::from_continued_fraction(&[0, 1, 0, 1]).is_err());
        let half = Alpha::from_continued_fraction(&[0, 2]).unwrap();
        assert_eq!(half.value(), 0.5);
    }

    #[test]
    fn decimal_parsing_and_value() {
        let alpha = Alpha::from_decimal_str("0.25").unwrap();
        assert_eq!(alpha.value(), 0.25);
        assert!(Alpha::from_decimal_str("1.5").is_err());
        assert!(Alpha::from_decimal_str("0").is_err());
        assert!(Alpha::from_decimal_str("-0.5").is_err());
        assert!(Alpha::from_decimal_str("abc").is_err());
        let golden = Alpha::golden_mean();
        assert!((golden.value() - 0.618_033_988_749_894_9).abs() < 1e-15);
    }

    #[test]
    fn dirichlet_cross_multiplication_is_sharp() {
        let alpha = Alpha::golden_mean();
        assert!(alpha.dirichlet_holds(5, 8));
        assert!(!alpha.dirichlet_holds(4, 8));
        assert!(!alpha.dirichlet_holds(6, 8));
    }

    #[test]
    fn pi_like_angle_has_large_early_denominator() {
        // frac(pi) = [0; 7, 15, 1, 292, ...]: the q > 6 convergents start
        // 1/7, 15/106, 16/113.
        let alpha = Alpha::from_decimal_str("0.14159265358979323846264338327950288").unwrap();
        let approx = dirichlet_approximants(&alpha, 3).unwrap();
        let pairs: Vec<(u64, u64)> = approx.iter().map(|a| (a.p, a.q)).collect();
        assert_eq!(pairs, vec![(1, 7), (15, 106), (16, 113)]);
    }
}
