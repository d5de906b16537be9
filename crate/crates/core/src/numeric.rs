//! Certified numeric evaluation with fixed-point interval arithmetic.
//!
//! An [`Interval`] stores integer endpoints at a binary scale: the true value
//! lies in `[lo / 2^scale, hi / 2^scale]`. Every operation rounds outward, so
//! enclosures are never lost. No floating point is involved until a caller
//! asks for an `f64` summary.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::element::RadicalElement;
use crate::error::{Error, Result};
use crate::monomial::RadicalMonomial;
use crate::rational::Rational;

/// Working precision used when no other is requested.
pub const DEFAULT_PRECISION: u32 = 256;
/// Precision ceiling for sign refinement.
pub const MAX_SIGN_PRECISION: u32 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        match self.to_i32() * other.to_i32() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    scale: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn floor_shr(a: &BigInt, bits: u32) -> BigInt {
    // `>>` on BigInt rounds toward negative infinity
    a >> bits
}

fn ceil_shr(a: &BigInt, bits: u32) -> BigInt {
    -((-a) >> bits)
}

/// `floor(x^(1/n))` for `x >= 0`, and whether the root is exact.
fn floor_root(x: &BigInt, n: u32) -> (BigInt, bool) {
    let r = x.nth_root(n);
    let exact = r.pow(n) == *x;
    (r, exact)
}

impl Interval {
    pub fn exact(value: BigInt, scale: u32) -> Self {
        Interval { lo: value.clone(), hi: value, scale }
    }

    pub fn zero(scale: u32) -> Self {
        Self::exact(BigInt::zero(), scale)
    }

    pub fn from_rational(q: &Rational, scale: u32) -> Self {
        let n = q.numer() << scale;
        Interval {
            lo: floor_div(&n, q.denom()),
            hi: ceil_div(&n, q.denom()),
            scale,
        }
    }

    /// Enclosure of a radical monomial `N^(1/L)`.
    pub fn monomial(m: &RadicalMonomial, scale: u32) -> Self {
        if m.is_one() {
            return Self::exact(BigInt::one() << scale, scale);
        }
        let (l, n) = m.as_single_root();
        let l = u32::try_from(l).expect("root degree fits u32");
        let x = BigInt::from(n) << (scale as u64 * l as u64);
        let (r, exact) = floor_root(&x, l);
        let hi = if exact { r.clone() } else { &r + 1 };
        Interval { lo: r, hi, scale }
    }

    pub fn lo(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi(&self) -> &BigInt {
        &self.hi
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    /// Sign when the enclosure decides it.
    pub fn sign(&self) -> Option<Sign> {
        if self.is_positive() {
            Some(Sign::Positive)
        } else if self.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    fn align(&self, scale: u32) -> (BigInt, BigInt) {
        if scale >= self.scale {
            let s = scale - self.scale;
            (&self.lo << s, &self.hi << s)
        } else {
            let s = self.scale - scale;
            (floor_shr(&self.lo, s), ceil_shr(&self.hi, s))
        }
    }

    /// Re-expresses the enclosure at another scale, rounding outward.
    pub fn rescale(&self, scale: u32) -> Self {
        let (lo, hi) = self.align(scale);
        Interval { lo, hi, scale }
    }

    /// True when the two enclosures share at least one point.
    pub fn overlaps(&self, other: &Interval) -> bool {
        let s = self.scale.max(other.scale);
        let (a_lo, a_hi) = self.align(s);
        let (b_lo, b_hi) = other.align(s);
        a_lo <= b_hi && b_lo <= a_hi
    }

    /// `hi - lo` in units of `2^-scale`.
    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    /// True when the radius is at most `2^-bits`.
    pub fn radius_within(&self, bits: u32) -> bool {
        // (hi - lo) / 2 <= 2^(scale - bits)
        if bits > self.scale {
            return self.width().is_zero();
        }
        self.width() <= (BigInt::one() << (self.scale - bits + 1))
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let s = self.scale.max(other.scale);
        let (a_lo, a_hi) = self.align(s);
        let (b_lo, b_hi) = other.align(s);
        Interval { lo: a_lo + b_lo, hi: a_hi + b_hi, scale: s }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo, scale: self.scale }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    pub fn mul_rational(&self, q: &Rational) -> Interval {
        let (a, b) = (q.numer(), q.denom());
        let (x, y) = if a.is_negative() { (&self.hi, &self.lo) } else { (&self.lo, &self.hi) };
        Interval {
            lo: floor_div(&(a * x), b),
            hi: ceil_div(&(a * y), b),
            scale: self.scale,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let s = self.scale.max(other.scale);
        let (a_lo, a_hi) = self.align(s);
        let (b_lo, b_hi) = other.align(s);
        let products = [&a_lo * &b_lo, &a_lo * &b_hi, &a_hi * &b_lo, &a_hi * &b_hi];
        let min = products.iter().min().expect("nonempty");
        let max = products.iter().max().expect("nonempty");
        Interval { lo: floor_shr(min, s), hi: ceil_shr(max, s), scale: s }
    }

    pub fn pow(&self, n: u32) -> Interval {
        let mut acc = Interval::exact(BigInt::one() << self.scale, self.scale);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        if n % 2 == 0 && acc.lo.is_negative() {
            acc.lo = BigInt::zero();
        }
        acc
    }

    /// Enclosure of the principal real `n`-th root.
    pub fn nth_root(&self, n: u32) -> Result<Interval> {
        if n == 0 {
            return Err(Error::Domain("root degree must be at least 1".into()));
        }
        if n % 2 == 0 && self.lo.is_negative() {
            if self.hi.is_negative() {
                return Err(Error::Branch("even root of a negative enclosure".into()));
            }
            // cannot decide the branch at this precision; the root of the
            // non-negative part is still a valid enclosure
        }
        let shift = self.scale as u64 * (n as u64 - 1);
        let root = |x: &BigInt, up: bool| -> BigInt {
            if n % 2 == 0 && x.is_negative() {
                return BigInt::zero();
            }
            let mag = x.abs() << shift;
            let (r, exact) = floor_root(&mag, n);
            // outward rounding: magnitude rounds up for the upper end of a
            // positive value and for the lower end of a negative one
            let round_up_mag = up != x.is_negative();
            let r = if round_up_mag && !exact { r + 1 } else { r };
            if x.is_negative() {
                -r
            } else {
                r
            }
        };
        Ok(Interval {
            lo: root(&self.lo, false),
            hi: root(&self.hi, true),
            scale: self.scale,
        })
    }

    /// Midpoint rounded to the nearest `f64`.
    pub fn midpoint_f64(&self) -> f64 {
        let sum = &self.lo + &self.hi;
        let total_shift = self.scale as i64 + 1;
        let bits = sum.bits() as i64;
        // keep about 64 significant bits before converting
        let drop = (bits - 64).max(0);
        let mantissa = (&sum >> drop as u32).to_f64().unwrap_or(f64::NAN);
        let exp = drop - total_shift;
        mantissa * pow2(exp)
    }

    /// Radius as an `f64` upper estimate.
    pub fn radius_f64(&self) -> f64 {
        let w = self.width();
        let bits = w.bits() as i64;
        let drop = (bits - 64).max(0);
        let mantissa = ((&w >> drop as u32) + 1u32).to_f64().unwrap_or(f64::INFINITY);
        mantissa * pow2(drop - self.scale as i64 - 1)
    }

    /// Decimal rendering of the midpoint with `digits` digits after the point.
    pub fn to_decimal(&self, digits: u32) -> String {
        let sum = &self.lo + &self.hi;
        let scaled = sum * BigInt::from(10u32).pow(digits);
        let denom = BigInt::one() << (self.scale + 1);
        // round half away from zero
        let q: BigInt = (scaled.abs() * 2 + &denom) / (denom * 2);
        let neg = scaled.is_negative() && !q.is_zero();
        let s = q.to_str_radix(10);
        let body = if digits == 0 {
            s
        } else {
            let d = digits as usize;
            let padded = if s.len() <= d { format!("{}{}", "0".repeat(d + 1 - s.len()), s) } else { s };
            let (int_part, frac_part) = padded.split_at(padded.len() - d);
            format!("{int_part}.{frac_part}")
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn pow2(exp: i64) -> f64 {
    let mut v = 1.0f64;
    let step = if exp >= 0 { 2.0 } else { 0.5 };
    for _ in 0..exp.unsigned_abs().min(2200) {
        v *= step;
    }
    v
}

fn guard_bits(a: &RadicalElement) -> u32 {
    // each term contributes at most |c| + 2 units of rounding width
    let mut total = BigInt::zero();
    for (_, c) in a.terms() {
        total += c.abs().ceil().to_integer() + 2;
    }
    total.bits() as u32 + 2
}

/// Certified enclosure of `a` whose radius is at most `2^-precision_bits`.
///
/// Precisions below 32 bits are raised to 32.
pub fn eval_numeric(a: &RadicalElement, precision_bits: u32) -> Interval {
    let precision_bits = precision_bits.max(32);
    let scale = precision_bits + guard_bits(a);
    let mut acc = Interval::zero(scale);
    for (m, c) in a.terms() {
        let term = Interval::monomial(m, scale).mul_rational(c);
        acc = acc.add(&term);
    }
    acc
}

/// Exact sign: zero is decided structurally, nonzero values by refining the
/// enclosure until it excludes zero.
pub fn sign(a: &RadicalElement) -> Result<Sign> {
    sign_with_cap(a, MAX_SIGN_PRECISION)
}

pub fn sign_with_cap(a: &RadicalElement, max_precision: u32) -> Result<Sign> {
    if a.is_zero() {
        return Ok(Sign::Zero);
    }
    if let Some(q) = a.as_rational() {
        return Ok(if q.is_positive() { Sign::Positive } else { Sign::Negative });
    }
    let mut prec = 64u32;
    loop {
        let iv = eval_numeric(a, prec);
        if iv.is_positive() {
            return Ok(Sign::Positive);
        }
        if iv.is_negative() {
            return Ok(Sign::Negative);
        }
        if prec >= max_precision {
            return Err(Error::Resource(format!(
                "sign undecided at {prec} bits of precision"
            )));
        }
        prec = prec.saturating_mul(2).min(max_precision);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::normalize_radical;
    use crate::rational::{int, ratio};

    fn surd(q: Rational, n: u32) -> RadicalElement {
        normalize_radical(&q, n).unwrap()
    }

    #[test]
    fn cube_root_of_two() {
        let iv = eval_numeric(&surd(int(2), 3), 64);
        assert!(iv.radius_within(64));
        assert_eq!(iv.to_decimal(16), "1.2599210498948732");
        assert!((iv.midpoint_f64() - 1.2599210498948732).abs() < 1e-15);
    }

    #[test]
    fn ramanujan_rhs_value() {
        let s = surd(ratio(1, 9), 3) - surd(ratio(2, 9), 3) + surd(ratio(4, 9), 3);
        let iv = eval_numeric(&s, 64);
        assert!(iv.to_decimal(4).starts_with("0.638"));
    }

    #[test]
    fn zero_is_exact() {
        let iv = eval_numeric(&RadicalElement::zero(), 64);
        assert!(iv.lo().is_zero() && iv.hi().is_zero());
        assert_eq!(iv.to_decimal(3), "0.000");
    }

    #[test]
    fn signs() {
        let one = RadicalElement::one();
        assert_eq!(sign(&(&one - &surd(int(2), 3))).unwrap(), Sign::Negative);
        assert_eq!(sign(&RadicalElement::zero()).unwrap(), Sign::Zero);
        let eqa = one.clone() - surd(ratio(1, 2), 3) + surd(int(2), 3).scale(&int(5))
            + surd(int(32), 6).scale(&int(3));
        assert_eq!(sign(&eqa).unwrap(), Sign::Positive);
        assert!(eval_numeric(&eqa, 64).to_decimal(3).starts_with("11.85"));
    }

    #[test]
    fn sign_needs_refinement() {
        // about 7e-31, below what 64 bits can separate from zero
        let x = crate::parser::parse_element(
            "root(2,2) - 1414213562373095048801688724209/1000000000000000000000000000000",
        )
        .unwrap();
        assert_eq!(sign(&x).unwrap(), Sign::Positive);
        assert!(matches!(sign_with_cap(&x, 64), Err(Error::Resource(_))));
    }

    #[test]
    fn roots_and_powers() {
        let iv = Interval::from_rational(&int(-8), 80);
        let r = iv.nth_root(3).unwrap();
        assert!(r.overlaps(&Interval::from_rational(&int(-2), 80)));
        assert!(matches!(iv.nth_root(2), Err(Error::Branch(_))));
        let two = eval_numeric(&surd(int(2), 6), 100);
        let p = two.pow(6);
        assert!(p.overlaps(&Interval::from_rational(&int(2), 100)));
        assert!(!p.overlaps(&Interval::from_rational(&ratio(2001, 1000), 100)));
    }

    #[test]
    fn decimal_rendering() {
        let iv = Interval::from_rational(&ratio(-1, 8), 10);
        assert_eq!(iv.to_decimal(3), "-0.125");
        assert_eq!(Interval::from_rational(&ratio(53, 4), 10).to_decimal(1), "13.3");
    }
}
