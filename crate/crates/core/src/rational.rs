//! Rational helpers on top of `num_rational::BigRational`.
//!
//! `BigRational` keeps its values reduced with a positive denominator, which
//! is the canonical form the rest of the crate relies on.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_biguint(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, n))
}

/// Sum of bit lengths of numerator and denominator, a cheap size measure.
pub fn height_bits(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// `max(|numerator|, denominator)` of the reduced fraction, as used for
/// ordering search domains.
pub fn height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n.is_zero() {
        return n;
    }
    if n > d {
        n
    } else {
        d
    }
}

/// Converts a non-negative integer-valued `BigInt` to `u64`, if it fits.
pub fn to_u64(n: &BigInt) -> Option<u64> {
    if n.is_negative() {
        None
    } else {
        n.to_u64()
    }
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

pub fn is_zero(q: &Rational) -> bool {
    q.is_zero()
}
