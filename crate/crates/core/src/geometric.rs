//! Geometric-series families built from the ratio `-2^(1/3)` scaled by
//! `9^(-1/3)`.
//!
//! `(-2)^(k/3)` is read as the real number `(-1)^k 2^(k/3)`, which makes the
//! series alternate and keeps every term real.

use alloc::format;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::element::{normalize_radical, RadicalElement};
use crate::error::{Error, Result};
use crate::identity::IdentityRecord;
use crate::parser::{Lowered, NestedClaim};
use crate::rational::{self, Rational};

/// `(-1)^k 2^(k/3) / 9^(1/3)` for any integer `k`.
pub fn series_term(k: i64) -> RadicalElement {
    let q = k.div_euclid(3);
    let r = k.rem_euclid(3) as u32;
    let two_q = if q >= 0 {
        Rational::from_integer(BigInt::from(2u32).pow(q as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(2u32).pow(q.unsigned_abs() as u32))
    };
    let frac = normalize_radical(&rational::int(1 << r), 3).expect("positive radicand");
    let ninth = normalize_radical(&rational::ratio(1, 9), 3).expect("positive radicand");
    let base = (&frac * &ninth).scale(&two_q);
    if k % 2 == 0 {
        base
    } else {
        -base
    }
}

/// Sum of [`series_term`] over `from..=to`.
pub fn partial_sum(from: i64, to: i64) -> RadicalElement {
    (from..=to).map(series_term).sum()
}

fn cbrt2_minus_one() -> RadicalElement {
    normalize_radical(&rational::int(2), 3).expect("positive radicand") - RadicalElement::one()
}

fn cube_root_record(id: alloc::string::String, scale: Rational, rhs: RadicalElement, source: &str) -> IdentityRecord {
    let radicand = cbrt2_minus_one().scale(&scale);
    IdentityRecord::new(
        id,
        Lowered::Nested(NestedClaim { degree: 3, radicand }),
        Lowered::Element(rhs),
        source,
    )
    .verified()
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 || m > 20 {
        return Err(Error::Domain(format!("family index {m} must lie in 1..=20")));
    }
    Ok(())
}

/// `root(3, (1 - (-2)^m)^3 / 27 * (2^(1/3) - 1)) = sum_{k=0}^{3m-1} (-2)^(k/3) / 9^(1/3)`.
pub fn geom_ascending(m: u32) -> Result<IdentityRecord> {
    check_m(m)?;
    let neg2_m = BigInt::from(-2).pow(m);
    let c = BigInt::one() - neg2_m;
    let scale = Rational::new(c.pow(3u32), BigInt::from(27));
    let rhs = partial_sum(0, 3 * m as i64 - 1);
    Ok(cube_root_record(format!("geom-asc-{m}"), scale, rhs, "ascending geometric family"))
}

/// `root(3, (2^m + (-1)^(m+1))^3 / (27 * 2^(3m-1)) * (2^(1/3) - 1)) = sum_{k=-(3m-1)}^{0} (-2)^(k/3) / 9^(1/3)`.
pub fn geom_descending(m: u32) -> Result<IdentityRecord> {
    check_m(m)?;
    let sign: i32 = if m % 2 == 1 { 1 } else { -1 };
    let c: BigInt = BigInt::from(2u32).pow(m) + sign;
    let den = BigInt::from(27) * BigInt::from(2u32).pow(3 * m - 1);
    let scale = Rational::new(c.pow(3u32), den);
    let rhs = partial_sum(-(3 * m as i64 - 1), 0);
    Ok(cube_root_record(format!("geom-desc-{m}"), scale, rhs, "descending geometric family"))
}

/// Closed form of the full descending series, `9^(-1/3) / (1 + 2^(-1/3))`.
pub fn geom_limit_value() -> RadicalElement {
    let ninth = normalize_radical(&rational::ratio(1, 9), 3).expect("positive radicand");
    let denom = RadicalElement::one() + normalize_radical(&rational::ratio(1, 2), 3).expect("positive radicand");
    ninth * denom.inverse().expect("nonzero denominator")
}

/// `root(3, 2/27 * (2^(1/3) - 1)) = 9^(-1/3) / (1 + 2^(-1/3))`.
pub fn geom_limit() -> IdentityRecord {
    cube_root_record(
        "geom-limit".into(),
        rational::ratio(2, 27),
        geom_limit_value(),
        "limit of the descending geometric family",
    )
}
