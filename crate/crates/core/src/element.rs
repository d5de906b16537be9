//! Elements of pure radical extensions of the rationals.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor::factorize;
use crate::linalg;
use crate::monomial::RadicalMonomial;
use crate::rational::{self, Rational};
use crate::signature::FieldSignature;

/// Default bound on the field dimension accepted by [`RadicalElement::inverse`].
pub const DEFAULT_INVERSE_DIMENSION: u64 = 512;

/// Finite sum of rational multiples of radical monomials.
///
/// Stored coefficients are never zero, so the zero element is the empty map
/// and structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RadicalElement {
    terms: BTreeMap<RadicalMonomial, Rational>,
}

fn big(n: BigUint) -> BigInt {
    BigInt::from_biguint(BigSign::Plus, n)
}

impl RadicalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_term(q, RadicalMonomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rational::int(n))
    }

    pub fn from_term(coefficient: Rational, monomial: RadicalMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        RadicalElement { terms }
    }

    /// Builds an element from arbitrary `(coefficient, monomial)` pairs,
    /// merging repeated monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, RadicalMonomial)>) -> Self {
        let mut out = RadicalElement::zero();
        for (c, m) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: RadicalMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// Number of stored monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&RadicalMonomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &RadicalMonomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &RadicalMonomial) -> Option<&Rational> {
        self.terms.get(m)
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coefficient_or_zero(&self, m: &RadicalMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value as a rational, if the element has no surd part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&RadicalMonomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn single_term(&self) -> Option<(&Rational, &RadicalMonomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn signature(&self) -> FieldSignature {
        FieldSignature::of(self)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    fn add_impl(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn sub_impl(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn neg_impl(&self) -> Self {
        RadicalElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<RadicalMonomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let (carry, m) = ma.mul(mb);
                let c = ca * cb * rational::from_biguint(carry);
                *acc.entry(m).or_insert_with(Rational::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        RadicalElement { terms: acc }
    }

    /// Non-negative power by repeated squaring.
    pub fn pow_u(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`Self::inverse`].
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow_u(n as u64))
        } else {
            Ok(self.inverse()?.pow_u(n.unsigned_abs()))
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        self.inverse_bounded(DEFAULT_INVERSE_DIMENSION)
    }

    /// Multiplicative inverse, solving the multiplication-by-`self` system
    /// on the full basis of the element's field signature.
    pub fn inverse_bounded(&self, max_dimension: u64) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((c, m)) = self.single_term() {
            let (denom, m_inv) = m.reciprocal();
            let c_inv = c.recip() / rational::from_biguint(denom);
            return Ok(Self::from_term(c_inv, m_inv));
        }
        let sig = self.signature();
        let dim = sig
            .dimension()
            .filter(|&d| d <= max_dimension)
            .ok_or_else(|| {
                Error::Resource(format!(
                    "field dimension {:?} exceeds inversion bound {max_dimension}",
                    sig.dimension()
                ))
            })? as usize;
        let basis = sig.basis();
        debug_assert_eq!(basis.len(), dim);
        let index: BTreeMap<&RadicalMonomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut matrix = alloc::vec![alloc::vec![Rational::zero(); dim]; dim];
        for (j, b) in basis.iter().enumerate() {
            let col = self * &Self::from_term(Rational::one(), b.clone());
            for (m, c) in col.terms() {
                let i = index[m];
                matrix[i][j] = c.clone();
            }
        }
        let mut rhs = alloc::vec![Rational::zero(); dim];
        rhs[index[&RadicalMonomial::one()]] = Rational::one();
        let x = linalg::solve(matrix, rhs)?;
        let inv = Self::from_terms(x.into_iter().zip(basis));
        debug_assert!((self * &inv).is_one());
        Ok(inv)
    }

    /// Principal real `n`-th root of a single-term element.
    ///
    /// Returns `None` when the element has more than one term. Negative
    /// radicands are accepted for odd `n` only.
    pub fn root_of_term(&self, n: u32) -> Option<Result<Self>> {
        if self.is_zero() {
            return Some(Ok(Self::zero()));
        }
        let (c, m) = self.single_term()?;
        Some((|| {
            if n == 0 {
                return Err(Error::Domain("root degree must be at least 1".into()));
            }
            if c.is_negative() && n % 2 == 0 {
                return Err(Error::Branch(format!("even root (degree {n}) of a negative quantity")));
            }
            let outer = normalize_radical(&c.abs(), n)?;
            let inner = Self::from_term(Rational::one(), m.root(n));
            let r = outer * inner;
            Ok(if c.is_negative() { -r } else { r })
        })())
    }
}

/// Principal real root `radicand^(1/degree)` rewritten on the prime basis.
///
/// Radicand numerator and denominator must fit in 64 bits.
pub fn normalize_radical(radicand: &Rational, degree: u32) -> Result<RadicalElement> {
    if degree == 0 {
        return Err(Error::Domain("root degree must be at least 1".into()));
    }
    if !radicand.is_positive() {
        return Err(Error::Domain(format!("radicand {radicand} is not positive")));
    }
    let too_big = || Error::Resource(format!("radicand {radicand} exceeds 64-bit factorization bound"));
    let num = rational::to_u64(radicand.numer()).ok_or_else(too_big)?;
    let den = rational::to_u64(radicand.denom()).ok_or_else(too_big)?;
    let n = degree as u64;

    let mut coeff_num = BigUint::one();
    let mut coeff_den = BigUint::one();
    let mut monomial = RadicalMonomial::one();
    for (p, k) in factorize(num) {
        let (whole, m) = RadicalMonomial::from_prime_power(p, k as u64, n);
        coeff_num *= BigUint::from(p).pow(whole as u32);
        monomial = monomial.mul(&m).1;
    }
    for (p, k) in factorize(den) {
        // p^(-k/n) = p^(-q) * p^((q n - k)/n) with q = ceil(k/n)
        let k = k as u64;
        let q = k.div_ceil(n);
        coeff_den *= BigUint::from(p).pow(q as u32);
        monomial = monomial.mul(&RadicalMonomial::prime_root(p, q * n - k, n)).1;
    }
    let coefficient = Rational::new(big(coeff_num), big(coeff_den));
    Ok(RadicalElement::from_term(coefficient, monomial))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&RadicalElement> for &RadicalElement {
            type Output = RadicalElement;
            fn $method(self, rhs: &RadicalElement) -> RadicalElement {
                RadicalElement::$imp(self, rhs)
            }
        }
        impl $trait<RadicalElement> for RadicalElement {
            type Output = RadicalElement;
            fn $method(self, rhs: RadicalElement) -> RadicalElement {
                RadicalElement::$imp(&self, &rhs)
            }
        }
        impl $trait<&RadicalElement> for RadicalElement {
            type Output = RadicalElement;
            fn $method(self, rhs: &RadicalElement) -> RadicalElement {
                RadicalElement::$imp(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for RadicalElement {
    type Output = RadicalElement;
    fn neg(self) -> RadicalElement {
        RadicalElement::neg_impl(&self)
    }
}

impl Neg for &RadicalElement {
    type Output = RadicalElement;
    fn neg(self) -> RadicalElement {
        RadicalElement::neg_impl(self)
    }
}

impl AddAssign<&RadicalElement> for RadicalElement {
    fn add_assign(&mut self, rhs: &RadicalElement) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl From<Rational> for RadicalElement {
    fn from(q: Rational) -> Self {
        RadicalElement::from_rational(q)
    }
}

impl core::iter::Sum for RadicalElement {
    fn sum<I: Iterator<Item = RadicalElement>>(iter: I) -> Self {
        let mut acc = RadicalElement::zero();
        for e in iter {
            acc += &e;
        }
        acc
    }
}

/// Coefficients of `e` on the given monomials, zero where absent.
pub fn coordinates(e: &RadicalElement, basis: &[RadicalMonomial]) -> Vec<Rational> {
    basis.iter().map(|m| e.coefficient_or_zero(m)).collect()
}
