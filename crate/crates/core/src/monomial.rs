//! Radical monomials `p1^(e1/d1) * ... * pk^(ek/dk)` over prime bases.

use alloc::collections::BTreeMap;
use core::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

/// A reduced exponent `num/den` with `0 < num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponent {
    num: u32,
    den: u32,
}

impl Exponent {
    /// Builds the fractional part of `num/den`, returning `None` when it is
    /// zero.
    pub fn fractional(num: u64, den: u64) -> Option<Self> {
        assert!(den > 0, "zero exponent denominator");
        let num = num % den;
        if num == 0 {
            return None;
        }
        let g = num.gcd(&den);
        Some(Exponent {
            num: u32::try_from(num / g).expect("exponent numerator overflow"),
            den: u32::try_from(den / g).expect("exponent denominator overflow"),
        })
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of prime bases raised to exponents in `(0, 1)`. The empty product
/// is the unit monomial.
///
/// Monomials order lexicographically on their `(prime, exponent)` sequences,
/// so the unit comes first and `2^(1/3) < 2^(2/3) < 3^(1/3)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RadicalMonomial {
    factors: BTreeMap<u64, Exponent>,
}

impl RadicalMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `prime^(num/den)` reduced into `[0, 1)`. The integer part is
    /// discarded; callers that need it use [`RadicalMonomial::from_prime_power`].
    pub fn prime_root(prime: u64, num: u64, den: u64) -> Self {
        let mut factors = BTreeMap::new();
        if let Some(e) = Exponent::fractional(num, den) {
            factors.insert(prime, e);
        }
        RadicalMonomial { factors }
    }

    /// Splits `prime^(num/den)` into its integer power and fractional monomial.
    pub fn from_prime_power(prime: u64, num: u64, den: u64) -> (u64, Self) {
        (num / den, Self::prime_root(prime, num, den))
    }

    /// Builds a monomial from `(prime, exponent)` pairs. The caller
    /// guarantees primality and distinct bases.
    pub fn from_factors(factors: impl IntoIterator<Item = (u64, Exponent)>) -> Self {
        RadicalMonomial {
            factors: factors.into_iter().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, Exponent)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, prime: u64) -> Option<Exponent> {
        self.factors.get(&prime).copied()
    }

    /// Product of two monomials; the integer carry produced by exponent
    /// overflow is returned as a separate factor.
    pub fn mul(&self, other: &Self) -> (BigUint, Self) {
        let mut carry = BigUint::one();
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            match factors.get(&p).copied() {
                None => {
                    factors.insert(p, e);
                }
                Some(f) => {
                    let den = (e.den as u64).lcm(&(f.den as u64));
                    let num = e.num as u64 * (den / e.den as u64) + f.num as u64 * (den / f.den as u64);
                    if num >= den {
                        carry *= p;
                    }
                    match Exponent::fractional(num, den) {
                        Some(g) => {
                            factors.insert(p, g);
                        }
                        None => {
                            factors.remove(&p);
                        }
                    }
                }
            }
        }
        (carry, RadicalMonomial { factors })
    }

    /// `self^k` as integer carry times a reduced monomial.
    pub fn pow(&self, k: u32) -> (BigUint, Self) {
        let mut carry = BigUint::one();
        let mut factors = BTreeMap::new();
        for (&p, &e) in &self.factors {
            let num = e.num as u64 * k as u64;
            let den = e.den as u64;
            carry *= BigUint::from(p).pow(u32::try_from(num / den).expect("carry exponent overflow"));
            if let Some(f) = Exponent::fractional(num, den) {
                factors.insert(p, f);
            }
        }
        (carry, RadicalMonomial { factors })
    }

    /// Principal `n`-th root. Exponents stay inside `[0, 1)`, so no carry.
    pub fn root(&self, n: u32) -> Self {
        assert!(n > 0, "zero root degree");
        let factors = self
            .factors
            .iter()
            .map(|(&p, &e)| {
                let f = Exponent::fractional(e.num as u64, e.den as u64 * n as u64)
                    .expect("nonzero exponent stays nonzero");
                (p, f)
            })
            .collect();
        RadicalMonomial { factors }
    }

    /// `(q, m)` with `1/self = m / q`, `q` the product of the primes present.
    pub fn reciprocal(&self) -> (BigUint, Self) {
        let mut denom = BigUint::one();
        let factors = self
            .factors
            .iter()
            .map(|(&p, &e)| {
                denom *= p;
                (p, Exponent { num: e.den - e.num, den: e.den })
            })
            .collect();
        (denom, RadicalMonomial { factors })
    }

    /// Least common multiple of exponent denominators.
    pub fn root_degree(&self) -> u64 {
        self.factors.values().fold(1u64, |acc, e| acc.lcm(&(e.den as u64)))
    }

    /// `(L, N)` such that the monomial equals `N^(1/L)`.
    pub fn as_single_root(&self) -> (u64, BigUint) {
        let l = self.root_degree();
        let mut n = BigUint::one();
        for (&p, &e) in &self.factors {
            let k = e.num as u64 * (l / e.den as u64);
            n *= BigUint::from(p).pow(u32::try_from(k).expect("radicand exponent overflow"));
        }
        (l, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, a: u64, b: u64) -> RadicalMonomial {
        RadicalMonomial::prime_root(p, a, b)
    }

    #[test]
    fn carry_on_overflow() {
        let (c, r) = m(2, 2, 3).mul(&m(2, 2, 3));
        assert_eq!(c, BigUint::from(2u32));
        assert_eq!(r, m(2, 1, 3));
        let (c, r) = m(2, 1, 2).mul(&m(2, 1, 2));
        assert_eq!(c, BigUint::from(2u32));
        assert!(r.is_one());
        let (c, r) = m(2, 1, 2).mul(&m(2, 1, 3));
        assert!(c.is_one());
        assert_eq!(r, m(2, 5, 6));
    }

    #[test]
    fn ordering_is_by_prime_then_exponent() {
        let one = RadicalMonomial::one();
        let a = m(2, 1, 3);
        let b = m(2, 2, 3);
        let c = m(3, 1, 3);
        let (_, ac) = a.mul(&c);
        assert!(one < a && a < ac && ac < b && b < c);
    }

    #[test]
    fn pow_root_reciprocal() {
        let (c, r) = m(2, 5, 6).pow(6);
        assert_eq!(c, BigUint::from(32u32));
        assert!(r.is_one());
        assert_eq!(m(2, 1, 3).root(2), m(2, 1, 6));
        let (d, r) = m(7, 1, 4).reciprocal();
        assert_eq!(d, BigUint::from(7u32));
        assert_eq!(r, m(7, 3, 4));
        let (_, six) = m(2, 1, 3).mul(&m(3, 1, 3));
        assert_eq!(six.as_single_root(), (3, BigUint::from(6u32)));
        assert_eq!(m(2, 2, 3).as_single_root(), (3, BigUint::from(4u32)));
    }
}
