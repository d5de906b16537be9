use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Finite set of candidate coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchDomain {
    /// Integers in `[-radius, radius]`.
    Integers { radius: i64 },
    /// `{p / denominator : |p| <= numerator_bound}`.
    FixedDenominator { numerator_bound: i64, denominator: i64 },
    /// `{p / q : |p| <= numerator_bound, 1 <= q <= denominator_bound}`.
    Grid { numerator_bound: i64, denominator_bound: i64 },
}

fn cmp_graded(a: &Rational, b: &Rational) -> Ordering {
    rational::height(a).cmp(&rational::height(b)).then_with(|| a.cmp(b))
}

impl SearchDomain {
    pub fn integers(radius: i64) -> Self {
        SearchDomain::Integers { radius }
    }

    pub fn fixed_denominator(numerator_bound: i64, denominator: i64) -> Self {
        SearchDomain::FixedDenominator { numerator_bound, denominator }
    }

    pub fn grid(numerator_bound: i64, denominator_bound: i64) -> Self {
        SearchDomain::Grid { numerator_bound, denominator_bound }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            SearchDomain::Integers { radius } => radius >= 0,
            SearchDomain::FixedDenominator { numerator_bound, denominator } => numerator_bound >= 0 && denominator >= 1,
            SearchDomain::Grid { numerator_bound, denominator_bound } => numerator_bound >= 0 && denominator_bound >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("malformed search domain {self:?}")))
        }
    }

    /// Distinct values, ordered by height `max(|p|, q)` and then by value.
    pub fn values(&self) -> Result<Vec<Rational>> {
        self.validate()?;
        let mut set = BTreeSet::new();
        match *self {
            SearchDomain::Integers { radius } => {
                for p in -radius..=radius {
                    set.insert(rational::int(p));
                }
            }
            SearchDomain::FixedDenominator { numerator_bound, denominator } => {
                for p in -numerator_bound..=numerator_bound {
                    set.insert(rational::ratio(p, denominator));
                }
            }
            SearchDomain::Grid { numerator_bound, denominator_bound } => {
                for q in 1..=denominator_bound {
                    for p in -numerator_bound..=numerator_bound {
                        set.insert(rational::ratio(p, q));
                    }
                }
            }
        }
        let mut out: Vec<Rational> = set.into_iter().collect();
        out.sort_by(cmp_graded);
        Ok(out)
    }

    /// Nonzero values in the same order.
    pub fn nonzero_values(&self) -> Result<Vec<Rational>> {
        Ok(self.values()?.into_iter().filter(|q| !rational::is_zero(q)).collect())
    }
}

/// All `k`-tuples over `values`, graded by the largest component height and
/// then ordered lexicographically by value.
pub(crate) fn graded_tuples(values: &[Rational], k: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    let mut idx = alloc::vec![0usize; k];
    if values.is_empty() && k > 0 {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| values[i].clone()).collect());
        let mut pos = k;
        loop {
            if pos == 0 {
                let key = |t: &Vec<Rational>| t.iter().map(rational::height).max().unwrap_or_else(|| BigInt::from(0));
                out.sort_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.cmp(b)));
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
