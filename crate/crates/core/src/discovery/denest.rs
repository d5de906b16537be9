use alloc::format;
use alloc::vec::Vec;

use crate::element::RadicalElement;
use crate::error::{Error, Result};
use crate::monomial::RadicalMonomial;
use crate::numeric::{eval_numeric, sign, Interval, Sign};
use crate::rational::Rational;
use crate::signature::FieldSignature;

use super::domain::{graded_tuples, SearchDomain};

/// Default limit on the number of candidates a denesting scan may visit.
pub const DEFAULT_CANDIDATE_CEILING: u64 = 100_000_000;

const PREFILTER_BITS: u32 = 64;

/// Bounded search for `s` with `s^degree = radicand`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenestQuery {
    pub radicand: RadicalElement,
    pub degree: u32,
    /// Largest number of monomials in a candidate.
    pub support_size: usize,
    /// Field whose monomial basis supplies the candidate support.
    pub signature: FieldSignature,
    pub domain: SearchDomain,
    /// Skip the exact check when certified enclosures already disagree.
    pub prefilter: bool,
    pub ceiling: u64,
}

impl DenestQuery {
    /// Query over the radicand's own field; extend it with [`Self::extend`].
    pub fn new(radicand: RadicalElement, degree: u32, support_size: usize, domain: SearchDomain) -> Self {
        let signature = FieldSignature::of(&radicand);
        DenestQuery {
            radicand,
            degree,
            support_size,
            signature,
            domain,
            prefilter: true,
            ceiling: DEFAULT_CANDIDATE_CEILING,
        }
    }

    pub fn extend(mut self, prime: u64, degree: u32) -> Self {
        self.signature.extend(prime, degree);
        self
    }

    pub fn with_signature(mut self, signature: FieldSignature) -> Self {
        self.signature = signature;
        self
    }

    pub fn with_prefilter(mut self, prefilter: bool) -> Self {
        self.prefilter = prefilter;
        self
    }

    pub fn with_ceiling(mut self, ceiling: u64) -> Self {
        self.ceiling = ceiling;
        self
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All `s` with at most `support_size` monomials from the query basis,
/// coefficients from the domain, `s^degree = radicand`, and the principal
/// branch (`s >= 0` for even degree). Results are sorted.
pub fn denest_scan(query: &DenestQuery) -> Result<Vec<RadicalElement>> {
    let n = query.degree;
    if n < 2 {
        return Err(Error::Domain(format!("denesting degree {n} must be at least 2")));
    }
    if query.support_size == 0 || query.support_size > 4 {
        return Err(Error::Domain(format!("support size {} must lie in 1..=4", query.support_size)));
    }
    let basis: Vec<RadicalMonomial> = query.signature.basis();
    let values = query.domain.nonzero_values()?;
    let total: u128 = (1..=query.support_size as u64)
        .map(|k| binomial(basis.len() as u64, k).saturating_mul((values.len() as u128).saturating_pow(k as u32)))
        .fold(0u128, |a, b| a.saturating_add(b));
    if total > query.ceiling as u128 {
        return Err(Error::Resource(format!(
            "{total} candidates exceed the ceiling of {}",
            query.ceiling
        )));
    }
    if n % 2 == 0 && sign(&query.radicand)? == Sign::Negative {
        return Ok(Vec::new());
    }

    let scale = PREFILTER_BITS + 16;
    let basis_iv: Vec<Interval> = basis.iter().map(|m| Interval::monomial(m, scale)).collect();
    let target = eval_numeric(&query.radicand, PREFILTER_BITS);

    let mut found = Vec::new();
    for k in 1..=query.support_size.min(basis.len()) {
        let tuples = graded_tuples(&values, k);
        for support in combinations(basis.len(), k) {
            for coeffs in &tuples {
                if query.prefilter {
                    let mut iv = Interval::zero(scale);
                    for (&i, c) in support.iter().zip(coeffs) {
                        iv = iv.add(&basis_iv[i].mul_rational(c));
                    }
                    if !iv.pow(n).overlaps(&target) {
                        continue;
                    }
                }
                let s = RadicalElement::from_terms(
                    support.iter().zip(coeffs).map(|(&i, c): (&usize, &Rational)| (c.clone(), basis[i].clone())),
                );
                if s.pow_u(n as u64) != query.radicand {
                    continue;
                }
                if n % 2 == 0 && sign(&s)? == Sign::Negative {
                    continue;
                }
                found.push(s);
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_element;
    use crate::rational::int;

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), alloc::vec![alloc::vec![0, 1, 2]]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(binomial(9, 3), 84);
    }

    #[test]
    fn square_root_of_three_plus_two_root_two() {
        let r = parse_element("3 + 2*sqrt(2)").unwrap();
        let q = DenestQuery::new(r, 2, 2, SearchDomain::integers(3));
        assert_eq!(denest_scan(&q).unwrap(), alloc::vec![parse_element("1 + sqrt(2)").unwrap()]);
    }

    #[test]
    fn degree_obstruction() {
        let r = RadicalElement::from_int(2);
        let q = DenestQuery::new(r, 2, 2, SearchDomain::integers(3)).extend(2, 3);
        assert!(denest_scan(&q).unwrap().is_empty());
    }

    #[test]
    fn ceiling_and_arguments() {
        let r = parse_element("3 + 2*sqrt(2)").unwrap();
        let q = DenestQuery::new(r.clone(), 2, 2, SearchDomain::integers(3)).with_ceiling(10);
        assert!(matches!(denest_scan(&q), Err(Error::Resource(_))));
        assert!(denest_scan(&DenestQuery::new(r.clone(), 1, 2, SearchDomain::integers(3))).is_err());
        assert!(denest_scan(&DenestQuery::new(r, 2, 5, SearchDomain::integers(3))).is_err());
    }

    #[test]
    fn negative_radicand_under_even_root() {
        let r = -parse_element("3 + 2*sqrt(2)").unwrap();
        let q = DenestQuery::new(r, 2, 2, SearchDomain::integers(3));
        assert!(denest_scan(&q).unwrap().is_empty());
        let q = DenestQuery::new(RadicalElement::from_int(-8), 3, 1, SearchDomain::integers(3));
        assert_eq!(denest_scan(&q).unwrap(), alloc::vec![RadicalElement::from_rational(int(-2))]);
    }
}
