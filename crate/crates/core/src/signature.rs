//! Field signatures: which prime roots an element needs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::element::RadicalElement;
use crate::monomial::{Exponent, RadicalMonomial};

/// Map from prime to root degree. The field `Q(p^(1/m_p), ...)` it names has
/// dimension `prod m_p` over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FieldSignature {
    components: BTreeMap<u64, u32>,
}

impl FieldSignature {
    pub fn new() -> Self {
        Self::default()
    }

    /// Smallest signature whose field contains every monomial of `e`.
    pub fn of(e: &RadicalElement) -> Self {
        let mut sig = Self::new();
        for m in e.monomials() {
            sig.absorb(m);
        }
        sig
    }

    pub fn absorb(&mut self, m: &RadicalMonomial) {
        for (p, e) in m.factors() {
            self.extend(p, e.den());
        }
    }

    /// Adds `prime^(1/degree)`; the existing degree becomes the lcm.
    pub fn extend(&mut self, prime: u64, degree: u32) -> &mut Self {
        if degree > 1 {
            let d = self.components.entry(prime).or_insert(1);
            *d = d.lcm(&degree);
        }
        self
    }

    pub fn with(mut self, prime: u64, degree: u32) -> Self {
        self.extend(prime, degree);
        self
    }

    pub fn merge(&mut self, other: &FieldSignature) {
        for (&p, &d) in &other.components {
            self.extend(p, d);
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.components.iter().map(|(&p, &d)| (p, d))
    }

    /// Product of degrees, or `None` on overflow.
    pub fn dimension(&self) -> Option<u64> {
        self.components
            .values()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
    }

    /// The full monomial basis in ascending monomial order.
    pub fn basis(&self) -> Vec<RadicalMonomial> {
        let comps: Vec<(u64, u32)> = self.components().collect();
        let mut out = Vec::new();
        let mut idx = alloc::vec![0u32; comps.len()];
        loop {
            out.push(RadicalMonomial::from_factors(comps.iter().zip(&idx).filter_map(
                |(&(p, d), &k)| Exponent::fractional(k as u64, d as u64).map(|e| (p, e)),
            )));
            // odometer increment
            let mut pos = comps.len();
            loop {
                if pos == 0 {
                    out.sort();
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < comps[pos].1 {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    pub fn contains(&self, m: &RadicalMonomial) -> bool {
        m.factors().all(|(p, e)| {
            self.components
                .get(&p)
                .is_some_and(|&d| d % e.den() == 0)
        })
    }
}
