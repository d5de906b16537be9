use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::element::RadicalElement;
use crate::error::{Error, Result};
use crate::identity::{make_power_identity, IdentityRecord};
use crate::monomial::RadicalMonomial;
use crate::rational::Rational;
use crate::signature::FieldSignature;

use super::domain::{graded_tuples, SearchDomain};

/// Largest number of free coefficients a scan accepts.
pub const MAX_FREE_SLOTS: usize = 4;

/// `sum_i c_i * scale_i * monomial_i` with some `c_i` pinned and the rest
/// searched, raised to `power`; the monomials in `vanish` must drop out of
/// the expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTemplate {
    terms: Vec<(Rational, RadicalMonomial)>,
    fixed: BTreeMap<usize, Rational>,
    free: Vec<usize>,
    power: u32,
    vanish: Vec<RadicalMonomial>,
}

impl CoefficientTemplate {
    pub fn new(
        terms: Vec<(Rational, RadicalMonomial)>,
        fixed: BTreeMap<usize, Rational>,
        free: Vec<usize>,
        power: u32,
        vanish: Vec<RadicalMonomial>,
    ) -> Result<Self> {
        let mut seen = alloc::vec![false; terms.len()];
        for &i in fixed.keys().chain(free.iter()) {
            match seen.get_mut(i) {
                Some(s) if !*s => *s = true,
                Some(_) => return Err(Error::Domain(format!("slot {i} is assigned twice"))),
                None => return Err(Error::Domain(format!("slot {i} is out of range"))),
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Domain("every slot must be either fixed or free".into()));
        }
        if power < 2 {
            return Err(Error::Domain(format!("template power {power} must be at least 2")));
        }
        let mut sig = FieldSignature::new();
        for (_, m) in &terms {
            sig.absorb(m);
        }
        if let Some(m) = vanish.iter().find(|m| !sig.contains(m)) {
            return Err(Error::Domain(format!("vanishing monomial {m:?} lies outside the template field")));
        }
        Ok(CoefficientTemplate { terms, fixed, free, power, vanish })
    }

    /// Template whose listed slots are free and all others pinned to 1.
    pub fn with_free_slots(
        terms: Vec<(Rational, RadicalMonomial)>,
        free: Vec<usize>,
        power: u32,
        vanish: Vec<RadicalMonomial>,
    ) -> Result<Self> {
        let fixed = (0..terms.len())
            .filter(|i| !free.contains(i))
            .map(|i| (i, Rational::from_integer(1.into())))
            .collect();
        Self::new(terms, fixed, free, power, vanish)
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn free_slots(&self) -> &[usize] {
        &self.free
    }

    /// Element for an assignment of the free slots, in `free` order.
    pub fn instantiate(&self, assignment: &[Rational]) -> Result<RadicalElement> {
        if assignment.len() != self.free.len() {
            return Err(Error::Domain(format!(
                "assignment has {} values for {} free slots",
                assignment.len(),
                self.free.len()
            )));
        }
        let mut coeffs: BTreeMap<usize, &Rational> = self.fixed.iter().map(|(&i, c)| (i, c)).collect();
        coeffs.extend(self.free.iter().copied().zip(assignment));
        Ok(RadicalElement::from_terms(
            self.terms
                .iter()
                .enumerate()
                .map(|(i, (scale, m))| (scale * coeffs[&i], m.clone())),
        ))
    }

    /// The instantiated element raised to the template power.
    pub fn expand(&self, assignment: &[Rational]) -> Result<RadicalElement> {
        Ok(self.instantiate(assignment)?.pow_u(self.power as u64))
    }

    fn admits(&self, expansion: &RadicalElement) -> bool {
        self.vanish.iter().all(|m| expansion.coefficient(m).is_none())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffHit {
    pub assignment: Vec<Rational>,
    pub record: IdentityRecord,
}

/// Assignments over `domain` whose expansion has no `vanish` monomials,
/// each with its verified power identity.
pub fn coeff_scan(template: &CoefficientTemplate, domain: &SearchDomain) -> Result<Vec<CoeffHit>> {
    if template.free.len() > MAX_FREE_SLOTS {
        return Err(Error::Resource(format!(
            "{} free slots exceed the limit of {MAX_FREE_SLOTS}",
            template.free.len()
        )));
    }
    let values = domain.values()?;
    let mut out = Vec::new();
    for assignment in graded_tuples(&values, template.free.len()) {
        let s = template.instantiate(&assignment)?;
        let expansion = s.pow_u(template.power as u64);
        if template.admits(&expansion) {
            let record = make_power_identity(&s, template.power)?;
            out.push(CoeffHit { assignment, record });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn quartic_seven() -> CoefficientTemplate {
        let m = |k| RadicalMonomial::prime_root(7, k, 4);
        CoefficientTemplate::with_free_slots(
            alloc::vec![(int(1), m(1)), (int(1), m(2)), (int(1), m(3)), (int(7), RadicalMonomial::one())],
            alloc::vec![1, 2, 3],
            2,
            alloc::vec![m(3)],
        )
        .unwrap()
    }

    #[test]
    fn excluded_assignment() {
        let t = quartic_seven();
        let e = t.expand(&[int(1), int(1), int(1)]).unwrap();
        assert_eq!(e.coefficient(&RadicalMonomial::prime_root(7, 3, 4)), Some(&int(16)));
        assert!(!t.admits(&e));
    }

    #[test]
    fn template_validation() {
        let m = RadicalMonomial::prime_root(7, 1, 4);
        let terms = alloc::vec![(int(1), m.clone())];
        assert!(CoefficientTemplate::new(terms.clone(), BTreeMap::new(), alloc::vec![], 2, alloc::vec![]).is_err());
        assert!(CoefficientTemplate::new(terms.clone(), BTreeMap::new(), alloc::vec![0, 0], 2, alloc::vec![]).is_err());
        assert!(CoefficientTemplate::with_free_slots(
            terms.clone(),
            alloc::vec![0],
            2,
            alloc::vec![RadicalMonomial::prime_root(3, 1, 2)]
        )
        .is_err());
        assert!(CoefficientTemplate::with_free_slots(terms, alloc::vec![0], 1, alloc::vec![]).is_err());
    }

    #[test]
    fn free_slot_guard() {
        let terms: Vec<_> = (1..=5).map(|k| (int(1), RadicalMonomial::prime_root(2, k, 6))).collect();
        let t = CoefficientTemplate::with_free_slots(terms, alloc::vec![0, 1, 2, 3, 4], 2, alloc::vec![]).unwrap();
        assert!(matches!(coeff_scan(&t, &SearchDomain::integers(1)), Err(Error::Resource(_))));
    }

    #[test]
    fn empty_vanish_keeps_everything() {
        let m = RadicalMonomial::prime_root(2, 1, 2);
        let t = CoefficientTemplate::with_free_slots(alloc::vec![(int(1), m)], alloc::vec![0], 2, alloc::vec![]).unwrap();
        assert_eq!(coeff_scan(&t, &SearchDomain::integers(2)).unwrap().len(), 5);
    }
}
