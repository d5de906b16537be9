use alloc::format;
use alloc::vec::Vec;

use crate::element::RadicalElement;
use crate::error::{Error, Result};

/// A power of the scanned element with few terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerHit {
    pub n: u32,
    pub radicand: RadicalElement,
    pub term_count: usize,
}

/// Every `n` in `n_min..=n_max` for which `s^n` has at most `max_terms`
/// terms, in ascending order.
pub fn power_scan(s: &RadicalElement, n_min: u32, n_max: u32, max_terms: usize) -> Result<Vec<PowerHit>> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::Domain(format!("power range {n_min}..={n_max} must satisfy 2 <= n_min <= n_max")));
    }
    let mut out = Vec::new();
    let mut power = s.pow_u(n_min as u64);
    for n in n_min..=n_max {
        if n > n_min {
            power = &power * s;
        }
        let term_count = power.term_count();
        if term_count <= max_terms {
            out.push(PowerHit { n, radicand: power.clone(), term_count });
        }
    }
    Ok(out)
}
