//! Bounded enumerative searches for radical identities.
//!
//! Every search is deterministic: candidates are enumerated in a fixed order
//! and results come back in canonical order, so two runs over the same
//! inputs agree exactly.

mod coeff;
mod denest;
mod dioph;
mod domain;
mod power;
mod quotient;

pub use coeff::{coeff_scan, CoeffHit, CoefficientTemplate, MAX_FREE_SLOTS};
pub use denest::{denest_scan, DenestQuery, DEFAULT_CANDIDATE_CEILING};
pub use dioph::dioph_scan;
pub use domain::SearchDomain;
pub use power::{power_scan, PowerHit};
pub use quotient::{quotient_scan, QuotientScan, QuotientScanOptions};
