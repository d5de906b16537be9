//! Exact symbolic engine for nested radical identities.
//!
//! Elements live in pure radical extensions `Q(p1^(1/m1), ..., pk^(1/mk))` with
//! prime bases. Every surd is rewritten on the prime-monomial basis with
//! exponents in `[0, 1)`, which makes the representation canonical: two
//! elements are equal exactly when their term maps are equal.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod discovery;
pub mod element;
pub mod error;
pub mod factor;
pub mod geometric;
pub mod identity;
mod linalg;
pub mod monomial;
pub mod numeric;
pub mod parser;
pub mod print;
pub mod rational;
pub mod signature;

pub use element::{normalize_radical, RadicalElement, DEFAULT_INVERSE_DIMENSION};
pub use error::{Error, Result};
pub use identity::{eval_side, IdentityRecord, Interest, QuotientForm, Side, Status};
pub use monomial::{Exponent, RadicalMonomial};
pub use numeric::{eval_numeric, sign, Interval, Sign};
pub use parser::{lower, parse, Expr, Lowered};
pub use print::{print_canonical, print_latex};
pub use rational::Rational;
pub use signature::FieldSignature;

/// Engine version reported by front ends.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
