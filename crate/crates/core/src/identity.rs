//! Exact verification of nested radical identities.
//!
//! A side of an identity is a plain element, `root(n, r)` or
//! `root(n, a / b)`. Two sides are compared by raising both to the lcm of
//! their root degrees and cross-multiplying denominators; the resulting
//! element equality is exact. Real-branch conditions are then checked with
//! certified signs: even roots need non-negative radicands, and when the
//! common power is even both sides must carry the same sign.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::element::{normalize_radical, RadicalElement};
use crate::error::{Error, Result};
use crate::numeric::{eval_numeric, sign, Interval, Sign};
use crate::parser::{Lowered, NestedClaim, QuotientClaim};
use crate::rational::{self, Rational};

/// One side of an identity.
pub type Side = Lowered;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Unverified,
    VerifiedExact,
    RefutedExact,
    RefutedBranch,
    Indeterminate(String),
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Unverified => "unverified",
            Status::VerifiedExact => "verified-exact",
            Status::RefutedExact => "refuted-exact",
            Status::RefutedBranch => "refuted-branch",
            Status::Indeterminate(_) => "indeterminate",
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Status::VerifiedExact)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Status::RefutedExact | Status::RefutedBranch)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Indeterminate(reason) => write!(f, "indeterminate ({reason})"),
            s => f.write_str(s.as_str()),
        }
    }
}

/// Root degree, radicand numerator and optional denominator of a side.
fn root_form(side: &Side) -> (u32, &RadicalElement, Option<&RadicalElement>) {
    match side {
        Lowered::Element(e) => (1, e, None),
        Lowered::Nested(NestedClaim { degree, radicand }) => (*degree, radicand, None),
        Lowered::Quotient(QuotientClaim { degree, numerator, denominator }) => {
            (*degree, numerator, Some(denominator))
        }
    }
}

/// Number of terms written under the outermost root (or of the element).
pub fn side_terms(side: &Side) -> usize {
    let (_, num, den) = root_form(side);
    num.term_count() + den.map_or(0, |d| d.term_count())
}

/// Certified enclosure of a side's principal real value.
pub fn eval_side(side: &Side, precision_bits: u32) -> Result<Interval> {
    let (degree, num, den) = root_form(side);
    let radicand = match den {
        Some(d) => num * &d.inverse()?,
        None => num.clone(),
    };
    let iv = eval_numeric(&radicand, precision_bits);
    if degree == 1 {
        Ok(iv)
    } else {
        iv.nth_root(degree)
    }
}

fn radicand_sign(num: &RadicalElement, den: Option<&RadicalElement>) -> Result<Sign> {
    let s = sign(num)?;
    match den {
        Some(d) => Ok(s.mul(sign(d)?)),
        None => Ok(s),
    }
}

fn compare_sides(lhs: &Side, rhs: &Side) -> Result<Status> {
    let (n1, a1, d1) = root_form(lhs);
    let (n2, a2, d2) = root_form(rhs);
    if d1.is_some_and(RadicalElement::is_zero) || d2.is_some_and(RadicalElement::is_zero) {
        return Err(Error::Domain("zero denominator under a root".into()));
    }
    let l = n1.lcm(&n2);
    let (k1, k2) = ((l / n1) as u64, (l / n2) as u64);
    let mut left = a1.pow_u(k1);
    if let Some(d) = d2 {
        left = left * d.pow_u(k2);
    }
    let mut right = a2.pow_u(k2);
    if let Some(d) = d1 {
        right = right * d.pow_u(k1);
    }
    if left != right {
        return Ok(Status::RefutedExact);
    }
    let s1 = radicand_sign(a1, d1)?;
    let s2 = radicand_sign(a2, d2)?;
    if (n1 % 2 == 0 && s1 == Sign::Negative) || (n2 % 2 == 0 && s2 == Sign::Negative) {
        return Ok(Status::RefutedBranch);
    }
    // the sign of a principal root equals the sign of its radicand
    if l % 2 == 0 && s1 != s2 {
        return Ok(Status::RefutedBranch);
    }
    Ok(Status::VerifiedExact)
}

/// Exact status of `lhs = rhs`; resource failures become indeterminate.
pub fn verify_sides(lhs: &Side, rhs: &Side) -> Status {
    compare_sides(lhs, rhs).unwrap_or_else(|e| Status::Indeterminate(e.to_string()))
}

/// Term counts used to judge whether an identity is surprising.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interest {
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub interesting: bool,
}

/// A nested radical claim together with its verification status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    id: String,
    lhs: Side,
    rhs: Side,
    source: String,
    status: Status,
    note: Option<String>,
}

impl IdentityRecord {
    pub fn new(id: impl Into<String>, lhs: Side, rhs: Side, source: impl Into<String>) -> Self {
        IdentityRecord {
            id: id.into(),
            lhs,
            rhs,
            source: source.into(),
            status: Status::Unverified,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn lhs(&self) -> &Side {
        &self.lhs
    }

    pub fn rhs(&self) -> &Side {
        &self.rhs
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn status(&self) -> &Status {
        &self.status
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// The right-hand side when it is a plain element.
    pub fn rhs_element(&self) -> Option<&RadicalElement> {
        match &self.rhs {
            Lowered::Element(e) => Some(e),
            _ => None,
        }
    }

    /// Radicand of a nested left-hand side.
    pub fn lhs_radicand(&self) -> Option<&RadicalElement> {
        match &self.lhs {
            Lowered::Nested(c) => Some(&c.radicand),
            _ => None,
        }
    }

    pub fn verify(&mut self) -> &Status {
        self.status = verify_sides(&self.lhs, &self.rhs);
        &self.status
    }

    pub fn verified(mut self) -> Self {
        self.verify();
        self
    }

    /// Term counts on both sides; only defined for verified records.
    pub fn interestingness(&self) -> Result<Interest> {
        if !self.status.is_verified() {
            return Err(Error::State(format!(
                "record {} is {}, not verified-exact",
                self.id, self.status
            )));
        }
        Ok(self.term_counts())
    }

    /// Term counts regardless of status.
    pub fn term_counts(&self) -> Interest {
        let lhs_terms = side_terms(&self.lhs);
        let rhs_terms = side_terms(&self.rhs);
        Interest { lhs_terms, rhs_terms, interesting: lhs_terms < rhs_terms }
    }
}

/// `root(n, s^n) = s`, with the right side negated for even `n` when `s < 0`
/// so that it names the principal root.
pub fn make_power_identity(s: &RadicalElement, n: u32) -> Result<IdentityRecord> {
    if n < 2 {
        return Err(Error::Domain(format!("power degree {n} must be at least 2")));
    }
    power_record(s, n)
}

fn power_record(s: &RadicalElement, n: u32) -> Result<IdentityRecord> {
    let radicand = s.pow_u(n as u64);
    let lhs = Lowered::Nested(NestedClaim { degree: n, radicand });
    let flip = n % 2 == 0 && sign(s)? == Sign::Negative;
    let rhs = if flip { -s } else { s.clone() };
    let mut rec = IdentityRecord::new(format!("power-{n}"), lhs, Lowered::Element(rhs), "power construction");
    if flip {
        rec = rec.with_note("right side negated: principal even root is non-negative");
    }
    Ok(rec.verified())
}

/// One power identity per degree; degree 1 gives the trivial `root(1, s) = s`.
pub fn equivalence_chain(s: &RadicalElement, degrees: &[u32]) -> Result<Vec<IdentityRecord>> {
    if degrees.is_empty() {
        return Err(Error::Domain("equivalence chain needs at least one degree".into()));
    }
    degrees
        .iter()
        .map(|&n| {
            if n == 0 {
                Err(Error::Domain("root degree must be at least 1".into()))
            } else {
                power_record(s, n)
            }
        })
        .collect()
}

/// `lhs(a) = lhs(b)` for two records sharing a right-hand side.
pub fn cross_root_identity(a: &IdentityRecord, b: &IdentityRecord) -> IdentityRecord {
    IdentityRecord::new(
        format!("{}~{}", a.id, b.id),
        a.lhs.clone(),
        b.lhs.clone(),
        "equivalent roots",
    )
    .verified()
}

/// `root(n, (x + y b^(1/m)) / (x - y b^(1/m))) = (z + w b^(1/m)) / (z - w b^(1/m))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientForm {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub w: Rational,
    pub b: u64,
    pub m: u32,
    pub n: u32,
}

impl QuotientForm {
    pub fn from_ints(x: i64, y: i64, z: i64, w: i64, b: u64, m: u32, n: u32) -> Self {
        QuotientForm {
            x: rational::int(x),
            y: rational::int(y),
            z: rational::int(z),
            w: rational::int(w),
            b,
            m,
            n,
        }
    }

    pub fn surd(&self) -> Result<RadicalElement> {
        if self.b == 0 || self.m == 0 || self.n == 0 {
            return Err(Error::Domain("quotient form needs b, m, n >= 1".into()));
        }
        normalize_radical(&Rational::from_integer(self.b.into()), self.m)
    }

    fn pair(&self, p: &Rational, q: &Rational, r: &RadicalElement) -> Result<(RadicalElement, RadicalElement)> {
        let base = RadicalElement::from_rational(p.clone());
        let part = r.scale(q);
        let den = &base - &part;
        if den.is_zero() {
            return Err(Error::Domain("degenerate quotient: denominator vanishes".into()));
        }
        Ok((&base + &part, den))
    }

    /// Radicand numerator and denominator `(x + y r, x - y r)`.
    pub fn radicand(&self) -> Result<(RadicalElement, RadicalElement)> {
        self.pair(&self.x, &self.y, &self.surd()?)
    }

    /// `(z + w r) / (z - w r)` as a single element.
    pub fn rhs_value(&self) -> Result<RadicalElement> {
        let (num, den) = self.pair(&self.z, &self.w, &self.surd()?)?;
        Ok(num * den.inverse()?)
    }

    /// Record for this form. With `fold_sign`, an even outer degree compares
    /// the root against `|rhs|`, since even powers cannot tell `rhs` from
    /// `-rhs`.
    pub fn record(&self, fold_sign: bool) -> Result<IdentityRecord> {
        let (numerator, denominator) = self.radicand()?;
        let mut rhs = self.rhs_value()?;
        let mut note = None;
        if fold_sign && self.n % 2 == 0 && sign(&rhs)? == Sign::Negative {
            rhs = -rhs;
            note = Some("right side sign folded (even outer root)");
        }
        let lhs = Lowered::Quotient(QuotientClaim { degree: self.n, numerator, denominator });
        let id = format!(
            "quotient(x={},y={},z={},w={},b={},m={},n={})",
            self.x, self.y, self.z, self.w, self.b, self.m, self.n
        );
        let mut rec = IdentityRecord::new(id, lhs, Lowered::Element(rhs), "quotient form");
        if let Some(n) = note {
            rec = rec.with_note(n);
        }
        Ok(rec.verified())
    }
}

/// Status of a quotient-form identity with even-degree sign folding.
pub fn verify_quotient(q: &QuotientForm) -> Result<Status> {
    Ok(q.record(true)?.status().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_element, parse_lower};

    fn record(lhs: &str, rhs: &str) -> IdentityRecord {
        IdentityRecord::new("t", parse_lower(lhs).unwrap(), parse_lower(rhs).unwrap(), "test").verified()
    }

    fn ramanujan_rhs() -> RadicalElement {
        parse_element("root(3,1/9) - root(3,2/9) + root(3,4/9)").unwrap()
    }

    #[test]
    fn verifies_cube_root_identity() {
        let rec = record("root(3, root(3,2)-1)", "root(3,1/9)-root(3,2/9)+root(3,4/9)");
        assert_eq!(rec.status(), &Status::VerifiedExact);
        assert_eq!(rec.interestingness().unwrap(), Interest { lhs_terms: 2, rhs_terms: 3, interesting: true });
    }

    #[test]
    fn verifies_square_root_with_quartic_surds() {
        let rec = record(
            "sqrt(406 + 84*root(4,7) - 90*sqrt(7))",
            "root(4,7) + 7*sqrt(7) + root(4,343) - 7",
        );
        assert_eq!(rec.status(), &Status::VerifiedExact);
    }

    #[test]
    fn refutes_misprinted_cube() {
        let rec = record("root(3, 28917 + 64638*root(3,7))", "12*root(3,49) + 21 - 27*root(3,7)");
        assert_eq!(rec.status(), &Status::RefutedExact);
        let cube = parse_element("12*root(3,49) + 21 - 27*root(3,7)").unwrap().pow_u(3);
        assert_eq!(cube, parse_element("-19845*root(3,49) + 211491*root(3,7) - 329616").unwrap());
        assert!(rec.interestingness().is_err());
    }

    #[test]
    fn branch_refutations() {
        // (1 - sqrt 2)^2 = 3 - 2 sqrt 2, but the principal root is positive
        let rec = record("sqrt(3 - 2*sqrt(2))", "1 - sqrt(2)");
        assert_eq!(rec.status(), &Status::RefutedBranch);
        let rec = record("sqrt(3 - 2*sqrt(2))", "sqrt(2) - 1");
        assert_eq!(rec.status(), &Status::VerifiedExact);
        // odd roots accept negative radicands
        let rec = record("root(3, 1 - root(3,2))", "-(root(3,1/9)-root(3,2/9)+root(3,4/9))");
        assert_eq!(rec.status(), &Status::VerifiedExact);
        // negative radicand under an even root
        let rec = record("root(4, 1 - root(3,2))", "0");
        assert_eq!(rec.status(), &Status::RefutedExact);
    }

    #[test]
    fn power_identities() {
        let s = ramanujan_rhs();
        let r15 = make_power_identity(&s, 15).unwrap();
        assert_eq!(r15.status(), &Status::VerifiedExact);
        assert_eq!(
            r15.lhs_radicand().unwrap(),
            &parse_element("19 - 5*root(3,2) - 8*root(3,4)").unwrap()
        );
        let r27 = make_power_identity(&s, 27).unwrap();
        assert_eq!(
            r27.lhs_radicand().unwrap(),
            &parse_element("180*root(3,4) - 99*root(3,2) - 161").unwrap()
        );
        let neg = -parse_element("sqrt(2)").unwrap();
        let r2 = make_power_identity(&neg, 2).unwrap();
        assert_eq!(r2.rhs_element().unwrap(), &parse_element("sqrt(2)").unwrap());
        assert!(r2.note().is_some());
        assert_eq!(r2.status(), &Status::VerifiedExact);
        assert!(make_power_identity(&s, 1).is_err());
    }

    #[test]
    fn quotient_forms() {
        assert_eq!(verify_quotient(&QuotientForm::from_ints(7, 4, 3, 1, 3, 2, 4)).unwrap(), Status::VerifiedExact);
        assert_eq!(verify_quotient(&QuotientForm::from_ints(3, 2, 1, 1, 5, 4, 4)).unwrap(), Status::VerifiedExact);
        assert_eq!(verify_quotient(&QuotientForm::from_ints(7, 4, 3, 1, 2, 2, 4)).unwrap(), Status::RefutedExact);
        let strict = QuotientForm::from_ints(3, 2, 1, 1, 5, 4, 4).record(false).unwrap();
        assert_eq!(strict.status(), &Status::RefutedBranch);
        // 2 - 1*4^(1/2) = 0
        assert!(matches!(verify_quotient(&QuotientForm::from_ints(3, 1, 2, 1, 4, 2, 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn chain_and_cross_roots() {
        let s = ramanujan_rhs();
        let chain = equivalence_chain(&s, &[4, 5, 6]).unwrap();
        let expected = [
            "root(3,1/9) + 2*root(3,2/9) - 2*root(3,4/9)",
            "root(3,9) - root(3,2/3) - root(3,4/3)",
            "1 - 2*root(3,2) + root(3,4)",
        ];
        for (rec, text) in chain.iter().zip(expected) {
            assert_eq!(rec.status(), &Status::VerifiedExact);
            assert_eq!(rec.lhs_radicand().unwrap(), &parse_element(text).unwrap());
        }
        let cross = cross_root_identity(&chain[0], &chain[2]);
        assert_eq!(cross.status(), &Status::VerifiedExact);
        let one = equivalence_chain(&s, &[1]).unwrap();
        assert_eq!(one[0].status(), &Status::VerifiedExact);
        assert!(equivalence_chain(&s, &[]).is_err());
    }

    #[test]
    fn generic_square_is_not_interesting() {
        let s = parse_element("root(4,7) + sqrt(7) + root(4,343) + 7").unwrap();
        let rec = make_power_identity(&s, 2).unwrap();
        assert_eq!(
            rec.lhs_radicand().unwrap(),
            &parse_element("28*root(4,7) + 22*sqrt(7) + 16*root(4,343) + 70").unwrap()
        );
        assert_eq!(rec.interestingness().unwrap(), Interest { lhs_terms: 4, rhs_terms: 4, interesting: false });
    }
}
