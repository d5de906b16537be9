use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::element::{normalize_radical, RadicalElement};
use crate::error::{Error, Result};
use crate::factor::{factorize, is_perfect_power};
use crate::identity::{QuotientForm, Status};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QuotientScanOptions {
    /// For even outer degrees, also accept forms that hold only after
    /// negating the right side, since an even power cannot see the sign.
    pub fold_signs: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuotientScan {
    pub forms: Vec<QuotientForm>,
    /// Candidates skipped because a denominator vanished.
    pub degenerate: usize,
}

/// Searches `root(n, (x + y r)/(x - y r)) = (z + w r)/(z - w r)` with
/// `r = b^(1/m)`.
///
/// For each admissible base `b <= b_max` (not a perfect `p`-th power for any
/// prime `p | m`) and coprime `1 <= z, w <= c_max`, the right side is raised
/// to the `n`-th power `q`; the form exists exactly when `(q - 1)/(q + 1)` is
/// a rational multiple `y/x` of `r`. Even `n` only scans `w > 0` because the
/// `w < 0` candidates are reciprocals that lead to the same forms with `y`
/// negated.
pub fn quotient_scan(n: u32, m: u32, b_max: u64, c_max: u64, options: QuotientScanOptions) -> Result<QuotientScan> {
    if n < 2 || m < 2 {
        return Err(Error::Domain("quotient scan needs n, m >= 2".into()));
    }
    let m_primes: Vec<u32> = factorize(m as u64).into_iter().map(|(p, _)| p as u32).collect();
    let mut scan = QuotientScan::default();
    for b in 2..=b_max {
        if m_primes.iter().any(|&p| is_perfect_power(b, p)) {
            continue;
        }
        let r = normalize_radical(&Rational::from_integer(b.into()), m)?;
        let Some((r_coeff, r_mono)) = r.single_term().map(|(c, mo)| (c.clone(), mo.clone())) else {
            continue;
        };
        for z in 1..=c_max {
            for w in 1..=c_max {
                if z.gcd(&w) != 1 {
                    continue;
                }
                let signs: &[i64] = if n % 2 == 0 { &[1] } else { &[1, -1] };
                for &sw in signs {
                    let w_signed = sw * w as i64;
                    match candidate(n, m, b, z as i64, w_signed, &r, &r_coeff, &r_mono, options)? {
                        Candidate::Found(form) => scan.forms.push(form),
                        Candidate::Degenerate => scan.degenerate += 1,
                        Candidate::Rejected => {}
                    }
                }
            }
        }
    }
    Ok(scan)
}

enum Candidate {
    Found(QuotientForm),
    Degenerate,
    Rejected,
}

#[allow(clippy::too_many_arguments)]
fn candidate(
    n: u32,
    m: u32,
    b: u64,
    z: i64,
    w: i64,
    r: &RadicalElement,
    r_coeff: &Rational,
    r_mono: &crate::monomial::RadicalMonomial,
    options: QuotientScanOptions,
) -> Result<Candidate> {
    let zr = RadicalElement::from_int(z);
    let wr = r.scale(&rational::int(w));
    let den = &zr - &wr;
    if den.is_zero() {
        return Ok(Candidate::Degenerate);
    }
    let t = (&zr + &wr) * den.inverse()?;
    let q = t.pow_u(n as u64);
    let one = RadicalElement::one();
    let q_plus = &q + &one;
    if q_plus.is_zero() {
        return Ok(Candidate::Degenerate);
    }
    let u = (&q - &one) * q_plus.inverse()?;
    let Some((u_coeff, u_mono)) = u.single_term() else {
        return Ok(Candidate::Rejected);
    };
    if u_mono != r_mono || u_coeff.is_zero() {
        return Ok(Candidate::Rejected);
    }
    let ratio = u_coeff / r_coeff;
    let form = QuotientForm {
        x: Rational::from_integer(ratio.denom().clone()),
        y: Rational::from_integer(ratio.numer().clone()),
        z: rational::int(z),
        w: rational::int(w),
        b,
        m,
        n,
    };
    let record = match form.record(options.fold_signs) {
        Ok(rec) => rec,
        Err(Error::Domain(_)) => return Ok(Candidate::Degenerate),
        Err(e) => return Err(e),
    };
    Ok(if *record.status() == Status::VerifiedExact {
        Candidate::Found(form)
    } else {
        Candidate::Rejected
    })
}
