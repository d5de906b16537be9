use nestrad::discovery::SearchDomain;
use nestrad::parser::{NestedClaim, QuotientClaim};
use nestrad::{print_canonical, print_latex, Lowered};

pub fn side_text(side: &Lowered) -> String {
    match side {
        Lowered::Element(e) => print_canonical(e),
        Lowered::Nested(NestedClaim { degree, radicand }) => {
            format!("root({degree}, {})", print_canonical(radicand))
        }
        Lowered::Quotient(QuotientClaim { degree, numerator, denominator }) => format!(
            "root({degree}, ({}) / ({}))",
            print_canonical(numerator),
            print_canonical(denominator)
        ),
    }
}

fn latex_root(degree: u32, body: &str) -> String {
    if degree == 2 {
        format!("\\sqrt{{{body}}}")
    } else {
        format!("\\sqrt[{degree}]{{{body}}}")
    }
}

pub fn side_latex(side: &Lowered) -> String {
    match side {
        Lowered::Element(e) => print_latex(e),
        Lowered::Nested(NestedClaim { degree, radicand }) => latex_root(*degree, &print_latex(radicand)),
        Lowered::Quotient(QuotientClaim { degree, numerator, denominator }) => latex_root(
            *degree,
            &format!("\\frac{{{}}}{{{}}}", print_latex(numerator), print_latex(denominator)),
        ),
    }
}

fn int_arg(s: &str, what: &str) -> Result<i64, String> {
    s.trim().parse().map_err(|_| format!("bad {what} {s:?}"))
}

/// `int:R`, `frac:P/Q` or `grid:P,Q`.
pub fn parse_domain(spec: &str) -> Result<SearchDomain, String> {
    let (kind, rest) = spec.split_once(':').ok_or_else(|| format!("domain {spec:?} lacks a kind prefix"))?;
    match kind {
        "int" => Ok(SearchDomain::integers(int_arg(rest, "radius")?)),
        "frac" => {
            let (p, q) = rest.split_once('/').ok_or_else(|| format!("expected frac:P/Q, got {spec:?}"))?;
            Ok(SearchDomain::fixed_denominator(int_arg(p, "numerator bound")?, int_arg(q, "denominator")?))
        }
        "grid" => {
            let (p, q) = rest.split_once(',').ok_or_else(|| format!("expected grid:P,Q, got {spec:?}"))?;
            Ok(SearchDomain::grid(int_arg(p, "numerator bound")?, int_arg(q, "denominator bound")?))
        }
        _ => Err(format!("unknown domain kind {kind:?}")),
    }
}

/// `p:deg`.
pub fn parse_prime(spec: &str) -> Result<(u64, u32), String> {
    let (p, d) = spec.split_once(':').ok_or_else(|| format!("expected p:deg, got {spec:?}"))?;
    let p: u64 = p.trim().parse().map_err(|_| format!("bad prime {p:?}"))?;
    let d: u32 = d.trim().parse().map_err(|_| format!("bad degree {d:?}"))?;
    if !nestrad::factor::is_prime(p) || d == 0 {
        return Err(format!("{spec:?} needs a prime base and a positive degree"));
    }
    Ok((p, d))
}

/// `name:expr` or bare `expr`.
pub fn split_slot(term: &str) -> (Option<&str>, &str) {
    match term.split_once(':') {
        Some((name, expr)) if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphabetic() || c == '_') => {
            (Some(name), expr)
        }
        _ => (None, term),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domains() {
        assert_eq!(parse_domain("int:10").unwrap(), SearchDomain::integers(10));
        assert_eq!(parse_domain("frac:3/3").unwrap(), SearchDomain::fixed_denominator(3, 3));
        assert_eq!(parse_domain("grid:2,4").unwrap(), SearchDomain::grid(2, 4));
        assert!(parse_domain("ints:3").is_err());
        assert!(parse_domain("frac:3").is_err());
    }

    #[test]
    fn primes_and_slots() {
        assert_eq!(parse_prime("3:3").unwrap(), (3, 3));
        assert!(parse_prime("4:2").is_err());
        assert_eq!(split_slot("x:sqrt(7)"), (Some("x"), "sqrt(7)"));
        assert_eq!(split_slot("root(4,7)"), (None, "root(4,7)"));
    }
}
