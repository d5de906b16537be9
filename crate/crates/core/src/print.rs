//! Canonical text and LaTeX rendering of elements.
//!
//! Canonical output is a subset of the input language, so every printed
//! element parses and lowers back to itself.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::element::RadicalElement;
use crate::monomial::RadicalMonomial;
use crate::rational::Rational;

fn monomial_factors(m: &RadicalMonomial) -> Vec<String> {
    m.factors()
        .map(|(p, e)| format!("{p}^({}/{})", e.num(), e.den()))
        .collect()
}

fn canonical_term(c: &Rational, m: &RadicalMonomial) -> String {
    let mag = c.abs();
    if m.is_one() {
        return mag.to_string();
    }
    let mut parts = Vec::new();
    if !mag.is_one() {
        parts.push(mag.to_string());
    }
    parts.extend(monomial_factors(m));
    let sep = if mag.is_integer() && m.len() == 1 { "*" } else { " * " };
    parts.join(sep)
}

fn join_signed(terms: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in terms.enumerate() {
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Deterministic text form, e.g. `-1 + 2^(1/3)`.
pub fn print_canonical(e: &RadicalElement) -> String {
    join_signed(e.terms().map(|(m, c)| (c.is_negative(), canonical_term(c, m))))
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn latex_term(c: &Rational, m: &RadicalMonomial) -> String {
    let mag = c.abs();
    if m.is_one() {
        return latex_rational(&mag);
    }
    let (l, n) = m.as_single_root();
    let surd = if l == 2 {
        format!("\\sqrt{{{n}}}")
    } else {
        format!("\\sqrt[{l}]{{{n}}}")
    };
    if mag.is_one() {
        surd
    } else {
        format!("{}{surd}", latex_rational(&mag))
    }
}

/// LaTeX form with one `\sqrt[L]{N}` per monomial, in canonical order.
pub fn print_latex(e: &RadicalElement) -> String {
    join_signed(e.terms().map(|(m, c)| (c.is_negative(), latex_term(c, m))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::normalize_radical;
    use crate::parser::parse_element;
    use crate::rational::{int, ratio};

    #[test]
    fn canonical_examples() {
        let a = normalize_radical(&int(2), 3).unwrap() - RadicalElement::one();
        assert_eq!(print_canonical(&a), "-1 + 2^(1/3)");
        let b = normalize_radical(&ratio(2, 9), 3).unwrap();
        assert_eq!(print_canonical(&b), "1/3 * 2^(1/3) * 3^(1/3)");
        assert_eq!(print_canonical(&RadicalElement::zero()), "0");
        let c = parse_element("1 + 100*root(3,2) - 80*root(3,4)").unwrap();
        assert_eq!(print_canonical(&c), "1 + 100*2^(1/3) - 80*2^(2/3)");
    }

    #[test]
    fn canonical_round_trip() {
        for text in [
            "root(3,1/9) - root(3,2/9) + root(3,4/9)",
            "-7/3 * root(6, 3) + root(4, 7) * root(3, 5) - 11",
            "1/(root(3,2) + 3*sqrt(2))",
        ] {
            let e = parse_element(text).unwrap();
            assert_eq!(parse_element(&print_canonical(&e)).unwrap(), e, "{text}");
        }
    }

    #[test]
    fn latex_of_ramanujan_rhs() {
        let s = parse_element("root(3,1/9) - root(3,2/9) + root(3,4/9)").unwrap();
        assert_eq!(
            print_latex(&s),
            "-\\frac{1}{3}\\sqrt[3]{6} + \\frac{1}{3}\\sqrt[3]{12} + \\frac{1}{3}\\sqrt[3]{3}"
        );
        let t = parse_element("406 + 84*root(4,7) - 90*sqrt(7)").unwrap();
        assert_eq!(print_latex(&t), "406 + 84\\sqrt[4]{7} - 90\\sqrt{7}");
    }
}
