//! Canonical text form for polynomials. `parse(print(p)) == p` for every
//! ParamPoly; this is the single representation used by the CLI, fixtures
//! and cache keys.

use super::parampoly::ParamPoly;
use super::unipoly::UniPoly;
use crate::Rat;
use num_traits::{One, Signed, Zero};

fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Render a univariate polynomial with the given variable name, descending.
pub fn format_unipoly(p: &UniPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for i in (0..=p.deg()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sep = if out.is_empty() {
            if c.is_negative() {
                "-".to_string()
            } else {
                String::new()
            }
        } else if c.is_negative() {
            " - ".to_string()
        } else {
            " + ".to_string()
        };
        let pw = power(var, i);
        let body = if pw.is_empty() {
            format_rat(&mag)
        } else if mag.is_one() {
            pw
        } else {
            format!("{}*{}", format_rat(&mag), pw)
        };
        out.push_str(&sep);
        out.push_str(&body);
    }
    out
}

/// Render a ParamPoly: terms in descending (y, x) order, k-coefficients
/// parenthesized when non-constant.
pub fn format_parampoly(p: &ParamPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut keys: Vec<(u32, u32)> = p.terms().keys().cloned().collect();
    keys.sort_by(|a, b| (b.1, b.0).cmp(&(a.1, a.0)));
    let mut out = String::new();
    for (i, j) in keys {
        let c = &p.terms()[&(i, j)];
        let mono = match (power("x", i as usize), power("y", j as usize)) {
            (a, b) if a.is_empty() && b.is_empty() => String::new(),
            (a, b) if a.is_empty() => b,
            (a, b) if b.is_empty() => a,
            (a, b) => format!("{a}*{b}"),
        };
        let (sign_negative, coeff_str) = if c.is_constant() {
            let v = c.coeff(0);
            let mag = v.abs();
            let s = if mag.is_one() && !mono.is_empty() {
                String::new()
            } else {
                format_rat(&mag)
            };
            (v.is_negative(), s)
        } else {
            (false, format!("({})", format_unipoly(c, "k")))
        };
        let sep = if out.is_empty() {
            if sign_negative {
                "-".to_string()
            } else {
                String::new()
            }
        } else if sign_negative {
            " - ".to_string()
        } else {
            " + ".to_string()
        };
        let body = match (coeff_str.is_empty(), mono.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => mono,
            (false, true) => coeff_str,
            (false, false) => format!("{coeff_str}*{mono}"),
        };
        out.push_str(&sep);
        out.push_str(&body);
    }
    out
}
