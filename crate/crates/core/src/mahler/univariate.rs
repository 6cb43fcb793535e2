//! One-variable Mahler measures: m(p) = log|lead| + sum log+ |roots|.

use crate::numerics::{isolate_roots, BigReal, PrecisionContext};
use crate::poly::cyclotomic::cyclotomic;
use crate::poly::UniPoly;
use crate::Result;
use num_traits::Zero;

/// Jensen's formula for univariate p. Cyclotomic factors and monomials are
/// stripped exactly first (they contribute nothing).
pub fn mahler_univariate(p: &UniPoly, ctx: &PrecisionContext) -> Result<BigReal> {
    assert!(!p.is_zero(), "Mahler measure of the zero polynomial");
    let work = ctx.with_extra_digits(10);
    let lead = work.real_from_rat(&p.leading()).abs();
    let mut total = lead.ln();
    // strip x^v and cyclotomic factors
    let mut q = UniPoly::from_coeffs(
        p.coeffs()
            .iter()
            .skip_while(|c| c.is_zero())
            .cloned()
            .collect(),
    )
    .monic();
    'outer: while q.deg() > 0 {
        let deg = q.deg();
        for d in 1..=(2 * deg * deg + 2) {
            if crate::poly::cyclotomic::phi(d) <= deg {
                if let Some(next) = q.try_div_exact(&cyclotomic(d)) {
                    q = next;
                    continue 'outer;
                }
            }
        }
        break;
    }
    if q.deg() > 0 {
        // remaining roots: sum positive log moduli of the squarefree kernel,
        // repeated per multiplicity
        for (factor, mult) in q.squarefree_decomposition() {
            if factor.deg() == 0 {
                continue;
            }
            let roots = isolate_roots(&factor, &work)?;
            let mut part = work.zero();
            for r in roots {
                let ln_abs = r.value.ln_abs();
                if ln_abs.is_positive() {
                    part = &part + &ln_abs;
                }
            }
            for _ in 0..mult {
                total = &total + &part;
            }
        }
    }
    Ok(total.to_context(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rint;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(35)
    }

    fn uni(text: &str) -> UniPoly {
        parse_poly(text).unwrap().at_k(&rint(0)).y_coeff(0)
    }

    #[test]
    fn log_two_for_x_minus_2() {
        let c = ctx();
        let m = mahler_univariate(&uni("x - 2"), &c).unwrap();
        let log2 = c.real_from_i64(2).ln();
        assert!((&m - &log2).abs() < c.pow10(-30));
    }

    #[test]
    fn cyclotomic_measure_zero() {
        let c = ctx();
        let m = mahler_univariate(&uni("x^2 + x + 1"), &c).unwrap();
        assert!(m.abs() < c.pow10(-30));
    }

    #[test]
    fn quadratic_with_reciprocal_roots() {
        // 2x^2 - 5x + 2 = 2(x - 2)(x - 1/2): m = log 2 + log 2 = log 4
        let c = ctx();
        let m = mahler_univariate(&uni("2*x^2 - 5*x + 2"), &c).unwrap();
        let log4 = c.real_from_i64(4).ln();
        assert!((&m - &log4).abs() < c.pow10(-30), "m = {m:?}");
    }

    #[test]
    fn lehmer_polynomial() {
        // Lehmer's degree-10 polynomial: m = log(1.17628081825991...)
        let p = UniPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let c = ctx();
        let m = mahler_univariate(&p, &c).unwrap();
        let expect = c.real_from_f64(1.176_280_818_259_917_5).ln();
        assert!((&m - &expect).abs() < c.pow10(-14), "m = {m:?}");
    }
}
