//! Mahler measure of reciprocal y-quadratics.
//!
//! On |x| = 1 write b(t) = B(e(t)) e(-e_B t / 2) and
//! delta(t) = Delta(e(t)) e(-e_B t), both real by reciprocity. Where
//! delta <= 0 the two roots sit on |y| = 1 and contribute nothing; where
//! delta > 0,
//!
//!   log|y_1| + log|y_2| = 0   and   |y_1/y_2| = |(b - s)/(b + s)|, s = sqrt(delta),
//!
//! so the integrand is |log|(b-s)/(b+s)|| / 2 — no branch selection needed
//! (the sign of b picks the branch exactly as the r(t)-sign rule states).

use super::split::{on_circle_args, pieces_from_args};
use super::univariate::mahler_univariate;
use crate::numerics::quad::tanh_sinh;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};
use crate::poly::{BivarPoly, UniPoly};
use crate::{Error, Result};
use num_traits::Zero;

fn eval_with_phase(p: &UniPoly, t: &BigReal, half_shift: i64, ctx: &PrecisionContext) -> BigReal {
    // Re[ p(e(2 pi t)) * e(-pi t * half_shift) ]
    let two_pi_t = &(&ctx.pi() + &ctx.pi()) * t;
    let z = BigComplex::unit_circle(&two_pi_t);
    let mut acc = BigComplex::zero(ctx);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &z) + &BigComplex::from_rat(ctx, c);
    }
    let phase_angle = &(&ctx.pi() * t) * &ctx.real_from_i64(-half_shift);
    let phase = BigComplex::unit_circle(&phase_angle);
    (&acc * &phase).re
}

/// m(P) for reciprocal P of y-degree 2 at a fixed parameter value.
pub fn mahler_reciprocal_quadratic(p: &BivarPoly, ctx: &PrecisionContext) -> Result<BigReal> {
    if p.y_degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: p.y_degree(),
        });
    }
    if !p.to_parampoly().is_reciprocal() {
        return Err(Error::NotReciprocal("input to the reciprocal path".into()));
    }
    let work = ctx.with_extra_digits(10);
    let a = p.y_coeff(2);
    let b = p.y_coeff(1);
    let c = p.y_coeff(0);
    let delta = &(&b * &b) - &(&a * &c).scale(&crate::rint(4));
    if delta.is_zero() {
        return Err(Error::DegenerateK {
            k: "fixed".into(),
            why: "discriminant vanishes identically".into(),
        });
    }
    // the reciprocity exponent e with B = x^e B(1/x); for B = 0 recover it
    // from AC (whose palindrome center is e as well)
    let e_b: i64 = if b.is_zero() {
        let ac = &a * &c;
        ((ac.deg() + x_val(&ac)) / 2) as i64
    } else {
        (b.deg() + x_val(&b)) as i64
    };
    // split at on-circle roots of Delta and of A
    let mut args = on_circle_args(&delta, ctx)?;
    args.extend(on_circle_args(&a, ctx)?);
    args.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let lead = mahler_univariate(&a, &work)?;
    let mut total = lead;
    let target_floor = work.pow10(-(work.decimal_digits() as i64 + 5));
    for (lo, hi) in pieces_from_args(&args, &work) {
        if (&hi - &lo).abs() < target_floor {
            continue;
        }
        // sign of delta at the midpoint decides whether the piece contributes
        let mid = (&lo + &hi).scale_half();
        let dmid = eval_with_phase(&delta, &mid, 2 * e_b, &work);
        if !dmid.is_positive() {
            continue;
        }
        let w2 = work;
        let dd = delta.clone();
        let bb = b.clone();
        let contribution = tanh_sinh(
            &mut |t: &BigReal| {
                let dv = eval_with_phase(&dd, t, 2 * e_b, &w2);
                if !dv.is_positive() {
                    // endpoint rounding: the contribution vanishes there
                    return Ok(w2.zero());
                }
                let s = dv.sqrt();
                let bv = eval_with_phase(&bb, t, e_b, &w2);
                let num = (&bv - &s).abs();
                let den = (&bv + &s).abs();
                if num.is_zero() || den.is_zero() {
                    return Ok(w2.zero());
                }
                Ok((&num / &den).ln().abs().scale_half())
            },
            &lo,
            &hi,
            &work,
        )?;
        total = &total + &contribution;
    }
    Ok(total.to_context(ctx))
}

fn x_val(p: &UniPoly) -> usize {
    p.coeffs().iter().take_while(|c| c.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rint;

    fn boyd_at(k: i64) -> BivarPoly {
        parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4")
            .unwrap()
            .at_k(&rint(k))
    }

    #[test]
    fn boyd_k2_equals_lprime_e36() {
        // m(Q_2) = L'(E36, 0) = 0.85718907492991773...
        let ctx = PrecisionContext::new(30);
        let m = mahler_reciprocal_quadratic(&boyd_at(2), &ctx).unwrap();
        let expect = ctx.real_from_f64(0.857_189_074_929_917_7);
        assert!((&m - &expect).abs() < ctx.pow10(-14), "m = {m:?}");
    }

    #[test]
    fn boyd_k_minus1_twice_d3() {
        // m(Q_{-1}) = 2 d_3
        let ctx = PrecisionContext::new(30);
        let m = mahler_reciprocal_quadratic(&boyd_at(-1), &ctx).unwrap();
        let d3 = crate::lfun::dirichlet_dval(3, &ctx).unwrap();
        let expect = &d3 + &d3;
        assert!((&m - &expect).abs() < ctx.pow10(-24), "m = {m:?} vs {expect:?}");
    }

    #[test]
    fn boyd_k8_four_d3() {
        let ctx = PrecisionContext::new(30);
        let m = mahler_reciprocal_quadratic(&boyd_at(8), &ctx).unwrap();
        let d3 = crate::lfun::dirichlet_dval(3, &ctx).unwrap();
        let four = ctx.real_from_i64(4);
        let expect = &four * &d3;
        assert!((&m - &expect).abs() < ctx.pow10(-24), "m = {m:?} vs {expect:?}");
    }

    #[test]
    fn deninger_family_value() {
        // m(x + 1/x + y + 1/y + 1) = Deninger's measure 0.25133043371325...
        // (this is R_k at k = 5)
        let ctx = PrecisionContext::new(30);
        let r5 = parse_poly("x + 1/x + y + 1/y + (k - 4)")
            .unwrap()
            .at_k(&rint(5));
        let m = mahler_reciprocal_quadratic(&r5, &ctx).unwrap();
        let expect = ctx.real_from_f64(0.251_330_433_713_250_8);
        assert!((&m - &expect).abs() < ctx.pow10(-14), "m = {m:?}");
    }
}
