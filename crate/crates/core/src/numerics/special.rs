//! Special functions: E1 and the Hurwitz zeta value zeta(2, x) needed for
//! Dirichlet L-values at s = 2.

use super::context::PrecisionContext;
use super::real::BigReal;
use crate::{Rat, rint};
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::sync::Mutex;

/// E1(x) = int_x^inf e^-t / t dt for x > 0; computed as -Ei(-x).
pub fn exp_integral_e1(x: &BigReal) -> BigReal {
    assert!(x.is_positive(), "E1 domain is x > 0");
    -&(-x).eint()
}

/// Exact Bernoulli numbers B_0, B_1, ... via the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0, cached.
fn bernoulli(n: usize) -> Rat {
    static CACHE: Lazy<Mutex<Vec<Rat>>> = Lazy::new(|| Mutex::new(vec![Rat::from_integer(1.into())]));
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len(); // computing B_m
        // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
        let mut acc = Rat::zero();
        let mut binom = Rat::from_integer(1.into()); // C(m+1, 0)
        for (j, bj) in cache.iter().enumerate() {
            acc += &binom * bj;
            // C(m+1, j+1) = C(m+1, j) * (m+1-j)/(j+1)
            binom = binom * crate::rat((m + 1 - j) as i64, (j + 1) as i64);
        }
        let bm = -acc / rint((m + 1) as i64);
        cache.push(bm);
    }
    cache[n].clone()
}

/// Hurwitz zeta at s = 2: zeta(2, x) = sum_{n>=0} (x+n)^-2, for x > 0.
///
/// Euler-Maclaurin: sum_{n<M} (x+n)^-2 + 1/(x+M) + (x+M)^-2 / 2
///                + sum_{j>=1} B_{2j} (x+M)^-(2j+1),
/// with M chosen so the asymptotic tail reaches the context target before
/// its terms start growing.
pub fn hurwitz_zeta2(x: &Rat, ctx: &PrecisionContext) -> BigReal {
    assert!(x > &Rat::zero(), "Hurwitz zeta needs x > 0");
    let work = ctx.with_extra_digits(10);
    let target = BigReal::pow10_with_bits(work.bits(), -(work.decimal_digits() as i64));
    // M ~ 0.4 * digits * ln(10) makes B_{2j} (x+M)^{-2j-1} reach 10^-digits
    // before divergence; bump geometrically if the tail stalls.
    let mut m_terms = (work.decimal_digits() as usize) * 2 / 3 + 8;
    loop {
        let mut direct = work.zero();
        for n in 0..m_terms {
            let t = work.real_from_rat(&(x + rint(n as i64)));
            direct = &direct + &t.square().recip();
        }
        let xm = work.real_from_rat(&(x + rint(m_terms as i64)));
        let mut total = &direct + &xm.recip();
        let xm2_inv = xm.square().recip();
        total = &total + &xm2_inv.scale_half();
        // correction terms B_2j * (x+M)^-(2j+1)
        let mut pow = &xm2_inv * &xm.recip(); // (x+M)^-3
        let step = xm2_inv.clone();
        let mut converged = false;
        let mut last_mag = work.zero();
        for j in 1..200 {
            let b = bernoulli(2 * j);
            let term = &work.real_from_rat(&b) * &pow;
            let mag = term.abs();
            if j > 1 && mag > last_mag && mag > target {
                break; // asymptotic series began to diverge
            }
            total = &total + &term;
            if mag < target {
                converged = true;
                break;
            }
            last_mag = mag;
            pow = &pow * &step;
        }
        if converged {
            return total.to_context(ctx);
        }
        m_terms *= 2;
        assert!(m_terms < 1_000_000, "Hurwitz zeta failed to converge");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn bernoulli_small() {
        assert_eq!(bernoulli(0), rint(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn hurwitz_at_one_is_pi2_over_6() {
        let ctx = PrecisionContext::new(50);
        let z = hurwitz_zeta2(&rint(1), &ctx);
        let pi2_6 = &ctx.pi().square() / &ctx.real_from_i64(6);
        assert!((&z - &pi2_6).abs() < ctx.pow10(-45), "z = {z:?}");
    }

    #[test]
    fn hurwitz_at_half() {
        // zeta(2, 1/2) = pi^2/2
        let ctx = PrecisionContext::new(50);
        let z = hurwitz_zeta2(&rat(1, 2), &ctx);
        let expect = ctx.pi().square().scale_half();
        assert!((&z - &expect).abs() < ctx.pow10(-45));
    }

    #[test]
    fn e1_small_and_large() {
        let ctx = PrecisionContext::new(40);
        // E1(1) known to 20 digits
        let v = exp_integral_e1(&ctx.one());
        let expect = ctx.real_from_f64(0.219_383_934_395_520_27);
        assert!((&v - &expect).abs() < ctx.pow10(-15));
        // E1(20): 4.9e-11 ballpark
        let v20 = exp_integral_e1(&ctx.real_from_i64(20));
        assert!(v20.is_positive() && v20 < ctx.pow10(-9));
    }
}
