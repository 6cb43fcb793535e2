//! Real odd primitive characters chi_{-f} and the values d_f = L'(chi_{-f}, -1).

use crate::arith::{is_squarefree_u64, kronecker_i64};
use crate::numerics::special::hurwitz_zeta2;
use crate::numerics::{BigReal, PrecisionContext};
use crate::{rat, Error, Result};

/// chi_{-f}(n) = (-f | n) via the Kronecker symbol, tabulated mod f.
#[derive(Clone, Debug)]
pub struct OddCharacter {
    pub conductor: u64,
    values: Vec<i8>,
}

impl OddCharacter {
    /// Validates that -f is a fundamental discriminant (so chi is primitive
    /// of conductor f) and odd (chi(-1) = -1, automatic for negative
    /// discriminants).
    pub fn new(f: u64) -> Result<OddCharacter> {
        let valid = if f % 4 == 3 {
            is_squarefree_u64(f)
        } else if f % 4 == 0 {
            let m = f / 4;
            is_squarefree_u64(m) && (m % 4 == 1 || m % 4 == 2)
        } else {
            false
        };
        if !valid || f < 3 {
            return Err(Error::NotOddPrimitive(f));
        }
        let values = (0..f)
            .map(|n| kronecker_i64(-(f as i64), n as i64) as i8)
            .collect();
        Ok(OddCharacter {
            conductor: f,
            values,
        })
    }

    pub fn chi(&self, n: u64) -> i32 {
        self.values[(n % self.conductor) as usize] as i32
    }
}

/// d_f = L'(chi_{-f}, -1) = f^{3/2} L(chi_{-f}, 2) / (4 pi), with
/// L(chi, 2) = f^{-2} sum_{a=1}^{f} chi(a) zeta(2, a/f).
pub fn dirichlet_dval(f: u64, ctx: &PrecisionContext) -> Result<BigReal> {
    let chi = OddCharacter::new(f)?;
    let work = ctx.with_extra_digits(10);
    let mut lsum = work.zero();
    for a in 1..f {
        let c = chi.chi(a);
        if c == 0 {
            continue;
        }
        let z = hurwitz_zeta2(&rat(a as i64, f as i64), &work);
        let term = if c > 0 { z } else { -&z };
        lsum = &lsum + &term;
    }
    let fr = work.real_from_i64(f as i64);
    let l2 = &lsum / &fr.square();
    let four_pi = &work.pi() * &work.real_from_i64(4);
    let d = &(&(&fr * &fr.sqrt()) * &l2) / &four_pi;
    Ok(d.to_context(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_validity() {
        for f in [3u64, 4, 7, 8, 11, 15, 20, 23, 24, 39, 55, 183, 303, 755] {
            let chi = OddCharacter::new(f).unwrap();
            assert_eq!(chi.chi(f), 0);
            // odd: chi(f-1) = chi(-1) = -1
            assert_eq!(chi.chi(f - 1), -1, "f = {f}");
        }
        for f in [5u64, 9, 12, 16, 21, 45] {
            assert!(OddCharacter::new(f).is_err(), "f = {f} should be invalid");
        }
    }

    #[test]
    fn d3_value() {
        // d_3 = 3 sqrt(3) L(chi_-3, 2) / (4 pi) = 0.32306594...
        let ctx = PrecisionContext::new(40);
        let d = dirichlet_dval(3, &ctx).unwrap();
        let expect = ctx.real_from_f64(0.323_065_947_219_61);
        assert!((&d - &expect).abs() < ctx.pow10(-12), "d3 = {d:?}");
    }

    #[test]
    fn d4_is_catalan_based() {
        // d_4 = 8 L(chi_-4, 2) / (4 pi) = 2 G / pi where G is Catalan
        let ctx = PrecisionContext::new(40);
        let d = dirichlet_dval(4, &ctx).unwrap();
        let catalan = ctx.real_from_f64(0.915_965_594_177_219_015);
        let expect = &(&catalan + &catalan) / &ctx.pi();
        assert!((&d - &expect).abs() < ctx.pow10(-14), "d4 = {d:?}");
    }
}
