//! Weierstrass models with coefficients in Q[k]: b/c-invariants, the
//! discriminant and the j-invariant as an exact rational function of k.

use crate::poly::{RatFuncK, UniPoly};
use crate::{rat, Error, Rat, Result};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with a_i in Q[k].
#[derive(Clone, Debug)]
pub struct WModelK {
    pub a1: UniPoly,
    pub a2: UniPoly,
    pub a3: UniPoly,
    pub a4: UniPoly,
    pub a6: UniPoly,
}

impl WModelK {
    pub fn new(a1: UniPoly, a2: UniPoly, a3: UniPoly, a4: UniPoly, a6: UniPoly) -> Self {
        WModelK { a1, a2, a3, a4, a6 }
    }

    /// Short form y^2 = x^3 + a2 x^2 + a4 x + a6.
    pub fn short(a2: UniPoly, a4: UniPoly, a6: UniPoly) -> Self {
        WModelK::new(UniPoly::zero(), a2, UniPoly::zero(), a4, a6)
    }

    pub fn b_invariants(&self) -> (UniPoly, UniPoly, UniPoly, UniPoly) {
        let b2 = &(&self.a1 * &self.a1) + &self.a2.scale(&crate::rint(4));
        let b4 = &self.a4.scale(&crate::rint(2)) + &(&self.a1 * &self.a3);
        let b6 = &(&self.a3 * &self.a3) + &self.a6.scale(&crate::rint(4));
        let b8 = (&(&b2 * &b6) - &(&b4 * &b4)).scale(&rat(1, 4));
        (b2, b4, b6, b8)
    }

    pub fn c_invariants(&self) -> (UniPoly, UniPoly) {
        let (b2, b4, b6, _) = self.b_invariants();
        let c4 = &(&b2 * &b2) - &b4.scale(&crate::rint(24));
        let c6 = &(&(&(&b2 * &b2) * &b2).scale(&crate::rint(-1))
            + &(&b2 * &b4).scale(&crate::rint(36)))
            - &b6.scale(&crate::rint(216));
        (c4, c6)
    }

    /// Discriminant in Q[k]: (c4^3 - c6^2) / 1728.
    pub fn discriminant(&self) -> UniPoly {
        let (c4, c6) = self.c_invariants();
        (&(&(&c4 * &c4) * &c4) - &(&c6 * &c6)).scale(&rat(1, 1728))
    }

    /// j(k) = c4^3 / Delta in lowest terms.
    pub fn j_invariant(&self) -> Result<RatFuncK> {
        let (c4, _) = self.c_invariants();
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(Error::IdenticallyDegenerate);
        }
        Ok(RatFuncK::new(&(&c4 * &c4) * &c4, disc))
    }

    /// Specialize k, giving rational a-invariants.
    pub fn at_k(&self, k: &Rat) -> [Rat; 5] {
        [
            self.a1.eval(k),
            self.a2.eval(k),
            self.a3.eval(k),
            self.a4.eval(k),
            self.a6.eval(k),
        ]
    }
}

/// j of a rational model (two independent code paths with `WModelK::j_invariant`
/// composed with evaluation).
pub fn j_at_rational(a: &[Rat; 5]) -> Result<Rat> {
    let m = WModelK::new(
        UniPoly::constant(a[0].clone()),
        UniPoly::constant(a[1].clone()),
        UniPoly::constant(a[2].clone()),
        UniPoly::constant(a[3].clone()),
        UniPoly::constant(a[4].clone()),
    );
    let (c4, _) = m.c_invariants();
    let disc = m.discriminant();
    if disc.is_zero() {
        return Err(Error::SingularCurve);
    }
    let c4v = c4.coeff(0);
    Ok(&(&(&c4v * &c4v) * &c4v) / &disc.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rint;

    #[test]
    fn j_zero_and_1728() {
        // y^2 = x^3 + 1 -> j = 0
        let m = WModelK::short(UniPoly::zero(), UniPoly::zero(), UniPoly::one());
        let j = m.j_invariant().unwrap();
        assert!(j.is_zero());
        // y^2 = x^3 + x -> j = 1728
        let m = WModelK::short(UniPoly::zero(), UniPoly::one(), UniPoly::zero());
        let j = m.j_invariant().unwrap();
        assert!(j.is_constant());
        assert_eq!(j.eval(&rint(0)), Some(rint(1728)));
    }

    #[test]
    fn degenerate_is_detected() {
        // y^2 = x^3: cusp
        let m = WModelK::short(UniPoly::zero(), UniPoly::zero(), UniPoly::zero());
        assert!(matches!(m.j_invariant(), Err(Error::IdenticallyDegenerate)));
    }
}
