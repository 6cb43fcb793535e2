//! Rational functions of the family parameter k, always kept in lowest terms.

use super::unipoly::UniPoly;
use crate::Rat;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// numerator / denominator in Q[k], gcd 1, denominator monic-normalized by
/// making its leading coefficient positive with primitive integer scaling.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFuncK {
    num: UniPoly,
    den: UniPoly,
}

impl RatFuncK {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFuncK {
                num,
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        // normalize: primitive integer denominator with positive lead
        let dprim = den.primitive_int();
        let scale = den.leading() / dprim.leading();
        num = num.scale(&(Rat::from_integer(1.into()) / &scale));
        den = dprim;
        RatFuncK { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFuncK::new(p, UniPoly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFuncK::from_poly(UniPoly::constant(c))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Evaluate at rational k; None if the denominator vanishes there.
    pub fn eval(&self, k: &Rat) -> Option<Rat> {
        let d = self.den.eval(k);
        if d == Rat::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(k) / d)
    }

    /// Substitute k -> p(k) for a degree-1 polynomial p (shift/reflect).
    pub fn compose_linear(&self, p: &UniPoly) -> RatFuncK {
        RatFuncK::new(self.num.compose(p), self.den.compose(p))
    }
}

impl Add for &RatFuncK {
    type Output = RatFuncK;
    fn add(self, o: &RatFuncK) -> RatFuncK {
        RatFuncK::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &RatFuncK {
    type Output = RatFuncK;
    fn sub(self, o: &RatFuncK) -> RatFuncK {
        RatFuncK::new(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Mul for &RatFuncK {
    type Output = RatFuncK;
    fn mul(self, o: &RatFuncK) -> RatFuncK {
        RatFuncK::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl fmt::Debug for RatFuncK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})",
            super::print::format_unipoly(&self.num, "k"),
            super::print::format_unipoly(&self.den, "k")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rint;

    #[test]
    fn reduces_to_lowest_terms() {
        // (k^2 - 1) / (k - 1) = k + 1
        let r = RatFuncK::new(UniPoly::from_i64(&[-1, 0, 1]), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(r.numer(), &UniPoly::from_i64(&[1, 1]));
        assert_eq!(r.denom(), &UniPoly::one());
        assert_eq!(r.eval(&rint(3)), Some(rint(4)));
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = RatFuncK::new(UniPoly::one(), UniPoly::from_i64(&[0, 1])); // 1/k
        let b = RatFuncK::new(UniPoly::from_i64(&[0, 1]), UniPoly::one()); // k
        let s = &a * &b; // 1
        assert!(s.is_constant());
        assert_eq!(s.eval(&rint(7)), Some(rint(1)));
        let t = &a + &a; // 2/k
        assert_eq!(t.numer(), &UniPoly::from_i64(&[2]));
    }
}
