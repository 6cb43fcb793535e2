//! Arbitrary-precision reals. Thin wrapper over MPFR floats that pins the
//! precision of every value to its originating context and turns NaN /
//! overflow into loud failures instead of silent propagation.

use super::context::PrecisionContext;
use crate::{Int, Rat};
use rug::float::Constant;
use rug::ops::{CompleteRound, Pow};
use rug::Float;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone)]
pub struct BigReal {
    v: Float,
}

fn int_to_rug(i: &Int) -> rug::Integer {
    // radix-16 round trip; exact for any size
    rug::Integer::from_str_radix(&i.to_str_radix(16), 16).unwrap()
}

impl BigReal {
    fn wrap(v: Float) -> BigReal {
        assert!(!v.is_nan(), "NaN produced in BigReal arithmetic");
        assert!(!v.is_infinite(), "overflow produced in BigReal arithmetic");
        BigReal { v }
    }

    pub fn from_i64(ctx: &PrecisionContext, x: i64) -> BigReal {
        BigReal::wrap(Float::with_val(ctx.bits(), x))
    }

    pub fn from_f64(ctx: &PrecisionContext, x: f64) -> BigReal {
        BigReal::wrap(Float::with_val(ctx.bits(), x))
    }

    pub fn from_rat(ctx: &PrecisionContext, x: &Rat) -> BigReal {
        let n = int_to_rug(x.numer());
        let d = int_to_rug(x.denom());
        let q = rug::Rational::from((n, d));
        BigReal::wrap(Float::with_val(ctx.bits(), q))
    }

    pub fn pi(ctx: &PrecisionContext) -> BigReal {
        BigReal::wrap(Float::with_val(ctx.bits(), Constant::Pi))
    }

    pub fn euler_gamma(ctx: &PrecisionContext) -> BigReal {
        BigReal::wrap(Float::with_val(ctx.bits(), Constant::Euler))
    }

    pub fn bits(&self) -> u32 {
        self.v.prec()
    }

    /// Integer constant at an explicit binary precision (for matching the
    /// precision of an existing value).
    pub fn with_bits_i64(bits: u32, v: i64) -> BigReal {
        BigReal::wrap(Float::with_val(bits, v))
    }

    /// 10^e at an explicit binary precision.
    pub fn pow10_with_bits(bits: u32, e: i64) -> BigReal {
        BigReal::wrap(Float::with_val(bits, Float::with_val(bits, 10).pow(e)))
    }

    fn check(&self, other: &BigReal) {
        assert_eq!(
            self.bits(),
            other.bits(),
            "mixing values from different precision contexts"
        );
    }

    pub fn raw(&self) -> &Float {
        &self.v
    }

    pub fn from_raw(v: Float) -> BigReal {
        BigReal::wrap(v)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_sign_negative() && !self.v.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.v.is_sign_positive() && !self.v.is_zero()
    }

    pub fn abs(&self) -> BigReal {
        BigReal::wrap(self.v.clone().abs())
    }

    pub fn sqrt(&self) -> BigReal {
        assert!(
            !self.is_negative(),
            "sqrt of negative value {self:?}"
        );
        BigReal::wrap(self.v.clone().sqrt())
    }

    pub fn ln(&self) -> BigReal {
        assert!(self.is_positive(), "log of non-positive value {self:?}");
        BigReal::wrap(self.v.clone().ln())
    }

    pub fn exp(&self) -> BigReal {
        BigReal::wrap(self.v.clone().exp())
    }

    pub fn sin_cos(&self) -> (BigReal, BigReal) {
        let prec = self.bits();
        let (s, c) = self.v.clone().sin_cos(Float::new(prec));
        (BigReal::wrap(s), BigReal::wrap(c))
    }

    pub fn cos(&self) -> BigReal {
        BigReal::wrap(self.v.clone().cos())
    }

    pub fn sinh_cosh(&self) -> (BigReal, BigReal) {
        let prec = self.bits();
        let (s, c) = self.v.clone().sinh_cosh(Float::new(prec));
        (BigReal::wrap(s), BigReal::wrap(c))
    }

    pub fn tanh(&self) -> BigReal {
        BigReal::wrap(self.v.clone().tanh())
    }

    pub fn atan2(&self, x: &BigReal) -> BigReal {
        self.check(x);
        BigReal::wrap(self.v.clone().atan2(&x.v))
    }

    /// Exponential integral Ei; E1(x) = -Ei(-x) for x > 0.
    pub fn eint(&self) -> BigReal {
        BigReal::wrap(self.v.clone().eint())
    }

    pub fn powi(&self, e: i64) -> BigReal {
        let r = (&self.v).pow(e).complete(self.bits());
        BigReal::wrap(r)
    }

    pub fn square(&self) -> BigReal {
        BigReal::wrap((&self.v * &self.v).complete(self.bits()))
    }

    pub fn recip(&self) -> BigReal {
        assert!(!self.is_zero(), "division by zero");
        BigReal::wrap(self.v.clone().recip())
    }

    pub fn min(&self, other: &BigReal) -> BigReal {
        self.check(other);
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &BigReal) -> BigReal {
        self.check(other);
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.v.to_f64()
    }

    /// Nearest integer as an exact BigInt.
    pub fn round_to_int(&self) -> Int {
        let r = self.v.clone().round();
        let z = r.to_integer().expect("finite value");
        z.to_string().parse::<Int>().unwrap()
    }

    pub fn floor_to_int(&self) -> Int {
        let r = self.v.clone().floor();
        let z = r.to_integer().expect("finite value");
        z.to_string().parse::<Int>().unwrap()
    }

    /// Decimal string with the given number of significant digits.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        format!("{:.*e}", digits as usize - 1, self.v)
    }

    /// log10 of |self|, as f64 (for threshold decisions; -inf if zero).
    pub fn log10_abs_f64(&self) -> f64 {
        if self.v.is_zero() {
            return f64::NEG_INFINITY;
        }
        let a = self.v.clone().abs().log10();
        a.to_f64()
    }

    /// Change precision (rounding); use only at explicit context boundaries.
    pub fn to_context(&self, ctx: &PrecisionContext) -> BigReal {
        let mut f = self.v.clone();
        f.set_prec(ctx.bits());
        BigReal::wrap(f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                self.check(rhs);
                BigReal::wrap((&self.v $op &rhs.v).complete(self.bits()))
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        assert!(!rhs.is_zero(), "division by zero");
        BigReal::wrap((&self.v / &rhs.v).complete(self.bits()))
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap((-&self.v).complete(self.bits()))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.32e}", self.v)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn exact_rational_conversion() {
        let ctx = PrecisionContext::new(50);
        let r = rat(1, 3);
        let x = ctx.real_from_rat(&r);
        let three = ctx.real_from_i64(3);
        let back = &x * &three;
        let err = (&back - &ctx.one()).abs();
        assert!(err < ctx.pow10(-45), "err = {err:?}");
    }

    #[test]
    fn pi_digits() {
        let ctx = PrecisionContext::new(50);
        let s = ctx.pi().to_decimal_string(45);
        assert!(
            s.starts_with("3.14159265358979323846264338327950288419"),
            "got {s}"
        );
    }

    #[test]
    fn e1_against_known_value() {
        // E1(1) = 0.21938393439552027367...
        let ctx = PrecisionContext::new(40);
        let e1 = -&(-&ctx.one()).eint();
        let expect = ctx.real_from_f64(0.21938393439552027);
        assert!((&e1 - &expect).abs() < ctx.pow10(-15));
    }

    #[test]
    #[should_panic(expected = "mixing values")]
    fn context_mixing_panics() {
        let a = PrecisionContext::new(30).one();
        let b = PrecisionContext::new(60).one();
        let _ = &a + &b;
    }
}
