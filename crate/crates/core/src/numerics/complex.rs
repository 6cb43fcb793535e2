//! Complex arithmetic over BigReal pairs.

use super::context::PrecisionContext;
use super::real::BigReal;
use crate::Rat;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> BigComplex {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal, ctx: &PrecisionContext) -> BigComplex {
        BigComplex {
            re,
            im: ctx.zero(),
        }
    }

    pub fn zero(ctx: &PrecisionContext) -> BigComplex {
        BigComplex {
            re: ctx.zero(),
            im: ctx.zero(),
        }
    }

    pub fn from_rat(ctx: &PrecisionContext, r: &Rat) -> BigComplex {
        BigComplex::from_real(ctx.real_from_rat(r), ctx)
    }

    /// e^{i theta}.
    pub fn unit_circle(theta: &BigReal) -> BigComplex {
        let (s, c) = theta.sin_cos();
        BigComplex { re: c, im: s }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// |z|^2.
    pub fn norm_sq(&self) -> BigReal {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sq().sqrt()
    }

    /// log |z| = log(norm^2) / 2, stable for all nonzero z.
    pub fn ln_abs(&self) -> BigReal {
        let n = self.norm_sq();
        assert!(n.is_positive(), "log of zero");
        n.ln().scale_half()
    }

    pub fn conj(&self) -> BigComplex {
        BigComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn arg(&self) -> BigReal {
        self.im.atan2(&self.re)
    }

    pub fn scale(&self, s: &BigReal) -> BigComplex {
        BigComplex {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    /// Principal square root via the stable half-angle formulas.
    pub fn sqrt(&self) -> BigComplex {
        if self.is_zero() {
            return self.clone();
        }
        let r = self.abs();
        // w = sqrt((r + |re|)/2); then assemble by the sign of re
        let two_inv_num = &r + &self.re.abs();
        let w = two_inv_num.scale_half().sqrt();
        if !self.re.is_negative() {
            // re >= 0: sqrt = w + i*im/(2w)
            let im = &self.im.scale_half() / &w;
            BigComplex { re: w, im }
        } else {
            // re < 0: sqrt = |im|/(2w) + i*sign(im)*w
            let re = &self.im.abs().scale_half() / &w;
            let im = if self.im.is_negative() { -&w } else { w };
            BigComplex { re, im }
        }
    }

    pub fn powi(&self, e: u32) -> BigComplex {
        let ctx_one = BigComplex {
            re: real_one_like(&self.re),
            im: zero_like(&self.re),
        };
        let mut acc = ctx_one;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn zero_like(r: &BigReal) -> BigReal {
    r - r
}

fn real_one_like(r: &BigReal) -> BigReal {
    let z = zero_like(r);
    // exp(0) = 1 at the same precision
    z.exp()
}

impl BigReal {
    /// x/2 exactly.
    pub fn scale_half(&self) -> BigReal {
        BigReal::from_raw(rug::Float::with_val(self.bits(), self.raw() / 2u32))
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let d = rhs.norm_sq();
        assert!(d.is_positive(), "complex division by zero");
        let num = self * &rhs.conj();
        BigComplex {
            re: &num.re / &d,
            im: &num.im / &d,
        }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_squares_back() {
        let ctx = PrecisionContext::new(40);
        for (re, im) in [(3.0, 4.0), (-3.0, 4.0), (-1.0, 0.0), (0.25, -7.5), (-2.0, -0.001)] {
            let z = BigComplex::new(ctx.real_from_f64(re), ctx.real_from_f64(im));
            let s = z.sqrt();
            let sq = &s * &s;
            let err = (&sq - &z).abs();
            assert!(err < ctx.pow10(-30), "sqrt failed for {re}+{im}i: {err:?}");
        }
    }

    #[test]
    fn ln_abs_on_unit_circle() {
        let ctx = PrecisionContext::new(40);
        let theta = &ctx.pi() / &ctx.real_from_i64(7);
        let z = BigComplex::unit_circle(&theta);
        assert!(z.ln_abs().abs() < ctx.pow10(-35));
        assert!((&z.arg() - &theta).abs() < ctx.pow10(-35));
    }
}
