//! Precision contexts: every numeric value carries the decimal-digit budget
//! that produced it.

use super::real::BigReal;
use crate::Rat;

/// An explicit decimal-digit budget threaded through all numeric operations.
///
/// `decimal_digits` is the reporting / verification precision; internal
/// binary precision carries guard bits on top. The quadrature target is the
/// relative error `10^-(decimal_digits - 5)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrecisionContext {
    decimal_digits: u32,
}

impl PrecisionContext {
    pub fn new(decimal_digits: u32) -> Self {
        assert!(decimal_digits >= 15, "need at least 15 decimal digits");
        PrecisionContext { decimal_digits }
    }

    /// Default working precision: 60 digits to report 50.
    pub fn default_working() -> Self {
        PrecisionContext::new(60)
    }

    pub fn decimal_digits(&self) -> u32 {
        self.decimal_digits
    }

    /// Binary precision: digits * log2(10) plus guard bits.
    pub fn bits(&self) -> u32 {
        (self.decimal_digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
    }

    /// A context with twice the digits (stability checks, internal guards).
    pub fn doubled(&self) -> Self {
        PrecisionContext::new(self.decimal_digits * 2)
    }

    pub fn with_extra_digits(&self, extra: u32) -> Self {
        PrecisionContext::new(self.decimal_digits + extra)
    }

    /// Relative quadrature target 10^-(digits-5).
    pub fn quadrature_target(&self) -> BigReal {
        self.pow10(-(self.decimal_digits as i64 - 5))
    }

    /// Comparison threshold for "verified" relations: 10^-(digits-10).
    pub fn verify_threshold(&self) -> BigReal {
        self.pow10(-(self.decimal_digits as i64 - 10))
    }

    pub fn pow10(&self, e: i64) -> BigReal {
        let ten = self.real_from_i64(10);
        ten.powi(e)
    }

    pub fn real_from_i64(&self, v: i64) -> BigReal {
        BigReal::from_i64(self, v)
    }

    pub fn real_from_f64(&self, v: f64) -> BigReal {
        BigReal::from_f64(self, v)
    }

    pub fn real_from_rat(&self, v: &Rat) -> BigReal {
        BigReal::from_rat(self, v)
    }

    pub fn zero(&self) -> BigReal {
        self.real_from_i64(0)
    }

    pub fn one(&self) -> BigReal {
        self.real_from_i64(1)
    }

    pub fn pi(&self) -> BigReal {
        BigReal::pi(self)
    }

    pub fn euler_gamma(&self) -> BigReal {
        BigReal::euler_gamma(self)
    }
}
