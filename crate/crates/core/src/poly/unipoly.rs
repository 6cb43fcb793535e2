//! Dense univariate polynomials over the exact rationals.

use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate polynomial with exact rational coefficients, ascending degree.
/// The coefficient vector never has a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// Monomial c x^n.
    pub fn monomial(c: Rat, n: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        UniPoly { coeffs }
    }

    /// x
    pub fn var() -> Self {
        UniPoly::monomial(Rat::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| crate::rint(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 for constants; panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rat {
        self.eval(&crate::rint(x))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from(Int::from(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// x^n p(1/x) for n = deg p (coefficient reversal). Zero maps to zero.
    pub fn reversed(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        UniPoly::from_coeffs(c)
    }

    /// True if x^deg p(1/x) == p (palindromic coefficients).
    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && *self == self.reversed()
    }

    /// p(q(x)) by Horner over polynomials.
    pub fn compose(&self, q: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// p(x + c) via repeated synthetic (Taylor) shift.
    pub fn shift(&self, c: &Rat) -> UniPoly {
        if self.is_zero() || c.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut a = self.coeffs.clone();
        // Taylor shift: repeatedly apply Horner with x -> x + c
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * c;
                a[j] = &a[j] + &t;
            }
        }
        UniPoly::from_coeffs(a)
    }

    /// p(c x) for a rational scale of the variable.
    pub fn scale_var(&self, c: &Rat) -> UniPoly {
        let mut pow = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pow;
                pow = &pow * c;
                v
            })
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        let lead = d.leading();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i - dd + j] = &rem[i - dd + j] - &t;
            }
            quo[i - dd] = q;
        }
        (UniPoly::from_coeffs(quo), UniPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Try exact division, None if the remainder is nonzero.
    pub fn try_div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        self.scale(&(Rat::one() / lead))
    }

    /// Scale by a positive rational to integer coefficients with content 1
    /// (sign of the polynomial preserved).
    pub fn primitive_int_signed(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = Int::zero();
        for v in &ints {
            g = num_integer::gcd(g, v.clone());
        }
        UniPoly::from_coeffs(ints.iter().map(|v| Rat::from(v / &g)).collect())
    }

    /// Scale to integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_int(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = Int::zero();
        for v in &ints {
            g = num_integer::gcd(g, v.clone());
        }
        let sign = if ints.last().unwrap().is_negative() {
            -Int::one()
        } else {
            Int::one()
        };
        let g = g * sign;
        UniPoly::from_coeffs(ints.iter().map(|v| Rat::from(v / &g)).collect())
    }

    /// Product of the irreducible factors of odd multiplicity: the squarefree
    /// S with p = S * T^2 up to a constant. This is the defining polynomial
    /// of the hyperelliptic curve y^2 = p after absorbing square factors.
    pub fn odd_part(&self) -> UniPoly {
        assert!(!self.is_zero());
        let mut acc = UniPoly::one();
        for (g, m) in self.squarefree_decomposition() {
            if m % 2 == 1 {
                acc = &acc * &g;
            }
        }
        acc
    }

    /// p / gcd(p, p'): same roots without multiplicity.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() || self.deg() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.deg() == 0 {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Yun squarefree decomposition: returns (g_i, m_i) with p = lead * prod g_i^{m_i},
    /// the g_i squarefree, pairwise coprime, monic.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        assert!(!self.is_zero());
        let p = self.monic();
        if p.deg() == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.div_exact(&a0);
        let mut d = &dp.div_exact(&a0) - &b.derivative();
        let mut i = 1u32;
        while b.deg() > 0 {
            let g = b.gcd(&d);
            if g.deg() > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g);
            let c = d.div_exact(&g);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Resultant of self and other via the subresultant-style PRS over Q.
    pub fn resultant(&self, other: &UniPoly) -> Rat {
        let mut a = self.clone();
        let mut b = other.clone();
        if a.is_zero() || b.is_zero() {
            return Rat::zero();
        }
        let mut sign = Rat::one();
        let mut res = Rat::one();
        while b.deg() > 0 {
            let (da, db) = (a.deg(), b.deg());
            if da < db {
                std::mem::swap(&mut a, &mut b);
                if (da & 1) == 1 && (db & 1) == 1 {
                    sign = -sign;
                }
                continue;
            }
            let (_, r) = a.divrem(&b);
            if r.is_zero() {
                return Rat::zero();
            }
            // res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b, r)
            let lb = b.leading();
            res = res * pow_rat(&lb, (da - r.degree().map_or(0, |d| d)) as u32);
            if (da & 1) == 1 && (db & 1) == 1 {
                sign = -sign;
            }
            a = b;
            b = r;
        }
        // b is a nonzero constant: res(a, c) = c^deg a
        res = res * pow_rat(&b.coeff(0), a.deg() as u32);
        res * sign
    }

    /// Discriminant: (-1)^{n(n-1)/2} res(p, p') / lc(p).
    pub fn discriminant(&self) -> Rat {
        let n = self.deg();
        let r = self.resultant(&self.derivative());
        let s = if (n * (n - 1) / 2) % 2 == 1 {
            -Rat::one()
        } else {
            Rat::one()
        };
        s * r / self.leading()
    }

    /// Cauchy root bound: all complex roots have |z| <= 1 + max |a_i / a_n|.
    pub fn cauchy_bound_f64(&self) -> f64 {
        let lead = rat_abs_f64(&self.leading());
        let mut m: f64 = 0.0;
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            m = m.max(rat_abs_f64(c) / lead);
        }
        1.0 + m
    }
}

fn pow_rat(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

fn rat_abs_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().map(f64::abs).unwrap_or(f64::MAX)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                out[i + j] = &out[i + j] + &t;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::poly::print::format_unipoly(self, "x"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::poly::print::format_unipoly(self, "x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rint};

    fn p(v: &[i64]) -> UniPoly {
        UniPoly::from_i64(v)
    }

    #[test]
    fn basic_arithmetic() {
        let a = p(&[1, 2, 1]); // (x+1)^2
        let b = p(&[1, 1]);
        assert_eq!(&b * &b, a);
        assert_eq!(a.div_exact(&b), b);
        let (q, r) = p(&[1, 0, 0, 1]).divrem(&p(&[1, 1]));
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn shift_and_compose() {
        // (x-1)^4 expanded
        let q = p(&[0, 0, 0, 0, 1]).shift(&rint(-1));
        assert_eq!(q, p(&[1, -4, 6, -4, 1]));
        let c = p(&[0, 1]).compose(&p(&[-1, 1]));
        assert_eq!(c, p(&[-1, 1]));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = &p(&[1, 1]).pow(2) * &p(&[-2, 1]);
        let g = a.gcd(&a.derivative());
        assert_eq!(g, p(&[1, 1]).monic());
        assert_eq!(a.squarefree_part(), &p(&[1, 1]) * &p(&[-2, 1]));
        let dec = a.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[-2, 1]), 1));
        assert_eq!(dec[1], (p(&[1, 1]), 2));
    }

    #[test]
    fn resultant_and_discriminant() {
        // res(x^2 - 1, x - 2) = (2^2 - 1) = 3
        let r = p(&[-1, 0, 1]).resultant(&p(&[-2, 1]));
        assert_eq!(r, rint(3));
        // disc(x^2 + bx + c) = b^2 - 4c
        let d = p(&[5, 3, 1]).discriminant();
        assert_eq!(d, rint(9 - 20));
        // disc(ax^2+bx+c) scales: a=2,b=1,c=-1 -> 1+8 = 9... disc = b^2-4ac = 9
        let d2 = p(&[-1, 1, 2]).discriminant();
        assert_eq!(d2, rint(9));
    }

    #[test]
    fn palindromic_reversal() {
        assert!(p(&[1, 3, 1]).is_palindromic());
        assert!(!p(&[1, 3, 2]).is_palindromic());
        assert_eq!(p(&[1, 2, 3]).reversed(), p(&[3, 2, 1]));
    }

    #[test]
    fn scale_var_works() {
        let q = p(&[1, 1, 1]).scale_var(&rat(1, 2));
        assert_eq!(q, UniPoly::from_coeffs(vec![rint(1), rat(1, 2), rat(1, 4)]));
    }
}
