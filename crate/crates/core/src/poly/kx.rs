//! Polynomials in x whose coefficients are exact polynomials in the family
//! parameter k. This is the working ring Q[k][x] for discriminants and
//! quotient-model derivations.

use super::unipoly::UniPoly;
use crate::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of Q[k][x]: `coeffs[i]` is the coefficient of x^i, a polynomial in k.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyXK {
    coeffs: Vec<UniPoly>,
}

impl PolyXK {
    pub fn zero() -> Self {
        PolyXK { coeffs: vec![] }
    }

    pub fn from_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyXK { coeffs }
    }

    /// Lift a k-free polynomial in x.
    pub fn from_unipoly_x(p: &UniPoly) -> Self {
        PolyXK::from_coeffs(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    /// c(k) * x^n.
    pub fn monomial(c: UniPoly, n: usize) -> Self {
        if c.is_zero() {
            return PolyXK::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); n + 1];
        coeffs[n] = c;
        PolyXK { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> UniPoly {
        self.coeffs.last().cloned().unwrap_or_else(UniPoly::zero)
    }

    /// Evaluate x at a rational point, leaving a polynomial in k.
    pub fn eval_x(&self, x: &Rat) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        acc
    }

    /// Specialize k, leaving a polynomial in x.
    pub fn eval_k(&self, k: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(k)).collect())
    }

    /// x^deg p(1/x).
    pub fn reversed(&self) -> PolyXK {
        let mut c = self.coeffs.clone();
        c.reverse();
        PolyXK::from_coeffs(c)
    }

    pub fn is_palindromic(&self) -> bool {
        !self.is_zero() && *self == self.reversed()
    }

    /// Palindromic after stripping the monomial factor x^v (reciprocity in
    /// the Laurent sense).
    pub fn is_laurent_palindromic(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.div_x_pow(self.x_valuation()).is_palindromic()
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// nonzero constant in k (covers the monic x +- 1 and x^2 - 1 cases).
    pub fn divrem(&self, d: &PolyXK) -> (PolyXK, PolyXK) {
        assert!(!d.is_zero());
        let lead = d.leading();
        assert!(
            lead.is_constant(),
            "PolyXK division requires a k-free leading coefficient"
        );
        let lc = lead.coeff(0);
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (PolyXK::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![UniPoly::zero(); rem.len() - dd];
        let inv = Rat::from_integer(1.into()) / lc;
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].scale(&inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i - dd + j] = &rem[i - dd + j] - &t;
            }
            quo[i - dd] = q;
        }
        (PolyXK::from_coeffs(quo), PolyXK::from_coeffs(rem))
    }

    pub fn div_exact(&self, d: &PolyXK) -> PolyXK {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact Q[k][x] division");
        q
    }

    pub fn try_div_exact(&self, d: &PolyXK) -> Option<PolyXK> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Largest power of x dividing the polynomial.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn div_x_pow(&self, v: usize) -> PolyXK {
        assert!(self.x_valuation() >= v);
        PolyXK::from_coeffs(self.coeffs[v..].to_vec())
    }

    /// Maximum degree in k across coefficients.
    pub fn k_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }
}

impl Add for &PolyXK {
    type Output = PolyXK;
    fn add(self, rhs: &PolyXK) -> PolyXK {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyXK::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyXK {
    type Output = PolyXK;
    fn sub(self, rhs: &PolyXK) -> PolyXK {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyXK::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyXK {
    type Output = PolyXK;
    fn mul(self, rhs: &PolyXK) -> PolyXK {
        if self.is_zero() || rhs.is_zero() {
            return PolyXK::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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
        PolyXK::from_coeffs(out)
    }
}

impl Neg for &PolyXK {
    type Output = PolyXK;
    fn neg(self) -> PolyXK {
        PolyXK::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for PolyXK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})*x^{}", crate::poly::print::format_unipoly(c, "k"), i))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rint;

    #[test]
    fn divide_out_square_factor() {
        // (x-1)^2 * (x + k)  == x^3 + (k-2)x^2 + (1-2k)x + k
        let f = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, -2, 1]));
        let g = PolyXK::from_coeffs(vec![UniPoly::from_i64(&[0, 1]), UniPoly::one()]);
        let prod = &f * &g;
        assert_eq!(prod.deg(), 3);
        assert_eq!(prod.div_exact(&f), g);
        let (_, r) = prod.divrem(&PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 1])));
        assert!(!r.is_zero());
    }

    #[test]
    fn eval_both_ways() {
        // p = (k+1) x^2 + 3
        let p = PolyXK::from_coeffs(vec![
            UniPoly::from_i64(&[3]),
            UniPoly::zero(),
            UniPoly::from_i64(&[1, 1]),
        ]);
        assert_eq!(p.eval_k(&rint(2)).coeff(2), rint(3));
        assert_eq!(p.eval_x(&rint(2)), UniPoly::from_i64(&[7, 4]));
    }
}
