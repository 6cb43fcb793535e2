//! Bivariate polynomials in (x, y) with coefficients in Q[k] — the carrier
//! for every one-parameter family in the search.

use super::kx::PolyXK;
use super::unipoly::UniPoly;
use crate::{Error, Rat, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Map from (x-exponent, y-exponent) to a coefficient polynomial in k.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<(u32, u32), UniPoly>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), UniPoly)>) -> Self {
        let mut map: BTreeMap<(u32, u32), UniPoly> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(UniPoly::zero);
            *entry = &*entry + &c;
        }
        map.retain(|_, c| !c.is_zero());
        ParamPoly { terms: map }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), UniPoly> {
        &self.terms
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn x_valuation(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).min().unwrap_or(0)
    }

    pub fn y_valuation(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).min().unwrap_or(0)
    }

    /// Maximum degree in k over all coefficients.
    pub fn k_degree(&self) -> usize {
        self.terms
            .values()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    /// Exponent support (for the Newton polygon).
    pub fn support(&self) -> Vec<(i64, i64)> {
        self.terms.keys().map(|&(i, j)| (i as i64, j as i64)).collect()
    }

    /// Coefficient of y^j as an element of Q[k][x].
    pub fn y_coeff(&self, j: u32) -> PolyXK {
        let mut coeffs: Vec<UniPoly> = vec![];
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                if coeffs.len() <= i as usize {
                    coeffs.resize(i as usize + 1, UniPoly::zero());
                }
                coeffs[i as usize] = c.clone();
            }
        }
        PolyXK::from_coeffs(coeffs)
    }

    pub fn from_y_coeffs(ycoeffs: &[PolyXK]) -> Self {
        let mut terms = BTreeMap::new();
        for (j, p) in ycoeffs.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((i as u32, j as u32), c.clone());
                }
            }
        }
        ParamPoly { terms }
    }

    /// Specialize k to a rational value.
    pub fn at_k(&self, k: &Rat) -> BivarPoly {
        let dy = self.y_degree();
        let mut ycoeffs = vec![UniPoly::zero(); dy as usize + 1];
        for j in 0..=dy {
            ycoeffs[j as usize] = self.y_coeff(j).eval_k(k);
        }
        BivarPoly::from_y_coeffs(ycoeffs)
    }

    /// Substitute x -> x + c.
    pub fn shift_x(&self, c: &Rat) -> ParamPoly {
        let dy = self.y_degree();
        let mut ycoeffs = Vec::new();
        for j in 0..=dy {
            let p = self.y_coeff(j);
            // Taylor shift on the x-variable with Q[k] coefficients
            let n = p.coeffs().len();
            let mut a: Vec<UniPoly> = p.coeffs().to_vec();
            if n > 0 && !c.is_zero() {
                for i in 0..n.saturating_sub(1) {
                    for jj in (i..n - 1).rev() {
                        let t = a[jj + 1].scale(c);
                        a[jj] = &a[jj] + &t;
                    }
                }
            }
            ycoeffs.push(PolyXK::from_coeffs(a));
        }
        ParamPoly::from_y_coeffs(&ycoeffs)
    }

    /// Substitute x -> -x (used by the canonicalization remarks).
    pub fn negate_x(&self) -> ParamPoly {
        ParamPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            let c = if i % 2 == 1 { -c } else { c.clone() };
            ((i, j), c)
        }))
    }

    /// Substitute y -> -y.
    pub fn negate_y(&self) -> ParamPoly {
        ParamPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            let c = if j % 2 == 1 { -c } else { c.clone() };
            ((i, j), c)
        }))
    }

    /// Substitute k -> -k.
    pub fn negate_k(&self) -> ParamPoly {
        ParamPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            let flipped = UniPoly::from_coeffs(
                c.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(d, v)| if d % 2 == 1 { -v } else { v.clone() })
                    .collect(),
            );
            ((i, j), flipped)
        }))
    }

    pub fn swap_xy(&self) -> ParamPoly {
        ParamPoly::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    /// x^degx y^degy P(1/x, 1/y).
    pub fn reversed(&self) -> ParamPoly {
        let (dx, dy) = (self.x_degree(), self.y_degree());
        ParamPoly::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), c)| ((dx - i, dy - j), c.clone())),
        )
    }

    /// Divide out the largest common monomial factor x^a y^b.
    pub fn strip_monomial(&self) -> ParamPoly {
        if self.is_zero() {
            return self.clone();
        }
        let (vx, vy) = (self.x_valuation(), self.y_valuation());
        ParamPoly::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), c)| ((i - vx, j - vy), c.clone())),
        )
    }

    /// True iff P(x,y) / P(1/x,1/y) is a monomial identically in k.
    pub fn is_reciprocal(&self) -> bool {
        assert!(!self.is_zero(), "reciprocity of the zero polynomial");
        self.strip_monomial() == self.reversed().strip_monomial()
    }

    /// B_k(x)^2 - 4 A(x) C(x) for a y-quadratic, exact in Q[k][x].
    pub fn discriminant_in_y(&self) -> Result<PolyXK> {
        if self.y_degree() != 2 {
            return Err(Error::WrongDegree {
                expected: 2,
                found: self.y_degree() as usize,
            });
        }
        let a = self.y_coeff(2);
        let b = self.y_coeff(1);
        let c = self.y_coeff(0);
        let four = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[4]));
        Ok(&(&b * &b) - &(&four * &(&a * &c)))
    }

    /// Evaluate at rational (x, y, k); mostly for tests.
    pub fn eval(&self, x: &Rat, y: &Rat, k: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            acc += c.eval(k) * pow(x, i) * pow(y, j);
        }
        acc
    }
}

fn pow(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::from_integer(1.into());
    for _ in 0..e {
        acc *= r;
    }
    acc
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        ParamPoly::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e, c.clone()))
                .chain(rhs.terms.iter().map(|(&e, c)| (e, c.clone()))),
        )
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self + &(-rhs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, -c)))
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut terms: Vec<((u32, u32), UniPoly)> = Vec::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                terms.push(((i1 + i2, j1 + j2), c1 * c2));
            }
        }
        ParamPoly::from_terms(terms)
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::poly::print::format_parampoly(self))
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::poly::print::format_parampoly(self))
    }
}

/// A bivariate polynomial at a fixed parameter value: coefficient of y^j is
/// a rational polynomial in x.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarPoly {
    ycoeffs: Vec<UniPoly>,
}

impl BivarPoly {
    pub fn from_y_coeffs(mut ycoeffs: Vec<UniPoly>) -> Self {
        while ycoeffs.last().map_or(false, |c| c.is_zero()) {
            ycoeffs.pop();
        }
        BivarPoly { ycoeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn y_degree(&self) -> usize {
        self.ycoeffs.len().saturating_sub(1)
    }

    pub fn x_degree(&self) -> usize {
        self.ycoeffs
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn y_coeff(&self, j: usize) -> UniPoly {
        self.ycoeffs.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn y_coeffs(&self) -> &[UniPoly] {
        &self.ycoeffs
    }

    /// Leading coefficient in y, a polynomial in x.
    pub fn leading_y(&self) -> UniPoly {
        self.ycoeffs.last().cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn to_parampoly(&self) -> ParamPoly {
        ParamPoly::from_y_coeffs(
            &self
                .ycoeffs
                .iter()
                .map(PolyXK::from_unipoly_x)
                .collect::<Vec<_>>(),
        )
    }

    /// x^dx y^dy P(1/x, 1/y), as a polynomial.
    pub fn reversed(&self) -> BivarPoly {
        self.to_parampoly().reversed().at_k(&Rat::zero())
    }

    /// Derivative with respect to y.
    pub fn dy(&self) -> BivarPoly {
        if self.ycoeffs.len() <= 1 {
            return BivarPoly::from_y_coeffs(vec![]);
        }
        BivarPoly::from_y_coeffs(
            self.ycoeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&crate::rint(i as i64 + 1)))
                .collect(),
        )
    }

    /// Evaluate y-coefficients at fixed rational x, giving a poly in y.
    pub fn eval_x(&self, x: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.ycoeffs.iter().map(|c| c.eval(x)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::{rat, rint};

    #[test]
    fn boyd_family_is_reciprocal() {
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        assert!(q.is_reciprocal());
        let shifted = q.shift_x(&rint(-1));
        assert!(!shifted.is_reciprocal());
        // x*y is reciprocal: quotient is x^2 y^2
        let m = parse_poly("x*y").unwrap();
        assert!(m.is_reciprocal());
    }

    #[test]
    fn discriminant_of_boyd_family() {
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        let d = q.discriminant_in_y().unwrap();
        // D = (x+1)^2 * (x^6 + (2k-2)x^5 + (k^2+3)x^4 + (2k^2-4)x^3 + (k^2+3)x^2 + (2k-2)x + 1)
        let f2 = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 2, 1]));
        let dtilde = d.div_exact(&f2);
        let expect = parse_poly(
            "x^6 + (2*k-2)*x^5 + (k^2+3)*x^4 + (2*k^2-4)*x^3 + (k^2+3)*x^2 + (2*k-2)*x + 1",
        )
        .unwrap()
        .y_coeff(0);
        assert_eq!(dtilde, expect);
    }

    #[test]
    fn wrong_degree_error() {
        let p = parse_poly("y^3 + x").unwrap();
        assert!(p.discriminant_in_y().is_err());
    }

    #[test]
    fn trivial_discriminant() {
        // y^2 - x -> 4x
        let p = parse_poly("y^2 - x").unwrap();
        let d = p.discriminant_in_y().unwrap();
        assert_eq!(d.eval_k(&rint(0)), UniPoly::from_i64(&[0, 4]));
    }

    #[test]
    fn shift_eval_consistency() {
        let p = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        let s = p.shift_x(&rint(-1));
        let (x, y, k) = (rat(3, 2), rat(-5, 7), rint(4));
        let lhs = s.eval(&x, &y, &k);
        let rhs = p.eval(&(&x - &rint(1)), &y, &k);
        assert_eq!(lhs, rhs);
    }
}
