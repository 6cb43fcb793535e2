//! Sturm sequences and exact root counting on the unit circle for
//! reciprocal polynomials via the z = x + 1/x substitution.

use super::unipoly::UniPoly;
use crate::{rint, Error, Rat, Result};
use num_traits::Zero;

/// Sturm chain of a squarefree polynomial (primitive integer normalization
/// at every step to keep coefficients small).
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    // only positive scalings are allowed: sign variations must be preserved
    let mut chain = vec![
        p.primitive_int_signed(),
        p.derivative().primitive_int_signed(),
    ];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        if chain[n - 1].is_constant() {
            return chain;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push((-&r).primitive_int_signed());
    }
}

fn sign_variations(chain: &[UniPoly], x: &Rat) -> usize {
    let mut variations = 0;
    let mut last: Option<bool> = None; // sign as "is positive"
    for q in chain {
        let v = q.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v > Rat::zero();
        if let Some(l) = last {
            if l != pos {
                variations += 1;
            }
        }
        last = Some(pos);
    }
    variations
}

/// Number of distinct real roots of squarefree p in the open interval (a, b).
/// Endpoints must not be roots.
pub fn count_roots_open(p: &UniPoly, a: &Rat, b: &Rat) -> usize {
    assert!(a < b);
    assert!(!p.eval(a).is_zero() && !p.eval(b).is_zero());
    let chain = sturm_chain(p);
    sign_variations(&chain, a) - sign_variations(&chain, b)
}

/// Number of distinct real roots of squarefree p in the closed interval [a, b].
pub fn count_roots_closed(p: &UniPoly, a: &Rat, b: &Rat) -> usize {
    let mut p = p.clone();
    let mut extra = 0;
    for e in [a, b] {
        if p.eval(e).is_zero() {
            extra += 1;
            p = p.div_exact(&UniPoly::from_coeffs(vec![-e.clone(), Rat::from_integer(1.into())]));
        }
    }
    if p.is_constant() {
        return extra;
    }
    extra + count_roots_open(&p, a, b)
}

/// Express a palindromic polynomial of even degree 2m as x^m g(x + 1/x);
/// returns g of degree m. Linear identity, multiplicities carry over:
/// each root z0 of g of multiplicity mu corresponds to the factor
/// (x^2 - z0 x + 1)^mu of d.
fn z_transform(d: &UniPoly) -> UniPoly {
    let n = d.deg();
    assert!(n % 2 == 0);
    let m = n / 2;
    // q_i(z) = x^i + x^{-i}: q_0 = 2, q_1 = z, q_{i+1} = z q_i - q_{i-1}
    let z = UniPoly::var();
    let mut q_prev = UniPoly::constant(rint(2));
    let mut q_cur = z.clone();
    let mut g = UniPoly::constant(d.coeff(m));
    for i in 1..=m {
        g = &g + &q_cur.scale(&d.coeff(m + i));
        let next = &(&z * &q_cur) - &q_prev;
        q_prev = q_cur;
        q_cur = next;
    }
    g
}

/// Exact count (with multiplicity) of roots of a reciprocal polynomial on the
/// unit circle |x| = 1.
///
/// Odd-degree reciprocal polynomials carry a forced root at x = -1, which is
/// peeled off and counted before the z = x + 1/x reduction. Errors with
/// [`Error::NotReciprocal`] when the input (after peeling) is not palindromic
/// or vanishes at 0.
pub fn sturm_count_on_circle(d: &UniPoly) -> Result<usize> {
    if d.is_zero() {
        return Err(Error::NotReciprocal("zero polynomial".into()));
    }
    if d.coeff(0).is_zero() {
        return Err(Error::NotReciprocal("vanishes at x = 0".into()));
    }
    let mut d = d.clone();
    let mut count = 0usize;
    if d.deg() % 2 == 1 {
        let xplus1 = UniPoly::from_i64(&[1, 1]);
        match d.try_div_exact(&xplus1) {
            Some(q) => {
                d = q;
                count += 1;
            }
            None => {
                return Err(Error::NotReciprocal(
                    "odd degree without forced root at -1".into(),
                ))
            }
        }
    }
    if d.is_constant() {
        return Ok(count);
    }
    if !d.is_palindromic() {
        return Err(Error::NotReciprocal(format!("{d}")));
    }
    let g = z_transform(&d);
    for (gi, mult) in g.squarefree_decomposition() {
        count += 2 * (mult as usize) * count_roots_closed(&gi, &rint(-2), &rint(2));
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    #[test]
    fn z_transform_roundtrip() {
        // x^4 + 3x^3 + x^2 + 3x + 1 = x^2 (q2 + 3 q1 + 1) with q2 = z^2-2
        let d = UniPoly::from_i64(&[1, 3, 1, 3, 1]);
        let g = z_transform(&d);
        assert_eq!(g, UniPoly::from_i64(&[-1, 3, 1]));
    }

    #[test]
    fn circle_count_trivial() {
        // x^2 + 1: both roots on the circle
        assert_eq!(sturm_count_on_circle(&UniPoly::from_i64(&[1, 0, 1])).unwrap(), 2);
        // x^2 + 3x + 1: real roots off the circle
        assert_eq!(sturm_count_on_circle(&UniPoly::from_i64(&[1, 3, 1])).unwrap(), 0);
        // x^2 - 2x + 1 = (x-1)^2: double root at 1
        assert_eq!(sturm_count_on_circle(&UniPoly::from_i64(&[1, -2, 1])).unwrap(), 2);
        // odd degree: (x+1)(x^2+3x+1)
        let p = &UniPoly::from_i64(&[1, 1]) * &UniPoly::from_i64(&[1, 3, 1]);
        assert_eq!(sturm_count_on_circle(&p).unwrap(), 1);
    }

    #[test]
    fn circle_count_boyd_minus_ten() {
        // D-tilde of the Boyd family at k = -10 has exactly 2 roots on |x|=1
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        let d = q.discriminant_in_y().unwrap();
        let dt = d
            .div_exact(&crate::poly::kx::PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 2, 1])));
        let at = dt.eval_k(&rint(-10));
        assert_eq!(sturm_count_on_circle(&at).unwrap(), 2);
        let at10 = dt.eval_k(&rint(10));
        assert_eq!(sturm_count_on_circle(&at10).unwrap(), 0);
    }

    #[test]
    fn not_reciprocal_error() {
        assert!(sturm_count_on_circle(&UniPoly::from_i64(&[1, 2, 3])).is_err());
        assert!(sturm_count_on_circle(&UniPoly::from_i64(&[0, 1, 1])).is_err());
    }
}
