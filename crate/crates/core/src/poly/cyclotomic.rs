//! Cyclotomic polynomials and the roots-of-unity test used for temperedness.

use super::unipoly::UniPoly;
use crate::Rat;
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::sync::Mutex;

static CACHE: Lazy<Mutex<Vec<Option<UniPoly>>>> = Lazy::new(|| Mutex::new(vec![None; 2]));

/// The d-th cyclotomic polynomial, computed by exact division of x^d - 1.
pub fn cyclotomic(d: usize) -> UniPoly {
    assert!(d >= 1);
    {
        let cache = CACHE.lock().unwrap();
        if let Some(Some(p)) = cache.get(d) {
            return p.clone();
        }
    }
    let mut num = UniPoly::monomial(Rat::from_integer(1.into()), d);
    num = &num - &UniPoly::one();
    let mut quo = num;
    for e in 1..d {
        if d % e == 0 {
            quo = quo.div_exact(&cyclotomic(e));
        }
    }
    let mut cache = CACHE.lock().unwrap();
    if cache.len() <= d {
        cache.resize(d + 1, None);
    }
    cache[d] = Some(quo.clone());
    quo
}

/// Euler phi.
pub fn phi(d: usize) -> usize {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// True iff every root of p is a root of unity (or p is a nonzero constant
/// times a power of the variable). Decided exactly by peeling off x and
/// dividing by cyclotomic factors.
pub fn roots_all_roots_of_unity(p: &UniPoly) -> bool {
    if p.is_zero() {
        return false;
    }
    // strip x^v
    let mut coeffs = p.coeffs().to_vec();
    let v = coeffs.iter().take_while(|c| c.is_zero()).count();
    coeffs.drain(..v);
    let mut q = UniPoly::from_coeffs(coeffs);
    'outer: while q.deg() > 0 {
        let deg = q.deg();
        // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2 deg^2
        let dmax = 2 * deg * deg + 2;
        for d in 1..=dmax {
            if phi(d) <= deg {
                if let Some(next) = q.try_div_exact(&cyclotomic(d)) {
                    q = next;
                    continue 'outer;
                }
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), UniPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), UniPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3), UniPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), UniPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), UniPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn unity_test() {
        // (x^2+x+1)(x+1)^2 x^3: all roots of unity
        let p = &(&cyclotomic(3) * &cyclotomic(2).pow(2)) * &UniPoly::monomial(crate::rint(2), 3);
        assert!(roots_all_roots_of_unity(&p));
        // x + 2: root -2
        assert!(!roots_all_roots_of_unity(&UniPoly::from_i64(&[2, 1])));
        // x^2 - 2
        assert!(!roots_all_roots_of_unity(&UniPoly::from_i64(&[-2, 0, 1])));
        // constants are fine
        assert!(roots_all_roots_of_unity(&UniPoly::from_i64(&[5])));
    }
}
