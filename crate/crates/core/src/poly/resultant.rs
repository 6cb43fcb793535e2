//! Resultants with respect to y for bivariate polynomials, via fraction-free
//! Bareiss elimination of the Sylvester matrix over Q[x].

use super::parampoly::BivarPoly;
use super::unipoly::UniPoly;

/// Determinant of a square matrix of polynomials, fraction-free Bareiss.
/// All intermediate divisions are exact by the Sylvester identity.
pub fn det_bareiss(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut sign = 1i32;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        // pivot selection: any nonzero entry in column k at row >= k
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// Sylvester matrix of p, q viewed as polynomials in y with Q[x] coefficients.
fn sylvester(p: &BivarPoly, q: &BivarPoly) -> Vec<Vec<UniPoly>> {
    let dp = p.y_degree();
    let dq = q.y_degree();
    let n = dp + dq;
    let mut m = vec![vec![UniPoly::zero(); n]; n];
    for row in 0..dq {
        for (i, c) in (0..=dp).map(|i| (i, p.y_coeff(dp - i))) {
            m[row][row + i] = c;
        }
    }
    for row in 0..dp {
        for (i, c) in (0..=dq).map(|i| (i, q.y_coeff(dq - i))) {
            m[dq + row][row + i] = c;
        }
    }
    m
}

/// Exact resultant of p and q with respect to y, a polynomial in x.
/// Vanishes at x0 exactly when p(x0, .) and q(x0, .) share a root (or both
/// leading coefficients vanish there).
pub fn resultant_y(p: &BivarPoly, q: &BivarPoly) -> UniPoly {
    assert!(p.y_degree() > 0 || q.y_degree() > 0, "resultant needs a y term");
    if p.is_zero() || q.is_zero() {
        return UniPoly::zero();
    }
    det_bareiss(sylvester(p, q))
}

/// Resultant of p and dp/dy: vanishes at branch points in x. Differs from the
/// discriminant by a leading-coefficient factor, which is irrelevant for
/// locating roots.
pub fn disc_resultant_y(p: &BivarPoly) -> UniPoly {
    resultant_y(p, &p.dy())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::rint;
    use num_traits::Zero;

    fn at0(text: &str) -> BivarPoly {
        parse_poly(text).unwrap().at_k(&rint(0))
    }

    #[test]
    fn simple_resultant() {
        // res_y(y - x, y - 1) = 1 - x up to sign
        let r = resultant_y(&at0("y - x"), &at0("y - 1"));
        let expect = UniPoly::from_i64(&[1, -1]);
        assert!(r == expect || r == -&expect);
    }

    #[test]
    fn hand_expanded_4x4() {
        // res_y(y^2 - x, x y^2 - 1) = (x^2 - 1)^2 up to a unit
        let r = resultant_y(&at0("y^2 - x"), &at0("x*y^2 - 1"));
        let expect = UniPoly::from_i64(&[1, 0, -2, 0, 1]);
        let ratio_num = r.leading();
        let scaled = expect.scale(&ratio_num);
        assert_eq!(r, scaled, "r = {r}");
    }

    #[test]
    fn resultant_detects_common_roots() {
        // p = (y - x)(y + 1), q = (y - x)(y - 2): common root y = x for all x
        let p = at0("(y - x)*(y + 1)");
        let q = at0("(y - x)*(y - 2)");
        let r = resultant_y(&p, &q);
        assert!(r.is_zero());
    }

    #[test]
    fn vanishes_exactly_at_shared_roots() {
        // p = y - x^2, q = y - 4: share a root iff x^2 = 4
        let r = resultant_y(&at0("y - x^2"), &at0("y - 4"));
        assert_eq!(r.eval(&rint(2)), rint(0));
        assert_eq!(r.eval(&rint(-2)), rint(0));
        assert!(!r.eval(&rint(1)).is_zero());
    }
}
