//! Genus-1 quotient models of the curve families: completing the square,
//! the Moebius substitution X = (x+1)/(x-1), and the Jacobian of a quartic.

use super::weierstrass::WModelK;
use crate::poly::{ParamPoly, PolyXK, RatFuncK, UniPoly};
use crate::{rat, rint, Error, Result};

/// Data recovered from a family polynomial: the repeated factor f of D_k, the
/// x^2-valuation marker eps, and the branch polynomial D-tilde.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub genus: u8,
    pub eps: usize,
    pub fpoly: UniPoly,
    pub dtilde: PolyXK,
}

impl QuotientData {
    /// Generic genus of y^2 = h(u): checked at two sample k.
    pub fn quotient_is_genus_one(&self) -> bool {
        if let Ok(model) = quotient_from_data(self) {
            for k in [rat(13, 3), rat(-29, 8)] {
                let h = model.h.eval_k(&k);
                if h.is_zero() {
                    continue;
                }
                let s = h.odd_part();
                if s.is_constant() {
                    return false;
                }
                if (s.deg() - 1) / 2 != 1 {
                    return false;
                }
            }
            return true;
        }
        false
    }
}

/// The sigma-quotient model: h (cubic for genus 2, quartic for genus 3) with
/// coefficients in Q[k], the second quotient h* for genus 2, the Weierstrass
/// model over Q[k], and j(k).
#[derive(Clone, Debug)]
pub struct QuotientModel {
    pub genus: u8,
    pub h: PolyXK,
    pub hstar: Option<PolyXK>,
    pub weierstrass: WModelK,
    pub jfunc: RatFuncK,
}

impl QuotientModel {
    /// Weierstrass model of the second (sigma_2) quotient, genus 2 only.
    pub fn weierstrass_star(&self) -> Option<WModelK> {
        self.hstar.as_ref().map(|h| cubic_to_weierstrass(h))
    }
}

/// Recover (f, eps, D-tilde) from the discriminant of a y-quadratic family.
///
/// Candidates are tried from the largest repeated factor down; the degree of
/// D-tilde decides the genus (5-6 for genus 2, 7-8 for genus 3).
pub fn derive_quotient_data(p: &ParamPoly) -> Result<QuotientData> {
    let delta = p.discriminant_in_y()?;
    if delta.is_zero() {
        return Err(Error::IdenticallyDegenerate);
    }
    let v = delta.x_valuation();
    if v % 2 != 0 {
        return Err(Error::SubstitutionFailure(
            "odd power of x divides the discriminant".into(),
        ));
    }
    let d = delta.div_x_pow(v);
    let x2m1 = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 0, -2, 0, 1])); // (x^2-1)^2
    let xm1 = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, -2, 1])); // (x-1)^2
    let xp1 = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 2, 1])); // (x+1)^2
    let candidates: [(UniPoly, &PolyXK); 3] = [
        (UniPoly::from_i64(&[-1, 0, 1]), &x2m1),
        (UniPoly::from_i64(&[-1, 1]), &xm1),
        (UniPoly::from_i64(&[1, 1]), &xp1),
    ];
    for (f, f2) in &candidates {
        if let Some(dt) = d.try_div_exact(f2) {
            let deg = dt.deg();
            let genus = match deg {
                5 | 6 => 2,
                7 | 8 => 3,
                _ => continue,
            };
            // genus 3 requires antireciprocal f (x - 1 or x^2 - 1)
            if genus == 3 && *f == UniPoly::from_i64(&[1, 1]) {
                continue;
            }
            return Ok(QuotientData {
                genus,
                eps: v / 2,
                fpoly: f.clone(),
                dtilde: dt,
            });
        }
    }
    // no repeated factor: genus-2 first type (f = 1)
    let deg = d.deg();
    if deg == 5 || deg == 6 {
        return Ok(QuotientData {
            genus: 2,
            eps: v / 2,
            fpoly: UniPoly::one(),
            dtilde: d,
        });
    }
    Err(Error::SubstitutionFailure(format!(
        "no quotient structure found (deg D = {deg})"
    )))
}

/// N(X) = sum_i a_i (X+1)^i (X-1)^{2g-i} for D-tilde = sum a_i x^i; the
/// substitution x = (X+1)/(X-1) clears to Y^2 = N(X)/4 = h(X^2).
fn moebius_numerator(dtilde: &PolyXK, two_g: usize) -> PolyXK {
    let xp1 = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 1]));
    let xm1 = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[-1, 1]));
    // powers of (X+1) and (X-1)
    let mut acc = PolyXK::zero();
    for (i, a) in dtilde.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mut term = PolyXK::monomial(a.clone(), 0);
        for _ in 0..i {
            term = &term * &xp1;
        }
        for _ in 0..(two_g - i) {
            term = &term * &xm1;
        }
        acc = &acc + &term;
    }
    acc
}

/// Quotient of the family curve by (x, y) -> (1/x, 1/y).
///
/// Returns Y^2 = h(X^2) data: for genus 2 with f = x - 1 the quotient curve
/// is y^2 = h*(x) = x^3 h(1/x), so h and h* swap roles there.
pub fn quotient_by_sigma(p: &ParamPoly) -> Result<QuotientModel> {
    let data = derive_quotient_data(p)?;
    quotient_from_data(&data)
}

pub fn quotient_from_data(data: &QuotientData) -> Result<QuotientModel> {
    let two_g = if data.genus == 2 { 6 } else { 8 };
    let n = moebius_numerator(&data.dtilde, two_g);
    // h(X^2) = N(X)/4: odd coefficients must vanish
    let mut h_coeffs = Vec::new();
    for (i, c) in n.coeffs().iter().enumerate() {
        if i % 2 == 1 {
            if !c.is_zero() {
                return Err(Error::SubstitutionFailure(
                    "cleared substitution has odd powers of X".into(),
                ));
            }
        } else {
            h_coeffs.push(c.scale(&rat(1, 4)));
        }
    }
    let h0 = PolyXK::from_coeffs(h_coeffs);
    let (h, hstar, weierstrass) = if data.genus == 2 {
        // sigma maps to (-X, -Y) when f = x - 1; the quotient is then h*
        let swap = data.fpoly == UniPoly::from_i64(&[-1, 1]);
        let hs = reverse_to_degree(&h0, 3);
        let (h, hstar) = if swap { (hs, h0) } else { (h0, hs) };
        let w = cubic_to_weierstrass(&h);
        (h, Some(hstar), w)
    } else {
        let w = jacobian_of_quartic(&h0)?;
        (h0, None, w)
    };
    let jfunc = weierstrass.j_invariant()?;
    Ok(QuotientModel {
        genus: data.genus,
        h,
        hstar,
        weierstrass,
        jfunc,
    })
}

/// x^d h(1/x) as a degree-d reversal (d = 3 for the genus-2 quotients).
fn reverse_to_degree(h: &PolyXK, d: usize) -> PolyXK {
    let mut coeffs = vec![UniPoly::zero(); d + 1];
    for (i, c) in h.coeffs().iter().enumerate() {
        coeffs[d - i] = c.clone();
    }
    PolyXK::from_coeffs(coeffs)
}

/// y^2 = c3 u^3 + c2 u^2 + c1 u + c0 rescaled to a Weierstrass model:
/// (c3 y)^2 = (c3 u)^3 + c2 (c3 u)^2 + c1 c3 (c3 u) + c0 c3^2.
pub fn cubic_to_weierstrass(h: &PolyXK) -> WModelK {
    let c0 = h.coeff(0);
    let c1 = h.coeff(1);
    let c2 = h.coeff(2);
    let c3 = h.coeff(3);
    WModelK::short(c2, &c1 * &c3, &c0 * &(&c3 * &c3))
}

/// Jacobian of the quartic y^2 = a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0:
/// y^2 = x^3 + a2 x^2 + (a3 a1 - 4 a4 a0) x - (4 a4 a2 a0 - a3^2 a0 - a4 a1^2).
/// Degenerates gracefully to the cubic rescaling when a4 = 0.
pub fn jacobian_of_quartic(h: &PolyXK) -> Result<WModelK> {
    if h.is_zero() || h.deg() > 4 {
        return Err(Error::DegenerateQuartic);
    }
    let a0 = h.coeff(0);
    let a1 = h.coeff(1);
    let a2 = h.coeff(2);
    let a3 = h.coeff(3);
    let a4 = h.coeff(4);
    let four = |p: &UniPoly| p.scale(&rint(4));
    let c4 = &(&a3 * &a1) - &four(&(&a4 * &a0));
    let c6 = &(&four(&(&a4 * &a2)) * &a0) - &(&(&(&a3 * &a3) * &a0) + &(&a4 * &(&a1 * &a1)));
    Ok(WModelK::short(a2, c4, -&c6))
}

/// Weierstrass model over Q[k] of a genus-1 family given by a y-quadratic
/// polynomial: (2Ay + B)^2 = Delta with Delta / x^{2 eps} a quartic.
pub fn genus1_weierstrass(p: &ParamPoly) -> Result<WModelK> {
    let delta = p.discriminant_in_y()?;
    if delta.is_zero() {
        return Err(Error::IdenticallyDegenerate);
    }
    let v = delta.x_valuation();
    if v % 2 != 0 {
        return Err(Error::SubstitutionFailure(
            "odd power of x divides the discriminant".into(),
        ));
    }
    let q = delta.div_x_pow(v);
    if q.deg() > 4 {
        return Err(Error::SubstitutionFailure(format!(
            "discriminant quartic has degree {} > 4",
            q.deg()
        )));
    }
    jacobian_of_quartic(&q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn boyd() -> ParamPoly {
        parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap()
    }

    #[test]
    fn boyd_quotient_h_coefficients() {
        // h(u) = (k^2+k) u^3 + (-2k^2+5k+4) u^2 + (k^2-5k+8) u + (-k+4)
        let m = quotient_by_sigma(&boyd()).unwrap();
        assert_eq!(m.genus, 2);
        let expect = [
            UniPoly::from_i64(&[4, -1]),
            UniPoly::from_i64(&[8, -5, 1]),
            UniPoly::from_i64(&[4, 5, -2]),
            UniPoly::from_i64(&[0, 1, 1]),
        ];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(&m.h.coeff(i), e, "h coefficient of u^{i}");
        }
        // h* is the coefficient reversal
        let hs = m.hstar.unwrap();
        for i in 0..=3 {
            assert_eq!(hs.coeff(i), m.h.coeff(3 - i));
        }
    }

    #[test]
    fn jacobian_of_simple_quartics() {
        // x^4 + 1 -> y^2 = x^3 - 4x
        let h = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 0, 0, 0, 1]));
        let w = jacobian_of_quartic(&h).unwrap();
        assert!(w.a2.is_zero());
        assert_eq!(w.a4, UniPoly::from_i64(&[-4]));
        assert!(w.a6.is_zero());
        // u^4+2u^3+3u^2+2u+1: a-invariants from the displayed formula
        let h2 = PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 2, 3, 2, 1]));
        let w2 = jacobian_of_quartic(&h2).unwrap();
        assert_eq!(w2.a2, UniPoly::from_i64(&[3]));
        assert_eq!(w2.a4, UniPoly::from_i64(&[0])); // 2*2 - 4*1*1
        assert_eq!((w2.a4.is_zero(), w2.a6.is_zero()), (true, false));
        // a6 = -(4*1*3*1 - 4*1 - 1*4) = -(12 - 4 - 4) = -4
        assert_eq!(w2.a6, UniPoly::from_i64(&[-4]));
    }

    #[test]
    fn boyd_ek_matches_pk_family_j() {
        // E_k of the Boyd family is birational to (x+1)y^2+(x^2+(2-k)x+1)y+(x^2+x)
        let m = quotient_by_sigma(&boyd()).unwrap();
        let pk = parse_poly("(x+1)*y^2 + (x^2 + (2-k)*x + 1)*y + (x^2 + x)").unwrap();
        let w = genus1_weierstrass(&pk).unwrap();
        let j2 = w.j_invariant().unwrap();
        assert_eq!(m.jfunc, j2);
    }

    #[test]
    fn deninger_family_matches_boyd_fk() {
        // F_k (the h* quotient) is birational to Deninger's family
        let m = quotient_by_sigma(&boyd()).unwrap();
        let wstar = m.weierstrass_star().unwrap();
        let jstar = wstar.j_invariant().unwrap();
        let rk = parse_poly("x + 1/x + y + 1/y + (k - 4)").unwrap();
        let w = genus1_weierstrass(&rk).unwrap();
        let j2 = w.j_invariant().unwrap();
        assert_eq!(jstar, j2);
    }

    #[test]
    fn genus3_quotient_is_quartic() {
        // genus 3 type 1: A = 1, B = x^5 + 1, delta = +1
        let s = crate::families::FamilySpec::new(
            3,
            1,
            UniPoly::one(),
            UniPoly::from_i64(&[1, 0, 0, 0, 0, 1]),
            crate::families::Signs::One(1),
            UniPoly::from_i64(&[-1, 1]),
        )
        .unwrap();
        let p = s.instantiate().unwrap();
        let m = quotient_by_sigma(&p).unwrap();
        assert_eq!(m.genus, 3);
        assert_eq!(m.h.deg(), 4);
        // transported points: (X, Y) with X = (x+1)/(x-1) satisfies Y^2 = h(X^2)
        // at rational sample points of y1^2 = D-tilde (x-1)^8 ... checked via
        // the identity N(X) = 4 h(X^2) instead: spot check numerically at x = 3
        let data = derive_quotient_data(&p).unwrap();
        let k = rint(3);
        let dt = data.dtilde.eval_k(&k);
        // x = 3 maps to X = (x+1)/(x-1) = 2 with X - 1 = 1, and
        // h(X^2) = D-tilde(x) (X-1)^8 / 4, so h(4) = D-tilde(3) / 4
        let lhs = m.h.eval_k(&k).eval(&rint(4));
        let rhs = dt.eval(&rint(3)) / crate::rint(4);
        assert_eq!(lhs, rhs);
    }
}
