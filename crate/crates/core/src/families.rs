//! Construction and validation of the one-parameter families of polynomials
//! defining genus 2 and genus 3 curves, the 14-family catalogue, and exact
//! branch-point distributions.

use crate::numerics::{classify_unit_circle, isolate_roots, PrecisionContext};
use crate::poly::cyclotomic::roots_all_roots_of_unity;
use crate::poly::{is_tempered, parse_poly, ParamPoly, PolyXK, UniPoly};
use crate::{rat, rint, Error, Rat, Result};
use num_traits::Signed;

/// The three B_k shapes per genus, from the head of the construction
/// sections. `signs` carries delta for the one-sign types and
/// (delta1, delta2) for the genus-3 two-sign types.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub genus: u8,
    pub ftype: u8,
    pub a: UniPoly,
    pub b: UniPoly,
    pub signs: Signs,
    pub fpoly: UniPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Signs {
    One(i8),
    Two(i8, i8),
}

impl Signs {
    fn delta(&self) -> Result<i64> {
        match self {
            Signs::One(d) if *d == 1 || *d == -1 => Ok(*d as i64),
            _ => Err(Error::SpecViolation {
                clause: "expected a single sign delta = +-1".into(),
            }),
        }
    }
    fn deltas(&self) -> Result<(i64, i64)> {
        match self {
            Signs::Two(d1, d2) if d1.abs() == 1 && d2.abs() == 1 => Ok((*d1 as i64, *d2 as i64)),
            _ => Err(Error::SpecViolation {
                clause: "expected a sign pair (delta1, delta2)".into(),
            }),
        }
    }
}

/// Branch points of y^2 = D-tilde(x) relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchDistribution {
    pub outside: usize,
    pub on_circle: usize,
    pub inside: usize,
}

fn viol(clause: impl Into<String>) -> Error {
    Error::SpecViolation {
        clause: clause.into(),
    }
}

impl FamilySpec {
    pub fn new(
        genus: u8,
        ftype: u8,
        a: UniPoly,
        b: UniPoly,
        signs: Signs,
        fpoly: UniPoly,
    ) -> Result<FamilySpec> {
        let spec = FamilySpec {
            genus,
            ftype,
            a,
            b,
            signs,
            fpoly,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The degree bound d with C(x) = x^d A(1/x).
    pub fn d(&self) -> usize {
        match (self.genus, self.ftype) {
            (2, 1) => 3,
            (2, 2) => 4,
            (2, 3) => 6,
            (3, 1) => 5,
            (3, 2) => 6,
            (3, 3) => 8,
            _ => unreachable!(),
        }
    }

    fn validate(&self) -> Result<()> {
        let a = &self.a;
        if a.is_zero() {
            return Err(viol("A(x) must be nonzero"));
        }
        if !roots_all_roots_of_unity(a) {
            return Err(viol("A(x) must be 1 or a product of cyclotomic polynomials"));
        }
        if a.is_constant() && a.coeff(0).abs() != Rat::from_integer(1.into()) {
            return Err(viol("constant A must be +-1"));
        }
        if !matches!((self.genus, self.ftype), (2 | 3, 1..=3)) {
            return Err(viol("genus must be 2 or 3 and type 1, 2 or 3"));
        }
        let d = self.d();
        let dega = a.deg();
        if dega > d {
            return Err(viol(format!("deg A <= {d}")));
        }
        let x_minus_1 = UniPoly::from_i64(&[-1, 1]);
        let x_plus_1 = UniPoly::from_i64(&[1, 1]);
        let anti = *a == -&a.reversed();
        let recip = a.is_palindromic();
        match (self.genus, self.ftype) {
            (2, 1) => {
                if !(recip || anti) {
                    return Err(viol("A must be reciprocal or antireciprocal"));
                }
                if !self.fpoly.is_one() {
                    return Err(viol("first type uses f(x) = 1"));
                }
                if a.eval(&rint(-1)) == rint(0) {
                    return Err(viol("x + 1 must not divide A"));
                }
                if self.b.is_zero() {
                    if !(dega == 2 || dega == 3) {
                        return Err(viol("B = 0 needs deg A in {2, 3}"));
                    }
                } else if self.b == UniPoly::from_i64(&[1, 0, 0, 1]) {
                    if dega > 2 {
                        return Err(viol("B = x^3 + 1 needs deg A in {0, 1, 2}"));
                    }
                } else {
                    return Err(viol("first type needs B in {0, x^3 + 1}"));
                }
                self.signs.delta()?;
            }
            (2, 2) => {
                if !recip {
                    return Err(viol("A must be reciprocal for the second type"));
                }
                if self.fpoly != x_minus_1 && self.fpoly != x_plus_1 {
                    return Err(viol("second type needs f(x) = x - 1 or x + 1"));
                }
                if dega % 2 == 1 && self.fpoly != x_minus_1 {
                    return Err(viol("odd deg A forces f(x) = x - 1"));
                }
                if a.eval(&self.fpoly_root()) == rint(0) {
                    return Err(viol("f must not divide A"));
                }
                let ok = if self.b.is_zero() {
                    dega == 3 || dega == 4
                } else if self.b == UniPoly::from_i64(&[1, 0, 0, 0, 1]) {
                    dega <= 4
                } else if self.b == UniPoly::from_i64(&[2, 0, 0, 0, 2]) {
                    dega == 4
                } else {
                    return Err(viol("second type needs B in {0, x^4+1, 2x^4+2}"));
                };
                if !ok {
                    return Err(viol("deg A outside the bound for this B"));
                }
                self.signs.delta()?;
            }
            (2, 3) => {
                if !recip {
                    return Err(viol("A must be reciprocal for the third type"));
                }
                if dega != 6 {
                    return Err(viol("third type needs deg A = 6"));
                }
                if self.b != UniPoly::from_i64(&[2, 0, 0, 0, 0, 0, 2]) {
                    return Err(viol("third type needs B = 2x^6 + 2"));
                }
                if self.fpoly != x_minus_1 && self.fpoly != x_plus_1 {
                    return Err(viol("third type needs f(x) = x - 1 or x + 1"));
                }
                if a.eval(&self.fpoly_root()) == rint(0) {
                    return Err(viol("f must not divide A"));
                }
                self.signs.delta()?;
            }
            (3, 1) => {
                if !recip || dega % 2 == 1 {
                    return Err(viol("A must be reciprocal of even degree"));
                }
                if self.fpoly != x_minus_1 {
                    return Err(viol("genus 3 first type uses f(x) = x - 1"));
                }
                if a.eval(&rint(-1)) == rint(0) {
                    return Err(viol("x + 1 must not divide A"));
                }
                if self.b.is_zero() {
                    if dega != 4 {
                        return Err(viol("B = 0 needs deg A = 4"));
                    }
                } else if self.b == UniPoly::from_i64(&[1, 0, 0, 0, 0, 1]) {
                    if dega > 4 {
                        return Err(viol("B = x^5 + 1 needs deg A in {0, 2, 4}"));
                    }
                } else {
                    return Err(viol("genus 3 first type needs B in {0, x^5 + 1}"));
                }
                self.signs.delta()?;
            }
            (3, 2) => {
                if !recip || dega % 2 == 1 {
                    return Err(viol("A must be reciprocal of even degree"));
                }
                if self.fpoly != UniPoly::from_i64(&[-1, 0, 1]) {
                    return Err(viol("genus 3 second type uses f(x) = x^2 - 1"));
                }
                if a.eval(&rint(1)) == rint(0) || a.eval(&rint(-1)) == rint(0) {
                    return Err(viol("A(+-1) must be nonzero"));
                }
                let two66 = UniPoly::from_i64(&[2, 0, 0, 0, 0, 0, 2]);
                let one66 = UniPoly::from_i64(&[1, 0, 0, 0, 0, 0, 1]);
                let ok = if self.b.is_zero() || self.b == two66 {
                    dega == 6
                } else if self.b == one66 {
                    dega % 2 == 0 && dega <= 6
                } else {
                    return Err(viol("genus 3 second type needs B in {0, x^6+1, 2x^6+2}"));
                };
                if !ok {
                    return Err(viol("deg A outside the bound for this B"));
                }
                self.signs.deltas()?;
            }
            (3, 3) => {
                if !recip || dega != 8 {
                    return Err(viol("third type needs reciprocal A with deg A = 8"));
                }
                if self.fpoly != UniPoly::from_i64(&[-1, 0, 1]) {
                    return Err(viol("genus 3 third type uses f(x) = x^2 - 1"));
                }
                if a.eval(&rint(1)) == rint(0) || a.eval(&rint(-1)) == rint(0) {
                    return Err(viol("A(+-1) must be nonzero"));
                }
                if self.b != UniPoly::from_i64(&[2, 0, 0, 0, 0, 0, 0, 0, 2]) {
                    return Err(viol("genus 3 third type needs B = 2x^8 + 2"));
                }
                self.signs.deltas()?;
            }
            _ => unreachable!(),
        }
        Ok(())
    }

    /// The root of fpoly used by the "f does not divide A" checks
    /// (only meaningful for linear f).
    fn fpoly_root(&self) -> Rat {
        // f = x - 1 -> root 1; f = x + 1 -> root -1
        -self.fpoly.coeff(0)
    }

    /// f(0) for linear f.
    pub fn f0(&self) -> i64 {
        if self.fpoly.coeff(0) == rint(-1) {
            -1
        } else {
            1
        }
    }

    /// Build P_k = A y^2 + B_k y + C with the construction's closed forms for
    /// l (and m) substituted.
    pub fn instantiate(&self) -> Result<ParamPoly> {
        self.validate()?;
        let d = self.d();
        let a = &self.a;
        let a1 = a.eval(&rint(1));
        let am1 = a.eval(&rint(-1));
        let b1 = self.b.eval(&rint(1));
        let k = UniPoly::var(); // the parameter k as a polynomial in k
        let kc = UniPoly::constant;
        // B_k as a Q[k][x] polynomial
        let mut bk: Vec<UniPoly> = vec![UniPoly::zero(); d + 1];
        for (i, c) in self.b.coeffs().iter().enumerate() {
            bk[i] = &bk[i] + &UniPoly::constant(c.clone());
        }
        match (self.genus, self.ftype) {
            (2, 1) => {
                // B + k x^2 + k x
                bk[2] = &bk[2] + &k;
                bk[1] = &bk[1] + &k;
            }
            (2, 2) => {
                // B + k(x^3 + x) + l x^2, l = 2 f(0) k - B(1) + delta 2 A(-f(0))
                let delta = self.signs.delta()?;
                let f0 = self.f0();
                let a_mf0 = a.eval(&rint(-f0));
                let l = &k.scale(&rint(2 * f0)) + &kc(rint(2 * delta) * a_mf0 - b1.clone());
                bk[3] = &bk[3] + &k;
                bk[1] = &bk[1] + &k;
                bk[2] = &bk[2] + &l;
            }
            (2, 3) => {
                // B + 2a(x^5 + x) + k(x^4 + x^2) + l x^3,
                // l = 2 f(0) k + 4 f(0) - 4a + delta 2 A(-f(0))
                let delta = self.signs.delta()?;
                let f0 = self.f0();
                let a_mf0 = a.eval(&rint(-f0));
                let acoef = self.a.coeff(1);
                let two_a = kc(&acoef * &rint(2));
                let l = &k.scale(&rint(2 * f0))
                    + &kc(rint(4 * f0) - rint(4) * &acoef + rint(2 * delta) * a_mf0);
                bk[5] = &bk[5] + &two_a;
                bk[1] = &bk[1] + &two_a;
                bk[4] = &bk[4] + &k;
                bk[2] = &bk[2] + &k;
                bk[3] = &bk[3] + &l;
            }
            (3, 1) => {
                // B + k(x^4 + x) + l(x^3 + x^2), l = -k - B(1)/2 + delta A(1)
                let delta = self.signs.delta()?;
                let l = &(-&k) + &kc(rint(delta) * a1.clone() - b1 / rint(2));
                bk[4] = &bk[4] + &k;
                bk[1] = &bk[1] + &k;
                bk[3] = &bk[3] + &l;
                bk[2] = &bk[2] + &l;
            }
            (3, 2) => {
                // B + k(x^5 + x) + l(x^4 + x^2) + m x^3,
                // l = (-B(1) + d1 A(1) + d2 A(-1)) / 2, m = -2k + d1 A(1) - d2 A(-1)
                let (d1, d2) = self.signs.deltas()?;
                let l = kc((-&b1 + rint(d1) * &a1 + rint(d2) * &am1) / rint(2));
                let m = &k.scale(&rint(-2)) + &kc(rint(d1) * &a1 - rint(d2) * &am1);
                bk[5] = &bk[5] + &k;
                bk[1] = &bk[1] + &k;
                bk[4] = &bk[4] + &l;
                bk[2] = &bk[2] + &l;
                bk[3] = &bk[3] + &m;
            }
            (3, 3) => {
                // B + 2a(x^7 + x) + k(x^6 + x^2) + l(x^5 + x^3) + m x^4,
                // l = (-4a + d1 A(1) + d2 A(-1)) / 2, m = -2k - 4 + d1 A(1) - d2 A(-1)
                // (the factor 2 on a(x^7+x) is what makes D(+-1) = 0 hold
                // identically with these l, m)
                let (d1, d2) = self.signs.deltas()?;
                let acoef = self.a.coeff(1);
                let two_a = kc(&acoef * &rint(2));
                let l = kc((rint(-4) * &acoef + rint(d1) * &a1 + rint(d2) * &am1) / rint(2));
                let m = &k.scale(&rint(-2)) + &kc(rint(d1) * &a1 - rint(d2) * &am1 - rint(4));
                bk[7] = &bk[7] + &two_a;
                bk[1] = &bk[1] + &two_a;
                bk[6] = &bk[6] + &k;
                bk[2] = &bk[2] + &k;
                bk[5] = &bk[5] + &l;
                bk[3] = &bk[3] + &l;
                bk[4] = &bk[4] + &m;
            }
            _ => unreachable!(),
        }
        // C(x) = x^d A(1/x)
        let mut c = vec![Rat::from_integer(0.into()); d + 1];
        for (i, co) in a.coeffs().iter().enumerate() {
            c[d - i] = co.clone();
        }
        let cpoly = UniPoly::from_coeffs(c);
        let ycoeffs = [
            PolyXK::from_unipoly_x(&cpoly),
            PolyXK::from_coeffs(bk),
            PolyXK::from_unipoly_x(a),
        ];
        Ok(ParamPoly::from_y_coeffs(&ycoeffs))
    }

    /// Delta_k = B_k^2 - 4AC, exact in Q[k][x].
    pub fn delta(&self) -> Result<PolyXK> {
        self.instantiate()?.discriminant_in_y()
    }

    /// D_k: Delta for types 1-2, Delta / x^2 for type 3.
    pub fn d_poly(&self) -> Result<PolyXK> {
        let delta = self.delta()?;
        if self.ftype == 3 {
            if delta.x_valuation() < 2 {
                return Err(viol("x^2 should divide Delta for the third type"));
            }
            Ok(delta.div_x_pow(2))
        } else {
            Ok(delta)
        }
    }

    /// D-tilde = D / f^2: the branch-point polynomial.
    pub fn dtilde(&self) -> Result<PolyXK> {
        let d = self.d_poly()?;
        if self.fpoly.is_one() {
            return Ok(d);
        }
        let f2 = PolyXK::from_unipoly_x(&self.fpoly.pow(2));
        d.try_div_exact(&f2)
            .ok_or_else(|| viol("f^2 must divide D_k in Q[k][x]"))
    }

    /// Exact branch-point distribution at a fixed rational k.
    ///
    /// The on-circle count is the exact Sturm count; inside/outside come from
    /// certified numeric isolation, cross-checked against the Sturm count.
    pub fn branch_distribution(&self, k: &Rat) -> Result<BranchDistribution> {
        let dt = self.dtilde()?.eval_k(k);
        if dt.is_zero() || dt.deg() == 0 {
            return Err(Error::DegenerateK {
                k: format!("{k}"),
                why: "D-tilde degenerates to a constant".into(),
            });
        }
        if !dt.is_squarefree() {
            return Err(Error::DegenerateK {
                k: format!("{k}"),
                why: "D-tilde not squarefree".into(),
            });
        }
        // roots at x = 0 lie inside the circle; strip them before the
        // reciprocal-only circle count
        let v0 = dt
            .coeffs()
            .iter()
            .take_while(|c| num_traits::Zero::is_zero(*c))
            .count();
        let dt = UniPoly::from_coeffs(dt.coeffs()[v0..].to_vec());
        let on_exact = crate::poly::sturm_count_on_circle(&dt)?;
        let ctx = PrecisionContext::new(50);
        let roots = isolate_roots(&dt, &ctx)?;
        let (outside, on_numeric, mut inside) = classify_unit_circle(&roots, &ctx);
        inside += v0;
        if on_numeric != on_exact {
            return Err(Error::Other(format!(
                "circle-root count mismatch at k = {k}: Sturm {on_exact}, numeric {on_numeric}"
            )));
        }
        Ok(BranchDistribution {
            outside,
            on_circle: on_exact,
            inside,
        })
    }

    /// The asymptotic distribution the construction predicts for large |k|
    /// with this spec's signs, as (outside, on, inside).
    pub fn predicted_distribution(&self, k: i64) -> Result<BranchDistribution> {
        let dt_deg = self.dtilde()?.deg();
        let mk = |o: usize, c: usize| BranchDistribution {
            outside: o,
            on_circle: c,
            inside: dt_deg - o - c,
        };
        Ok(match (self.genus, self.ftype) {
            (2, 1) => mk(2, 2),
            (2, _) => {
                let s = self.f0() * self.signs.delta()? * k.signum();
                if s < 0 {
                    mk(2, 2)
                } else {
                    mk(3, 0)
                }
            }
            (3, 1) => {
                let s = self.signs.delta()? * k.signum();
                if s > 0 {
                    mk(2, 4)
                } else {
                    mk(3, 2)
                }
            }
            (3, _) => {
                let (d1, d2) = self.signs.deltas()?;
                if d1 * d2 == -1 {
                    if d1 * k.signum() > 0 {
                        mk(2, 4)
                    } else {
                        mk(4, 0)
                    }
                } else {
                    mk(3, 2)
                }
            }
            _ => unreachable!(),
        })
    }
}

/// Validation report for a family polynomial.
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub tempered: Option<bool>,
    pub reciprocal: bool,
    pub generic_genus: Option<usize>,
    pub quotient_genus_one: Option<bool>,
    pub degenerate_k: Vec<Rat>,
}

impl ConditionReport {
    pub fn all_pass(&self, expected_genus: usize) -> bool {
        self.tempered == Some(true)
            && self.reciprocal
            && self.generic_genus == Some(expected_genus)
            && self.quotient_genus_one != Some(false)
    }
}

/// Genus of the hyperelliptic curve (2Ay + B_k)^2 = Delta_k at fixed k: with
/// Delta = S T^2 and S squarefree, the curve is y^2 = S(x) of genus
/// floor((deg S - 1) / 2).
fn genus_at_k(delta: &PolyXK, k: &Rat) -> Option<usize> {
    let dk = delta.eval_k(k);
    if dk.is_zero() {
        return None;
    }
    let s = dk.odd_part();
    if s.is_constant() {
        return None;
    }
    Some((s.deg() - 1) / 2)
}

/// Check the construction's conditions on a family polynomial: temperedness,
/// reciprocity, generic genus (two independent random rational k samples must
/// agree), quotient genus when the quotient model is derivable, and the exact
/// degeneracy set.
pub fn validate_conditions(p: &ParamPoly, expected_genus: u8) -> ConditionReport {
    let tempered = is_tempered(p, None).ok();
    let reciprocal = p.is_reciprocal();
    let delta = if p.y_degree() == 2 {
        p.discriminant_in_y().ok()
    } else {
        None
    };
    let mut generic_genus = None;
    if let Some(delta) = &delta {
        let mut genera = Vec::new();
        for k in [rat(17, 5), rat(-23, 7), rat(31, 4), rat(-47, 9)] {
            if let Some(g) = genus_at_k(delta, &k) {
                genera.push(g);
                if genera.len() == 2 {
                    break;
                }
            }
        }
        if genera.len() == 2 && genera[0] == genera[1] {
            generic_genus = Some(genera[0]);
        }
    }
    let quotient_genus_one = crate::curvealg::derive_quotient_data(p)
        .ok()
        .map(|qd| qd.quotient_is_genus_one());
    let degenerate_k = delta.as_ref().map(degenerate_k_values).unwrap_or_default();
    let _ = expected_genus;
    ConditionReport {
        tempered,
        reciprocal,
        generic_genus,
        quotient_genus_one,
        degenerate_k,
    }
}

/// The k where Delta_k stops being squarefree (or drops degree): exact roots
/// of disc_x(Delta_k) in Q[k], found by interpolation and rational-root
/// extraction.
pub fn degenerate_k_values(delta: &PolyXK) -> Vec<Rat> {
    let deg_x = delta.deg();
    let kdeg = delta.k_degree();
    let bound = (2 * deg_x).saturating_sub(1) * kdeg + 1;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut t = 0i64;
    while xs.len() < bound + 1 {
        t += 1;
        let k = rint(t);
        let dk = delta.eval_k(&k);
        if dk.is_zero() || dk.deg() != deg_x {
            continue; // leading coefficient vanished; skip this sample
        }
        xs.push(k.clone());
        ys.push(dk.discriminant());
        assert!(t < 10_000, "interpolation failed to find sample points");
    }
    let disc_k = lagrange_interpolate(&xs, &ys);
    // degree drop of Delta_k also degenerates the family
    let mut out = rational_roots(&disc_k);
    out.extend(rational_roots(&delta.leading()));
    out.sort();
    out.dedup();
    out
}

/// Lagrange interpolation through exact points.
fn lagrange_interpolate(xs: &[Rat], ys: &[Rat]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, yi) in ys.iter().enumerate() {
        if yi == &rint(0) {
            continue;
        }
        let mut num = UniPoly::constant(yi.clone());
        let mut den = Rat::from_integer(1.into());
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            num = &num * &UniPoly::from_coeffs(vec![-xj.clone(), rint(1)]);
            den *= &xs[i] - xj;
        }
        acc = &acc + &num.scale(&(Rat::from_integer(1.into()) / den));
    }
    acc
}

/// All rational roots of p, by the rational root theorem on the primitive
/// integer form.
pub fn rational_roots(p: &UniPoly) -> Vec<Rat> {
    if p.is_zero() || p.deg() == 0 {
        return vec![];
    }
    let mut p = p.clone();
    let mut roots = Vec::new();
    while p.coeff(0) == rint(0) && p.deg() > 0 {
        roots.push(rint(0));
        p = UniPoly::from_coeffs(p.coeffs()[1..].to_vec());
    }
    if p.deg() == 0 {
        roots.sort();
        roots.dedup();
        return roots;
    }
    let prim = p.primitive_int();
    let a0: u64 = match prim.coeff(0).numer().magnitude().try_into() {
        Ok(v) => v,
        Err(_) => return roots, // constant term too large for candidate search
    };
    let an: u64 = match prim.leading().numer().magnitude().try_into() {
        Ok(v) => v,
        Err(_) => return roots,
    };
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let cand = Rat::new(
                    crate::Int::from(sign) * crate::Int::from(num),
                    crate::Int::from(den),
                );
                if prim.eval(&cand) == rint(0) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            out.push(n / i);
        }
        i += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// The 14 tempered families whose x -> x - 1 shifts stay tempered.
pub fn table1_catalogue() -> Vec<ParamPoly> {
    TABLE1_TEXT
        .iter()
        .map(|t| parse_poly(t).expect("catalogue entry parses"))
        .collect()
}

/// Textual form of the catalogue (canonical grammar).
pub const TABLE1_TEXT: [&str; 14] = [
    "y^2 + (x^3 + k*x^2 + k*x + 1)*y + x^3",
    "(x^2 + x + 1)*(y^2 + x) + (x^3 + k*x^2 + k*x + 1)*y",
    "(x^2 + x + 1)*(y^2 + x) + (k*x^2 + k*x)*y",
    "(x^2 + x + 1)^2*(y^2 + 1) + (k*x^3 + (2*k + 2)*x^2 + k*x)*y",
    "y^2 + (x^4 + k*x^3 + (2*k - 4)*x^2 + k*x + 1)*y + x^4",
    "y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4",
    "(x^2 + x + 1)*(y^2 + x^2) + (x^4 + k*x^3 + (2*k - 4)*x^2 + k*x + 1)*y",
    "(x^2 + x + 1)*(y^2 + x^2) + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y",
    "(x^2 + x + 1)^2*(y^2 + 1) + (x^4 + k*x^3 + (2*k - 4)*x^2 + k*x + 1)*y",
    "(x^2 + x + 1)^2*(y^2 + 1) + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y",
    "(x^2 + x + 1)^2*(y^2 + 1) + (2*x^4 + k*x^3 + (2*k - 6)*x^2 + k*x + 2)*y",
    "(x^2 + x + 1)^2*(y^2 + 1) + (2*x^4 + k*x^3 + (2*k - 2)*x^2 + k*x + 2)*y",
    "(x^2 + x + 1)^3*(y^2 + 1) + (2*x^6 + 6*x^5 + k*x^4 + (2*k - 6)*x^3 + k*x^2 + 6*x + 2)*y",
    "(x^2 + x + 1)^3*(y^2 + 1) + (2*x^6 + 6*x^5 + k*x^4 + (2*k - 10)*x^3 + k*x^2 + 6*x + 2)*y",
];

/// One representative FamilySpec for every (genus, type, sign) combination,
/// used by the asymptotic branch-distribution checks.
pub fn representative_specs() -> Vec<FamilySpec> {
    let one = UniPoly::one();
    let x_m1 = UniPoly::from_i64(&[-1, 1]);
    let x_p1 = UniPoly::from_i64(&[1, 1]);
    let x2_m1 = UniPoly::from_i64(&[-1, 0, 1]);
    let phi3 = UniPoly::from_i64(&[1, 1, 1]);
    let mut out = Vec::new();
    out.push(
        FamilySpec::new(2, 1, phi3.clone(), UniPoly::zero(), Signs::One(1), one.clone()).unwrap(),
    );
    out.push(
        FamilySpec::new(
            2,
            1,
            one.clone(),
            UniPoly::from_i64(&[1, 0, 0, 1]),
            Signs::One(1),
            one.clone(),
        )
        .unwrap(),
    );
    for f in [&x_p1, &x_m1] {
        for d in [1i8, -1] {
            out.push(
                FamilySpec::new(
                    2,
                    2,
                    one.clone(),
                    UniPoly::from_i64(&[1, 0, 0, 0, 1]),
                    Signs::One(d),
                    f.clone(),
                )
                .unwrap(),
            );
        }
    }
    let a6 = phi3.pow(3);
    for f in [&x_p1, &x_m1] {
        for d in [1i8, -1] {
            out.push(
                FamilySpec::new(
                    2,
                    3,
                    a6.clone(),
                    UniPoly::from_i64(&[2, 0, 0, 0, 0, 0, 2]),
                    Signs::One(d),
                    f.clone(),
                )
                .unwrap(),
            );
        }
    }
    for d in [1i8, -1] {
        out.push(
            FamilySpec::new(
                3,
                1,
                one.clone(),
                UniPoly::from_i64(&[1, 0, 0, 0, 0, 1]),
                Signs::One(d),
                x_m1.clone(),
            )
            .unwrap(),
        );
    }
    for d1 in [1i8, -1] {
        for d2 in [1i8, -1] {
            out.push(
                FamilySpec::new(
                    3,
                    2,
                    one.clone(),
                    UniPoly::from_i64(&[1, 0, 0, 0, 0, 0, 1]),
                    Signs::Two(d1, d2),
                    x2_m1.clone(),
                )
                .unwrap(),
            );
        }
    }
    let a8 = &crate::poly::cyclotomic::cyclotomic(5) * &crate::poly::cyclotomic::cyclotomic(8);
    for d1 in [1i8, -1] {
        for d2 in [1i8, -1] {
            out.push(
                FamilySpec::new(
                    3,
                    3,
                    a8.clone(),
                    UniPoly::from_i64(&[2, 0, 0, 0, 0, 0, 0, 0, 2]),
                    Signs::Two(d1, d2),
                    x2_m1.clone(),
                )
                .unwrap(),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boyd_spec() -> FamilySpec {
        FamilySpec::new(
            2,
            2,
            UniPoly::one(),
            UniPoly::from_i64(&[1, 0, 0, 0, 1]),
            Signs::One(1),
            UniPoly::from_i64(&[1, 1]),
        )
        .unwrap()
    }

    #[test]
    fn instantiate_boyd_and_table1_row5() {
        let p = boyd_spec().instantiate().unwrap();
        let expect = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        assert_eq!(p, expect);
        let mut s = boyd_spec();
        s.signs = Signs::One(-1);
        let p5 = s.instantiate().unwrap();
        let expect5 = parse_poly("y^2 + (x^4 + k*x^3 + (2*k - 4)*x^2 + k*x + 1)*y + x^4").unwrap();
        assert_eq!(p5, expect5);
    }

    #[test]
    fn instantiate_genus3_remark_family() {
        let s = FamilySpec::new(
            3,
            2,
            UniPoly::one(),
            UniPoly::from_i64(&[1, 0, 0, 0, 0, 0, 1]),
            Signs::Two(1, -1),
            UniPoly::from_i64(&[-1, 0, 1]),
        )
        .unwrap();
        let p = s.instantiate().unwrap();
        let expect =
            parse_poly("y^2 + (x^6 + 1 + k*(x^5 + x) - (x^4 + x^2) + (-2*k + 2)*x^3)*y + x^6")
                .unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn catalogue_families_all_valid() {
        for (i, q) in table1_catalogue().iter().enumerate() {
            assert!(q.is_reciprocal(), "family {} not reciprocal", i + 1);
            assert!(is_tempered(q, None).unwrap(), "family {} not tempered", i + 1);
            let shifted = q.shift_x(&rint(-1));
            assert!(
                is_tempered(&shifted, None).unwrap(),
                "shifted family {} not tempered",
                i + 1
            );
        }
    }

    #[test]
    fn representative_specs_are_consistent() {
        for spec in representative_specs() {
            let p = spec.instantiate().unwrap();
            assert!(p.is_reciprocal(), "{spec:?}");
            let d = spec.d_poly().unwrap();
            assert!(d.is_laurent_palindromic(), "D_k not reciprocal for {spec:?}");
            let _ = spec.dtilde().unwrap();
            if spec.genus == 2 && spec.ftype != 1 {
                // the identity that produced l: D(-f(0)) = 0 in Q[k]
                let at = d.eval_x(&rint(-spec.f0()));
                assert!(at.is_zero(), "D(-f(0)) != 0 for {spec:?}");
            }
        }
    }

    #[test]
    fn branch_distribution_boyd() {
        let s = boyd_spec();
        let d = s.branch_distribution(&rint(-10)).unwrap();
        assert_eq!((d.outside, d.on_circle, d.inside), (2, 2, 2));
        let d = s.branch_distribution(&rint(10)).unwrap();
        assert_eq!((d.outside, d.on_circle, d.inside), (3, 0, 3));
    }

    #[test]
    fn branch_distribution_genus3_type2_equal_signs() {
        let s = FamilySpec::new(
            3,
            2,
            UniPoly::one(),
            UniPoly::from_i64(&[1, 0, 0, 0, 0, 0, 1]),
            Signs::Two(1, 1),
            UniPoly::from_i64(&[-1, 0, 1]),
        )
        .unwrap();
        let d = s.branch_distribution(&rint(20)).unwrap();
        assert_eq!((d.outside, d.on_circle, d.inside), (3, 2, 3));
    }

    #[test]
    fn boyd_degenerate_set() {
        let s = boyd_spec();
        let dt = s.dtilde().unwrap();
        let degs = degenerate_k_values(&dt);
        for e in [-1i64, 0, 4, 8] {
            assert!(degs.contains(&rint(e)), "missing degenerate k = {e}: {degs:?}");
        }
        assert!(s.branch_distribution(&rint(4)).is_err());
    }

    #[test]
    fn validate_conditions_on_boyd() {
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        let r = validate_conditions(&q, 2);
        assert_eq!(r.tempered, Some(true));
        assert!(r.reciprocal);
        assert_eq!(r.generic_genus, Some(2));
        let q1 = parse_poly("y^2 + (x^3 + k*x^2 + k*x + 1)*y + x^3").unwrap();
        let r1 = validate_conditions(&q1, 2);
        assert_eq!(r1.generic_genus, Some(2));
    }

    #[test]
    fn spec_violations_are_rejected() {
        let bad = FamilySpec::new(
            2,
            1,
            UniPoly::from_i64(&[1, 2, 1]),
            UniPoly::zero(),
            Signs::One(1),
            UniPoly::one(),
        );
        assert!(matches!(bad, Err(Error::SpecViolation { .. })));
        let bad3 = FamilySpec::new(
            2,
            1,
            UniPoly::from_i64(&[2, 1]),
            UniPoly::zero(),
            Signs::One(1),
            UniPoly::one(),
        );
        assert!(matches!(bad3, Err(Error::SpecViolation { .. })));
    }
}
