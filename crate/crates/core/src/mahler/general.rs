//! Mahler measure of a general bivariate polynomial at fixed parameter:
//! Jensen in y plus quadrature of the sum of positive log-moduli of the
//! y-roots along |x| = 1.
//!
//! The path is split at the arguments where some |y_j| = 1 (on-circle roots
//! of res_y(P, rev P), or of disc_y for reciprocal P where that resultant
//! vanishes identically) and at on-circle zeros of the leading coefficient.
//! On each piece the number of roots outside the unit disk is constant, so
//! the integrand equals the sum of the `count` largest log-moduli — a
//! symmetric function, immune to branch reordering; individual square-root
//! kinks cancel in the sum.

use super::split::{on_circle_args, pieces_from_args};
use super::univariate::mahler_univariate;
use crate::numerics::quad::tanh_sinh;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};
use crate::poly::{disc_resultant_y, resultant_y, BivarPoly, UniPoly};
use crate::{Error, Result};
use num_traits::Zero;
use std::cell::RefCell;

/// Roots of a complex polynomial given by coefficients (ascending), highest
/// coefficient nonzero-ish. Degree 1 and 2 use closed forms; higher degrees
/// run Aberth warm-started from the previous node's roots.
fn complex_roots(
    coeffs: &[BigComplex],
    warm: Option<&[BigComplex]>,
    ctx: &PrecisionContext,
) -> Option<Vec<BigComplex>> {
    let deg = coeffs.len() - 1;
    match deg {
        0 => Some(vec![]),
        1 => {
            let r = &(-&coeffs[0]) / &coeffs[1];
            Some(vec![r])
        }
        2 => {
            let (c, b, a) = (&coeffs[0], &coeffs[1], &coeffs[2]);
            let disc = &(b * b) - &(&(a * c).scale(&ctx.real_from_i64(4)));
            let s = disc.sqrt();
            // pick the sign avoiding cancellation: |b - s| vs |b + s|
            let minus = &(-b) - &s;
            let plus = &(-b) + &s;
            let (num, alt) = if minus.norm_sq() >= plus.norm_sq() {
                (minus, plus)
            } else {
                (plus, minus)
            };
            let two_a = &(a + a);
            let r1 = &num / two_a;
            // r1 r2 = c/a; use the product relation for the small root
            let r2 = if num.is_zero() {
                &alt / two_a
            } else {
                &(c / a) / &r1
            };
            Some(vec![r1, r2])
        }
        _ => aberth(coeffs, warm, ctx),
    }
}

fn aberth(
    coeffs: &[BigComplex],
    warm: Option<&[BigComplex]>,
    ctx: &PrecisionContext,
) -> Option<Vec<BigComplex>> {
    let n = coeffs.len() - 1;
    let lead_mag = coeffs[n].abs();
    if lead_mag.is_zero() {
        return None;
    }
    let mut z: Vec<BigComplex> = match warm {
        Some(w) if w.len() == n => w.to_vec(),
        _ => {
            let mut bound = ctx.zero();
            for c in &coeffs[..n] {
                let m = &c.abs() / &lead_mag;
                if m > bound {
                    bound = m;
                }
            }
            bound = &bound + &ctx.one();
            let two_pi = &ctx.pi() + &ctx.pi();
            (0..n)
                .map(|i| {
                    let theta =
                        &(&two_pi * &ctx.real_from_f64(i as f64 + 0.2643)) / &ctx.real_from_i64(n as i64);
                    BigComplex::unit_circle(&theta).scale(&bound)
                })
                .collect()
        }
    };
    let tol = ctx.pow10(-(ctx.decimal_digits() as i64) + 2);
    let max_iter = 80 + 12 * n;
    for _ in 0..max_iter {
        let mut max_step = ctx.zero();
        let snapshot = z.clone();
        for i in 0..n {
            let (pv, dv) = horner_both(coeffs, &snapshot[i], ctx);
            if pv.is_zero() {
                continue;
            }
            let newton = if dv.is_zero() {
                BigComplex::new(ctx.real_from_f64(1e-4), ctx.real_from_f64(1e-4))
            } else {
                &pv / &dv
            };
            let mut repel = BigComplex::zero(ctx);
            let one = BigComplex::from_real(ctx.one(), ctx);
            for (j, other) in snapshot.iter().enumerate() {
                if j != i {
                    let diff = &snapshot[i] - other;
                    if !diff.is_zero() {
                        repel = &repel + &(&one / &diff);
                    }
                }
            }
            let denom = &one - &(&newton * &repel);
            let step = if denom.is_zero() { newton } else { &newton / &denom };
            z[i] = &z[i] - &step;
            let rel = &step.abs() / &(&z[i].abs() + &ctx.one());
            if rel > max_step {
                max_step = rel;
            }
        }
        if max_step < tol {
            return Some(z);
        }
    }
    None
}

fn horner_both(coeffs: &[BigComplex], z: &BigComplex, ctx: &PrecisionContext) -> (BigComplex, BigComplex) {
    let mut p = BigComplex::zero(ctx);
    let mut dp = BigComplex::zero(ctx);
    for c in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
    }
    (p, dp)
}

struct PieceEvaluator {
    ycoeffs: Vec<UniPoly>,
    count: usize,
    ctx: PrecisionContext,
    warm: RefCell<Option<Vec<BigComplex>>>,
}

impl PieceEvaluator {
    /// All y-root log-moduli at x = e(2 pi t), descending.
    fn log_moduli(&self, t: &BigReal) -> Option<Vec<BigReal>> {
        let ctx = &self.ctx;
        let two_pi_t = &(&ctx.pi() + &ctx.pi()) * t;
        let z = BigComplex::unit_circle(&two_pi_t);
        let coeffs: Vec<BigComplex> = self
            .ycoeffs
            .iter()
            .map(|c| {
                let mut acc = BigComplex::zero(ctx);
                for co in c.coeffs().iter().rev() {
                    acc = &(&acc * &z) + &BigComplex::from_rat(ctx, co);
                }
                acc
            })
            .collect();
        // degree drop at zeros of the leading coefficient never happens at
        // interior nodes (those zeros are piece endpoints)
        let warm = self.warm.borrow().clone();
        let roots = complex_roots(&coeffs, warm.as_deref(), ctx)?;
        *self.warm.borrow_mut() = Some(roots.clone());
        let mut mags: Vec<BigReal> = roots
            .iter()
            .map(|r| if r.is_zero() { ctx.pow10(-(ctx.decimal_digits() as i64 * 2)).ln() } else { r.ln_abs() })
            .collect();
        mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Some(mags)
    }

    fn outside_count(&self, t: &BigReal) -> Option<usize> {
        let mags = self.log_moduli(t)?;
        Some(mags.iter().filter(|m| m.is_positive()).count())
    }

    fn integrand(&self, t: &BigReal) -> Option<BigReal> {
        let mags = self.log_moduli(t)?;
        let mut acc = self.ctx.zero();
        for m in mags.iter().take(self.count) {
            acc = &acc + m;
        }
        Some(acc)
    }
}

/// m(P) for a bivariate polynomial with y-degree >= 1 at fixed parameter.
pub fn mahler_general(p: &BivarPoly, ctx: &PrecisionContext) -> Result<BigReal> {
    let dy = p.y_degree();
    if dy == 0 {
        return mahler_univariate(&p.y_coeff(0), ctx);
    }
    let work = ctx.with_extra_digits(10);
    let lead = p.leading_y();
    let mut total = mahler_univariate(&lead, &work)?;
    // splitting polynomial: on-torus intersections of P with its reversal
    let rev = p.reversed();
    let mut splitter = resultant_y(p, &rev);
    if splitter.is_zero() {
        // reciprocal P: the reversal is proportional to P; |y| = 1 crossings
        // happen at root collisions, i.e. on-circle roots of the discriminant
        splitter = disc_resultant_y(p);
    }
    let mut args = if splitter.is_zero() {
        vec![]
    } else {
        on_circle_args(&splitter, ctx)?
    };
    args.extend(on_circle_args(&lead, ctx)?);
    // trailing coefficient zeros: some root passes through y = 0; harmless
    // for log+, but its partner under reversal passes through infinity on
    // reciprocal inputs; include for safety
    args.extend(on_circle_args(&p.y_coeff(0), ctx)?);
    args.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let floor = work.pow10(-(work.decimal_digits() as i64 + 5));
    for (lo, hi) in pieces_from_args(&args, &work) {
        if (&hi - &lo).abs() < floor {
            continue;
        }
        total = &total + &integrate_piece(p, &lo, &hi, &work, 0)?;
    }
    Ok(total.to_context(ctx))
}

fn integrate_piece(
    p: &BivarPoly,
    lo: &BigReal,
    hi: &BigReal,
    work: &PrecisionContext,
    depth: usize,
) -> Result<BigReal> {
    if depth > 6 {
        return Err(Error::PathDegeneracy {
            t: format!("{:?}", lo.to_f64()),
        });
    }
    let ev = PieceEvaluator {
        ycoeffs: p.y_coeffs().to_vec(),
        count: 0,
        ctx: *work,
        warm: RefCell::new(None),
    };
    // constant outside-count check at three interior points
    let width = hi - lo;
    let samples = [0.5f64, 0.21, 0.82];
    let mut counts = Vec::new();
    for s in samples {
        let t = lo + &(&width * &work.real_from_f64(s));
        match ev.outside_count(&t) {
            Some(c) => counts.push(c),
            None => {
                return Err(Error::PathDegeneracy {
                    t: format!("{:?}", t.to_f64()),
                })
            }
        }
    }
    if !(counts[0] == counts[1] && counts[1] == counts[2]) {
        // missed a crossing: bisect and retry
        let mid = (lo + hi).scale_half();
        let a = integrate_piece(p, lo, &mid, work, depth + 1)?;
        let b = integrate_piece(p, &mid, hi, work, depth + 1)?;
        return Ok(&a + &b);
    }
    let count = counts[0];
    if count == 0 {
        return Ok(work.zero());
    }
    let ev = PieceEvaluator {
        count,
        ..ev
    };
    let w2 = *work;
    match tanh_sinh(
        &mut |t: &BigReal| match ev.integrand(t) {
            Some(v) => Ok(v),
            None => Err(crate::numerics::EvalSignal::Kink),
        },
        lo,
        hi,
        &w2,
    ) {
        Ok(v) => Ok(v),
        Err(Error::NoConvergence { .. }) | Err(Error::Other(_)) => {
            // root collision or slow corner: split further
            let mid = (lo + hi).scale_half();
            let a = integrate_piece(p, lo, &mid, work, depth + 1)?;
            let b = integrate_piece(p, &mid, hi, work, depth + 1)?;
            Ok(&a + &b)
        }
        Err(e) => Err(e),
    }
}

/// Cubic-in-y families: same contract as `mahler_general` with per-node
/// numeric cubic solving.
pub fn mahler_cubic_in_y(p: &BivarPoly, ctx: &PrecisionContext) -> Result<BigReal> {
    if p.y_degree() != 3 {
        return Err(Error::WrongDegree {
            expected: 3,
            found: p.y_degree(),
        });
    }
    mahler_general(p, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rint;

    fn at(text: &str, k: i64) -> BivarPoly {
        parse_poly(text).unwrap().at_k(&rint(k))
    }

    #[test]
    fn smyth_value_for_x_plus_y_plus_1() {
        // m(1 + x + y) = d_3
        let ctx = PrecisionContext::new(30);
        let m = mahler_general(&at("x + y + 1", 0), &ctx).unwrap();
        let d3 = crate::lfun::dirichlet_dval(3, &ctx).unwrap();
        assert!((&m - &d3).abs() < ctx.pow10(-24), "m = {m:?} vs {d3:?}");
    }

    #[test]
    fn monomial_measures() {
        let ctx = PrecisionContext::new(30);
        // m(y - x) = 0
        let m = mahler_general(&at("y - x", 0), &ctx).unwrap();
        assert!(m.abs() < ctx.pow10(-24), "m = {m:?}");
        // m(y^3 - x) = 0
        let m3 = mahler_general(&at("y^3 - x", 0), &ctx).unwrap();
        assert!(m3.abs() < ctx.pow10(-24), "m = {m3:?}");
    }

    #[test]
    fn x_free_cubic_jensen() {
        // (y - 2)(y^2 + y + 1): m = log 2
        let ctx = PrecisionContext::new(30);
        let m = mahler_cubic_in_y(&at("(y - 2)*(y^2 + y + 1)", 0), &ctx).unwrap();
        let log2 = ctx.real_from_i64(2).ln();
        assert!((&m - &log2).abs() < ctx.pow10(-20), "m = {m:?}");
    }

    #[test]
    fn consistency_with_reciprocal_path() {
        // the two code paths agree on a reciprocal quadratic family
        let ctx = PrecisionContext::new(25);
        for k in [2i64, -3, 7] {
            let q = at("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4", k);
            let m1 = crate::mahler::mahler_reciprocal_quadratic(&q, &ctx).unwrap();
            let m2 = mahler_general(&q, &ctx).unwrap();
            assert!(
                (&m1 - &m2).abs() < ctx.pow10(-18),
                "k = {k}: {m1:?} vs {m2:?}"
            );
        }
    }

    #[test]
    fn shifted_boyd_matches_deninger_at_minus_two()
    {
        // eq-(3.10)-style check: m(Q_{-2}(x-1, y)) = m(R_{-2})
        let ctx = PrecisionContext::new(25);
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        let shifted = q.shift_x(&rint(-1)).at_k(&rint(-2));
        let m1 = mahler_general(&shifted, &ctx).unwrap();
        let r = parse_poly("x + 1/x + y + 1/y + (k - 4)").unwrap().at_k(&rint(-2));
        let m2 = crate::mahler::mahler_reciprocal_quadratic(&r, &ctx).unwrap();
        assert!(
            (&m1 - &m2).abs() < ctx.pow10(-18),
            "shifted {m1:?} vs deninger {m2:?}"
        );
    }
}
