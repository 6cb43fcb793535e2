//! Certified complex root isolation: Aberth-Ehrlich iteration from perturbed
//! roots-of-unity starts, with a posteriori certification by disjoint
//! inclusion disks.

use super::complex::BigComplex;
use super::context::PrecisionContext;
use super::real::BigReal;
use crate::poly::UniPoly;
use crate::{Error, Result};

/// A root with a certified error radius: the disk |z - value| <= radius
/// contains exactly one root of the input polynomial.
#[derive(Clone, Debug)]
pub struct CertifiedRoot {
    pub value: BigComplex,
    pub radius: BigReal,
}

fn eval_and_derivative(coeffs: &[BigComplex], z: &BigComplex, ctx: &PrecisionContext) -> (BigComplex, BigComplex) {
    let mut p = BigComplex::zero(ctx);
    let mut dp = BigComplex::zero(ctx);
    for c in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
    }
    (p, dp)
}

/// Isolate all roots of a squarefree polynomial over Q with certified radii
/// at most `10^-(digits-5)`.
pub fn isolate_roots(p: &UniPoly, ctx: &PrecisionContext) -> Result<Vec<CertifiedRoot>> {
    if p.is_zero() || p.deg() == 0 {
        return Ok(vec![]);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = p.deg();
    // working precision climbs until certification succeeds; results are
    // reported at the caller's context precision
    let mut work = ctx.with_extra_digits(15);
    for _attempt in 0..4 {
        if let Some(roots) = try_isolate(p, n, &work, ctx) {
            return Ok(roots
                .into_iter()
                .map(|r| CertifiedRoot {
                    value: crate::numerics::BigComplex::new(
                        r.value.re.to_context(ctx),
                        r.value.im.to_context(ctx),
                    ),
                    radius: r.radius.to_context(ctx),
                })
                .collect());
        }
        work = work.doubled();
    }
    Err(Error::RootIsolation(format!(
        "certification failed for degree {n} polynomial"
    )))
}

fn try_isolate(
    p: &UniPoly,
    n: usize,
    work: &PrecisionContext,
    report: &PrecisionContext,
) -> Option<Vec<CertifiedRoot>> {
    let coeffs: Vec<BigComplex> = p
        .coeffs()
        .iter()
        .map(|c| BigComplex::from_rat(work, c))
        .collect();
    // start points: roots of unity scaled by the Cauchy bound, slightly
    // perturbed to break symmetry
    let bound = work.real_from_f64(p.cauchy_bound_f64() * 0.7 + 0.3);
    let two_pi = &work.pi() + &work.pi();
    let mut z: Vec<BigComplex> = (0..n)
        .map(|i| {
            let theta = &(&two_pi * &work.real_from_f64(i as f64 + 0.3617)) / &work.real_from_i64(n as i64);
            BigComplex::unit_circle(&theta).scale(&bound)
        })
        .collect();
    let tol = work.pow10(-(work.decimal_digits() as i64) + 3);
    let max_iter = 60 + 10 * n;
    let mut converged = false;
    for _ in 0..max_iter {
        let mut max_step = work.zero();
        let snapshot = z.clone();
        for i in 0..n {
            let (pv, dv) = eval_and_derivative(&coeffs, &snapshot[i], work);
            if pv.is_zero() {
                continue;
            }
            let newton = if dv.is_zero() {
                // nudge off a critical point
                BigComplex::new(work.real_from_f64(1e-3), work.real_from_f64(1e-3))
            } else {
                &pv / &dv
            };
            let mut repel = BigComplex::zero(work);
            for (j, other) in snapshot.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = &snapshot[i] - other;
                if diff.is_zero() {
                    continue;
                }
                let one = BigComplex::from_real(work.one(), work);
                repel = &repel + &(&one / &diff);
            }
            let denom_c = {
                let one = BigComplex::from_real(work.one(), work);
                &one - &(&newton * &repel)
            };
            let step = if denom_c.is_zero() {
                newton
            } else {
                &newton / &denom_c
            };
            z[i] = &z[i] - &step;
            let rel = &step.abs() / &(&z[i].abs() + &work.one());
            if rel > max_step {
                max_step = rel;
            }
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    // certification: each disk D(z_i, n |p(z_i)/p'(z_i)|) contains a root;
    // pairwise disjoint disks with n centers therefore isolate all n roots.
    let nn = work.real_from_i64(n as i64);
    let mut roots = Vec::with_capacity(n);
    for zi in &z {
        let (pv, dv) = eval_and_derivative(&coeffs, zi, work);
        if dv.is_zero() {
            return None;
        }
        let radius = &(&pv.abs() / &dv.abs()) * &nn;
        roots.push(CertifiedRoot {
            value: zi.clone(),
            radius,
        });
    }
    let limit = report.pow10(-(report.decimal_digits() as i64) + 5).to_context(work);
    for r in &roots {
        if r.radius > limit {
            return None;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let dist = (&roots[i].value - &roots[j].value).abs();
            let rsum = &roots[i].radius + &roots[j].radius;
            if dist <= rsum {
                return None;
            }
        }
    }
    Some(roots)
}

/// Classify certified roots relative to the unit circle.
/// Returns (outside, on_candidates, inside); a root counts as "on" when
/// | |z| - 1 | falls below 10^-(digits/2) plus its certified radius.
pub fn classify_unit_circle(roots: &[CertifiedRoot], ctx: &PrecisionContext) -> (usize, usize, usize) {
    let (mut outside, mut on, mut inside) = (0usize, 0usize, 0usize);
    for r in roots {
        let a = r.value.abs();
        let bits = a.bits();
        let one = BigReal::with_bits_i64(bits, 1);
        let dev = (&a - &one).abs();
        let half = BigReal::pow10_with_bits(bits, -(ctx.decimal_digits() as i64 / 2));
        let tol = &half + &r.radius;
        if dev <= tol {
            on += 1;
        } else if a > one {
            outside += 1;
        } else {
            inside += 1;
        }
    }
    (outside, on, inside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::rint;

    #[test]
    fn sqrt_two() {
        let ctx = PrecisionContext::new(40);
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &ctx).unwrap();
        assert_eq!(roots.len(), 2);
        let mut vals: Vec<f64> = roots.iter().map(|r| r.value.re.to_f64()).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] + std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!((vals[1] - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn cyclotomic_roots_on_circle() {
        let ctx = PrecisionContext::new(40);
        let p = crate::poly::cyclotomic::cyclotomic(5);
        let roots = isolate_roots(&p, &ctx).unwrap();
        assert_eq!(roots.len(), 4);
        let (outside, on, inside) = classify_unit_circle(&roots, &ctx);
        assert_eq!((outside, on, inside), (0, 4, 0));
    }

    #[test]
    fn rejects_non_squarefree() {
        let ctx = PrecisionContext::new(30);
        let p = UniPoly::from_i64(&[1, 2, 1]);
        assert!(matches!(isolate_roots(&p, &ctx), Err(Error::NotSquarefree)));
    }

    #[test]
    fn boyd_dtilde_root_split() {
        // D-tilde at k = -10: 2 roots on the circle, 2 inside, 2 outside
        let ctx = PrecisionContext::new(50);
        let q = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        let dt = q
            .discriminant_in_y()
            .unwrap()
            .div_exact(&crate::poly::PolyXK::from_unipoly_x(&UniPoly::from_i64(&[1, 2, 1])))
            .eval_k(&rint(-10));
        let roots = isolate_roots(&dt, &ctx).unwrap();
        assert_eq!(roots.len(), 6);
        assert_eq!(classify_unit_circle(&roots, &ctx), (2, 2, 2));
    }
}
