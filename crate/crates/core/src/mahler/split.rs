//! Splitting the torus path [0, 1) at the arguments of certified on-circle
//! roots of the relevant polynomials.

use crate::numerics::{isolate_roots, BigReal, PrecisionContext};
use crate::poly::{sturm_count_on_circle, UniPoly};
use crate::Result;
use num_traits::Zero;

/// Arguments t in [0, 1) (x = e^{2 pi i t}) of the roots of p on the unit
/// circle, certified by isolation disks; when p is palindromic the count is
/// confirmed against the exact Sturm count.
pub fn on_circle_args(p: &UniPoly, ctx: &PrecisionContext) -> Result<Vec<BigReal>> {
    if p.is_zero() || p.deg() == 0 {
        return Ok(vec![]);
    }
    let work = ctx.with_extra_digits(15);
    // strip x^v: the origin is not on the circle
    let stripped = UniPoly::from_coeffs(
        p.coeffs()
            .iter()
            .skip_while(|c| c.is_zero())
            .cloned()
            .collect(),
    );
    if stripped.deg() == 0 {
        return Ok(vec![]);
    }
    let sf = stripped.squarefree_part();
    let roots = isolate_roots(&sf, &work)?;
    let mut args = Vec::new();
    let mut on_count = 0usize;
    for r in &roots {
        let a = r.value.abs();
        let bits = a.bits();
        let one = BigReal::with_bits_i64(bits, 1);
        let tol = &BigReal::pow10_with_bits(bits, -(ctx.decimal_digits() as i64 / 2)) + &r.radius;
        if (&a - &one).abs() <= tol {
            on_count += 1;
            let theta = r.value.arg(); // (-pi, pi]
            let two_pi = {
                let pi = BigReal::from_raw(rug::Float::with_val(bits, rug::float::Constant::Pi));
                &pi + &pi
            };
            let mut t = &theta / &two_pi;
            if t.is_negative() {
                t = &t + &one;
            }
            args.push(t);
        }
    }
    if sf.is_palindromic() && sf.coeff(0) != crate::rint(0) {
        let exact = sturm_count_on_circle(&sf)?;
        assert_eq!(
            on_count, exact,
            "numeric on-circle count disagrees with the Sturm count"
        );
    }
    args.sort_by(|a, b| a.partial_cmp(b).unwrap());
    args.dedup_by(|a, b| {
        let d = (&*a - &*b).abs();
        d < BigReal::pow10_with_bits(d.bits(), -(ctx.decimal_digits() as i64))
    });
    Ok(args)
}

/// Closed integration pieces covering [t0, t0 + 1] split at the given sorted
/// arguments (the last piece wraps past 1; the integrand is 1-periodic).
pub fn pieces_from_args(args: &[BigReal], ctx: &PrecisionContext) -> Vec<(BigReal, BigReal)> {
    let zero = ctx.zero();
    let one = ctx.one();
    if args.is_empty() {
        return vec![(zero, one)];
    }
    let args: Vec<BigReal> = args.iter().map(|a| a.to_context(ctx)).collect();
    let mut out = Vec::new();
    for w in args.windows(2) {
        out.push((w[0].clone(), w[1].clone()));
    }
    let wrap_end = &args[0] + &one;
    out.push((args[args.len() - 1].clone(), wrap_end));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_args() {
        // x^2 + 1: roots at t = 1/4, 3/4
        let ctx = PrecisionContext::new(30);
        let args = on_circle_args(&UniPoly::from_i64(&[1, 0, 1]), &ctx).unwrap();
        assert_eq!(args.len(), 2);
        assert!((args[0].to_f64() - 0.25).abs() < 1e-20);
        assert!((args[1].to_f64() - 0.75).abs() < 1e-20);
    }

    #[test]
    fn off_circle_roots_ignored() {
        let ctx = PrecisionContext::new(30);
        // (x - 2)(x - 3)
        let p = &UniPoly::from_i64(&[-2, 1]) * &UniPoly::from_i64(&[-3, 1]);
        assert!(on_circle_args(&p, &ctx).unwrap().is_empty());
    }

    #[test]
    fn pieces_wrap() {
        let ctx = PrecisionContext::new(30);
        let args = vec![ctx.real_from_f64(0.25), ctx.real_from_f64(0.5)];
        let pieces = pieces_from_args(&args, &ctx);
        assert_eq!(pieces.len(), 2);
        assert!((pieces[1].1.to_f64() - 1.25).abs() < 1e-15);
    }
}
