//! Quadrature engines: tanh-sinh (double exponential) with level doubling,
//! and an adaptive Gauss-Legendre fallback for integrands that report
//! interior kinks.
//!
//! Tanh-sinh is the workhorse: the Mahler integrands are analytic in the
//! interior of each piece and continuous at the endpoints with square-root
//! derivative blowup (branch points) or integrable log singularities
//! (vanishing leading coefficients), exactly the shapes the double
//! exponential transform absorbs.

use super::context::PrecisionContext;
use super::real::BigReal;
use crate::{Error, Result};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Signals an evaluator may raise at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalSignal {
    /// Branch-tracking ambiguity or non-smooth point detected; quadrature
    /// falls back to adaptive bisection.
    Kink,
}

pub type EvalResult = std::result::Result<BigReal, EvalSignal>;

/// Endpoint behavior flags (square-root branch or log singularity at an
/// endpoint are fine for tanh-sinh; the flags are kept for documentation
/// and potential future strategy choices).
#[derive(Debug, Clone, Copy, Default)]
pub struct EndpointSingularity {
    pub at_lower: bool,
    pub at_upper: bool,
}

/// One tanh-sinh node: abscissa encoded by its distance to the interval
/// endpoint it is closest to, plus the weight.
#[derive(Clone)]
struct Node {
    /// 1 - x where x = tanh((pi/2) sinh(j h)) >= 0, computed stably.
    one_minus_x: BigReal,
    weight: BigReal,
}

/// Cache of node tables keyed by (bits, level).
static NODE_CACHE: Lazy<Mutex<HashMap<(u32, usize), std::sync::Arc<Vec<Node>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Nodes for positive j at the given level, h = 2^-level. j = 0 is included
/// as the first entry (one_minus_x = 1, i.e. x = 0).
fn nodes_for_level(ctx: &PrecisionContext, level: usize) -> std::sync::Arc<Vec<Node>> {
    let key = (ctx.bits(), level);
    if let Some(hit) = NODE_CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let bits = ctx.bits();
    let half_pi = ctx.pi().scale_half();
    let h = {
        let mut v = ctx.one();
        for _ in 0..level {
            v = v.scale_half();
        }
        v
    };
    // cutoff when weights sink below everything we could care about
    let cutoff = BigReal::pow10_with_bits(bits, -(ctx.decimal_digits() as i64 + 25));
    let mut nodes = Vec::new();
    let mut j: i64 = 0;
    loop {
        let t = &h * &ctx.real_from_i64(j);
        let (sh, ch) = t.sinh_cosh();
        let u = &half_pi * &sh; // (pi/2) sinh t
        // x = tanh(u); 1 - x = 2 exp(-2u) / (1 + exp(-2u)), stable for u >= 0
        let e = (-&(&u + &u)).exp();
        let one_minus_x = &(&e + &e) / &(&ctx.one() + &e);
        // w = (pi/2) cosh t / cosh^2(u); cosh(u) = (1+e^{-2u}) e^{u} / 2
        let sech = {
            // 1/cosh(u) = 2 e^{-u} / (1 + e^{-2u})
            let emu = (-&u).exp();
            &(&emu + &emu) / &(&ctx.one() + &e)
        };
        let weight = &(&half_pi * &ch) * &sech.square();
        let done = j > 3 && weight < cutoff;
        nodes.push(Node {
            one_minus_x,
            weight,
        });
        if done {
            break;
        }
        j += 1;
        if j > 40 * (1i64 << level) {
            break;
        }
    }
    let arc = std::sync::Arc::new(nodes);
    NODE_CACHE.lock().unwrap().insert(key, arc.clone());
    arc
}

/// Integrate f over [a, b] by tanh-sinh with level doubling until two
/// successive levels agree to the context quadrature target. Falls back to
/// adaptive Gauss-Legendre bisection if the evaluator reports a kink.
pub fn integrate(
    f: &mut dyn FnMut(&BigReal) -> EvalResult,
    a: &BigReal,
    b: &BigReal,
    _singular: EndpointSingularity,
    ctx: &PrecisionContext,
) -> Result<BigReal> {
    match tanh_sinh(f, a, b, ctx) {
        Ok(v) => Ok(v),
        Err(Error::Other(msg)) if msg == "kink" => gauss_legendre_adaptive(f, a, b, ctx),
        Err(e) => Err(e),
    }
}

/// Plain tanh-sinh; errors with NoConvergence if the level cap is reached,
/// and with a "kink" marker error when the evaluator signals one.
pub fn tanh_sinh(
    f: &mut dyn FnMut(&BigReal) -> EvalResult,
    a: &BigReal,
    b: &BigReal,
    ctx: &PrecisionContext,
) -> Result<BigReal> {
    assert!(a < b, "empty integration interval");
    let halfwidth = (b - a).scale_half();
    let center = &(a + b).scale_half() + &ctx.zero();
    let target = ctx.quadrature_target();
    let mut prev: Option<BigReal> = None;
    // sum accumulated over all levels: level L uses h = 2^-L and the node
    // set doubles; previously evaluated nodes are the even-index ones.
    let mut sum = ctx.zero();
    let mut evaluate = |t: &BigReal| -> Result<Option<BigReal>> {
        match f(t) {
            Ok(v) => Ok(Some(v)),
            Err(EvalSignal::Kink) => Ok(None),
        }
    };
    let max_level = 12usize;
    let mut last_delta = ctx.zero();
    let mut prev_len = 0usize; // node count of the previous level's table
    for level in 0..=max_level {
        let nodes = nodes_for_level(ctx, level);
        // nodes with even index j coincide with level-1 nodes at j/2 and were
        // already accumulated; new nodes are odd j, plus any beyond the
        // previous table's doubled range.
        for (j, node) in nodes.iter().enumerate() {
            let is_new = level == 0 || j % 2 == 1 || j >= 2 * prev_len;
            if !is_new {
                continue;
            }
            if j == 0 {
                let v = match evaluate(&center)? {
                    Some(v) => v,
                    None => return Err(Error::Other("kink".into())),
                };
                sum = &sum + &(&v * &node.weight);
            } else {
                let off = &halfwidth * &node.one_minus_x;
                for t in [b - &off, a + &off] {
                    let v = match evaluate(&t)? {
                        Some(v) => v,
                        None => return Err(Error::Other("kink".into())),
                    };
                    sum = &sum + &(&v * &node.weight);
                }
            }
        }
        prev_len = nodes.len();
        // I_level = h * halfwidth * sum, h = 2^-level
        let mut estimate = &sum * &halfwidth;
        for _ in 0..level {
            estimate = estimate.scale_half();
        }
        if let Some(p) = &prev {
            let delta = (&estimate - p).abs();
            let scale = &estimate.abs() + &ctx.one();
            last_delta = &delta / &scale;
            if level >= 3 && last_delta < target {
                return Ok(estimate);
            }
        }
        prev = Some(estimate);
    }
    Err(Error::NoConvergence {
        level: max_level,
        last_delta: format!("{last_delta:?}"),
    })
}

/// Gauss-Legendre nodes and weights of fixed order on [-1, 1], computed by
/// Newton iteration on the Legendre recurrence and cached per precision.
fn gl_nodes(ctx: &PrecisionContext, order: usize) -> Vec<(BigReal, BigReal)> {
    let n = order;
    let mut out = Vec::with_capacity(n);
    let pi = ctx.pi();
    for i in 0..n {
        // initial guess: Chebyshev angle
        let theta = &(&pi * &ctx.real_from_f64(i as f64 + 0.75)) / &ctx.real_from_f64(n as f64 + 0.5);
        let mut x = theta.cos();
        // Newton on P_n(x)
        for _ in 0..200 {
            let (p, dp) = legendre_eval(ctx, n, &x);
            let step = &p / &dp;
            x = &x - &step;
            if step.abs() < ctx.pow10(-(ctx.decimal_digits() as i64 + 5)) {
                break;
            }
        }
        let (_, dp) = legendre_eval(ctx, n, &x);
        let om = &ctx.one() - &x.square();
        let w = &ctx.real_from_i64(2) / &(&om * &dp.square());
        out.push((x, w));
    }
    out
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_eval(ctx: &PrecisionContext, n: usize, x: &BigReal) -> (BigReal, BigReal) {
    let mut p0 = ctx.one();
    let mut p1 = x.clone();
    if n == 0 {
        return (p0, ctx.zero());
    }
    for k in 2..=n {
        let kk = ctx.real_from_i64(k as i64);
        let a = &(&(&kk + &kk) - &ctx.one()) / &kk; // (2k-1)/k
        let b = &(&kk - &ctx.one()) / &kk; // (k-1)/k
        let p2 = &(&(&a * x) * &p1) - &(&b * &p0);
        p0 = p1;
        p1 = p2;
    }
    // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
    let nn = ctx.real_from_i64(n as i64);
    let num = &(&nn * &(&(x * &p1) - &p0));
    let den = &x.square() - &ctx.one();
    (p1, num / &den)
}

/// Adaptive Gauss-Legendre bisection; kinks cause subdivision.
pub fn gauss_legendre_adaptive(
    f: &mut dyn FnMut(&BigReal) -> EvalResult,
    a: &BigReal,
    b: &BigReal,
    ctx: &PrecisionContext,
) -> Result<BigReal> {
    let nodes = gl_nodes(ctx, 24);
    let target = ctx.quadrature_target();
    fn gl_pass(
        f: &mut dyn FnMut(&BigReal) -> EvalResult,
        a: &BigReal,
        b: &BigReal,
        nodes: &[(BigReal, BigReal)],
    ) -> std::result::Result<BigReal, EvalSignal> {
        let halfwidth = (b - a).scale_half();
        let center = (a + b).scale_half();
        let mut acc: Option<BigReal> = None;
        for (x, w) in nodes {
            let t = &center + &(&halfwidth * x);
            let v = f(&t)?;
            let term = &v * w;
            acc = Some(match acc {
                Some(s) => &s + &term,
                None => term,
            });
        }
        Ok(&acc.unwrap() * &halfwidth)
    }
    fn recurse(
        f: &mut dyn FnMut(&BigReal) -> EvalResult,
        a: &BigReal,
        b: &BigReal,
        nodes: &[(BigReal, BigReal)],
        target: &BigReal,
        depth: usize,
        whole: Option<BigReal>,
    ) -> Result<BigReal> {
        if depth > 48 {
            return Err(Error::NoConvergence {
                level: depth,
                last_delta: "gauss-legendre bisection depth exceeded".into(),
            });
        }
        let whole = match whole {
            Some(w) => Some(w),
            None => gl_pass(f, a, b, nodes).ok(),
        };
        let mid = (a + b).scale_half();
        let left = gl_pass(f, a, &mid, nodes).ok();
        let right = gl_pass(f, &mid, b, nodes).ok();
        match (whole, left, right) {
            (Some(w), Some(l), Some(r)) => {
                let split = &l + &r;
                let delta = (&split - &w).abs();
                let scale = &split.abs() + &BigReal::with_bits_i64(split.bits(), 1);
                if &delta / &scale < *target {
                    Ok(split)
                } else {
                    let lv = recurse(f, a, &mid, nodes, target, depth + 1, Some(l))?;
                    let rv = recurse(f, &mid, b, nodes, target, depth + 1, Some(r))?;
                    Ok(&lv + &rv)
                }
            }
            (_, _, _) => {
                // kink somewhere: split blindly
                let lv = recurse(f, a, &mid, nodes, target, depth + 1, None)?;
                let rv = recurse(f, &mid, b, nodes, target, depth + 1, None)?;
                Ok(&lv + &rv)
            }
        }
    }
    recurse(f, a, b, &nodes, &target, 0, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_integral() {
        let ctx = PrecisionContext::new(30);
        let v = tanh_sinh(
            &mut |_t| Ok(PrecisionContext::new(30).one()),
            &ctx.zero(),
            &ctx.one(),
            &ctx,
        )
        .unwrap();
        assert!((&v - &ctx.one()).abs() < ctx.pow10(-24));
    }

    #[test]
    fn beta_function_with_sqrt_endpoints() {
        // int_0^1 sqrt(t(1-t)) dt = pi/8
        let ctx = PrecisionContext::new(40);
        let c2 = ctx;
        let v = tanh_sinh(
            &mut |t| {
                let one = c2.one();
                Ok((&(t * &(&one - t))).sqrt())
            },
            &ctx.zero(),
            &ctx.one(),
            &ctx,
        )
        .unwrap();
        let expect = &ctx.pi() / &ctx.real_from_i64(8);
        assert!(
            (&v - &expect).abs() < ctx.pow10(-33),
            "got {v:?}, want {expect:?}"
        );
    }

    #[test]
    fn log_endpoint_singularity() {
        // int_0^1 ln(t) dt = -1
        let ctx = PrecisionContext::new(40);
        let v = tanh_sinh(&mut |t| Ok(t.ln()), &ctx.zero(), &ctx.one(), &ctx).unwrap();
        assert!((&v + &ctx.one()).abs() < ctx.pow10(-33), "got {v:?}");
    }

    #[test]
    fn gauss_legendre_smooth() {
        // int_0^pi sin t dt = 2
        let ctx = PrecisionContext::new(30);
        let v = gauss_legendre_adaptive(
            &mut |t| Ok(t.sin_cos().0),
            &ctx.zero(),
            &ctx.pi(),
            &ctx,
        )
        .unwrap();
        assert!((&v - &ctx.real_from_i64(2)).abs() < ctx.pow10(-24));
    }

    #[test]
    fn kink_falls_back() {
        // |t - 1/2| on [0,1] = 1/4; evaluator flags the kink region
        let ctx = PrecisionContext::new(30);
        let half = ctx.one().scale_half();
        let h2 = half.clone();
        let v = integrate(
            &mut move |t| {
                let d = t - &h2;
                if d.abs() < BigReal::pow10_with_bits(d.bits(), -28) {
                    return Err(EvalSignal::Kink);
                }
                Ok(d.abs())
            },
            &ctx.zero(),
            &ctx.one(),
            EndpointSingularity::default(),
            &ctx,
        )
        .unwrap();
        let expect = ctx.real_from_f64(0.25);
        assert!((&v - &expect).abs() < ctx.pow10(-20), "got {v:?}");
    }
}
