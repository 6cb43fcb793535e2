//! Trace-of-Frobenius counting: a_p by direct point counting over F_p with a
//! quadratic-residue bitset (O(p) per prime), bad primes from the reduction
//! type.

use crate::curvealg::EllipticCurveQ;
use crate::Int;
use num_traits::ToPrimitive;

/// Quadratic-character lookup table mod an odd prime.
struct QrTable {
    bits: Vec<u64>,
}

impl QrTable {
    fn new(p: u64) -> QrTable {
        let words = (p as usize + 63) / 64;
        let mut bits = vec![0u64; words];
        let mut r = 0u64;
        while r <= p / 2 {
            let sq = ((r as u128 * r as u128) % p as u128) as u64;
            bits[(sq / 64) as usize] |= 1 << (sq % 64);
            r += 1;
        }
        QrTable { bits }
    }

    /// chi(v) for v already reduced mod p.
    #[inline]
    fn chi(&self, v: u64) -> i64 {
        if v == 0 {
            return 0;
        }
        if self.bits[(v / 64) as usize] >> (v % 64) & 1 == 1 {
            1
        } else {
            -1
        }
    }
}

fn mod_u64(v: &Int, p: u64) -> u64 {
    let m = v % Int::from(p);
    let m = if m < Int::from(0) { m + Int::from(p) } else { m };
    m.to_u64().unwrap()
}

/// a_p at a good odd prime: a_p = -sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6).
fn ap_good_odd(e: &EllipticCurveQ, p: u64) -> i64 {
    let (b2, b4, b6, _) = e.b_invariants();
    let (b2, b4, b6) = (mod_u64(&b2, p), mod_u64(&(b4 * 2), p), mod_u64(&b6, p));
    let qr = QrTable::new(p);
    let pp = p as u128;
    let mut sum = 0i64;
    for x in 0..p {
        let x2 = (x as u128 * x as u128) % pp;
        let x3 = (x2 * x as u128) % pp;
        let v = (4 * x3 % pp + b2 as u128 * x2 % pp + b4 as u128 * x as u128 % pp + b6 as u128)
            % pp;
        sum += qr.chi(v as u64);
    }
    -sum
}

fn ap_good_two(e: &EllipticCurveQ) -> i64 {
    // brute force over F_2 plus the point at infinity
    let [a1, a2, a3, a4, a6] = &e.a;
    let m = |v: &Int| mod_u64(v, 2);
    let (a1, a2, a3, a4, a6) = (m(a1), m(a2), m(a3), m(a4), m(a6));
    let mut count = 1i64;
    for x in 0..2u64 {
        for y in 0..2u64 {
            let lhs = (y * y + a1 * x * y + a3 * y) % 2;
            let rhs = (x * x * x + a2 * x * x + a4 * x + a6) % 2;
            if lhs == rhs {
                count += 1;
            }
        }
    }
    2 + 1 - count
}

/// a_p for any prime: good primes by counting, bad primes from the local
/// reduction data (split +1 / nonsplit -1 / additive 0).
pub fn ap_count(e: &EllipticCurveQ, p: u64) -> i64 {
    if let Some(local) = e.local_at(&Int::from(p)) {
        return local.ap as i64;
    }
    if p == 2 {
        ap_good_two(e)
    } else {
        ap_good_odd(e, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvealg::minimal_model_int;

    fn e36() -> EllipticCurveQ {
        minimal_model_int([0.into(), 0.into(), 0.into(), 0.into(), 1.into()]).unwrap()
    }

    #[test]
    fn ap_of_e36_brute_force_checks() {
        // y^2 = x^3 + 1 over F_5: 6 points: (0,±1),(2,±2),(4,0),(-1,0)
        let e = e36();
        assert_eq!(ap_count(&e, 5), 0);
        assert_eq!(ap_count(&e, 7), -4);
        assert_eq!(ap_count(&e, 13), 2);
        // supersingular at p = 2 mod 3 for this CM curve
        assert_eq!(ap_count(&e, 11), 0);
    }

    #[test]
    fn hasse_bound() {
        let e = e36();
        for p in crate::arith::primes_below(200) {
            let ap = ap_count(&e, p);
            assert!((ap * ap) as f64 <= 4.0 * p as f64, "p = {p}, ap = {ap}");
        }
    }

    #[test]
    fn curve_11a3_ap() {
        // 11a3: a_2 = -2, a_3 = -1, a_5 = 1, a_7 = -2, a_13 = 4
        let e = minimal_model_int([0.into(), (-1).into(), 1.into(), 0.into(), 0.into()]).unwrap();
        assert_eq!(ap_count(&e, 2), -2);
        assert_eq!(ap_count(&e, 3), -1);
        assert_eq!(ap_count(&e, 5), 1);
        assert_eq!(ap_count(&e, 7), -2);
        assert_eq!(ap_count(&e, 13), 4);
        // split multiplicative at 11
        assert_eq!(ap_count(&e, 11), 1);
    }
}
