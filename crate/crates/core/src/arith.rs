//! Integer utilities: sieves, Kronecker symbols and deterministic factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Primes below `n` by a simple sieve of Eratosthenes.
pub fn primes_below(n: u64) -> Vec<u64> {
    if n < 3 {
        return vec![];
    }
    let n = n as usize;
    let mut is_comp = vec![false; n];
    let mut out = Vec::new();
    for p in 2..n {
        if !is_comp[p] {
            out.push(p as u64);
            let mut q = p * p;
            while q < n {
                is_comp[q] = true;
                q += p;
            }
        }
    }
    out
}

/// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0).
pub fn spf_table(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// x^e mod m over u64, m < 2^63.
pub fn modpow64(x: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base: u128 = (x % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Kronecker symbol (a|n), extending the Jacobi symbol to all integers.
pub fn kronecker(a: &BigInt, n: &BigInt) -> i32 {
    let zero = BigInt::zero();
    let one = BigInt::one();
    if n.is_zero() {
        return if a.magnitude() == one.magnitude() { 1 } else { 0 };
    }
    let mut a = a.clone();
    let mut n = n.clone();
    // (a|2) rules
    if n.is_even() && a.is_even() {
        return 0;
    }
    let mut result = 1i32;
    if n < zero {
        n = -n;
        if a < zero {
            result = -result;
        }
    }
    // strip factors of 2 from n
    let mut v = 0u32;
    while n.is_even() {
        n >>= 1;
        v += 1;
    }
    if v % 2 == 1 {
        // (a|2) = 0, 1, -1 for a even, a = ±1 mod 8, a = ±3 mod 8
        let amod8 = ((&a % 8i32 + 8i32) % 8i32).to_i32().unwrap();
        match amod8 {
            1 | 7 => {}
            3 | 5 => result = -result,
            _ => return 0,
        }
    }
    a = ((&a % &n) + &n) % &n;
    while !a.is_zero() {
        let mut v = 0u32;
        while a.is_even() {
            a >>= 1;
            v += 1;
        }
        if v % 2 == 1 {
            let nmod8 = (&n % 8i32).to_i32().unwrap();
            if nmod8 == 3 || nmod8 == 5 {
                result = -result;
            }
        }
        // quadratic reciprocity for odd a, n
        if (&a % 4i32).to_i32().unwrap() == 3 && (&n % 4i32).to_i32().unwrap() == 3 {
            result = -result;
        }
        let r = a;
        a = &n % &r;
        n = r;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Kronecker symbol for machine-sized inputs.
pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    kronecker(&BigInt::from(a), &BigInt::from(n))
}

/// True if n is squarefree (trial division; n must fit in u64 range in practice).
pub fn is_squarefree_u64(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

fn pollard_brent(n: &BigInt, seed: u64) -> BigInt {
    // Brent's cycle variant of Pollard rho with a deterministic seed.
    let two = BigInt::from(2);
    if (n % &two).is_zero() {
        return two;
    }
    let c = BigInt::from(seed * 2 + 1);
    let mut x = BigInt::from(seed + 2);
    let mut y = x.clone();
    let mut d = BigInt::one();
    let f = |v: &BigInt| (v * v + &c) % n;
    while d.is_one() {
        x = f(&x);
        y = f(&f(&y));
        let diff = if x > y { &x - &y } else { &y - &x };
        if diff.is_zero() {
            return BigInt::zero(); // cycle without factor, caller reseeds
        }
        d = diff.gcd(n);
    }
    if &d == n {
        BigInt::zero()
    } else {
        d
    }
}

fn is_prime_big(n: &BigInt) -> bool {
    // deterministic Miller-Rabin for n < 3.3e24 with the standard witness set
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let pb = BigInt::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let mut d = n_minus_1.clone();
    let mut r = 0u32;
    while d.is_even() {
        d >>= 1;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic factorization of |n|: trial division to 10^6 then Pollard-Brent.
/// Returns (prime, exponent) pairs sorted by prime.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    // trial division by 2, then odd numbers up to 10^6
    let p = BigInt::from(2);
    while (&n % &p).is_zero() {
        push(p.clone(), &mut out);
        n /= &p;
    }
    let mut d = 3u64;
    while d <= 1_000_000 {
        let db = BigInt::from(d);
        if &(&db * &db) > &n {
            break;
        }
        while (&n % &db).is_zero() {
            push(db.clone(), &mut out);
            n /= &db;
        }
        d += 2;
    }
    // remaining cofactor: prime, or split recursively by rho
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime_big(&m) {
            push(m, &mut out);
            continue;
        }
        let mut fac = BigInt::zero();
        for seed in 1..64u64 {
            fac = pollard_brent(&m, seed);
            if !fac.is_zero() && !fac.is_one() && fac != m {
                break;
            }
        }
        assert!(
            !fac.is_zero() && fac != m,
            "pollard rho failed to split {m}"
        );
        stack.push(&m / &fac);
        stack.push(fac);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// v_p(n) and n / p^{v_p(n)}.
pub fn val_p(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    assert!(!n.is_zero());
    let mut v = 0;
    let mut m = n.clone();
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    (v, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_matches_legendre_small() {
        // chi_{-3}: (-3|n) has period 3: 1, -1 for n = 1, 2 mod 3
        assert_eq!(kronecker_i64(-3, 1), 1);
        assert_eq!(kronecker_i64(-3, 2), -1);
        assert_eq!(kronecker_i64(-3, 3), 0);
        assert_eq!(kronecker_i64(-3, 4), 1);
        // chi_{-4}: 1, -1 for n = 1, 3 mod 4
        assert_eq!(kronecker_i64(-4, 1), 1);
        assert_eq!(kronecker_i64(-4, 3), -1);
        assert_eq!(kronecker_i64(-4, 5), 1);
        // odd character: chi(-1) = -1
        for f in [3i64, 4, 7, 8, 11, 15, 23] {
            assert_eq!(kronecker_i64(-f, -1), -1, "f = {f}");
        }
    }

    #[test]
    fn factor_roundtrip() {
        for n in [2u64, 36, 48, 1127808, 5040, 999_999_937, 1_127_808_000] {
            let nb = BigInt::from(n);
            let fs = factor(&nb);
            let mut prod = BigInt::one();
            for (p, e) in &fs {
                assert!(is_prime_big(p));
                prod *= p.pow(*e);
            }
            assert_eq!(prod, nb);
        }
    }

    #[test]
    fn factor_large_semiprime() {
        let n = BigInt::from(1_000_003u64) * BigInt::from(999_999_937u64);
        let fs = factor(&n);
        assert_eq!(fs.len(), 2);
    }
}
