//! Factorization of machine-sized integers.
//!
//! Small factors are removed by trial division; whatever cofactor remains is
//! split with Miller-Rabin and Pollard's rho so that radicands near `2^64`
//! still factor quickly.

use alloc::vec::Vec;

const TRIAL_LIMIT: u64 = 1 << 12;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// Brent's variant; `n` must be odd and composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn split(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

/// Prime factorization as `(prime, multiplicity)` pairs in ascending order.
/// `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor zero");
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_LIMIT && p * p <= n {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        split(n, &mut primes);
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, k)) if *last == q => *k += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// True when `n` is a perfect `k`-th power of a positive integer.
pub fn is_perfect_power(n: u64, k: u32) -> bool {
    if n <= 1 {
        return true;
    }
    factorize(n).iter().all(|&(_, e)| e % k == 0)
}

/// True when no prime divides `n` to the fourth power or higher.
pub fn is_fourth_power_free(n: u64) -> bool {
    n > 0 && factorize(n).iter().all(|&(_, e)| e < 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_factorizations() {
        assert!(factorize(1).is_empty());
        assert_eq!(factorize(2), vec![(2, 1)]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(13122), vec![(2, 1), (3, 8)]);
    }

    #[test]
    fn large_factorizations() {
        // 2^64 - 59 is prime.
        let p = u64::MAX - 58;
        assert!(is_prime(p));
        assert_eq!(factorize(p), vec![(p, 1)]);
        // product of two primes near 2^32
        let a = 4_294_967_291u64;
        let b = 4_294_967_279u64;
        assert_eq!(factorize(a * b), vec![(b, 1), (a, 1)]);
    }

    #[test]
    fn power_predicates() {
        assert!(is_perfect_power(81, 4));
        assert!(!is_perfect_power(80, 4));
        assert!(is_fourth_power_free(5));
        assert!(!is_fourth_power_free(80));
        assert!(is_fourth_power_free(40));
    }
}
