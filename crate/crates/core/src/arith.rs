//! Integer helpers: gcd/lcm, trial-division factoring, totient, prime-power tests.

use crate::error::{Error, Result};

/// Default bound on trial divisors used when factoring `q^n - 1`.
pub const DEFAULT_FACTOR_CAP: u64 = 10_000_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or_else(|| Error::ResourceCap(format!("lcm({a}, {b}) overflows u64")))
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::ResourceCap(format!("{base}^{exp} overflows u64")))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    // Deterministic Miller-Rabin for all 64-bit inputs.
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Factors `n` by trial division with divisors up to `cap`.
///
/// Fails with [`Error::ResourceCap`] if a cofactor remains whose primality
/// cannot be settled without dividing past `cap`.
pub fn factor_trial(mut n: u64, cap: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if d > cap {
            return Err(Error::ResourceCap(format!(
                "trial division of {n} needs divisors beyond cap {cap}"
            )));
        }
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

pub fn totient(n: u64, cap: u64) -> Result<u64> {
    let mut phi = n;
    for (p, _) in factor_trial(n, cap)? {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// True if `r = p^d` for some `d >= 0`.
pub fn is_power_of(mut r: u64, p: u64) -> bool {
    if r == 0 {
        return false;
    }
    while r % p == 0 {
        r /= p;
    }
    r == 1
}

/// Least `c >= 0` with `p^c >= r`.
pub fn least_exponent_covering(r: u64, p: u64) -> u32 {
    let mut c = 0;
    let mut pc: u128 = 1;
    while pc < r as u128 {
        pc *= p as u128;
        c += 1;
    }
    c
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
