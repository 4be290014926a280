//! Modular arithmetic helpers shared by the affine constructions.

use num_integer::Integer;

/// Reduce a signed value into `0..m`.
pub fn modulo(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

pub fn gcd(a: i64, b: i64) -> u64 {
    a.gcd(&b).unsigned_abs()
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(m as i64));
    if e.gcd != 1 {
        return None;
    }
    Some(modulo(e.x, m))
}

/// Multiplicative order of `t` modulo `m`. `None` when `t` is not a unit.
pub fn mult_order(t: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(t as i64, m as i64) != 1 {
        return None;
    }
    let t = t % m;
    let mut acc = t;
    let mut k = 1;
    while acc != 1 {
        acc = acc * t % m;
        k += 1;
    }
    Some(k)
}

/// `1 + t + ... + t^(k-1)` reduced mod `m`, summed term by term.
pub fn geometric_sum(t: u64, k: u64, m: u64) -> u64 {
    let mut sum = 0u64;
    let mut term = 1 % m;
    for _ in 0..k {
        sum = (sum + term) % m;
        term = term * (t % m) % m;
    }
    sum
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Units of `Z_m`, ascending.
pub fn units(m: u64) -> Vec<u64> {
    (0..m).filter(|&t| gcd(t as i64, m as i64) == 1).collect()
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
