//! Integer factorization: trial division by small primes, then Pollard rho
//! (Brent's cycle detection) on whatever cofactor remains.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::PolyError;

const TRIAL_LIMIT: u32 = 10_000;

/// Prime factorization of `n ≥ 1` as ascending `(prime, exponent)` pairs.
/// `1` factors as the empty list.
pub fn factor_integer(n: &BigUint) -> Result<Vec<(BigUint, u32)>, PolyError> {
    if n.is_zero() {
        return Err(PolyError::FactorZero);
    }
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();
    for p in small_primes(TRIAL_LIMIT) {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            *found.entry(bp.clone()).or_default() += 1;
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *found.entry(m).or_default() += 1;
            continue;
        }
        let d = pollard_brent(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    Ok(found.into_iter().collect())
}

/// Formats as `2^3*3^3`; `1` prints as `1`.
pub fn format_factorization(factors: &[(BigUint, u32)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (i, (p, e)) in factors.iter().enumerate() {
        if i > 0 {
            out.push('*');
        }
        if *e == 1 {
            write!(out, "{p}").unwrap();
        } else {
            write!(out, "{p}^{e}").unwrap();
        }
    }
    out
}

fn small_primes(limit: u32) -> Vec<u32> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut primes = Vec::new();
    for i in 2..=limit as usize {
        if sieve[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= limit as usize {
                sieve[j] = false;
                j += i;
            }
        }
    }
    primes
}

/// Miller–Rabin over the first twelve prime bases; deterministic below
/// 3.3·10^24, probabilistic beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &b in &BASES {
        let bb = BigUint::from(b);
        if n == &bb {
            return true;
        }
        if (n % &bb).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &b in &BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial divisor of the composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Factors a machine integer; convenience over [`factor_integer`].
pub fn factor_u64(n: u64) -> Result<Vec<(u64, u32)>, PolyError> {
    Ok(factor_integer(&BigUint::from(n))?
        .into_iter()
        .map(|(p, e)| (p.to_u64().expect("factor of a u64 fits"), e))
        .collect())
}
