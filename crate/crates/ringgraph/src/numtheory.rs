//! Integer utilities behind the closed-form counts: divisors, d(n), sigma(n),
//! the Moebius function and irreducible-polynomial counts N_p(d).

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumTheoryError {
    #[error("input must be positive")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("intermediate value overflows 64-bit range")]
    Overflow,
}

/// Divisor data of a positive integer: the ascending divisor list together
/// with d(n) and sigma(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    pub n: u64,
    pub divisors: Vec<u64>,
    pub d: u64,
    pub sigma: u64,
}

impl DivisorProfile {
    pub fn new(n: u64) -> Result<Self, NumTheoryError> {
        let divisors = divisors(n)?;
        let d = divisors.len() as u64;
        let sigma = divisors.iter().sum();
        Ok(DivisorProfile { n, divisors, d, sigma })
    }
}

/// All positive divisors of `n`, ascending. Trial division; inputs are tiny.
pub fn divisors(n: u64) -> Result<Vec<u64>, NumTheoryError> {
    if n == 0 {
        return Err(NumTheoryError::ZeroInput);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// d(n), the number of positive divisors of n.
pub fn divisor_count(n: u64) -> Result<u64, NumTheoryError> {
    Ok(divisors(n)?.len() as u64)
}

/// sigma(n), the sum of positive divisors of n.
pub fn divisor_sigma(n: u64) -> Result<u64, NumTheoryError> {
    Ok(divisors(n)?.iter().sum())
}

/// Moebius function: 1 at 1, (-1)^z on squarefree products of z primes, 0 otherwise.
pub fn mobius(r: u64) -> Result<i64, NumTheoryError> {
    if r == 0 {
        return Err(NumTheoryError::ZeroInput);
    }
    let mut m = r;
    let mut prime_factors = 0i64;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            prime_factors += 1;
        }
        p += 1;
    }
    if m > 1 {
        prime_factors += 1;
    }
    Ok(if prime_factors % 2 == 0 { 1 } else { -1 })
}

/// Deterministic trial-division primality check, adequate for p up to 10^6.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// N_p(d) = (1/d) sum_{r | d} mu(r) p^{d/r}, the number of monic irreducible
/// polynomials of degree d over GF(p).
pub fn count_irreducible(p: u64, d: u64) -> Result<u64, NumTheoryError> {
    if d == 0 {
        return Err(NumTheoryError::ZeroInput);
    }
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    let mut total: i128 = 0;
    for r in divisors(d)? {
        let mu = mobius(r)?;
        if mu == 0 {
            continue;
        }
        let pw = checked_pow_i128(p, d / r)?;
        total += mu as i128 * pw;
    }
    let n = total / d as i128;
    if n < 1 || n > u64::MAX as i128 {
        return Err(NumTheoryError::Overflow);
    }
    Ok(n as u64)
}

fn checked_pow_i128(base: u64, exp: u64) -> Result<i128, NumTheoryError> {
    let mut acc: i128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as i128).ok_or(NumTheoryError::Overflow)?;
        if acc > (1i128 << 100) {
            return Err(NumTheoryError::Overflow);
        }
    }
    Ok(acc)
}

/// p^e as u64 with an explicit overflow error instead of wrapping.
pub fn checked_pow(base: u64, exp: u64) -> Result<u64, NumTheoryError> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(NumTheoryError::Overflow)?;
    }
    Ok(acc)
}
