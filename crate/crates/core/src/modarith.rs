//! Modular arithmetic helpers: canonical reduction, modular inverse via
//! the extended Euclidean algorithm, and smallest-prime-factor search.

use crate::error::Error;
use crate::types::MAX_MODULUS;

/// A canonical residue paired with its modulus.
///
/// Invariant: `value < modulus` and `modulus >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces `x` into the canonical range `[0, modulus)`.
    pub fn new(x: i64, modulus: u64) -> Result<Self, Error> {
        Ok(Self {
            value: reduce(x, modulus)?,
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Maps `x` to its canonical residue in `[0, modulus)`.
///
/// Negative inputs wrap toward zero: `reduce(-2, 5) == 3`.
pub fn reduce(x: i64, modulus: u64) -> Result<u64, Error> {
    if modulus == 0 || modulus > MAX_MODULUS {
        return Err(Error::InvalidModulus(modulus));
    }
    Ok((x as i128).rem_euclid(modulus as i128) as u64)
}

/// Returns the unique `e` in `[1, p)` with `d * e ≡ 1 (mod p)`.
///
/// `d` must be a nonzero residue modulo `p`. For prime `p` the inverse
/// always exists; for composite `p` it exists iff `gcd(d, p) == 1`.
pub fn mod_inverse(d: u64, p: u64) -> Result<u64, Error> {
    if p < 2 || p > MAX_MODULUS {
        return Err(Error::InvalidModulus(p));
    }
    if d == 0 {
        return Err(Error::NoInverse(0, p));
    }
    if d >= p {
        return Err(Error::Contract(
            "mod_inverse input must be a canonical residue",
        ));
    }
    // Iterative extended Euclid on (p, d); old_s tracks the coefficient of d.
    let (mut old_r, mut r) = (p as i64, d as i64);
    let (mut old_s, mut s) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NoInverse(d, p));
    }
    reduce(old_s, p)
}

/// Returns the smallest prime dividing `n`, by trial division up to `√n`.
pub fn smallest_prime_factor(n: u64) -> Result<u64, Error> {
    if n < 2 {
        return Err(Error::Contract("smallest_prime_factor requires n >= 2"));
    }
    if n % 2 == 0 {
        return Ok(2);
    }
    let mut f = 3;
    while f <= n / f {
        if n % f == 0 {
            return Ok(f);
        }
        f += 2;
    }
    Ok(n)
}

/// Primality by trial division; `O(√n)`.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == Ok(n)
}
