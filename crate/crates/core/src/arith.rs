//! Elementary number theory: gcd, deterministic trial-division factorization,
//! Euler's totient, and detection of denominators of the shape `2*p^j`.
//!
//! Indices and moduli here are machine integers (`u64`); everything that can
//! genuinely grow (polynomial coefficients, rational values, the big powers in
//! the Diophantine search) lives in `num-bigint`/`num-rational` types elsewhere.

use num_bigint::BigInt;
use num_traits::One;

/// Prime factorization as an ordered list of `(prime, exponent)` pairs,
/// primes strictly increasing, exponents >= 1. The empty list is `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Recompose the factored number.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
            .max(1)
    }
}

/// Greatest common divisor of two signed integers; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    num_integer::gcd(a.unsigned_abs(), b.unsigned_abs())
}

/// Complete prime factorization by trial division.
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n > 0, "factorize: n must be positive");
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p: u64 = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { factors }
}

/// Euler's totient, computed from the factorization.
///
/// Panics if `n == 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "euler_phi: n must be positive");
    let mut phi = 1u64;
    for &(p, e) in &factorize(n).factors {
        phi *= p.pow(e - 1) * (p - 1);
    }
    phi
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors: n must be positive");
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Decompose `b = 2 * p^j` with `p` prime and `j >= 1`, if possible.
///
/// `p = 2` is permitted, in which case `b = 2^(j+1)`. Returns `None` when `b`
/// is not of that shape (odd `b`, `b = 2`, or `b/2` with several prime factors).
pub fn two_p_j_form(b: u64) -> Option<(u64, u32)> {
    if b < 4 || b % 2 != 0 {
        return None;
    }
    let half = factorize(b / 2);
    match half.factors.as_slice() {
        [(p, j)] => Some((*p, *j)),
        _ => None,
    }
}

/// `2^e` as a big integer.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}
