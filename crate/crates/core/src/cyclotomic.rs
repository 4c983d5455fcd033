//! Cyclotomic polynomials `Phi_n` by memoized divide-out recursion, their
//! coefficients `a(j, n)`, and the closed forms for `Phi_{4p^j}` and
//! `Phi_{2^{j+2}}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::arith::{divisors, euler_phi};
use crate::poly::IntPoly;

/// Memo table from `n` to `Phi_n`. Entries are filled in divisor order under
/// an exclusive lock, so every lookup sees a fully computed polynomial and
/// results are deterministic under concurrent use.
pub struct CyclotomicCache {
    inner: Mutex<HashMap<u64, Arc<IntPoly>>>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        CyclotomicCache {
            inner: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, n: u64) -> Arc<IntPoly> {
        assert!(n > 0, "cyclotomic: n must be positive");
        let mut map = self.inner.lock().unwrap();
        if let Some(p) = map.get(&n) {
            return Arc::clone(p);
        }
        for d in divisors(n) {
            if map.contains_key(&d) {
                continue;
            }
            let phi_d = if d == 1 {
                IntPoly::from_i64(&[-1, 1])
            } else {
                // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d,
                // all of which are already cached.
                let mut prod = IntPoly::one();
                for e in divisors(d) {
                    if e < d {
                        prod = &prod * map.get(&e).unwrap();
                    }
                }
                IntPoly::x_pow_minus_one(d as usize)
                    .exact_div(&prod)
                    .expect("cyclotomic division is always exact")
            };
            map.insert(d, Arc::new(phi_d));
        }
        Arc::clone(map.get(&n).unwrap())
    }
}

impl Default for CyclotomicCache {
    fn default() -> Self {
        Self::new()
    }
}

fn cache() -> &'static CyclotomicCache {
    static CACHE: OnceLock<CyclotomicCache> = OnceLock::new();
    CACHE.get_or_init(CyclotomicCache::new)
}

/// The `n`-th cyclotomic polynomial, memoized process-wide.
///
/// Panics if `n == 0`.
pub fn cyclotomic(n: u64) -> Arc<IntPoly> {
    cache().get(n)
}

/// Coefficient `a(j, n)` of `x^(phi(n) - j)` in `Phi_n`; zero for `j > phi(n)`.
///
/// Panics if `n == 0`.
pub fn coeff_a(j: u64, n: u64) -> BigInt {
    let phi = euler_phi(n);
    if j > phi {
        return BigInt::from(0);
    }
    cyclotomic(n).coeff((phi - j) as usize)
}

/// `Phi_{4p^j}` for an odd prime `p`, via the closed form
/// `(x^(2p^j) + 1) / (x^(2p^(j-1)) + 1)`.
///
/// Panics if `p` is not an odd prime or `j == 0`.
pub fn phi_4pj_closed(p: u64, j: u32) -> IntPoly {
    assert!(j >= 1, "phi_4pj_closed: j must be >= 1");
    assert!(
        p % 2 == 1 && crate::arith::factorize(p).factors.len() == 1 && p > 1,
        "phi_4pj_closed: p must be an odd prime"
    );
    let num = IntPoly::x_pow_plus_one(2 * p.pow(j) as usize);
    let den = IntPoly::x_pow_plus_one(2 * p.pow(j - 1) as usize);
    num.exact_div(&den)
        .expect("x^(2p^(j-1)) + 1 divides x^(2p^j) + 1 for odd p")
}

/// `Phi_{2^(j+2)} = x^(2^(j+1)) + 1`.
pub fn phi_power_of_two_closed(j: u32) -> IntPoly {
    IntPoly::x_pow_plus_one(1 << (j + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(*cyclotomic(8), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(*cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    #[should_panic]
    fn zero_rejected() {
        cyclotomic(0);
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=120u64 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = &prod * &cyclotomic(d);
            }
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn degree_is_phi() {
        for n in 1..=200u64 {
            assert_eq!(cyclotomic(n).degree(), Some(euler_phi(n) as usize));
        }
    }

    #[test]
    fn coeff_a_examples() {
        assert_eq!(coeff_a(0, 12), BigInt::from(1));
        assert_eq!(coeff_a(2, 12), BigInt::from(-1));
        assert_eq!(coeff_a(9, 12), BigInt::from(0));
        // constant term a(phi(n), n) is the actual constant, not zero
        assert_eq!(coeff_a(4, 12), BigInt::from(1));
    }

    #[test]
    fn palindrome_property() {
        for n in 2..=150u64 {
            let phi = euler_phi(n);
            for j in 0..=phi {
                assert_eq!(coeff_a(j, n), coeff_a(phi - j, n), "n = {n}, j = {j}");
            }
        }
    }

    #[test]
    fn closed_forms_match() {
        assert_eq!(phi_4pj_closed(3, 1), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(
            phi_4pj_closed(5, 1),
            IntPoly::from_i64(&[1, 0, -1, 0, 1, 0, -1, 0, 1])
        );
        assert_eq!(phi_4pj_closed(3, 2), *cyclotomic(36));
        assert_eq!(phi_power_of_two_closed(0), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(
            phi_power_of_two_closed(1),
            IntPoly::from_i64(&[1, 0, 0, 0, 1])
        );
        assert_eq!(
            phi_power_of_two_closed(2),
            IntPoly::from_i64(&[1, 0, 0, 0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn evaluations_at_one() {
        let one = BigRational::one();
        assert!(phi_4pj_closed(3, 1).eval_rational(&one).is_one());
        assert!(phi_4pj_closed(7, 1).eval_rational(&one).is_one());
        assert_eq!(
            phi_power_of_two_closed(3).eval_rational(&one),
            BigRational::from(BigInt::from(2))
        );
    }
}
