//! Laurent polynomials with big-integer coefficients, used for identities of
//! the shape `x^n + x^-n = R_n(x + x^-1)`.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;

/// `coeffs[i]` multiplies `x^(lo + i)`; both ends trimmed, zero = empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn from_coeffs(mut lo: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let leading_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            coeffs.drain(..leading_zeros);
            lo += leading_zeros as i64;
        }
        if coeffs.is_empty() {
            lo = 0;
        }
        LaurentPoly { lo, coeffs }
    }

    pub fn from_parts(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(lo, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly {
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// `x + x^-1`.
    pub fn x_plus_x_inv() -> Self {
        Self::from_parts(-1, &[1, 0, 1])
    }

    /// `x^n + x^-n` (the constant `2` when `n = 0`).
    pub fn x_pow_plus_x_neg(n: u64) -> Self {
        if n == 0 {
            return Self::constant(BigInt::from(2));
        }
        let mut coeffs = vec![BigInt::zero(); 2 * n as usize + 1];
        coeffs[0] = BigInt::from(1);
        coeffs[2 * n as usize] = BigInt::from(1);
        Self::from_coeffs(-(n as i64), coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Minimum stored exponent (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Multiply by `x^k` and return an ordinary polynomial.
    ///
    /// Panics if `lo + k < 0`, i.e. if negative exponents remain.
    pub fn shift_to_poly(&self, k: i64) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let start = self.lo + k;
        assert!(start >= 0, "shift_to_poly: x^{k} leaves negative exponents");
        let mut coeffs = vec![BigInt::zero(); start as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly::from_coeffs(coeffs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let lo = self.lo.min(rhs.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(rhs.lo + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.lo - lo) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.lo + rhs.lo, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_examples() {
        // (x + x^-1 + 2) * x = x^2 + 2x + 1
        let l = LaurentPoly::from_parts(-1, &[1, 2, 1]);
        assert_eq!(l.shift_to_poly(1), IntPoly::from_i64(&[1, 2, 1]));
        // (x^2 + x^-2) * x^2 = x^4 + 1
        let l = LaurentPoly::x_pow_plus_x_neg(2);
        assert_eq!(l.shift_to_poly(2), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(LaurentPoly::zero().shift_to_poly(3), IntPoly::zero());
    }

    #[test]
    #[should_panic]
    fn shift_rejects_negative_exponents() {
        LaurentPoly::x_plus_x_inv().shift_to_poly(0);
    }

    #[test]
    fn mul_add_normalize() {
        let a = LaurentPoly::x_plus_x_inv();
        let sq = &a * &a; // x^2 + 2 + x^-2
        assert_eq!(sq, LaurentPoly::from_parts(-2, &[1, 0, 2, 0, 1]));
        let minus_two = LaurentPoly::constant(BigInt::from(-2));
        assert_eq!(sq + minus_two, LaurentPoly::x_pow_plus_x_neg(2));
    }
}
