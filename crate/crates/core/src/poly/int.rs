//! Polynomials with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{LaurentPoly, PolyError, RatPoly};

/// Dense polynomial over Z; `coeffs[k]` multiplies `x^k`, leading coefficient
/// nonzero, zero polynomial = empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::from(1))
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::from(1);
        Self::from_coeffs(coeffs)
    }

    /// `x^n + 1`.
    pub fn x_pow_plus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(1);
        coeffs[n] = BigInt::from(1);
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| *c == BigInt::from(1))
    }

    /// Exact quotient `self / den`, or `NotExact` if any division step leaves
    /// a remainder. `den` must divide `self` over Z.
    pub fn exact_div(&self, den: &IntPoly) -> Result<IntPoly, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let n_deg = self.coeffs.len() - 1;
        let d_deg = den.coeffs.len() - 1;
        if n_deg < d_deg {
            return Err(PolyError::NotExact);
        }
        let lead = den.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let head = rem[i + d_deg].clone();
            if head.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&head, lead);
            if !r.is_zero() {
                return Err(PolyError::NotExact);
            }
            for (j, dj) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dj;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotExact);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Expand `self(x + x^-1)` as a Laurent polynomial, exactly.
    pub fn substitute_symmetric(&self) -> LaurentPoly {
        let sym = LaurentPoly::x_plus_x_inv();
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &sym + LaurentPoly::constant(c.clone());
        }
        acc
    }

    pub fn to_rat_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
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
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.abs().to_string(), c.is_negative())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn mul_examples() {
        // (x+1)(x-1) = x^2 - 1
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        // x^2 + (-x^2) = 0
        assert_eq!(&p(&[0, 0, 1]) + &p(&[0, 0, -1]), IntPoly::zero());
        // (x^2+1)(x^4-x^2+1) = x^6 + 1
        assert_eq!(
            &p(&[1, 0, 1]) * &p(&[1, 0, -1, 0, 1]),
            p(&[1, 0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn exact_div_examples() {
        // (x^6+1) / (x^2+1) = x^4 - x^2 + 1
        assert_eq!(
            p(&[1, 0, 0, 0, 0, 0, 1]).exact_div(&p(&[1, 0, 1])),
            Ok(p(&[1, 0, -1, 0, 1]))
        );
        // (x^2-1) / (x-1) = x + 1
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])), Ok(p(&[1, 1])));
        // (x^2+1) / (x+1) leaves a remainder
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(PolyError::NotExact)
        );
        assert_eq!(
            p(&[1, 1]).exact_div(&IntPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::from(BigInt::from(1));
        // (x^4 - x^2 + 1)(1) = 1
        assert_eq!(p(&[1, 0, -1, 0, 1]).eval_rational(&one), one);
        // (x+2)(0) = 2
        assert_eq!(
            p(&[2, 1]).eval_rational(&BigRational::zero()),
            BigRational::from(BigInt::from(2))
        );
        assert_eq!(
            IntPoly::zero().eval_rational(&BigRational::from(BigInt::from(5))),
            BigRational::zero()
        );
    }

    #[test]
    fn substitute_symmetric_examples() {
        // (x + 1/x)^2 - 2 = x^2 + x^-2
        let got = p(&[-2, 0, 1]).substitute_symmetric();
        assert_eq!(got, LaurentPoly::x_pow_plus_x_neg(2));
        // x + 2 -> x + x^-1 + 2
        let got = p(&[2, 1]).substitute_symmetric();
        assert_eq!(got, LaurentPoly::from_parts(-1, &[1, 2, 1]));
        // constant 2 stays 2
        assert_eq!(
            p(&[2]).substitute_symmetric(),
            LaurentPoly::from_parts(0, &[2])
        );
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p(&[1, 0, -1, 0, 1]).to_string(), "x^4 - x^2 + 1");
        assert_eq!(p(&[2, 1]).to_string(), "x + 2");
        assert_eq!(p(&[1, 0, -3]).to_string(), "-3x^2 + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }
}
