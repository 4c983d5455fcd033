//! Polynomials with reduced rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Dense polynomial over Q; same layout conventions as `IntPoly`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Coefficients given as `(numerator, denominator)` pairs, ascending.
    pub fn from_i64_pairs(pairs: &[(i64, i64)]) -> Self {
        Self::from_coeffs(
            pairs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Division with remainder: `self = den * quot + rem`, `deg rem < deg den`.
    pub fn divmod(&self, den: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let d_deg = den.coeffs.len() - 1;
        if self.coeffs.len() <= d_deg {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let lead = den.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + d_deg] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, dj) in den.coeffs.iter().enumerate() {
                let t = &q * dj;
                rem[i + j] -= t;
            }
            quot[i] = q;
        }
        Ok((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Monic polynomial whose roots are `c` times the roots of `self`.
    ///
    /// For monic `p` of degree `n` the output coefficient at `x^(n-k)` is
    /// `c^k` times the input coefficient there; equivalently `c^n * p(x/c)`.
    ///
    /// Panics unless `self` is monic and `c != 0`.
    pub fn scale_root(&self, c: &BigRational) -> RatPoly {
        assert!(self.is_monic(), "scale_root: polynomial must be monic");
        assert!(!c.is_zero(), "scale_root: scale must be nonzero");
        let n = self.coeffs.len() - 1;
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut factor = BigRational::one();
        // ascending index i corresponds to k = n - i, so walk from the top
        let mut scaled: Vec<BigRational> = Vec::with_capacity(n + 1);
        for i in (0..=n).rev() {
            scaled.push(&self.coeffs[i] * &factor);
            factor *= c;
        }
        scaled.reverse();
        coeffs.extend(scaled);
        RatPoly::from_coeffs(coeffs)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPoly {
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
