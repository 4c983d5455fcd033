//! Dense univariate polynomials over big integers and reduced rationals, plus
//! Laurent polynomials for identities in `x + x^-1`.
//!
//! Coefficients are stored ascending (`coeffs[k]` multiplies `x^k`), the
//! leading stored coefficient is nonzero, and the zero polynomial is the empty
//! sequence. All arithmetic is exact.

mod int;
mod laurent;
mod rat;

pub use int::IntPoly;
pub use laurent::LaurentPoly;
pub use rat::RatPoly;

use std::fmt;

/// Failure modes of polynomial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// Exact division left a nonzero remainder.
    NotExact,
    /// The divisor was the zero polynomial.
    DivisionByZero,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NotExact => write!(f, "polynomial division is not exact"),
            PolyError::DivisionByZero => write!(f, "polynomial division by zero"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Shared canonical text form: descending powers with explicit signs, e.g.
/// `x^4 - x^2 + 1` or `x^2 - 1/2 x - 1/4`. Fractional coefficients are
/// separated from the variable by a space.
pub(crate) fn format_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, String, bool)>,
) -> fmt::Result {
    // terms yields (exponent, |coefficient| as string, is_negative), descending,
    // zeros skipped
    let mut first = true;
    for (exp, mag, neg) in terms {
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let coeff_is_one = mag == "1";
        if exp == 0 {
            write!(f, "{mag}")?;
        } else {
            if !coeff_is_one {
                let sep = if mag.contains('/') { " " } else { "" };
                write!(f, "{mag}{sep}")?;
            }
            if exp == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{exp}")?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
