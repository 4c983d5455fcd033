//! The monic integer polynomials `R_n` satisfying
//! `x^n + x^-n = R_n(x + x^-1)`, built by the three-term recurrence
//! `R_0 = 2`, `R_1 = x`, `R_k = x*R_(k-1) - R_(k-2)`, and a symbolic check of
//! the defining identity. (Up to rescaling these are twice the Chebyshev
//! polynomials of the first kind at `x/2`.)

use crate::poly::{IntPoly, LaurentPoly};

/// The sequence `R_0, ..., R_max` in one pass.
pub fn r_sequence(max: u64) -> Vec<IntPoly> {
    let mut seq = Vec::with_capacity(max as usize + 1);
    seq.push(IntPoly::from_i64(&[2]));
    if max >= 1 {
        seq.push(IntPoly::from_i64(&[0, 1]));
    }
    let x = IntPoly::from_i64(&[0, 1]);
    for k in 2..=max as usize {
        let next = &(&x * &seq[k - 1]) - &seq[k - 2];
        seq.push(next);
    }
    seq
}

/// `R_n` alone.
pub fn r(n: u64) -> IntPoly {
    r_sequence(n).pop().unwrap()
}

/// Check `R_n(x + x^-1) = x^n + x^-n` by exact Laurent expansion.
pub fn verify_r(n: u64) -> bool {
    r(n).substitute_symmetric() == LaurentPoly::x_pow_plus_x_neg(n)
}
