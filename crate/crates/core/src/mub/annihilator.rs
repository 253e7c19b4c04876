//! The annihilator polynomial of a configuration's cosine set and its
//! Gegenbauer expansion.
//!
//! For a configuration whose distinct off-diagonal cosines are
//! `c_1, …, c_r`, the annihilator is the degree-`r` polynomial
//!
//! ```text
//!   F(t) = Π_i (t - c_i) / Π_i (1 - c_i),        F(1) = 1,
//! ```
//!
//! which vanishes on every off-diagonal inner product. Expanded in the
//! unit-normalized Gegenbauer basis (`Q̄_k(1) = 1`), its coefficients are
//! the certificate behind the absolute bound: when all of them are
//! positive, `1/f_0` bounds the number of points any configuration with
//! those cosines can have, and the two-axis projection meets the bound.
//! For the cosines `{-(√N+2), √N-2, -2}/(N-2)` in dimension `N-2` the
//! coefficients have closed forms in `N`, reproduced here exactly.

use num_traits::Zero;

use crate::algebra::rational::{perfect_sqrt, rat, Rat};
use crate::error::{Error, Result};
use crate::mub::gegenbauer::GegenbauerBasis;
use crate::mub::poly;

/// Expands the annihilator of the given distinct cosines (all ≠ 1) as
/// coefficients `f_0, …, f_r` in the unit-normalized Gegenbauer basis for
/// the given ambient dimension.
pub fn annihilator_expansion(class_cosines: &[Rat], dim: usize) -> Result<Vec<Rat>> {
    if class_cosines.is_empty() {
        return Err(Error::InvalidParameter(
            "annihilator needs at least one cosine".into(),
        ));
    }
    for (i, a) in class_cosines.iter().enumerate() {
        if *a == rat(1) {
            return Err(Error::InvalidParameter(
                "cosine 1 cannot be annihilated while normalizing F(1) = 1".into(),
            ));
        }
        for b in class_cosines.iter().skip(i + 1) {
            if a == b {
                return Err(Error::InvalidParameter(format!(
                    "cosines must be distinct; {a} repeats"
                )));
            }
        }
    }
    let monic = poly::monic_from_roots(class_cosines);
    let at_one = poly::eval(&monic, &rat(1));
    debug_assert!(!at_one.is_zero(), "roots at 1 were rejected above");
    let normalized: Vec<Rat> = monic.iter().map(|c| c / &at_one).collect();
    let basis = GegenbauerBasis::new(dim, class_cosines.len())?;
    basis.expand_in_unit(&normalized)
}

/// The closed-form expansion coefficients `f_0, …, f_3` for the two-axis
/// projection's cosines in dimension `N-2`, as polynomials in `N`.
pub fn closed_form_coefficients(code_length: usize) -> Result<[Rat; 4]> {
    let s = perfect_sqrt(code_length as u64).unwrap_or(0) as i64;
    let n = code_length as i64;
    if s < 4 || s * s != n || !code_length.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "N = {code_length} is not a power of 4 with N >= 16"
        )));
    }
    let n = rat(n);
    let one = rat(1);
    let f0 = rat(4) / (&n * &n);
    let f1 = rat(2) * (&n * &n + rat(6)) * (&n - rat(2)) / (&n * &n * &n * (&n - &one));
    let f2 = rat(6) * (&n - rat(2)) * (&n - rat(3)) / (&n * &n * (&n - &one));
    let f3 = {
        let nm2 = &n - rat(2);
        &nm2 * &nm2 * &nm2 * (&n - rat(3)) / (&n * &n * &n * (&n - &one))
    };
    Ok([f0, f1, f2, f3])
}
