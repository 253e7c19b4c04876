//! Exact rational scalars.
//!
//! Every eigenvalue, cosine, Krein parameter, and polynomial coefficient in
//! this crate is an arbitrary-precision rational; nothing is ever rounded.
//! This module provides the scalar type plus small constructors that keep the
//! call sites readable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The exact scalar type used for all rational arithmetic in this crate.
pub type Rat = BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `num / den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational canonically: `"5"` for integers, `"-3/7"` otherwise.
///
/// The reduced form with positive denominator is unique, so equal rationals
/// always render identically; JSON exports rely on this.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses a rational from the canonical rendering: `"5"`, `"-3/7"`.
///
/// Inverse of [`rat_to_string`] and slightly more forgiving: any
/// `numerator/denominator` pair of integers is accepted and reduced, so
/// `"3/6"` parses to the same value as `"1/2"`. Returns `None` for malformed
/// input or a zero denominator.
pub fn rat_from_string(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Returns `x` as an `i64` if it is an integer in range, else `None`.
pub fn rat_to_i64(x: &Rat) -> Option<i64> {
    if x.denom().is_one() {
        i64::try_from(x.numer()).ok()
    } else {
        None
    }
}

/// Integer square root test: `Some(r)` with `r*r == n`, or `None`.
pub fn perfect_sqrt(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Sum of a slice of rationals.
pub fn rat_sum<'a, I: IntoIterator<Item = &'a Rat>>(xs: I) -> Rat {
    xs.into_iter().fold(Rat::zero(), |acc, x| acc + x)
}

/// True if `x` is a nonnegative rational.
pub fn is_nonnegative(x: &Rat) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        assert_eq!(rat_to_string(&rat(5)), "5");
        assert_eq!(rat_to_string(&frac(-3, 7)), "-3/7");
        // reduction happens on construction
        assert_eq!(rat_to_string(&frac(4, 2)), "2");
        assert_eq!(rat_to_string(&frac(2, -4)), "-1/2");
    }

    #[test]
    fn parsing_inverts_rendering() {
        for x in [rat(0), rat(-17), frac(-3, 7), frac(45, 8), frac(2, -4)] {
            assert_eq!(rat_from_string(&rat_to_string(&x)), Some(x));
        }
        // unreduced and signed forms are accepted
        assert_eq!(rat_from_string("3/6"), Some(frac(1, 2)));
        assert_eq!(rat_from_string("-3/-6"), Some(frac(1, 2)));
        // malformed input and zero denominators are not
        for bad in ["", "1/0", "1/2/3", "a", "1.5", "1 / 2"] {
            assert_eq!(rat_from_string(bad), None, "accepted {bad:?}");
        }
    }

    #[test]
    fn inverse_product_is_one() {
        for num in [-9i64, -2, 1, 3, 8, 17] {
            for den in [1i64, 2, 5, 12] {
                let x = frac(num, den);
                assert!((&x * x.recip()).is_one());
            }
        }
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(perfect_sqrt(16), Some(4));
        assert_eq!(perfect_sqrt(64), Some(8));
        assert_eq!(perfect_sqrt(15), None);
        assert_eq!(perfect_sqrt(0), Some(0));
    }
}
