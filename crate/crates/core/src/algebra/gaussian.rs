//! Gaussian integers `a + bi`, used for Z4-valued character sums.
//!
//! The additive characters of Z4 take values in the powers of `i`, so sums of
//! the form `Σ i^(k_j)` live in `Z[i]`. The verification paths only need
//! addition, multiplication, powers of `i`, and a realness test.

use num_bigint::BigInt;
use num_traits::Zero;
use std::ops::{Add, AddAssign, Mul};

/// A Gaussian integer with arbitrary-precision components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: i64, im: i64) -> Self {
        GaussianInt {
            re: BigInt::from(re),
            im: BigInt::from(im),
        }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    /// `i^k`, depending only on `k mod 4`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianInt::new(1, 0),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    /// True iff the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl AddAssign for GaussianInt {
    fn add_assign(&mut self, rhs: GaussianInt) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_powers_match_repeated_multiplication() {
        let i = GaussianInt::new(0, 1);
        let mut acc = GaussianInt::new(1, 0);
        for k in 0..=1000i64 {
            assert_eq!(GaussianInt::i_pow(k), acc, "i^{k}");
            acc = acc * i.clone();
        }
    }

    #[test]
    fn i_pow_handles_negative_exponents() {
        // i^-1 = i^3 and so on: only k mod 4 matters.
        for k in -50..50i64 {
            assert_eq!(GaussianInt::i_pow(k), GaussianInt::i_pow(k.rem_euclid(4)));
        }
    }

    #[test]
    fn fourth_power_is_one() {
        let i = GaussianInt::new(0, 1);
        let i4 = i.clone() * i.clone() * i.clone() * i;
        assert_eq!(i4, GaussianInt::new(1, 0));
    }
}
