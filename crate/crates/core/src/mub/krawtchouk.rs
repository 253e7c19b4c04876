//! Krawtchouk polynomials and the linear-programming bound for binary
//! codes with three prescribed distances.
//!
//! On the Hamming cube of length `n` the Krawtchouk polynomial is
//!
//! ```text
//!   Φ_k(z) = Σ_j (-1)^j · C(z, j) · C(n-z, k-j),      Φ_k(0) = C(n, k),
//! ```
//!
//! the discrete analogue of the Gegenbauer family. For a code whose
//! nonzero distances all lie in `{d_1, d_2, d_3}`, the cubic
//! `f(z) = Π_i (d_i - z)` vanishes on every distance; when its Krawtchouk
//! expansion (normalized to constant term 1) has all coefficients
//! positive, the standard linear-programming argument bounds the code size
//! by `f(0) = Σ_k c_k·C(n, k)`. For distances `{(N-√N)/2, N/2, (N+√N)/2}`
//! the bound comes out to exactly `N²/4` at length `N-2` and `N²/2` at
//! length `N-1` — met with equality by the doubly- and singly-shortened
//! codes, which is what makes those codes distance-optimal.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::algebra::rational::{perfect_sqrt, rat, Rat};
use crate::error::{Error, Result};
use crate::mub::poly;

/// The Krawtchouk family `Φ_0, …, Φ_kmax` for one cube length `n`, stored
/// as exact coefficient vectors.
#[derive(Clone, Debug)]
pub struct KrawtchoukBasis {
    n: usize,
    polys: Vec<Vec<Rat>>,
}

/// `C(z, j)` as a polynomial in `z`: `z(z-1)…(z-j+1)/j!`.
fn binomial_poly(j: usize) -> Vec<Rat> {
    let roots: Vec<Rat> = (0..j as i64).map(rat).collect();
    let mut p = poly::monic_from_roots(&roots);
    let mut factorial = Rat::one();
    for t in 1..=j as i64 {
        factorial *= rat(t);
    }
    let inv = factorial.recip();
    for c in &mut p {
        *c *= &inv;
    }
    p
}

/// `C(n - z, r)` as a polynomial in `z`.
fn complementary_binomial_poly(n: usize, r: usize) -> Vec<Rat> {
    // Π_{t<r} (n - t - z) = (-1)^r · Π_{t<r} (z - (n - t)).
    let roots: Vec<Rat> = (0..r).map(|t| rat((n - t) as i64)).collect();
    let mut p = poly::monic_from_roots(&roots);
    let mut scale = if r % 2 == 1 { -Rat::one() } else { Rat::one() };
    for t in 1..=r as i64 {
        scale /= rat(t);
    }
    for c in &mut p {
        *c *= &scale;
    }
    p
}

impl KrawtchoukBasis {
    /// Builds the family, checking `Φ_k(0) = C(n, k)` for every degree.
    pub fn new(n: usize, kmax: usize) -> Result<Self> {
        if n == 0 || kmax > n {
            return Err(Error::InvalidParameter(format!(
                "Krawtchouk basis needs 1 <= k_max <= n, got n = {n}, k_max = {kmax}"
            )));
        }
        let mut polys = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            let mut acc = vec![Rat::zero(); k + 1];
            for j in 0..=k {
                let term = poly::mul(&binomial_poly(j), &complementary_binomial_poly(n, k - j));
                for (i, c) in term.into_iter().enumerate() {
                    if j % 2 == 1 {
                        acc[i] -= c;
                    } else {
                        acc[i] += c;
                    }
                }
            }
            let at_zero = Rat::from_integer(binomial(BigInt::from(n), BigInt::from(k)));
            if acc[0] != at_zero {
                return Err(Error::InternalInconsistency(format!(
                    "Φ_{k}(0) = {} instead of C({n}, {k}) = {at_zero}",
                    acc[0]
                )));
            }
            polys.push(acc);
        }
        Ok(Self { n, polys })
    }

    /// The cube length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients of `Φ_k`, low-to-high.
    pub fn poly(&self, k: usize) -> &[Rat] {
        &self.polys[k]
    }

    /// `Φ_k(z)`.
    pub fn eval(&self, k: usize, z: &Rat) -> Rat {
        poly::eval(&self.polys[k], z)
    }

    /// Expands a polynomial over the family: returns `c` with
    /// `target = Σ c[k]·Φ_k`.
    pub fn expand(&self, target: &[Rat]) -> Result<Vec<Rat>> {
        poly::expand_in_basis(&self.polys, target)
    }
}

/// One linear-programming certificate: the normalized Krawtchouk
/// coefficients of the distance annihilator at a given length, and the
/// code-size bound they prove.
#[derive(Clone, Debug)]
pub struct DistanceBound {
    /// Code length the bound applies to.
    pub length: usize,
    /// The three distances every codeword pair must realize.
    pub distances: [u64; 3],
    /// Krawtchouk coefficients `c_0 = 1, c_1, c_2, c_3` of the annihilator.
    pub coefficients: Vec<Rat>,
    /// The proved upper bound `Σ c_k·C(length, k)` on the code size.
    pub bound: Rat,
}

/// The two bounds attached to a line-set dimension `N`: codes of length
/// `N-2` and `N-1` whose distances lie in `{(N-√N)/2, N/2, (N+√N)/2}` have
/// at most `N²/4` and `N²/2` words respectively.
pub fn delsarte_bound(code_length: usize) -> Result<[DistanceBound; 2]> {
    let s = perfect_sqrt(code_length as u64).unwrap_or(0);
    let big_n = code_length as u64;
    if s < 4 || s * s != big_n || !code_length.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "N = {code_length} is not a power of 4 with N >= 16"
        )));
    }
    let distances = [(big_n - s) / 2, big_n / 2, (big_n + s) / 2];
    let roots: Vec<Rat> = distances.iter().map(|&d| rat(d as i64)).collect();
    // f(z) = Π (d - z) = -1 · (monic with roots at the distances).
    let annihilator: Vec<Rat> = poly::monic_from_roots(&roots)
        .into_iter()
        .map(|c| -c)
        .collect();
    let mut out = Vec::with_capacity(2);
    for length in [code_length - 2, code_length - 1] {
        let basis = KrawtchoukBasis::new(length, 3)?;
        let raw = basis.expand(&annihilator)?;
        if !raw[0].is_positive() {
            return Err(Error::InternalInconsistency(format!(
                "annihilator constant term {} at length {length} is not positive",
                raw[0]
            )));
        }
        let coefficients: Vec<Rat> = raw.iter().map(|c| c / &raw[0]).collect();
        if coefficients.iter().any(|c| !c.is_positive()) {
            return Err(Error::InternalInconsistency(format!(
                "a Krawtchouk coefficient at length {length} is not positive; \
                 the linear-programming argument does not apply"
            )));
        }
        let bound: Rat = coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rat::from_integer(binomial(BigInt::from(length), BigInt::from(k))))
            .sum();
        out.push(DistanceBound {
            length,
            distances,
            coefficients,
            bound,
        });
    }
    Ok(out.try_into().expect("exactly two lengths were processed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;

    #[test]
    fn values_match_the_defining_binomial_sum() {
        let basis = KrawtchoukBasis::new(14, 3).unwrap();
        for k in 0..=3usize {
            for z in 0..=14i64 {
                // Direct integer evaluation of Σ_j (-1)^j C(z,j) C(n-z,k-j).
                let mut want = BigInt::zero();
                for j in 0..=k {
                    let term = binomial(BigInt::from(z), BigInt::from(j as i64))
                        * binomial(BigInt::from(14 - z), BigInt::from((k - j) as i64));
                    if j % 2 == 1 {
                        want -= term;
                    } else {
                        want += term;
                    }
                }
                assert_eq!(
                    basis.eval(k, &rat(z)),
                    Rat::from_integer(want),
                    "k = {k}, z = {z}"
                );
            }
        }
    }

    #[test]
    fn bounds_at_16_have_their_frozen_certificates() {
        let [b14, b15] = delsarte_bound(16).unwrap();
        assert_eq!(b14.length, 14);
        assert_eq!(b14.distances, [6, 8, 10]);
        assert_eq!(
            b14.coefficients,
            vec![rat(1), frac(3, 5), frac(1, 5), frac(1, 10)]
        );
        assert_eq!(b14.bound, rat(64));
        assert_eq!(b15.length, 15);
        assert_eq!(
            b15.coefficients,
            vec![rat(1), rat(1), frac(1, 5), frac(1, 5)]
        );
        assert_eq!(b15.bound, rat(128));
    }

    #[test]
    fn bounds_at_64_have_their_frozen_certificates() {
        let [b62, b63] = delsarte_bound(64).unwrap();
        assert_eq!(b62.length, 62);
        assert_eq!(b62.distances, [28, 32, 36]);
        assert_eq!(
            b62.coefficients,
            vec![rat(1), frac(11, 21), frac(1, 21), frac(1, 42)]
        );
        assert_eq!(b62.bound, rat(1024));
        assert_eq!(b63.length, 63);
        assert_eq!(
            b63.coefficients,
            vec![rat(1), rat(1), frac(1, 21), frac(1, 21)]
        );
        assert_eq!(b63.bound, rat(2048));
    }

    #[test]
    fn coefficients_follow_their_closed_forms_in_n() {
        for n in [16i64, 64] {
            let [shorter, longer] = delsarte_bound(n as usize).unwrap();
            assert_eq!(
                shorter.coefficients[1..],
                [
                    frac(n + 2, 2 * n - 2),
                    frac(3, n - 1),
                    frac(3, 2 * n - 2)
                ]
            );
            assert_eq!(
                longer.coefficients[1..],
                [rat(1), frac(3, n - 1), frac(3, n - 1)]
            );
            // The bounds are met with equality by the shortened codes.
            assert_eq!(shorter.bound, rat(n * n / 4));
            assert_eq!(longer.bound, rat(n * n / 2));
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(delsarte_bound(32).is_err());
        assert!(delsarte_bound(9).is_err());
        assert!(KrawtchoukBasis::new(0, 0).is_err());
        assert!(KrawtchoukBasis::new(5, 9).is_err());
    }
}
