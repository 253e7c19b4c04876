//! Gegenbauer (ultraspherical) polynomials for a fixed ambient dimension,
//! in the two normalizations the design machinery needs.
//!
//! For points on the unit sphere in `R^n` the relevant family is `C_k^λ`
//! with `λ = (n-2)/2`. Two rescalings of it appear here:
//!
//! * the **harmonic** normalization `Q_k` with `Q_k(1) = h_k`, the dimension
//!   of the degree-`k` harmonic space (so `Q_0 = 1`, `Q_1(t) = n·t`); this is
//!   the normalization in which the addition formula reads
//!   `Q_k(⟨x,y⟩) = Σ_s e_{k,s}(x)·e_{k,s}(y)` over an orthonormal harmonic
//!   basis, which is what the intersection-number identities require;
//! * the **unit** normalization `Q̄_k = Q_k / h_k` with `Q̄_k(1) = 1`, in
//!   which the annihilator expansion coefficients take their published
//!   closed forms (and which is just as good for design-moment tests, since
//!   rescaling a basis element never changes whether a moment vanishes).

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::algebra::rational::{frac, rat, Rat};
use crate::error::{Error, Result};
use crate::mub::poly;

/// Dimension of the space of degree-`k` spherical harmonics on `S^{n-1}`.
pub fn harmonic_dimension(n: usize, k: usize) -> BigInt {
    match k {
        0 => BigInt::one(),
        1 => BigInt::from(n),
        _ => {
            binomial(BigInt::from(n + k - 1), BigInt::from(k))
                - binomial(BigInt::from(n + k - 3), BigInt::from(k - 2))
        }
    }
}

/// The Gegenbauer family for one ambient dimension, with polynomials
/// `Q_0..Q_kmax` precomputed in both normalizations.
#[derive(Clone, Debug)]
pub struct GegenbauerBasis {
    dim: usize,
    /// Unit-normalized polynomials, `unit[k](1) = 1`; coefficients low-to-high.
    unit: Vec<Vec<Rat>>,
    /// Harmonic-space dimensions `h_k`, the values `Q_k(1)`.
    harmonic: Vec<Rat>,
}

impl GegenbauerBasis {
    /// Builds the family for the sphere in `R^dim` up to degree `kmax`.
    ///
    /// Needs `dim >= 3`: below that the ultraspherical parameter
    /// `λ = (dim-2)/2` degenerates and the recurrence loses its meaning.
    pub fn new(dim: usize, kmax: usize) -> Result<Self> {
        if dim < 3 {
            return Err(Error::InvalidParameter(format!(
                "Gegenbauer basis needs ambient dimension at least 3, got {dim}"
            )));
        }
        let lambda = frac(dim as i64 - 2, 2);
        // Raw C_k^λ by the classical three-term recurrence, then rescale.
        let mut raw: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
        if kmax >= 1 {
            raw.push(vec![Rat::zero(), &lambda * rat(2)]);
        }
        for k in 1..kmax {
            let kk = rat(k as i64);
            let mut next = vec![Rat::zero(); k + 2];
            // (k+1)·C_{k+1} = 2(k+λ)·t·C_k − (k+2λ−1)·C_{k−1}
            let a = (&kk + &lambda) * rat(2);
            let b = &kk + &lambda * rat(2) - rat(1);
            for (i, c) in raw[k].iter().enumerate() {
                next[i + 1] += &a * c;
            }
            for (i, c) in raw[k - 1].iter().enumerate() {
                next[i] -= &b * c;
            }
            let inv = (kk + rat(1)).recip();
            for c in &mut next {
                *c *= &inv;
            }
            raw.push(next);
        }
        let mut unit = Vec::with_capacity(kmax + 1);
        let mut harmonic = Vec::with_capacity(kmax + 1);
        for (k, p) in raw.iter().enumerate() {
            let at_one = crate::algebra::rational::rat_sum(p.iter());
            if at_one.is_zero() {
                return Err(Error::InternalInconsistency(format!(
                    "Gegenbauer polynomial of degree {k} vanishes at 1"
                )));
            }
            let inv = at_one.recip();
            unit.push(p.iter().map(|c| c * &inv).collect());
            harmonic.push(Rat::from_integer(harmonic_dimension(dim, k)));
        }
        Ok(Self {
            dim,
            unit,
            harmonic,
        })
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Highest available degree.
    pub fn kmax(&self) -> usize {
        self.unit.len() - 1
    }

    /// `h_k = Q_k(1)` in the harmonic normalization.
    pub fn harmonic_value_at_one(&self, k: usize) -> &Rat {
        &self.harmonic[k]
    }

    /// Coefficients of the unit-normalized `Q̄_k`, low-to-high.
    pub fn unit_poly(&self, k: usize) -> &[Rat] {
        &self.unit[k]
    }

    /// `Q̄_k(t)` in the unit normalization.
    pub fn eval_unit(&self, k: usize, t: &Rat) -> Rat {
        poly::eval(&self.unit[k], t)
    }

    /// `Q_k(t)` in the harmonic normalization.
    pub fn eval_harmonic(&self, k: usize, t: &Rat) -> Rat {
        self.eval_unit(k, t) * &self.harmonic[k]
    }

    /// Expands a polynomial over the unit-normalized basis: returns `c` with
    /// `target = Σ c[k]·Q̄_k`.
    pub fn expand_in_unit(&self, target: &[Rat]) -> Result<Vec<Rat>> {
        poly::expand_in_basis(&self.unit, target)
    }

    /// The coefficients `f_{i,k}` of the monomial expansion
    /// `t^i = Σ_k f_{i,k}·Q_k(t)` over the *harmonic* normalization.
    ///
    /// Triangularity gives `f_{i,k} = 0` for `k > i`; parity gives
    /// `f_{i,k} = 0` for `k ≢ i (mod 2)`.
    pub fn monomial_coefficients(&self, i: usize) -> Result<Vec<Rat>> {
        let mut mono = vec![Rat::zero(); i + 1];
        mono[i] = Rat::one();
        let in_unit = poly::expand_in_basis(&self.unit, &mono)?;
        Ok(in_unit
            .into_iter()
            .zip(&self.harmonic)
            .map(|(c, h)| c / h)
            .collect())
    }

    /// `F_{i,j}(z) = Σ_k f_{i,k}·f_{j,k}·Q_k(z)` with everything in the
    /// harmonic normalization — the kernel that turns mixed power sums over
    /// a design into closed forms.
    pub fn pair_product_at(&self, i: usize, j: usize, z: &Rat) -> Result<Rat> {
        let fi = self.monomial_coefficients(i)?;
        let fj = self.monomial_coefficients(j)?;
        let mut acc = Rat::zero();
        for (k, (a, b)) in fi.iter().zip(&fj).enumerate() {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b * self.eval_harmonic(k, z);
            }
        }
        Ok(acc)
    }
}
