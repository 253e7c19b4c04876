//! Integer lattices from binary codes and from explicit vector sets.
//!
//! Construction A attaches to a linear binary code `C ⊆ F₂ⁿ` the lattice
//! `{x ∈ Zⁿ : x mod 2 ∈ C}`; a generating-vector set is turned into a
//! lattice by taking the Hermite normal form of its span. Both store the
//! basis in canonical form, so lattice equality is plain `==` on the basis
//! matrices.
//!
//! The doubly-shortened code's 64 sign vectors live on a sphere of squared
//! radius 14; the paper's normalization halves that to 7. The halving has
//! an exact integer realization: on each Gray pair `(s, t) ↦ ((s+t)/2,
//! (s−t)/2)`, which sends the Z₄ digit `d` to the Gaussian integer `i^d`.
//! [`gaussian_integer_model`] builds those vectors with each pair component
//! placed on the coordinate labelled by its trace functional, and in that
//! frame the span coincides — coordinate by coordinate — with construction
//! A of the punctured simplex code.

use num_bigint::BigInt;
use std::collections::BTreeSet;

use crate::algebra::galois::GaloisRing;
use crate::codes::binary::BinaryCode;
use crate::codes::z4code::Z4Code;
use crate::error::{Error, Result};
use crate::lattice::hnf::hermite_normal_form;
use crate::linalg::Matrix;

/// A full-row-rank integer lattice given by a basis in Hermite normal
/// form, together with its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
}

impl IntegerLattice {
    /// Builds the lattice spanned by `rows` (any spanning set; reduced to a
    /// canonical basis internally).
    fn from_spanning_rows(dim: usize, rows: &[Vec<BigInt>]) -> Result<Self> {
        let hnf = hermite_normal_form(rows);
        let mut basis = Vec::with_capacity(hnf.len());
        for row in &hnf {
            let converted: Vec<i64> = row
                .iter()
                .map(|x| {
                    i64::try_from(x).map_err(|_| {
                        Error::InternalInconsistency(
                            "lattice basis entry exceeds i64 range".into(),
                        )
                    })
                })
                .collect::<Result<_>>()?;
            basis.push(converted);
        }
        let gram = gram_matrix(&basis)?;
        Ok(IntegerLattice { dim, basis, gram })
    }

    /// Number of basis vectors (= rank of the generating set).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the ambient space `Zⁿ`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical (Hermite normal form) basis, one row per basis vector.
    /// Two lattices in the same ambient space are equal iff these matrices
    /// are equal.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Gram matrix `B·Bᵀ` of the canonical basis.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Determinant of the Gram matrix; nonzero because the basis rows are
    /// independent by construction.
    pub fn gram_determinant(&self) -> BigInt {
        if self.basis.is_empty() {
            return BigInt::from(1);
        }
        let det = Matrix::from_int_rows(&self.gram).det();
        debug_assert!(det.is_integer());
        det.to_integer()
    }
}

fn gram_matrix(basis: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let r = basis.len();
    let mut gram = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in i..r {
            let mut acc: i128 = 0;
            for (a, b) in basis[i].iter().zip(&basis[j]) {
                acc += i128::from(*a) * i128::from(*b);
            }
            let entry = i64::try_from(acc).map_err(|_| {
                Error::InternalInconsistency("Gram entry exceeds i64 range".into())
            })?;
            gram[i][j] = entry;
            gram[j][i] = entry;
        }
    }
    Ok(gram)
}

/// Construction A: the lattice `scale · {x ∈ Zⁿ : x mod 2 ∈ code}`.
///
/// The code must be linear (membership mod 2 is only well defined for a
/// group); the spanning set fed to the basis reduction is the codewords as
/// 0/1 rows together with `2·I`.
pub fn construction_a(code: &BinaryCode, scale: i64) -> Result<IntegerLattice> {
    if scale < 1 {
        return Err(Error::InvalidParameter(format!(
            "construction A scale must be a positive integer, got {scale}"
        )));
    }
    let n = code.length();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "construction A needs a code of positive length".into(),
        ));
    }
    let words: BTreeSet<u64> = code.words().iter().map(|w| w.bits()).collect();
    for a in &words {
        for b in &words {
            if !words.contains(&(a ^ b)) {
                return Err(Error::InvalidParameter(
                    "construction A needs a linear code; \
                     the given code is not closed under addition"
                        .into(),
                ));
            }
        }
    }
    let mut rows: Vec<Vec<BigInt>> = code
        .words()
        .iter()
        .map(|w| {
            (0..n)
                .map(|j| BigInt::from(scale * i64::from(w.bit(j))))
                .collect()
        })
        .collect();
    for i in 0..n {
        rows.push(
            (0..n)
                .map(|j| BigInt::from(if i == j { 2 * scale } else { 0 }))
                .collect(),
        );
    }
    IntegerLattice::from_spanning_rows(n, &rows)
}

/// The lattice generated by an explicit set of integer vectors. A rank-
/// deficient set is not an error: the result simply has `rank() <
/// dim()`.
pub fn lattice_from_vectors(vectors: &[Vec<i64>]) -> Result<IntegerLattice> {
    let Some(first) = vectors.first() else {
        return Err(Error::InvalidParameter(
            "lattice generation needs at least one vector".into(),
        ));
    };
    let dim = first.len();
    if dim == 0 {
        return Err(Error::InvalidParameter(
            "lattice generation needs vectors of positive length".into(),
        ));
    }
    for v in vectors {
        if v.len() != dim {
            return Err(Error::LengthMismatch {
                left: dim,
                right: v.len(),
            });
        }
    }
    let rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    IntegerLattice::from_spanning_rows(dim, &rows)
}

/// Integer model of a shortened quaternary code's sign vectors at half the
/// squared norm: each Z₄ digit `d` becomes the Gaussian integer `i^d`,
/// i.e. the pair-rotated sign values `((s+t)/2, (s−t)/2)` of its Gray
/// image. A word of length `q−1` becomes a vector of squared norm `q−1`
/// (half the Gray sign vector's `2(q−1)`).
///
/// Component placement: the two components of pair `p` are the mod-2
/// functionals `(ε, γ) ↦ ε·b + tr(γ ξ^p)` for `b ∈ {0, 1}`, and the
/// coordinate carrying a functional is indexed by its mask `b + Σᵢ
/// tr(ξ^{p+i})·2^{i+1}` (value `mask − 2`; the masks run over `2..2q−1`
/// bijectively because the trace sequence of a primitive element is an
/// m-sequence). In this frame the span of the model vectors is construction
/// A of the same punctured simplex code that the mask ordering defines.
pub fn gaussian_integer_model(ring: &GaloisRing, code: &Z4Code) -> Result<Vec<Vec<i64>>> {
    let q = ring.q();
    let n = q - 1;
    if code.length() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: code.length(),
        });
    }
    // Trace sequence mod 2 and the coordinate index of each (b, p) pair.
    let t: Vec<u8> = (0..n).map(|p| ring.trace(ring.xi_pow(p)) % 2).collect();
    let mut position = vec![vec![0usize; n]; 2];
    let mut seen = vec![false; 2 * n];
    for p in 0..n {
        for (b, positions) in position.iter_mut().enumerate() {
            let mut mask = b;
            for i in 0..ring.m() {
                mask += usize::from(t[(p + i) % n]) << (i + 1);
            }
            let pos = mask - 2;
            if pos >= 2 * n || seen[pos] {
                return Err(Error::InternalInconsistency(
                    "trace functional masks failed to be distinct".into(),
                ));
            }
            seen[pos] = true;
            positions[p] = pos;
        }
    }
    // i^d as (re, im); re is the b=1 component (it carries the Gray pair's
    // ε sign), im the b=0 component.
    const I_POW: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let vectors = code
        .words()
        .iter()
        .map(|word| {
            let mut v = vec![0i64; 2 * n];
            for (p, &d) in word.iter().enumerate() {
                let (re, im) = I_POW[usize::from(d % 4)];
                v[position[1][p]] = re;
                v[position[0][p]] = im;
            }
            v
        })
        .collect();
    Ok(vectors)
}
