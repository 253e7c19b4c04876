//! Minimal-vector verification for the dimension-16 line system.
//!
//! Scaling the 288 unit vectors of the maximal line configuration by
//! `2·N^(1/4) = 4` (at `N = 16`) turns them into integer vectors: the 32
//! standard-basis lines become `±4·e_v` and the 256 sign lines become
//! `±1`-vectors, all of squared norm 16. The claim under test is that 16
//! is the *minimum* of the lattice these vectors span — i.e. that the
//! scaled configuration sits inside the minimal-vector shell — and the
//! enumerated shell size (the kissing number) is recorded alongside.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::constructions::{lattice_from_vectors, IntegerLattice};
use crate::lattice::theta::{find_vector_of_norm, theta_prefix};
use crate::mub::{sign_vector, SignedLineSet};

/// Squared norm every scaled configuration vector must have.
const TARGET_NORM: u64 = 16;

/// Outcome of the minimal-vector check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bw16Report {
    /// Number of scaled configuration vectors checked (256 sign + 32 axis).
    pub vector_count: usize,
    /// Minimum squared norm of the spanned lattice.
    pub minimum: u64,
    /// Number of lattice vectors achieving the minimum (kissing number).
    pub minimum_count: u64,
    /// Determinant of the Gram matrix of the spanned lattice.
    pub gram_determinant: BigInt,
}

/// Verifies that all 288 scaled vectors of a maximal 16-dimensional line
/// set are minimal vectors of the lattice they generate, and reports the
/// full minimal-shell count.
///
/// Fails with a witness when a scaled vector misses the target norm or the
/// span contains a shorter nonzero vector.
pub fn bw16_membership_check(lines: &SignedLineSet) -> Result<Bw16Report> {
    if lines.dim() != 16 {
        return Err(Error::InvalidParameter(format!(
            "the minimal-vector check is specific to dimension 16, got {}",
            lines.dim()
        )));
    }
    if !lines.is_maximal() {
        return Err(Error::InvalidParameter(format!(
            "the minimal-vector check needs a maximal line set (256 sign \
             vectors in dimension 16), got {}",
            lines.sign_vectors().len()
        )));
    }
    let mut vectors: Vec<Vec<i64>> = lines.sign_vectors().iter().map(sign_vector).collect();
    for axis in 0..16 {
        for sign in [1i64, -1] {
            vectors.push((0..16).map(|j| if j == axis { 4 * sign } else { 0 }).collect());
        }
    }
    for v in &vectors {
        let norm: i64 = v.iter().map(|x| x * x).sum();
        if norm as u64 != TARGET_NORM {
            return Err(Error::LatticeCheckFailed(format!(
                "scaled configuration vector {v:?} has squared norm {norm}, \
                 expected {TARGET_NORM}"
            )));
        }
    }
    let lattice = lattice_from_vectors(&vectors)?;
    if lattice.rank() != 16 {
        return Err(Error::LatticeCheckFailed(format!(
            "scaled configuration spans rank {} instead of 16",
            lattice.rank()
        )));
    }
    let theta = theta_prefix(&lattice, TARGET_NORM)?;
    let minimum = theta.minimum().unwrap_or(TARGET_NORM + 1);
    if minimum < TARGET_NORM {
        let witness = find_vector_of_norm(&lattice, minimum)?
            .map(|v| format!("{v:?}"))
            .unwrap_or_else(|| "<enumeration inconsistency>".into());
        return Err(Error::LatticeCheckFailed(format!(
            "lattice vector {witness} has squared norm {minimum} < \
             {TARGET_NORM}; the scaled configuration is not minimal"
        )));
    }
    Ok(Bw16Report {
        vector_count: vectors.len(),
        minimum,
        minimum_count: theta.count(minimum),
        gram_determinant: lattice.gram_determinant(),
    })
}

/// The lattice spanned by the scaled configuration, for callers that want
/// to inspect it beyond the report (theta prefixes, basis export).
pub fn bw16_lattice(lines: &SignedLineSet) -> Result<IntegerLattice> {
    let report = bw16_membership_check(lines)?;
    debug_assert_eq!(report.minimum, TARGET_NORM);
    let mut vectors: Vec<Vec<i64>> = lines.sign_vectors().iter().map(sign_vector).collect();
    for axis in 0..16 {
        vectors.push((0..16).map(|j| if j == axis { 4 } else { 0 }).collect());
    }
    lattice_from_vectors(&vectors)
}
