//! Exact theta-series prefixes by coset-decomposed enumeration.
//!
//! For a full-rank sublattice `L ⊆ Zⁿ` there is a smallest `m` with
//! `m·Zⁿ ⊆ L` (the exponent of `Zⁿ/L`), and `L` splits into finitely many
//! residues mod `m·Zⁿ`. Within one residue the coordinates are independent:
//! every `x ≡ r (mod m)` coordinatewise lies in `L`, so the count of
//! vectors by squared norm is a product of per-coordinate digit
//! polynomials, truncated at the requested bound. That keeps the whole
//! computation in integer convolutions — no floating-point enumeration
//! cone — and the residues are processed in parallel.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::constructions::IntegerLattice;
use crate::linalg::Matrix;

/// Number of lattice vectors at each squared norm `0..=max_norm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPrefix {
    max_norm: u64,
    counts: BTreeMap<u64, u64>,
}

impl ThetaPrefix {
    /// The enumeration bound the counts are complete up to.
    pub fn max_norm(&self) -> u64 {
        self.max_norm
    }

    /// Nonzero counts by squared norm (zero counts are omitted).
    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// Count at one squared norm (zero if no vectors there).
    pub fn count(&self, norm: u64) -> u64 {
        self.counts.get(&norm).copied().unwrap_or(0)
    }

    /// Smallest nonzero squared norm within the enumerated range.
    pub fn minimum(&self) -> Option<u64> {
        self.counts.keys().find(|&&n| n > 0).copied()
    }
}

/// Largest residue count the enumeration will accept before bailing out.
const MAX_COSETS: u64 = 1 << 20;

/// Exponent of `Zⁿ/L`: the smallest `m ≥ 1` with `m·Zⁿ ⊆ L`, read off as
/// the lcm of the denominators of the inverse basis matrix.
fn quotient_exponent(basis: &[Vec<i64>]) -> Result<usize> {
    let inv = Matrix::from_int_rows(basis).inverse().ok_or_else(|| {
        Error::InternalInconsistency("full-rank HNF basis failed to invert".into())
    })?;
    let mut m = BigInt::one();
    for i in 0..inv.nrows() {
        for j in 0..inv.ncols() {
            m = m.lcm(inv.at(i, j).denom());
        }
    }
    m.to_usize().ok_or_else(|| {
        Error::InvalidParameter("lattice quotient exponent is out of range".into())
    })
}

/// All residues of `L` mod `m·Zⁿ`, built as the additive closure of the
/// basis rows. Sorted for a deterministic parallel sweep.
fn residues(basis: &[Vec<i64>], m: usize) -> Vec<Vec<u8>> {
    let dim = basis[0].len();
    let mut reps: HashSet<Vec<u8>> = HashSet::new();
    reps.insert(vec![0u8; dim]);
    for row in basis {
        let g: Vec<u8> = row.iter().map(|&x| (x.rem_euclid(m as i64)) as u8).collect();
        let base: Vec<Vec<u8>> = reps.iter().cloned().collect();
        for k in 1..m {
            for r in &base {
                let shifted: Vec<u8> = r
                    .iter()
                    .zip(&g)
                    .map(|(&a, &b)| ((usize::from(a) + k * usize::from(b)) % m) as u8)
                    .collect();
                reps.insert(shifted);
            }
        }
    }
    let mut sorted: Vec<Vec<u8>> = reps.into_iter().collect();
    sorted.sort_unstable();
    sorted
}

/// Truncated digit polynomial for one residue digit: `poly[s]` counts the
/// integers `v ≡ digit (mod m)` with `v² = s ≤ max_norm`.
fn digit_polynomial(digit: usize, m: usize, max_norm: u64) -> Vec<u64> {
    let mut poly = vec![0u64; max_norm as usize + 1];
    let mut v = digit as i64;
    while (v * v) as u64 <= max_norm {
        poly[(v * v) as usize] += 1;
        v += m as i64;
    }
    v = digit as i64 - m as i64;
    while (v * v) as u64 <= max_norm {
        poly[(v * v) as usize] += 1;
        v -= m as i64;
    }
    poly
}

fn convolve_truncated(acc: &[u64], poly: &[u64]) -> Vec<u64> {
    let bound = acc.len();
    let mut next = vec![0u64; bound];
    for (i, &a) in acc.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &p) in poly.iter().enumerate().take(bound - i) {
            if p != 0 {
                next[i + j] += a * p;
            }
        }
    }
    next
}

/// Exact vector counts of `lattice` by squared norm up to `max_norm`.
///
/// Needs a full-rank lattice (`rank == dim`) of rank at most 16 with
/// `max_norm ≤ 24` — the regime where the coset sweep is exact and fast.
pub fn theta_prefix(lattice: &IntegerLattice, max_norm: u64) -> Result<ThetaPrefix> {
    if max_norm > 24 || lattice.rank() > 16 {
        return Err(Error::InvalidParameter(format!(
            "theta enumeration supports max_norm <= 24 at rank <= 16, got \
             max_norm {max_norm} at rank {}",
            lattice.rank()
        )));
    }
    if lattice.rank() != lattice.dim() {
        return Err(Error::InvalidParameter(format!(
            "theta enumeration needs a full-rank lattice; rank {} in dimension {}",
            lattice.rank(),
            lattice.dim()
        )));
    }
    let m = quotient_exponent(lattice.basis())?;
    let index: BigInt = lattice
        .basis()
        .iter()
        .enumerate()
        .map(|(i, row)| BigInt::from(row[i]))
        .product();
    let coset_count = BigInt::from(m).pow(lattice.dim() as u32) / &index;
    if coset_count > BigInt::from(MAX_COSETS) {
        return Err(Error::InvalidParameter(format!(
            "theta enumeration would need {coset_count} cosets (limit {MAX_COSETS})"
        )));
    }
    let reps = residues(lattice.basis(), m);
    let polys: Vec<Vec<u64>> = (0..m).map(|d| digit_polynomial(d, m, max_norm)).collect();
    let bound = max_norm as usize + 1;
    let totals = reps
        .par_iter()
        .fold(
            || vec![0u64; bound],
            |mut acc_total, rep| {
                let mut acc = vec![0u64; bound];
                acc[0] = 1;
                for &digit in rep {
                    acc = convolve_truncated(&acc, &polys[usize::from(digit)]);
                    if acc.iter().all(|&c| c == 0) {
                        break;
                    }
                }
                for (t, a) in acc_total.iter_mut().zip(&acc) {
                    *t += a;
                }
                acc_total
            },
        )
        .reduce(
            || vec![0u64; bound],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(&b) {
                    *x += y;
                }
                a
            },
        );
    let counts: BTreeMap<u64, u64> = totals
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(n, &c)| (n as u64, c))
        .collect();
    if counts.get(&0).copied() != Some(1) {
        return Err(Error::InternalInconsistency(
            "theta enumeration lost the zero vector".into(),
        ));
    }
    for (&n, &c) in &counts {
        if n > 0 && c % 2 != 0 {
            return Err(Error::InternalInconsistency(format!(
                "theta count at norm {n} is odd ({c}); antipodal symmetry violated"
            )));
        }
    }
    Ok(ThetaPrefix {
        max_norm,
        counts,
    })
}

/// One lattice vector of the exact squared norm, if any exists — the
/// witness extractor for failed minimality claims. Depth-first over the
/// coordinates of each residue with a remaining-minimum prune.
pub(crate) fn find_vector_of_norm(
    lattice: &IntegerLattice,
    norm: u64,
) -> Result<Option<Vec<i64>>> {
    let m = quotient_exponent(lattice.basis())?;
    let reps = residues(lattice.basis(), m);
    for rep in &reps {
        let digits: Vec<Vec<i64>> = rep
            .iter()
            .map(|&d| {
                let mut vals = Vec::new();
                let mut v = i64::from(d);
                while (v * v) as u64 <= norm {
                    vals.push(v);
                    v += m as i64;
                }
                v = i64::from(d) - m as i64;
                while (v * v) as u64 <= norm {
                    vals.push(v);
                    v -= m as i64;
                }
                vals
            })
            .collect();
        if digits.iter().any(|vals| vals.is_empty()) {
            continue;
        }
        let mins: Vec<u64> = digits
            .iter()
            .map(|vals| vals.iter().map(|&v| (v * v) as u64).min().unwrap_or(0))
            .collect();
        let mut suffix = vec![0u64; digits.len() + 1];
        for i in (0..digits.len()).rev() {
            suffix[i] = suffix[i + 1] + mins[i];
        }
        let mut chosen = vec![0i64; digits.len()];
        if dfs_norm(&digits, &suffix, norm, 0, &mut chosen) {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

fn dfs_norm(
    digits: &[Vec<i64>],
    suffix: &[u64],
    remaining: u64,
    index: usize,
    chosen: &mut Vec<i64>,
) -> bool {
    if index == digits.len() {
        return remaining == 0;
    }
    if suffix[index] > remaining {
        return false;
    }
    for &v in &digits[index] {
        let contribution = (v * v) as u64;
        if contribution + suffix[index + 1] <= remaining {
            chosen[index] = v;
            if dfs_norm(digits, suffix, remaining - contribution, index + 1, chosen) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::binary::build_punctured_simplex_14_4;
    use crate::lattice::constructions::{construction_a, lattice_from_vectors};

    #[test]
    fn two_z_two_counts_by_hand() {
        let lat = lattice_from_vectors(&[vec![2, 0], vec![0, 2]]).unwrap();
        let theta = theta_prefix(&lat, 8).unwrap();
        let expected: BTreeMap<u64, u64> = [(0, 1), (4, 4), (8, 4)].into();
        assert_eq!(theta.counts(), &expected);
        assert_eq!(theta.minimum(), Some(4));
    }

    #[test]
    fn z_one_counts_by_hand() {
        let lat = lattice_from_vectors(&[vec![1]]).unwrap();
        let theta = theta_prefix(&lat, 9).unwrap();
        let expected: BTreeMap<u64, u64> = [(0, 1), (1, 2), (4, 2), (9, 2)].into();
        assert_eq!(theta.counts(), &expected);
    }

    #[test]
    fn punctured_simplex_lattice_matches_the_stated_series() {
        let lat = construction_a(&build_punctured_simplex_14_4(), 1).unwrap();
        let theta = theta_prefix(&lat, 8).unwrap();
        let expected: BTreeMap<u64, u64> =
            [(0, 1), (4, 28), (7, 1024), (8, 2156)].into();
        assert_eq!(theta.counts(), &expected);
    }

    #[test]
    fn zero_code_lattice_minimum_and_kissing() {
        let words = vec![crate::codes::words::BinaryWord::zero(6).unwrap()];
        let code = crate::codes::binary::BinaryCode::from_words(6, words).unwrap();
        let lat = construction_a(&code, 1).unwrap();
        let theta = theta_prefix(&lat, 4).unwrap();
        assert_eq!(theta.minimum(), Some(4));
        assert_eq!(theta.count(4), 12); // kissing number 2n
    }

    #[test]
    fn construction_a_norm_counts_follow_the_weight_enumerator() {
        // norm 4: 2n from ±2eᵢ plus 16 per weight-4 codeword; norm w for
        // odd minimum weight w: 2^w per weight-w codeword.
        let code = build_punctured_simplex_14_4();
        let wd = code.weight_distribution();
        let lat = construction_a(&code, 1).unwrap();
        let theta = theta_prefix(&lat, 8).unwrap();
        let w4 = wd.get(&4).copied().unwrap_or(0);
        assert_eq!(theta.count(4), 2 * 14 + 16 * w4);
        let w7 = wd.get(&7).copied().unwrap_or(0);
        assert_eq!(theta.count(7), (1 << 7) * w7);
    }

    #[test]
    fn scaled_lattice_scales_norms_quadratically() {
        let words = vec![crate::codes::words::BinaryWord::zero(2).unwrap()];
        let code = crate::codes::binary::BinaryCode::from_words(2, words).unwrap();
        let unscaled = construction_a(&code, 1).unwrap();
        let scaled = construction_a(&code, 2).unwrap();
        let t1 = theta_prefix(&unscaled, 4).unwrap();
        let t2 = theta_prefix(&scaled, 16).unwrap();
        assert_eq!(t1.count(4), t2.count(16));
        assert_eq!(t2.minimum(), Some(16));
    }

    #[test]
    fn guards_reject_out_of_scope_requests() {
        let lat = lattice_from_vectors(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(theta_prefix(&lat, 25).is_err());
        let deficient = lattice_from_vectors(&[vec![1, 0, 0]]).unwrap();
        assert!(theta_prefix(&deficient, 4).is_err());
    }

    #[test]
    fn witness_extraction_finds_a_vector_of_the_requested_norm() {
        let lat = lattice_from_vectors(&[vec![2, 0], vec![0, 2]]).unwrap();
        let w = find_vector_of_norm(&lat, 8).unwrap().unwrap();
        assert_eq!(w.iter().map(|x| x * x).sum::<i64>(), 8);
        assert!(find_vector_of_norm(&lat, 5).unwrap().is_none());
    }
}
