//! Quadratic Boolean forms: radical dimension, zero counts, and type.
//!
//! A form on n variables is stored as an upper-triangular 0/1 coefficient
//! matrix; the diagonal holds linear terms (x_i^2 = x_i over F2), the strict
//! upper part holds the cross terms. The associated bilinear form
//! `B_Q(x, y) = Q(x+y) + Q(x) + Q(y)` drops the diagonal, and its radical
//! controls the number of zeros: `2^{n-1} ± 2^{(n-2+r)/2}` when the form is
//! unbalanced, with the type χ = ±1 defined exactly when the radical is
//! trivial.

use crate::error::{Error, Result};

/// Exhaustive evaluation is capped at this many variables.
const MAX_VARIABLES: usize = 12;

/// An upper-triangular quadratic form over F2, constant term zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuadraticForm {
    n: usize,
    /// Row `i` packs the coefficients of `x_i x_j` for `j >= i` (bit `j`).
    rows: Vec<u16>,
}

/// Summary statistics of a quadratic form, from exhaustive evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormStats {
    /// Dimension of the radical of the associated bilinear form.
    pub radical_dim: usize,
    /// Number of points where the form vanishes.
    pub zero_count: u64,
    /// Type of a nondegenerate form: `+1` hyperbolic, `-1` elliptic;
    /// `None` when the radical is nontrivial.
    pub chi: Option<i8>,
}

impl BinaryQuadraticForm {
    /// Builds a form from upper-triangular coefficient rows; row `i` may
    /// only set bits at positions `>= i`.
    pub fn new(n: usize, rows: Vec<u16>) -> Result<Self> {
        if n == 0 || n > MAX_VARIABLES {
            return Err(Error::InvalidParameter(format!(
                "quadratic form needs between 1 and {MAX_VARIABLES} variables, got {n}"
            )));
        }
        if rows.len() != n {
            return Err(Error::LengthMismatch {
                left: rows.len(),
                right: n,
            });
        }
        for (i, &row) in rows.iter().enumerate() {
            if row >> n != 0 {
                return Err(Error::InvalidParameter(format!(
                    "row {i} sets coefficients past variable {n}"
                )));
            }
            if row & ((1u16 << i) - 1) != 0 {
                return Err(Error::InvalidParameter(format!(
                    "row {i} is not upper-triangular"
                )));
            }
        }
        Ok(Self { n, rows })
    }

    /// The zero form on `n` variables.
    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![0; n])
    }

    /// Builds a form from explicit monomials: `quadratic` lists pairs
    /// `(i, j)` with `i != j` for the cross terms, `linear` lists squared /
    /// linear variables.
    pub fn from_terms(n: usize, quadratic: &[(usize, usize)], linear: &[usize]) -> Result<Self> {
        let mut rows = vec![0u16; n];
        for &(i, j) in quadratic {
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidParameter(format!(
                    "cross term ({i}, {j}) out of range for {n} variables"
                )));
            }
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            rows[lo] ^= 1 << hi;
        }
        for &i in linear {
            if i >= n {
                return Err(Error::InvalidParameter(format!(
                    "linear term {i} out of range for {n} variables"
                )));
            }
            rows[i] ^= 1 << i;
        }
        Self::new(n, rows)
    }

    /// Number of variables.
    pub fn variables(&self) -> usize {
        self.n
    }

    /// Evaluates the form at the point with coordinate bits `x`.
    pub fn eval(&self, x: u16) -> u8 {
        debug_assert_eq!(x >> self.n, 0);
        let mut acc = 0u32;
        for i in 0..self.n {
            if (x >> i) & 1 == 1 {
                acc ^= (self.rows[i] & x).count_ones();
            }
        }
        (acc & 1) as u8
    }

    /// Rows of the associated symmetric bilinear form (diagonal zero).
    pub fn bilinear_rows(&self) -> Vec<u16> {
        let mut b = vec![0u16; self.n];
        for i in 0..self.n {
            for j in i + 1..self.n {
                if (self.rows[i] >> j) & 1 == 1 {
                    b[i] ^= 1 << j;
                    b[j] ^= 1 << i;
                }
            }
        }
        b
    }

    /// Dimension of the radical `{x : B_Q(x, ·) = 0}`.
    pub fn radical_dim(&self) -> usize {
        let mut rows = self.bilinear_rows();
        // Gaussian elimination over F2 on packed rows.
        let mut rank = 0;
        for col in 0..self.n {
            let Some(pivot) = (rank..self.n).find(|&r| (rows[r] >> col) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..self.n {
                if r != rank && (rows[r] >> col) & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
        self.n - rank
    }

    /// Exhaustive statistics: radical dimension, zero count, and type.
    pub fn stats(&self) -> Result<FormStats> {
        let radical_dim = self.radical_dim();
        let zero_count = (0..1u32 << self.n)
            .filter(|&x| self.eval(x as u16) == 0)
            .count() as u64;
        let chi = if radical_dim == 0 {
            // Nondegenerate alternating forms exist only in even dimension,
            // and the zero count is then 2^{n-1} ± 2^{n/2 - 1}.
            let half = 1u64 << (self.n - 1);
            let excess = 1u64 << (self.n / 2 - 1);
            let chi = if zero_count == half + excess {
                1i8
            } else if zero_count == half - excess {
                -1i8
            } else {
                return Err(Error::InternalInconsistency(format!(
                    "nondegenerate form has {zero_count} zeros, expected {half} ± {excess}"
                )));
            };
            Some(chi)
        } else {
            None
        };
        Ok(FormStats {
            radical_dim,
            zero_count,
            chi,
        })
    }
}

/// Convenience wrapper returning the statistics of a form.
pub fn quadratic_form_stats(form: &BinaryQuadraticForm) -> Result<FormStats> {
    form.stats()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_form_vanishes_everywhere_with_full_radical() {
        let q = BinaryQuadraticForm::zero(4).unwrap();
        let stats = q.stats().unwrap();
        assert_eq!(stats.radical_dim, 4);
        assert_eq!(stats.zero_count, 16);
        assert_eq!(stats.chi, None);
    }

    #[test]
    fn hyperbolic_four_variable_form() {
        // x1 x2 + x3 x4 (zero-indexed pairs (0,1), (2,3)).
        let q = BinaryQuadraticForm::from_terms(4, &[(0, 1), (2, 3)], &[]).unwrap();
        let stats = q.stats().unwrap();
        assert_eq!(stats.radical_dim, 0);
        assert_eq!(stats.zero_count, 10);
        assert_eq!(stats.chi, Some(1));
    }

    #[test]
    fn elliptic_four_variable_form() {
        // x1 x2 + x3 x4 + x3^2 + x4^2.
        let q = BinaryQuadraticForm::from_terms(4, &[(0, 1), (2, 3)], &[2, 3]).unwrap();
        let stats = q.stats().unwrap();
        assert_eq!(stats.radical_dim, 0);
        assert_eq!(stats.zero_count, 6);
        assert_eq!(stats.chi, Some(-1));
    }

    #[test]
    fn degenerate_form_counts_follow_the_radical() {
        // x1 x2 alone on four variables: radical spanned by e3, e4.
        let q = BinaryQuadraticForm::from_terms(4, &[(0, 1)], &[]).unwrap();
        let stats = q.stats().unwrap();
        assert_eq!(stats.radical_dim, 2);
        // 2^{n-1} + 2^{(n-2+r)/2} = 8 + 4.
        assert_eq!(stats.zero_count, 12);
        assert_eq!(stats.chi, None);
    }

    #[test]
    fn constructors_validate_shapes() {
        assert!(BinaryQuadraticForm::new(4, vec![0, 1, 0, 0]).is_err()); // lower entry
        assert!(BinaryQuadraticForm::new(13, vec![0; 13]).is_err()); // too many variables
        assert!(BinaryQuadraticForm::new(2, vec![0b100, 0]).is_err()); // past last variable
        assert!(BinaryQuadraticForm::from_terms(3, &[(0, 0)], &[]).is_err()); // squared via pair
    }

    #[test]
    fn eval_agrees_with_direct_expansion_on_a_sample() {
        let q = BinaryQuadraticForm::from_terms(3, &[(0, 2)], &[1]).unwrap();
        // Q(x) = x0 x2 + x1.
        for x in 0..8u16 {
            let x0 = x & 1;
            let x1 = (x >> 1) & 1;
            let x2 = (x >> 2) & 1;
            assert_eq!(u16::from(q.eval(x)), (x0 * x2) ^ x1);
        }
    }
}
