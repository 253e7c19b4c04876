//! Relation partitions: symmetric colorings of point pairs that are
//! candidates for association schemes.
//!
//! A [`RelationPartition`] records, for each ordered pair of `n` points, a
//! class index in `{0, …, d}`, with class 0 reserved for the diagonal. The
//! constructor enforces the structural axioms that need no counting —
//! symmetry, diagonal placement, nonemptiness of every class — while the
//! counting axiom (constancy of the intersection numbers) lives in
//! [`verify_scheme`](crate::schemes::verify_scheme).
//!
//! Partitions are usually produced by [`relations_from_values`], which
//! classifies pairs by the value of a symmetric function (a Lee or Hamming
//! distance, an inner product, a coset shape) against a declared list of
//! expected values.

use crate::error::{Error, Result};
use rayon::prelude::*;

/// A partition of the ordered pairs of `n` points into `d` symmetric
/// off-diagonal classes plus the diagonal class 0.
#[derive(Clone, Debug)]
pub struct RelationPartition {
    n: usize,
    d: usize,
    /// Row-major `n × n` class indices.
    class_of: Vec<u8>,
}

impl RelationPartition {
    /// Builds a partition from an explicit class matrix and validates the
    /// structural axioms: the matrix is square and symmetric, class 0 appears
    /// exactly on the diagonal, entries lie in `{0, …, d}`, and every
    /// off-diagonal class is nonempty.
    pub fn from_class_matrix(d: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a relation partition needs at least one point".into(),
            ));
        }
        if d > 254 {
            return Err(Error::InvalidParameter(format!(
                "class count {d} exceeds the supported maximum of 254"
            )));
        }
        let mut class_of = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: n,
                });
            }
            for (y, &c) in row.iter().enumerate() {
                if usize::from(c) > d {
                    return Err(Error::InvalidParameter(format!(
                        "pair ({x}, {y}) carries class {c}, beyond the declared {d}"
                    )));
                }
                if (x == y) != (c == 0) {
                    return Err(Error::InvalidParameter(format!(
                        "class 0 must appear exactly on the diagonal; pair ({x}, {y}) has class {c}"
                    )));
                }
            }
            class_of.extend_from_slice(row);
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if class_of[x * n + y] != class_of[y * n + x] {
                    return Err(Error::NotSymmetric { row: x, col: y });
                }
            }
        }
        let mut seen = vec![false; d + 1];
        for &c in &class_of {
            seen[usize::from(c)] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidParameter(format!(
                "relation class {missing} is empty"
            )));
        }
        Ok(RelationPartition { n, d, class_of })
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of off-diagonal classes.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Class of an ordered pair.
    #[inline]
    pub fn class(&self, x: usize, y: usize) -> usize {
        usize::from(self.class_of[x * self.n + y])
    }

    /// Rows of the class matrix, for serialization.
    pub fn class_rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.class_of.chunks_exact(self.n)
    }

    /// Number of ordered pairs in each class, indexed `0..=d`.
    pub fn class_pair_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.d + 1];
        for &c in &self.class_of {
            counts[usize::from(c)] += 1;
        }
        counts
    }
}

/// Classifies every pair of `points` by the value of a symmetric function.
///
/// Off-diagonal pairs whose value equals `expected[i]` land in class `i + 1`,
/// so the classes are indexed in the order the expected values are listed.
/// Errors are witnesses: an off-diagonal pair with a value outside
/// `expected`, a diagonal value that collides with an expected one, or an
/// asymmetric classification all name the offending points.
pub fn relations_from_values<T, V, F>(
    points: &[T],
    pair_value: F,
    expected: &[V],
) -> Result<RelationPartition>
where
    T: Sync,
    V: PartialEq + std::fmt::Debug + Sync,
    F: Fn(&T, &T) -> V + Sync,
{
    let n = points.len();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "a relation partition needs at least one point".into(),
        ));
    }
    for (a, va) in expected.iter().enumerate() {
        for vb in expected.iter().skip(a + 1) {
            if va == vb {
                return Err(Error::InvalidParameter(format!(
                    "expected relation values must be distinct; {va:?} repeats"
                )));
            }
        }
    }
    let rows: Vec<Vec<u8>> = (0..n)
        .into_par_iter()
        .map(|x| -> Result<Vec<u8>> {
            let diagonal = pair_value(&points[x], &points[x]);
            if expected.contains(&diagonal) {
                return Err(Error::InvalidParameter(format!(
                    "expected relation values contain the diagonal value {diagonal:?} (point {x})"
                )));
            }
            let mut row = vec![0u8; n];
            for (y, other) in points.iter().enumerate() {
                if y == x {
                    continue;
                }
                let value = pair_value(&points[x], other);
                match expected.iter().position(|e| *e == value) {
                    Some(idx) => row[y] = (idx + 1) as u8,
                    None => {
                        return Err(Error::UnexpectedPairValue {
                            x,
                            y,
                            value: format!("{value:?}"),
                        })
                    }
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    RelationPartition::from_class_matrix(expected.len(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_gives_the_trivial_partition() {
        let partition = relations_from_values(&[0u8], |_, _| 0u32, &[]).unwrap();
        assert_eq!(partition.n(), 1);
        assert_eq!(partition.d(), 0);
        assert_eq!(partition.class(0, 0), 0);
        assert_eq!(partition.class_pair_counts(), vec![1]);
    }

    #[test]
    fn pairwise_distances_on_a_square_split_into_side_and_diagonal() {
        // Four points of a unit square; squared distances 1 (sides) and 2
        // (diagonals) give a 2-class partition.
        let pts = [(0i64, 0i64), (1, 0), (1, 1), (0, 1)];
        let d2 = |a: &(i64, i64), b: &(i64, i64)| (a.0 - b.0).pow(2) + (a.1 - b.1).pow(2);
        let partition = relations_from_values(&pts, d2, &[1, 2]).unwrap();
        assert_eq!(partition.d(), 2);
        assert_eq!(partition.class(0, 1), 1);
        assert_eq!(partition.class(0, 2), 2);
        assert_eq!(partition.class_pair_counts(), vec![4, 8, 4]);
    }

    #[test]
    fn unexpected_value_is_reported_with_the_offending_pair() {
        let pts = [0i64, 1, 3];
        let err = relations_from_values(&pts, |a, b| (a - b).abs(), &[1, 2]).unwrap_err();
        match err {
            Error::UnexpectedPairValue { x, y, value } => {
                assert_eq!((x, y).min((y, x)), (0, 2));
                assert_eq!(value, "3");
            }
            other => panic!("expected an unexpected-value witness, got {other}"),
        }
    }

    #[test]
    fn diagonal_value_may_not_be_listed_as_expected() {
        let err = relations_from_values(&[0u8, 1], |a, b| u32::from(a ^ b), &[0, 1]).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn missing_class_is_rejected() {
        // Two points at distance 1 but with a declared class for distance 7
        // that never occurs.
        let err = relations_from_values(&[0i64, 1], |a, b| (a - b).abs(), &[1, 7]).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn asymmetric_class_matrix_is_rejected() {
        let rows = vec![vec![0, 1], vec![2, 0]];
        let err = RelationPartition::from_class_matrix(2, rows).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn off_diagonal_zero_is_rejected() {
        let rows = vec![vec![0, 0], vec![0, 0]];
        let err = RelationPartition::from_class_matrix(1, rows).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }
}
