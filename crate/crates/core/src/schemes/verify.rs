//! The counting axiom: a relation partition is an association scheme exactly
//! when every intersection number
//! `p_ij^k = #{z : (x,z) ∈ R_i and (z,y) ∈ R_j}` depends only on the class
//! `k` of `(x, y)`, never on the pair itself.
//!
//! Verification is deliberately brute force — it is the trusted oracle
//! against which closed-form tables are checked — but organized for speed:
//! each point's neighborhood in each class is a packed bitset, so one
//! intersection count is a word-wise AND plus popcounts, and the pair loop
//! parallelizes freely.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::schemes::parameters::SchemeParameters;
use crate::schemes::partition::RelationPartition;
use rayon::prelude::*;

/// Per-class neighborhood bitsets: `rows[c]` packs, for every point `x`, the
/// set `{y : (x,y) ∈ R_c}` into `words_per_point` machine words.
struct ClassBitsets {
    words_per_point: usize,
    rows: Vec<Vec<u64>>,
}

impl ClassBitsets {
    fn build(rp: &RelationPartition) -> Self {
        let n = rp.n();
        let w = n.div_ceil(64);
        let mut rows = vec![vec![0u64; n * w]; rp.d() + 1];
        for x in 0..n {
            for y in 0..n {
                rows[rp.class(x, y)][x * w + y / 64] |= 1u64 << (y % 64);
            }
        }
        ClassBitsets {
            words_per_point: w,
            rows,
        }
    }

    /// `#{z : (x,z) ∈ R_i and (y,z) ∈ R_j}`; by symmetry of the relations
    /// this is the intersection count for the ordered pair `(x, y)`.
    #[inline]
    fn count(&self, i: usize, j: usize, x: usize, y: usize) -> usize {
        let w = self.words_per_point;
        let a = &self.rows[i][x * w..(x + 1) * w];
        let b = &self.rows[j][y * w..(y + 1) * w];
        a.iter()
            .zip(b)
            .map(|(p, q)| (p & q).count_ones() as usize)
            .sum()
    }
}

/// Checks the counting axiom on every pair and, on success, returns the full
/// parameter set (intersection matrices, eigenmatrices, multiplicities,
/// Krein parameters) computed exactly.
///
/// On failure the error names the ordered class pair and two witnesses in
/// the same relation class with different counts.
pub fn verify_scheme(rp: &RelationPartition) -> Result<SchemeParameters> {
    let n = rp.n();
    let d = rp.d();
    let bits = ClassBitsets::build(rp);

    // One canonical pair per class fixes the counts every other pair must
    // reproduce. Class 0 is the diagonal; the partition constructor has
    // already guaranteed every class is nonempty.
    let mut canonical: Vec<Option<(usize, usize)>> = vec![None; d + 1];
    canonical[0] = Some((0, 0));
    let mut unfilled = d;
    'scan: for x in 0..n {
        for y in (x + 1)..n {
            let k = rp.class(x, y);
            if canonical[k].is_none() {
                canonical[k] = Some((x, y));
                unfilled -= 1;
                if unfilled == 0 {
                    break 'scan;
                }
            }
        }
    }
    let canonical: Vec<(usize, usize)> = canonical
        .into_iter()
        .map(|c| {
            c.ok_or_else(|| {
                Error::InternalInconsistency("nonempty class without a representative pair".into())
            })
        })
        .collect::<Result<_>>()?;

    // p_table[k][i][j] = p_ij^k measured at the canonical pair of class k.
    let p_table: Vec<Vec<Vec<usize>>> = canonical
        .iter()
        .map(|&(x, y)| {
            (0..=d)
                .map(|i| (0..=d).map(|j| bits.count(i, j, x, y)).collect())
                .collect()
        })
        .collect();

    // Every pair (x ≤ y suffices: count_ij(y,x) = count_ji(x,y), and the
    // loop ranges over all ordered class pairs) must reproduce the table.
    (0..n).into_par_iter().try_for_each(|x| -> Result<()> {
        for y in x..n {
            let k = rp.class(x, y);
            for (i, table_row) in p_table[k].iter().enumerate() {
                for (j, &want) in table_row.iter().enumerate() {
                    let got = bits.count(i, j, x, y);
                    if got != want {
                        let (x_a, y_a) = canonical[k];
                        return Err(Error::NonConstantIntersection {
                            class_i: i,
                            class_j: j,
                            x_a,
                            y_a,
                            count_a: want,
                            x_b: x,
                            y_b: y,
                            count_b: got,
                        });
                    }
                }
            }
        }
        Ok(())
    })?;

    // B_i[j][k] = p_ij^k, the matrix of multiplication by the i-th class in
    // the adjacency algebra.
    let b: Vec<Matrix> = (0..=d)
        .map(|i| {
            Matrix::from_int_rows(
                &(0..=d)
                    .map(|j| (0..=d).map(|k| p_table[k][i][j] as i64).collect())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    SchemeParameters::from_intersection_matrices(n as u64, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::partition::relations_from_values;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn complete_graph_is_a_one_class_scheme() {
        let points: Vec<u32> = (0..6).collect();
        let rp = relations_from_values(&points, |a, b| a != b, &[true]).unwrap();
        let params = verify_scheme(&rp).unwrap();
        assert_eq!(params.d(), 1);
        assert_eq!(params.valencies(), &[1, 5]);
        // B_1 of the complete graph: one common neighbor count everywhere.
        assert_eq!(
            params.b()[1],
            Matrix::from_int_rows(&[vec![0, 1], vec![5, 4]])
        );
    }

    #[test]
    fn four_cycle_is_a_two_class_scheme_with_integer_spectrum() {
        // C4 = K_{2,2}: adjacency (distance 1) and the antipodal pairing
        // (distance 2) form a 2-class scheme with eigenvalues {2, 0, −2}.
        let points: Vec<i32> = (0..4).collect();
        let dist = |a: &i32, b: &i32| (a - b).rem_euclid(4).min((b - a).rem_euclid(4));
        let rp = relations_from_values(&points, dist, &[1, 2]).unwrap();
        let params = verify_scheme(&rp).unwrap();
        assert_eq!(params.valencies(), &[1, 2, 1]);
        // Adjacent vertices of a quadrilateral share no common neighbor.
        assert_eq!(params.b()[1].at(1, 1), &crate::algebra::rational::rat(0));
        assert_eq!(
            params.p(),
            &Matrix::from_int_rows(&[vec![1, 2, 1], vec![1, 0, -1], vec![1, -2, 1]])
        );
    }

    #[test]
    fn pentagon_counts_pass_but_its_irrational_spectrum_is_rejected() {
        // C5 satisfies the counting axiom, but its eigenvalues (−1 ± √5)/2
        // are irrational — outside the integral spectra handled here — so
        // verification must refuse rather than approximate.
        let points: Vec<i32> = (0..5).collect();
        let dist = |a: &i32, b: &i32| (a - b).rem_euclid(5).min((b - a).rem_euclid(5));
        let rp = relations_from_values(&points, dist, &[1, 2]).unwrap();
        let err = verify_scheme(&rp).unwrap_err();
        assert!(matches!(err, Error::IrrationalEigenvalue(_)));
    }

    #[test]
    fn random_coloring_is_rejected_with_a_witness() {
        // A random symmetric 3-coloring of 8 points is essentially never an
        // association scheme; the verifier must say which counts disagree.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let n = 8;
        let mut rows = vec![vec![0u8; n]; n];
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            for y in (x + 1)..n {
                let c = rng.gen_range(1..=3u8);
                rows[x][y] = c;
                rows[y][x] = c;
            }
        }
        let rp = match RelationPartition::from_class_matrix(3, rows) {
            Ok(rp) => rp,
            // A coloring that misses a class is as good a rejection as any,
            // but this seed produces all three classes.
            Err(e) => panic!("seed should produce a full coloring: {e}"),
        };
        let err = verify_scheme(&rp).unwrap_err();
        match err {
            Error::NonConstantIntersection {
                x_a,
                y_a,
                x_b,
                y_b,
                count_a,
                count_b,
                ..
            } => {
                assert_ne!((x_a, y_a), (x_b, y_b));
                assert_ne!(count_a, count_b);
            }
            other => panic!("expected a non-constant witness, got {other}"),
        }
    }

    #[test]
    fn the_disjoint_union_of_two_edges_fails_nonemptiness_not_counting() {
        // Sanity: partition-level axioms are caught before counting ever
        // runs. Distance 3 never occurs between {0,1,10,11}.
        let pts = [0i64, 1, 10, 11];
        let err = relations_from_values(&pts, |a, b| (a - b).abs(), &[1, 3, 9, 10, 11]).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }
}
