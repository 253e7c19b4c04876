//! The two sides of the shortened-Kerdock duality: the distance scheme on
//! the 4^m codewords and the coset scheme on the 4^m syndromes of the
//! ambient space modulo the punctured dual.
//!
//! The codeword scheme relates two words by the Lee weight of their
//! difference (three values occur); the coset scheme relates two cosets by
//! the shape of the canonical representative of their difference (signed
//! unit, unit difference, or doubled unit). The two schemes are formally
//! dual: the eigenmatrices swap (`P' = Q`, `Q' = P`), the intersection
//! matrices of one are the Krein matrices of the other, and the character
//! sums over representative families reproduce the rows of Q without ever
//! enumerating the ambient space.

use crate::algebra::gaussian::GaussianInt;
use crate::codes::kerdock::{build_shortened_kerdock, CosetClassifier};
use crate::codes::words::{lee_distance, z4_dot, Z4Word};
use crate::codes::z4code::Z4Code;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::schemes::parameters::{permutations, SchemeParameters};
use crate::schemes::partition::{relations_from_values, RelationPartition};

/// The three Lee weights that occur between distinct shortened-Kerdock
/// codewords, in relation order: `2^m + 2^((m−1)/2)`, `2^m − 2^((m−1)/2)`,
/// `2^m`.
pub fn kerdock_relation_weights(m: usize) -> Result<[u32; 3]> {
    if m < 3 || m.is_multiple_of(2) || m > 15 {
        return Err(Error::InvalidParameter(format!(
            "m = {m} must be odd and between 3 and 15"
        )));
    }
    let base = 1u32 << m;
    let half = 1u32 << ((m - 1) / 2);
    Ok([base + half, base - half, base])
}

/// The 3-class relation partition on the 4^m shortened-Kerdock codewords,
/// classes ordered by [`kerdock_relation_weights`].
pub fn kerdock_scheme_partition(m: usize) -> Result<RelationPartition> {
    let code = build_shortened_kerdock(m)?;
    let weights = kerdock_relation_weights(m)?;
    relations_from_values(
        code.words(),
        |a: &Z4Word, b: &Z4Word| lee_distance(a, b).expect("codewords share one length"),
        &weights,
    )
}

/// The 3-class relation partition on the 4^m cosets of the punctured dual
/// inside the ambient space, built entirely on syndromes: two cosets are
/// related by the shape class of (the canonical representative of) their
/// difference. The ambient space itself is never enumerated, so this is as
/// cheap at m=5 (4^5 cosets of Z4^31) as at m=3.
pub fn coset_scheme_partition(m: usize) -> Result<RelationPartition> {
    let code = build_shortened_kerdock(m)?;
    let classifier = CosetClassifier::new(&code)?;
    let count = 1usize << (2 * m);
    let mut tags = vec![0u8; count];
    let mut syndrome = vec![0u8; m];
    for (packed, tag) in tags.iter_mut().enumerate() {
        for (j, digit) in syndrome.iter_mut().enumerate() {
            *digit = ((packed >> (2 * j)) & 3) as u8;
        }
        *tag = classifier.classify_syndrome(&syndrome)?.tag.index() as u8;
    }
    let points: Vec<u32> = (0..count as u32).collect();
    relations_from_values(
        &points,
        |&x, &y| {
            // Syndrome of a coset difference = difference of syndromes,
            // computed digit by digit mod 4 on the packed indices.
            let mut diff = 0usize;
            for j in 0..m {
                let dx = (x as usize >> (2 * j)) & 3;
                let dy = (y as usize >> (2 * j)) & 3;
                diff |= ((dx + 4 - dy) & 3) << (2 * j);
            }
            tags[diff]
        },
        &[1u8, 2, 3],
    )
}

/// Matrices of multiplication by the three coset classes in the group ring,
/// as polynomials in q = 2^m: `rho[i][j][k]` is the coefficient of class k
/// in (class i+1)·(class j). The coset scheme's intersection matrices are
/// their transposes.
pub fn rho_matrices(q: i64) -> [Matrix; 3] {
    let rho1 = Matrix::from_int_rows(&[
        vec![0, 2 * q - 2, 0, 0],
        vec![1, 0, 2 * (q - 2), 1],
        vec![0, 4, 2 * (q - 4), 2],
        vec![0, 2, 2 * (q - 2), 0],
    ]);
    let rho2 = Matrix::from_int_rows(&[
        vec![0, 0, (q - 1) * (q - 2), 0],
        vec![0, 2 * (q - 2), (q - 4) * (q - 2), q - 2],
        vec![1, 2 * (q - 4), q * q - 6 * q + 12, q - 3],
        vec![0, 2 * (q - 2), (q - 3) * (q - 2), 0],
    ]);
    let rho3 = Matrix::from_int_rows(&[
        vec![0, 0, 0, q - 1],
        vec![0, 1, q - 2, 0],
        vec![0, 2, q - 3, 0],
        vec![1, 0, 0, q - 2],
    ]);
    [rho1, rho2, rho3]
}

/// Evaluates the character sums `Σ_{v ∈ V_k} i^{−(v,u)}` over the three
/// coset-representative families for a codeword `u`, returning the row
/// `(1, Σ_{V_1}, Σ_{V_2}, Σ_{V_3})` of the second eigenmatrix indexed by
/// u's weight class. Each sum must come out real; a nonzero imaginary part
/// would falsify the duality and is reported as an inconsistency.
pub fn dual_character_row(
    kerdock: &Z4Code,
    u: &[u8],
    families: &[Vec<Z4Word>; 3],
) -> Result<[i64; 4]> {
    if u.len() != kerdock.length() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: kerdock.length(),
        });
    }
    if !kerdock.contains(u) {
        return Err(Error::InvalidParameter(
            "character rows are defined for codewords of the shortened code".into(),
        ));
    }
    let mut row = [1i64; 4];
    for (k, family) in families.iter().enumerate() {
        let mut sum = GaussianInt::zero();
        for v in family {
            sum += GaussianInt::i_pow(-i64::from(z4_dot(v, u)?));
        }
        if !sum.is_real() {
            return Err(Error::InternalInconsistency(format!(
                "character sum over family {} of a real scheme came out complex: {:?}",
                k + 1,
                sum
            )));
        }
        row[k + 1] = i64::try_from(&sum.re).map_err(|_| {
            Error::InternalInconsistency("character sum exceeds i64".into())
        })?;
    }
    Ok(row)
}

/// True iff the two parameter sets are formally dual: some eigenspace
/// ordering of each side makes `P_b = Q_a` and `Q_b = P_a` hold exactly.
/// Class orderings are fixed by construction and are not permuted.
pub fn verify_duality(a: &SchemeParameters, b: &SchemeParameters) -> bool {
    if a.n() != b.n() || a.d() != b.d() {
        return false;
    }
    let orders: Vec<Vec<usize>> = permutations(a.d())
        .into_iter()
        .map(|tail| {
            let mut order = vec![0];
            order.extend(tail.into_iter().map(|t| t + 1));
            order
        })
        .collect();
    let reorder = |params: &SchemeParameters| -> Vec<SchemeParameters> {
        orders
            .iter()
            .filter_map(|o| params.with_eigen_order(o).ok())
            .collect()
    };
    let all_a = reorder(a);
    let all_b = reorder(b);
    for ra in &all_a {
        for rb in &all_b {
            if rb.p() == ra.q() && rb.q() == ra.p() {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::codes::kerdock::{
        doubled_unit_representatives, signed_unit_representatives, unit_difference_representatives,
    };
    use crate::codes::words::lee_weight;
    use crate::schemes::closed::{closed_form, ClosedFormFamily, SchemeFamily};
    use crate::schemes::verify::verify_scheme;

    fn representative_families(n: usize) -> [Vec<Z4Word>; 3] {
        [
            signed_unit_representatives(n),
            unit_difference_representatives(n),
            doubled_unit_representatives(n),
        ]
    }

    #[test]
    fn codeword_partition_m3_has_the_expected_class_sizes() {
        let rp = kerdock_scheme_partition(3).unwrap();
        assert_eq!(rp.n(), 64);
        // Per point: 14 at weight 10, 42 at weight 6, 7 at weight 8.
        assert_eq!(rp.class_pair_counts(), vec![64, 64 * 14, 64 * 42, 64 * 7]);
    }

    #[test]
    fn codeword_partition_m5_has_the_expected_class_sizes() {
        let rp = kerdock_scheme_partition(5).unwrap();
        assert_eq!(rp.n(), 1024);
        assert_eq!(
            rp.class_pair_counts(),
            vec![1024, 1024 * 372, 1024 * 620, 1024 * 31]
        );
    }

    #[test]
    fn coset_partition_m3_matches_the_codeword_scheme_exactly() {
        // m=3 is self-dual: the coset scheme carries the same parameters as
        // the codeword scheme, i.e. the published N=16 tables.
        let rp = coset_scheme_partition(3).unwrap();
        assert_eq!(rp.n(), 64);
        assert_eq!(rp.class_pair_counts(), vec![64, 64 * 14, 64 * 42, 64 * 7]);
        let params = verify_scheme(&rp).unwrap();
        let closed = closed_form(&ClosedFormFamily::new(SchemeFamily::Y, 16).unwrap()).unwrap();
        let aligned = params.aligned_to(&closed).unwrap();
        assert_eq!(aligned, closed);
    }

    #[test]
    fn coset_intersection_matrices_are_the_transposed_multiplication_tables() {
        for (m, q) in [(3usize, 8i64), (5, 32)] {
            let params = verify_scheme(&coset_scheme_partition(m).unwrap()).unwrap();
            let rho = rho_matrices(q);
            for (i, rho_i) in rho.iter().enumerate() {
                assert_eq!(params.b()[i + 1], rho_i.transpose(), "m={m}, class {}", i + 1);
            }
            // Group-ring identities, read off as rows of the B_i:
            // D3·D3 = (q−1)·D0 + (q−2)·D3,
            // D1·D1 = 2(q−1)·D0 + 4·D2 + 2·D3,
            // D3·D1 = D1 + 2·D2.
            assert_eq!(
                params.b()[3].row(3).to_vec(),
                vec![rat(q - 1), rat(0), rat(0), rat(q - 2)]
            );
            assert_eq!(
                params.b()[1].row(1).to_vec(),
                vec![rat(2 * (q - 1)), rat(0), rat(4), rat(2)]
            );
            assert_eq!(
                params.b()[3].row(1).to_vec(),
                vec![rat(0), rat(1), rat(2), rat(0)]
            );
        }
    }

    #[test]
    fn coset_scheme_m5_is_the_formal_dual_of_the_closed_form() {
        let params = verify_scheme(&coset_scheme_partition(5).unwrap()).unwrap();
        let closed = closed_form(&ClosedFormFamily::new(SchemeFamily::Y, 64).unwrap()).unwrap();
        let dual = closed.formal_dual().unwrap();
        let aligned = params.aligned_to(&dual).unwrap();
        assert_eq!(aligned, dual);
    }

    #[test]
    fn codeword_and_coset_schemes_are_dual_at_both_desk_sizes() {
        for m in [3usize, 5] {
            let code_side = verify_scheme(&kerdock_scheme_partition(m).unwrap()).unwrap();
            let coset_side = verify_scheme(&coset_scheme_partition(m).unwrap()).unwrap();
            assert!(verify_duality(&code_side, &coset_side), "m = {m}");
            assert!(verify_duality(&coset_side, &code_side), "m = {m}");
        }
    }

    #[test]
    fn the_self_dual_scheme_is_dual_to_itself_and_y_z_are_not_dual() {
        let y16 = closed_form(&ClosedFormFamily::new(SchemeFamily::Y, 16).unwrap()).unwrap();
        assert!(verify_duality(&y16, &y16));
        let z16 = closed_form(&ClosedFormFamily::new(SchemeFamily::Z, 16).unwrap()).unwrap();
        assert!(!verify_duality(&y16, &z16));
    }

    #[test]
    fn character_rows_reproduce_q_at_m3() {
        let code = build_shortened_kerdock(3).unwrap();
        let families = representative_families(code.length());
        // The trivial character: valency row of the coset scheme,
        // equivalently row 0 of Q.
        let zero = vec![0u8; code.length()];
        assert_eq!(
            dual_character_row(&code, &zero, &families).unwrap(),
            [1, 14, 42, 7]
        );
        // One codeword per weight class against the published rows.
        let expected: [(u32, [i64; 4]); 3] = [
            (10, [1, -6, 6, -1]),
            (6, [1, 2, -2, -1]),
            (8, [1, -2, -6, 7]),
        ];
        for (weight, row) in expected {
            let u = code
                .words()
                .iter()
                .find(|w| lee_weight(w) == weight)
                .expect("weight class is populated");
            assert_eq!(dual_character_row(&code, u, &families).unwrap(), row);
        }
    }

    #[test]
    fn character_rows_reproduce_q_at_m5() {
        let code = build_shortened_kerdock(5).unwrap();
        let families = representative_families(code.length());
        let expected: [(u32, [i64; 4]); 3] = [
            (36, [1, -10, 10, -1]),
            (28, [1, 6, -6, -1]),
            (32, [1, -2, -30, 31]),
        ];
        for (weight, row) in expected {
            let u = code
                .words()
                .iter()
                .find(|w| lee_weight(w) == weight)
                .expect("weight class is populated");
            assert_eq!(dual_character_row(&code, u, &families).unwrap(), row);
        }
    }

    #[test]
    fn character_rows_reject_non_codewords() {
        let code = build_shortened_kerdock(3).unwrap();
        let families = representative_families(code.length());
        let mut not_a_word = vec![0u8; code.length()];
        not_a_word[0] = 1; // a single unit vector is never a codeword here
        assert!(dual_character_row(&code, &not_a_word, &families).is_err());
    }
}
