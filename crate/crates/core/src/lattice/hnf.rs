//! Row-style Hermite normal form over the integers.
//!
//! The canonical form used throughout this module: row echelon with
//! positive pivots and every entry above a pivot reduced into `[0, pivot)`.
//! Two integer row spans are equal exactly when their forms agree, which is
//! what turns "these vectors generate the same lattice" into a comparison
//! of matrices. Arithmetic is arbitrary-precision; the matrices here are
//! tiny (dimension ≤ 16 with entries of a few bits), so the classical
//! gcd-elimination scheme needs no anti-swell tricks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Hermite normal form of the span of `rows`. Zero rows are dropped; the
/// result has one row per pivot, in pivot-column order.
pub(crate) fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    if mat.is_empty() {
        return Vec::new();
    }
    let ncols = mat[0].len();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot) = (row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pivot);
        // Euclidean elimination below the pivot: repeatedly replace the
        // pivot row by its remainder against a competing row and swap, so
        // the pivot entry walks down the gcd.
        for r in row + 1..mat.len() {
            while !mat[r][col].is_zero() {
                let q = &mat[row][col] / &mat[r][col];
                let (head, tail) = mat.split_at_mut(r);
                for (dst, src) in head[row].iter_mut().zip(&tail[0]) {
                    *dst -= &q * src;
                }
                mat.swap(row, r);
            }
        }
        if mat[row][col].is_negative() {
            for x in &mut mat[row] {
                *x = -std::mem::take(x);
            }
        }
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    mat.truncate(row);
    // Reduce entries above each pivot, in increasing pivot order so that a
    // reducing row already has zeros in all earlier pivot columns.
    let pivot_cols: Vec<usize> = mat
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    for r in 0..mat.len() {
        let col = pivot_cols[r];
        for upper in 0..r {
            let q = mat[upper][col].div_floor(&mat[r][col]);
            if !q.is_zero() {
                let (head, tail) = mat.split_at_mut(r);
                for (dst, src) in head[upper].iter_mut().zip(&tail[0]) {
                    *dst -= &q * src;
                }
            }
        }
    }
    mat
}
