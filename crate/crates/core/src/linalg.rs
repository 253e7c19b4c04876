//! Exact dense linear algebra over the rationals.
//!
//! Sizes here are small — intersection matrices are at most 5×5 and Gram
//! matrices at most a few thousand rows for rank checks — so plain
//! Gauss-Jordan elimination with arbitrary-precision rationals is both exact
//! and fast enough. Characteristic polynomials come from the
//! Faddeev–LeVerrier recurrence, and eigenvalues are extracted as integer
//! roots via divisor search with synthetic division, which is complete for
//! the matrices in scope (their spectra are integral).

use crate::algebra::rational::{rat, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols)
                .map(|j| crate::algebra::rational::rat_to_string(self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            data: vec![Rat::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let ncols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        Matrix {
            nrows: rows.len(),
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.ncols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.ncols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in multiply");
        let mut out = Matrix::zero(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let term = a * rhs.at(k, j);
                    *out.at_mut(i, j) += term;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    /// Trace (sum of diagonal entries).
    pub fn trace(&self) -> Rat {
        assert_eq!(self.nrows, self.ncols);
        (0..self.nrows).map(|i| self.at(i, i).clone()).sum()
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            // Find a pivot in column c at or below row r.
            let Some(p) = (r..m.nrows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).clone().recip();
            for j in c..m.ncols {
                *m.at_mut(r, j) *= &inv;
            }
            for i in 0..m.nrows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.ncols {
                        let term = &f * m.at(r, j);
                        *m.at_mut(i, j) -= term;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by fraction-preserving Gaussian elimination.
    pub fn det(&self) -> Rat {
        assert_eq!(self.nrows, self.ncols);
        let mut m = self.clone();
        let n = m.nrows;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m.at(c, c);
            let inv = m.at(c, c).clone().recip();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c) * &inv;
                for j in c..n {
                    let term = &f * m.at(c, j);
                    *m.at_mut(i, j) -= term;
                }
            }
        }
        det
    }

    /// Inverse via Gauss-Jordan; `None` for singular matrices.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = r.at(i, n + j).clone();
            }
        }
        Some(inv)
    }

    /// Basis of the right nullspace `{v : Mv = 0}`, one vector per free
    /// column, each with a 1 in its free position (deterministic form).
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rat::zero(); self.ncols];
            v[fc] = Rat::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(ri, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Monic characteristic polynomial of a square matrix, coefficients
    /// low-to-high (`p[k]` multiplies `λ^k`), via Faddeev–LeVerrier.
    pub fn charpoly(&self) -> Vec<Rat> {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = Matrix::identity(n); // M_0
        for k in 1..=n {
            m = self.mul(&m);
            let c = -(m.trace() / rat(k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                *m.at_mut(i, i) += &c;
            }
        }
        coeffs
    }
}

/// All integer roots (with multiplicity) of a monic rational polynomial whose
/// roots are expected integral; errors if deflation cannot exhaust the degree.
///
/// Coefficients are low-to-high with leading coefficient 1. Candidates are
/// the divisors of the current constant term (plus 0), so the search is
/// complete for integer roots of monic integer polynomials.
pub fn integer_roots(poly: &[Rat]) -> Result<Vec<(i64, usize)>> {
    let mut p: Vec<Rat> = poly.to_vec();
    // Strip trailing zero coefficients defensively; require monic.
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    if p.last().map(|c| !c.is_one()).unwrap_or(true) {
        return Err(Error::InvalidParameter(
            "integer_roots expects a monic polynomial".into(),
        ));
    }
    if p.iter().any(|c| !c.denom().is_one()) {
        return Err(Error::IrrationalEigenvalue(format!(
            "characteristic polynomial has non-integer coefficients: {:?}",
            p.iter()
                .map(crate::algebra::rational::rat_to_string)
                .collect::<Vec<_>>()
        )));
    }

    let mut roots: Vec<(i64, usize)> = Vec::new();
    while p.len() > 1 {
        let c0 = p[0].numer().clone();
        let root = if c0.is_zero() {
            Some(0i64)
        } else {
            divisors(&c0.abs())
                .into_iter()
                .flat_map(|d| [d, -d])
                .find(|&cand| eval_int(&p, cand).is_zero())
        };
        let Some(r) = root else {
            return Err(Error::IrrationalEigenvalue(format!(
                "no integer root for residual polynomial of degree {}",
                p.len() - 1
            )));
        };
        p = synthetic_divide(&p, r);
        match roots.iter_mut().find(|(v, _)| *v == r) {
            Some((_, mult)) => *mult += 1,
            None => roots.push((r, 1)),
        }
    }
    Ok(roots)
}

fn eval_int(p: &[Rat], x: i64) -> BigInt {
    let xb = BigInt::from(x);
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * &xb + c.numer();
    }
    acc
}

fn synthetic_divide(p: &[Rat], r: i64) -> Vec<Rat> {
    let n = p.len() - 1;
    let mut q = vec![Rat::zero(); n];
    let rb = rat(r);
    let mut carry = Rat::zero();
    for k in (0..n).rev() {
        q[k] = p[k + 1].clone() + &carry;
        carry = &q[k] * &rb;
    }
    debug_assert!((p[0].clone() + carry).is_zero(), "non-root in deflation");
    q
}

fn divisors(n: &BigInt) -> Vec<i64> {
    // Roots in this crate are bounded by the scheme sizes (< 2^20), so the
    // i64 conversion is safe for any divisor that could actually be a root;
    // larger divisors are skipped.
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            if let Ok(small) = i64::try_from(&d) {
                out.push(small);
            }
            let e = n / &d;
            if e != d {
                if let Ok(big) = i64::try_from(&e) {
                    out.push(big);
                }
            }
        }
        d += 1u32;
    }
    out.sort_unstable();
    out
}
