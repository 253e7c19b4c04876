//! Exact spectral parameters of a commutative association scheme: first and
//! second eigenmatrices, multiplicities, and Krein parameters, all as
//! rationals with no floating point anywhere.
//!
//! The intersection matrices `B_i` (with `B_i[j][k] = p_ij^k`) of a d-class
//! scheme commute and share a basis of one-dimensional common eigenspaces.
//! Rows of the first eigenmatrix `P` are the common right eigenvectors
//! normalized to first entry 1: the row for eigenspace `u` satisfies
//! `B_i · w = P_ui · w`, so the eigenvalues of the scheme can be read off
//! column by column. Eigenvalues are extracted exactly as integer roots of
//! characteristic polynomials — every family in scope has an integral
//! spectrum, and anything else is refused rather than approximated.
//!
//! Row ordering is pinned for reproducibility: row 0 is the valency row and
//! the remaining rows are sorted by descending entry in column 1 (later
//! columns break ties). Published tables sometimes use a different row
//! order; [`SchemeParameters::aligned_to`] searches the eigenspace
//! reorderings for an exact match.

use crate::algebra::rational::{rat, rat_to_i64, rat_to_string, Rat};
use crate::error::{Error, Result};
use crate::linalg::{integer_roots, Matrix};
use num_traits::{One, Zero};

/// Complete parameter set of a verified commutative association scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeParameters {
    n: u64,
    d: usize,
    valencies: Vec<u64>,
    multiplicities: Vec<u64>,
    b: Vec<Matrix>,
    bstar: Vec<Matrix>,
    p: Matrix,
    q: Matrix,
}

impl SchemeParameters {
    /// Derives the full parameter set from the intersection matrices
    /// `B_0, …, B_d` of an n-point scheme: eigenmatrices, multiplicities and
    /// Krein parameters, with every axiom re-checked along the way.
    pub fn from_intersection_matrices(n: u64, b: Vec<Matrix>) -> Result<Self> {
        let (p, q) = eigenmatrices(&b, n)?;
        let bstar = krein(&p, &q, n)?;
        Self::from_parts(n, b, bstar, p, q)
    }

    /// Assembles and cross-validates a parameter set whose pieces were
    /// produced elsewhere (computed or transcribed from closed forms).
    ///
    /// Validation is deliberately redundant: identity matrices in slot 0,
    /// integrality and nonnegativity, column sums, `P·Q = n·I`, and the
    /// eigenvector relations `B_i · (row u of P)ᵀ = P_ui · (row u of P)ᵀ`
    /// and `B_i* · (row u of Q)ᵀ = Q_ui · (row u of Q)ᵀ`, which tie the
    /// four matrices families together entry by entry.
    pub(crate) fn from_parts(
        n: u64,
        b: Vec<Matrix>,
        bstar: Vec<Matrix>,
        p: Matrix,
        q: Matrix,
    ) -> Result<Self> {
        if b.is_empty() || b.len() != bstar.len() {
            return Err(Error::InvalidParameter(
                "intersection and Krein matrix lists must be nonempty and equal in length".into(),
            ));
        }
        let dim = b.len();
        let d = dim - 1;
        for m in b.iter().chain(bstar.iter()).chain([&p, &q]) {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::InvalidParameter(format!(
                    "parameter matrices must all be {dim}×{dim}"
                )));
            }
        }
        if b[0] != Matrix::identity(dim) || bstar[0] != Matrix::identity(dim) {
            return Err(Error::InvalidParameter(
                "B_0 and B_0* must be identity matrices".into(),
            ));
        }

        // Valencies from the top row of P; they must agree with B_i and sum
        // to n.
        let mut valencies = Vec::with_capacity(dim);
        for i in 0..dim {
            let k = rat_to_i64(p.at(0, i)).filter(|&k| k >= 1).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "valency {} in P row 0 is not a positive integer",
                    rat_to_string(p.at(0, i))
                ))
            })?;
            valencies.push(k as u64);
        }
        if valencies.iter().sum::<u64>() != n {
            return Err(Error::InvalidParameter(format!(
                "valencies {valencies:?} do not sum to {n}"
            )));
        }
        for (i, bi) in b.iter().enumerate() {
            for j in 0..dim {
                for k in 0..dim {
                    let entry = bi.at(j, k);
                    if !entry.denom().is_one() || entry < &Rat::zero() {
                        return Err(Error::InvalidParameter(format!(
                            "intersection number p_{{{i},{j}}}^{k} = {} is not a nonnegative integer",
                            rat_to_string(entry)
                        )));
                    }
                }
            }
            if bi.at(i, 0) != &rat(valencies[i] as i64) {
                return Err(Error::InvalidParameter(format!(
                    "B_{i}[{i}][0] disagrees with valency {}",
                    valencies[i]
                )));
            }
            // Column sums: Σ_j p_ij^k = k_i for every k.
            for k in 0..dim {
                let sum: Rat = (0..dim).map(|j| bi.at(j, k).clone()).sum();
                if sum != rat(valencies[i] as i64) {
                    return Err(Error::InvalidParameter(format!(
                        "column {k} of B_{i} sums to {} instead of the valency {}",
                        rat_to_string(&sum),
                        valencies[i]
                    )));
                }
            }
        }
        for (i, bi) in bstar.iter().enumerate() {
            for j in 0..dim {
                for k in 0..dim {
                    if bi.at(j, k) < &Rat::zero() {
                        return Err(Error::NegativeKrein {
                            i,
                            j,
                            k,
                            value: rat_to_string(bi.at(j, k)),
                        });
                    }
                }
            }
        }

        if p.mul(&q) != Matrix::identity(dim).scale(&rat(n as i64)) {
            return Err(Error::InvalidParameter("P·Q ≠ n·I".into()));
        }
        for u in 0..dim {
            if p.at(u, 0) != &Rat::one() {
                return Err(Error::InvalidParameter(format!(
                    "column 0 of P must be all ones; row {u} starts with {}",
                    rat_to_string(p.at(u, 0))
                )));
            }
        }

        // Multiplicities from the top row of Q.
        let mut multiplicities = Vec::with_capacity(dim);
        for j in 0..dim {
            let m = rat_to_i64(q.at(0, j)).filter(|&m| m >= 1).ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "multiplicity {} in Q row 0 is not a positive integer",
                    rat_to_string(q.at(0, j))
                ))
            })?;
            multiplicities.push(m as u64);
        }
        if multiplicities.iter().sum::<u64>() != n {
            return Err(Error::InternalInconsistency(format!(
                "multiplicities {multiplicities:?} do not sum to {n}"
            )));
        }

        // Eigenvector relations tying B to P and B* to Q.
        for u in 0..dim {
            let p_row = Matrix::from_rows(vec![p.row(u).to_vec()]).transpose();
            let q_row = Matrix::from_rows(vec![q.row(u).to_vec()]).transpose();
            for i in 0..dim {
                if b[i].mul(&p_row) != p_row.scale(p.at(u, i)) {
                    return Err(Error::InvalidParameter(format!(
                        "row {u} of P is not a B_{i} eigenvector with eigenvalue P[{u}][{i}]"
                    )));
                }
                if bstar[i].mul(&q_row) != q_row.scale(q.at(u, i)) {
                    return Err(Error::InvalidParameter(format!(
                        "row {u} of Q is not a B_{i}* eigenvector with eigenvalue Q[{u}][{i}]"
                    )));
                }
            }
        }

        Ok(SchemeParameters {
            n,
            d,
            valencies,
            multiplicities,
            b,
            bstar,
            p,
            q,
        })
    }

    /// Point count.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Class count (diagonal class excluded).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Valencies `k_0 = 1, k_1, …, k_d`.
    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    /// Multiplicities `m_0 = 1, m_1, …, m_d`.
    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Intersection matrices `B_0, …, B_d` with `B_i[j][k] = p_ij^k`.
    pub fn b(&self) -> &[Matrix] {
        &self.b
    }

    /// Krein matrices `B_0*, …, B_d*` with `B_i*[j][k] = q_ij^k`.
    pub fn bstar(&self) -> &[Matrix] {
        &self.bstar
    }

    /// First eigenmatrix; rows are eigenspaces, columns are classes.
    pub fn p(&self) -> &Matrix {
        &self.p
    }

    /// Second eigenmatrix, `Q = n·P⁻¹`.
    pub fn q(&self) -> &Matrix {
        &self.q
    }

    /// Re-derives the parameter set with the eigenspaces listed in a new
    /// order: row `r` of the new P is row `order[r]` of the old. `order`
    /// must be a permutation fixing 0 (the valency row stays on top).
    pub fn with_eigen_order(&self, order: &[usize]) -> Result<SchemeParameters> {
        let dim = self.d + 1;
        let mut seen = vec![false; dim];
        for &o in order {
            if o >= dim || seen[o] {
                return Err(Error::InvalidParameter(format!(
                    "{order:?} is not a permutation of 0..={}",
                    self.d
                )));
            }
            seen[o] = true;
        }
        if order.len() != dim || order[0] != 0 {
            return Err(Error::InvalidParameter(
                "eigenspace reorderings must fix the valency row".into(),
            ));
        }
        let p = Matrix::from_rows(order.iter().map(|&o| self.p.row(o).to_vec()).collect());
        let q = p
            .inverse()
            .ok_or_else(|| Error::InternalInconsistency("singular eigenmatrix".into()))?
            .scale(&rat(self.n as i64));
        let bstar = krein(&p, &q, self.n)?;
        SchemeParameters::from_parts(self.n, self.b.clone(), bstar, p, q)
    }

    /// Searches the eigenspace orderings for one under which `self` equals
    /// `target` exactly, returning the reordered parameters. Intersection
    /// numbers must already agree — those are class-indexed and have no
    /// ordering freedom.
    pub fn aligned_to(&self, target: &SchemeParameters) -> Result<SchemeParameters> {
        if self.n != target.n || self.d != target.d {
            return Err(Error::ClosedFormMismatch(format!(
                "{} points / {} classes vs {} / {}",
                self.n, self.d, target.n, target.d
            )));
        }
        if self.b != target.b {
            return Err(Error::ClosedFormMismatch(
                self.difference_report(target)
                    .unwrap_or_else(|| "intersection matrices differ".into()),
            ));
        }
        for tail in permutations(self.d) {
            let mut order = Vec::with_capacity(self.d + 1);
            order.push(0);
            order.extend(tail.iter().map(|&t| t + 1));
            let candidate = self.with_eigen_order(&order)?;
            if candidate == *target {
                return Ok(candidate);
            }
        }
        let mut own: Vec<u64> = self.multiplicities.clone();
        let mut other: Vec<u64> = target.multiplicities.clone();
        own.sort_unstable();
        other.sort_unstable();
        Err(Error::ClosedFormMismatch(if own != other {
            format!("multiplicity sets differ: {own:?} vs {other:?}")
        } else {
            "no eigenspace ordering reproduces the target eigenmatrices".into()
        }))
    }

    /// The formal dual: intersection and Krein matrices trade places, as do
    /// P and Q. Defined only when every Krein parameter is an integer.
    pub fn formal_dual(&self) -> Result<SchemeParameters> {
        for (i, m) in self.bstar.iter().enumerate() {
            for j in 0..=self.d {
                for k in 0..=self.d {
                    if !m.at(j, k).denom().is_one() {
                        return Err(Error::InvalidParameter(format!(
                            "Krein parameter q_{{{i},{j}}}^{k} = {} is not integral; no formal dual",
                            rat_to_string(m.at(j, k))
                        )));
                    }
                }
            }
        }
        SchemeParameters::from_parts(
            self.n,
            self.bstar.clone(),
            self.b.clone(),
            self.q.clone(),
            self.p.clone(),
        )
    }

    /// Human-readable description of the first difference from `other`, or
    /// `None` if the parameter sets are identical. Used for diff reports
    /// when a computed scheme is compared against a closed form.
    pub fn difference_report(&self, other: &SchemeParameters) -> Option<String> {
        if self.n != other.n {
            return Some(format!("point counts differ: {} vs {}", self.n, other.n));
        }
        if self.d != other.d {
            return Some(format!("class counts differ: {} vs {}", self.d, other.d));
        }
        if self.valencies != other.valencies {
            return Some(format!(
                "valencies differ: {:?} vs {:?}",
                self.valencies, other.valencies
            ));
        }
        for i in 0..=self.d {
            if let Some(msg) = first_matrix_diff(&self.b[i], &other.b[i], &format!("B_{i}")) {
                return Some(msg);
            }
        }
        if let Some(msg) = first_matrix_diff(&self.p, &other.p, "P") {
            return Some(msg);
        }
        if let Some(msg) = first_matrix_diff(&self.q, &other.q, "Q") {
            return Some(msg);
        }
        if self.multiplicities != other.multiplicities {
            return Some(format!(
                "multiplicities differ: {:?} vs {:?}",
                self.multiplicities, other.multiplicities
            ));
        }
        for i in 0..=self.d {
            if let Some(msg) = first_matrix_diff(&self.bstar[i], &other.bstar[i], &format!("B_{i}*"))
            {
                return Some(msg);
            }
        }
        None
    }
}

fn first_matrix_diff(a: &Matrix, b: &Matrix, name: &str) -> Option<String> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return Some(format!(
            "{name} shapes differ: {}×{} vs {}×{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        ));
    }
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if a.at(i, j) != b.at(i, j) {
                return Some(format!(
                    "{name}[{i}][{j}] differs: {} vs {}",
                    rat_to_string(a.at(i, j)),
                    rat_to_string(b.at(i, j))
                ));
            }
        }
    }
    None
}

/// All permutations of `0..k` in lexicographic order.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    heap_permute(&mut items, 0, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == items.len() {
        out.push(items.clone());
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        heap_permute(items, at + 1, out);
        items.swap(at, i);
    }
}

/// Computes the first and second eigenmatrices of commuting intersection
/// matrices `B_0 = I, B_1, …, B_d` (d ≤ 5) on `n` points.
///
/// The common eigenspaces are found by refining eigenspace intersections:
/// starting from the eigenspaces of `B_1`, each further matrix splits every
/// subspace of dimension > 1 by its integer eigenvalues. For a commutative
/// semisimple algebra the refinement terminates in d+1 one-dimensional
/// spaces; anything else (irrational eigenvalues, non-diagonalizable input)
/// is reported, not papered over.
pub fn eigenmatrices(b: &[Matrix], n: u64) -> Result<(Matrix, Matrix)> {
    let dim = b.len();
    if dim == 0 || dim > 6 {
        return Err(Error::InvalidParameter(format!(
            "expected 1 to 6 intersection matrices, got {dim}"
        )));
    }
    for (i, m) in b.iter().enumerate() {
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::InvalidParameter(format!(
                "B_{i} must be {dim}×{dim}"
            )));
        }
    }
    if b[0] != Matrix::identity(dim) {
        return Err(Error::InvalidParameter("B_0 must be the identity".into()));
    }
    for i in 1..dim {
        for j in (i + 1)..dim {
            if b[i].mul(&b[j]) != b[j].mul(&b[i]) {
                return Err(Error::NonCommuting { i, j });
            }
        }
    }

    // Subspaces are represented by stacked constraint rows; the subspace is
    // the nullspace of its stack. Seeded as the whole space (no constraints).
    let mut spaces: Vec<(Vec<Vec<Rat>>, usize)> = vec![(Vec::new(), dim)];
    for bt in b.iter().skip(1) {
        if spaces.iter().all(|(_, sdim)| *sdim == 1) {
            break;
        }
        let roots = integer_roots(&bt.charpoly())?;
        let mut next: Vec<(Vec<Vec<Rat>>, usize)> = Vec::new();
        for (constraints, sdim) in &spaces {
            if *sdim == 1 {
                next.push((constraints.clone(), 1));
                continue;
            }
            let mut split_total = 0;
            for &(lambda, _) in &roots {
                let shifted = bt.add(&Matrix::identity(dim).scale(&rat(-lambda)));
                let mut stacked = constraints.clone();
                stacked.extend(shifted.rows().map(|r| r.to_vec()));
                let nullity = dim - Matrix::from_rows(stacked.clone()).rank();
                if nullity > 0 {
                    split_total += nullity;
                    next.push((stacked, nullity));
                }
            }
            if split_total != *sdim {
                return Err(Error::InternalInconsistency(format!(
                    "eigenspace refinement lost dimensions ({split_total} of {sdim}); \
                     the intersection matrices are not simultaneously diagonalizable"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != dim {
        return Err(Error::InternalInconsistency(format!(
            "{} common eigenspaces for {dim} classes; a common eigenspace has dimension > 1",
            spaces.len()
        )));
    }

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(dim);
    for (constraints, _) in &spaces {
        let v = if constraints.is_empty() {
            vec![Rat::one()] // dim == 1: the whole space, d = 0
        } else {
            Matrix::from_rows(constraints.clone())
                .nullspace()
                .into_iter()
                .next()
                .ok_or_else(|| {
                    Error::InternalInconsistency("refined eigenspace came back empty".into())
                })?
        };
        if v[0].is_zero() {
            return Err(Error::InternalInconsistency(
                "common eigenvector with vanishing class-0 coordinate".into(),
            ));
        }
        let inv = v[0].clone();
        rows.push(v.into_iter().map(|c| c / &inv).collect());
    }

    // Row 0 is the valency row (1, k_1, …, k_d); the rest sort by descending
    // column 1, later columns breaking ties.
    let valency_row: Vec<Rat> = (0..dim).map(|i| b[i].at(i, 0).clone()).collect();
    let pos = rows.iter().position(|r| *r == valency_row).ok_or_else(|| {
        Error::InternalInconsistency(
            "no common eigenvector matches the valency vector (1, k_1, …, k_d)".into(),
        )
    })?;
    let top = rows.remove(pos);
    rows.sort_by(|a, b| {
        for c in 1..dim {
            match b[c].cmp(&a[c]) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    });
    rows.insert(0, top);

    let p = Matrix::from_rows(rows);
    let q = p
        .inverse()
        .ok_or_else(|| {
            Error::InternalInconsistency("eigenmatrix P is singular".into())
        })?
        .scale(&rat(n as i64));
    Ok((p, q))
}

/// Krein parameters from the eigenmatrices:
/// `q_ij^k = (m_i · m_j / n) · Σ_l P_il · P_jl · P_kl / k_l²`,
/// packaged as matrices `B_i*[j][k] = q_ij^k`. Every parameter must be
/// nonnegative; a negative one is a validity failure of the input scheme.
pub fn krein(p: &Matrix, q: &Matrix, n: u64) -> Result<Vec<Matrix>> {
    let dim = p.nrows();
    if p.ncols() != dim || q.nrows() != dim || q.ncols() != dim {
        return Err(Error::InvalidParameter(
            "P and Q must be square and of equal size".into(),
        ));
    }
    let nr = rat(n as i64);
    if p.mul(q) != Matrix::identity(dim).scale(&nr) {
        return Err(Error::InvalidParameter("P·Q ≠ n·I".into()));
    }
    // Valencies from P row 0, multiplicities from Q row 0.
    let k: Vec<Rat> = (0..dim).map(|l| p.at(0, l).clone()).collect();
    let m: Vec<Rat> = (0..dim).map(|j| q.at(0, j).clone()).collect();
    let mut bstar = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut rows = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for kk in 0..dim {
                let mut sum = Rat::zero();
                for (l, kl) in k.iter().enumerate() {
                    sum += p.at(i, l) * p.at(j, l) * p.at(kk, l) / (kl * kl);
                }
                let value = &m[i] * &m[j] * sum / &nr;
                if value < Rat::zero() {
                    return Err(Error::NegativeKrein {
                        i,
                        j,
                        k: kk,
                        value: rat_to_string(&value),
                    });
                }
                row.push(value);
            }
            rows.push(row);
        }
        bstar.push(Matrix::from_rows(rows));
    }
    Ok(bstar)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The intersection matrices of the 3-class scheme on the 64 shortened
    /// Kerdock words at m=3 (q=8, binary image length 14), as integers.
    fn kerdock_m3_b() -> Vec<Matrix> {
        vec![
            Matrix::identity(4),
            Matrix::from_int_rows(&[
                vec![0, 1, 0, 0],
                vec![14, 0, 4, 2],
                vec![0, 12, 8, 12],
                vec![0, 1, 2, 0],
            ]),
            Matrix::from_int_rows(&[
                vec![0, 0, 1, 0],
                vec![0, 12, 8, 12],
                vec![42, 24, 28, 30],
                vec![0, 6, 5, 0],
            ]),
            Matrix::from_int_rows(&[
                vec![0, 0, 0, 1],
                vec![0, 1, 2, 0],
                vec![0, 6, 5, 0],
                vec![7, 0, 0, 6],
            ]),
        ]
    }

    #[test]
    fn complete_scheme_has_the_textbook_eigenmatrices() {
        for n in [2u64, 5, 9] {
            let b = vec![
                Matrix::identity(2),
                Matrix::from_int_rows(&[vec![0, 1], vec![n as i64 - 1, n as i64 - 2]]),
            ];
            let (p, q) = eigenmatrices(&b, n).unwrap();
            assert_eq!(
                p,
                Matrix::from_int_rows(&[vec![1, n as i64 - 1], vec![1, -1]])
            );
            assert_eq!(p, q);
            let bstar = krein(&p, &q, n).unwrap();
            assert_eq!(
                bstar[1],
                Matrix::from_int_rows(&[vec![0, 1], vec![n as i64 - 1, n as i64 - 2]])
            );
        }
    }

    #[test]
    fn kerdock_m3_eigenmatrices_in_native_order() {
        let b = kerdock_m3_b();
        let (p, q) = eigenmatrices(&b, 64).unwrap();
        assert_eq!(
            p,
            Matrix::from_int_rows(&[
                vec![1, 14, 42, 7],
                vec![1, 2, -2, -1],
                vec![1, -2, -6, 7],
                vec![1, -6, 6, -1],
            ])
        );
        // Multiplicities travel with the eigenspaces: native row order puts
        // them as (1, 42, 7, 14).
        assert_eq!(q.row(0).to_vec(), vec![rat(1), rat(42), rat(7), rat(14)]);
    }

    #[test]
    fn kerdock_m3_is_self_dual_in_the_published_order() {
        let params = SchemeParameters::from_intersection_matrices(64, kerdock_m3_b()).unwrap();
        assert_eq!(params.valencies(), &[1, 14, 42, 7]);
        assert_eq!(params.multiplicities(), &[1, 42, 7, 14]);
        // Reorder eigenspaces to the published sequence; there P = Q.
        let published = params.with_eigen_order(&[0, 3, 1, 2]).unwrap();
        let expected_p = Matrix::from_int_rows(&[
            vec![1, 14, 42, 7],
            vec![1, -6, 6, -1],
            vec![1, 2, -2, -1],
            vec![1, -2, -6, 7],
        ]);
        assert_eq!(published.p(), &expected_p);
        assert_eq!(published.q(), &expected_p);
        assert_eq!(published.multiplicities(), &[1, 14, 42, 7]);
        // Krein matrices in that order: B_1* rows include (14, 0, 4, 2) and
        // B_3* ends with (7, 0, 0, 6).
        assert_eq!(
            published.bstar()[1],
            Matrix::from_int_rows(&[
                vec![0, 1, 0, 0],
                vec![14, 0, 4, 2],
                vec![0, 12, 8, 12],
                vec![0, 1, 2, 0],
            ])
        );
        assert_eq!(
            published.bstar()[3].row(3).to_vec(),
            vec![rat(7), rat(0), rat(0), rat(6)]
        );
        // Self-dual: swapping B ↔ B* and P ↔ Q reproduces the same scheme.
        let dual = published.formal_dual().unwrap();
        assert_eq!(&dual, &published);
    }

    #[test]
    fn column_orthogonality_holds_exactly() {
        let params = SchemeParameters::from_intersection_matrices(64, kerdock_m3_b()).unwrap();
        let p = params.p();
        for j in 0..=params.d() {
            for l in 0..=params.d() {
                let sum: Rat = (0..=params.d())
                    .map(|i| p.at(j, i) * p.at(l, i) / rat(params.valencies()[i] as i64))
                    .sum();
                let expected = if j == l {
                    rat(64) / rat(params.multiplicities()[j] as i64)
                } else {
                    Rat::zero()
                };
                assert_eq!(sum, expected, "orthogonality failed at ({j}, {l})");
            }
        }
    }

    #[test]
    fn alignment_finds_the_published_order() {
        let params = SchemeParameters::from_intersection_matrices(64, kerdock_m3_b()).unwrap();
        let published = params.with_eigen_order(&[0, 3, 1, 2]).unwrap();
        let aligned = params.aligned_to(&published).unwrap();
        assert_eq!(aligned, published);
        // A scheme of a different size can never align.
        let small = SchemeParameters::from_intersection_matrices(
            4,
            vec![
                Matrix::identity(2),
                Matrix::from_int_rows(&[vec![0, 1], vec![3, 2]]),
            ],
        )
        .unwrap();
        assert!(matches!(
            params.aligned_to(&small),
            Err(Error::ClosedFormMismatch(_))
        ));
    }

    #[test]
    fn noncommuting_matrices_are_rejected() {
        let b = vec![
            Matrix::identity(3),
            Matrix::from_int_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]),
            Matrix::from_int_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]),
        ];
        assert!(matches!(
            eigenmatrices(&b, 9),
            Err(Error::NonCommuting { i: 1, j: 2 })
        ));
    }

    #[test]
    fn irrational_spectra_are_refused() {
        let b = vec![
            Matrix::identity(2),
            Matrix::from_int_rows(&[vec![0, 1], vec![2, 0]]),
        ];
        assert!(matches!(
            eigenmatrices(&b, 3),
            Err(Error::IrrationalEigenvalue(_))
        ));
    }

    #[test]
    fn krein_rejects_mismatched_eigenmatrices() {
        let p = Matrix::from_int_rows(&[vec![1, 3], vec![1, -1]]);
        let q_wrong = Matrix::from_int_rows(&[vec![1, 3], vec![1, -2]]);
        assert!(matches!(
            krein(&p, &q_wrong, 4),
            Err(Error::InvalidParameter(_))
        ));
    }
}
