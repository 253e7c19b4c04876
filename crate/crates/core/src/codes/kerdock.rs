//! Z4-linear Kerdock codes via the Galois-ring trace, together with the
//! coset structure of their duals.
//!
//! The shortened code of length `q - 1` (odd `m`, `q = 2^m`) consists of the
//! trace words `(Tr(γ ξ^0), …, Tr(γ ξ^{q-2}))` over all `γ` in GR(4, m). Its
//! Z4-dual is the punctured Preparata code; the `4^m` cosets of that dual in
//! the ambient space carry canonical low-weight representatives in four
//! shapes (zero, signed units, differences of two units, doubled units),
//! which this module enumerates and classifies by syndrome.

use std::collections::HashMap;

use crate::algebra::GaloisRing;
use crate::codes::words::Z4Word;
use crate::codes::z4code::Z4Code;
use crate::error::{Error, Result};

/// Builds the shortened Z4-Kerdock code of length `2^m - 1`.
///
/// Generator rows are the traces of `ξ^{i+j}` for row `i < m`, so the span
/// over Z4 is exactly the set of trace words of all `4^m` ring elements.
pub fn build_shortened_kerdock(m: usize) -> Result<Z4Code> {
    let ring = GaloisRing::new(m)?;
    let q = ring.q();
    let generators: Vec<Z4Word> = (0..m)
        .map(|i| (0..q - 1).map(|j| ring.trace(ring.xi_pow(i + j))).collect())
        .collect();
    let code = Z4Code::from_generators(q - 1, generators)?;
    if code.cardinality() != 1usize << (2 * m) {
        return Err(Error::InternalInconsistency(format!(
            "trace rows spanned {} words instead of 4^{m}",
            code.cardinality()
        )));
    }
    Ok(code)
}

/// Builds the full Z4-Kerdock code of length `2^m`.
///
/// Coordinates are indexed by `0, ξ^0, …, ξ^{q-2}` in that order; words are
/// `(Tr(γ x) + ε)_x` over all ring elements `γ` and constants `ε` in Z4, so
/// the code has `4^{m+1}` words and contains the all-ones word. Shortening
/// at coordinate 0 recovers [`build_shortened_kerdock`] exactly (the words
/// vanishing there are those with `ε = 0`).
pub fn build_full_z4_kerdock(m: usize) -> Result<Z4Code> {
    let ring = GaloisRing::new(m)?;
    let q = ring.q();
    let mut generators: Vec<Z4Word> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(q);
            row.push(0); // the trace of γ · 0 vanishes at the 0 coordinate
            row.extend((0..q - 1).map(|j| ring.trace(ring.xi_pow(i + j))));
            row
        })
        .collect();
    generators.push(vec![1; q]);
    let code = Z4Code::from_generators(q, generators)?;
    if code.cardinality() != 1usize << (2 * (m + 1)) {
        return Err(Error::InternalInconsistency(format!(
            "trace and constant rows spanned {} words instead of 4^{}",
            code.cardinality(),
            m + 1
        )));
    }
    Ok(code)
}

/// Syndrome of an ambient word against the Kerdock generator rows.
///
/// The syndrome is the length-`m` vector of Z4 inner products with the rows;
/// it vanishes exactly on the Z4-dual of the Kerdock code (the punctured
/// Preparata code), and induces a bijection from dual cosets onto `Z4^m`.
pub fn preparata_syndrome(w: &[u8], kerdock: &Z4Code) -> Result<Vec<u8>> {
    kerdock.syndrome(w)
}

/// Shape tag for a dual coset's canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CosetTag {
    /// The dual code itself; representative 0.
    Zero,
    /// Representative `±e_i`: one digit equal to 1 or 3.
    SignedUnit,
    /// Representative `e_i - e_j` for distinct `i, j`: a 1 and a 3 on
    /// distinct coordinates.
    UnitDifference,
    /// Representative `2 e_i`: a single digit equal to 2.
    DoubledUnit,
}

impl CosetTag {
    /// Class index 0..=3, matching the relation order of the coset scheme.
    pub fn index(self) -> usize {
        match self {
            CosetTag::Zero => 0,
            CosetTag::SignedUnit => 1,
            CosetTag::UnitDifference => 2,
            CosetTag::DoubledUnit => 3,
        }
    }

    /// Inverse of [`CosetTag::index`].
    pub fn from_index(index: usize) -> Result<Self> {
        match index {
            0 => Ok(CosetTag::Zero),
            1 => Ok(CosetTag::SignedUnit),
            2 => Ok(CosetTag::UnitDifference),
            3 => Ok(CosetTag::DoubledUnit),
            _ => Err(Error::InvalidParameter(format!(
                "coset class index {index} out of range 0..=3"
            ))),
        }
    }
}

impl std::fmt::Display for CosetTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            CosetTag::Zero => "zero",
            CosetTag::SignedUnit => "signed-unit",
            CosetTag::UnitDifference => "unit-difference",
            CosetTag::DoubledUnit => "doubled-unit",
        };
        f.write_str(name)
    }
}

/// A classified dual coset: its shape tag and the canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClass {
    pub tag: CosetTag,
    pub representative: Z4Word,
}

/// All `2n` signed unit vectors `±e_i` of length `n`.
pub fn signed_unit_representatives(n: usize) -> Vec<Z4Word> {
    let mut reps = Vec::with_capacity(2 * n);
    for i in 0..n {
        for digit in [1u8, 3] {
            let mut w = vec![0u8; n];
            w[i] = digit;
            reps.push(w);
        }
    }
    reps
}

/// All `n(n-1)` differences `e_i - e_j` of distinct unit vectors.
pub fn unit_difference_representatives(n: usize) -> Vec<Z4Word> {
    let mut reps = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut w = vec![0u8; n];
            w[i] = 1;
            w[j] = 3;
            reps.push(w);
        }
    }
    reps
}

/// Alternative enumeration of the same classes: `±(e_i + e_j)` for `i < j`,
/// both signs — again `n(n-1)` words.
pub fn pair_sum_representatives(n: usize) -> Vec<Z4Word> {
    let mut reps = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in i + 1..n {
            for digit in [1u8, 3] {
                let mut w = vec![0u8; n];
                w[i] = digit;
                w[j] = digit;
                reps.push(w);
            }
        }
    }
    reps
}

/// Alternative enumeration: `2 e_i + e_j` for distinct `i, j` — `n(n-1)`
/// words.
pub fn two_one_representatives(n: usize) -> Vec<Z4Word> {
    let mut reps = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut w = vec![0u8; n];
            w[i] = 2;
            w[j] = 1;
            reps.push(w);
        }
    }
    reps
}

/// All `n` doubled unit vectors `2 e_i`.
pub fn doubled_unit_representatives(n: usize) -> Vec<Z4Word> {
    (0..n)
        .map(|i| {
            let mut w = vec![0u8; n];
            w[i] = 2;
            w
        })
        .collect()
}

/// The canonical representative family for all `(n+1)^2` dual cosets, in a
/// fixed order: zero, signed units, unit differences, doubled units.
pub fn canonical_coset_representatives(n: usize) -> Vec<CosetClass> {
    let mut reps = Vec::with_capacity((n + 1) * (n + 1));
    reps.push(CosetClass {
        tag: CosetTag::Zero,
        representative: vec![0u8; n],
    });
    reps.extend(signed_unit_representatives(n).into_iter().map(|w| CosetClass {
        tag: CosetTag::SignedUnit,
        representative: w,
    }));
    reps.extend(
        unit_difference_representatives(n)
            .into_iter()
            .map(|w| CosetClass {
                tag: CosetTag::UnitDifference,
                representative: w,
            }),
    );
    reps.extend(
        doubled_unit_representatives(n)
            .into_iter()
            .map(|w| CosetClass {
                tag: CosetTag::DoubledUnit,
                representative: w,
            }),
    );
    reps
}

/// Classifies ambient words into dual cosets by syndrome lookup.
///
/// Construction enumerates the canonical representative family, computes
/// each syndrome against the Kerdock generator rows, and requires the
/// `(n+1)^2 = 4^m` syndromes to be pairwise distinct — which makes the
/// lookup total over `Z4^m`. A collision would falsify the representative
/// family and reports as an internal inconsistency.
pub struct CosetClassifier {
    generators: Vec<Z4Word>,
    length: usize,
    table: HashMap<Vec<u8>, CosetClass>,
}

impl CosetClassifier {
    /// Builds the syndrome table for the dual cosets of `kerdock`.
    pub fn new(kerdock: &Z4Code) -> Result<Self> {
        if kerdock.generators().is_empty() {
            return Err(Error::InvalidParameter(
                "coset classification requires a generator-built Kerdock code".into(),
            ));
        }
        let n = kerdock.length();
        let m = kerdock.generators().len();
        let mut table = HashMap::with_capacity((n + 1) * (n + 1));
        for class in canonical_coset_representatives(n) {
            let syndrome = kerdock.syndrome(&class.representative)?;
            if let Some(previous) = table.insert(syndrome.clone(), class) {
                return Err(Error::InternalInconsistency(format!(
                    "representatives {:?} and {:?} share syndrome {:?}",
                    previous.representative,
                    table[&syndrome].representative,
                    syndrome
                )));
            }
        }
        if table.len() != 1usize << (2 * m) {
            return Err(Error::InternalInconsistency(format!(
                "{} distinct syndromes, expected 4^{m}",
                table.len()
            )));
        }
        Ok(Self {
            generators: kerdock.generators().to_vec(),
            length: n,
            table,
        })
    }

    /// Ambient word length.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Classifies `w` by the shape of its coset's canonical representative.
    pub fn classify(&self, w: &[u8]) -> Result<&CosetClass> {
        let syndrome: Vec<u8> = self
            .generators
            .iter()
            .map(|g| crate::codes::words::z4_dot(w, g))
            .collect::<Result<_>>()?;
        self.classify_syndrome(&syndrome)
    }

    /// Classifies a coset directly by its syndrome, skipping the inner
    /// products. Useful when syndromes are already in hand (e.g. when
    /// relating two cosets by their syndrome difference).
    pub fn classify_syndrome(&self, syndrome: &[u8]) -> Result<&CosetClass> {
        self.table.get(syndrome).ok_or_else(|| {
            Error::InternalInconsistency(format!(
                "syndrome {syndrome:?} matched no canonical representative"
            ))
        })
    }

    /// Number of cosets carrying each tag, indexed by [`CosetTag::index`].
    pub fn class_sizes(&self) -> [usize; 4] {
        let mut sizes = [0usize; 4];
        for class in self.table.values() {
            sizes[class.tag.index()] += 1;
        }
        sizes
    }
}

/// Evaluates the Z4-valued quadratic form `T_R(v) = v̂ R v̂ᵀ mod 4`, where
/// `R` is a symmetric 0/1 matrix and `v̂` is the 0/1 lift of the bit vector
/// `v` into Z4 coordinates.
pub fn t_r_eval(r: &[Vec<u8>], v: &[u8]) -> Result<u8> {
    let m = r.len();
    for (i, row) in r.iter().enumerate() {
        if row.len() != m {
            return Err(Error::LengthMismatch {
                left: row.len(),
                right: m,
            });
        }
        for (j, &entry) in row.iter().enumerate() {
            if entry > 1 {
                return Err(Error::InvalidParameter(format!(
                    "matrix entry {entry} at ({i}, {j}) is not a bit"
                )));
            }
            if r[j][i] != entry {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    if v.len() != m {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: m,
        });
    }
    if let Some(&b) = v.iter().find(|&&b| b > 1) {
        return Err(Error::InvalidParameter(format!("vector entry {b} is not a bit")));
    }
    let mut total = 0u32;
    for i in 0..m {
        if v[i] == 0 {
            continue;
        }
        total += u32::from(r[i][i]);
        for j in i + 1..m {
            if v[j] == 1 {
                total += 2 * u32::from(r[i][j]);
            }
        }
    }
    Ok((total % 4) as u8)
}

/// Checks the quadratic-form identity
/// `T_R(u ⊕ v) = T_R(u) + T_R(v) + 2 û R v̂ᵀ (mod 4)` for one pair.
pub fn t_r_identity_holds(r: &[Vec<u8>], u: &[u8], v: &[u8]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let xor: Vec<u8> = u.iter().zip(v).map(|(&a, &b)| a ^ b).collect();
    let lhs = t_r_eval(r, &xor)?;
    let mut cross = 0u32;
    for i in 0..u.len() {
        if u[i] == 0 {
            continue;
        }
        for j in 0..v.len() {
            if v[j] == 1 {
                cross += u32::from(r[i][j]);
            }
        }
    }
    let rhs = (u32::from(t_r_eval(r, u)?) + u32::from(t_r_eval(r, v)?) + 2 * cross) % 4;
    Ok(u32::from(lhs) == rhs)
}
