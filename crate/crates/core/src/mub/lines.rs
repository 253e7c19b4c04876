//! Sign-vector line systems and their grouping into mutually unbiased
//! bases.
//!
//! A binary word `w` of length `N` stands for the unit vector with entries
//! `(-1)^{w_i}/√N`; a word and its complement give the same line. A code
//! with Kerdock-like parameters turns into `N²` such vectors (`N²/2` lines)
//! in which any two distinct non-antipodal members have inner product `0`
//! or `±1/√N` — the dichotomy that makes the line set a union of `N/2`
//! orthonormal bases, pairwise unbiased, and unbiased to the standard basis
//! for free (a sign vector and a coordinate vector always meet at `±1/√N`).

use std::collections::BTreeSet;

use crate::algebra::rational::perfect_sqrt;
use crate::codes::binary::{is_kerdock_like, BinaryCode};
use crate::codes::words::BinaryWord;
use crate::error::{Error, Result};

/// The `±1` entries of the vector a binary word stands for (before the
/// `1/√N` scaling).
pub fn sign_vector(word: &BinaryWord) -> Vec<i64> {
    (0..word.len())
        .map(|i| if word.bit(i) == 0 { 1 } else { -1 })
        .collect()
}

/// Unscaled inner product of two sign vectors: `N − 2·d(a, b)`.
#[inline]
fn sign_dot(a: &BinaryWord, b: &BinaryWord) -> i64 {
    a.len() as i64 - 2 * i64::from((a.bits() ^ b.bits()).count_ones())
}

/// A set of sign-vector lines in dimension `N`, closed under negation,
/// together with the `N` standard-basis lines that tag along implicitly
/// (every sign vector is automatically unbiased to every `e_i`).
#[derive(Clone, Debug)]
pub struct SignedLineSet {
    dim: usize,
    sign_vectors: Vec<BinaryWord>,
}

impl SignedLineSet {
    /// Builds a line set from explicit words, checking closure under
    /// complement (negation of the vector) and the inner-product dichotomy:
    /// distinct non-antipodal members must meet at `0` or `±√N` (unscaled).
    pub fn from_words(dim: usize, words: Vec<BinaryWord>) -> Result<Self> {
        let s = perfect_sqrt(dim as u64).ok_or_else(|| {
            Error::InvalidParameter(format!("line-set dimension {dim} is not a perfect square"))
        })? as i64;
        let set: BTreeSet<BinaryWord> = words.iter().copied().collect();
        if set.len() != words.len() {
            return Err(Error::InvalidParameter("duplicate sign vector".into()));
        }
        let mask = if dim == 64 { !0u64 } else { (1u64 << dim) - 1 };
        for w in &words {
            if w.len() != dim {
                return Err(Error::LengthMismatch {
                    left: w.len(),
                    right: dim,
                });
            }
            let complement = BinaryWord::new(dim, w.bits() ^ mask)?;
            if !set.contains(&complement) {
                return Err(Error::NotKerdockLike(format!(
                    "sign vector {w:?} has no antipode in the set"
                )));
            }
        }
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let d = sign_dot(a, b);
                if d != 0 && d != s && d != -s && d != -(dim as i64) {
                    return Err(Error::NotKerdockLike(format!(
                        "sign vectors {a:?} and {b:?} meet at {d}, not in {{0, ±{s}, -{dim}}}"
                    )));
                }
            }
        }
        Ok(Self {
            dim,
            sign_vectors: words,
        })
    }

    /// Ambient dimension `N`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All sign vectors, both members of every antipodal pair.
    pub fn sign_vectors(&self) -> &[BinaryWord] {
        &self.sign_vectors
    }

    /// Number of sign-vector lines (antipodal pairs).
    pub fn line_count(&self) -> usize {
        self.sign_vectors.len() / 2
    }

    /// Number of standard-basis lines, always the ambient dimension.
    pub fn standard_line_count(&self) -> usize {
        self.dim
    }

    /// One representative per line: the member whose first coordinate is
    /// `+1`, in increasing packed order.
    pub fn line_representatives(&self) -> Vec<BinaryWord> {
        let mut reps: Vec<BinaryWord> = self
            .sign_vectors
            .iter()
            .filter(|w| w.bit(0) == 0)
            .copied()
            .collect();
        reps.sort();
        reps
    }

    /// True when the set has the maximal `N²/2` lines.
    pub fn is_maximal(&self) -> bool {
        self.sign_vectors.len() == self.dim * self.dim
    }
}

/// Converts a Kerdock-like binary code into its sign-vector line system.
pub fn code_to_lines(code: &BinaryCode) -> Result<SignedLineSet> {
    if !is_kerdock_like(code, code.length())? {
        return Err(Error::NotKerdockLike(format!(
            "code of length {} with {} words does not have Kerdock-like parameters",
            code.length(),
            code.cardinality()
        )));
    }
    SignedLineSet::from_words(code.length(), code.words().to_vec())
}

/// Converts a line set back into the binary code its sign vectors spell
/// (`+1 → 0`, `-1 → 1`); inverse of [`code_to_lines`] on Kerdock-like codes.
pub fn lines_to_code(lines: &SignedLineSet) -> Result<BinaryCode> {
    BinaryCode::from_words(lines.dim(), lines.sign_vectors().to_vec())
}

/// A partition of a line set into orthonormal bases, pairwise unbiased and
/// all unbiased to the (implicit) standard basis.
#[derive(Clone, Debug)]
pub struct MubFamily {
    dim: usize,
    bases: Vec<Vec<BinaryWord>>,
}

impl MubFamily {
    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The sign-vector bases, each a list of line representatives.
    pub fn bases(&self) -> &[Vec<BinaryWord>] {
        &self.bases
    }

    /// Total number of mutually unbiased bases including the standard one.
    pub fn total_with_standard(&self) -> usize {
        self.bases.len() + 1
    }

    /// True for the maximal family: `N/2` sign-vector bases of `N` lines.
    pub fn is_maximal(&self) -> bool {
        self.bases.len() == self.dim / 2 && self.bases.iter().all(|b| b.len() == self.dim)
    }
}

/// Partitions the lines of a set into orthogonal classes and verifies the
/// classes form mutually unbiased bases.
///
/// Orthogonality between lines of a real MUB family only ever occurs inside
/// one basis, so the classes are exactly the connected components of the
/// orthogonality graph; the greedy sweep below extracts them in order of
/// their least representative, which makes the output deterministic. Any
/// violation — an overfull class, a cross-class orthogonal pair, a
/// same-class biased pair — is reported as a failure to be a MUB family.
pub fn group_into_bases(lines: &SignedLineSet) -> Result<MubFamily> {
    let n = lines.dim();
    let s = perfect_sqrt(n as u64).expect("line-set dimensions are perfect squares") as i64;
    let reps = lines.line_representatives();
    let mut bases: Vec<Vec<BinaryWord>> = Vec::new();
    'next_rep: for &rep in &reps {
        for basis in &mut bases {
            if basis.iter().all(|other| sign_dot(&rep, other) == 0) {
                if basis.len() == n {
                    return Err(Error::NotMutuallyUnbiased(format!(
                        "line {rep:?} is orthogonal to a basis that is already complete"
                    )));
                }
                basis.push(rep);
                continue 'next_rep;
            }
            // A partially orthogonal line contradicts the component
            // structure: inside a real MUB family, orthogonality to one
            // member of a basis forces orthogonality to all of them.
            if basis.iter().any(|other| sign_dot(&rep, other) == 0) {
                return Err(Error::NotMutuallyUnbiased(format!(
                    "line {rep:?} is orthogonal to part of an existing basis only"
                )));
            }
        }
        bases.push(vec![rep]);
    }
    // Cross-class pairs must be unbiased: |⟨a, b⟩| = √N unscaled.
    for (i, a) in bases.iter().enumerate() {
        for b in &bases[i + 1..] {
            for x in a {
                for y in b {
                    let d = sign_dot(x, y);
                    if d != s && d != -s {
                        return Err(Error::NotMutuallyUnbiased(format!(
                            "lines {x:?} and {y:?} from different classes meet at {d}, not ±{s}"
                        )));
                    }
                }
            }
        }
    }
    Ok(MubFamily {
        dim: n,
        bases,
    })
}
