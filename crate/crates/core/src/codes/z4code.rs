//! Container for block codes over Z4 with explicit word lists.
//!
//! Codes are immutable after construction. Generated codes keep their
//! generator rows alongside the enumerated span, because syndrome-based
//! coset work needs the rows and the enumerative checks need the words.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::codes::words::{lee_distance, lee_weight, z4_add, z4_dot, Z4Word};
use crate::error::{Error, Result};

/// A block code over Z4: a fixed length together with an explicit set of
/// words, and optionally the generator rows the set was spanned from.
#[derive(Clone, Debug)]
pub struct Z4Code {
    length: usize,
    generators: Vec<Z4Word>,
    words: Vec<Z4Word>,
}

fn check_word(length: usize, w: &[u8]) -> Result<()> {
    if w.len() != length {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: length,
        });
    }
    if let Some(&d) = w.iter().find(|&&d| d > 3) {
        return Err(Error::InvalidParameter(format!(
            "digit {d} is outside Z4"
        )));
    }
    Ok(())
}

impl Z4Code {
    /// Builds a code from an explicit word list. Words must be distinct and
    /// all of the stated length.
    pub fn from_words(length: usize, words: Vec<Z4Word>) -> Result<Self> {
        for w in &words {
            check_word(length, w)?;
        }
        let mut sorted: Vec<&Z4Word> = words.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidParameter(
                "duplicate word in explicit code".into(),
            ));
        }
        Ok(Self {
            length,
            generators: Vec::new(),
            words,
        })
    }

    /// Builds the Z4-linear span of the given generator rows by enumerating
    /// all coefficient vectors in `Z4^k`, where `k` is the number of rows.
    ///
    /// The rows are kept verbatim (they drive syndrome computations); the
    /// enumerated span is deduplicated, so the cardinality is `4^k` exactly
    /// when the rows are independent over Z4.
    pub fn from_generators(length: usize, generators: Vec<Z4Word>) -> Result<Self> {
        for g in &generators {
            check_word(length, g)?;
        }
        let k = generators.len();
        if k > 16 {
            return Err(Error::InvalidParameter(format!(
                "refusing to enumerate a span of 4^{k} words"
            )));
        }
        let mut span = std::collections::BTreeSet::new();
        for mut idx in 0..(1u64 << (2 * k)) {
            let mut word = vec![0u8; length];
            for g in &generators {
                let c = (idx & 3) as u8;
                idx >>= 2;
                if c != 0 {
                    let scaled: Z4Word = g.iter().map(|&d| (d * c) % 4).collect();
                    word = z4_add(&word, &scaled)?;
                }
            }
            span.insert(word);
        }
        Ok(Self {
            length,
            generators,
            words: span.into_iter().collect(),
        })
    }

    /// Word length.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of codewords.
    pub fn cardinality(&self) -> usize {
        self.words.len()
    }

    /// The codewords, in construction order (sorted for generated codes).
    pub fn words(&self) -> &[Z4Word] {
        &self.words
    }

    /// Generator rows, empty for explicit codes.
    pub fn generators(&self) -> &[Z4Word] {
        &self.generators
    }

    /// Membership test by binary search when sorted, linear scan otherwise.
    pub fn contains(&self, w: &[u8]) -> bool {
        self.words.iter().any(|c| c.as_slice() == w)
    }

    /// Lee weight distribution: weight -> number of codewords.
    pub fn weight_distribution(&self) -> BTreeMap<u32, u64> {
        let mut dist = BTreeMap::new();
        for w in &self.words {
            *dist.entry(lee_weight(w)).or_insert(0) += 1;
        }
        dist
    }

    /// Lee distance distribution over unordered pairs of distinct codewords.
    pub fn distance_distribution(&self) -> BTreeMap<u32, u64> {
        self.words
            .par_iter()
            .enumerate()
            .map(|(i, a)| {
                let mut local = BTreeMap::new();
                for b in &self.words[i + 1..] {
                    let d = lee_distance(a, b).expect("equal lengths by construction");
                    *local.entry(d).or_insert(0u64) += 1;
                }
                local
            })
            .reduce(BTreeMap::new, merge_counts)
    }

    /// Keeps the words that are zero at `position`, then deletes that
    /// coordinate.
    pub fn shorten(&self, position: usize) -> Result<Z4Code> {
        if position >= self.length {
            return Err(Error::PositionOutOfRange {
                position,
                length: self.length,
            });
        }
        let words: Vec<Z4Word> = self
            .words
            .iter()
            .filter(|w| w[position] == 0)
            .map(|w| delete_coord(w, position))
            .collect();
        Ok(Z4Code {
            length: self.length - 1,
            generators: Vec::new(),
            words,
        })
    }

    /// Deletes the coordinate at `position` from every word unconditionally.
    ///
    /// Distinct words may collapse; the result keeps one copy of each image.
    pub fn puncture(&self, position: usize) -> Result<Z4Code> {
        if position >= self.length {
            return Err(Error::PositionOutOfRange {
                position,
                length: self.length,
            });
        }
        let set: std::collections::BTreeSet<Z4Word> = self
            .words
            .iter()
            .map(|w| delete_coord(w, position))
            .collect();
        Ok(Z4Code {
            length: self.length - 1,
            generators: Vec::new(),
            words: set.into_iter().collect(),
        })
    }

    /// Shortens at two distinct positions (order-independent).
    pub fn double_shorten(&self, pos1: usize, pos2: usize) -> Result<Z4Code> {
        if pos1 == pos2 {
            return Err(Error::InvalidParameter(
                "double shorten requires two distinct positions".into(),
            ));
        }
        let (lo, hi) = if pos1 < pos2 { (pos1, pos2) } else { (pos2, pos1) };
        // Shorten the higher position first so the lower index stays valid.
        self.shorten(hi)?.shorten(lo)
    }

    /// Syndrome of `w` against the generator rows: the vector of inner
    /// products `<w, g_j> mod 4`, one per row.
    ///
    /// The syndrome is zero exactly when `w` lies in the Z4-dual of the
    /// span of the rows.
    pub fn syndrome(&self, w: &[u8]) -> Result<Vec<u8>> {
        if self.generators.is_empty() {
            return Err(Error::InvalidParameter(
                "syndrome requires a code built from generators".into(),
            ));
        }
        self.generators.iter().map(|g| z4_dot(w, g)).collect()
    }
}

fn delete_coord(w: &[u8], position: usize) -> Z4Word {
    let mut out = Vec::with_capacity(w.len() - 1);
    out.extend_from_slice(&w[..position]);
    out.extend_from_slice(&w[position + 1..]);
    out
}

pub(crate) fn merge_counts(
    mut a: BTreeMap<u32, u64>,
    b: BTreeMap<u32, u64>,
) -> BTreeMap<u32, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}
