//! Binary block codes: containers, the Gray image of the Z4 constructions,
//! the simplex-derived [14,4,7] code, the Kerdock-like parameter test, and
//! algebraic-normal-form degrees for Reed–Muller membership checks.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::codes::words::{gray_map, BinaryWord};
use crate::codes::z4code::{merge_counts, Z4Code};
use crate::error::{Error, Result};

/// A binary block code with an explicit word list.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    length: usize,
    words: Vec<BinaryWord>,
}

impl BinaryCode {
    /// Builds a code from distinct words of a common length.
    pub fn from_words(length: usize, words: Vec<BinaryWord>) -> Result<Self> {
        for w in &words {
            if w.len() != length {
                return Err(Error::LengthMismatch {
                    left: w.len(),
                    right: length,
                });
            }
        }
        let distinct: BTreeSet<&BinaryWord> = words.iter().collect();
        if distinct.len() != words.len() {
            return Err(Error::InvalidParameter(
                "duplicate word in binary code".into(),
            ));
        }
        Ok(Self { length, words })
    }

    /// Word length.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of codewords.
    pub fn cardinality(&self) -> usize {
        self.words.len()
    }

    /// The codewords in construction order.
    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    /// Hamming weight distribution.
    pub fn weight_distribution(&self) -> BTreeMap<u32, u64> {
        let mut dist = BTreeMap::new();
        for w in &self.words {
            *dist.entry(w.weight()).or_insert(0) += 1;
        }
        dist
    }

    /// Hamming distance distribution over unordered pairs of distinct words.
    pub fn distance_distribution(&self) -> BTreeMap<u32, u64> {
        self.words
            .par_iter()
            .enumerate()
            .map(|(i, a)| {
                let mut local = BTreeMap::new();
                for b in &self.words[i + 1..] {
                    let d = (a.bits() ^ b.bits()).count_ones();
                    *local.entry(d).or_insert(0u64) += 1;
                }
                local
            })
            .reduce(BTreeMap::new, merge_counts)
    }

    /// Smallest pairwise distance, `None` for codes with fewer than two
    /// words.
    pub fn min_distance(&self) -> Option<u32> {
        self.distance_distribution().keys().next().copied()
    }

    /// Keeps words with a zero at `position`, then deletes that coordinate.
    pub fn shorten(&self, position: usize) -> Result<BinaryCode> {
        if position >= self.length {
            return Err(Error::PositionOutOfRange {
                position,
                length: self.length,
            });
        }
        let words: Vec<BinaryWord> = self
            .words
            .iter()
            .filter(|w| w.bit(position) == 0)
            .map(|w| w.delete_position(position).expect("position checked"))
            .collect();
        BinaryCode::from_words(self.length - 1, words)
    }

    /// Deletes the coordinate at `position` unconditionally, keeping one
    /// copy of each image.
    pub fn puncture(&self, position: usize) -> Result<BinaryCode> {
        if position >= self.length {
            return Err(Error::PositionOutOfRange {
                position,
                length: self.length,
            });
        }
        let set: BTreeSet<BinaryWord> = self
            .words
            .iter()
            .map(|w| w.delete_position(position).expect("position checked"))
            .collect();
        BinaryCode::from_words(self.length - 1, set.into_iter().collect())
    }

    /// Shortens at two distinct positions (order-independent).
    pub fn double_shorten(&self, pos1: usize, pos2: usize) -> Result<BinaryCode> {
        if pos1 == pos2 {
            return Err(Error::InvalidParameter(
                "double shorten requires two distinct positions".into(),
            ));
        }
        let (lo, hi) = if pos1 < pos2 { (pos1, pos2) } else { (pos2, pos1) };
        self.shorten(hi)?.shorten(lo)
    }
}

/// Digit-wise Gray image of a Z4 code: length doubles, cardinality is
/// preserved (the Gray map is injective).
pub fn gray_image(code: &Z4Code) -> Result<BinaryCode> {
    let words: Vec<BinaryWord> = code
        .words()
        .iter()
        .map(|w| gray_map(w))
        .collect::<Result<_>>()?;
    BinaryCode::from_words(2 * code.length(), words)
}

/// The binary Kerdock code of length `2^{m+1}`: the Gray image of the full
/// Z4-Kerdock code.
pub fn build_binary_kerdock(m: usize) -> Result<BinaryCode> {
    gray_image(&crate::codes::kerdock::build_full_z4_kerdock(m)?)
}

/// The [15,4,8] simplex code: generator columns run through the nonzero
/// vectors of F2^4 in increasing numeric order, so the word for message `u`
/// has bit `parity(u & (j+1))` at position `j`.
pub fn build_simplex_15_4() -> BinaryCode {
    let words: Vec<BinaryWord> = (0..16u32)
        .map(|msg| {
            let mut bits = 0u64;
            for j in 0..15 {
                let parity = (msg & (j + 1)).count_ones() & 1;
                bits |= u64::from(parity) << j;
            }
            BinaryWord::new(15, bits).expect("15 bits fit")
        })
        .collect();
    BinaryCode::from_words(15, words).expect("simplex words are distinct")
}

/// The [14,4,7] code obtained by puncturing the first coordinate of the
/// simplex code; weight distribution {0:1, 7:8, 8:7}.
pub fn build_punctured_simplex_14_4() -> BinaryCode {
    build_simplex_15_4()
        .puncture(0)
        .expect("coordinate 0 exists")
}

/// Tests the Kerdock-like parameters: length `n`, exactly `n^2` words, and
/// every nonzero pairwise distance in `{(n-√n)/2, (n+√n)/2, n/2, n}`.
///
/// `n` must be a perfect square for the distance set to make sense.
pub fn is_kerdock_like(code: &BinaryCode, n: usize) -> Result<bool> {
    let s = (n as u64).isqrt();
    if s * s != n as u64 {
        return Err(Error::InvalidParameter(format!(
            "Kerdock-like test needs a perfect-square length, got {n}"
        )));
    }
    if code.length() != n || code.cardinality() != n * n {
        return Ok(false);
    }
    // Compare doubled distances so odd n cannot sneak through rounding.
    let allowed: BTreeSet<u64> = BTreeSet::from([
        n as u64 - s,
        n as u64 + s,
        n as u64,
        2 * n as u64,
    ]);
    let ok = code
        .words()
        .par_iter()
        .enumerate()
        .all(|(i, a)| {
            code.words()[i + 1..]
                .iter()
                .all(|b| allowed.contains(&(2 * u64::from((a.bits() ^ b.bits()).count_ones()))))
        });
    Ok(ok)
}

/// Degree of the algebraic normal form of a Boolean function given by its
/// truth table (bit `i` is the value at the point with index bits `i`).
///
/// The table length must be a power of two. Constants have degree 0. The
/// degree is invariant under relabeling of the index bits, so callers need
/// not fix a variable order.
pub fn anf_degree(truth_table: &BinaryWord) -> Result<u32> {
    let len = truth_table.len();
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "truth table length {len} is not a power of two"
        )));
    }
    let k = len.trailing_zeros() as usize;
    let mut coeffs: Vec<u8> = (0..len).map(|i| truth_table.bit(i)).collect();
    // Möbius transform, one variable at a time.
    for v in 0..k {
        let stride = 1usize << v;
        for i in 0..len {
            if i & stride != 0 {
                coeffs[i] ^= coeffs[i ^ stride];
            }
        }
    }
    Ok(coeffs
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 1)
        .map(|(i, _)| i.count_ones())
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn simplex_and_its_puncturing_have_the_classical_spectra() {
        let simplex = build_simplex_15_4();
        assert_eq!(simplex.cardinality(), 16);
        assert_eq!(
            simplex.weight_distribution(),
            BTreeMap::from([(0, 1), (8, 15)])
        );

        let punctured = build_punctured_simplex_14_4();
        assert_eq!(punctured.length(), 14);
        assert_eq!(punctured.cardinality(), 16);
        assert_eq!(
            punctured.weight_distribution(),
            BTreeMap::from([(0, 1), (7, 8), (8, 7)])
        );
        assert_eq!(punctured.min_distance(), Some(7));
    }

    #[test]
    fn binary_kerdock_m3_is_a_16_256_6_code() {
        let code = build_binary_kerdock(3).unwrap();
        assert_eq!(code.length(), 16);
        assert_eq!(code.cardinality(), 256);
        assert_eq!(
            code.weight_distribution(),
            BTreeMap::from([(0, 1), (6, 112), (8, 30), (10, 112), (16, 1)])
        );
        // Full distance enumeration: distance-invariant, so counts follow
        // the weight distribution scaled by half the code size.
        assert_eq!(
            code.distance_distribution(),
            BTreeMap::from([(6, 14336), (8, 3840), (10, 14336), (16, 128)])
        );
        assert_eq!(code.min_distance(), Some(6));
        assert!(is_kerdock_like(&code, 16).unwrap());
    }

    #[test]
    fn binary_kerdock_words_are_quadratic_boolean_functions() {
        // Quadratic as functions on F2^4 once positions are addressed by
        // the underlying affine space: the Z4 coordinate contributes the
        // field element's bits (0 for the extra coordinate, the mod-2
        // reduction of ξ^j otherwise) and the Gray pair contributes one
        // more bit. The raw packing order is *not* affine, so degrees are
        // only meaningful after this relabeling.
        let ring = crate::algebra::GaloisRing::new(3).unwrap();
        let mut address = [0usize; 16];
        for p in 0..8usize {
            let xbits = if p == 0 {
                0usize
            } else {
                ring.xi_pow(p - 1)
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (usize::from(c) % 2) << i)
                    .sum()
            };
            address[2 * p] = xbits;
            address[2 * p + 1] = xbits | 8;
        }

        let code = build_binary_kerdock(3).unwrap();
        let mut by_degree: BTreeMap<u32, usize> = BTreeMap::new();
        for w in code.words() {
            let mut bits = vec![0u8; 16];
            for (pos, &addr) in address.iter().enumerate() {
                bits[addr] = w.bit(pos);
            }
            let relabeled = BinaryWord::from_bits(&bits).unwrap();
            *by_degree.entry(anf_degree(&relabeled).unwrap()).or_insert(0) += 1;
        }
        // Two constants, the 30 nonconstant affine words, and 224 words of
        // degree exactly 2 — everything inside second-order Reed–Muller.
        assert_eq!(by_degree, BTreeMap::from([(0, 2), (1, 30), (2, 224)]));
    }

    #[test]
    fn double_shortenings_are_distance_isomorphic() {
        let code = build_binary_kerdock(3).unwrap();
        let reference = code.double_shorten(0, 1).unwrap();
        assert_eq!(reference.cardinality(), 64);
        assert_eq!(reference.length(), 14);
        let reference_dist = reference.distance_distribution();
        assert_eq!(
            reference_dist.keys().copied().collect::<Vec<_>>(),
            vec![6, 8, 10]
        );
        for (a, b) in [(3, 7), (10, 15), (2, 12)] {
            let other = code.double_shorten(a, b).unwrap();
            assert_eq!(other.cardinality(), 64);
            assert_eq!(other.distance_distribution(), reference_dist);
        }
    }

    #[test]
    fn kerdock_like_test_rejects_wrong_shapes() {
        // Wrong cardinality: the repetition code.
        let repetition = BinaryCode::from_words(
            16,
            vec![
                BinaryWord::zero(16).unwrap(),
                BinaryWord::new(16, 0xffff).unwrap(),
            ],
        )
        .unwrap();
        assert!(!is_kerdock_like(&repetition, 16).unwrap());

        // Non-square length is a parameter error.
        assert!(is_kerdock_like(&repetition, 15).is_err());

        // A random 256-word code of length 16 essentially never has the
        // three-distance property.
        let mut rng = ChaCha8Rng::seed_from_u64(0xbead);
        let mut words = BTreeSet::new();
        while words.len() < 256 {
            words.insert(BinaryWord::new(16, rng.gen_range(0..1u64 << 16)).unwrap());
        }
        let random = BinaryCode::from_words(16, words.into_iter().collect()).unwrap();
        assert!(!is_kerdock_like(&random, 16).unwrap());
    }

    #[test]
    fn anf_degree_handles_small_functions() {
        // Truth table of x0 on one variable.
        assert_eq!(anf_degree(&BinaryWord::from_bits(&[0, 1]).unwrap()).unwrap(), 1);
        // Constant one.
        assert_eq!(anf_degree(&BinaryWord::from_bits(&[1, 1]).unwrap()).unwrap(), 0);
        // x0 * x1 on two variables: table [0,0,0,1].
        assert_eq!(
            anf_degree(&BinaryWord::from_bits(&[0, 0, 0, 1]).unwrap()).unwrap(),
            2
        );
        assert!(anf_degree(&BinaryWord::from_bits(&[0, 1, 1]).unwrap()).is_err());
    }
}
