//! Word-level primitives: Z4 words with the Lee metric, fixed-length binary
//! words with the Hamming metric, and the Gray map connecting the two.

use crate::error::{Error, Result};

/// A word over Z4, stored digit-per-byte with every digit in `{0,1,2,3}`.
pub type Z4Word = Vec<u8>;

/// Lee weight of a single Z4 digit: `min(d, 4 - d)`.
#[inline]
pub fn lee_digit(d: u8) -> u32 {
    debug_assert!(d < 4);
    u32::from(d.min(4 - d) % 4)
}

/// Lee weight of a Z4 word: the digit-wise sum of `min(d, 4 - d)`.
pub fn lee_weight(w: &[u8]) -> u32 {
    w.iter().map(|&d| lee_digit(d)).sum()
}

/// Lee distance between two Z4 words of equal length.
pub fn lee_distance(a: &[u8], b: &[u8]) -> Result<u32> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b)
        .map(|(&x, &y)| lee_digit((4 + x - y) % 4))
        .sum())
}

/// Digit-wise sum of two Z4 words.
pub fn z4_add(a: &[u8], b: &[u8]) -> Result<Z4Word> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).map(|(&x, &y)| (x + y) % 4).collect())
}

/// Digit-wise difference of two Z4 words.
pub fn z4_sub(a: &[u8], b: &[u8]) -> Result<Z4Word> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b).map(|(&x, &y)| (4 + x - y) % 4).collect())
}

/// Standard inner product of two Z4 words, reduced mod 4.
pub fn z4_dot(a: &[u8], b: &[u8]) -> Result<u8> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b)
        .fold(0u32, |acc, (&x, &y)| acc + u32::from(x) * u32::from(y)) as u8
        % 4)
}

/// A binary word of length at most 64, packed into a `u64`.
///
/// Bit `i` of `bits` is the coordinate at position `i`; bits at positions
/// `>= len` are always zero. The compact representation keeps exhaustive
/// distance enumerations over codes with thousands of words cheap.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    len: u8,
    bits: u64,
}

impl BinaryWord {
    /// Packs `bits` into a word of length `len`; bits beyond `len` must be zero.
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len > 64 {
            return Err(Error::InvalidParameter(format!(
                "binary word length {len} exceeds the supported maximum of 64"
            )));
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::InvalidParameter(format!(
                "bits {bits:#b} extend past the declared length {len}"
            )));
        }
        Ok(Self {
            len: len as u8,
            bits,
        })
    }

    /// The all-zero word of the given length.
    pub fn zero(len: usize) -> Result<Self> {
        Self::new(len, 0)
    }

    /// Builds a word from one bit per entry.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut packed = 0u64;
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::InvalidParameter(format!(
                    "entry {b} at position {i} is not a bit"
                )));
            }
            packed |= u64::from(b) << i;
        }
        Self::new(bits.len(), packed)
    }

    /// Word length in bits.
    #[inline]
    pub fn len(&self) -> usize {
        usize::from(self.len)
    }

    /// True for the (degenerate) length-zero word.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The raw packed bits.
    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The bit at `position`.
    #[inline]
    pub fn bit(&self, position: usize) -> u8 {
        debug_assert!(position < self.len());
        ((self.bits >> position) & 1) as u8
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// XOR of two words of equal length (debug-asserted).
    #[inline]
    pub fn xor(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            len: self.len,
            bits: self.bits ^ other.bits,
        }
    }

    /// Removes the coordinate at `position`, shifting later bits down.
    pub fn delete_position(&self, position: usize) -> Result<Self> {
        if position >= self.len() {
            return Err(Error::PositionOutOfRange {
                position,
                length: self.len(),
            });
        }
        let low = self.bits & ((1u64 << position) - 1);
        let high = if position + 1 < 64 {
            (self.bits >> (position + 1)) << position
        } else {
            0
        };
        Ok(Self {
            len: self.len - 1,
            bits: low | high,
        })
    }
}

impl std::fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.bit(i))?;
        }
        Ok(())
    }
}

/// Hamming distance between two binary words of equal length.
pub fn hamming_distance(a: &BinaryWord, b: &BinaryWord) -> Result<u32> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok((a.bits() ^ b.bits()).count_ones())
}

/// Per-digit bit pair of the Gray map: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
const GRAY: [(u8, u8); 4] = [(0, 0), (0, 1), (1, 1), (1, 0)];

/// Gray map from Z4 words to binary words of twice the length.
///
/// Digit `d` at position `p` becomes the bit pair `GRAY[d]` at positions
/// `2p` and `2p + 1`. The map is an isometry from the Lee metric to the
/// Hamming metric. Input length is capped at 32 so the image fits a
/// [`BinaryWord`].
pub fn gray_map(w: &[u8]) -> Result<BinaryWord> {
    if w.len() > 32 {
        return Err(Error::InvalidParameter(format!(
            "Gray image of a length-{} word does not fit in 64 bits",
            w.len()
        )));
    }
    let mut bits = 0u64;
    for (p, &d) in w.iter().enumerate() {
        debug_assert!(d < 4);
        let (b0, b1) = GRAY[usize::from(d % 4)];
        bits |= u64::from(b0) << (2 * p);
        bits |= u64::from(b1) << (2 * p + 1);
    }
    BinaryWord::new(2 * w.len(), bits)
}
