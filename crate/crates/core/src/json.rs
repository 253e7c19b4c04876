//! JSON and CSV interchange for the crate's artifact types.
//!
//! Every export here is byte-deterministic: struct fields serialize in a
//! fixed order, maps are ordered, and rationals render in the canonical
//! reduced form of [`rat_to_string`]. Two exports of equal objects are
//! byte-identical, which the command-line layer relies on for reproducible
//! artifacts.
//!
//! The stable shapes are:
//!
//! * codes — `{"alphabet": "Z4"|"F2", "length": n, "words": ["0123…", …]}`
//!   for explicit codes, or `{"alphabet": "Z4", "length": n,
//!   "generators": […]}` for codes kept as a generator span;
//! * relation partitions — `{"n": …, "d": …, "classes": [[…], …]}`;
//! * scheme parameter reports — `{"valencies": […], "P": [[…]], "Q": [[…]],
//!   "B": […], "Bstar": […], "multiplicities": […]}` with every rational as
//!   a `"num/den"` string;
//! * spherical configurations — `{"n": …, "dim": …, "gram": [["num/den",…],…],
//!   "family": "X"|"Z"|"Y"|"Custom"}`;
//! * lattices — `{"rank": …, "dim": …, "basis": [[…], …]}` with the basis in
//!   Hermite normal form;
//! * theta prefixes — `{"scale_note": …, "coeffs": {"0": 1, "4": 28, …}}`.
//!
//! Parsers exist for the shapes a pipeline consumes (codes, partitions,
//! configurations, lattices); reports (parameters, stats, theta) are
//! export-only.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{rat, rat_from_string, rat_to_i64, rat_to_string, Rat};
use crate::codes::{BinaryCode, BinaryWord, Z4Code, Z4Word};
use crate::error::{Error, Result};
use crate::lattice::{lattice_from_vectors, IntegerLattice, ThetaPrefix};
use crate::linalg::Matrix;
use crate::mub::{ConfigFamily, SphericalConfig};
use crate::schemes::{RelationPartition, SchemeParameters};

/// A code loaded from JSON: quaternary or binary, matching the `"alphabet"`
/// tag of the file it came from.
#[derive(Clone, Debug)]
pub enum CodeDocument {
    /// A code over Z4 (`"alphabet": "Z4"`).
    Z4(Z4Code),
    /// A binary code (`"alphabet": "F2"`).
    Binary(BinaryCode),
}

impl CodeDocument {
    /// The alphabet tag this document serializes under.
    pub fn alphabet(&self) -> &'static str {
        match self {
            CodeDocument::Z4(_) => "Z4",
            CodeDocument::Binary(_) => "F2",
        }
    }

    /// Block length of the underlying code.
    pub fn length(&self) -> usize {
        match self {
            CodeDocument::Z4(c) => c.length(),
            CodeDocument::Binary(c) => c.length(),
        }
    }

    /// Number of codewords in the underlying code.
    pub fn cardinality(&self) -> usize {
        match self {
            CodeDocument::Z4(c) => c.cardinality(),
            CodeDocument::Binary(c) => c.cardinality(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    alphabet: String,
    length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    words: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<String>>,
}

fn z4_word_to_digits(w: &[u8]) -> String {
    w.iter().map(|&d| char::from(b'0' + d)).collect()
}

fn z4_word_from_digits(s: &str) -> Result<Z4Word> {
    s.bytes()
        .map(|b| match b {
            b'0'..=b'3' => Ok(b - b'0'),
            _ => Err(Error::InvalidParameter(format!(
                "word {s:?} contains a character outside the Z4 digits 0-3"
            ))),
        })
        .collect()
}

fn binary_word_to_digits(w: &BinaryWord) -> String {
    (0..w.len()).map(|i| char::from(b'0' + w.bit(i))).collect()
}

fn binary_word_from_digits(s: &str) -> Result<BinaryWord> {
    let bits = s
        .bytes()
        .map(|b| match b {
            b'0' | b'1' => Ok(b - b'0'),
            _ => Err(Error::InvalidParameter(format!(
                "word {s:?} contains a character outside the binary digits 0-1"
            ))),
        })
        .collect::<Result<Vec<u8>>>()?;
    BinaryWord::from_bits(&bits)
}

/// Serializes a Z4 code. Codes built from generator rows keep the compact
/// `"generators"` form; explicit codes list every word.
pub fn z4_code_to_json(code: &Z4Code) -> Result<String> {
    let (words, generators) = if code.generators().is_empty() {
        (Some(code.words().iter().map(|w| z4_word_to_digits(w)).collect()), None)
    } else {
        (None, Some(code.generators().iter().map(|w| z4_word_to_digits(w)).collect()))
    };
    let doc = CodeJson {
        alphabet: "Z4".into(),
        length: code.length(),
        words,
        generators,
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Serializes a binary code as an explicit word list.
pub fn binary_code_to_json(code: &BinaryCode) -> Result<String> {
    let doc = CodeJson {
        alphabet: "F2".into(),
        length: code.length(),
        words: Some(code.words().iter().map(binary_word_to_digits).collect()),
        generators: None,
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Serializes either kind of code document.
pub fn code_to_json(code: &CodeDocument) -> Result<String> {
    match code {
        CodeDocument::Z4(c) => z4_code_to_json(c),
        CodeDocument::Binary(c) => binary_code_to_json(c),
    }
}

/// Parses a code document, dispatching on the `"alphabet"` tag.
///
/// Exactly one of `"words"` and `"generators"` must be present; generator
/// form is only defined over Z4. All structural checks of the code
/// constructors apply (word lengths, digit ranges, duplicate words).
pub fn code_from_json(text: &str) -> Result<CodeDocument> {
    let doc: CodeJson = serde_json::from_str(text)?;
    match (doc.alphabet.as_str(), &doc.words, &doc.generators) {
        (_, Some(_), Some(_)) => Err(Error::InvalidParameter(
            "a code document carries either \"words\" or \"generators\", not both".into(),
        )),
        (_, None, None) => Err(Error::InvalidParameter(
            "a code document needs a \"words\" or \"generators\" list".into(),
        )),
        ("Z4", Some(words), None) => {
            let words = words
                .iter()
                .map(|s| z4_word_from_digits(s))
                .collect::<Result<Vec<Z4Word>>>()?;
            Ok(CodeDocument::Z4(Z4Code::from_words(doc.length, words)?))
        }
        ("Z4", None, Some(gens)) => {
            let gens = gens
                .iter()
                .map(|s| z4_word_from_digits(s))
                .collect::<Result<Vec<Z4Word>>>()?;
            Ok(CodeDocument::Z4(Z4Code::from_generators(doc.length, gens)?))
        }
        ("F2", Some(words), None) => {
            let words = words
                .iter()
                .map(|s| {
                    let w = binary_word_from_digits(s)?;
                    if w.len() != doc.length {
                        return Err(Error::LengthMismatch {
                            left: w.len(),
                            right: doc.length,
                        });
                    }
                    Ok(w)
                })
                .collect::<Result<Vec<BinaryWord>>>()?;
            Ok(CodeDocument::Binary(BinaryCode::from_words(
                doc.length, words,
            )?))
        }
        ("F2", None, Some(_)) => Err(Error::InvalidParameter(
            "generator form is only defined for Z4 codes".into(),
        )),
        (other, _, _) => Err(Error::InvalidParameter(format!(
            "unknown alphabet {other:?}; expected \"Z4\" or \"F2\""
        ))),
    }
}

#[derive(Serialize)]
struct CodeStatsJson {
    alphabet: &'static str,
    length: usize,
    cardinality: usize,
    min_distance: Option<u32>,
    weight_distribution: BTreeMap<u32, u64>,
    distance_distribution: BTreeMap<u32, u64>,
}

/// Serializes the weight and distance statistics of a code: Lee metric over
/// Z4, Hamming metric over F2. `min_distance` is `null` for a single-word
/// code, where no pair exists to measure.
pub fn code_stats_json(code: &CodeDocument) -> Result<String> {
    let (weights, distances) = match code {
        CodeDocument::Z4(c) => (c.weight_distribution(), c.distance_distribution()),
        CodeDocument::Binary(c) => (c.weight_distribution(), c.distance_distribution()),
    };
    let stats = CodeStatsJson {
        alphabet: code.alphabet(),
        length: code.length(),
        cardinality: code.cardinality(),
        min_distance: distances.keys().find(|&&d| d > 0).copied(),
        weight_distribution: weights,
        distance_distribution: distances,
    };
    Ok(serde_json::to_string(&stats)?)
}

#[derive(Serialize, Deserialize)]
struct SchemeJson {
    n: usize,
    d: usize,
    classes: Vec<Vec<u8>>,
}

/// Serializes a relation partition as its full `n × n` class matrix.
pub fn partition_to_json(rp: &RelationPartition) -> Result<String> {
    let doc = SchemeJson {
        n: rp.n(),
        d: rp.d(),
        classes: rp.class_rows().map(<[u8]>::to_vec).collect(),
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Parses a relation partition from its class matrix, re-running all
/// structural checks (square shape, zero diagonal, symmetry, surjectivity
/// onto `0..=d`).
pub fn partition_from_json(text: &str) -> Result<RelationPartition> {
    let doc: SchemeJson = serde_json::from_str(text)?;
    if doc.n != doc.classes.len() {
        return Err(Error::InvalidParameter(format!(
            "\"n\" field says {} points but \"classes\" has {} rows",
            doc.n,
            doc.classes.len()
        )));
    }
    RelationPartition::from_class_matrix(doc.d, doc.classes)
}

fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|row| row.iter().map(rat_to_string).collect())
        .collect()
}

#[derive(Serialize)]
struct ParametersJson {
    valencies: Vec<u64>,
    #[serde(rename = "P")]
    p: Vec<Vec<String>>,
    #[serde(rename = "Q")]
    q: Vec<Vec<String>>,
    #[serde(rename = "B")]
    b: Vec<Vec<Vec<String>>>,
    #[serde(rename = "Bstar")]
    bstar: Vec<Vec<Vec<String>>>,
    multiplicities: Vec<u64>,
}

/// Serializes a full parameter report: valencies, both eigenmatrices, the
/// intersection matrices `B_i`, the dual (Krein) matrices `B*_i`, and
/// multiplicities. Rationals render as canonical `"num/den"` strings.
pub fn parameters_to_json(params: &SchemeParameters) -> Result<String> {
    let doc = ParametersJson {
        valencies: params.valencies().to_vec(),
        p: matrix_to_strings(params.p()),
        q: matrix_to_strings(params.q()),
        b: params.b().iter().map(matrix_to_strings).collect(),
        bstar: params.bstar().iter().map(matrix_to_strings).collect(),
        multiplicities: params.multiplicities().to_vec(),
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Renders a matrix as CSV: one line per row, comma-separated canonical
/// rational strings, terminated by a newline.
pub fn matrix_to_csv(m: &Matrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(rat_to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    n: usize,
    dim: usize,
    gram: Vec<Vec<String>>,
    family: String,
}

fn family_name(family: ConfigFamily) -> &'static str {
    match family {
        ConfigFamily::X => "X",
        ConfigFamily::Z => "Z",
        ConfigFamily::Y => "Y",
        ConfigFamily::Custom => "Custom",
    }
}

fn family_from_name(name: &str) -> Result<ConfigFamily> {
    match name {
        "X" => Ok(ConfigFamily::X),
        "Z" => Ok(ConfigFamily::Z),
        "Y" => Ok(ConfigFamily::Y),
        "Custom" => Ok(ConfigFamily::Custom),
        other => Err(Error::InvalidParameter(format!(
            "unknown configuration family {other:?}; expected \"X\", \"Z\", \"Y\" or \"Custom\""
        ))),
    }
}

/// Serializes a spherical configuration with its exact rational Gram matrix.
pub fn config_to_json(config: &SphericalConfig) -> Result<String> {
    let n = config.n_points();
    let gram = (0..n)
        .map(|i| (0..n).map(|j| rat_to_string(&config.gram(i, j))).collect())
        .collect();
    let doc = ConfigJson {
        n,
        dim: config.dim(),
        gram,
        family: family_name(config.family()).into(),
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Parses a spherical configuration, rebuilding the common-denominator
/// integer form and re-running the Gram checks (symmetry, unit diagonal,
/// Cauchy–Schwarz bound).
pub fn config_from_json(text: &str) -> Result<SphericalConfig> {
    let doc: ConfigJson = serde_json::from_str(text)?;
    let family = family_from_name(&doc.family)?;
    if doc.n != doc.gram.len() {
        return Err(Error::InvalidParameter(format!(
            "\"n\" field says {} points but \"gram\" has {} rows",
            doc.n,
            doc.gram.len()
        )));
    }
    let mut entries = Vec::with_capacity(doc.n * doc.n);
    for (i, row) in doc.gram.iter().enumerate() {
        if row.len() != doc.n {
            return Err(Error::InvalidParameter(format!(
                "gram row {i} has {} entries, expected {}",
                row.len(),
                doc.n
            )));
        }
        for (j, s) in row.iter().enumerate() {
            let x = rat_from_string(s).ok_or_else(|| {
                Error::InvalidParameter(format!("gram entry ({i}, {j}) = {s:?} is not a rational"))
            })?;
            entries.push(x);
        }
    }
    // Clear denominators: the common denominator becomes the configuration's
    // integer scale, and every entry must then fit machine range.
    let scale = entries
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, x| {
            num_integer::Integer::lcm(&acc, x.denom())
        });
    let scale = i64::try_from(&scale).map_err(|_| {
        Error::InvalidParameter("gram denominators overflow the machine-integer scale".into())
    })?;
    let num = entries
        .iter()
        .map(|x| {
            rat_to_i64(&(x * rat(scale))).ok_or_else(|| {
                Error::InvalidParameter("gram numerator overflows machine range".into())
            })
        })
        .collect::<Result<Vec<i64>>>()?;
    SphericalConfig::from_gram_numerators(family, doc.dim, scale, num)
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    rank: usize,
    dim: usize,
    basis: Vec<Vec<i64>>,
}

/// Serializes a lattice as its canonical (Hermite-normal-form) basis.
pub fn lattice_to_json(lattice: &IntegerLattice) -> Result<String> {
    let doc = LatticeJson {
        rank: lattice.rank(),
        dim: lattice.dim(),
        basis: lattice.basis().to_vec(),
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Parses a lattice from a spanning row list. The rows need not be in normal
/// form — the constructor canonicalizes — but the stated `rank` and `dim`
/// must match what the rows actually span.
pub fn lattice_from_json(text: &str) -> Result<IntegerLattice> {
    let doc: LatticeJson = serde_json::from_str(text)?;
    if let Some(row) = doc.basis.iter().find(|row| row.len() != doc.dim) {
        return Err(Error::InvalidParameter(format!(
            "\"dim\" field says {} but a basis row has {} entries",
            doc.dim,
            row.len()
        )));
    }
    let lattice = lattice_from_vectors(&doc.basis)?;
    if lattice.rank() != doc.rank {
        return Err(Error::InvalidParameter(format!(
            "\"rank\" field says {} but the rows span rank {}",
            doc.rank,
            lattice.rank()
        )));
    }
    Ok(lattice)
}

#[derive(Serialize)]
struct ThetaJson<'a> {
    scale_note: &'a str,
    coeffs: &'a BTreeMap<u64, u64>,
}

/// Serializes a theta prefix as a report: a human-readable note fixing the
/// norm normalization, then the coefficients keyed by squared norm.
pub fn theta_report_to_json(theta: &ThetaPrefix, scale_note: &str) -> Result<String> {
    let doc = ThetaJson {
        scale_note,
        coeffs: theta.counts(),
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Serializes just the coefficient map of a theta prefix, keys in increasing
/// norm order: `{"0":1,"4":28,…}`.
pub fn theta_coeffs_to_json(theta: &ThetaPrefix) -> Result<String> {
    Ok(serde_json::to_string(theta.counts())?)
}
