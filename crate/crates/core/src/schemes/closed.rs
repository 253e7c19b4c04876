//! Closed-form parameter tables for the three sphere-configuration families
//! attached to a Kerdock-like binary code of length N (N a power of 4,
//! N ≥ 16): the doubly-shortened family Y on N²/4 points, the singly
//! shortened family Z on N²/2 points, and the full line-set family X on
//! N² + 2N points.
//!
//! Every entry is a polynomial in N and √N evaluated exactly; assembling a
//! [`SchemeParameters`] re-validates the whole table (column sums, P·Q = nI,
//! eigenvector relations between the B_i and P and between the B_i* and Q),
//! so a transcription slip in any single entry cannot survive construction.

use crate::algebra::rational::{frac, perfect_sqrt, rat};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::schemes::parameters::SchemeParameters;

/// The three closed-form configuration families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeFamily {
    /// Doubly-shortened configuration: N²/4 points, 3 classes, self-dual.
    Y,
    /// Singly-shortened configuration: N²/2 points, 3 classes.
    Z,
    /// Full line-set configuration: N² + 2N points, 4 classes.
    X,
}

impl std::str::FromStr for SchemeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Y" | "y" => Ok(SchemeFamily::Y),
            "Z" | "z" => Ok(SchemeFamily::Z),
            "X" | "x" => Ok(SchemeFamily::X),
            other => Err(Error::InvalidParameter(format!(
                "unknown scheme family {other:?}; expected Y, Z or X"
            ))),
        }
    }
}

impl std::fmt::Display for SchemeFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SchemeFamily::Y => "Y",
            SchemeFamily::Z => "Z",
            SchemeFamily::X => "X",
        })
    }
}

/// A family tag together with its code-length parameter N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedFormFamily {
    family: SchemeFamily,
    code_length: u64,
}

impl ClosedFormFamily {
    /// Validates the parameter: N must be 2^(m+1) for odd m ≥ 3, i.e. a
    /// power of 4 that is at least 16 (so that √N is integral and the
    /// tables are nondegenerate).
    pub fn new(family: SchemeFamily, code_length: u64) -> Result<Self> {
        let sqrt_ok = perfect_sqrt(code_length).is_some();
        if code_length < 16 || !code_length.is_power_of_two() || !sqrt_ok {
            return Err(Error::InvalidParameter(format!(
                "N = {code_length} is not a power of 4 with N >= 16"
            )));
        }
        Ok(ClosedFormFamily {
            family,
            code_length,
        })
    }

    pub fn family(&self) -> SchemeFamily {
        self.family
    }

    /// The code length N.
    pub fn code_length(&self) -> u64 {
        self.code_length
    }

    /// Number of points of the configuration.
    pub fn points(&self) -> u64 {
        let n = self.code_length;
        match self.family {
            SchemeFamily::Y => n * n / 4,
            SchemeFamily::Z => n * n / 2,
            SchemeFamily::X => n * n + 2 * n,
        }
    }
}

/// Evaluates the family's symbolic tables at its N and assembles the fully
/// cross-validated parameter set.
pub fn closed_form(family: &ClosedFormFamily) -> Result<SchemeParameters> {
    let n = family.code_length as i64;
    let s = perfect_sqrt(family.code_length).expect("validated on construction") as i64;
    let (b, bstar, p, q) = match family.family {
        SchemeFamily::Y => tables_y(n, s),
        SchemeFamily::Z => tables_z(n, s),
        SchemeFamily::X => tables_x(n, s),
    };
    SchemeParameters::from_parts(family.points(), b, bstar, p, q)
}

type Tables = (Vec<Matrix>, Vec<Matrix>, Matrix, Matrix);

fn tables_y(n: i64, s: i64) -> Tables {
    let p = Matrix::from_int_rows(&[
        vec![1, (n - 2 * s) * (n - 2) / 8, (n + 2 * s) * (n - 2) / 8, n / 2 - 1],
        vec![1, -s * (n - 4) / 8, s * (n - 4) / 8, -1],
        vec![1, s / 2, -s / 2, -1],
        vec![1, -(n - 2 * s) / 4, -(n + 2 * s) / 4, n / 2 - 1],
    ]);
    let q = Matrix::from_int_rows(&[
        vec![1, n - 2, (n - 2) * (n - 4) / 4, n / 2 - 1],
        vec![1, -s - 2, s + 2, -1],
        vec![1, s - 2, -s + 2, -1],
        vec![1, -2, -n / 2 + 2, n / 2 - 1],
    ]);
    let b = vec![
        Matrix::identity(4),
        Matrix::from_int_rows(&[
            vec![0, 1, 0, 0],
            vec![
                (n - 2 * s) * (n - 2) / 8,
                (n + 2 * s) * (n - 7 * s + 12) / 16,
                (n - 2 * s) * (n - s - 4) / 16,
                (n - 2 * s) * (n - 2 * s - 4) / 16,
            ],
            vec![
                0,
                (n + 2 * s) * (n - s - 4) / 16,
                (n - 2 * s) * (n + s - 4) / 16,
                n * (n - 4) / 16,
            ],
            vec![0, (n - 2 * s - 4) / 4, (n - 2 * s) / 4, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 1, 0],
            vec![
                0,
                (n + 2 * s) * (n - s - 4) / 16,
                (n - 2 * s) * (n + s - 4) / 16,
                n * (n - 4) / 16,
            ],
            vec![
                (n + 2 * s) * (n - 2) / 8,
                (n + 2 * s) * (n + s - 4) / 16,
                (n - 2 * s) * (n + 7 * s + 12) / 16,
                (n + 2 * s) * (n + 2 * s - 4) / 16,
            ],
            vec![0, (n + 2 * s) / 4, (n + 2 * s - 4) / 4, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 0, 1],
            vec![0, (n - 2 * s - 4) / 4, (n - 2 * s) / 4, 0],
            vec![0, (n + 2 * s) / 4, (n + 2 * s - 4) / 4, 0],
            vec![n / 2 - 1, 0, 0, n / 2 - 2],
        ]),
    ];
    let bstar = vec![
        Matrix::identity(4),
        Matrix::from_int_rows(&[
            vec![0, 1, 0, 0],
            vec![n - 2, 0, 4, 2],
            vec![0, n - 4, n - 8, n - 4],
            vec![0, 1, 2, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 1, 0],
            vec![0, n - 4, n - 8, n - 4],
            vec![
                (n - 2) * (n - 4) / 4,
                (n - 4) * (n - 8) / 4,
                (n * n - 12 * n + 48) / 4,
                (n - 4) * (n - 6) / 4,
            ],
            vec![0, n / 2 - 2, n / 2 - 3, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 0, 1],
            vec![0, 1, 2, 0],
            vec![0, n / 2 - 2, n / 2 - 3, 0],
            vec![n / 2 - 1, 0, 0, n / 2 - 2],
        ]),
    ];
    (b, bstar, p, q)
}

fn tables_z(n: i64, s: i64) -> Tables {
    let p = Matrix::from_int_rows(&[
        vec![1, (n - s) * (n - 2) / 4, (n + s) * (n - 2) / 4, n - 1],
        vec![1, -s * (n - 2) / 4, s * (n - 2) / 4, -1],
        vec![1, s / 2, -s / 2, -1],
        vec![1, -(n - s) / 2, -(n + s) / 2, n - 1],
    ]);
    let q = Matrix::from_int_rows(&[
        vec![1, n - 1, (n - 2) * (n - 1) / 2, n / 2 - 1],
        vec![1, -s - 1, s + 1, -1],
        vec![1, s - 1, -s + 1, -1],
        vec![1, -1, -n / 2 + 1, n / 2 - 1],
    ]);
    let b = vec![
        Matrix::identity(4),
        Matrix::from_int_rows(&[
            vec![0, 1, 0, 0],
            vec![
                (n - s) * (n - 2) / 4,
                (n - 3 * s) * (n - 4) / 8,
                (n - s) * (n - 4) / 8,
                (n - 2 * s) * (n - 2) / 8,
            ],
            vec![
                0,
                (n + s) * (n - 4) / 8,
                (n - s) * (n - 4) / 8,
                n * (n - 2) / 8,
            ],
            vec![0, (s - 2) * (s + 1) / 2, (n - s) / 2, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 1, 0],
            vec![
                0,
                (n + s) * (n - 4) / 8,
                (n - s) * (n - 4) / 8,
                n * (n - 2) / 8,
            ],
            vec![
                (n + s) * (n - 2) / 4,
                (n + s) * (n - 4) / 8,
                (n + 3 * s) * (n - 4) / 8,
                (n + 2 * s) * (n - 2) / 8,
            ],
            vec![0, (n + s) / 2, (s - 1) * (s + 2) / 2, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 0, 1],
            vec![0, (s - 2) * (s + 1) / 2, (n - s) / 2, 0],
            vec![0, (n + s) / 2, (s - 1) * (s + 2) / 2, 0],
            vec![n - 1, 0, 0, n - 2],
        ]),
    ];
    let bstar = vec![
        Matrix::identity(4),
        Matrix::from_int_rows(&[
            vec![0, 1, 0, 0],
            vec![n - 1, 0, 2, 0],
            vec![0, n - 2, n - 4, n - 1],
            vec![0, 0, 1, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 1, 0],
            vec![0, n - 2, n - 4, n - 1],
            vec![
                (n - 2) * (n - 1) / 2,
                (n - 4) * (n - 2) / 2,
                (n * n - 6 * n + 12) / 2,
                (n - 4) * (n - 1) / 2,
            ],
            vec![0, n / 2 - 1, n / 2 - 2, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, n / 2 - 1, n / 2 - 2, 0],
            vec![n / 2 - 1, 0, 0, n / 2 - 2],
        ]),
    ];
    (b, bstar, p, q)
}

fn tables_x(n: i64, s: i64) -> Tables {
    let p = Matrix::from_int_rows(&[
        vec![1, n * n / 2, 2 * (n - 1), n * n / 2, 1],
        vec![1, n * s / 2, 0, -n * s / 2, -1],
        vec![1, 0, -2, 0, 1],
        vec![1, -s, 0, s, -1],
        vec![1, -n, 2 * (n - 1), -n, 1],
    ]);
    let q = Matrix::from_int_rows(&[
        vec![1, n, (n - 1) * (n + 2) / 2, n * n / 2, n / 2],
        vec![1, s, 0, -s, -1],
        vec![1, 0, -n / 2 - 1, 0, n / 2],
        vec![1, -s, 0, s, -1],
        vec![1, -n, (n - 1) * (n + 2) / 2, -n * n / 2, n / 2],
    ]);
    let mixed = vec![0, n - 1, 0, n - 1, 0];
    let b = vec![
        Matrix::identity(5),
        Matrix::from_int_rows(&[
            vec![0, 1, 0, 0, 0],
            vec![
                n * n / 2,
                (n + s) * (n - 2) / 4,
                n * n / 4,
                (n - s) * (n - 2) / 4,
                0,
            ],
            mixed.clone(),
            vec![
                0,
                (n - s) * (n - 2) / 4,
                n * n / 4,
                (n + s) * (n - 2) / 4,
                n * n / 2,
            ],
            vec![0, 0, 0, 1, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 1, 0, 0],
            mixed.clone(),
            vec![2 * (n - 1), 0, 2 * (n - 2), 0, 2 * (n - 1)],
            mixed.clone(),
            vec![0, 0, 1, 0, 0],
        ]),
        Matrix::from_int_rows(&[
            vec![0, 0, 0, 1, 0],
            vec![
                0,
                (n - s) * (n - 2) / 4,
                n * n / 4,
                (n + s) * (n - 2) / 4,
                n * n / 2,
            ],
            mixed.clone(),
            vec![
                n * n / 2,
                (n + s) * (n - 2) / 4,
                n * n / 4,
                (n - s) * (n - 2) / 4,
                0,
            ],
            vec![0, 1, 0, 0, 0],
        ]),
        // The antipodal class: composing with it reverses the class order.
        Matrix::from_int_rows(&[
            vec![0, 0, 0, 0, 1],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
        ]),
    ];
    let z = rat(0);
    let ri = rat;
    let bstar = vec![
        Matrix::identity(5),
        Matrix::from_rows(vec![
            vec![z.clone(), ri(1), z.clone(), z.clone(), z.clone()],
            vec![ri(n), z.clone(), frac(2 * n, n + 2), z.clone(), z.clone()],
            vec![z.clone(), ri(n - 1), z.clone(), ri(n - 1), z.clone()],
            vec![z.clone(), z.clone(), frac(n * n, n + 2), z.clone(), ri(n)],
            vec![z.clone(), z.clone(), z.clone(), ri(1), z.clone()],
        ]),
        Matrix::from_rows(vec![
            vec![z.clone(), z.clone(), ri(1), z.clone(), z.clone()],
            vec![z.clone(), ri(n - 1), z.clone(), ri(n - 1), z.clone()],
            vec![
                ri((n + 2) * (n - 1) / 2),
                z.clone(),
                ri((n + 2) * (n - 2) / 2),
                z.clone(),
                ri((n + 2) * (n - 1) / 2),
            ],
            vec![
                z.clone(),
                ri(n * (n - 1) / 2),
                z.clone(),
                ri(n * (n - 1) / 2),
                z.clone(),
            ],
            vec![z.clone(), z.clone(), ri(n / 2), z.clone(), z.clone()],
        ]),
        Matrix::from_rows(vec![
            vec![z.clone(), z.clone(), z.clone(), ri(1), z.clone()],
            vec![z.clone(), z.clone(), frac(n * n, n + 2), z.clone(), ri(n)],
            vec![
                z.clone(),
                ri(n * (n - 1) / 2),
                z.clone(),
                ri(n * (n - 1) / 2),
                z.clone(),
            ],
            vec![
                ri(n * n / 2),
                z.clone(),
                frac(n * n * n, 2 * (n + 2)),
                z.clone(),
                ri(n * (n - 2) / 2),
            ],
            vec![z.clone(), ri(n / 2), z.clone(), ri(n / 2 - 1), z.clone()],
        ]),
        Matrix::from_rows(vec![
            vec![z.clone(), z.clone(), z.clone(), z.clone(), ri(1)],
            vec![z.clone(), z.clone(), z.clone(), ri(1), z.clone()],
            vec![z.clone(), z.clone(), ri(n / 2), z.clone(), z.clone()],
            vec![z.clone(), ri(n / 2), z.clone(), ri(n / 2 - 1), z.clone()],
            vec![ri(n / 2), z.clone(), z.clone(), z.clone(), ri(n / 2 - 1)],
        ]),
    ];
    (b, bstar, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::parameters::krein;

    #[test]
    fn y16_tables_reproduce_the_published_self_dual_matrix() {
        let family = ClosedFormFamily::new(SchemeFamily::Y, 16).unwrap();
        assert_eq!(family.points(), 64);
        let params = closed_form(&family).unwrap();
        let expected = Matrix::from_int_rows(&[
            vec![1, 14, 42, 7],
            vec![1, -6, 6, -1],
            vec![1, 2, -2, -1],
            vec![1, -2, -6, 7],
        ]);
        assert_eq!(params.p(), &expected);
        assert_eq!(params.q(), &expected);
        assert_eq!(params.valencies(), &[1, 14, 42, 7]);
        assert_eq!(params.multiplicities(), &[1, 14, 42, 7]);
        assert_eq!(
            params.b()[3],
            Matrix::from_int_rows(&[
                vec![0, 0, 0, 1],
                vec![0, 1, 2, 0],
                vec![0, 6, 5, 0],
                vec![7, 0, 0, 6],
            ])
        );
        // Self-dual at N=16: the Krein matrices coincide with the
        // intersection matrices.
        assert_eq!(params.bstar(), params.b());
    }

    #[test]
    fn y64_matches_the_symbolic_entries() {
        let family = ClosedFormFamily::new(SchemeFamily::Y, 64).unwrap();
        let params = closed_form(&family).unwrap();
        assert_eq!(params.n(), 1024);
        assert_eq!(params.valencies(), &[1, 372, 620, 31]);
        assert_eq!(params.multiplicities(), &[1, 62, 930, 31]);
        // P[1][1] = −√N(N−4)/8 at N=64.
        assert_eq!(params.p().at(1, 1), &rat(-60));
    }

    #[test]
    fn z16_tables_match() {
        let family = ClosedFormFamily::new(SchemeFamily::Z, 16).unwrap();
        let params = closed_form(&family).unwrap();
        assert_eq!(params.n(), 128);
        assert_eq!(params.valencies(), &[1, 42, 70, 15]);
        assert_eq!(
            params.q().row(0).to_vec(),
            vec![rat(1), rat(15), rat(105), rat(7)]
        );
        assert_eq!(
            params.p().row(3).to_vec(),
            vec![rat(1), rat(-6), rat(-10), rat(15)]
        );
    }

    #[test]
    fn x16_tables_match() {
        let family = ClosedFormFamily::new(SchemeFamily::X, 16).unwrap();
        assert_eq!(family.points(), 288);
        let params = closed_form(&family).unwrap();
        assert_eq!(params.d(), 4);
        assert_eq!(params.valencies(), &[1, 128, 30, 128, 1]);
        assert_eq!(params.multiplicities(), &[1, 16, 135, 128, 8]);
        assert_eq!(
            params.p().row(1).to_vec(),
            vec![rat(1), rat(32), rat(0), rat(-32), rat(-1)]
        );
        // The Krein parameters of X are rational, not integral: q_11^2.
        assert_eq!(params.bstar()[1].at(1, 2), &frac(16, 9));
    }

    #[test]
    fn eigen_derivation_from_b_alone_reproduces_every_table() {
        for (family, len) in [
            (SchemeFamily::Y, 16),
            (SchemeFamily::Y, 64),
            (SchemeFamily::Z, 16),
            (SchemeFamily::Z, 64),
            (SchemeFamily::X, 16),
            (SchemeFamily::X, 64),
        ] {
            let spec = ClosedFormFamily::new(family, len).unwrap();
            let closed = closed_form(&spec).unwrap();
            let recomputed =
                SchemeParameters::from_intersection_matrices(closed.n(), closed.b().to_vec())
                    .unwrap();
            let aligned = recomputed.aligned_to(&closed).unwrap();
            assert_eq!(aligned, closed, "{family} at N={len}");
        }
    }

    #[test]
    fn krein_formula_agrees_with_the_tables() {
        for (family, len) in [(SchemeFamily::Y, 16), (SchemeFamily::X, 16)] {
            let spec = ClosedFormFamily::new(family, len).unwrap();
            let closed = closed_form(&spec).unwrap();
            let bstar = krein(closed.p(), closed.q(), closed.n()).unwrap();
            assert_eq!(&bstar[..], closed.bstar(), "{family} at N={len}");
        }
    }

    #[test]
    fn invalid_code_lengths_are_rejected() {
        for bad in [0u64, 4, 8, 15, 32, 100, 128] {
            assert!(
                ClosedFormFamily::new(SchemeFamily::Y, bad).is_err(),
                "N={bad} should be rejected"
            );
        }
        for good in [16u64, 64, 256, 1024] {
            assert!(ClosedFormFamily::new(SchemeFamily::Y, good).is_ok());
        }
    }
}
