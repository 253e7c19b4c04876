//! Finite unit-vector configurations on spheres, with exact Gram matrices.
//!
//! The full configuration X lives on the unit sphere in dimension `N`: the
//! `N²` sign vectors of a maximal line set together with the `2N` signed
//! standard-basis vectors. Any two distinct members meet at a cosine in
//! `{±1/√N, 0, -1}`. Fixing one standard-basis vector `e_a` and keeping the
//! points at cosine `+1/√N` from it, then projecting to the hyperplane
//! orthogonal to `e_a` and renormalizing, yields the configuration Z on
//! `N²/2` points in dimension `N-1`; doing the same with two axes yields Y
//! on `N²/4` points in dimension `N-2`. Projection maps cosines by
//! `c ↦ (cN - j)/(N - j)` for `j` fixed axes, so all three configurations
//! have rational Gram matrices over a single small denominator and every
//! later computation (histograms, relation partitions, positive
//! semidefiniteness, design moments) is exact.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::algebra::rational::{frac, perfect_sqrt, rat, rat_to_i64, Rat};
use crate::codes::words::BinaryWord;
use crate::error::{Error, Result};
use crate::mub::lines::SignedLineSet;
use crate::schemes::{relations_from_values, RelationPartition, SchemeParameters};

/// Which of the standard configurations a point set is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigFamily {
    /// Full line-set configuration: `N² + 2N` points in dimension `N`.
    X,
    /// One-axis projection: `N²/2` points in dimension `N-1`.
    Z,
    /// Two-axis projection: `N²/4` points in dimension `N-2`.
    Y,
    /// Anything else (hand-assembled Gram data).
    Custom,
}

/// A finite set of unit vectors with an exact rational Gram matrix, stored
/// as row-major integer numerators over one common denominator `scale`.
#[derive(Clone, Debug)]
pub struct SphericalConfig {
    family: ConfigFamily,
    dim: usize,
    n_points: usize,
    scale: i64,
    num: Vec<i64>,
}

impl SphericalConfig {
    /// Builds a configuration from raw Gram numerators (`⟨x_i, x_j⟩ =
    /// num[i·n + j]/scale`), validating shape, symmetry, unit diagonal and
    /// the Cauchy–Schwarz bound; `+scale` off the diagonal would mean a
    /// repeated point and is rejected too.
    pub fn from_gram_numerators(
        family: ConfigFamily,
        dim: usize,
        scale: i64,
        num: Vec<i64>,
    ) -> Result<Self> {
        if scale <= 0 {
            return Err(Error::InvalidParameter(format!(
                "Gram denominator must be positive, got {scale}"
            )));
        }
        let n = (num.len() as u64).isqrt() as usize;
        if n * n != num.len() || n == 0 {
            return Err(Error::InvalidParameter(format!(
                "Gram data of length {} is not a nonempty square matrix",
                num.len()
            )));
        }
        let bad = (0..n).into_par_iter().find_map_any(|i| {
            if num[i * n + i] != scale {
                return Some(Error::InvalidParameter(format!(
                    "diagonal entry ({i}, {i}) is {}/{scale}, not 1",
                    num[i * n + i]
                )));
            }
            for j in i + 1..n {
                let g = num[i * n + j];
                if g != num[j * n + i] {
                    return Some(Error::NotSymmetric { row: i, col: j });
                }
                if g >= scale || g < -scale {
                    return Some(Error::InvalidParameter(format!(
                        "entry ({i}, {j}) = {g}/{scale} is outside [-1, 1)"
                    )));
                }
            }
            None
        });
        if let Some(e) = bad {
            return Err(e);
        }
        Ok(Self {
            family,
            dim,
            n_points: n,
            scale,
            num,
        })
    }

    /// The family tag this configuration was built as.
    pub fn family(&self) -> ConfigFamily {
        self.family
    }

    /// Ambient dimension of the sphere.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points.
    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Common denominator of the Gram matrix.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Integer numerator of `⟨x_i, x_j⟩` (over [`Self::scale`]).
    pub fn gram_numerator(&self, i: usize, j: usize) -> i64 {
        self.num[i * self.n_points + j]
    }

    /// Exact inner product `⟨x_i, x_j⟩`.
    pub fn gram(&self, i: usize, j: usize) -> Rat {
        frac(self.gram_numerator(i, j), self.scale)
    }

    /// Histogram of Gram numerators over all ordered pairs, diagonal
    /// included — the raw material for design-moment sums.
    pub fn cosine_histogram(&self) -> BTreeMap<i64, u64> {
        self.num
            .par_chunks(4096)
            .map(|chunk| {
                let mut local: BTreeMap<i64, u64> = BTreeMap::new();
                for &g in chunk {
                    *local.entry(g).or_insert(0) += 1;
                }
                local
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    }

    /// Partitions the ordered point pairs by inner product, with class `i+1`
    /// assigned to pairs at cosine `class_cosines[i]`. Every cosine must be
    /// an integer multiple of `1/scale`; a pair realizing none of the listed
    /// cosines is a witness that the configuration is not what was claimed.
    pub fn relation_partition(&self, class_cosines: &[Rat]) -> Result<RelationPartition> {
        let mut expected = Vec::with_capacity(class_cosines.len());
        for c in class_cosines {
            let scaled = c * rat(self.scale);
            let value = rat_to_i64(&scaled).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "cosine {c} is not a multiple of 1/{}",
                    self.scale
                ))
            })?;
            expected.push(value);
        }
        let indices: Vec<usize> = (0..self.n_points).collect();
        relations_from_values(
            &indices,
            |&x, &y| self.num[x * self.n_points + y],
            &expected,
        )
    }

    /// Rank of the Gram matrix, with positive semidefiniteness certified by
    /// exact symmetric Gaussian elimination: every pivot must be positive,
    /// and a zero diagonal entry forces its whole residual row to vanish.
    /// Quadratic memory and cubic time — intended for the small (`N = 16`)
    /// configurations; use [`Self::psd_rank_from_parameters`] at scale.
    pub fn psd_rank_by_elimination(&self) -> Result<usize> {
        let n = self.n_points;
        // Scaling the Gram matrix by the (positive) denominator changes
        // neither rank nor semidefiniteness, so eliminate on the integers.
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| self.num[i * n..(i + 1) * n].iter().map(|&g| rat(g)).collect())
            .collect();
        let mut rank = 0usize;
        for k in 0..n {
            let pivot = a[k][k].clone();
            if pivot.is_negative() {
                return Err(Error::InternalInconsistency(format!(
                    "Gram elimination pivot {k} is negative: matrix is not positive semidefinite"
                )));
            }
            if pivot.is_zero() {
                // The active submatrix is symmetric, so a zero diagonal with
                // any nonzero residual entry gives an indefinite 2×2 minor.
                if a[k][k + 1..].iter().any(|v| !v.is_zero()) {
                    return Err(Error::InternalInconsistency(format!(
                        "Gram elimination row {k} has a zero diagonal but nonzero residuals: \
                         matrix is not positive semidefinite"
                    )));
                }
                continue;
            }
            rank += 1;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                let (head, tail) = a.split_at_mut(i);
                let row_k = &head[k];
                let row_i = &mut tail[0];
                for j in k..n {
                    let t = &f * &row_k[j];
                    row_i[j] -= t;
                }
            }
        }
        Ok(rank)
    }

    /// Rank of the Gram matrix via verified scheme parameters: when the
    /// points carry an association scheme whose class `i` sits at cosine
    /// `class_cosines[i-1]`, the Gram matrix is `Σ_i c_i A_i`, its distinct
    /// eigenvalues are `e_u = Σ_i c_i P_{u,i}` and the rank is the sum of
    /// multiplicities over nonzero `e_u`. Linear in the scheme size instead
    /// of cubic in the point count; a negative eigenvalue or a trace that
    /// misses the point count is reported as an inconsistency.
    pub fn psd_rank_from_parameters(
        &self,
        params: &SchemeParameters,
        class_cosines: &[Rat],
    ) -> Result<usize> {
        if params.d() != class_cosines.len() {
            return Err(Error::InvalidParameter(format!(
                "{} cosines for a {}-class scheme",
                class_cosines.len(),
                params.d()
            )));
        }
        if params.n() != self.n_points as u64 {
            return Err(Error::InvalidParameter(format!(
                "scheme on {} points does not match configuration on {}",
                params.n(),
                self.n_points
            )));
        }
        let p = params.p();
        let mut rank = 0u64;
        let mut trace = Rat::zero();
        for u in 0..=params.d() {
            let mut eigenvalue = p.at(u, 0).clone();
            for (i, c) in class_cosines.iter().enumerate() {
                eigenvalue += c * p.at(u, i + 1);
            }
            if eigenvalue.is_negative() {
                return Err(Error::InternalInconsistency(format!(
                    "Gram eigenvalue on eigenspace {u} is negative: \
                     matrix is not positive semidefinite"
                )));
            }
            if !eigenvalue.is_zero() {
                rank += params.multiplicities()[u];
            }
            trace += rat(params.multiplicities()[u] as i64) * eigenvalue;
        }
        if trace != rat(self.n_points as i64) {
            return Err(Error::InternalInconsistency(format!(
                "Gram eigenvalues weighted by multiplicities sum to {trace}, \
                 expected the point count {}",
                self.n_points
            )));
        }
        Ok(rank as usize)
    }
}

/// The class cosines of a standard family in its closed-form relation
/// order, for a line-set dimension `N` (a power of 4, at least 16).
pub fn family_cosines(family: ConfigFamily, code_length: usize) -> Result<Vec<Rat>> {
    let n = code_length as i64;
    let s = perfect_sqrt(code_length as u64).unwrap_or(0) as i64;
    if s < 4 || s * s != n || !code_length.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "N = {code_length} is not a power of 4 with N >= 16"
        )));
    }
    match family {
        ConfigFamily::X => Ok(vec![frac(1, s), rat(0), frac(-1, s), rat(-1)]),
        ConfigFamily::Z => Ok(vec![
            frac(-(s + 1), n - 1),
            frac(s - 1, n - 1),
            frac(-1, n - 1),
        ]),
        ConfigFamily::Y => Ok(vec![
            frac(-(s + 2), n - 2),
            frac(s - 2, n - 2),
            frac(-2, n - 2),
        ]),
        ConfigFamily::Custom => Err(Error::InvalidParameter(
            "custom configurations have no closed-form cosines".into(),
        )),
    }
}

/// One point of the full configuration: a sign vector or a signed axis.
enum XPoint {
    Sign(BinaryWord),
    Axis { coord: usize, negative: bool },
}

/// Builds the full configuration X from a maximal line set: all `N²` sign
/// vectors in line-set order, then the axes `+e_0, …, +e_{N-1}`, then
/// `-e_0, …, -e_{N-1}`. The Gram denominator is `√N`.
pub fn build_x(lines: &SignedLineSet) -> Result<SphericalConfig> {
    if !lines.is_maximal() {
        return Err(Error::InvalidParameter(format!(
            "full configuration needs a maximal line set; got {} of {} lines",
            lines.line_count(),
            lines.dim() * lines.dim() / 2
        )));
    }
    let n_dim = lines.dim();
    let s = perfect_sqrt(n_dim as u64).expect("line-set dimensions are perfect squares") as i64;
    let points: Vec<XPoint> = lines
        .sign_vectors()
        .iter()
        .map(|&w| XPoint::Sign(w))
        .chain((0..n_dim).map(|coord| XPoint::Axis {
            coord,
            negative: false,
        }))
        .chain((0..n_dim).map(|coord| XPoint::Axis {
            coord,
            negative: true,
        }))
        .collect();
    let n = points.len();
    let entry = |a: &XPoint, b: &XPoint| -> i64 {
        match (a, b) {
            (XPoint::Sign(u), XPoint::Sign(v)) => {
                let d = i64::from((u.bits() ^ v.bits()).count_ones());
                (n_dim as i64 - 2 * d) / s
            }
            (XPoint::Sign(w), XPoint::Axis { coord, negative })
            | (XPoint::Axis { coord, negative }, XPoint::Sign(w)) => {
                let sign = if w.bit(*coord) == 0 { 1 } else { -1 };
                if *negative {
                    -sign
                } else {
                    sign
                }
            }
            (
                XPoint::Axis {
                    coord: c1,
                    negative: n1,
                },
                XPoint::Axis {
                    coord: c2,
                    negative: n2,
                },
            ) => {
                if c1 != c2 {
                    0
                } else if n1 == n2 {
                    s
                } else {
                    -s
                }
            }
        }
    };
    let num: Vec<i64> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let a = &points[i];
            points.iter().map(|b| entry(a, b)).collect::<Vec<_>>()
        })
        .collect();
    SphericalConfig::from_gram_numerators(ConfigFamily::X, n_dim, s, num)
}

/// Shared projection step: keep the points of X at cosine `+1/√N` from
/// every listed axis, project off those axes and renormalize. Cosines map
/// by `g/√N ↦ (g√N - j)/(N - j)` with `j` the number of axes dropped.
fn project_off_axes(
    x: &SphericalConfig,
    axes: &[usize],
    family: ConfigFamily,
) -> Result<SphericalConfig> {
    if x.family() != ConfigFamily::X {
        return Err(Error::InvalidParameter(
            "projection starts from the full configuration".into(),
        ));
    }
    let n_dim = x.dim() as i64;
    let s = x.scale();
    let j = axes.len() as i64;
    for (k, &a) in axes.iter().enumerate() {
        if a >= x.dim() {
            return Err(Error::PositionOutOfRange {
                position: a,
                length: x.dim(),
            });
        }
        for &b in &axes[k + 1..] {
            // Distinct axes are orthogonal; a repeat would project twice
            // off the same direction.
            if a == b {
                return Err(Error::InvalidParameter(format!(
                    "projection axes must be pairwise orthogonal; axis {a} repeats"
                )));
            }
        }
    }
    let axis_points: Vec<usize> = axes.iter().map(|&a| x.dim() * x.dim() + a).collect();
    let selected: Vec<usize> = (0..x.n_points())
        .filter(|&i| axis_points.iter().all(|&u| x.gram_numerator(i, u) == 1))
        .collect();
    let expected = (x.dim() * x.dim()) >> axes.len();
    if selected.len() != expected {
        return Err(Error::InternalInconsistency(format!(
            "expected {expected} points at cosine 1/√N from {} axes, found {}",
            axes.len(),
            selected.len()
        )));
    }
    let m = selected.len();
    let num: Vec<i64> = (0..m)
        .into_par_iter()
        .flat_map_iter(|i| {
            let row = selected[i];
            selected
                .iter()
                .map(|&col| x.gram_numerator(row, col) * (n_dim / s) - j)
                .collect::<Vec<_>>()
        })
        .collect();
    SphericalConfig::from_gram_numerators(family, (n_dim - j) as usize, n_dim - j, num)
}

/// The configuration Z: points of X at cosine `+1/√N` from the axis `+e_a`,
/// projected to the hyperplane orthogonal to it. `N²/2` points in dimension
/// `N-1` with off-diagonal cosines `{(√N-1), -1, -(√N+1)}/(N-1)`.
pub fn build_z(x: &SphericalConfig, axis: usize) -> Result<SphericalConfig> {
    project_off_axes(x, &[axis], ConfigFamily::Z)
}

/// The configuration Y: points of X at cosine `+1/√N` from two distinct
/// axes, projected off both. `N²/4` points in dimension `N-2` with
/// off-diagonal cosines `{(√N-2), -2, -(√N+2)}/(N-2)`.
pub fn build_y(x: &SphericalConfig, axis_a: usize, axis_b: usize) -> Result<SphericalConfig> {
    project_off_axes(x, &[axis_a, axis_b], ConfigFamily::Y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::binary::build_binary_kerdock;
    use crate::mub::lines::code_to_lines;
    use crate::schemes::{closed_form, verify_scheme, ClosedFormFamily, SchemeFamily};
    use std::sync::OnceLock;

    fn x16() -> &'static SphericalConfig {
        static X: OnceLock<SphericalConfig> = OnceLock::new();
        X.get_or_init(|| {
            let code = build_binary_kerdock(3).unwrap();
            let lines = code_to_lines(&code).unwrap();
            build_x(&lines).unwrap()
        })
    }

    #[test]
    fn x16_shape_and_cosine_histogram() {
        let x = x16();
        assert_eq!(x.n_points(), 288);
        assert_eq!(x.dim(), 16);
        assert_eq!(x.scale(), 4);
        // Valencies 128, 30, 128, 1 at cosines 1/4, 0, -1/4, -1.
        let hist = x.cosine_histogram();
        let expected: BTreeMap<i64, u64> = [
            (4, 288),
            (1, 288 * 128),
            (0, 288 * 30),
            (-1, 288 * 128),
            (-4, 288),
        ]
        .into_iter()
        .collect();
        assert_eq!(hist, expected);
    }

    #[test]
    fn x16_relations_form_the_closed_scheme() {
        let x = x16();
        let cosines = family_cosines(ConfigFamily::X, 16).unwrap();
        let rp = x.relation_partition(&cosines).unwrap();
        let params = verify_scheme(&rp).unwrap();
        let closed = closed_form(&ClosedFormFamily::new(SchemeFamily::X, 16).unwrap()).unwrap();
        let aligned = params.aligned_to(&closed).unwrap();
        assert_eq!(aligned, closed);
    }

    #[test]
    fn z16_projection_matches_the_closed_scheme() {
        let z = build_z(x16(), 0).unwrap();
        assert_eq!(z.n_points(), 128);
        assert_eq!(z.dim(), 15);
        assert_eq!(z.scale(), 15);
        let hist = z.cosine_histogram();
        let expected: BTreeMap<i64, u64> = [
            (15, 128),
            (3, 128 * 70),
            (-1, 128 * 15),
            (-5, 128 * 42),
        ]
        .into_iter()
        .collect();
        assert_eq!(hist, expected);
        let cosines = family_cosines(ConfigFamily::Z, 16).unwrap();
        let rp = z.relation_partition(&cosines).unwrap();
        let params = verify_scheme(&rp).unwrap();
        let closed = closed_form(&ClosedFormFamily::new(SchemeFamily::Z, 16).unwrap()).unwrap();
        let aligned = params.aligned_to(&closed).unwrap();
        assert_eq!(aligned, closed);
    }

    #[test]
    fn y16_projection_matches_the_closed_scheme() {
        let y = build_y(x16(), 0, 1).unwrap();
        assert_eq!(y.n_points(), 64);
        assert_eq!(y.dim(), 14);
        assert_eq!(y.scale(), 14);
        let hist = y.cosine_histogram();
        let expected: BTreeMap<i64, u64> = [
            (14, 64),
            (2, 64 * 42),
            (-2, 64 * 7),
            (-6, 64 * 14),
        ]
        .into_iter()
        .collect();
        assert_eq!(hist, expected);
        let cosines = family_cosines(ConfigFamily::Y, 16).unwrap();
        let rp = y.relation_partition(&cosines).unwrap();
        let params = verify_scheme(&rp).unwrap();
        let closed = closed_form(&ClosedFormFamily::new(SchemeFamily::Y, 16).unwrap()).unwrap();
        let aligned = params.aligned_to(&closed).unwrap();
        assert_eq!(aligned, closed);
    }

    #[test]
    fn y16_partition_equals_the_doubly_shortened_distance_partition() {
        // Selecting the sign vectors with +1 in coordinates 0 and 1 keeps
        // exactly the codewords with zeros there, in order, and projection
        // turns distance d into cosine (7-d)/7 — so the Y relation classes
        // must coincide point-for-point with the distance classes of the
        // doubly-shortened code (distances 10, 6, 8 for classes 1, 2, 3).
        let y = build_y(x16(), 0, 1).unwrap();
        let cosines = family_cosines(ConfigFamily::Y, 16).unwrap();
        let from_gram = y.relation_partition(&cosines).unwrap();

        let shortened = build_binary_kerdock(3)
            .unwrap()
            .double_shorten(0, 1)
            .unwrap();
        assert_eq!(shortened.cardinality(), 64);
        let from_distance = relations_from_values(
            shortened.words(),
            |a, b| (a.bits() ^ b.bits()).count_ones(),
            &[10, 6, 8],
        )
        .unwrap();

        assert_eq!(from_gram.n(), from_distance.n());
        for i in 0..from_gram.n() {
            for k in 0..from_gram.n() {
                assert_eq!(from_gram.class(i, k), from_distance.class(i, k));
            }
        }
    }

    #[test]
    fn elimination_and_parameter_ranks_agree() {
        let z = build_z(x16(), 0).unwrap();
        let z_cos = family_cosines(ConfigFamily::Z, 16).unwrap();
        let z_params = verify_scheme(&z.relation_partition(&z_cos).unwrap()).unwrap();
        assert_eq!(z.psd_rank_by_elimination().unwrap(), 15);
        assert_eq!(z.psd_rank_from_parameters(&z_params, &z_cos).unwrap(), 15);

        let y = build_y(x16(), 0, 1).unwrap();
        let y_cos = family_cosines(ConfigFamily::Y, 16).unwrap();
        let y_params = verify_scheme(&y.relation_partition(&y_cos).unwrap()).unwrap();
        assert_eq!(y.psd_rank_by_elimination().unwrap(), 14);
        assert_eq!(y.psd_rank_from_parameters(&y_params, &y_cos).unwrap(), 14);

        // The full configuration spans all of R^16.
        let x_cos = family_cosines(ConfigFamily::X, 16).unwrap();
        let x_params = verify_scheme(&x16().relation_partition(&x_cos).unwrap()).unwrap();
        assert_eq!(
            x16().psd_rank_from_parameters(&x_params, &x_cos).unwrap(),
            16
        );
    }

    #[test]
    fn projection_axis_choice_does_not_matter() {
        let a = build_z(x16(), 0).unwrap();
        let b = build_z(x16(), 7).unwrap();
        assert_eq!(a.cosine_histogram(), b.cosine_histogram());
        let c = build_y(x16(), 2, 9).unwrap();
        let d = build_y(x16(), 0, 1).unwrap();
        assert_eq!(c.cosine_histogram(), d.cosine_histogram());
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        // Repeated axis.
        assert!(matches!(
            build_y(x16(), 3, 3),
            Err(Error::InvalidParameter(_))
        ));
        // Projection must start from X.
        let z = build_z(x16(), 0).unwrap();
        assert!(matches!(build_z(&z, 0), Err(Error::InvalidParameter(_))));
        // Asymmetric Gram data.
        let bad = SphericalConfig::from_gram_numerators(
            ConfigFamily::Custom,
            2,
            2,
            vec![2, 1, -1, 2],
        );
        assert!(matches!(bad, Err(Error::NotSymmetric { .. })));
        // A cosine that is not a multiple of 1/scale.
        let two = SphericalConfig::from_gram_numerators(
            ConfigFamily::Custom,
            2,
            2,
            vec![2, -2, -2, 2],
        )
        .unwrap();
        assert!(two.relation_partition(&[frac(1, 3)]).is_err());
        // No closed-form cosines for hand-built data.
        assert!(family_cosines(ConfigFamily::Custom, 16).is_err());
        assert!(family_cosines(ConfigFamily::X, 32).is_err());
    }

    #[test]
    fn antipodal_pair_is_psd_of_rank_one() {
        let pair = SphericalConfig::from_gram_numerators(
            ConfigFamily::Custom,
            2,
            2,
            vec![2, -2, -2, 2],
        )
        .unwrap();
        assert_eq!(pair.psd_rank_by_elimination().unwrap(), 1);
    }
}
