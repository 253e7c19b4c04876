//! Mutually unbiased bases from Kerdock-like codes, and the exact geometry
//! of the unit-vector configurations they generate.
//!
//! A Kerdock-like binary code of length `N` spells out `N²` sign vectors
//! that split into `N/2` orthonormal bases, pairwise unbiased and unbiased
//! to the standard basis ([`lines`]). Adjoining the signed standard basis
//! gives the configuration X; projecting off one or two axes gives Z and Y
//! ([`config`]). The submodules quantify how good these configurations
//! are, all in exact arithmetic:
//!
//! * [`gegenbauer`] — the sphere's orthogonal polynomial family, in the two
//!   normalizations the different arguments need;
//! * [`design`] — spherical design strength via Gegenbauer moments;
//! * [`annihilator`] — the cosine annihilator and the absolute bound its
//!   positive expansion certifies;
//! * [`solver`] — intersection numbers recovered from design moments alone,
//!   checked against brute-force counting;
//! * [`krawtchouk`] — the discrete twin: Krawtchouk expansions proving the
//!   matching distance bounds for the underlying binary codes.

pub mod annihilator;
pub mod config;
pub mod design;
pub mod gegenbauer;
pub mod krawtchouk;
pub mod lines;
mod poly;
pub mod solver;

pub use annihilator::{annihilator_expansion, closed_form_coefficients};
pub use config::{
    build_x, build_y, build_z, family_cosines, ConfigFamily, SphericalConfig,
};
pub use design::{design_moments, design_strength};
pub use gegenbauer::{harmonic_dimension, GegenbauerBasis};
pub use krawtchouk::{delsarte_bound, DistanceBound, KrawtchoukBasis};
pub use lines::{
    code_to_lines, group_into_bases, lines_to_code, sign_vector, MubFamily, SignedLineSet,
};
pub use solver::{intersection_solver, triple_counts, IntersectionSolution};
