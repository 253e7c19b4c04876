//! Integer lattices attached to the codes and line systems: construction
//! A, canonical-basis spans of vector sets, exact theta-series prefixes,
//! and the minimal-vector verification for the dimension-16 configuration.
//!
//! Everything is exact. Bases are kept in Hermite normal form so that
//! lattice equality is matrix equality; vector counts by squared norm come
//! from a coset decomposition modulo `m·Zⁿ` in which coordinates separate
//! and the counting reduces to truncated products of per-coordinate digit
//! polynomials. The doubly-shortened code's sign vectors relate to
//! construction A of the punctured simplex code through an exact
//! norm-halving change of frame ([`gaussian_integer_model`]); the raw
//! `±1` span realizes the same theta series only with all norms doubled.

mod bw16;
mod constructions;
mod hnf;
mod theta;

pub use bw16::{bw16_lattice, bw16_membership_check, Bw16Report};
pub use constructions::{
    construction_a, gaussian_integer_model, lattice_from_vectors, IntegerLattice,
};
pub use theta::{theta_prefix, ThetaPrefix};
