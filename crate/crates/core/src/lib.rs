//! Exact-arithmetic constructions around Kerdock codes over Z4.
//!
//! The crate builds the quaternary Kerdock family from Galois-ring traces and
//! follows it through every structure it generates:
//!
//! * Gray images and their distance geometry ([`codes`]);
//! * association schemes with exact intersection numbers, eigenmatrices, and
//!   Krein parameters, verified by brute-force enumeration ([`schemes`]);
//! * maximal sets of real mutually unbiased bases, the spherical
//!   configurations they carve out, design-strength tests, and
//!   linear-programming distance bounds ([`mub`]);
//! * integer lattices obtained from the codes, with Hermite normal forms and
//!   theta-series enumeration ([`lattice`]).
//!
//! Every number is an integer or an arbitrary-precision rational; no
//! verification path touches floating point.

pub mod algebra;
pub mod codes;
pub mod error;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod mub;
pub mod schemes;

pub use error::{Error, Result};
