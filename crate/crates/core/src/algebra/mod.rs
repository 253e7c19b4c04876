//! Exact arithmetic foundations: rationals, Gaussian integers, binary
//! polynomials, and the Galois ring GR(4, m).

pub mod galois;
pub mod gaussian;
pub mod gf2m;
pub mod rational;

pub use galois::{hensel_lift, GaloisRing, GrElem};
pub use gaussian::GaussianInt;
pub use rational::{
    frac, is_nonnegative, perfect_sqrt, rat, rat_from_string, rat_sum, rat_to_i64, rat_to_string,
    Rat,
};
