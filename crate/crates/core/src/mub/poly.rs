//! Small exact-polynomial helpers shared by the Gegenbauer and Krawtchouk
//! machinery. Polynomials are coefficient vectors in one variable, stored
//! low-to-high with no trailing zeros (the zero polynomial is the empty
//! vector).

use num_traits::{One, Zero};

use crate::algebra::rational::Rat;
use crate::error::{Error, Result};

/// Evaluates a polynomial by Horner's rule.
pub(crate) fn eval(p: &[Rat], t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * t + c;
    }
    acc
}

/// Drops trailing zero coefficients in place.
pub(crate) fn trim(p: &mut Vec<Rat>) {
    while p.last().map(Zero::is_zero).unwrap_or(false) {
        p.pop();
    }
}

/// Multiplies a polynomial by the linear factor `(x - root)`.
pub(crate) fn mul_linear(p: &[Rat], root: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= root * c;
    }
    out
}

/// Product of two polynomials.
pub(crate) fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// The monic polynomial with the given roots.
pub(crate) fn monic_from_roots(roots: &[Rat]) -> Vec<Rat> {
    let mut p = vec![Rat::one()];
    for r in roots {
        p = mul_linear(&p, r);
    }
    p
}

/// Expands `target` over a triangular basis in which `basis[k]` has exact
/// degree `k`: returns `c` with `target = Σ c[k]·basis[k]`.
///
/// Fails if the target's degree exceeds the basis size.
pub(crate) fn expand_in_basis(basis: &[Vec<Rat>], target: &[Rat]) -> Result<Vec<Rat>> {
    let mut rest = target.to_vec();
    trim(&mut rest);
    if rest.len() > basis.len() {
        return Err(Error::InvalidParameter(format!(
            "cannot expand a degree-{} polynomial over {} basis elements",
            rest.len() - 1,
            basis.len()
        )));
    }
    let mut coeffs = vec![Rat::zero(); basis.len()];
    while let Some(lead) = rest.last().cloned() {
        let deg = rest.len() - 1;
        let b = &basis[deg];
        debug_assert_eq!(b.len(), deg + 1, "basis element {deg} has wrong degree");
        let c = lead / &b[deg];
        for (r, bc) in rest.iter_mut().zip(b) {
            *r -= &c * bc;
        }
        coeffs[deg] = c;
        trim(&mut rest);
    }
    Ok(coeffs)
}
