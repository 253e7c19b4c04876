//! Spherical design strength of a configuration, decided exactly.
//!
//! A finite set of unit vectors is a `t`-design when every polynomial of
//! degree at most `t` averages over the set to its sphere average, which is
//! equivalent to the vanishing of the Gegenbauer moments
//!
//! ```text
//!   M_k = (1/|S|²) · Σ_{x,y ∈ S} Q̄_k(⟨x, y⟩)        for k = 1, …, t
//! ```
//!
//! (ordered pairs, diagonal included). The sums run over the cosine
//! histogram, so each moment costs one exact polynomial evaluation per
//! distinct inner product no matter how many points the configuration has.

use num_traits::{One, Zero};

use crate::algebra::rational::{frac, rat, Rat};
use crate::error::{Error, Result};
use crate::mub::config::SphericalConfig;
use crate::mub::gegenbauer::GegenbauerBasis;

/// The moments `M_0, …, M_kmax` of a configuration, exactly. `M_0` is
/// always 1 and is kept as a cross-check of the histogram totals.
pub fn design_moments(config: &SphericalConfig, k_max: usize) -> Result<Vec<Rat>> {
    let basis = GegenbauerBasis::new(config.dim(), k_max)?;
    let hist = config.cosine_histogram();
    let n = config.n_points() as i64;
    let total = rat(n) * rat(n);
    let mut moments = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut sum = Rat::zero();
        for (&g, &count) in &hist {
            let value = basis.eval_unit(k, &frac(g, config.scale()));
            sum += rat(count as i64) * value;
        }
        moments.push(sum / &total);
    }
    if !moments[0].is_one() {
        return Err(Error::InternalInconsistency(format!(
            "zeroth design moment is {}, not 1: cosine histogram does not \
             cover all ordered pairs",
            moments[0]
        )));
    }
    Ok(moments)
}

/// The design strength of a configuration, capped at `k_max`: the largest
/// `t ≤ k_max` with `M_1 = … = M_t = 0`. A return value equal to `k_max`
/// therefore means "at least `k_max`".
pub fn design_strength(config: &SphericalConfig, k_max: usize) -> Result<usize> {
    let moments = design_moments(config, k_max)?;
    Ok(moments
        .iter()
        .skip(1)
        .position(|m| !m.is_zero())
        .unwrap_or(k_max))
}
