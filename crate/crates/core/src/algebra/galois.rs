//! The Galois ring GR(4, m) = Z4[x]/(h) for a Hensel-lifted primitive h.
//!
//! Elements are polynomials of degree < m with coefficients mod 4, stored
//! low-to-high. The ring carries a distinguished root `ξ` of `h` whose
//! multiplicative order is `q - 1` (with `q = 2^m`); the Teichmüller set
//! `{0, 1, ξ, …, ξ^(q-2)}` reduces bijectively onto GF(2^m) mod 2 and is the
//! coordinate domain of the trace codes built on top of this module.
//!
//! The Frobenius `σ` acts by `σ(a + 2b) = a² + 2b²` on the 2-adic
//! decomposition with `a, b` Teichmüller, and the trace down to Z4 is the sum
//! of the `m` Frobenius conjugates. Everything here is exact integer
//! arithmetic on digit vectors.

use crate::algebra::gf2m;
use crate::error::{Error, Result};

/// A Galois-ring element: `m` coefficients mod 4, low-to-high.
pub type GrElem = Vec<u8>;

/// Multiplies two Z4 coefficient vectors (no reduction).
fn z4_polmul(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % 4;
        }
    }
    out
}

/// Reduces a Z4 coefficient vector modulo a monic polynomial.
fn z4_polmod(mut a: Vec<u8>, modulus: &[u8]) -> Vec<u8> {
    let dm = modulus.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap() % 4;
        if lead != 0 {
            let shift = a.len() - 1 - dm;
            for (i, &c) in modulus.iter().enumerate() {
                a[shift + i] = (a[shift + i] + 4 - (lead * c) % 4) % 4;
            }
        }
        a.pop();
    }
    a.resize(dm, 0);
    a
}

/// Hensel-lifts a binary primitive polynomial of odd degree `m >= 3` to the
/// monic Z4 polynomial whose root has multiplicative order `2^m - 1`.
///
/// The lift iterates the Graeffe step `h'(x²) = ±h(x)·h(−x) (mod 4)` from the
/// 0/1 lift until the coefficients stabilize, then confirms the defining
/// property by computing the order of `x` in `Z4[x]/(h)` directly. Inputs
/// that are not primitive of odd degree at least 3 are rejected.
///
/// Coefficients are returned low-to-high, length `m + 1`, leading coefficient 1.
pub fn hensel_lift(base_poly: u64, m: usize) -> Result<Vec<u8>> {
    if gf2m::degree(base_poly) != Some(m) {
        return Err(Error::InvalidParameter(format!(
            "polynomial {base_poly:#b} does not have degree {m}"
        )));
    }
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::NotPrimitive {
            poly: base_poly,
            reason: format!("degree must be odd and at least 3, got {m}"),
        });
    }
    if !gf2m::is_primitive(base_poly) {
        return Err(Error::NotPrimitive {
            poly: base_poly,
            reason: "x does not generate the full unit group of GF(2)[x]/(f)".into(),
        });
    }

    // 0/1 lift of the binary polynomial.
    let mut h: Vec<u8> = (0..=m).map(|i| ((base_poly >> i) & 1) as u8).collect();
    let mut stabilized = false;
    for _ in 0..16 {
        // h(-x): negate odd-degree coefficients.
        let h_neg: Vec<u8> = h
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c } else { (4 - c) % 4 })
            .collect();
        let g = z4_polmul(&h, &h_neg);
        // f(x)·f(−x) is even: odd-degree coefficients must all vanish.
        if g.iter().skip(1).step_by(2).any(|&c| c != 0) {
            return Err(Error::InternalInconsistency(
                "Graeffe step produced odd-degree terms".into(),
            ));
        }
        let mut next: Vec<u8> = (0..=m).map(|i| g[2 * i] % 4).collect();
        // For odd degree the x^(2m) coefficient is -1; flip signs to stay monic.
        if *next.last().unwrap() == 3 {
            for c in next.iter_mut() {
                *c = (4 - *c) % 4;
            }
        }
        if *next.last().unwrap() != 1 {
            return Err(Error::InternalInconsistency(
                "Graeffe step lost monicity".into(),
            ));
        }
        if next == h {
            stabilized = true;
            break;
        }
        h = next;
    }
    if !stabilized {
        return Err(Error::NotPrimitive {
            poly: base_poly,
            reason: "Graeffe iteration did not stabilize".into(),
        });
    }

    // Self-check: x must have order exactly 2^m - 1 in Z4[x]/(h).
    let q_minus_1 = (1u64 << m) - 1;
    let x_elem: Vec<u8> = {
        let mut e = vec![0u8; m];
        e[1] = 1;
        e
    };
    let one: Vec<u8> = {
        let mut e = vec![0u8; m];
        e[0] = 1;
        e
    };
    let mut acc = x_elem.clone();
    let mut order = None;
    for k in 1..=q_minus_1 {
        if acc == one {
            order = Some(k);
            break;
        }
        acc = z4_polmod(z4_polmul(&acc, &x_elem), &h);
    }
    // The k = q-1 power itself still needs the equality test.
    if order.is_none() && acc == one {
        order = Some(q_minus_1);
    }
    if order != Some(q_minus_1) {
        return Err(Error::NotPrimitive {
            poly: base_poly,
            reason: format!(
                "root of the lift has order {:?}, expected {q_minus_1}",
                order
            ),
        });
    }
    Ok(h)
}

/// The Galois ring GR(4, m) with its precomputed Teichmüller tables.
#[derive(Clone, Debug)]
pub struct GaloisRing {
    m: usize,
    q: usize,
    base_poly: u64,
    modulus: Vec<u8>,
    /// ξ^0 .. ξ^(q-2).
    xi_pows: Vec<GrElem>,
    /// Teichmüller set: index 0 is zero, index j+1 is ξ^j.
    teich: Vec<GrElem>,
    /// Packed mod-2 image -> index into `teich`.
    teich_index: Vec<u32>,
}

impl GaloisRing {
    /// Constructs GR(4, m) from the built-in primitive polynomial table.
    pub fn new(m: usize) -> Result<Self> {
        let base = gf2m::default_primitive_poly(m).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "no built-in primitive polynomial for m = {m}; supply one explicitly"
            ))
        })?;
        Self::with_polynomial(m, base)
    }

    /// Constructs GR(4, m) from a caller-chosen binary primitive polynomial.
    pub fn with_polynomial(m: usize, base_poly: u64) -> Result<Self> {
        let modulus = hensel_lift(base_poly, m)?;
        let q = 1usize << m;

        let x_elem: GrElem = {
            let mut e = vec![0u8; m];
            e[1] = 1;
            e
        };
        let mut xi_pows = Vec::with_capacity(q - 1);
        let mut cur: GrElem = {
            let mut e = vec![0u8; m];
            e[0] = 1;
            e
        };
        for _ in 0..q - 1 {
            xi_pows.push(cur.clone());
            cur = z4_polmod(z4_polmul(&cur, &x_elem), &modulus);
        }

        let mut teich = Vec::with_capacity(q);
        teich.push(vec![0u8; m]);
        teich.extend(xi_pows.iter().cloned());

        let mut teich_index = vec![u32::MAX; q];
        for (idx, t) in teich.iter().enumerate() {
            let key = Self::pack_mod2(t);
            if teich_index[key] != u32::MAX {
                return Err(Error::InternalInconsistency(
                    "Teichmüller set does not reduce bijectively mod 2".into(),
                ));
            }
            teich_index[key] = idx as u32;
        }

        Ok(GaloisRing {
            m,
            q,
            base_poly,
            modulus,
            xi_pows,
            teich,
            teich_index,
        })
    }

    fn pack_mod2(e: &[u8]) -> usize {
        e.iter()
            .enumerate()
            .fold(0usize, |acc, (i, &c)| acc | (((c & 1) as usize) << i))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `q = 2^m`, the size of the residue field.
    pub fn q(&self) -> usize {
        self.q
    }

    /// The binary polynomial this ring was lifted from.
    pub fn base_poly(&self) -> u64 {
        self.base_poly
    }

    /// The Hensel-lifted modulus, low-to-high, length `m + 1`.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn zero(&self) -> GrElem {
        vec![0u8; self.m]
    }

    pub fn one(&self) -> GrElem {
        let mut e = vec![0u8; self.m];
        e[0] = 1;
        e
    }

    /// ξ^j for any j (reduced mod q - 1).
    pub fn xi_pow(&self, j: usize) -> &GrElem {
        &self.xi_pows[j % (self.q - 1)]
    }

    /// The Teichmüller set `{0, 1, ξ, …, ξ^(q-2)}`, zero first.
    pub fn teichmuller_set(&self) -> &[GrElem] {
        &self.teich
    }

    /// The element with coefficient `(index >> 2i) & 3` on ξ^i.
    ///
    /// Enumerating `index` over `0..4^m` walks the whole ring once; the
    /// mapping is the fixed enumeration order used by the code builders.
    pub fn element_from_index(&self, index: u64) -> GrElem {
        let mut acc = self.zero();
        for i in 0..self.m {
            let c = ((index >> (2 * i)) & 3) as u8;
            if c != 0 {
                let term: GrElem = self.xi_pows[i].iter().map(|&x| (c * x) % 4).collect();
                acc = self.add(&acc, &term);
            }
        }
        acc
    }

    pub fn add(&self, a: &[u8], b: &[u8]) -> GrElem {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % 4).collect()
    }

    pub fn sub(&self, a: &[u8], b: &[u8]) -> GrElem {
        a.iter().zip(b).map(|(&x, &y)| (x + 4 - y) % 4).collect()
    }

    pub fn neg(&self, a: &[u8]) -> GrElem {
        a.iter().map(|&x| (4 - x) % 4).collect()
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> GrElem {
        z4_polmod(z4_polmul(a, b), &self.modulus)
    }

    /// The Frobenius `σ(a + 2b) = a² + 2b²` on the 2-adic Teichmüller
    /// decomposition; it fixes Z4 and generates the automorphism group.
    pub fn frobenius(&self, y: &[u8]) -> GrElem {
        let a = &self.teich[self.teich_index[Self::pack_mod2(y)] as usize];
        let diff = self.sub(y, a);
        debug_assert!(
            diff.iter().all(|&c| c % 2 == 0),
            "2-adic decomposition must leave even digits"
        );
        let half_bits = Self::pack_mod2(&diff.iter().map(|&c| c / 2).collect::<Vec<_>>());
        let b = &self.teich[self.teich_index[half_bits] as usize];
        let a2 = self.mul(a, a);
        let b2 = self.mul(b, b);
        let two_b2: GrElem = b2.iter().map(|&c| (2 * c) % 4).collect();
        self.add(&a2, &two_b2)
    }

    /// Trace down to Z4: the sum of the `m` Frobenius conjugates.
    ///
    /// The sum is Frobenius-fixed, hence a scalar; the scalar's digit is
    /// returned.
    pub fn trace(&self, y: &[u8]) -> u8 {
        let mut sum = self.zero();
        let mut cur = y.to_vec();
        for _ in 0..self.m {
            sum = self.add(&sum, &cur);
            cur = self.frobenius(&cur);
        }
        debug_assert!(
            sum[1..].iter().all(|&c| c == 0),
            "trace of {y:?} is not scalar: {sum:?}"
        );
        sum[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn lift_matches_known_values() {
        // x^3 + x + 1 lifts to x^3 + 2x^2 + x + 3.
        assert_eq!(hensel_lift(0b1011, 3).unwrap(), vec![3, 1, 2, 1]);
        // x^5 + x^2 + 1 lifts to x^5 + 3x^2 + 2x + 3.
        assert_eq!(hensel_lift(0b100101, 5).unwrap(), vec![3, 2, 3, 0, 0, 1]);
    }

    #[test]
    fn lift_rejects_bad_inputs() {
        // x + 1: degree too small.
        assert!(matches!(
            hensel_lift(0b11, 1),
            Err(Error::NotPrimitive { .. })
        ));
        // x^4 + x + 1 is primitive but of even degree.
        assert!(matches!(
            hensel_lift(0b10011, 4),
            Err(Error::NotPrimitive { .. })
        ));
        // x^5 + 1 is reducible.
        assert!(matches!(
            hensel_lift(0b100001, 5),
            Err(Error::NotPrimitive { .. })
        ));
        // degree mismatch between mask and m.
        assert!(matches!(
            hensel_lift(0b1011, 5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn xi_has_full_order() {
        for m in [3usize, 5] {
            let gr = GaloisRing::new(m).unwrap();
            let one = gr.one();
            // xi^(q-1) wraps to xi^0 = 1, and no earlier power is 1.
            assert_eq!(gr.xi_pow(0), &one);
            for j in 1..gr.q() - 1 {
                assert_ne!(gr.xi_pow(j), &one, "xi order divides {j}");
            }
            assert_eq!(gr.xi_pow(gr.q() - 1), &one);
        }
    }

    #[test]
    fn trace_known_values() {
        let gr3 = GaloisRing::new(3).unwrap();
        assert_eq!(gr3.trace(&gr3.zero()), 0);
        assert_eq!(gr3.trace(&gr3.one()), 3);
        let gr5 = GaloisRing::new(5).unwrap();
        assert_eq!(gr5.trace(&gr5.zero()), 0);
        assert_eq!(gr5.trace(&gr5.one()), 1);
    }

    #[test]
    fn trace_is_additive_exhaustive_m3() {
        let gr = GaloisRing::new(3).unwrap();
        let elems: Vec<GrElem> = (0..64).map(|g| gr.element_from_index(g)).collect();
        for x in &elems {
            for y in &elems {
                let lhs = gr.trace(&gr.add(x, y));
                let rhs = (gr.trace(x) + gr.trace(y)) % 4;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trace_is_additive_sampled_m5() {
        let gr = GaloisRing::new(5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6b65726430);
        for _ in 0..10_000 {
            let x = gr.element_from_index(rng.gen_range(0..1024));
            let y = gr.element_from_index(rng.gen_range(0..1024));
            let lhs = gr.trace(&gr.add(&x, &y));
            let rhs = (gr.trace(&x) + gr.trace(&y)) % 4;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn trace_is_frobenius_invariant() {
        for m in [3usize, 5] {
            let gr = GaloisRing::new(m).unwrap();
            for g in 0..(1u64 << (2 * m)) {
                let x = gr.element_from_index(g);
                assert_eq!(gr.trace(&x), gr.trace(&gr.frobenius(&x)));
            }
        }
    }

    #[test]
    fn teichmuller_set_properties() {
        for (m, expect) in [(3usize, 8usize), (5, 32)] {
            let gr = GaloisRing::new(m).unwrap();
            let teich = gr.teichmuller_set();
            assert_eq!(teich.len(), expect);

            // Distinct mod-2 reductions (bijectivity onto GF(2^m)).
            let mut seen = std::collections::HashSet::new();
            for t in teich {
                let key: Vec<u8> = t.iter().map(|c| c & 1).collect();
                assert!(seen.insert(key), "mod-2 image repeated");
            }

            // Closed under multiplication.
            let set: std::collections::HashSet<GrElem> = teich.iter().cloned().collect();
            for a in teich {
                for b in teich {
                    assert!(set.contains(&gr.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn frobenius_squares_mod_two() {
        // sigma reduces to the squaring map on the residue field.
        let gr = GaloisRing::new(3).unwrap();
        for t in gr.teichmuller_set() {
            let s = gr.frobenius(t);
            assert_eq!(s, gr.mul(t, t), "on Teichmüller elements σ is squaring");
        }
    }
}
