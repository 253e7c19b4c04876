//! Binary polynomial arithmetic for GF(2^m) groundwork.
//!
//! Polynomials over GF(2) are stored as bit masks (bit `i` = coefficient of
//! `x^i`), which is plenty for the degrees used here (m <= 9). The only
//! nontrivial service is the primitivity test backing the Galois-ring
//! constructor: `x` must have multiplicative order exactly `2^m - 1` in
//! `GF(2)[x] / (f)`.

/// Built-in primitive polynomials, one per supported odd degree.
///
/// The degree-m entry is a primitive polynomial of GF(2^m), encoded as a bit
/// mask. Callers may override the choice, but a fixed default keeps golden
/// outputs reproducible.
pub const PRIMITIVE_POLYS: &[(usize, u64)] = &[
    (3, 0b1011),        // x^3 + x + 1
    (5, 0b100101),      // x^5 + x^2 + 1
    (7, 0b1000_1001),   // x^7 + x^3 + 1
    (9, 0b10_0001_0001), // x^9 + x^4 + 1
];

/// Looks up the default primitive polynomial for degree `m`.
pub fn default_primitive_poly(m: usize) -> Option<u64> {
    PRIMITIVE_POLYS
        .iter()
        .find(|(deg, _)| *deg == m)
        .map(|(_, p)| *p)
}

/// Degree of a nonzero bit-polynomial (`deg(1) = 0`); `None` for 0.
pub fn degree(p: u64) -> Option<usize> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros() as usize)
    }
}

/// Carry-less product of two bit-polynomials.
pub fn mul(a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 != 0 {
            out ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    out
}

/// Remainder of `a` modulo the nonzero polynomial `f`.
pub fn rem(mut a: u64, f: u64) -> u64 {
    let df = degree(f).expect("modulus must be nonzero");
    while let Some(da) = degree(a) {
        if da < df {
            break;
        }
        a ^= f << (da - df);
    }
    a
}

/// Multiplicative order of `x` in `GF(2)[x]/(f)`, or `None` if the powers of
/// `x` never return to 1 (which happens when `x` is a zero divisor).
///
/// The search is bounded by `2^m - 1`, the largest possible order.
pub fn order_of_x(f: u64) -> Option<u64> {
    let m = degree(f)?;
    if m == 0 {
        return None;
    }
    let bound = (1u64 << m) - 1;
    let mut acc = rem(0b10, f); // x mod f
    for k in 1..=bound {
        if acc == 1 {
            return Some(k);
        }
        acc = rem(mul(acc, 0b10), f);
    }
    None
}

/// True iff `f` is primitive over GF(2): `x` generates all `2^m - 1` units.
///
/// Primitivity implies irreducibility, so no separate factor test is needed:
/// if `x` has order `2^m - 1` the quotient ring has that many distinct units,
/// which forces it to be a field.
pub fn is_primitive(f: u64) -> bool {
    match degree(f) {
        Some(m) if m >= 1 => order_of_x(f) == Some((1u64 << m) - 1),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_in_table_is_primitive() {
        for &(m, p) in PRIMITIVE_POLYS {
            assert_eq!(degree(p), Some(m), "table degree for m={m}");
            assert!(is_primitive(p), "table entry for m={m} must be primitive");
        }
    }

    #[test]
    fn reducible_and_non_primitive_rejected() {
        // x^2 (reducible): x is nilpotent, never returns to 1.
        assert!(!is_primitive(0b100));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5 != 15.
        assert_eq!(order_of_x(0b11111), Some(5));
        assert!(!is_primitive(0b11111));
        // x^2 + 1 = (x+1)^2 is reducible; x^2 = 1 gives order 2 != 3.
        assert_eq!(order_of_x(0b101), Some(2));
        assert!(!is_primitive(0b101));
    }

    #[test]
    fn carry_less_product() {
        // (x + 1)(x^2 + x + 1) = x^3 + 1 over GF(2)
        assert_eq!(mul(0b11, 0b111), 0b1001);
        assert_eq!(rem(0b1001, 0b1011), 0b010); // x^3 + 1 mod x^3 + x + 1 = x
    }
}
