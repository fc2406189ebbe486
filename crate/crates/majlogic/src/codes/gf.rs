//! Arithmetic in the binary extension fields `GF(2^s)` used by the geometry
//! builders.
//!
//! Elements are represented as integers `0..2^s` whose bits are polynomial
//! coefficients over `GF(2)`. Multiplication reduces modulo a fixed
//! irreducible polynomial per degree, so element enumeration — and therefore
//! point/line ordering in the generated codes — is fully deterministic.

use crate::{Error, Result};

/// Irreducible polynomials over GF(2), indexed by degree `s = 1..=6`.
/// Bit `i` is the coefficient of `x^i` (e.g. `0b1011` is `x^3 + x + 1`).
const IRREDUCIBLE: [u16; 6] = [0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011];

/// The field `GF(2^s)` with fixed polynomial-basis representation.
#[derive(Debug, Clone)]
pub struct BinaryField {
    s: u32,
    poly: u16,
}

impl BinaryField {
    /// Construct `GF(2^s)`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] unless `1 <= s <= 6` (the largest
    /// plane this crate builds is over `GF(64)`).
    pub fn new(s: u32) -> Result<Self> {
        if !(1..=6).contains(&s) {
            return Err(Error::param(format!(
                "field degree s must be in 1..=6, got {s}"
            )));
        }
        Ok(Self {
            s,
            poly: IRREDUCIBLE[(s - 1) as usize],
        })
    }

    /// Field degree `s`.
    pub fn degree(&self) -> u32 {
        self.s
    }

    /// Number of field elements, `2^s`.
    pub fn order(&self) -> u16 {
        1 << self.s
    }

    /// Addition (= subtraction): coefficient-wise XOR.
    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        a ^ b
    }

    /// Multiplication modulo the field polynomial.
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        debug_assert!(a < self.order() && b < self.order());
        let mut a = u32::from(a);
        let mut b = u32::from(b);
        let mut acc = 0u32;
        let high = 1u32 << self.s;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & high != 0 {
                a ^= u32::from(self.poly);
            }
        }
        acc as u16
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics if `a == 0`; zero has no inverse.
    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "0 has no multiplicative inverse");
        // a^(2^s - 2) by square-and-multiply; the group has order 2^s - 1.
        let mut exp = (u32::from(self.order()) - 2) as u16;
        let mut base = a;
        let mut acc = 1u16;
        while exp != 0 {
            if exp & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}
