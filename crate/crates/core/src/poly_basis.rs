//! GF(2^127) in the polynomial basis modulo `x^127 + x + 1`.
//!
//! The coefficient of `x^i` lives at bit `i` of the limb pair: `lo` holds
//! `x^0..x^63`, `hi` holds `x^64..x^126` and keeps its top bit clear.
//!
//! Multiplication is a 4-bit windowed comb over a 16-entry table of `a·u`,
//! followed by reduction through `x^(127+i) = x^(i+1) + x^i`. Squaring spreads
//! the bits with an 8→16 bit interleave table and reuses the same reduction.

use std::fmt;
use std::str::FromStr;

use crate::field::{join_limbs, split_limbs, Field, FieldError, HI_MASK};

/// An element of GF(2^127) in the polynomial basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    pub lo: u64,
    pub hi: u64,
}

/// A product of two reduced elements before reduction: degree at most 252.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct UnreducedProduct(pub [u64; 4]);

impl FieldElement {
    pub const ZERO: Self = Self { lo: 0, hi: 0 };
    pub const ONE: Self = Self { lo: 1, hi: 0 };

    /// Builds an element, clearing the unused top bit.
    pub const fn new(lo: u64, hi: u64) -> Self {
        Self { lo, hi: hi & HI_MASK }
    }

    /// `x^i` for `i < 127`.
    pub fn monomial(i: usize) -> Self {
        assert!(i < 127);
        Self::from_bits(1u128 << i)
    }

    pub fn from_bits(bits: u128) -> Self {
        let (lo, hi) = split_limbs(bits);
        Self { lo, hi }
    }

    pub fn to_bits(self) -> u128 {
        join_limbs(self.lo, self.hi)
    }

    pub fn is_zero(self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    /// 32 hex digits, high limb first.
    pub fn to_hex(self) -> String {
        format!("{:016x}{:016x}", self.hi, self.lo)
    }

    pub fn from_hex(s: &str) -> Result<Self, ParseElementError> {
        let s = s.trim();
        if s.len() != 32 {
            return Err(ParseElementError::Length(s.len()));
        }
        let hi = u64::from_str_radix(&s[..16], 16).map_err(|_| ParseElementError::Digit)?;
        let lo = u64::from_str_radix(&s[16..], 16).map_err(|_| ParseElementError::Digit)?;
        if hi >> 63 != 0 {
            return Err(ParseElementError::TopBit);
        }
        Ok(Self { lo, hi })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseElementError {
    #[error("expected 32 hex digits, got {0}")]
    Length(usize),
    #[error("invalid hex digit")]
    Digit,
    #[error("bit 127 is set")]
    TopBit,
}

impl FromStr for FieldElement {
    type Err = ParseElementError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_hex(s)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({})", self.to_hex())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[inline]
pub fn poly_add(a: FieldElement, b: FieldElement) -> FieldElement {
    FieldElement {
        lo: a.lo ^ b.lo,
        hi: a.hi ^ b.hi,
    }
}

/// Carry-less product of two reduced elements.
pub fn poly_mul_unreduced(a: FieldElement, b: FieldElement) -> UnreducedProduct {
    // table[u] = a·u for every u of degree < 4, three limbs each
    let mut table = [[0u64; 3]; 16];
    let a0 = a.lo;
    let a1 = a.hi;
    table[1] = [a0, a1, 0];
    for u in 2..16usize {
        if u & 1 == 0 {
            let [t0, t1, t2] = table[u >> 1];
            table[u] = [t0 << 1, (t1 << 1) | (t0 >> 63), (t2 << 1) | (t1 >> 63)];
        } else {
            let [t0, t1, t2] = table[u - 1];
            table[u] = [t0 ^ a0, t1 ^ a1, t2];
        }
    }

    let b_limbs = [b.lo, b.hi];
    let mut c = [0u64; 4];
    for k in (0..16).rev() {
        for (j, &bj) in b_limbs.iter().enumerate() {
            let u = ((bj >> (4 * k)) & 0xf) as usize;
            let t = &table[u];
            c[j] ^= t[0];
            c[j + 1] ^= t[1];
            c[j + 2] ^= t[2];
        }
        if k != 0 {
            c[3] = (c[3] << 4) | (c[2] >> 60);
            c[2] = (c[2] << 4) | (c[1] >> 60);
            c[1] = (c[1] << 4) | (c[0] >> 60);
            c[0] <<= 4;
        }
    }
    UnreducedProduct(c)
}

/// Reduces a product of degree at most 252 modulo `x^127 + x + 1`.
#[inline]
pub fn poly_reduce(u: UnreducedProduct) -> FieldElement {
    let [u0, u1, u2, u3] = u.0;
    // coefficients 127..252 moved down to position 0..125
    let h_lo = (u1 >> 63) | (u2 << 1);
    let h_hi = (u2 >> 63) | (u3 << 1);
    let l_hi = u1 & HI_MASK;
    // x^(127+i) -> x^(i+1) + x^i
    let lo = u0 ^ h_lo ^ (h_lo << 1);
    let hi = l_hi ^ h_hi ^ ((h_hi << 1) | (h_lo >> 63));
    FieldElement { lo, hi }
}

#[inline]
pub fn poly_mul(a: FieldElement, b: FieldElement) -> FieldElement {
    poly_reduce(poly_mul_unreduced(a, b))
}

const fn interleave_table() -> [u16; 256] {
    let mut t = [0u16; 256];
    let mut i = 0;
    while i < 256 {
        let mut v = 0u16;
        let mut b = 0;
        while b < 8 {
            if (i >> b) & 1 == 1 {
                v |= 1 << (2 * b);
            }
            b += 1;
        }
        t[i] = v;
        i += 1;
    }
    t
}

static INTERLEAVE: [u16; 256] = interleave_table();

#[inline]
fn spread(word: u64) -> (u64, u64) {
    let mut lo = 0u64;
    let mut hi = 0u64;
    for byte in 0..4 {
        lo |= (INTERLEAVE[((word >> (8 * byte)) & 0xff) as usize] as u64) << (16 * byte);
        hi |= (INTERLEAVE[((word >> (8 * (byte + 4))) & 0xff) as usize] as u64) << (16 * byte);
    }
    (lo, hi)
}

pub fn poly_square(a: FieldElement) -> FieldElement {
    let (c0, c1) = spread(a.lo);
    let (c2, c3) = spread(a.hi);
    poly_reduce(UnreducedProduct([c0, c1, c2, c3]))
}

fn degree(v: u128) -> i32 {
    127 - v.leading_zeros() as i32
}

/// Inverse by the binary-polynomial extended Euclidean algorithm.
pub fn poly_inv(a: FieldElement) -> Result<FieldElement, FieldError> {
    if a.is_zero() {
        return Err(FieldError::InverseOfZero);
    }
    // invariants: g1·a = u, g2·a = v (mod f); deg g1, g2 < 127
    let f: u128 = (1u128 << 127) | 0b11;
    let mut u = a.to_bits();
    let mut v = f;
    let mut g1: u128 = 1;
    let mut g2: u128 = 0;
    while u != 1 {
        let mut j = degree(u) - degree(v);
        if j < 0 {
            std::mem::swap(&mut u, &mut v);
            std::mem::swap(&mut g1, &mut g2);
            j = -j;
        }
        u ^= v << j;
        g1 ^= g2 << j;
    }
    Ok(FieldElement::from_bits(g1))
}

/// The polynomial-basis backend.
#[derive(Debug, Clone, Copy, Default)]
pub struct PolyBasis;

impl Field for PolyBasis {
    type Elem = FieldElement;
    const CYCLIC_FROBENIUS: bool = false;

    fn one(&self) -> FieldElement {
        FieldElement::ONE
    }
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        poly_add(a, b)
    }
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        poly_mul(a, b)
    }
    fn square(&self, a: FieldElement) -> FieldElement {
        poly_square(a)
    }
    fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        poly_inv(a)
    }
    fn coords(&self, a: FieldElement) -> u128 {
        a.to_bits()
    }
    fn from_coords(&self, bits: u128) -> FieldElement {
        FieldElement::from_bits(bits)
    }
}
