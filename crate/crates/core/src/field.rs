//! Backend abstraction over the two GF(2^127) representations.
//!
//! Decoders and linearized-polynomial routines are written against [`Field`]
//! so the same code runs on the polynomial basis, the normal basis, and the
//! counting wrappers in [`crate::counting`].

use std::fmt::Debug;

use rand::Rng;

/// Extension degree `m`.
pub const M: usize = 127;

/// Mask of the 63 valid bits of the high limb.
pub const HI_MASK: u64 = (1u64 << 63) - 1;

/// Mask of the 127 valid coordinate bits.
pub const COORD_MASK: u128 = (1u128 << 127) - 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("inverse of zero")]
    InverseOfZero,
}

/// Arithmetic in GF(2^127) for one fixed basis.
pub trait Field {
    type Elem: Copy + Eq + Debug + Default;

    /// True when Frobenius powers are cyclic shifts of the coordinate vector.
    const CYCLIC_FROBENIUS: bool;

    fn zero(&self) -> Self::Elem {
        Self::Elem::default()
    }
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: Self::Elem) -> bool {
        a == Self::Elem::default()
    }

    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn square(&self, a: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem, FieldError>;

    /// `a^[i] = a^(2^i)` for any integer `i` (taken modulo m).
    ///
    /// The default raises by repeated squaring; backends where the Frobenius
    /// is a coordinate rotation override it.
    fn frobenius(&self, a: Self::Elem, i: i64) -> Self::Elem {
        let steps = i.rem_euclid(M as i64);
        let mut r = a;
        for _ in 0..steps {
            r = self.square(r);
        }
        r
    }

    /// Coordinate vector in this basis, bit `j` = coordinate `j`.
    fn coords(&self, a: Self::Elem) -> u128;
    fn from_coords(&self, bits: u128) -> Self::Elem;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.from_coords(rng.gen::<u128>() & COORD_MASK)
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let a = self.random(rng);
            if !self.is_zero(a) {
                return a;
            }
        }
    }
}

/// Splits 127 coordinate bits into the (lo, hi) limb pair.
#[inline]
pub(crate) fn split_limbs(bits: u128) -> (u64, u64) {
    (bits as u64, ((bits >> 64) as u64) & HI_MASK)
}

#[inline]
pub(crate) fn join_limbs(lo: u64, hi: u64) -> u128 {
    (lo as u128) | ((hi as u128) << 64)
}
