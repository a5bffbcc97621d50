//! Rank-metric coding over GF(2^127).
//!
//! Two interchangeable field backends (a polynomial basis modulo
//! `x^127 + x + 1` and a self-dual normal basis), linearized polynomials,
//! Gabidulin codes, and two decoders: the Welch-Berlekamp interpolation
//! decoder on the polynomial basis and the transform-domain decoder on the
//! normal basis. Operation counting wrappers make every decoder
//! instrumentable without touching the arithmetic.

pub mod basis_search;
pub mod counting;
pub mod ctx_file;
pub mod field;
pub mod gabidulin;
pub mod gf2;
pub mod linpoly;
pub mod normal_basis;
pub mod poly_basis;
pub mod tdd;
pub mod wba;

pub use field::{Field, FieldError, M};
pub use gabidulin::{CodeError, DecodeInstance, GabidulinCode, TddPrecomp};
pub use linpoly::{LinPoly, LinPolyError};
pub use normal_basis::{NormalBasisCtx, NormalFieldElement, NormalOps, ShiftTable};
pub use poly_basis::{FieldElement, PolyBasis};
