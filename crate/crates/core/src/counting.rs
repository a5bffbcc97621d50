//! Instrumented field backends.
//!
//! The wrappers forward every operation to the real backend and bump a
//! counter owned by the wrapper, so counting never touches global state and
//! the plain backends stay pure. Counter names mirror the operations a decoder
//! calls: a normal-basis `mul` is two shift tables plus one table product,
//! every `frobenius`/table rotation is one q-power.

use std::cell::Cell;
use std::ops::{Add, AddAssign};

use rand::Rng;

use crate::field::{Field, FieldError};
use crate::normal_basis::{invert_chain, NormalBasisCtx, NormalFieldElement, NormalOps, ShiftTable};
use crate::poly_basis::{FieldElement, PolyBasis};

/// A snapshot of operation counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpTally {
    pub add: u64,
    pub multiply: u64,
    pub set_shift_table: u64,
    pub multiply_shift_tables: u64,
    pub mul_alpha_pow: u64,
    pub q_power: u64,
    pub square: u64,
    pub invert: u64,
}

impl Add for OpTally {
    type Output = OpTally;
    fn add(self, o: OpTally) -> OpTally {
        OpTally {
            add: self.add + o.add,
            multiply: self.multiply + o.multiply,
            set_shift_table: self.set_shift_table + o.set_shift_table,
            multiply_shift_tables: self.multiply_shift_tables + o.multiply_shift_tables,
            mul_alpha_pow: self.mul_alpha_pow + o.mul_alpha_pow,
            q_power: self.q_power + o.q_power,
            square: self.square + o.square,
            invert: self.invert + o.invert,
        }
    }
}

impl AddAssign for OpTally {
    fn add_assign(&mut self, o: OpTally) {
        *self = *self + o;
    }
}

#[derive(Debug, Default)]
struct Counters {
    add: Cell<u64>,
    multiply: Cell<u64>,
    set_shift_table: Cell<u64>,
    multiply_shift_tables: Cell<u64>,
    mul_alpha_pow: Cell<u64>,
    q_power: Cell<u64>,
    square: Cell<u64>,
    invert: Cell<u64>,
}

#[inline]
fn bump(c: &Cell<u64>) {
    c.set(c.get() + 1);
}

impl Counters {
    fn tally(&self) -> OpTally {
        OpTally {
            add: self.add.get(),
            multiply: self.multiply.get(),
            set_shift_table: self.set_shift_table.get(),
            multiply_shift_tables: self.multiply_shift_tables.get(),
            mul_alpha_pow: self.mul_alpha_pow.get(),
            q_power: self.q_power.get(),
            square: self.square.get(),
            invert: self.invert.get(),
        }
    }

    fn reset(&self) {
        for c in [
            &self.add,
            &self.multiply,
            &self.set_shift_table,
            &self.multiply_shift_tables,
            &self.mul_alpha_pow,
            &self.q_power,
            &self.square,
            &self.invert,
        ] {
            c.set(0);
        }
    }
}

/// Polynomial-basis backend that counts its calls.
///
/// `frobenius` keeps the default repeated squaring, so q-powers show up as
/// squares, which is what they cost in this basis.
#[derive(Debug, Default)]
pub struct CountingPoly {
    counts: Counters,
}

impl CountingPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tally(&self) -> OpTally {
        self.counts.tally()
    }

    pub fn reset(&self) {
        self.counts.reset();
    }
}

impl Field for CountingPoly {
    type Elem = FieldElement;
    const CYCLIC_FROBENIUS: bool = false;

    fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        bump(&self.counts.add);
        PolyBasis.add(a, b)
    }

    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        bump(&self.counts.multiply);
        PolyBasis.mul(a, b)
    }

    fn square(&self, a: FieldElement) -> FieldElement {
        bump(&self.counts.square);
        PolyBasis.square(a)
    }

    fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        bump(&self.counts.invert);
        PolyBasis.inv(a)
    }

    fn coords(&self, a: FieldElement) -> u128 {
        PolyBasis.coords(a)
    }

    fn from_coords(&self, bits: u128) -> FieldElement {
        PolyBasis.from_coords(bits)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        PolyBasis.random(rng)
    }
}

/// Normal-basis backend that counts its calls.
///
/// Counting follows call semantics: an inversion is one `invert` call, and the
/// inversion chain runs through the wrapper, so the table products, shift
/// tables and q-powers (table rotations) it performs are counted as well.
#[derive(Debug)]
pub struct CountingNormal<'c> {
    ctx: &'c NormalBasisCtx,
    counts: Counters,
}

impl<'c> CountingNormal<'c> {
    pub fn new(ctx: &'c NormalBasisCtx) -> Self {
        Self {
            ctx,
            counts: Counters::default(),
        }
    }

    pub fn ctx(&self) -> &'c NormalBasisCtx {
        self.ctx
    }

    pub fn tally(&self) -> OpTally {
        self.counts.tally()
    }

    pub fn reset(&self) {
        self.counts.reset();
    }
}

impl Field for CountingNormal<'_> {
    type Elem = NormalFieldElement;
    const CYCLIC_FROBENIUS: bool = true;

    fn one(&self) -> NormalFieldElement {
        NormalFieldElement::ONE
    }

    fn add(&self, a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement {
        bump(&self.counts.add);
        self.ctx.add(a, b)
    }

    fn mul(&self, a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement {
        let (ta, tb) = (self.shift_table(a), self.shift_table(b));
        self.mul_tables(&ta, &tb)
    }

    fn square(&self, a: NormalFieldElement) -> NormalFieldElement {
        bump(&self.counts.square);
        self.ctx.square(a)
    }

    fn inv(&self, a: NormalFieldElement) -> Result<NormalFieldElement, FieldError> {
        bump(&self.counts.invert);
        invert_chain(self, a)
    }

    fn frobenius(&self, a: NormalFieldElement, i: i64) -> NormalFieldElement {
        bump(&self.counts.q_power);
        self.ctx.frobenius(a, i)
    }

    fn coords(&self, a: NormalFieldElement) -> u128 {
        a.to_bits()
    }

    fn from_coords(&self, bits: u128) -> NormalFieldElement {
        NormalFieldElement::from_bits(bits)
    }
}

impl NormalOps for CountingNormal<'_> {
    fn shift_table(&self, a: NormalFieldElement) -> ShiftTable {
        bump(&self.counts.set_shift_table);
        self.ctx.shift_table(a)
    }

    fn rotate_table(&self, t: &ShiftTable, s: i64) -> ShiftTable {
        bump(&self.counts.q_power);
        self.ctx.rotate_table(t, s)
    }

    fn mul_tables(&self, ta: &ShiftTable, tb: &ShiftTable) -> NormalFieldElement {
        bump(&self.counts.multiply_shift_tables);
        self.ctx.mul_tables(ta, tb)
    }

    fn mul_alpha_pow(&self, a: NormalFieldElement, i: usize) -> NormalFieldElement {
        bump(&self.counts.mul_alpha_pow);
        NormalOps::mul_alpha_pow(self.ctx, a, i)
    }
}
