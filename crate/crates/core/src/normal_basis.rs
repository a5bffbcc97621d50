//! GF(2^127) in a self-dual normal basis `{α^[0], …, α^[126]}`.
//!
//! Coordinates are stored like the polynomial basis: `lo` holds coordinates
//! 0..63, `hi` holds 64..126 with its top bit clear. The Frobenius map is a
//! cyclic rotation of the coordinate vector, multiplication goes through
//! shift tables (the `m` Frobenius powers of an operand), and multiplication
//! by a power of the normal element only touches the nonzero entries of the
//! multiplication table.
//!
//! The table itself lives in [`MulTable`]; [`NormalBasisCtx`] adds the link to
//! the polynomial basis (the normal element, conversion matrices, duality).

use std::fmt;

use crate::field::{join_limbs, split_limbs, Field, FieldError, COORD_MASK, HI_MASK, M};
use crate::gf2::BitMatrix;
use crate::poly_basis::{poly_mul, FieldElement};

/// An element of GF(2^127) in normal-basis coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NormalFieldElement {
    pub lo: u64,
    pub hi: u64,
}

impl NormalFieldElement {
    pub const ZERO: Self = Self { lo: 0, hi: 0 };
    /// `1 = Σ α^[i]`, the all-ones coordinate vector.
    pub const ONE: Self = Self {
        lo: u64::MAX,
        hi: HI_MASK,
    };

    pub const fn new(lo: u64, hi: u64) -> Self {
        Self { lo, hi: hi & HI_MASK }
    }

    /// The basis element `α^[i]` (unit vector `e_i`), `i` taken modulo m.
    pub fn basis(i: i64) -> Self {
        Self::from_bits(1u128 << i.rem_euclid(M as i64))
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

    pub fn to_hex(self) -> String {
        format!("{:016x}{:016x}", self.hi, self.lo)
    }
}

impl fmt::Debug for NormalFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N({})", self.to_hex())
    }
}

#[inline]
pub fn nb_add(a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement {
    NormalFieldElement {
        lo: a.lo ^ b.lo,
        hi: a.hi ^ b.hi,
    }
}

/// Cyclic rotation by `i` positions without the final mask: the top bit of the
/// high limb may be dirty.
#[inline]
fn rotate_unmasked(a: NormalFieldElement, i: i64) -> [u64; 2] {
    let j = i.rem_euclid(M as i64) as u32;
    let (l, u) = (a.lo, a.hi);
    if j == 0 {
        [l, u]
    } else if j <= 63 {
        [(l << j) | (u >> (63 - j)), (u << j) | (l >> (64 - j))]
    } else {
        // a^[j] = a^[j-m]: rotate the other way by k = m - j
        let k = 127 - j;
        [(l >> k) | (u << (64 - k)), (u >> k) | (l << (63 - k))]
    }
}

/// `a^[i]`: cyclic shift of the coordinate vector by `i mod m`.
#[inline]
pub fn nb_qpow(a: NormalFieldElement, i: i64) -> NormalFieldElement {
    let [lo, hi] = rotate_unmasked(a, i);
    NormalFieldElement { lo, hi: hi & HI_MASK }
}

/// The `m` Frobenius powers of one element: entry `i` is `a^[-i] = a^[m-i]`.
///
/// Entries are kept unmasked; their top bit is garbage until the product is
/// masked once at the end of [`MulTable::mul_shift_tables`].
#[derive(Clone)]
pub struct ShiftTable {
    entries: [[u64; 2]; M],
}

impl ShiftTable {
    pub fn new(a: NormalFieldElement) -> Self {
        let mut entries = [[0u64; 2]; M];
        for (i, e) in entries.iter_mut().enumerate() {
            *e = rotate_unmasked(a, -(i as i64));
        }
        Self { entries }
    }

    /// Entry `i` with the top bit cleared.
    pub fn entry(&self, i: usize) -> NormalFieldElement {
        let [lo, hi] = self.entries[i];
        NormalFieldElement::new(lo, hi)
    }

    /// The table of `a^[s]`, obtained by re-indexing this table of `a`.
    pub fn rotated(&self, s: i64) -> ShiftTable {
        let s = s.rem_euclid(M as i64) as usize;
        let mut entries = [[0u64; 2]; M];
        for (i, e) in entries.iter_mut().enumerate() {
            *e = self.entries[(i + M - s) % M];
        }
        Self { entries }
    }
}

impl fmt::Debug for ShiftTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShiftTable({:?}, ..)", self.entry(0))
    }
}

/// Multiplication table of a normal basis.
///
/// `rows[v]` holds the coordinates of `α · α^[v]`. The matrix `M` of
/// `a · α = M a` is the transpose: `M[r][v] = rows[v]` bit `r`.
#[derive(Clone)]
pub struct MulTable {
    rows: Vec<u128>,
    // per output coordinate r, the inputs j with M[r][j] = 1
    alpha_offsets: Vec<u16>,
    alpha_cols: Vec<u8>,
    // per shift-table index i, the indices j summed against T_a[i]
    table_offsets: Vec<u16>,
    table_cols: Vec<u8>,
}

impl fmt::Debug for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MulTable {{ complexity: {} }}", self.complexity())
    }
}

fn flatten(lists: Vec<Vec<u8>>) -> (Vec<u16>, Vec<u8>) {
    let mut offsets = Vec::with_capacity(lists.len() + 1);
    let mut flat = Vec::new();
    offsets.push(0);
    for l in lists {
        flat.extend_from_slice(&l);
        offsets.push(flat.len() as u16);
    }
    (offsets, flat)
}

impl MulTable {
    /// Builds the table from the product rows `α · α^[v]`, `v = 0..m`.
    pub fn from_product_rows(rows: Vec<u128>) -> Self {
        assert_eq!(rows.len(), M);
        assert!(rows.iter().all(|r| r & !COORD_MASK == 0));
        let bit = |v: usize, r: usize| (rows[v] >> r) & 1 == 1;

        let alpha_lists = (0..M)
            .map(|r| (0..M).filter(|&j| bit(j, r)).map(|j| j as u8).collect())
            .collect();
        // c_r = Σ_{i,j} a_{r+i} b_{r+j} [α^[r] in α^[r+i] α^[r+j]]
        //     = Σ_{i,j} a_{r+i} b_{r+j} rows[j-i] bit (-i)
        let table_lists = (0..M)
            .map(|i| {
                let neg_i = (M - i) % M;
                (0..M)
                    .filter(|&j| bit((j + M - i) % M, neg_i))
                    .map(|j| j as u8)
                    .collect()
            })
            .collect();

        let (alpha_offsets, alpha_cols) = flatten(alpha_lists);
        let (table_offsets, table_cols) = flatten(table_lists);
        Self {
            rows,
            alpha_offsets,
            alpha_cols,
            table_offsets,
            table_cols,
        }
    }

    /// `C_M`, the number of nonzero entries.
    pub fn complexity(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn product_rows(&self) -> &[u128] {
        &self.rows
    }

    /// Nonzero positions `(row, col)` of `M` (with `a·α = M a`), sorted.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        (0..M)
            .flat_map(|r| {
                let s = self.alpha_offsets[r] as usize;
                let e = self.alpha_offsets[r + 1] as usize;
                self.alpha_cols[s..e].iter().map(move |&j| (r, j as usize))
            })
            .collect()
    }

    /// `c = Σ_i T_a[i] & Σ_{j ∈ row i} T_b[j]`, masked once at the end.
    pub fn mul_shift_tables(&self, ta: &ShiftTable, tb: &ShiftTable) -> NormalFieldElement {
        let mut lo = 0u64;
        let mut hi = 0u64;
        for i in 0..M {
            let s = self.table_offsets[i] as usize;
            let e = self.table_offsets[i + 1] as usize;
            let mut acc_lo = 0u64;
            let mut acc_hi = 0u64;
            for &j in &self.table_cols[s..e] {
                let [l, u] = tb.entries[j as usize];
                acc_lo ^= l;
                acc_hi ^= u;
            }
            let [l, u] = ta.entries[i];
            lo ^= l & acc_lo;
            hi ^= u & acc_hi;
        }
        NormalFieldElement { lo, hi: hi & HI_MASK }
    }

    pub fn mul(&self, a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement {
        self.mul_shift_tables(&ShiftTable::new(a), &ShiftTable::new(b))
    }

    /// `a · α^[i] = (M a^[-i])^[i]`, summing only the nonzero table entries.
    pub fn mul_alpha_pow(&self, a: NormalFieldElement, i: usize) -> NormalFieldElement {
        let shifted = nb_qpow(a, -(i as i64));
        let (l, u) = (shifted.lo, shifted.hi);
        let mut out = [0u64; 2];
        for r in 0..M {
            let s = self.alpha_offsets[r] as usize;
            let e = self.alpha_offsets[r + 1] as usize;
            let mut bit = 0u64;
            for &k in &self.alpha_cols[s..e] {
                bit ^= if k < 64 { (l >> k) & 1 } else { (u >> (k - 64)) & 1 };
            }
            out[r / 64] |= bit << (r % 64);
        }
        nb_qpow(NormalFieldElement::new(out[0], out[1]), i as i64)
    }
}

/// Operations specific to the normal-basis backend.
pub trait NormalOps: Field<Elem = NormalFieldElement> {
    fn shift_table(&self, a: NormalFieldElement) -> ShiftTable;
    /// Table of `x^[s]` from the table of `x`.
    fn rotate_table(&self, t: &ShiftTable, s: i64) -> ShiftTable;
    fn mul_tables(&self, ta: &ShiftTable, tb: &ShiftTable) -> NormalFieldElement;
    fn mul_alpha_pow(&self, a: NormalFieldElement, i: usize) -> NormalFieldElement;
}

/// `a^-1 = (Π_{i=0}^{125} a^[i])^[1]`, with the exponent range 126 split as
/// `2·3·(1 + 2·2·(1 + 2·2))`.
///
/// Nine table products, nine shift tables, ten q-powers (eight of them as
/// table rotations). Every step evaluates its own q-powers as written, so
/// `a^[1]` is taken twice.
pub fn invert_chain<F: NormalOps>(f: &F, a: NormalFieldElement) -> Result<NormalFieldElement, FieldError> {
    if a.is_zero() {
        return Err(FieldError::InverseOfZero);
    }
    let ta = f.shift_table(a);

    // a1 = a · a^[1]
    let a1 = f.mul_tables(&ta, &f.rotate_table(&ta, 1));
    let t1 = f.shift_table(a1);

    // a2 = a^[1] · a1^[2] · a1^[4]
    let p = f.mul_tables(&f.rotate_table(&ta, 1), &f.rotate_table(&t1, 2));
    let a2 = f.mul_tables(&f.shift_table(p), &f.rotate_table(&t1, 4));
    let t2 = f.shift_table(a2);

    // a3 = a2 · a2^[5]
    let a3 = f.mul_tables(&t2, &f.rotate_table(&t2, 5));
    let t3 = f.shift_table(a3);

    // a4 = a · a3 · a3^[10]
    let p = f.mul_tables(&ta, &t3);
    let a4 = f.mul_tables(&f.shift_table(p), &f.rotate_table(&t3, 10));
    let t4 = f.shift_table(a4);

    // a5 = a4 · a4^[21] · a4^[42]
    let p = f.mul_tables(&t4, &f.rotate_table(&t4, 21));
    let a5 = f.mul_tables(&f.shift_table(p), &f.rotate_table(&t4, 42));
    let t5 = f.shift_table(a5);

    let prod = f.mul_tables(&t5, &f.rotate_table(&t5, 63));
    Ok(f.frobenius(prod, 1))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("the {0} conjugates of the candidate element are linearly dependent")]
    NotNormal(usize),
    #[error("basis is not self-dual: Tr(α^[{i}]·α^[{j}]) has the wrong value")]
    NotSelfDual { i: usize, j: usize },
    #[error("multiplication table complexity {0} is below the bound 2m-1")]
    ComplexityBelowBound(usize),
    #[error("multiplication table disagrees with the polynomial basis at row {0}")]
    TableMismatch(usize),
    #[error("no self-dual normal basis found within a budget of {budget} candidates")]
    SearchExhausted { budget: usize },
    #[error("context file: {0}")]
    Format(String),
}

/// A normal basis of GF(2^127) tied to the polynomial basis.
#[derive(Clone)]
pub struct NormalBasisCtx {
    table: MulTable,
    alpha: FieldElement,
    self_dual: bool,
    // row j = polynomial coordinates of α^[j]
    to_poly: BitMatrix,
    from_poly: BitMatrix,
}

impl fmt::Debug for NormalBasisCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NormalBasisCtx")
            .field("alpha", &self.alpha)
            .field("complexity", &self.complexity())
            .field("self_dual", &self.self_dual)
            .finish()
    }
}

/// Bit `i` is `Tr(x^i)` for the polynomial basis.
pub(crate) fn poly_trace_vector() -> u128 {
    use crate::poly_basis::poly_square;
    let mut v = 0u128;
    for i in 0..M {
        let x = FieldElement::monomial(i);
        let mut acc = FieldElement::ZERO;
        let mut p = x;
        for _ in 0..M {
            acc = crate::poly_basis::poly_add(acc, p);
            p = poly_square(p);
        }
        debug_assert!(acc.is_zero() || acc == FieldElement::ONE);
        if acc == FieldElement::ONE {
            v |= 1u128 << i;
        }
    }
    v
}

pub(crate) fn poly_trace(tr: u128, a: FieldElement) -> bool {
    (tr & a.to_bits()).count_ones() & 1 == 1
}

impl NormalBasisCtx {
    /// Derives and verifies the normal basis generated by `alpha` (given in
    /// the polynomial basis): normality by rank, the table from polynomial
    /// products, and self-duality through the trace.
    pub fn from_alpha(alpha: FieldElement) -> Result<Self, BasisError> {
        use crate::poly_basis::poly_square;
        let mut conj = Vec::with_capacity(M);
        let mut c = alpha;
        for _ in 0..M {
            conj.push(c.to_bits());
            c = poly_square(c);
        }
        let to_poly = BitMatrix::from_rows(conj, M);
        let from_poly = to_poly.inverse().ok_or(BasisError::NotNormal(M))?;

        let rows: Vec<u128> = (0..M)
            .map(|v| {
                let p = poly_mul(alpha, FieldElement::from_bits(to_poly.row(v)));
                from_poly.left_mul_row(p.to_bits())
            })
            .collect();
        let table = MulTable::from_product_rows(rows);
        if table.complexity() < 2 * M - 1 {
            return Err(BasisError::ComplexityBelowBound(table.complexity()));
        }

        let tr = poly_trace_vector();
        let self_dual = (0..M).all(|i| {
            (i..M).all(|j| {
                let p = poly_mul(
                    FieldElement::from_bits(to_poly.row(i)),
                    FieldElement::from_bits(to_poly.row(j)),
                );
                poly_trace(tr, p) == (i == j)
            })
        });

        Ok(Self {
            table,
            alpha,
            self_dual,
            to_poly,
            from_poly,
        })
    }

    /// Like [`from_alpha`](Self::from_alpha) but rejects bases that are not
    /// self-dual.
    pub fn from_alpha_self_dual(alpha: FieldElement) -> Result<Self, BasisError> {
        let ctx = Self::from_alpha(alpha)?;
        if !ctx.self_dual {
            let (i, j) = ctx.first_duality_violation().unwrap_or((0, 0));
            return Err(BasisError::NotSelfDual { i, j });
        }
        Ok(ctx)
    }

    fn first_duality_violation(&self) -> Option<(usize, usize)> {
        let m = self.trace_gram();
        (0..M)
            .flat_map(|i| (0..M).map(move |j| (i, j)))
            .find(|&(i, j)| m.get(i, j) != (i == j))
    }

    /// The matrix `Tr(α^[i] α^[j])`, computed in the polynomial basis.
    pub fn trace_gram(&self) -> BitMatrix {
        let tr = poly_trace_vector();
        let mut g = BitMatrix::zeros(M, M);
        for i in 0..M {
            for j in i..M {
                let p = poly_mul(self.to_poly_elem_row(i), self.to_poly_elem_row(j));
                let t = poly_trace(tr, p);
                g.set(i, j, t);
                g.set(j, i, t);
            }
        }
        g
    }

    fn to_poly_elem_row(&self, j: usize) -> FieldElement {
        FieldElement::from_bits(self.to_poly.row(j))
    }

    pub fn table(&self) -> &MulTable {
        &self.table
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual
    }

    pub fn complexity(&self) -> usize {
        self.table.complexity()
    }

    pub fn to_poly(&self, a: NormalFieldElement) -> FieldElement {
        FieldElement::from_bits(self.to_poly.left_mul_row(a.to_bits()))
    }

    pub fn from_poly(&self, a: FieldElement) -> NormalFieldElement {
        NormalFieldElement::from_bits(self.from_poly.left_mul_row(a.to_bits()))
    }

    pub fn to_poly_matrix(&self) -> &BitMatrix {
        &self.to_poly
    }

    pub fn from_poly_matrix(&self) -> &BitMatrix {
        &self.from_poly
    }

    pub fn nb_mul(&self, a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement {
        self.table.mul(a, b)
    }

    pub fn nb_inv(&self, a: NormalFieldElement) -> Result<NormalFieldElement, FieldError> {
        invert_chain(self, a)
    }

    pub fn make_shift_table(&self, a: NormalFieldElement) -> ShiftTable {
        ShiftTable::new(a)
    }

    pub fn nb_mul_alpha_pow(&self, a: NormalFieldElement, i: usize) -> NormalFieldElement {
        self.table.mul_alpha_pow(a, i)
    }
}

impl Field for NormalBasisCtx {
    type Elem = NormalFieldElement;
    const CYCLIC_FROBENIUS: bool = true;

    fn one(&self) -> NormalFieldElement {
        NormalFieldElement::ONE
    }
    fn add(&self, a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement {
        nb_add(a, b)
    }
    fn mul(&self, a: NormalFieldElement, b: NormalFieldElement) -> NormalFieldElement {
        self.table.mul(a, b)
    }
    fn square(&self, a: NormalFieldElement) -> NormalFieldElement {
        nb_qpow(a, 1)
    }
    fn inv(&self, a: NormalFieldElement) -> Result<NormalFieldElement, FieldError> {
        invert_chain(self, a)
    }
    fn frobenius(&self, a: NormalFieldElement, i: i64) -> NormalFieldElement {
        nb_qpow(a, i)
    }
    fn coords(&self, a: NormalFieldElement) -> u128 {
        a.to_bits()
    }
    fn from_coords(&self, bits: u128) -> NormalFieldElement {
        NormalFieldElement::from_bits(bits)
    }
}

impl NormalOps for NormalBasisCtx {
    fn shift_table(&self, a: NormalFieldElement) -> ShiftTable {
        ShiftTable::new(a)
    }
    fn rotate_table(&self, t: &ShiftTable, s: i64) -> ShiftTable {
        t.rotated(s)
    }
    fn mul_tables(&self, ta: &ShiftTable, tb: &ShiftTable) -> NormalFieldElement {
        self.table.mul_shift_tables(ta, tb)
    }
    fn mul_alpha_pow(&self, a: NormalFieldElement, i: usize) -> NormalFieldElement {
        self.table.mul_alpha_pow(a, i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ctx_file::shipped_ctx;
    use crate::poly_basis::{poly_inv, PolyBasis};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(127)
    }

    #[test]
    fn add_examples() {
        let ctx = shipped_ctx();
        let a = ctx.random(&mut rng());
        assert_eq!(nb_add(a, a), NormalFieldElement::ZERO);
        assert_eq!(nb_add(a, NormalFieldElement::ZERO), a);
        assert_eq!(
            nb_add(NormalFieldElement::ONE, NormalFieldElement::ONE),
            NormalFieldElement::ZERO
        );
    }

    #[test]
    fn qpow_examples() {
        let ctx = shipped_ctx();
        let mut r = rng();
        for _ in 0..50 {
            let a = ctx.random(&mut r);
            assert_eq!(nb_qpow(a, 0), a);
            assert_eq!(nb_qpow(a, 127), a);
            assert_eq!(nb_qpow(a, -3), nb_qpow(a, 124));
            assert_eq!(nb_qpow(nb_qpow(a, 70), 57), a);
        }
        for j in 0..127i64 {
            for i in [0i64, 1, 63, 64, 65, 126, 200, -1] {
                assert_eq!(
                    nb_qpow(NormalFieldElement::basis(j), i),
                    NormalFieldElement::basis(j + i)
                );
            }
        }
    }

    #[test]
    fn ones_is_multiplicative_identity() {
        let ctx = shipped_ctx();
        assert_eq!(ctx.to_poly(NormalFieldElement::ONE), FieldElement::ONE);
        let a = ctx.random(&mut rng());
        assert_eq!(ctx.nb_mul(a, NormalFieldElement::ONE), a);
    }

    #[test]
    fn shift_table_entries() {
        let ctx = shipped_ctx();
        let a = ctx.random(&mut rng());
        let t = ctx.make_shift_table(a);
        assert_eq!(t.entry(0), a);
        for i in 0..M {
            assert_eq!(nb_qpow(t.entry(i), i as i64), a);
        }
        let te = ctx.make_shift_table(NormalFieldElement::basis(0));
        for i in 0..M {
            assert_eq!(te.entry(i), NormalFieldElement::basis(-(i as i64)));
        }
        let rot = t.rotated(5);
        let direct = ShiftTable::new(nb_qpow(a, 5));
        for i in 0..M {
            assert_eq!(rot.entry(i), direct.entry(i));
        }
    }

    #[test]
    fn mul_alpha_pow_examples() {
        let ctx = shipped_ctx();
        for i in 0..M {
            assert_eq!(
                ctx.nb_mul_alpha_pow(NormalFieldElement::ONE, i),
                NormalFieldElement::basis(i as i64)
            );
        }
        // α · α^[j] is row j of the product table
        for j in 0..M {
            let got = ctx.nb_mul_alpha_pow(NormalFieldElement::basis(j as i64), 0);
            assert_eq!(got.to_bits(), ctx.table().product_rows()[j]);
        }
        let mut r = rng();
        for n in 0..1000 {
            let a = ctx.random(&mut r);
            let i = (n * 37) % M;
            assert_eq!(
                ctx.nb_mul_alpha_pow(a, i),
                ctx.nb_mul(a, NormalFieldElement::basis(i as i64))
            );
        }
    }

    #[test]
    fn inverse_examples() {
        let ctx = shipped_ctx();
        assert_eq!(ctx.nb_inv(NormalFieldElement::ONE).unwrap(), NormalFieldElement::ONE);
        let e0 = NormalFieldElement::basis(0);
        let expect = ctx.from_poly(poly_inv(ctx.to_poly(e0)).unwrap());
        assert_eq!(ctx.nb_inv(e0).unwrap(), expect);
        assert_eq!(ctx.nb_inv(NormalFieldElement::ZERO), Err(FieldError::InverseOfZero));
        let mut r = rng();
        for _ in 0..200 {
            let a = ctx.random_nonzero(&mut r);
            assert_eq!(ctx.nb_mul(a, ctx.nb_inv(a).unwrap()), NormalFieldElement::ONE);
        }
    }

    #[test]
    fn shipped_basis_properties() {
        let ctx = shipped_ctx();
        assert!(ctx.is_self_dual());
        assert!(ctx.complexity() >= 2 * M - 1);
        assert_eq!(ctx.trace_gram(), BitMatrix::identity(M));
        assert_eq!(ctx.to_poly_matrix().mul(ctx.from_poly_matrix()), BitMatrix::identity(M));
        for j in 0..M {
            let e = NormalFieldElement::basis(j as i64);
            assert_eq!(ctx.from_poly(ctx.to_poly(e)), e);
        }
        assert_eq!(ctx.to_poly(NormalFieldElement::basis(0)), ctx.alpha());
    }

    #[test]
    fn non_normal_element_is_rejected() {
        assert_eq!(
            NormalBasisCtx::from_alpha(FieldElement::ONE).unwrap_err(),
            BasisError::NotNormal(M)
        );
        // x generates a normal basis? either way it cannot be self-dual unless verified
        let x = FieldElement::monomial(1);
        if let Ok(ctx) = NormalBasisCtx::from_alpha(x) {
            assert!(!ctx.is_self_dual());
            assert!(matches!(
                NormalBasisCtx::from_alpha_self_dual(x),
                Err(BasisError::NotSelfDual { .. })
            ));
        }
        let _ = PolyBasis;
    }
}
