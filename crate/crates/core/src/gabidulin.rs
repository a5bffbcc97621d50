//! Gabidulin codes over GF(2^127): generation, encoding, parity-check
//! support, rank-τ error sampling, and the transform-domain precomputation.
//!
//! Codes are stored in the polynomial basis; [`tdd_precompute`] carries the
//! pieces the transform-domain decoder needs over to the normal basis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, M};
use crate::gf2::{rank_of_rows, BitMatrix};
use crate::normal_basis::{NormalBasisCtx, NormalFieldElement};
use crate::poly_basis::{FieldElement, PolyBasis};

/// Codes tried by [`GabidulinCode::generate`] before giving up.
const GEN_ATTEMPTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("invalid code parameters n = {n}, k = {k} (need 0 < k < n <= 127)")]
    BadParams { n: usize, k: usize },
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("generating elements are not linearly independent over GF(2)")]
    DependentSupport,
    #[error("no parity-check support of full rank found")]
    NoDualSupport,
    #[error("generator submatrix is singular")]
    SingularSubmatrix,
    #[error("support matrix of the parity-check code lacks full column rank")]
    RankDeficientTransform,
    #[error("malformed code description: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabidulinCode {
    n: usize,
    k: usize,
    g: Vec<FieldElement>,
    h: Vec<FieldElement>,
}

impl GabidulinCode {
    /// A random code with GF(2)-independent generating elements, determined
    /// by `seed`.
    pub fn generate(n: usize, k: usize, seed: u64) -> Result<Self, CodeError> {
        check_params(n, k)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..GEN_ATTEMPTS {
            let g = random_independent(&PolyBasis, n, &mut rng);
            match Self::from_support(g, k) {
                Err(CodeError::NoDualSupport) => continue,
                other => return other,
            }
        }
        Err(CodeError::NoDualSupport)
    }

    /// The code with generating elements `g`; the parity-check support is
    /// computed here.
    pub fn from_support(g: Vec<FieldElement>, k: usize) -> Result<Self, CodeError> {
        let n = g.len();
        check_params(n, k)?;
        if rank_of(&PolyBasis, &g) != n {
            return Err(CodeError::DependentSupport);
        }
        let h = dual_support(&g, k)?;
        Ok(Self { n, k, g, h })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum rank distance `n − k + 1`.
    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn tau_max(&self) -> usize {
        (self.n - self.k) / 2
    }

    pub fn g(&self) -> &[FieldElement] {
        &self.g
    }

    pub fn h(&self) -> &[FieldElement] {
        &self.h
    }

    /// `G_{i,j} = g_j^[i]`, `k × n`.
    pub fn generator_matrix(&self) -> Vec<Vec<FieldElement>> {
        moore_matrix(&PolyBasis, &self.g, 0, self.k)
    }

    /// `H'_{i,j} = h_j^[i]`, `(n − k) × n`.
    pub fn parity_check_matrix(&self) -> Vec<Vec<FieldElement>> {
        moore_matrix(&PolyBasis, &self.h, 0, self.n - self.k)
    }

    /// `c_j = Σ_i msg_i g_j^[i]`.
    pub fn encode(&self, msg: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        encode_with(&PolyBasis, &self.g, msg, self.k)
    }

    /// One line `n k`, then the `g` and `h` elements as hex, one per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k);
        for e in self.g.iter().chain(&self.h) {
            s.push_str(&e.to_hex());
            s.push('\n');
        }
        s
    }

    /// Parses [`to_text`](Self::to_text) output and re-checks the code.
    pub fn from_text(text: &str) -> Result<Self, CodeError> {
        let bad = |m: &str| CodeError::Format(m.to_string());
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let mut it = header.split_whitespace().map(str::parse::<usize>);
        let (Some(Ok(n)), Some(Ok(k)), None) = (it.next(), it.next(), it.next()) else {
            return Err(bad("header must be `n k`"));
        };
        check_params(n, k)?;
        let elems = lines
            .map(|l| FieldElement::from_hex(l.trim()).map_err(|e| CodeError::Format(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if elems.len() != 2 * n {
            return Err(bad("expected 2n elements"));
        }
        let code = Self::from_support(elems[..n].to_vec(), k)?;
        if code.h != elems[n..] {
            // a scalar multiple of the stored support is equally valid
            let h = elems[n..].to_vec();
            if !is_dual_support(&code.g, &h, k) || rank_of(&PolyBasis, &h) != n {
                return Err(bad("stored parity-check support is invalid"));
            }
            return Ok(Self { h, ..code });
        }
        Ok(code)
    }
}

fn check_params(n: usize, k: usize) -> Result<(), CodeError> {
    if k == 0 || k >= n || n > M {
        return Err(CodeError::BadParams { n, k });
    }
    Ok(())
}

/// Rows `lo..hi` of the Moore matrix of `v`: entry `(i, j)` is `v_j^[lo + i]`.
pub fn moore_matrix<F: Field>(f: &F, v: &[F::Elem], lo: i64, rows: usize) -> Vec<Vec<F::Elem>> {
    let mut row: Vec<_> = v.iter().map(|&x| f.frobenius(x, lo)).collect();
    let mut out = Vec::with_capacity(rows);
    for i in 0..rows {
        if i > 0 {
            row = row.iter().map(|&x| f.square(x)).collect();
        }
        out.push(row.clone());
    }
    out
}

/// Encoding against generating elements given in any backend.
pub fn encode_with<F: Field>(f: &F, g: &[F::Elem], msg: &[F::Elem], k: usize) -> Result<Vec<F::Elem>, CodeError> {
    if msg.len() != k {
        return Err(CodeError::LengthMismatch {
            expected: k,
            got: msg.len(),
        });
    }
    Ok(g.iter()
        .map(|&gj| {
            let mut pw = gj;
            let mut acc = f.zero();
            for (i, &mi) in msg.iter().enumerate() {
                if i > 0 {
                    pw = f.square(pw);
                }
                acc = f.add(acc, f.mul(mi, pw));
            }
            acc
        })
        .collect())
}

/// GF(2)-rank of the coordinate matrix of `v`.
pub fn rank_of<F: Field>(f: &F, v: &[F::Elem]) -> usize {
    let rows: Vec<u128> = v.iter().map(|&x| f.coords(x)).collect();
    rank_of_rows(&rows)
}

/// `n` elements, GF(2)-independent, by rejection sampling.
pub fn random_independent<F: Field, R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Vec<F::Elem> {
    assert!(n <= M);
    loop {
        let v: Vec<_> = (0..n).map(|_| f.random(rng)).collect();
        if rank_of(f, &v) == n {
            return v;
        }
    }
}

fn is_dual_support(g: &[FieldElement], h: &[FieldElement], k: usize) -> bool {
    let n = g.len();
    let f = PolyBasis;
    (-(n as i64 - k as i64 - 1)..k as i64).all(|l| {
        g.iter()
            .zip(h)
            .fold(f.zero(), |acc, (&gj, &hj)| f.add(acc, f.mul(hj, f.frobenius(gj, l))))
            .is_zero()
    })
}

/// The support `h` of the parity-check code: a kernel vector of the Moore
/// system `Σ_j h_j g_j^[l] = 0`, `l = −(n−k−1), …, k−1`, of full GF(2)-rank.
///
/// Raising the equation for `l = t − i` to the power `[i]` gives
/// `Σ_j h_j^[i] g_j^[t] = 0`, i.e. `H'·Gᵀ = 0`.
pub fn dual_support(g: &[FieldElement], k: usize) -> Result<Vec<FieldElement>, CodeError> {
    let n = g.len();
    check_params(n, k)?;
    let f = PolyBasis;
    let lo = -(n as i64 - k as i64 - 1);
    let system = moore_matrix(&f, g, lo, n - 1);
    let h = kernel_vector(&f, system).ok_or(CodeError::NoDualSupport)?;
    if rank_of(&f, &h) != n {
        return Err(CodeError::NoDualSupport);
    }
    Ok(h)
}

/// The kernel vector of an `(n−1) × n` system of rank `n − 1`, normalised so
/// its free coordinate is 1. `None` when the rank is lower.
fn kernel_vector<F: Field>(f: &F, mut a: Vec<Vec<F::Elem>>) -> Option<Vec<F::Elem>> {
    let rows = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::with_capacity(rows);
    let mut r = 0;
    for col in 0..n {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(a[i][col])) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(a[r][col]).expect("pivot is nonzero");
        for x in &mut a[r][col..] {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !f.is_zero(row[col]) {
                let c = row[col];
                for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = f.add(*x, f.mul(c, p));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut x = vec![f.zero(); n];
    x[free] = f.one();
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = a[row][free];
    }
    Some(x)
}

/// Inverse of a square matrix over GF(2^127) by Gauss-Jordan elimination.
pub fn invert_matrix<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix is not square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !f.is_zero(a[i][col]))?;
        a.swap(col, p);
        let inv = f.inv(a[col][col]).ok()?;
        for x in &mut a[col] {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != col && !f.is_zero(row[col]) {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.add(*x, f.mul(c, p));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A rank-`tau` error of length `n`: `e = a·B` with `a` a vector of `tau`
/// GF(2)-independent elements and `B` a full-rank `tau × n` binary matrix.
pub fn sample_error<F: Field, R: Rng + ?Sized>(f: &F, n: usize, tau: usize, rng: &mut R) -> Vec<F::Elem> {
    assert!(tau <= n && n <= M, "rank {tau} error of length {n}");
    if tau == 0 {
        return vec![f.zero(); n];
    }
    let a = random_independent(f, tau, rng);
    let mask = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let b = loop {
        let rows: Vec<u128> = (0..tau).map(|_| rng.gen::<u128>() & mask).collect();
        if rank_of_rows(&rows) == tau {
            break rows;
        }
    };
    (0..n)
        .map(|j| {
            a.iter()
                .zip(&b)
                .filter(|(_, &row)| (row >> j) & 1 == 1)
                .fold(f.zero(), |acc, (&ai, _)| f.add(acc, ai))
        })
        .collect()
}

/// A random decoding problem: code, message, rank-`tau` error and the
/// received word `encode(msg) + error`, all in the polynomial basis.
#[derive(Debug, Clone)]
pub struct DecodeInstance {
    pub code: GabidulinCode,
    pub msg: Vec<FieldElement>,
    pub error: Vec<FieldElement>,
    pub received: Vec<FieldElement>,
}

impl DecodeInstance {
    /// A fresh random code, message and error, determined by `seed`.
    pub fn random(n: usize, k: usize, tau: usize, seed: u64) -> Result<Self, CodeError> {
        let code = GabidulinCode::generate(n, k, seed)?;
        Self::for_code(code, tau, seed)
    }

    /// A random message and error for a given code.
    pub fn for_code(code: GabidulinCode, tau: usize, seed: u64) -> Result<Self, CodeError> {
        if tau > code.n {
            return Err(CodeError::BadParams { n: code.n, k: code.k });
        }
        let f = PolyBasis;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let msg: Vec<_> = (0..code.k).map(|_| f.random(&mut rng)).collect();
        let error = sample_error(&f, code.n, tau, &mut rng);
        let received = code
            .encode(&msg)?
            .iter()
            .zip(&error)
            .map(|(&c, &e)| f.add(c, e))
            .collect();
        Ok(Self {
            code,
            msg,
            error,
            received,
        })
    }
}

/// Transform-domain data for one code and one normal basis.
///
/// Column `j` of `A` holds the normal-basis coordinates of `h_j`, so that
/// `H' = H·A` for the fixed `H_{i,t} = α^[i+t]`. `A†` is a left inverse that
/// reads only the rows `rows` of `A`.
#[derive(Debug, Clone)]
pub struct TddPrecomp {
    n: usize,
    k: usize,
    a: BitMatrix,
    adag: BitMatrix,
    rows: Vec<usize>,
    g: Vec<NormalFieldElement>,
    gsub_inv: Vec<Vec<NormalFieldElement>>,
}

impl TddPrecomp {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn tau_max(&self) -> usize {
        (self.n - self.k) / 2
    }

    /// `m × n`.
    pub fn a(&self) -> &BitMatrix {
        &self.a
    }

    /// `n × m`.
    pub fn adag(&self) -> &BitMatrix {
        &self.adag
    }

    /// Rows of `A` that `A†` reads.
    pub fn selected_rows(&self) -> &[usize] {
        &self.rows
    }

    /// Generating elements in normal-basis coordinates.
    pub fn g(&self) -> &[NormalFieldElement] {
        &self.g
    }

    /// Inverse of the `k × k` Moore submatrix `[g_j^[i]]`, `i, j < k`.
    pub fn gsub_inv(&self) -> &[Vec<NormalFieldElement>] {
        &self.gsub_inv
    }
}

pub fn tdd_precompute(code: &GabidulinCode, ctx: &NormalBasisCtx) -> Result<TddPrecomp, CodeError> {
    let (n, k) = (code.n, code.k);
    let h: Vec<u128> = code.h.iter().map(|&x| ctx.from_poly(x).to_bits()).collect();
    let a_rows = (0..M)
        .map(|t| {
            h.iter()
                .enumerate()
                .fold(0u128, |row, (j, &hj)| row | (((hj >> t) & 1) << j))
        })
        .collect();
    let a = BitMatrix::from_rows(a_rows, n);
    let (adag, rows) = a.left_inverse().ok_or(CodeError::RankDeficientTransform)?;

    let g: Vec<_> = code.g.iter().map(|&x| ctx.from_poly(x)).collect();
    let gsub = moore_matrix(ctx, &g[..k], 0, k);
    let gsub_inv = invert_matrix(ctx, &gsub).ok_or(CodeError::SingularSubmatrix)?;
    Ok(TddPrecomp {
        n,
        k,
        a,
        adag,
        rows,
        g,
        gsub_inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ctx_file::shipped_ctx;

    #[test]
    fn parameters() {
        let c = GabidulinCode::generate(113, 3, 1).unwrap();
        assert_eq!((c.d(), c.tau_max()), (111, 55));
        let c = GabidulinCode::generate(4, 2, 1).unwrap();
        assert_eq!(c.tau_max(), 1);
        assert_eq!(rank_of(&PolyBasis, c.g()), 4);
        assert!(matches!(
            GabidulinCode::generate(3, 3, 0),
            Err(CodeError::BadParams { .. })
        ));
        assert!(matches!(
            GabidulinCode::generate(128, 3, 0),
            Err(CodeError::BadParams { .. })
        ));
        assert!(matches!(
            GabidulinCode::generate(5, 0, 0),
            Err(CodeError::BadParams { .. })
        ));
    }

    #[test]
    fn encode_examples() {
        let c = GabidulinCode::generate(10, 4, 2).unwrap();
        let mut unit = vec![FieldElement::ZERO; 4];
        unit[0] = FieldElement::ONE;
        assert_eq!(c.encode(&unit).unwrap(), c.g());
        assert_eq!(
            c.encode(&[FieldElement::ZERO; 4]).unwrap(),
            vec![FieldElement::ZERO; 10]
        );
        assert_eq!(
            c.encode(&[FieldElement::ONE]),
            Err(CodeError::LengthMismatch { expected: 4, got: 1 })
        );
    }

    #[test]
    fn small_dual_support_by_direct_product() {
        let c = GabidulinCode::generate(4, 2, 3).unwrap();
        let f = PolyBasis;
        let hp = c.parity_check_matrix();
        let g = c.generator_matrix();
        for hrow in &hp {
            for grow in &g {
                let s = hrow
                    .iter()
                    .zip(grow)
                    .fold(f.zero(), |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                assert!(s.is_zero());
            }
        }
        assert_eq!(rank_of(&f, c.h()), 4);
    }

    #[test]
    fn dependent_support_is_rejected() {
        let g = vec![FieldElement::ONE, FieldElement::monomial(1), FieldElement::from_bits(3)];
        assert_eq!(GabidulinCode::from_support(g, 1), Err(CodeError::DependentSupport));
    }

    #[test]
    fn error_rank_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert_eq!(sample_error(&PolyBasis, 10, 0, &mut rng), vec![FieldElement::ZERO; 10]);
        assert_eq!(rank_of(&PolyBasis, &[FieldElement::ZERO; 5]), 0);
        assert_eq!(rank_of(&PolyBasis, &[FieldElement::ONE; 7]), 1);
        let e = sample_error(&PolyBasis, 113, 55, &mut rng);
        assert_eq!(rank_of(&PolyBasis, &e), 55);
    }

    #[test]
    fn text_round_trip() {
        let c = GabidulinCode::generate(12, 5, 8).unwrap();
        assert_eq!(GabidulinCode::from_text(&c.to_text()).unwrap(), c);
        assert!(GabidulinCode::from_text("12 5\n00").is_err());
    }

    #[test]
    fn precompute_invariants() {
        let ctx = shipped_ctx();
        let c = GabidulinCode::generate(20, 4, 5).unwrap();
        let p = tdd_precompute(&c, ctx).unwrap();
        assert_eq!(p.adag().mul(p.a()), BitMatrix::identity(20));
        assert_eq!(p.selected_rows().len(), 20);
        // row 0 of H·A: Σ_t A_{t,j} α^[t] = h_j
        for j in 0..20 {
            let col: u128 = (0..M).fold(0, |acc, t| acc | ((p.a().get(t, j) as u128) << t));
            assert_eq!(ctx.to_poly(NormalFieldElement::from_bits(col)), c.h()[j]);
        }
        let gsub = moore_matrix(ctx, &p.g()[..4], 0, 4);
        for i in 0..4 {
            for j in 0..4 {
                let s = (0..4).fold(NormalFieldElement::ZERO, |acc, t| {
                    ctx.add(acc, ctx.mul(gsub[i][t], p.gsub_inv()[t][j]))
                });
                let want = if i == j {
                    NormalFieldElement::ONE
                } else {
                    NormalFieldElement::ZERO
                };
                assert_eq!(s, want);
            }
        }
    }
}
