//! Search for a low-complexity self-dual normal basis of GF(2^127).
//!
//! Candidates are Gauss periods of even type `t` (these are self-dual), tried
//! in increasing `t`, followed by seeded random elements. For a Gauss period
//! the multiplication table is known combinatorially, so the field can be
//! worked in abstractly; the minimal polynomial of the normal element is
//! computed there and one of its roots is located in the polynomial basis by
//! trace splitting. The resulting element is then re-verified from scratch in
//! the polynomial basis by [`NormalBasisCtx::from_alpha_self_dual`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, M};
use crate::normal_basis::{BasisError, MulTable, NormalBasisCtx, NormalFieldElement};
use crate::poly_basis::{poly_add, poly_inv, poly_mul, poly_square, FieldElement, PolyBasis};

/// Candidates tried by [`build_normal_basis`].
pub const DEFAULT_BUDGET: usize = 64;

/// Largest Gauss period type considered before falling back to random
/// candidates.
const MAX_GAUSS_TYPE: usize = 40;

pub fn build_normal_basis(search_seed: u64) -> Result<NormalBasisCtx, BasisError> {
    build_normal_basis_with_budget(search_seed, DEFAULT_BUDGET)
}

pub fn build_normal_basis_with_budget(search_seed: u64, budget: usize) -> Result<NormalBasisCtx, BasisError> {
    let mut rng = ChaCha8Rng::seed_from_u64(search_seed);
    let mut tried = 0usize;

    for t in (2..=MAX_GAUSS_TYPE).step_by(2) {
        if tried >= budget {
            return Err(BasisError::SearchExhausted { budget });
        }
        tried += 1;
        let Some(rows) = gauss_period_rows(t) else {
            continue;
        };
        let table = MulTable::from_product_rows(rows.clone());
        let minpoly = minimal_polynomial(&table);
        let alpha = find_root(minpoly, &mut rng);
        let ctx = NormalBasisCtx::from_alpha_self_dual(alpha)?;
        if let Some(v) = (0..M).find(|&v| ctx.table().product_rows()[v] != rows[v]) {
            return Err(BasisError::TableMismatch(v));
        }
        return Ok(ctx);
    }

    while tried < budget {
        tried += 1;
        let alpha = PolyBasis.random_nonzero(&mut rng);
        if let Ok(ctx) = NormalBasisCtx::from_alpha(alpha) {
            if ctx.is_self_dual() {
                return Ok(ctx);
            }
        }
    }
    Err(BasisError::SearchExhausted { budget })
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_mod(mut b: usize, mut e: usize, p: usize) -> usize {
    let mut r = 1usize;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn primitive_root(p: usize) -> usize {
    let n = p - 1;
    let mut factors = Vec::new();
    let mut x = n;
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            factors.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        factors.push(x);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, n / q, p) != 1))
        .expect("a prime has a primitive root")
}

/// Product rows `α·α^[v]` of the type-`t` Gauss period normal basis, when it
/// exists (`p = t·m + 1` prime and `2` together with the order-`t` subgroup
/// generating `Z_p^*`).
pub fn gauss_period_rows(t: usize) -> Option<Vec<u128>> {
    let p = t * M + 1;
    if !is_prime(p) {
        return None;
    }
    let g = primitive_root(p);
    let h = pow_mod(g, (p - 1) / t, p);
    let subgroup: Vec<usize> = (0..t).map(|e| pow_mod(h, e, p)).collect();

    // coset[x] = i with x in 2^i K
    let mut coset = vec![usize::MAX; p];
    let mut two_pow = 1usize;
    for i in 0..M {
        for &k in &subgroup {
            let x = two_pow * k % p;
            if coset[x] != usize::MAX {
                return None;
            }
            coset[x] = i;
        }
        two_pow = two_pow * 2 % p;
    }

    let all_ones = (1u128 << M) - 1;
    let rows = (0..M)
        .map(|v| {
            let s = pow_mod(2, v, p);
            subgroup.iter().fold(0u128, |row, &w| {
                let x = (1 + s * w) % p;
                if x == 0 {
                    // Σ_K γ^0 = t·1
                    if t % 2 == 1 {
                        row ^ all_ones
                    } else {
                        row
                    }
                } else {
                    row ^ (1u128 << coset[x])
                }
            })
        })
        .collect();
    Some(rows)
}

/// `Π_i (X + α^[i])` computed with the abstract table; returned as a GF(2)
/// coefficient mask (bit `j` = coefficient of `X^j`, bit 127 the leading one).
fn minimal_polynomial(table: &MulTable) -> u128 {
    let mut f = vec![NormalFieldElement::ONE];
    for i in 0..M {
        let root = NormalFieldElement::basis(i as i64);
        let mut next = vec![NormalFieldElement::ZERO; f.len() + 1];
        for (j, &c) in f.iter().enumerate() {
            next[j + 1] = crate::normal_basis::nb_add(next[j + 1], c);
            next[j] = crate::normal_basis::nb_add(next[j], table.mul(root, c));
        }
        f = next;
    }
    f.iter().enumerate().fold(0u128, |acc, (j, &c)| {
        if c == NormalFieldElement::ONE {
            acc | (1u128 << j)
        } else {
            assert!(c.is_zero(), "minimal polynomial has a coefficient outside GF(2)");
            acc
        }
    })
}

// Dense polynomials over GF(2^127), index = degree, no trailing zeros.
type Poly = Vec<FieldElement>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder modulo a monic polynomial.
fn rem_monic(mut r: Poly, g: &Poly) -> Poly {
    let d = g.len() - 1;
    while r.len() > d {
        let top = r.len() - 1;
        let c = r[top];
        r.pop();
        if !c.is_zero() {
            let shift = top - d;
            for j in 0..d {
                r[shift + j] = poly_add(r[shift + j], poly_mul(c, g[j]));
            }
        }
    }
    trim(&mut r);
    r
}

fn make_monic(mut p: Poly) -> Poly {
    let lead = *p.last().expect("nonzero polynomial");
    let inv = poly_inv(lead).expect("nonzero leading coefficient");
    for c in &mut p {
        *c = poly_mul(*c, inv);
    }
    p
}

fn gcd(a: Poly, b: Poly) -> Poly {
    let (mut a, mut b) = (make_monic(a), b);
    trim(&mut b);
    while !b.is_empty() {
        let b_monic = make_monic(b);
        let r = rem_monic(a, &b_monic);
        a = b_monic;
        b = r;
    }
    a
}

fn div_monic(mut n: Poly, g: &Poly) -> Poly {
    let d = g.len() - 1;
    let mut q = vec![FieldElement::ZERO; n.len() - d];
    while n.len() > d {
        let top = n.len() - 1;
        let c = n.pop().unwrap();
        q[top - d] = c;
        for j in 0..d {
            n[top - d + j] = poly_add(n[top - d + j], poly_mul(c, g[j]));
        }
    }
    q
}

/// One root of a polynomial over GF(2) with 127 distinct roots in GF(2^127).
fn find_root(minpoly: u128, rng: &mut ChaCha8Rng) -> FieldElement {
    let mut g: Poly = (0..128)
        .map(|j| {
            if (minpoly >> j) & 1 == 1 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        })
        .collect();
    trim(&mut g);

    while g.len() > 2 {
        let delta = PolyBasis.random_nonzero(rng);
        // Σ_{i<m} (δX)^(2^i) mod g; vanishes exactly at the roots θ with Tr(δθ) = 0
        let mut w = rem_monic(vec![FieldElement::ZERO, delta], &g);
        let mut tr = w.clone();
        for _ in 1..M {
            let mut sq = vec![FieldElement::ZERO; (2 * w.len()).saturating_sub(1)];
            for (i, &c) in w.iter().enumerate() {
                sq[2 * i] = poly_square(c);
            }
            w = rem_monic(sq, &g);
            if tr.len() < w.len() {
                tr.resize(w.len(), FieldElement::ZERO);
            }
            for (t, &c) in tr.iter_mut().zip(&w) {
                *t = poly_add(*t, c);
            }
        }
        trim(&mut tr);
        if tr.is_empty() {
            continue;
        }
        let h = gcd(g.clone(), tr);
        let dh = h.len() - 1;
        let dg = g.len() - 1;
        if dh == 0 || dh == dg {
            continue;
        }
        g = if 2 * dh <= dg { h } else { div_monic(g.clone(), &h) };
    }
    // monic X + c has root c
    g[0]
}
