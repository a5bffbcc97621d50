//! Transform-domain decoder on the normal basis.
//!
//! With the fixed parity-check matrix `H_{i,t} = α^[i+t]` the syndromes of
//! `r = A·r'` are the first `d − 1` coefficients of the q-transform of the
//! (length-m) error. Berlekamp-Massey finds the error span polynomial `Γ`,
//! the linear recurrence it defines fills in the remaining transform
//! coefficients, and the inverse transform (the forward one, the basis being
//! self-dual) followed by `A†` gives back the error on the code positions.
//!
//! `A†` only reads `n` rows of `A`, so the inverse transform is evaluated at
//! those `n` indices only.

use crate::field::{Field, M};
use crate::gabidulin::TddPrecomp;
use crate::linpoly::{q_transform_at, LinPoly};
use crate::normal_basis::NormalOps;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TddError {
    #[error("expected {expected} received symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("error span polynomial has q-degree {found}, more than the {tau_max} correctable")]
    TooManyErrors { found: usize, tau_max: usize },
}

/// Intermediate results of one decode.
#[derive(Debug, Clone)]
pub struct TddWork<E> {
    pub syndromes: Vec<E>,
    pub gamma: LinPoly<E>,
    pub tau: usize,
    pub e_tilde: Vec<E>,
    pub e_prime: Vec<E>,
    pub msg: Vec<E>,
}

/// Sum with one addition fewer than terms.
fn sum<F: Field>(f: &F, terms: impl IntoIterator<Item = F::Elem>) -> F::Elem {
    terms.into_iter().reduce(|a, b| f.add(a, b)).unwrap_or_else(|| f.zero())
}

/// `s_i = Σ_t r_t α^[i+t]`, `i = 0..d−1`, for `r = A·r'`.
pub fn tdd_syndromes<F: NormalOps>(f: &F, pre: &TddPrecomp, r_prime: &[F::Elem]) -> Vec<F::Elem> {
    let r: Vec<_> = (0..M)
        .map(|t| {
            let row = pre.a().row(t);
            sum(f, (0..pre.n()).filter(|&j| (row >> j) & 1 == 1).map(|j| r_prime[j]))
        })
        .collect();
    let idx: Vec<usize> = (0..pre.d() - 1).collect();
    q_transform_at(f, &r, &idx)
}

/// Berlekamp-Massey for `Σ_{i=0}^{L} γ_i s_{j−i}^[i] = 0`, `j = L..d−2`.
///
/// `B` is kept pre-shifted (`x^[1] ∘ B` every step) together with the inverse
/// of its discrepancy, Frobenius-twisted alongside, so that `B`'s discrepancy
/// at the current step is exactly that stored value.
pub fn tdd_bma<F: NormalOps>(f: &F, s: &[F::Elem], tau_max: usize) -> Result<LinPoly<F::Elem>, TddError> {
    let mut gamma = LinPoly::identity(f);
    let mut b = LinPoly::identity(f);
    let mut b_inv = f.one();
    let mut len = 0usize;
    for j in 0..s.len() {
        b = b.frobenius_left(f);
        b_inv = f.square(b_inv);

        let delta = (1..=len).fold(s[j], |acc, i| {
            let t = f.frobenius(s[j - i], i as i64);
            f.add(acc, f.mul(gamma.coeff(i), t))
        });
        if f.is_zero(delta) {
            continue;
        }
        let c = f.mul(delta, b_inv);
        let tc = f.shift_table(c);
        let correction: Vec<_> = b
            .coeffs()
            .iter()
            .map(|&bi| {
                if f.is_zero(bi) {
                    bi
                } else {
                    f.mul_tables(&tc, &f.shift_table(bi))
                }
            })
            .collect();
        let next = add_coeffs(f, &gamma, &correction);
        if 2 * len <= j {
            b = std::mem::replace(&mut gamma, next);
            b_inv = f.inv(delta).expect("nonzero discrepancy");
            len = j + 1 - len;
        } else {
            gamma = next;
        }
    }
    let tau = gamma.qdeg().unwrap_or(0);
    if len > tau_max || tau != len {
        return Err(TddError::TooManyErrors {
            found: len.max(tau),
            tau_max,
        });
    }
    Ok(gamma)
}

fn add_coeffs<F: Field>(f: &F, p: &LinPoly<F::Elem>, q: &[F::Elem]) -> LinPoly<F::Elem> {
    let n = p.len().max(q.len());
    LinPoly::from_coeffs(
        (0..n)
            .map(|i| match (p.coeffs().get(i), q.get(i)) {
                (Some(&a), Some(&b)) => f.add(a, b),
                (Some(&a), None) => a,
                (None, Some(&b)) => b,
                (None, None) => unreachable!(),
            })
            .collect(),
    )
}

/// `Σ_{i=0}^{τ} γ_i s_{j−i}^[i]` for `j = τ..len(s)−1`; all zero for a valid `Γ`.
pub fn key_equation_residuals<F: Field>(f: &F, gamma: &LinPoly<F::Elem>, s: &[F::Elem]) -> Vec<F::Elem> {
    let tau = gamma.qdeg().unwrap_or(0);
    (tau..s.len())
        .map(|j| {
            (0..=tau).fold(f.zero(), |acc, i| {
                f.add(acc, f.mul(gamma.coeff(i), f.frobenius(s[j - i], i as i64)))
            })
        })
        .collect()
}

/// The full transform-domain error: `ẽ_j = s_j` for `j < d − 1`, then
/// `ẽ_j = Σ_{i=1}^{τ} γ_i ẽ_{j−i}^[i]` up to `j = m − 1`.
pub fn tdd_extend<F: NormalOps>(f: &F, gamma: &LinPoly<F::Elem>, s: &[F::Elem]) -> Vec<F::Elem> {
    let tau = gamma.qdeg().unwrap_or(0);
    let mut e = s.to_vec();
    e.resize(M, f.zero());
    if tau == 0 {
        return e;
    }
    let tables: Vec<_> = (1..=tau).map(|i| f.shift_table(gamma.coeff(i))).collect();
    for j in s.len()..M {
        e[j] = sum(
            f,
            (1..=tau).map(|i| {
                let t = f.frobenius(e[(j + M - i) % M], i as i64);
                f.mul_tables(&tables[i - 1], &f.shift_table(t))
            }),
        );
    }
    e
}

/// Inverse transform at the rows `A†` reads, `e' = A†·e`, `c' = r' − e'`, and
/// the message `c'_sub · G_sub^{-1}`. Returns `(msg, e')`.
pub fn tdd_recover<F: NormalOps>(
    f: &F,
    pre: &TddPrecomp,
    e_tilde: &[F::Elem],
    r_prime: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let rows = pre.selected_rows();
    let mut e = vec![f.zero(); M];
    for (t, v) in rows.iter().zip(q_transform_at(f, e_tilde, rows)) {
        e[*t] = v;
    }
    let e_prime: Vec<_> = (0..pre.n())
        .map(|i| {
            let row = pre.adag().row(i);
            sum(f, (0..M).filter(|&t| (row >> t) & 1 == 1).map(|t| e[t]))
        })
        .collect();
    let c: Vec<_> = r_prime.iter().zip(&e_prime).map(|(&r, &x)| f.add(r, x)).collect();
    let k = pre.k();
    let inv = pre.gsub_inv();
    let msg = (0..k).map(|t| sum(f, (0..k).map(|j| f.mul(c[j], inv[j][t])))).collect();
    (msg, e_prime)
}

/// Every intermediate of a decode.
pub fn tdd_decode_work<F: NormalOps>(
    f: &F,
    pre: &TddPrecomp,
    r_prime: &[F::Elem],
) -> Result<TddWork<F::Elem>, TddError> {
    if r_prime.len() != pre.n() {
        return Err(TddError::LengthMismatch {
            expected: pre.n(),
            got: r_prime.len(),
        });
    }
    let syndromes = tdd_syndromes(f, pre, r_prime);
    let gamma = tdd_bma(f, &syndromes, pre.tau_max())?;
    let e_tilde = tdd_extend(f, &gamma, &syndromes);
    let (msg, e_prime) = tdd_recover(f, pre, &e_tilde, r_prime);
    Ok(TddWork {
        tau: gamma.qdeg().unwrap_or(0),
        syndromes,
        gamma,
        e_tilde,
        e_prime,
        msg,
    })
}

pub fn tdd_decode<F: NormalOps>(f: &F, pre: &TddPrecomp, r_prime: &[F::Elem]) -> Result<Vec<F::Elem>, TddError> {
    tdd_decode_work(f, pre, r_prime).map(|w| w.msg)
}
