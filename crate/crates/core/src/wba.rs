//! Welch-Berlekamp interpolation decoder, generic over the field backend.
//!
//! Two pairs `(P0, Q0)`, `(P1, Q1)` are interpolated position by position.
//! The discrepancy of a pair at position `i` is `P(𝒜(g_i)) + Q(ℐ(g_i) − r_i)`,
//! tracked in `u0`/`u1`; after position `l` is processed both pairs vanish at
//! every position `≤ l`. The message is read off
//! `F = Q1 \ (P1 ∘ 𝒜) + ℐ` (left division).
//!
//! In constant-time mode the loop always runs `n − k` nominal iterations: a
//! zero pivot discrepancy is replaced by a seeded random nonzero value instead
//! of branching into a dummy step or stopping early. Only the control flow is
//! fixed; the field arithmetic itself is not hardened against timing.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::linpoly::{LinPoly, LinPolyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WbaMode {
    ConstantTime,
    EarlyExit,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WbaError {
    #[error("expected {expected} received symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("initialization failed: {0}")]
    Init(#[from] LinPolyError),
    #[error("zero pivot in a nominal interpolation step at position {0}")]
    ZeroPivot(usize),
    #[error("decoding failed: {0}")]
    Failure(&'static str),
}

#[derive(Debug, Clone)]
pub struct WbaState<E> {
    pub p0: LinPoly<E>,
    pub q0: LinPoly<E>,
    pub p1: LinPoly<E>,
    pub q1: LinPoly<E>,
    pub u0: Vec<E>,
    pub u1: Vec<E>,
    pub ann: LinPoly<E>,
    pub interp: LinPoly<E>,
    /// Next position to process.
    pub l: usize,
    /// Interpolation iterations executed so far.
    pub iterations: usize,
    /// True when the solution ended up in `(P0, Q0)`.
    solution_in_pair0: bool,
    k: usize,
}

impl<E> WbaState<E> {
    pub fn k(&self) -> usize {
        self.k
    }
}

/// `𝒜`, `ℐ` from the first `k` positions, the two starting pairs, and the
/// discrepancies of the remaining positions.
pub fn wba_init<F: Field>(f: &F, g: &[F::Elem], k: usize, r: &[F::Elem]) -> Result<WbaState<F::Elem>, WbaError> {
    let n = g.len();
    if r.len() != n {
        return Err(WbaError::LengthMismatch {
            expected: n,
            got: r.len(),
        });
    }
    let (ann, interp) = LinPoly::annihilator_and_interpolation(f, &g[..k], &r[..k])?;
    let mut u0 = vec![f.zero(); n];
    let mut u1 = vec![f.zero(); n];
    for i in k..n {
        u0[i] = ann.eval(f, g[i]);
        u1[i] = f.add(interp.eval(f, g[i]), r[i]);
    }
    Ok(WbaState {
        p0: LinPoly::identity(f),
        q0: LinPoly::zero(),
        p1: LinPoly::zero(),
        q1: LinPoly::identity(f),
        u0,
        u1,
        ann,
        interp,
        l: k,
        iterations: 0,
        solution_in_pair0: false,
        k,
    })
}

fn pivot<F: Field>(f: &F, s: &WbaState<F::Elem>) -> Option<usize> {
    (s.l..s.u0.len()).find(|&d| !f.is_zero(s.u1[d]) || f.is_zero(s.u0[d]))
}

/// Runs the interpolation loop over positions `l = k, …, n − 1`.
pub fn wba_interpolate<F: Field>(
    f: &F,
    mut s: WbaState<F::Elem>,
    mode: WbaMode,
    rng_seed: u64,
) -> Result<WbaState<F::Elem>, WbaError> {
    let n = s.u0.len();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    while s.l < n {
        let l = s.l;
        let d = match (pivot(f, &s), mode) {
            (Some(d), _) => d,
            (None, WbaMode::EarlyExit) => break,
            // every remaining u1 is zero and every u0 nonzero
            (None, WbaMode::ConstantTime) => l,
        };
        s.u0.swap(l, d);
        s.u1.swap(l, d);
        let (a0, a1) = (s.u0[l], s.u1[l]);

        let sigma = if !f.is_zero(a1) {
            a1
        } else if mode == WbaMode::ConstantTime {
            f.random_nonzero(&mut rng)
        } else {
            // dummy step: u0_l = u1_l = 0
            debug_assert!(f.is_zero(a0));
            let p1 = s.p1.frobenius_left(f);
            let q1 = s.q1.frobenius_left(f);
            s.p1 = std::mem::replace(&mut s.p0, p1);
            s.q1 = std::mem::replace(&mut s.q0, q1);
            for i in l + 1..n {
                let sq = f.square(s.u1[i]);
                s.u1[i] = s.u0[i];
                s.u0[i] = sq;
            }
            s.l += 1;
            s.iterations += 1;
            continue;
        };

        let inv = f.inv(sigma).map_err(|_| WbaError::ZeroPivot(l))?;
        let c = f.mul(a0, inv);
        let p1 = s.p1.frobenius_plus_scaled(f, sigma);
        let q1 = s.q1.frobenius_plus_scaled(f, sigma);
        let p0 = s.p0.add_scaled(f, c, &s.p1);
        let q0 = s.q0.add_scaled(f, c, &s.q1);
        // roles swap: the squared pair becomes pair 0
        (s.p0, s.q0, s.p1, s.q1) = (p1, q1, p0, q0);

        for i in l + 1..n {
            let (v0, v1) = (s.u0[i], s.u1[i]);
            s.u0[i] = f.add(f.square(v1), f.mul(sigma, v1));
            s.u1[i] = f.add(v0, f.mul(c, v1));
        }

        // With a substituted pivot the interpolating pair (old pair 1) was
        // only twisted on the left and now sits in pair 0.
        s.solution_in_pair0 = f.is_zero(a1) && !f.is_zero(a0);
        s.l += 1;
        s.iterations += 1;
    }
    Ok(s)
}

/// The first `k` coefficients of `F = Q \ (P ∘ 𝒜) + ℐ` for the interpolating
/// pair.
pub fn wba_finalize<F: Field>(f: &F, s: &WbaState<F::Elem>) -> Result<Vec<F::Elem>, WbaError> {
    let (p, q) = if s.solution_in_pair0 {
        (&s.p0, &s.q0)
    } else {
        (&s.p1, &s.q1)
    };
    if q.is_zero() {
        return Err(WbaError::Failure("error locator pair has Q = 0"));
    }
    let num = p.compose(f, &s.ann);
    let quot = num
        .left_quotient(f, q, s.k)
        .map_err(|_| WbaError::Failure("left division by zero"))?;
    let poly = quot.add(f, &s.interp);
    Ok((0..s.k).map(|i| poly.coeff(i)).collect())
}

/// Decodes `r` for the code with generating elements `g` and dimension `k`.
pub fn wba_decode<F: Field>(
    f: &F,
    g: &[F::Elem],
    k: usize,
    r: &[F::Elem],
    mode: WbaMode,
    seed: u64,
) -> Result<Vec<F::Elem>, WbaError> {
    let s = wba_init(f, g, k, r)?;
    let s = wba_interpolate(f, s, mode, seed)?;
    wba_finalize(f, &s)
}
