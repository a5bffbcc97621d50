//! Linearized polynomials `P(x) = Σ p_i x^[i]` over GF(2^127).
//!
//! A [`LinPoly`] is tied to a backend through its element type, so mixing
//! polynomial-basis and normal-basis coefficients is a type error rather than
//! a runtime one. Coefficient vectors are kept trimmed: no trailing zeros, and
//! the zero polynomial is the empty vector.
//!
//! Every routine takes the backend explicitly so that the counting wrappers
//! see each field operation.

use crate::field::{Field, M};
use crate::normal_basis::NormalOps;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinPolyError {
    #[error("point {0} lies in the GF(2)-span of the preceding points")]
    DependentPoints(usize),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("{points} points but {values} values")]
    LengthMismatch { points: usize, values: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Eq + Default> LinPoly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `c · x^[i]`.
    pub fn monomial(c: E, i: usize) -> Self {
        let mut coeffs = vec![E::default(); i + 1];
        coeffs[i] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<E>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == E::default()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// q-degree, `None` for the zero polynomial.
    pub fn qdeg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Number of stored coefficients (`qdeg + 1`, or 0).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<E: Copy + Eq + Default> LinPoly<E> {
    /// The identity map `x`.
    pub fn identity<F: Field<Elem = E>>(f: &F) -> Self {
        Self::monomial(f.one(), 0)
    }

    /// `P(a) = Σ p_i a^[i]`, raising `a` by successive squaring.
    pub fn eval<F: Field<Elem = E>>(&self, f: &F, a: E) -> E {
        let mut acc = f.zero();
        let mut pw = a;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pw = f.square(pw);
            }
            acc = f.add(acc, f.mul(c, pw));
        }
        acc
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = f.add(*c, s);
        }
        Self::from_coeffs(coeffs)
    }

    /// `c · P`.
    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: E) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&p| f.mul(c, p)).collect())
    }

    /// `self + c · other`.
    pub fn add_scaled<F: Field<Elem = E>>(&self, f: &F, c: E, other: &Self) -> Self {
        let len = self.len().max(other.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(&a), Some(&b)) => f.add(a, f.mul(c, b)),
                (Some(&a), None) => a,
                (None, Some(&b)) => f.mul(c, b),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// `x^[1] ∘ P`: coefficients squared, q-degrees raised by one.
    pub fn frobenius_left<F: Field<Elem = E>>(&self, f: &F) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.len() + 1);
        coeffs.push(f.zero());
        coeffs.extend(self.coeffs.iter().map(|&c| f.square(c)));
        Self { coeffs }
    }

    /// `x^[1] ∘ P + c · P`, the shape of the interpolation update.
    pub fn frobenius_plus_scaled<F: Field<Elem = E>>(&self, f: &F, c: E) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.len();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(f.mul(c, self.coeffs[0]));
        for i in 1..n {
            let sq = f.square(self.coeffs[i - 1]);
            coeffs.push(f.add(sq, f.mul(c, self.coeffs[i])));
        }
        coeffs.push(f.square(self.coeffs[n - 1]));
        Self::from_coeffs(coeffs)
    }

    /// `(A ∘ B)(x) = A(B(x))`, with coefficients `c_k = Σ_i a_i (b_{k−i})^[i]`.
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, b: &Self) -> Self {
        if self.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let mut out = vec![f.zero(); self.len() + b.len() - 1];
        let mut b_pow = b.coeffs.clone();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for c in &mut b_pow {
                    *c = f.square(*c);
                }
            }
            for (j, &bj) in b_pow.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, bj));
            }
        }
        Self::from_coeffs(out)
    }

    /// Left division `N = D ∘ Q + R` with `deg_q R < deg_q D`.
    pub fn left_divide<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Result<(Self, Self), LinPolyError> {
        let dd = d.qdeg().ok_or(LinPolyError::ZeroDivisor)?;
        let lead_inv = f.inv(d.coeffs[dd]).map_err(|_| LinPolyError::ZeroDivisor)?;
        let Some(dn) = self.qdeg().filter(|&dn| dn >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut rem = self.coeffs.clone();
        let mut q = vec![f.zero(); dn - dd + 1];
        for t in (0..=dn - dd).rev() {
            let top = rem[t + dd];
            if top == f.zero() {
                continue;
            }
            // d_dd · q_t^[dd] = top
            let qt = f.frobenius(f.mul(top, lead_inv), -(dd as i64));
            q[t] = qt;
            // subtract D ∘ (q_t x^[t]) = Σ_i d_i q_t^[i] x^[i+t]
            let mut pw = qt;
            for i in 0..=dd {
                if i > 0 {
                    pw = f.square(pw);
                }
                rem[t + i] = f.add(rem[t + i], f.mul(d.coeffs[i], pw));
            }
        }
        Ok((Self::from_coeffs(q), Self::from_coeffs(rem)))
    }

    /// The lowest `wanted` coefficients of the quotient of
    /// [`left_divide`](Self::left_divide), skipping the remainder.
    ///
    /// Only the coefficients of `N` at q-degree `≥ deg_q D` steer the quotient,
    /// so each step updates just those and obtains the needed power
    /// `q_t^[i] = (n_top / d_lead)^[i − deg D]` directly.
    pub fn left_quotient<F: Field<Elem = E>>(&self, f: &F, d: &Self, wanted: usize) -> Result<Self, LinPolyError> {
        let dd = d.qdeg().ok_or(LinPolyError::ZeroDivisor)?;
        let lead_inv = f.inv(d.coeffs[dd]).map_err(|_| LinPolyError::ZeroDivisor)?;
        let Some(dn) = self.qdeg().filter(|&dn| dn >= dd) else {
            return Ok(Self::zero());
        };
        // rem[s] holds the coefficient of q-degree dd + s
        let mut rem = self.coeffs[dd..].to_vec();
        let mut q = vec![f.zero(); dn - dd + 1];
        for t in (0..=dn - dd).rev() {
            let top = rem[t];
            if top == f.zero() {
                continue;
            }
            let ratio = f.mul(top, lead_inv);
            q[t] = f.frobenius(ratio, -(dd as i64));
            // d_i q_t^[i] lands on q-degree t + i ≥ dd for i ≥ dd − t
            let first = dd.saturating_sub(t);
            let mut pw = f.frobenius(ratio, first as i64 - dd as i64);
            for i in first..dd {
                if i > first {
                    pw = f.square(pw);
                }
                let s = t + i - dd;
                rem[s] = f.add(rem[s], f.mul(d.coeffs[i], pw));
            }
        }
        q.truncate(wanted);
        Ok(Self::from_coeffs(q))
    }

    /// The monic subspace polynomial of q-degree `|points|` vanishing on the
    /// span of `points`.
    pub fn annihilator<F: Field<Elem = E>>(f: &F, points: &[E]) -> Result<Self, LinPolyError> {
        let mut a = Self::identity(f);
        for (i, &g) in points.iter().enumerate() {
            let v = a.eval(f, g);
            if v == f.zero() {
                return Err(LinPolyError::DependentPoints(i));
            }
            a = a.frobenius_plus_scaled(f, v);
        }
        Ok(a)
    }

    /// The unique `I` with `deg_q I < |points|` and `I(points_i) = values_i`.
    pub fn interpolation<F: Field<Elem = E>>(f: &F, points: &[E], values: &[E]) -> Result<Self, LinPolyError> {
        Self::annihilator_and_interpolation(f, points, values).map(|(_, i)| i)
    }

    /// Annihilator and interpolation polynomial built side by side:
    /// `A_{i+1} = x^[1]∘A_i + A_i(g_i)·A_i` and
    /// `I_{i+1} = I_i + ((r_i − I_i(g_i)) / A_i(g_i))·A_i`.
    pub fn annihilator_and_interpolation<F: Field<Elem = E>>(
        f: &F,
        points: &[E],
        values: &[E],
    ) -> Result<(Self, Self), LinPolyError> {
        if points.len() != values.len() {
            return Err(LinPolyError::LengthMismatch {
                points: points.len(),
                values: values.len(),
            });
        }
        let mut a = Self::identity(f);
        let mut interp = Self::zero();
        for (i, (&g, &r)) in points.iter().zip(values).enumerate() {
            let ag = a.eval(f, g);
            let inv = f.inv(ag).map_err(|_| LinPolyError::DependentPoints(i))?;
            let miss = f.add(r, interp.eval(f, g));
            interp = interp.add_scaled(f, f.mul(miss, inv), &a);
            a = a.frobenius_plus_scaled(f, ag);
        }
        Ok((a, interp))
    }
}

/// `ã_i = Σ_j a_j α^[i+j]` for `i = 0..m`, `a` zero-padded to length m.
///
/// With a self-dual basis the map is an involution.
pub fn q_transform<F: NormalOps>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let idx: Vec<usize> = (0..M).collect();
    q_transform_at(f, a, &idx)
}

/// The entries `ã_i` for the listed indices only.
pub fn q_transform_at<F: NormalOps>(f: &F, a: &[F::Elem], indices: &[usize]) -> Vec<F::Elem> {
    assert!(a.len() <= M, "q-transform input longer than m");
    indices
        .iter()
        .map(|&i| {
            a.iter()
                .enumerate()
                .fold(f.zero(), |acc, (j, &aj)| f.add(acc, f.mul_alpha_pow(aj, (i + j) % M)))
        })
        .collect()
}
