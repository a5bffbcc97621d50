//! Theoretical GF(2) operation counts of both decoders, step by step.
//!
//! Several cells carry a factor 1/2, so every count is kept in half units
//! (`*_x2`); totals are exact integer sums of the rows.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComplexityParams {
    pub n: u64,
    pub k: u64,
    pub m: u64,
    pub d: u64,
    pub tau: u64,
    pub c_m: u64,
    pub c_inv: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamsError {
    #[error("need 1 <= k < n <= m, got n = {n}, k = {k}, m = {m}")]
    Shape { n: u64, k: u64, m: u64 },
    #[error("d must be n - k + 1 = {expected}, got {got}")]
    Distance { expected: u64, got: u64 },
    #[error("tau = {tau} exceeds floor((n - k) / 2) = {max}")]
    Tau { tau: u64, max: u64 },
}

impl ComplexityParams {
    pub fn new(n: u64, k: u64, m: u64, tau: u64, c_m: u64, c_inv: u64) -> Result<Self, ParamsError> {
        let p = Self {
            n,
            k,
            m,
            d: n.saturating_sub(k) + 1,
            tau,
            c_m,
            c_inv,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ParamsError> {
        let &Self { n, k, m, d, tau, .. } = self;
        if k == 0 || k >= n || n > m {
            return Err(ParamsError::Shape { n, k, m });
        }
        if d != n - k + 1 {
            return Err(ParamsError::Distance {
                expected: n - k + 1,
                got: d,
            });
        }
        if tau > (n - k) / 2 {
            return Err(ParamsError::Tau { tau, max: (n - k) / 2 });
        }
        Ok(())
    }
}

/// One step: additions and multiplications in GF(2), doubled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostRow {
    pub step: &'static str,
    pub adds_x2: u128,
    pub mults_x2: u128,
}

impl CostRow {
    pub fn adds(&self) -> f64 {
        self.adds_x2 as f64 / 2.0
    }
    pub fn mults(&self) -> f64 {
        self.mults_x2 as f64 / 2.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostTable {
    pub decoder: &'static str,
    pub params: ComplexityParams,
    pub rows: Vec<CostRow>,
    pub total: CostRow,
}

impl CostTable {
    fn new(decoder: &'static str, params: ComplexityParams, rows: Vec<CostRow>) -> Self {
        let total = CostRow {
            step: "Total",
            adds_x2: rows.iter().map(|r| r.adds_x2).sum(),
            mults_x2: rows.iter().map(|r| r.mults_x2).sum(),
        };
        Self {
            decoder,
            params,
            rows,
            total,
        }
    }
}

fn row(step: &'static str, adds_x2: i128, mults_x2: i128) -> CostRow {
    debug_assert!(adds_x2 >= 0 && mults_x2 >= 0, "{step}");
    CostRow {
        step,
        adds_x2: adds_x2 as u128,
        mults_x2: mults_x2 as u128,
    }
}

/// Welch-Berlekamp decoder, six steps.
pub fn complexity_wba(p: &ComplexityParams) -> CostTable {
    let (n, k, m, ci) = (p.n as i128, p.k as i128, p.m as i128, p.c_inv as i128);
    let m2 = m * m;
    let x = n * n - 2 * k * n - n + k * k + k;
    let rows = vec![
        row(
            "Init A, I",
            2 * (m * (2 * k * k - 2 * k) + 2 * k * ci + (2 * k * k + k) * (m2 - 1)) + (3 * k * k - k) * (2 * m - 2),
            2 * (2 * k * k + k) * m2,
        ),
        row(
            "Init u",
            2 * (m * (2 * k - 1) * (n - k) + (2 * k + 1) * (n - k) * (m2 - 1) + (k - 1) * (n - k) * (2 * m - 2)),
            2 * (2 * k + 1) * (n - k) * m2,
        ),
        row(
            "Up. u",
            2 * (x * m + x * (m2 - 1)) + (n * n - 2 * k * n + n + k * k - k) * (2 * m - 2),
            2 * m2 * x,
        ),
        row(
            "Up. Poly.",
            2 * (m * (n * n - k * n) + 2 * ci * (n - k) + (n * n - k * n + 2 * (n - k)) * (m2 - 1))
                + (k * k - 2 * n * k + 3 * k + n * n + 2 * n) * (2 * m - 2),
            2 * m2 * (n * n - k * n + 2 * (n - k)),
        ),
        row(
            "Left div.",
            (k - 1) * (n - k) * m + (k - 1) * (n - k) * (m2 - 1) + 2 * (n - k) * (k - 1) * (2 * m - 2),
            m2 * (k - 1) * (n - k),
        ),
        row("Comp. m", 2 * (k + 1) * m, 0),
    ];
    CostTable::new("WBA", *p, rows)
}

/// Transform-domain decoder, seven steps.
pub fn complexity_tdd(p: &ComplexityParams) -> CostTable {
    let (n, k, m, d, tau) = (p.n as i128, p.k as i128, p.m as i128, p.d as i128, p.tau as i128);
    let (cm, ci) = (p.c_m as i128, p.c_inv as i128);
    let m2 = m * m;
    let rows = vec![
        row("Code Trafo", 2 * (n - 1) * m2, 2 * n * m2),
        row("Syndromes", 2 * (n * (cm - m) + (n - 1) * m) * (d - 1), 0),
        row(
            "BMA",
            m * (d - 1) * ((ci + 2 * (d - 2)) * (cm - 1) + (d - 2)),
            m2 * (d - 1) * (2 * (d - 2) + ci),
        ),
        row(
            "Comp. of e~",
            // the (τ − 1) term would go negative without any recursion
            if tau == 0 {
                0
            } else {
                2 * (tau * (cm - 1) + tau - 1) * m * (m - d + 1)
            },
            2 * m2 * (m - d + 1) * tau,
        ),
        row("Inv. q-Trafo", 2 * n * m * cm, 0),
        row("Trafo. w. A+", 2 * (n - 1) * n * m, 2 * n * n * m),
        row("Comp. of m'", 2 * m * (k * (k - 1) + (cm - 1) * k * k), 2 * m2 * k * k),
    ];
    CostTable::new("TDD", *p, rows)
}
