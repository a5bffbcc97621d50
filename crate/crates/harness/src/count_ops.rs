//! Per-decode operation counts through the counting field wrappers.

use gabidulin_core::counting::{CountingNormal, CountingPoly, OpTally};
use gabidulin_core::ctx_file::shipped_ctx;
use gabidulin_core::gabidulin::{tdd_precompute, CodeError, DecodeInstance};
use gabidulin_core::tdd::{tdd_decode, TddError};
use gabidulin_core::wba::{wba_decode, WbaError, WbaMode};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decoder {
    Wba,
    Tdd,
}

impl Decoder {
    pub fn name(self) -> &'static str {
        match self {
            Decoder::Wba => "WBA",
            Decoder::Tdd => "TDD",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("instance generation failed: {0}")]
    Instance(#[from] CodeError),
    #[error("trial {trial}: WBA failed: {source}")]
    Wba { trial: u64, source: WbaError },
    #[error("trial {trial}: TDD failed: {source}")]
    Tdd { trial: u64, source: TddError },
    #[error("trial {trial}: {decoder} returned a wrong message")]
    Wrong { trial: u64, decoder: &'static str },
    #[error("trials must be at least 1")]
    NoTrials,
}

/// Seed of trial `i` of a run seeded with `seed`.
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_add(i.wrapping_mul(0xd1b5_4a32_d192_ed03))
}

/// Per-decode averages, one field per counted operation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OpAverages {
    pub add: f64,
    pub multiply: f64,
    pub set_shift_table: f64,
    pub multiply_shift_tables: f64,
    pub mul_alpha_pow: f64,
    pub q_power: f64,
    pub square: f64,
    pub invert: f64,
}

impl OpAverages {
    pub fn of(t: &OpTally, decodes: u64) -> Self {
        let d = decodes.max(1) as f64;
        Self {
            add: t.add as f64 / d,
            multiply: t.multiply as f64 / d,
            set_shift_table: t.set_shift_table as f64 / d,
            multiply_shift_tables: t.multiply_shift_tables as f64 / d,
            mul_alpha_pow: t.mul_alpha_pow as f64 / d,
            q_power: t.q_power as f64 / d,
            square: t.square as f64 / d,
            invert: t.invert as f64 / d,
        }
    }

    /// `(json key, display label, value)` in table order.
    pub fn cells(&self) -> [(&'static str, &'static str, f64); 8] {
        [
            ("add", "add", self.add),
            ("multiply", "multiply", self.multiply),
            ("set_shift_table", "set shift table", self.set_shift_table),
            (
                "multiply_shift_tables",
                "multiply shift tables",
                self.multiply_shift_tables,
            ),
            ("mul_alpha_pow", "multiply by alpha^[i]", self.mul_alpha_pow),
            ("q_power", "q-power", self.q_power),
            ("square", "square", self.square),
            ("invert", "invert", self.invert),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OpCountReport {
    pub decoder: Decoder,
    pub n: usize,
    pub k: usize,
    pub tau: usize,
    pub trials: u64,
    pub seed: u64,
    pub totals: OpTally,
    pub averages: OpAverages,
    /// Per-trial invert counts; constant at fixed parameters.
    pub invert_per_trial: Vec<u64>,
}

/// `trials` decodes, each on a fresh random code, message and rank-`tau`
/// error. Code construction and the transform-domain precomputation are not
/// counted; only the decode itself runs through the counting backend.
pub fn count_ops(
    decoder: Decoder,
    n: usize,
    k: usize,
    tau: usize,
    trials: u64,
    seed: u64,
) -> Result<OpCountReport, RunError> {
    if trials == 0 {
        return Err(RunError::NoTrials);
    }
    let ctx = shipped_ctx();
    let mut totals = OpTally::default();
    let mut invert_per_trial = Vec::with_capacity(trials as usize);
    for trial in 0..trials {
        let s = trial_seed(seed, trial);
        let inst = DecodeInstance::random(n, k, tau, s)?;
        let t = match decoder {
            Decoder::Wba => {
                let f = CountingPoly::new();
                let msg = wba_decode(&f, inst.code.g(), k, &inst.received, WbaMode::ConstantTime, s)
                    .map_err(|source| RunError::Wba { trial, source })?;
                if msg != inst.msg {
                    return Err(RunError::Wrong { trial, decoder: "WBA" });
                }
                f.tally()
            }
            Decoder::Tdd => {
                let pre = tdd_precompute(&inst.code, ctx)?;
                let r: Vec<_> = inst.received.iter().map(|&x| ctx.from_poly(x)).collect();
                let f = CountingNormal::new(ctx);
                let msg = tdd_decode(&f, &pre, &r).map_err(|source| RunError::Tdd { trial, source })?;
                if msg.iter().map(|&x| ctx.to_poly(x)).ne(inst.msg.iter().copied()) {
                    return Err(RunError::Wrong { trial, decoder: "TDD" });
                }
                f.tally()
            }
        };
        invert_per_trial.push(t.invert);
        totals += t;
    }
    Ok(OpCountReport {
        decoder,
        n,
        k,
        tau,
        trials,
        seed,
        totals,
        averages: OpAverages::of(&totals, trials),
        invert_per_trial,
    })
}
