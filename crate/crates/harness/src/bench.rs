//! Wall-clock benchmarks of the field operations and of both decoders.
//!
//! Operands are drawn from a seeded pool ahead of time; each timed loop folds
//! its outputs into a checksum that is passed through `black_box`, so no call
//! can be optimized away.

use std::hint::black_box;
use std::time::Instant;

use gabidulin_core::ctx_file::shipped_ctx;
use gabidulin_core::gabidulin::{tdd_precompute, DecodeInstance};
use gabidulin_core::normal_basis::{nb_add, nb_qpow, NormalFieldElement};
use gabidulin_core::poly_basis::{poly_add, poly_inv, poly_mul, poly_square};
use gabidulin_core::tdd::tdd_decode;
use gabidulin_core::wba::{wba_decode, WbaMode};
use gabidulin_core::{Field, FieldElement, PolyBasis, M};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::count_ops::{trial_seed, RunError};

const POOL: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Poly,
    Normal,
}

/// Build and host information recorded next to every timing.
#[derive(Debug, Clone, Serialize)]
pub struct Environment {
    pub cpu_model: String,
    pub profile: &'static str,
    pub opt_level: &'static str,
    pub debug_assertions: bool,
    pub target: &'static str,
    pub clock: &'static str,
}

impl Environment {
    pub fn detect() -> Self {
        let cpu_model = std::fs::read_to_string("/proc/cpuinfo")
            .ok()
            .and_then(|s| {
                s.lines()
                    .find(|l| l.starts_with("model name"))
                    .and_then(|l| l.split_once(':'))
                    .map(|(_, v)| v.trim().to_string())
            })
            .unwrap_or_else(|| "unknown".into());
        Self {
            cpu_model,
            profile: env!("HARNESS_PROFILE"),
            opt_level: env!("HARNESS_OPT_LEVEL"),
            debug_assertions: cfg!(debug_assertions),
            target: env!("HARNESS_TARGET"),
            clock: "std::time::Instant (monotonic)",
        }
    }
}

/// Mean time of one operation; `None` when the basis has no such operation.
#[derive(Debug, Clone, Serialize)]
pub struct OpTiming {
    pub op: &'static str,
    pub calls: u64,
    pub ns_per_call: Option<f64>,
}

impl OpTiming {
    /// Seconds per 10^6 calls.
    pub fn secs_per_million(&self) -> Option<f64> {
        self.ns_per_call.map(|ns| ns * 1e-3)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldBench {
    pub basis: Basis,
    pub calls: u64,
    pub seed: u64,
    pub ops: Vec<OpTiming>,
    pub checksum: String,
    pub env: Environment,
}

impl FieldBench {
    pub fn ns(&self, op: &str) -> Option<f64> {
        self.ops.iter().find(|t| t.op == op).and_then(|t| t.ns_per_call)
    }
}

/// Field operation names, in report order.
pub const FIELD_OPS: [&str; 8] = [
    "add",
    "multiply",
    "set_shift_table",
    "multiply_shift_tables",
    "mul_alpha_pow",
    "q_power",
    "square",
    "invert",
];

fn time_loop(calls: u64, checksum: &mut u128, mut body: impl FnMut(usize) -> u128) -> f64 {
    let start = Instant::now();
    let mut acc = 0u128;
    for i in 0..calls {
        acc ^= body(i as usize % POOL);
    }
    let ns = start.elapsed().as_nanos() as f64 / calls as f64;
    *checksum ^= black_box(acc);
    ns
}

pub fn bench_field(basis: Basis, calls: u64, seed: u64) -> FieldBench {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = PolyBasis;
    let a: Vec<FieldElement> = (0..POOL).map(|_| f.random_nonzero(&mut rng)).collect();
    let b: Vec<FieldElement> = (0..POOL).map(|_| f.random_nonzero(&mut rng)).collect();
    let idx: Vec<usize> = (0..POOL).map(|_| rng.gen_range(0..M)).collect();
    let mut sum = 0u128;
    let mut timings = Vec::new();
    let mut put = |op, ns| {
        timings.push(OpTiming {
            op,
            calls,
            ns_per_call: ns,
        })
    };
    match basis {
        Basis::Poly => {
            let (a, b) = (black_box(a), black_box(b));
            put(
                "add",
                Some(time_loop(calls, &mut sum, |i| poly_add(a[i], b[i]).to_bits())),
            );
            put(
                "multiply",
                Some(time_loop(calls, &mut sum, |i| poly_mul(a[i], b[i]).to_bits())),
            );
            put("set_shift_table", None);
            put("multiply_shift_tables", None);
            put("mul_alpha_pow", None);
            put("q_power", None);
            put(
                "square",
                Some(time_loop(calls, &mut sum, |i| poly_square(a[i]).to_bits())),
            );
            put(
                "invert",
                Some(time_loop(calls, &mut sum, |i| {
                    poly_inv(a[i]).map_or(0, |x| x.to_bits())
                })),
            );
        }
        Basis::Normal => {
            let ctx = shipped_ctx();
            let tab = ctx.table();
            let na: Vec<NormalFieldElement> = black_box(a.iter().map(|&x| ctx.from_poly(x)).collect());
            let nb: Vec<NormalFieldElement> = black_box(b.iter().map(|&x| ctx.from_poly(x)).collect());
            let ta: Vec<_> = na.iter().map(|&x| ctx.make_shift_table(x)).collect();
            let tb: Vec<_> = nb.iter().map(|&x| ctx.make_shift_table(x)).collect();
            put(
                "add",
                Some(time_loop(calls, &mut sum, |i| nb_add(na[i], nb[i]).to_bits())),
            );
            put(
                "multiply",
                Some(time_loop(calls, &mut sum, |i| ctx.nb_mul(na[i], nb[i]).to_bits())),
            );
            put(
                "set_shift_table",
                Some(time_loop(calls, &mut sum, |i| {
                    ctx.make_shift_table(na[i]).entry(i % M).to_bits()
                })),
            );
            put(
                "multiply_shift_tables",
                Some(time_loop(calls, &mut sum, |i| {
                    tab.mul_shift_tables(&ta[i], &tb[i]).to_bits()
                })),
            );
            put(
                "mul_alpha_pow",
                Some(time_loop(calls, &mut sum, |i| {
                    ctx.nb_mul_alpha_pow(na[i], idx[i]).to_bits()
                })),
            );
            put(
                "q_power",
                Some(time_loop(calls, &mut sum, |i| nb_qpow(na[i], idx[i] as i64).to_bits())),
            );
            put(
                "square",
                Some(time_loop(calls, &mut sum, |i| ctx.square(na[i]).to_bits())),
            );
            put(
                "invert",
                Some(time_loop(calls, &mut sum, |i| {
                    ctx.nb_inv(na[i]).map_or(0, |x| x.to_bits())
                })),
            );
        }
    }
    FieldBench {
        basis,
        calls,
        seed,
        ops: timings,
        checksum: format!("{sum:032x}"),
        env: Environment::detect(),
    }
}

/// Mean, sample standard deviation and coefficient of variation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunStats {
    pub mean: f64,
    pub stddev: f64,
    pub cv: f64,
}

impl RunStats {
    pub fn of(xs: &[f64]) -> Self {
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let var = if xs.len() > 1 {
            xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        let stddev = var.sqrt();
        Self {
            mean,
            stddev,
            cv: if mean > 0.0 { stddev / mean } else { 0.0 },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DecoderTiming {
    pub decoder: &'static str,
    /// Per-decode seconds of each run.
    pub runs: Vec<f64>,
    pub per_decode: RunStats,
    /// Seconds per `trials` decodes, averaged over the runs.
    pub total: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecoderBench {
    pub n: usize,
    pub k: usize,
    pub tau: usize,
    pub trials: u64,
    pub runs: usize,
    pub seed: u64,
    pub wba: DecoderTiming,
    pub tdd: DecoderTiming,
    /// TDD time over WBA time.
    pub ratio: f64,
    pub env: Environment,
}

fn timing(decoder: &'static str, runs: Vec<f64>, trials: u64) -> DecoderTiming {
    let per_decode = RunStats::of(&runs);
    DecoderTiming {
        decoder,
        total: per_decode.mean * trials as f64,
        runs,
        per_decode,
    }
}

/// Times `runs` passes of both decoders over the same `trials` instances
/// (constant-time WBA; TDD precomputation and basis conversion done up
/// front). One untimed warm-up pass precedes the runs.
pub fn bench_decoders(
    n: usize,
    k: usize,
    tau: usize,
    trials: u64,
    runs: usize,
    seed: u64,
) -> Result<DecoderBench, RunError> {
    if trials == 0 || runs == 0 {
        return Err(RunError::NoTrials);
    }
    let ctx = shipped_ctx();
    let mut cases = Vec::with_capacity(trials as usize);
    for t in 0..trials {
        let s = trial_seed(seed, t);
        let inst = DecodeInstance::random(n, k, tau, s)?;
        let pre = tdd_precompute(&inst.code, ctx)?;
        let r: Vec<_> = inst.received.iter().map(|&x| ctx.from_poly(x)).collect();
        cases.push((s, inst, pre, r));
    }

    let wba_pass = || -> Result<f64, RunError> {
        let start = Instant::now();
        for (t, (s, inst, _, _)) in cases.iter().enumerate() {
            let msg = wba_decode(&PolyBasis, inst.code.g(), k, &inst.received, WbaMode::ConstantTime, *s).map_err(
                |source| RunError::Wba {
                    trial: t as u64,
                    source,
                },
            )?;
            if black_box(msg) != inst.msg {
                return Err(RunError::Wrong {
                    trial: t as u64,
                    decoder: "WBA",
                });
            }
        }
        Ok(start.elapsed().as_secs_f64() / trials as f64)
    };
    let tdd_pass = || -> Result<f64, RunError> {
        let start = Instant::now();
        for (t, (_, inst, pre, r)) in cases.iter().enumerate() {
            let msg = tdd_decode(ctx, pre, r).map_err(|source| RunError::Tdd {
                trial: t as u64,
                source,
            })?;
            if black_box(msg)
                .iter()
                .map(|&x| ctx.to_poly(x))
                .ne(inst.msg.iter().copied())
            {
                return Err(RunError::Wrong {
                    trial: t as u64,
                    decoder: "TDD",
                });
            }
        }
        Ok(start.elapsed().as_secs_f64() / trials as f64)
    };

    wba_pass()?;
    tdd_pass()?;
    let mut w = Vec::with_capacity(runs);
    let mut d = Vec::with_capacity(runs);
    for _ in 0..runs {
        w.push(wba_pass()?);
        d.push(tdd_pass()?);
    }
    let wba = timing("WBA", w, trials);
    let tdd = timing("TDD", d, trials);
    Ok(DecoderBench {
        n,
        k,
        tau,
        trials,
        runs,
        seed,
        ratio: tdd.per_decode.mean / wba.per_decode.mean,
        wba,
        tdd,
        env: Environment::detect(),
    })
}
