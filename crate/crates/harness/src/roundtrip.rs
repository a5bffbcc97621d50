//! Round trips through both decoders, trials spread over threads.

use std::thread;

use gabidulin_core::ctx_file::shipped_ctx;
use gabidulin_core::gabidulin::{tdd_precompute, DecodeInstance};
use gabidulin_core::tdd::tdd_decode;
use gabidulin_core::wba::{wba_decode, WbaMode};
use gabidulin_core::PolyBasis;
use serde::Serialize;

use crate::count_ops::{trial_seed, RunError};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub n: usize,
    pub k: usize,
    pub tau: usize,
    pub trials: u64,
    pub seed: u64,
    pub wba_ok: u64,
    pub tdd_ok: u64,
    /// Trials where both decoders returned the same message.
    pub agree: u64,
    /// Trial indices with any failure or disagreement.
    pub failed: Vec<u64>,
}

impl RoundtripReport {
    pub fn all_ok(&self) -> bool {
        self.wba_ok == self.trials && self.tdd_ok == self.trials && self.agree == self.trials
    }

    fn merge(&mut self, o: RoundtripReport) {
        self.wba_ok += o.wba_ok;
        self.tdd_ok += o.tdd_ok;
        self.agree += o.agree;
        self.failed.extend(o.failed);
    }
}

fn run_range(
    n: usize,
    k: usize,
    tau: usize,
    seed: u64,
    range: std::ops::Range<u64>,
) -> Result<RoundtripReport, RunError> {
    let ctx = shipped_ctx();
    let mut r = RoundtripReport::default();
    for t in range {
        let s = trial_seed(seed, t);
        let inst = DecodeInstance::random(n, k, tau, s)?;
        let pre = tdd_precompute(&inst.code, ctx)?;
        let rx: Vec<_> = inst.received.iter().map(|&x| ctx.from_poly(x)).collect();
        let wba = wba_decode(&PolyBasis, inst.code.g(), k, &inst.received, WbaMode::ConstantTime, s).ok();
        let tdd = tdd_decode(ctx, &pre, &rx)
            .ok()
            .map(|m| m.iter().map(|&x| ctx.to_poly(x)).collect::<Vec<_>>());
        let w = wba.as_ref() == Some(&inst.msg);
        let d = tdd.as_ref() == Some(&inst.msg);
        let same = wba.is_some() && wba == tdd;
        r.wba_ok += w as u64;
        r.tdd_ok += d as u64;
        r.agree += same as u64;
        if !(w && d && same) {
            r.failed.push(t);
        }
    }
    Ok(r)
}

/// `trials` seeded round trips; `threads = 0` uses every available core.
pub fn roundtrip(
    n: usize,
    k: usize,
    tau: usize,
    trials: u64,
    seed: u64,
    threads: usize,
) -> Result<RoundtripReport, RunError> {
    let threads = match threads {
        0 => thread::available_parallelism().map_or(1, |p| p.get()),
        t => t,
    }
    .min(trials.max(1) as usize) as u64;
    let chunk = trials.div_ceil(threads);
    let parts: Vec<Result<RoundtripReport, RunError>> = thread::scope(|sc| {
        let handles: Vec<_> = (0..threads)
            .map(|i| {
                let lo = (i * chunk).min(trials);
                let hi = ((i + 1) * chunk).min(trials);
                sc.spawn(move || run_range(n, k, tau, seed, lo..hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut total = RoundtripReport {
        n,
        k,
        tau,
        trials,
        seed,
        ..Default::default()
    };
    for p in parts {
        total.merge(p?);
    }
    total.failed.sort_unstable();
    Ok(total)
}
