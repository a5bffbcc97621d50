use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gabidulin_core::ctx_file::shipped_ctx;
use gabidulin_core::M;
use gabidulin_harness::report::{render_complexity, render_counts, render_decoders, render_field};
use gabidulin_harness::{
    bench_decoders, bench_field, complexity_tdd, complexity_wba, count_ops, roundtrip, Basis, ComplexityParams,
    Decoder, Format,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "gabidulin-bench",
    version,
    about = "Benchmarks, operation counts and cost tables for the Gabidulin decoders"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Time every field operation in one or both bases.
    BenchField {
        #[arg(long, value_enum, default_value = "both")]
        basis: BasisArg,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(10_000..))]
        calls: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Time both decoders on identical inputs.
    BenchDecoders {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(10..))]
        trials: u64,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Average field-operation calls per decode.
    CountOps {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "both")]
        decoder: DecoderArg,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Theoretical GF(2) operation counts of both decoders.
    Complexity {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "both")]
        decoder: DecoderArg,
        /// Normal-basis complexity; defaults to the shipped basis.
        #[arg(long)]
        c_m: Option<u64>,
        #[arg(long, default_value_t = 0)]
        c_inv: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Encode, corrupt and decode with both decoders.
    Roundtrip {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Worker threads, 0 for all cores.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Describe the shipped normal basis.
    BasisInfo {
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long, default_value_t = 113)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Error rank; defaults to floor((n - k) / 2).
    #[arg(long)]
    tau: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CodeArgs {
    fn resolve(&self) -> Result<(usize, usize, usize), String> {
        let (n, k) = (self.n, self.k);
        if k == 0 || k >= n || n > M {
            return Err(format!("need 1 <= k < n <= {M}, got n = {n}, k = {k}"));
        }
        let max = (n - k) / 2;
        let tau = self.tau.unwrap_or(max);
        if tau > max {
            return Err(format!("tau = {tau} exceeds floor((n - k) / 2) = {max}"));
        }
        Ok((n, k, tau))
    }
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Poly,
    Normal,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Wba,
    Tdd,
    Both,
}

impl DecoderArg {
    fn list(self) -> Vec<Decoder> {
        match self {
            DecoderArg::Wba => vec![Decoder::Wba],
            DecoderArg::Tdd => vec![Decoder::Tdd],
            DecoderArg::Both => vec![Decoder::Wba, Decoder::Tdd],
        }
    }
}

enum Failure {
    BadArgs(String),
    Decode(String),
}

fn emit(out: &OutArgs, text: &str) -> Result<(), Failure> {
    match &out.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::BadArgs(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::BenchField {
            basis,
            calls,
            seed,
            out,
        } => {
            let bases = match basis {
                BasisArg::Poly => vec![Basis::Poly],
                BasisArg::Normal => vec![Basis::Normal],
                BasisArg::Both => vec![Basis::Poly, Basis::Normal],
            };
            let benches: Vec<_> = bases.into_iter().map(|b| bench_field(b, calls, seed)).collect();
            emit(&out, &render_field(&benches, out.format))
        }
        Cmd::BenchDecoders {
            code,
            trials,
            runs,
            out,
        } => {
            let (n, k, tau) = code.resolve().map_err(Failure::BadArgs)?;
            if runs == 0 {
                return Err(Failure::BadArgs("runs must be at least 1".into()));
            }
            let b = bench_decoders(n, k, tau, trials, runs, code.seed).map_err(|e| Failure::Decode(e.to_string()))?;
            emit(&out, &render_decoders(&b, out.format))
        }
        Cmd::CountOps {
            code,
            decoder,
            trials,
            out,
        } => {
            let (n, k, tau) = code.resolve().map_err(Failure::BadArgs)?;
            let reports = decoder
                .list()
                .into_iter()
                .map(|d| count_ops(d, n, k, tau, trials, code.seed))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Decode(e.to_string()))?;
            emit(&out, &render_counts(&reports, out.format))
        }
        Cmd::Complexity {
            code,
            decoder,
            c_m,
            c_inv,
            out,
        } => {
            let (n, k, tau) = code.resolve().map_err(Failure::BadArgs)?;
            let c_m = c_m.unwrap_or_else(|| shipped_ctx().complexity() as u64);
            let p = ComplexityParams::new(n as u64, k as u64, M as u64, tau as u64, c_m, c_inv)
                .map_err(|e| Failure::BadArgs(e.to_string()))?;
            let tables: Vec<_> = decoder
                .list()
                .into_iter()
                .map(|d| match d {
                    Decoder::Wba => complexity_wba(&p),
                    Decoder::Tdd => complexity_tdd(&p),
                })
                .collect();
            emit(&out, &render_complexity(&tables, out.format))
        }
        Cmd::Roundtrip {
            code,
            trials,
            threads,
            out,
        } => {
            let (n, k, tau) = code.resolve().map_err(Failure::BadArgs)?;
            let r = roundtrip(n, k, tau, trials, code.seed, threads).map_err(|e| Failure::Decode(e.to_string()))?;
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&r).expect("serializable") + "\n",
                Format::Csv => format!(
                    "decoder,ok,trials\nWBA,{},{t}\nTDD,{},{t}\nagree,{},{t}\n",
                    r.wba_ok,
                    r.tdd_ok,
                    r.agree,
                    t = r.trials
                ),
                Format::Md => format!(
                    "WBA: {}/{t} OK\nTDD: {}/{t} OK\nagree: {}/{t}\n",
                    r.wba_ok,
                    r.tdd_ok,
                    r.agree,
                    t = r.trials
                ),
            };
            emit(&out, &text)?;
            if r.all_ok() {
                Ok(())
            } else {
                Err(Failure::Decode(format!("failed trials: {:?}", r.failed)))
            }
        }
        Cmd::BasisInfo { out } => {
            let ctx = shipped_ctx();
            let (cm, sd, alpha) = (ctx.complexity(), ctx.is_self_dual(), ctx.alpha().to_hex());
            let text = match out.format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({ "m": M, "complexity": cm, "self_dual": sd, "alpha": alpha }))
                        .expect("serializable")
                        + "\n"
                }
                Format::Csv => format!("m,complexity,self_dual,alpha\n{M},{cm},{sd},{alpha}\n"),
                Format::Md => format!(
                    "| m | C_M | self-dual | alpha (polynomial basis) |\n|---|---|---|---|\n| {M} | {cm} | {sd} | {alpha} |\n"
                ),
            };
            emit(&out, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::BadArgs(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Decode(msg)) => {
            eprintln!("decode failure: {msg}");
            ExitCode::from(1)
        }
    }
}
