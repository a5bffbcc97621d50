//! Markdown, CSV and JSON rendering of every report.

use std::fmt::Write;

use serde_json::{json, Map, Value};

use crate::bench::{DecoderBench, Environment, FieldBench, FIELD_OPS};
use crate::complexity::CostTable;
use crate::count_ops::OpCountReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

fn half(x2: u128) -> String {
    if x2.is_multiple_of(2) {
        (x2 / 2).to_string()
    } else {
        format!("{}.5", x2 / 2)
    }
}

fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize") + "\n"
}

pub fn render_complexity(tables: &[CostTable], fmt: Format) -> String {
    let mut out = String::new();
    match fmt {
        Format::Md => {
            for t in tables {
                let p = &t.params;
                let _ = writeln!(
                    out,
                    "### {} (n = {}, k = {}, m = {}, d = {}, tau = {}, C_M = {}, C_inv = {})\n",
                    t.decoder, p.n, p.k, p.m, p.d, p.tau, p.c_m, p.c_inv
                );
                out.push_str("| Step | Additions in F_q | Multiplications in F_q |\n|---|---:|---:|\n");
                for r in &t.rows {
                    let _ = writeln!(out, "| {} | {} | {} |", r.step, half(r.adds_x2), half(r.mults_x2));
                }
                let _ = writeln!(
                    out,
                    "| **Total** | **{}** ({}) | **{}** ({}) |\n",
                    half(t.total.adds_x2),
                    sci(t.total.adds()),
                    half(t.total.mults_x2),
                    sci(t.total.mults())
                );
            }
        }
        Format::Csv => {
            out.push_str("decoder,step,adds,mults\n");
            for t in tables {
                for r in t.rows.iter().chain(std::iter::once(&t.total)) {
                    let _ = writeln!(out, "{},{},{},{}", t.decoder, r.step, half(r.adds_x2), half(r.mults_x2));
                }
            }
        }
        Format::Json => {
            let v: Vec<Value> = tables
                .iter()
                .map(|t| {
                    json!({
                        "decoder": t.decoder,
                        "params": t.params,
                        "rows": t.rows.iter().map(|r| json!({
                            "step": r.step, "adds": r.adds(), "mults": r.mults()
                        })).collect::<Vec<_>>(),
                        "total": { "adds": t.total.adds(), "mults": t.total.mults() },
                    })
                })
                .collect();
            out = pretty(&Value::Array(v));
        }
    }
    out
}

/// The JSON object of one count report: the eight counters (per-decode
/// averages), `trials` and `seed`, nothing else.
pub fn counts_json(r: &OpCountReport) -> Value {
    let mut m = Map::new();
    for (key, _, v) in r.averages.cells() {
        m.insert(key.into(), json!(v));
    }
    m.insert("trials".into(), json!(r.trials));
    m.insert("seed".into(), json!(r.seed));
    Value::Object(m)
}

pub fn render_counts(reports: &[OpCountReport], fmt: Format) -> String {
    let mut out = String::new();
    match fmt {
        Format::Md => {
            let Some(first) = reports.first() else {
                return out;
            };
            let _ = writeln!(
                out,
                "Average number of function calls per decoding (n = {}, k = {}, tau = {}, {} trials, seed {})\n",
                first.n, first.k, first.tau, first.trials, first.seed
            );
            out.push_str("| Function |");
            for r in reports {
                let _ = write!(out, " {} |", r.decoder.name());
            }
            out.push_str("\n|---|");
            out.push_str(&"---:|".repeat(reports.len()));
            out.push('\n');
            for (i, (_, label, _)) in first.averages.cells().iter().enumerate() {
                let _ = write!(out, "| {label} |");
                for r in reports {
                    let v = r.averages.cells()[i].2;
                    if v == 0.0 {
                        out.push_str(" - |");
                    } else {
                        let _ = write!(out, " {v:.1} |");
                    }
                }
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("decoder");
            if let Some(first) = reports.first() {
                for (key, _, _) in first.averages.cells() {
                    let _ = write!(out, ",{key}");
                }
            }
            out.push_str(",trials,seed\n");
            for r in reports {
                out.push_str(r.decoder.name());
                for (_, _, v) in r.averages.cells() {
                    let _ = write!(out, ",{v}");
                }
                let _ = writeln!(out, ",{},{}", r.trials, r.seed);
            }
        }
        Format::Json => {
            out = match reports {
                [one] => pretty(&counts_json(one)),
                many => pretty(&Value::Array(many.iter().map(counts_json).collect())),
            };
        }
    }
    out
}

fn env_md(out: &mut String, e: &Environment) {
    let _ = writeln!(
        out,
        "\nCPU: {}; profile {}, opt-level {}, debug assertions {}; target {}; clock {}",
        e.cpu_model, e.profile, e.opt_level, e.debug_assertions, e.target, e.clock
    );
}

fn cell(t: Option<f64>) -> String {
    t.map_or_else(|| "-".into(), |s| format!("{s:.4}"))
}

pub fn render_field(benches: &[FieldBench], fmt: Format) -> String {
    let mut out = String::new();
    match fmt {
        Format::Md => {
            let Some(first) = benches.first() else {
                return out;
            };
            let _ = writeln!(
                out,
                "CPU time [s] per 10^6 function calls ({} calls each, seed {})\n",
                first.calls, first.seed
            );
            out.push_str("| Function |");
            for b in benches {
                let _ = write!(out, " {:?} basis |", b.basis);
            }
            out.push_str("\n|---|");
            out.push_str(&"---:|".repeat(benches.len()));
            out.push('\n');
            for op in FIELD_OPS {
                let _ = write!(out, "| {op} |");
                for b in benches {
                    let _ = write!(out, " {} |", cell(b.ns(op).map(|ns| ns * 1e-3)));
                }
                out.push('\n');
            }
            env_md(&mut out, &first.env);
        }
        Format::Csv => {
            out.push_str("basis,op,calls,ns_per_call\n");
            for b in benches {
                for t in &b.ops {
                    let ns = t.ns_per_call.map_or_else(|| "-".into(), |v| v.to_string());
                    let _ = writeln!(out, "{:?},{},{},{}", b.basis, t.op, t.calls, ns);
                }
            }
        }
        Format::Json => out = pretty(&json!(benches)),
    }
    out
}

pub fn render_decoders(b: &DecoderBench, fmt: Format) -> String {
    let mut out = String::new();
    match fmt {
        Format::Md => {
            let _ = writeln!(
                out,
                "Decoding time (n = {}, k = {}, tau = {}, {} decodes x {} runs, seed {})\n",
                b.n, b.k, b.tau, b.trials, b.runs, b.seed
            );
            out.push_str("| Decoder | per decode [ms] | CV | total per run [s] |\n|---|---:|---:|---:|\n");
            for t in [&b.wba, &b.tdd] {
                let _ = writeln!(
                    out,
                    "| {} | {:.4} | {:.1}% | {:.4} |",
                    t.decoder,
                    t.per_decode.mean * 1e3,
                    t.per_decode.cv * 100.0,
                    t.total
                );
            }
            let _ = writeln!(out, "\nTDD / WBA time ratio: {:.2}", b.ratio);
            env_md(&mut out, &b.env);
        }
        Format::Csv => {
            out.push_str("decoder,trials,runs,seed,per_decode_s,cv,total_s\n");
            for t in [&b.wba, &b.tdd] {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    t.decoder, b.trials, b.runs, b.seed, t.per_decode.mean, t.per_decode.cv, t.total
                );
            }
        }
        Format::Json => out = pretty(&json!(b)),
    }
    out
}
