//! Measurement harness for the Gabidulin decoders: theoretical cost tables,
//! per-decode operation counts, field and decoder timings, round trips.

pub mod bench;
pub mod complexity;
pub mod count_ops;
pub mod report;
pub mod roundtrip;

pub use bench::{bench_decoders, bench_field, Basis, DecoderBench, FieldBench};
pub use complexity::{complexity_tdd, complexity_wba, ComplexityParams, CostTable};
pub use count_ops::{count_ops, Decoder, OpCountReport, RunError};
pub use report::Format;
pub use roundtrip::{roundtrip, RoundtripReport};
