//! Benchmark-only crate; see `benches/oscillator.rs`.
