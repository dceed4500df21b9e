//! Benchmark-only crate; see `benches/complexity.rs`.
