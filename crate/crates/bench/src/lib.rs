//! Benchmark-only package; see `benches/coxchar.rs`.
