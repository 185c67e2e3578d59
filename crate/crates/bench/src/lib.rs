//! Criterion benchmarks for the `sl2-blocks` engine; see `benches/engine.rs`.
