//! Benchmarks for homog3-core live in `benches/`.
