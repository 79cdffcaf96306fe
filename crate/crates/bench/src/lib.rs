//! Benchmarks for the polynomial kernel live in `benches/`.
