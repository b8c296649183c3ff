//! Criterion benchmarks for the steadystate crate; see `benches/`.
