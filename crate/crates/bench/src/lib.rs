//! Criterion benchmarks for `sgt-core`; see `benches/`.
