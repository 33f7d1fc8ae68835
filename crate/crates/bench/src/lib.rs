//! Criterion benchmarks for the enumeration and algebra routines; see `benches/`.
