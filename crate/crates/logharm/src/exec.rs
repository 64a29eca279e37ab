//! Index-parallel sweeps with a sequential fallback.
//!
//! With the default `parallel` feature, [`sweep`] fans out across the rayon
//! global pool and results are merged by index, so reductions downstream are
//! deterministic regardless of scheduling. Without the feature both entry
//! points are plain sequential loops.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Evaluate `f(0..n)` and collect results in index order.
#[cfg(feature = "parallel")]
pub fn sweep<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Evaluate `f(0..n)` and collect results in index order.
#[cfg(not(feature = "parallel"))]
pub fn sweep<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Always-sequential sweep, for benchmarks and nested parallel contexts.
pub fn sweep_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
