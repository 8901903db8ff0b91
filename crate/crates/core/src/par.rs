//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper preserves input order in its output, and reductions are
//! performed over fixed-size chunks combined left to right, so the result of
//! a computation does not depend on the [`Execution`] mode or thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Chunk length used by the deterministic reductions.
pub(crate) const REDUCE_CHUNK: usize = 4096;

/// How grid sweeps and per-sample loops are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Runs on the rayon pool. Without the `parallel` feature this is the
    /// same as [`Execution::Sequential`].
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `(0..n).map(f).collect()`, possibly in parallel, in index order.
pub(crate) fn map_range<R, F>(exec: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

/// `items.iter().map(f).collect()`, possibly in parallel, in input order.
pub(crate) fn map_slice<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Maps each `REDUCE_CHUNK`-sized index range to a partial result and folds
/// the partials in chunk order.
pub(crate) fn chunked_reduce<A, M, C>(exec: Execution, n: usize, map: M, combine: C) -> Option<A>
where
    A: Send,
    M: Fn(std::ops::Range<usize>) -> A + Sync + Send,
    C: Fn(A, A) -> A,
{
    let chunks = n.div_ceil(REDUCE_CHUNK);
    let partials = map_range(exec, chunks, |c| {
        let start = c * REDUCE_CHUNK;
        map(start..(start + REDUCE_CHUNK).min(n))
    });
    partials.into_iter().reduce(combine)
}

/// Sum of `f(i)` for `i in 0..n`, bit-identical across execution modes.
pub(crate) fn chunked_sum<F>(exec: Execution, n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    chunked_reduce(exec, n, |r| r.map(&f).sum::<f64>(), |a, b| a + b).unwrap_or(0.0)
}
