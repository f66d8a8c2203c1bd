//! Deterministic chunked fan-out.
//!
//! Work over `0..n` is split into fixed-size chunks and the per-chunk results
//! are returned in chunk order. The chunk size is a constant, never derived
//! from the worker count, so merged results are identical whether the chunks
//! run on one thread or many.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Items per chunk. Small enough to balance load, large enough to amortize
/// per-chunk scratch allocation.
pub(crate) const CHUNK: usize = 64;

pub(crate) fn map_chunks<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<usize>) -> T + Sync + Send,
{
    let ranges: Vec<Range<usize>> = (0..n)
        .step_by(CHUNK)
        .map(|start| start..(start + CHUNK).min(n))
        .collect();

    #[cfg(feature = "parallel")]
    {
        ranges.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ranges.into_iter().map(f).collect()
    }
}
