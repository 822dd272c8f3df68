//! Execution strategy for embarrassingly parallel loops.
//!
//! The analysis pipeline has two hot loops whose iterations are fully
//! independent: the arrow-count matrix (one wedge computation per ordered pair
//! of simples) and the fusion table (one product decomposition per pair). With
//! the `parallel` feature (default) these run on the rayon global pool;
//! without it they run sequentially. Results are collected in index order
//! either way, so output is identical across both builds.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, collecting results in index order, using the rayon
/// pool when the `parallel` feature is enabled.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`map_indexed`], always single-threaded regardless of
/// features. Exists so benchmarks can compare both strategies in one build.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
