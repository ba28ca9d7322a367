//! Data-parallel helpers. With the `parallel` feature the maps fan out over
//! rayon; without it they run sequentially. Callers pass `parallel: false`
//! to force the sequential path (the benches compare both).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_indexed<T, R, F>(n: usize, items: &[T], f: F, parallel: bool) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync,
{
    debug_assert_eq!(n, items.len());
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let _ = n;
    let _ = parallel;
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

/// `true` iff the predicate holds for every index in `0..n`.
pub(crate) fn all_indices<F>(n: usize, pred: F, parallel: bool) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().all(pred);
    }
    let _ = parallel;
    (0..n).all(pred)
}

pub(crate) fn map_range<R, F>(n: usize, f: F, parallel: bool) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}
