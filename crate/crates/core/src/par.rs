//! Deterministic fan-out helpers. With the `parallel` feature the work is
//! spread over the rayon pool; either way the result is the one the
//! sequential loop would return.

use std::ops::Range;

#[cfg(feature = "parallel")]
pub(crate) fn find_map_first<R, F>(range: Range<usize>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_map_first<R, F>(range: Range<usize>, f: F) -> Option<R>
where
    F: Fn(usize) -> Option<R>,
{
    range.into_iter().find_map(f)
}

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<R, F>(range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<R, F>(range: Range<usize>, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    range.into_iter().map(f).collect()
}
