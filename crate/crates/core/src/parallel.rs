//! Thin dispatch layer between the rayon data-parallel path and the
//! sequential fallback.
//!
//! Every parallel reduction in this crate is an associative fold whose
//! result is independent of chunking, so `jobs = 1`, `jobs = k`, and builds
//! without the `parallel` feature all produce identical output.

/// Maps `items` and folds the results in index order.
///
/// With the `parallel` feature and `jobs > 1` the map runs on a rayon pool
/// of that many threads; the fold always happens sequentially in input
/// order, which keeps reductions deterministic even when they are not
/// commutative (e.g. tie-breaking on first witness).
pub fn map_fold<T, R, A>(
    jobs: usize,
    items: Vec<T>,
    map: impl Fn(T) -> R + Sync + Send,
    init: A,
    fold: impl Fn(A, R) -> A,
) -> A
where
    T: Send,
    R: Send,
{
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build thread pool");
        let mapped: Vec<R> = pool.install(|| items.into_par_iter().map(map).collect());
        return mapped.into_iter().fold(init, fold);
    }
    let _ = jobs;
    items.into_iter().map(map).fold(init, fold)
}

/// Splits `0..len` into roughly `pieces` contiguous ranges.
pub fn split_ranges(len: usize, pieces: usize) -> Vec<std::ops::Range<usize>> {
    let pieces = pieces.max(1).min(len.max(1));
    let chunk = len.div_ceil(pieces);
    (0..len)
        .step_by(chunk.max(1))
        .map(|start| start..(start + chunk).min(len))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_cover_exactly() {
        for len in [0usize, 1, 7, 64, 100] {
            for pieces in [1usize, 2, 3, 8] {
                let ranges = split_ranges(len, pieces);
                let total: usize = ranges.iter().map(|r| r.len()).sum();
                assert_eq!(total, len);
                let mut next = 0;
                for r in &ranges {
                    assert_eq!(r.start, next);
                    next = r.end;
                }
            }
        }
    }

    #[test]
    fn fold_order_is_stable() {
        let items: Vec<usize> = (0..100).collect();
        let seq = map_fold(1, items.clone(), |x| x, Vec::new(), |mut acc, x| {
            acc.push(x);
            acc
        });
        let par = map_fold(4, items, |x| x, Vec::new(), |mut acc, x| {
            acc.push(x);
            acc
        });
        assert_eq!(seq, par);
    }
}
