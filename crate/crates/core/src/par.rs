//! Execution strategy for batch work: rayon when the `parallel` feature is on,
//! a plain iterator otherwise. Results are always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many work items the parallel path runs sequentially anyway.
pub const PARALLEL_THRESHOLD: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Falls back to [`Exec::Sequential`] when built without `parallel`.
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && items.len() >= PARALLEL_THRESHOLD {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Order-preserving map over `0..count`.
pub fn map_range<R, F>(exec: Exec, count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() && count > 1 {
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..count).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree_and_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map(Exec::Sequential, &items, |x| x * x);
        let par = map(Exec::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(map_range(Exec::Parallel, 5, |i| i), vec![0, 1, 2, 3, 4]);
    }
}
