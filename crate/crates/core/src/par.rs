//! Index-ordered parallel map.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! pool; without it every call runs sequentially. Results always come back
//! in index order, so output does not depend on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a batch of independent evaluations is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

/// Evaluates `f(0), ..., f(n - 1)` and returns the results in index order.
pub fn map_indexed<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        _ => (0..n).map(f).collect(),
    }
}

/// Sizes the global rayon pool. `0` keeps rayon's automatic choice.
///
/// Returns `false` if the pool was already initialised (the existing pool is
/// kept) or if the crate was built without the `parallel` feature.
pub fn init_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        if threads == 0 {
            return false;
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree_and_keep_order() {
        let f = |i: usize| (i as f64).sqrt().sin();
        let seq = map_indexed(257, Execution::Sequential, f);
        let par = map_indexed(257, Execution::Parallel, f);
        assert_eq!(seq, par);
        assert_eq!(seq[16], 4f64.sin());
    }

    #[test]
    fn empty_batch() {
        let v: Vec<u8> = map_indexed(0, Execution::Parallel, |_| 1);
        assert!(v.is_empty());
    }
}
