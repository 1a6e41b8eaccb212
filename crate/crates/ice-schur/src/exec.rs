//! Execution strategy for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) the state sums, tableau sums and
//! suite instances run on rayon. Exact arithmetic makes every reduction
//! schedule-independent, so results are identical either way. The runtime
//! override exists so benchmarks can compare both paths in one build.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::error::Result;

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force the sequential path even when the `parallel` feature is enabled.
pub fn set_sequential(flag: bool) {
    FORCE_SEQUENTIAL.store(flag, Ordering::SeqCst);
}

/// True when work will actually be distributed over rayon.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::SeqCst)
}

/// Map a fallible function over `items`, preserving order.
pub fn try_map<T, U, F>(items: &[T], f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Map then fold with an associative, commutative combine.
pub fn try_map_reduce<T, U, F, G>(items: &[T], identity: U, f: F, combine: G) -> Result<U>
where
    T: Sync,
    U: Send + Sync + Clone,
    F: Fn(&T) -> Result<U> + Sync + Send,
    G: Fn(U, U) -> Result<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        use rayon::prelude::*;
        return items
            .par_iter()
            .map(f)
            .try_reduce(|| identity.clone(), |a, b| combine(a, b));
    }
    let mut acc = identity;
    for item in items {
        acc = combine(acc, f(item)?)?;
    }
    Ok(acc)
}
