//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) `Exec::Parallel` runs on the rayon
//! pool; without it both variants run sequentially. Results always come back
//! in input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            _ => items.into_iter().map(f).collect(),
        }
    }

    /// True iff `f` holds for every item; stops early on the first failure.
    pub fn all<T, F>(self, items: Vec<T>, f: F) -> bool
    where
        T: Send,
        F: Fn(T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().all(f)
            }
            _ => items.into_iter().all(f),
        }
    }
}

/// Sizes the global worker pool from `VERIHARNESS_THREADS` when it is set.
/// Returns the thread count that was requested, if any.
pub fn configure_threads_from_env() -> Option<usize> {
    let n = std::env::var("VERIHARNESS_THREADS").ok()?.trim().parse::<usize>().ok()?;
    #[cfg(feature = "parallel")]
    {
        // a second initialisation attempt is harmless; keep the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Some(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (0..200).collect();
        let seq = Exec::Sequential.map(items.clone(), |x| x * x);
        let par = Exec::Parallel.map(items, |x| x * x);
        assert_eq!(seq, par);
        assert!(Exec::Parallel.all((1..50).collect(), |x: u32| x > 0));
        assert!(!Exec::Sequential.all((0..50).collect(), |x: u32| x > 0));
    }
}
