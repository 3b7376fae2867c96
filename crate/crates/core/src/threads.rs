//! Parallel execution plumbing. With the `parallel` feature the data-parallel
//! loops run on rayon, capped by the `INEQFORGE_THREADS` environment variable
//! when it is set; without the feature everything falls back to plain
//! sequential iteration with identical results (all computation is exact and
//! order-deterministic).

/// Name of the environment variable capping worker threads.
pub const THREADS_ENV: &str = "INEQFORGE_THREADS";

#[cfg(feature = "parallel")]
mod imp {
    use std::sync::OnceLock;

    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();

    fn capped_pool() -> &'static Option<rayon::ThreadPool> {
        POOL.get_or_init(|| {
            std::env::var(super::THREADS_ENV)
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(|n| {
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(n)
                        .build()
                        .expect("failed to build worker pool")
                })
        })
    }

    /// Order-preserving parallel map.
    pub fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        use rayon::prelude::*;
        let work = move || items.into_par_iter().map(&f).collect();
        match capped_pool() {
            Some(pool) => pool.install(work),
            None => work(),
        }
    }
}

#[cfg(not(feature = "parallel"))]
mod imp {
    pub fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
    where
        F: Fn(T) -> U,
    {
        items.into_iter().map(f).collect()
    }
}

pub use imp::map_ordered;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let out = map_ordered((0..1000).collect::<Vec<i64>>(), |x| x * x);
        for (i, v) in out.iter().enumerate() {
            assert_eq!(*v, (i as i64) * (i as i64));
        }
    }
}
