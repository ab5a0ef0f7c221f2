//! Sweep drivers. With the `parallel` feature the work is split over rayon;
//! [`set_sequential`] forces the plain iterator path at runtime (used by the benches).
//! Both paths return results in input order, so reports do not depend on scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

pub fn set_sequential(on: bool) {
    FORCE_SEQUENTIAL.store(on, Ordering::SeqCst);
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::SeqCst)
}

#[cfg(feature = "parallel")]
mod imp {
    use rayon::prelude::*;

    pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        items.par_iter().map(f).collect()
    }

    pub fn filter_map<T: Sync, R: Send>(
        items: &[T],
        f: impl Fn(&T) -> Option<R> + Sync + Send,
    ) -> Vec<R> {
        items.par_iter().filter_map(f).collect()
    }

    pub fn find_first<T: Sync, R: Send>(
        items: &[T],
        f: impl Fn(&T) -> Option<R> + Sync + Send,
    ) -> Option<R> {
        items.par_iter().find_map_first(f)
    }
}

pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return imp::map(items, f);
    }
    items.iter().map(f).collect()
}

pub fn filter_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return imp::filter_map(items, f);
    }
    items.iter().filter_map(f).collect()
}

/// First (in input order) item for which `f` returns `Some`.
pub fn find_first<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Option<R> {
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return imp::find_first(items, f);
    }
    items.iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_stable() {
        let v: Vec<u32> = (0..1000).collect();
        let hits = filter_map(&v, |&x| (x % 7 == 3).then_some(x));
        assert!(hits.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(find_first(&v, |&x| (x > 500 && x % 11 == 0).then_some(x)), Some(506));
    }
}
