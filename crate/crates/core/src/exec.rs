//! Sequential or data-parallel execution of independent work items.
//!
//! With the `parallel` feature off, [`Exec::Parallel`] degrades to the
//! sequential path, so results never depend on the build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

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
    /// Order-preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Order-preserving filter-map.
    pub fn filter_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().filter_map(f).collect(),
            _ => items.iter().filter_map(f).collect(),
        }
    }

    /// First item (in input order) for which `f` returns `Some`.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().filter_map(f).find_first(|_| true),
            _ => items.iter().find_map(f),
        }
    }

    /// Order-preserving map over `0..n`.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u32> = (0..1000).collect();
        for ex in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(ex.map(&xs, |x| x * 2)[999], 1998);
            assert_eq!(
                ex.find_map_first(&xs, |&x| (x % 7 == 6).then_some(x)),
                Some(6)
            );
            assert_eq!(ex.filter_map(&xs, |&x| (x < 3).then_some(x)), vec![0, 1, 2]);
            assert_eq!(ex.map_range(4, |i| i), vec![0, 1, 2, 3]);
        }
    }
}
