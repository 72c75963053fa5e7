// SPDX-License-Identifier: Apache-2.0

//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool. Without it, both variants run sequentially. Results
//! never depend on the schedule: every helper preserves input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn flat_map<T, U, I, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        I: IntoIterator<Item = U>,
        F: Fn(&T) -> I + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items
                .par_iter()
                .map(|t| f(t).into_iter().collect::<Vec<_>>())
                .flatten_iter()
                .collect(),
            _ => items.iter().flat_map(f).collect(),
        }
    }

    /// Integer range version of [`flat_map`](Self::flat_map).
    pub fn flat_map_range<U, I, F>(self, range: std::ops::RangeInclusive<i128>, f: F) -> Vec<U>
    where
        U: Send,
        I: IntoIterator<Item = U>,
        F: Fn(i128) -> I + Sync + Send,
    {
        let items: Vec<i128> = range.collect();
        self.flat_map(&items, |&i| f(i))
    }
}
