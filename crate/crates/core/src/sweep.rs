//! Exhaustive parallel sweeps over `S_n`.
//!
//! `S_n` is cut into contiguous lexicographic rank ranges; each rayon task
//! folds its range into a private accumulator and accumulators are merged
//! pairwise. Merges must be associative and commutative so results do not
//! depend on the worker count.

use rayon::prelude::*;

use crate::perm::{rank_chunks, Lexicographic};

pub fn par_fold<A, I, F, M>(n: usize, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[u8]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let chunks = rank_chunks(n, rayon::current_num_threads() * 8);
    chunks
        .into_par_iter()
        .map(|(a, b)| {
            let mut acc = init();
            Lexicographic::range(n, a, b)
                .expect("chunk ranks lie within n!")
                .for_each_slice(|v| fold(&mut acc, v));
            acc
        })
        .reduce(&init, &merge)
}

/// Element-wise sum of two count vectors of possibly different lengths.
pub fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Runs `f` on a dedicated pool with `workers` threads, or on the global pool when `None`.
pub fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
