//! Window access shared by the offset-tuple searches, and the deterministic
//! top-level split.

use rayon::prelude::*;

use crate::bits::PackedBits;
use crate::instances::{MotifInstance, Symbol};

use super::{Counters, SolverError};

/// A length-`L` substring, packed when the alphabet is binary.
pub(crate) enum Window<'a> {
    Packed(PackedBits),
    Plain(&'a [Symbol]),
}

impl Window<'_> {
    /// Exact distance when `<= limit`, otherwise some value `> limit`.
    pub(crate) fn distance_bounded(&self, other: &Window<'_>, limit: usize) -> usize {
        match (self, other) {
            (Window::Packed(a), Window::Packed(b)) => a.window_hamming_bounded(0, b, limit),
            (Window::Plain(a), Window::Plain(b)) => bounded_plain(a, b, limit),
            _ => unreachable!("windows of one instance share a representation"),
        }
    }
}

fn bounded_plain(a: &[Symbol], b: &[Symbol], limit: usize) -> usize {
    let mut dist = 0;
    for (x, y) in a.iter().zip(b) {
        if x != y {
            dist += 1;
            if dist > limit {
                break;
            }
        }
    }
    dist
}

pub(crate) struct WindowSource<'a> {
    inst: &'a MotifInstance,
}

impl<'a> WindowSource<'a> {
    pub(crate) fn new(inst: &'a MotifInstance) -> Self {
        WindowSource { inst }
    }

    pub(crate) fn window(&self, i: usize, offset: usize) -> Window<'a> {
        let len = self.inst.substring_len();
        match self.inst.packed() {
            Some(p) => Window::Packed(p[i].window(offset, len)),
            None => Window::Plain(self.inst.strings()[i].window(offset, len)),
        }
    }

    /// Distance from `string[i][offset..]` to `other` without materializing
    /// the window; exact when `<= limit`.
    pub(crate) fn distance_to(&self, i: usize, offset: usize, other: &Window<'_>, limit: usize) -> usize {
        match (self.inst.packed(), other) {
            (Some(p), Window::Packed(w)) => p[i].window_hamming_bounded(offset, w, limit),
            (None, Window::Plain(w)) => bounded_plain(self.inst.strings()[i].window(offset, w.len()), w, limit),
            _ => unreachable!("windows of one instance share a representation"),
        }
    }

    pub(crate) fn symbols(&self, i: usize, offset: usize) -> &'a [Symbol] {
        self.inst.strings()[i].window(offset, self.inst.substring_len())
    }
}

/// Outcome of one top-level subtree.
pub(crate) enum Outcome<T> {
    Found(T),
    Exhausted,
}

/// Runs `subtree` for each first-level choice in order and stops at the
/// first one that finds a witness or fails. With `threads > 1`, batches of
/// choices run in parallel; results are still consumed in choice order, and
/// only counters of subtrees up to the deciding one are kept, so the
/// answer and the counters do not depend on the thread count.
pub(crate) fn split_first_level<T, F>(
    choices: &[usize],
    threads: usize,
    counters: &mut Counters,
    subtree: F,
) -> Result<Option<T>, SolverError>
where
    T: Send,
    F: Fn(usize) -> (Result<Outcome<T>, SolverError>, Counters) + Sync,
{
    let mut consume = |results: Vec<(Result<Outcome<T>, SolverError>, Counters)>| {
        for (res, c) in results {
            counters.absorb(&c);
            match res {
                Ok(Outcome::Exhausted) => {}
                Ok(Outcome::Found(t)) => return Some(Ok(Some(t))),
                Err(e) => return Some(Err(e)),
            }
        }
        None
    };

    if threads <= 1 {
        for &o in choices {
            if let Some(done) = consume(vec![subtree(o)]) {
                return done;
            }
        }
        return Ok(None);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| SolverError::Internal(format!("thread pool: {e}")))?;
    pool.install(|| {
        for batch in choices.chunks(threads * 2) {
            let results: Vec<_> = batch.par_iter().map(|&o| subtree(o)).collect();
            if let Some(done) = consume(results) {
                return done;
            }
        }
        Ok(None)
    })
}
