use std::time::Instant;

use crate::instances::{Metric, MotifInstance, Solution, Symbol, SymbolString};

use super::closest_string::{branch_with_cap, closest_string_column_dp, closest_string_enumerate};
use super::search::{split_first_level, Outcome, Window, WindowSource};
use super::{check_witness, pow_within, prune_offsets, Counters, SolverConfig, SolverError, SolverReport, Verdict};

/// Exact Closest Substring.
///
/// Walks offset tuples in lexicographic order over the pruned domains. A
/// partial tuple is extended only while every pair of chosen windows is
/// within `2d` of each other; a full tuple is decided as a Closest String
/// instance by the cheapest applicable leaf strategy (center enumeration,
/// binary column DP, or branching).
pub fn closest_substring_exact(inst: &MotifInstance, cfg: &SolverConfig) -> Result<SolverReport, SolverError> {
    if inst.metric() != Metric::MaxDistance {
        return Err(SolverError::WrongMetric { expected: Metric::MaxDistance });
    }
    let start = Instant::now();
    let domain = prune_offsets(inst);
    let mut counters = Counters { nodes_explored: 1, offsets_pruned: domain.pruned, leaves_decided: 0 };

    let verdict = if inst.count() == 0 {
        Verdict::Sat(Solution::new(SymbolString::new(vec![0; inst.substring_len()]), vec![]))
    } else if domain.offsets.iter().any(Vec::is_empty) {
        Verdict::Unsat
    } else {
        let search = TupleSearch { inst, source: WindowSource::new(inst), domains: &domain.offsets, cfg };
        let found = split_first_level(&domain.offsets[0], cfg.threads, &mut counters, |o| search.subtree(o))?;
        match found {
            Some(sol) => Verdict::Sat(sol),
            None => Verdict::Unsat,
        }
    };
    if let Verdict::Sat(sol) = &verdict {
        check_witness(inst, sol)?;
    }
    Ok(SolverReport { verdict, counters, elapsed: start.elapsed() })
}

struct TupleSearch<'a> {
    inst: &'a MotifInstance,
    source: WindowSource<'a>,
    domains: &'a [Vec<usize>],
    cfg: &'a SolverConfig,
}

impl TupleSearch<'_> {
    fn subtree(&self, first: usize) -> (Result<Outcome<Solution>, SolverError>, Counters) {
        let mut counters = Counters::default();
        let mut tuple = vec![first];
        let mut windows = vec![self.source.window(0, first)];
        let res = self.extend(&mut tuple, &mut windows, &mut counters).map(|found| match found {
            Some(center) => Outcome::Found(Solution::new(center, tuple.clone())),
            None => Outcome::Exhausted,
        });
        (res, counters)
    }

    /// On success `tuple` holds the witness offsets.
    fn extend<'w>(
        &'w self,
        tuple: &mut Vec<usize>,
        windows: &mut Vec<Window<'w>>,
        counters: &mut Counters,
    ) -> Result<Option<SymbolString>, SolverError> {
        counters.nodes_explored += 1;
        let level = tuple.len();
        if level == self.inst.count() {
            counters.leaves_decided += 1;
            return self.decide_leaf(tuple);
        }
        let limit = 2 * self.inst.budget();
        for &o in &self.domains[level] {
            let w = self.source.window(level, o);
            if windows.iter().any(|prev| prev.distance_bounded(&w, limit) > limit) {
                continue;
            }
            tuple.push(o);
            windows.push(w);
            if let Some(center) = self.extend(tuple, windows, counters)? {
                return Ok(Some(center));
            }
            windows.pop();
            tuple.pop();
        }
        Ok(None)
    }

    fn decide_leaf(&self, tuple: &[usize]) -> Result<Option<SymbolString>, SolverError> {
        let mut subs: Vec<&[Symbol]> = Vec::with_capacity(tuple.len());
        for (i, &o) in tuple.iter().enumerate() {
            let w = self.source.symbols(i, o);
            if !subs.contains(&w) {
                subs.push(w);
            }
        }
        decide_closest_string(&subs, self.inst.alphabet_size(), self.inst.budget(), self.cfg)
    }
}

/// Leaf strategy: enumerate centers if `A^L <= naive_cap`, else binary
/// column DP if `(d+2)^K <= dp_cap`, else branching.
pub(crate) fn decide_closest_string(
    subs: &[&[Symbol]],
    alphabet: usize,
    d: usize,
    cfg: &SolverConfig,
) -> Result<Option<SymbolString>, SolverError> {
    let len = subs.first().map_or(0, |s| s.len());
    if pow_within(alphabet as u64, len, cfg.naive_cap).is_some() {
        closest_string_enumerate(subs, alphabet, d, cfg.naive_cap)
    } else if alphabet == 2 && pow_within(d as u64 + 2, subs.len(), cfg.dp_cap).is_some() {
        closest_string_column_dp(subs, d, cfg.dp_cap)
    } else {
        branch_with_cap(subs, d, cfg.branch_cap)
    }
}
