use std::time::Instant;

use crate::instances::{hamming_unchecked, Metric, MotifInstance, Solution, Symbol, SymbolString};

use super::search::{split_first_level, Outcome, WindowSource};
use super::{check_witness, prune_offsets, Counters, SolverConfig, SolverError, SolverReport, Verdict};

/// Column-wise plurality; ties go to the smallest symbol id. Minimizes the
/// sum of Hamming distances to `subs`.
pub fn majority_center<S: AsRef<[Symbol]>>(subs: &[S]) -> Result<SymbolString, SolverError> {
    let len = subs.first().map_or(0, |s| s.as_ref().len());
    if subs.iter().any(|s| s.as_ref().len() != len) {
        return Err(SolverError::Precondition("substrings of unequal length".into()));
    }
    let alphabet = subs.iter().flat_map(|s| s.as_ref().iter()).max().map_or(1, |&m| m as usize + 1);
    let mut counts = vec![0usize; alphabet];
    let center = (0..len)
        .map(|col| {
            counts.fill(0);
            for s in subs {
                counts[s.as_ref()[col] as usize] += 1;
            }
            // max_by_key keeps the last maximum, so scan in reverse
            counts.iter().enumerate().rev().max_by_key(|&(_, &c)| c).map_or(0, |(sym, _)| sym as Symbol)
        })
        .collect();
    Ok(SymbolString::new(center))
}

/// Sum of distances from the majority center to `subs`.
pub fn consensus_cost<S: AsRef<[Symbol]>>(subs: &[S]) -> Result<usize, SolverError> {
    let center = majority_center(subs)?;
    Ok(subs.iter().map(|s| hamming_unchecked(&center, s.as_ref())).sum())
}

/// Per-column symbol counts of the substrings chosen so far, with the
/// running optimal consensus cost `t * L - sum(column maxima)`.
struct ColumnCounts {
    alphabet: usize,
    counts: Vec<u32>,
    maxima: Vec<u32>,
    sum_max: usize,
    rows: usize,
}

impl ColumnCounts {
    fn new(len: usize, alphabet: usize) -> Self {
        ColumnCounts { alphabet, counts: vec![0; len * alphabet], maxima: vec![0; len], sum_max: 0, rows: 0 }
    }

    /// Adds a row and returns the columns whose maximum went up.
    fn push(&mut self, row: &[Symbol]) -> Vec<usize> {
        let mut raised = Vec::new();
        for (col, &s) in row.iter().enumerate() {
            let c = &mut self.counts[col * self.alphabet + s as usize];
            *c += 1;
            if *c > self.maxima[col] {
                self.maxima[col] = *c;
                self.sum_max += 1;
                raised.push(col);
            }
        }
        self.rows += 1;
        raised
    }

    /// Undoes the matching `push`.
    fn pop(&mut self, row: &[Symbol], raised: &[usize]) {
        for (col, &s) in row.iter().enumerate() {
            self.counts[col * self.alphabet + s as usize] -= 1;
        }
        for &col in raised {
            self.maxima[col] -= 1;
        }
        self.sum_max -= raised.len();
        self.rows -= 1;
    }

    fn cost(&self) -> usize {
        self.rows * self.maxima.len() - self.sum_max
    }
}

/// Exact Consensus Patterns by branch and bound over offset tuples.
///
/// The optimal consensus cost of a partial selection never decreases when a
/// substring is added (each column's count-minus-plurality grows by 0 or
/// 1), so a partial tuple whose cost already exceeds `d` is cut.
pub fn consensus_exact(inst: &MotifInstance, cfg: &SolverConfig) -> Result<SolverReport, SolverError> {
    if inst.metric() != Metric::SumDistance {
        return Err(SolverError::WrongMetric { expected: Metric::SumDistance });
    }
    let start = Instant::now();
    let domain = prune_offsets(inst);
    let mut counters = Counters { nodes_explored: 1, offsets_pruned: domain.pruned, leaves_decided: 0 };

    let verdict = if inst.count() == 0 {
        Verdict::Sat(Solution::new(SymbolString::new(vec![0; inst.substring_len()]), vec![]))
    } else if domain.offsets.iter().any(Vec::is_empty) {
        Verdict::Unsat
    } else {
        let search = Search { inst, source: WindowSource::new(inst), domains: &domain.offsets };
        match split_first_level(&domain.offsets[0], cfg.threads, &mut counters, |o| search.subtree(o))? {
            Some(sol) => Verdict::Sat(sol),
            None => Verdict::Unsat,
        }
    };
    if let Verdict::Sat(sol) = &verdict {
        check_witness(inst, sol)?;
    }
    Ok(SolverReport { verdict, counters, elapsed: start.elapsed() })
}

struct Search<'a> {
    inst: &'a MotifInstance,
    source: WindowSource<'a>,
    domains: &'a [Vec<usize>],
}

impl Search<'_> {
    fn subtree(&self, first: usize) -> (Result<Outcome<Solution>, SolverError>, Counters) {
        let mut counters = Counters::default();
        let mut cols = ColumnCounts::new(self.inst.substring_len(), self.inst.alphabet_size());
        let row = self.source.symbols(0, first);
        cols.push(row);
        let mut tuple = vec![first];
        let outcome = if cols.cost() > self.inst.budget() {
            counters.nodes_explored += 1;
            Outcome::Exhausted
        } else if self.extend(&mut tuple, &mut cols, &mut counters) {
            let subs: Vec<&[Symbol]> = tuple.iter().enumerate().map(|(i, &o)| self.source.symbols(i, o)).collect();
            match majority_center(&subs) {
                Ok(center) => Outcome::Found(Solution::new(center, tuple)),
                Err(e) => return (Err(e), counters),
            }
        } else {
            Outcome::Exhausted
        };
        (Ok(outcome), counters)
    }

    fn extend(&self, tuple: &mut Vec<usize>, cols: &mut ColumnCounts, counters: &mut Counters) -> bool {
        counters.nodes_explored += 1;
        let level = tuple.len();
        if level == self.inst.count() {
            counters.leaves_decided += 1;
            return cols.cost() <= self.inst.budget();
        }
        for &o in &self.domains[level] {
            let row = self.source.symbols(level, o);
            let raised = cols.push(row);
            if cols.cost() <= self.inst.budget() {
                tuple.push(o);
                if self.extend(tuple, cols, counters) {
                    return true;
                }
                tuple.pop();
            }
            cols.pop(row, &raised);
        }
        false
    }
}
