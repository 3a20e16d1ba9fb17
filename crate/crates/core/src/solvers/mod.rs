//! Exact solvers for Closest String, Closest Substring and Consensus
//! Patterns, plus the naive center-enumeration oracle used to cross-check
//! them.
//!
//! The substring solvers search offset tuples in lexicographic order and
//! return the first feasible one, so a SAT witness is canonical: least
//! offset tuple, then whatever center the leaf decider settles on. Top-level
//! subtrees may run on several threads; results and counters are merged in
//! subtree order, which keeps reports independent of the thread count.

mod closest_string;
mod consensus;
mod naive;
mod prune;
mod search;
mod substring;

use std::fmt::Write as _;
use std::time::Duration;

use thiserror::Error;

use crate::instances::{evaluate, InstanceError, Metric, MotifInstance, Solution};

pub use closest_string::{closest_string_branch, closest_string_column_dp, closest_string_enumerate};
pub use consensus::{consensus_cost, consensus_exact, majority_center};
pub use naive::{naive_center_oracle, NaiveOutcome};
pub use prune::{prune_offsets, OffsetDomain};
pub use substring::closest_substring_exact;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("solver expects the {expected:?} metric")]
    WrongMetric { expected: Metric },
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// Limits that pick the leaf strategy and bound the work of each leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest `A^L` for which a leaf enumerates every center.
    pub naive_cap: u64,
    /// Largest `(d+2)^K` for which a binary leaf runs the column DP.
    pub dp_cap: u64,
    /// Search-node budget of a single branching leaf.
    pub branch_cap: u64,
    /// Worker threads for the top-level offset split; 0 and 1 are sequential.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { naive_cap: 1_000_000, dp_cap: 1_000_000, branch_cap: 10_000_000, threads: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Sat(Solution),
    Unsat,
}

impl Verdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }

    pub fn solution(&self) -> Option<&Solution> {
        match self {
            Verdict::Sat(s) => Some(s),
            Verdict::Unsat => None,
        }
    }
}

/// Work counters; all deterministic for a given instance and configuration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    /// Partial offset tuples visited, the empty tuple included.
    pub nodes_explored: u64,
    /// Offsets removed by [`prune_offsets`].
    pub offsets_pruned: u64,
    /// Complete tuples handed to a leaf decision.
    pub leaves_decided: u64,
}

impl Counters {
    pub(crate) fn absorb(&mut self, other: &Counters) {
        self.nodes_explored += other.nodes_explored;
        self.offsets_pruned += other.offsets_pruned;
        self.leaves_decided += other.leaves_decided;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverReport {
    pub verdict: Verdict,
    pub counters: Counters,
    pub elapsed: Duration,
}

impl SolverReport {
    /// Plain-text report: verdict line, then (for SAT) the center and the
    /// offsets as space-separated integers, then counters as `# key value`.
    /// Wall time is left out so the text is reproducible.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.verdict {
            Verdict::Sat(sol) => {
                out.push_str("SAT\n");
                writeln!(out, "{}", sol.center).unwrap();
                let offsets: Vec<String> = sol.offsets.iter().map(|o| o.to_string()).collect();
                writeln!(out, "{}", offsets.join(" ")).unwrap();
            }
            Verdict::Unsat => out.push_str("UNSAT\n"),
        }
        let c = &self.counters;
        writeln!(out, "# nodes_explored {}", c.nodes_explored).unwrap();
        writeln!(out, "# offsets_pruned {}", c.offsets_pruned).unwrap();
        writeln!(out, "# leaves_decided {}", c.leaves_decided).unwrap();
        out
    }
}

/// Runs the exact solver matching the instance's metric.
pub fn solve(inst: &MotifInstance, cfg: &SolverConfig) -> Result<SolverReport, SolverError> {
    match inst.metric() {
        Metric::MaxDistance => closest_substring_exact(inst, cfg),
        Metric::SumDistance => consensus_exact(inst, cfg),
    }
}

/// Re-evaluates a SAT witness before it leaves a solver.
pub(crate) fn check_witness(inst: &MotifInstance, sol: &Solution) -> Result<(), SolverError> {
    let ev = evaluate(inst, sol)?;
    if !ev.feasible {
        return Err(SolverError::Internal(format!(
            "witness aggregate {} exceeds budget {}",
            ev.aggregate,
            inst.budget()
        )));
    }
    Ok(())
}

/// `base^exp`, or `None` once it passes `cap`.
pub(crate) fn pow_within(base: u64, exp: usize, cap: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).filter(|&v| v <= cap)?;
    }
    (acc <= cap).then_some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::SymbolString;

    #[test]
    fn pow_within_caps() {
        assert_eq!(pow_within(8, 4, 1_000_000), Some(4096));
        assert_eq!(pow_within(2, 20, 1_000_000), None);
        assert_eq!(pow_within(2, 0, 1), Some(1));
        assert_eq!(pow_within(1, 10_000, 1), Some(1));
        assert_eq!(pow_within(2, 2000, u64::MAX), None);
    }

    #[test]
    fn report_text() {
        let report = SolverReport {
            verdict: Verdict::Sat(Solution::new(SymbolString::new(vec![0, 2, 3, 7]), vec![0, 7, 21])),
            counters: Counters { nodes_explored: 5, offsets_pruned: 0, leaves_decided: 1 },
            elapsed: Duration::from_millis(3),
        };
        assert_eq!(
            report.to_text(),
            "SAT\n0 2 3 7\n0 7 21\n# nodes_explored 5\n# offsets_pruned 0\n# leaves_decided 1\n"
        );
        let unsat = SolverReport { verdict: Verdict::Unsat, ..report };
        assert!(unsat.to_text().starts_with("UNSAT\n# nodes_explored 5\n"));
    }
}
