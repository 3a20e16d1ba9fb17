//! Round-trip verification: `G` has a `k`-clique exactly when the reduced
//! instance is solvable, checked graph by graph with the exact solvers.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graphs::{all_pairs, find_clique, is_clique, Graph, VertexSet};
use crate::instances::{evaluate, region_profile, Metric, MotifInstance, Solution, Symbol, SymbolString};
use crate::reduce::{binomial2, ReductionMeta, Variant};
use crate::solvers::{prune_offsets, solve, Counters, SolverConfig, SolverError, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The solver hit a resource cap; neither pass nor fail.
    Inconclusive(String),
}

impl Outcome {
    pub fn keyword(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail(_) => "fail",
            Outcome::Inconclusive(_) => "inconclusive",
        }
    }
}

/// Everything one round trip computed, for reporting and for assertions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripReport {
    pub variant: Variant,
    pub k: usize,
    pub graph: Graph,
    /// Lex-least `k`-clique of the graph, if any.
    pub clique: Option<VertexSet>,
    /// Solver verdict; `None` when inconclusive or the reduction failed.
    pub sat: Option<bool>,
    /// Aggregate distance of the solver's witness.
    pub aggregate: Option<usize>,
    /// Clique decoded from the solver's center.
    pub extracted: Option<VertexSet>,
    /// Per-string distances of the forward witness built from `clique`.
    pub witness_distances: Option<Vec<usize>>,
    /// Whether every forward-witness offset survives offset pruning.
    pub witness_survives_pruning: Option<bool>,
    pub counters: Counters,
    pub outcome: Outcome,
}

impl RoundTripReport {
    /// `<verdict> <clique?> <sat?> <aggregate>`
    pub fn line(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        format!(
            "{} {} {} {}",
            self.outcome.keyword(),
            yes_no(self.clique.is_some()),
            self.sat.map_or("?", yes_no),
            self.aggregate.map_or("-".to_string(), |a| a.to_string()),
        )
    }
}

/// Reduces `g`, solves the instance and checks both directions of the
/// clique/solvability equivalence, the extracted clique, and the exact
/// distance profile of the forward witness.
pub fn round_trip(g: &Graph, k: usize, variant: Variant, cfg: &SolverConfig) -> RoundTripReport {
    let mut report = RoundTripReport {
        variant,
        k,
        graph: g.clone(),
        clique: find_clique(g, k),
        sat: None,
        aggregate: None,
        extracted: None,
        witness_distances: None,
        witness_survives_pruning: None,
        counters: Counters::default(),
        outcome: Outcome::Pass,
    };
    if let Err(msg) = check(&mut report, cfg) {
        report.outcome = msg;
    }
    report
}

fn check(r: &mut RoundTripReport, cfg: &SolverConfig) -> Result<(), Outcome> {
    let fail = |msg: String| Outcome::Fail(msg);
    let (inst, meta) = r.variant.reduce(&r.graph, r.k).map_err(|e| fail(format!("reduction: {e}")))?;

    if let Some(clique) = r.clique.clone() {
        let sol = r.variant.forward_witness(&meta, &clique).map_err(|e| fail(format!("forward witness: {e}")))?;
        let ev = evaluate(&inst, &sol).map_err(|e| fail(format!("forward witness: {e}")))?;
        check_witness_profile(&inst, &meta, &sol, &ev.distances).map_err(fail)?;
        let domain = prune_offsets(&inst);
        let survives = sol.offsets.iter().enumerate().all(|(i, &o)| domain.contains(i, o));
        r.witness_distances = Some(ev.distances);
        r.witness_survives_pruning = Some(survives);
        if !survives {
            return Err(fail("pruning removed a forward-witness offset".into()));
        }
    }

    let report = match solve(&inst, cfg) {
        Ok(rep) => rep,
        Err(SolverError::ResourceCap(msg)) => return Err(Outcome::Inconclusive(msg)),
        Err(e) => return Err(fail(format!("solver: {e}"))),
    };
    r.counters = report.counters;
    r.sat = Some(report.verdict.is_sat());
    match (&r.clique, &report.verdict) {
        (Some(_), Verdict::Unsat) => return Err(fail("clique present but instance unsolvable".into())),
        (None, Verdict::Sat(_)) => return Err(fail("no clique but instance solvable".into())),
        _ => {}
    }
    if let Verdict::Sat(sol) = &report.verdict {
        let ev = evaluate(&inst, sol).map_err(|e| fail(format!("solver witness: {e}")))?;
        r.aggregate = Some(ev.aggregate);
        if !ev.feasible {
            return Err(fail(format!("solver witness aggregate {} exceeds {}", ev.aggregate, inst.budget())));
        }
        let found = r.variant.extract_clique(&meta, &sol.center).map_err(|e| fail(format!("extraction: {e}")))?;
        let ok = found.len() == r.k && is_clique(&r.graph, &found);
        r.extracted = Some(found.clone());
        if !ok {
            return Err(fail(format!("extracted {found} is not a {}-clique", r.k)));
        }
    }
    Ok(())
}

/// Exact distances the forward witness must realize.
fn check_witness_profile(
    inst: &MotifInstance,
    meta: &ReductionMeta,
    sol: &Solution,
    distances: &[usize],
) -> Result<(), String> {
    let (n, k) = (meta.n(), meta.k);
    match meta.variant {
        Variant::Unbounded => {
            if distances.iter().any(|&x| x != k - 2) {
                return Err(format!("distances {distances:?}, expected all {}", k - 2));
            }
        }
        Variant::Binary => {
            let profile = region_profile(inst, sol, &meta.layout).map_err(|e| e.to_string())?;
            let block = [0, k - 2, (n * k + 2).saturating_sub(2 * k)];
            let template = [0, n * k - k, 0];
            for (i, p) in profile.iter().enumerate() {
                let want = if i < meta.choice_count { block } else { template };
                if *p != want {
                    return Err(format!("string {i} region distances {p:?}, expected {want:?}"));
                }
            }
        }
        Variant::Consensus => {
            let total: usize = distances.iter().sum();
            let want = (binomial2(k) - (k - 1)) * n * k;
            if total != want {
                return Err(format!("total distance {total}, expected {want}"));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphSource {
    /// Every labeled graph on `n` vertices, in edge-mask order.
    Exhaustive,
    /// `count` graphs on `n` vertices with edge probability 1/2.
    SeededRandom { count: usize, seed: u64 },
}

impl GraphSource {
    pub fn graphs(self, n: usize) -> Vec<Graph> {
        match self {
            GraphSource::Exhaustive => {
                let pairs = binomial2(n);
                assert!(pairs < 64, "exhaustive sweep needs fewer than 64 vertex pairs");
                (0..1u64 << pairs).map(|mask| Graph::from_mask(n, mask)).collect()
            }
            GraphSource::SeededRandom { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let edges: Vec<_> = all_pairs(n).filter(|_| rng.gen_bool(0.5)).collect();
                        Graph::new(n, edges).expect("generated edges are valid")
                    })
                    .collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub variant: Variant,
    pub n: usize,
    pub k: usize,
    pub source: GraphSource,
    /// One report per graph, in source order.
    pub reports: Vec<RoundTripReport>,
}

impl SweepSummary {
    fn count(&self, keyword: &str) -> usize {
        self.reports.iter().filter(|r| r.outcome.keyword() == keyword).count()
    }

    pub fn passes(&self) -> usize {
        self.count("pass")
    }

    pub fn fails(&self) -> usize {
        self.count("fail")
    }

    pub fn inconclusive(&self) -> usize {
        self.count("inconclusive")
    }

    pub fn all_pass(&self) -> bool {
        self.passes() == self.reports.len()
    }

    pub fn counters(&self) -> Counters {
        let mut total = Counters::default();
        for r in &self.reports {
            total.absorb(&r.counters);
        }
        total
    }

    /// Per-graph lines, then `<p> pass / <f> fail` and `#`-prefixed totals.
    /// Failing graphs are listed verbatim with the reason.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.reports.iter().enumerate() {
            writeln!(out, "{i} {}", r.line()).unwrap();
        }
        writeln!(out, "{} pass / {} fail", self.passes(), self.fails()).unwrap();
        writeln!(out, "# inconclusive {}", self.inconclusive()).unwrap();
        writeln!(out, "# variant {} k {} n {}", self.variant, self.k, self.n).unwrap();
        match self.source {
            GraphSource::Exhaustive => writeln!(out, "# source exhaustive").unwrap(),
            GraphSource::SeededRandom { count, seed } => {
                writeln!(out, "# source random count {count} seed {seed}").unwrap()
            }
        }
        let c = self.counters();
        writeln!(out, "# nodes_explored {}", c.nodes_explored).unwrap();
        writeln!(out, "# offsets_pruned {}", c.offsets_pruned).unwrap();
        writeln!(out, "# leaves_decided {}", c.leaves_decided).unwrap();
        for (i, r) in self.reports.iter().enumerate() {
            if let Outcome::Fail(msg) | Outcome::Inconclusive(msg) = &r.outcome {
                writeln!(out, "# {i} {} {}: {msg}", r.outcome.keyword(), r.graph).unwrap();
            }
        }
        out
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Round trips over a graph family, run in parallel and reported in source
/// order.
pub fn sweep(n: usize, k: usize, variant: Variant, source: GraphSource, cfg: &SolverConfig) -> SweepSummary {
    let reports = source.graphs(n).par_iter().map(|g| round_trip(g, k, variant, cfg)).collect();
    SweepSummary { variant, n, k, source, reports }
}

/// Seeded toy Closest String inputs: `K <= 4` strings of a common length
/// `L <= 8` over `A in {2, 3}`, with `d <= 3`. Yields `(strings, A, d)`.
pub fn random_closest_string_sets(count: usize, seed: u64) -> Vec<(Vec<SymbolString>, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let alphabet = rng.gen_range(2..=3);
            let len = rng.gen_range(1..=8);
            let k = rng.gen_range(1..=4);
            let strings = (0..k).map(|_| random_string(&mut rng, alphabet, len)).collect();
            (strings, alphabet, rng.gen_range(0..=3))
        })
        .collect()
}

/// Seeded toy motif instances with `A^L <= 3^6`: `K <= 4` strings of length
/// `L..=L+4`, `d <= 3` per string for the max metric and `d <= 6` in total
/// for the sum metric.
pub fn random_motif_instances(metric: Metric, count: usize, seed: u64) -> Vec<MotifInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let alphabet = rng.gen_range(2..=3);
            let len = rng.gen_range(1..=6);
            let k = rng.gen_range(1..=4);
            let strings = (0..k)
                .map(|_| {
                    let extra = rng.gen_range(0..=4);
                    random_string(&mut rng, alphabet, len + extra)
                })
                .collect();
            let d = match metric {
                Metric::MaxDistance => rng.gen_range(0..=3),
                Metric::SumDistance => rng.gen_range(0..=6),
            };
            MotifInstance::new(metric, alphabet, strings, len, d).expect("generated instance is valid")
        })
        .collect()
}

fn random_string(rng: &mut ChaCha8Rng, alphabet: usize, len: usize) -> SymbolString {
    SymbolString::new((0..len).map(|_| rng.gen_range(0..alphabet as Symbol)).collect())
}
