//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact; the only tolerances are wall-clock
//! limits, pinned below.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use cliquemotif::reduce::binary::back_section_len;
use cliquemotif::solvers::{
    closest_string_branch, closest_string_column_dp, closest_string_enumerate, closest_substring_exact,
    consensus_exact, naive_center_oracle, prune_offsets,
};
use cliquemotif::{
    evaluate, find_clique, random_closest_string_sets, random_motif_instances, region_profile, serialize_instance,
    solve, sweep, Graph, GraphSource, Metric, MotifInstance, ReductionMeta, SolverConfig, Symbol, Variant, VertexSet,
};

const LIMIT_EXAMPLE_1: Duration = Duration::from_secs(1);
const LIMIT_EXAMPLE_2: Duration = Duration::from_secs(30);
const LIMIT_CONSENSUS: Duration = Duration::from_secs(60);
const LIMIT_ROUND_TRIP: Duration = Duration::from_secs(600);
const LIMIT_CROSS_VALIDATION: Duration = Duration::from_secs(300);

const RANDOM_GRAPH_SEED: u64 = 1;
const CLOSEST_STRING_SEED: u64 = 101;
const SUBSTRING_SEED: u64 = 102;
const CONSENSUS_SEED: u64 = 103;
/// Enumeration cap for the oracle; every toy instance has `A^L <= 3^6`.
const ORACLE_CAP: u64 = 1_000_000;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn within(what: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn example_graph() -> Graph {
    Graph::new(4, vec![(1, 3), (1, 4), (2, 3), (3, 4)]).unwrap()
}

fn clique_134() -> VertexSet {
    VertexSet::new(vec![1, 3, 4]).unwrap()
}

fn reduce(g: &Graph, variant: Variant) -> Result<(MotifInstance, ReductionMeta), String> {
    variant.reduce(g, 3).map_err(|e| format!("{variant} reduction: {e}"))
}

/// Solves and decodes; `None` for UNSAT.
fn solve_and_extract(inst: &MotifInstance, meta: &ReductionMeta) -> Result<Option<VertexSet>, String> {
    let report = solve(inst, &SolverConfig::default()).map_err(|e| e.to_string())?;
    match report.verdict.solution() {
        None => Ok(None),
        Some(sol) => meta.variant.extract_clique(meta, &sol.center).map(Some).map_err(|e| e.to_string()),
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let (inst, meta) = reduce(&example_graph(), Variant::Unbounded)?;
    eq("K A L d", (inst.count(), inst.alphabet_size(), inst.substring_len(), inst.budget()), (3, 8, 4, 1))?;
    eq("lengths", inst.strings().iter().map(|s| s.len()).collect::<Vec<_>>(), vec![25; 3])?;
    // documented legend for n = 4, k = 3
    let sigma = |i: Symbol| i - 1;
    let phi = |i: Symbol| 4 + i - 1;
    let hash: Symbol = 4 + 3;
    let expected = [
        (0, 0, [sigma(1), sigma(3), phi(1), hash]),
        (1, 7, [sigma(1), phi(2), sigma(4), hash]),
        (2, 21, [phi(3), sigma(3), sigma(4), hash]),
    ];
    for (s, offset, block) in expected {
        eq("block", inst.strings()[s].window(offset, 4), &block[..])?;
    }
    let wit = Variant::Unbounded.forward_witness(&meta, &clique_134()).map_err(|e| e.to_string())?;
    eq("witness distances", evaluate(&inst, &wit).unwrap().distances, vec![1, 1, 1])?;
    eq("extracted", solve_and_extract(&inst, &meta)?, Some(clique_134()))?;
    within("example 1", start.elapsed(), LIMIT_EXAMPLE_1)?;
    Ok(format!("{:?}", start.elapsed()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let (inst, meta) = reduce(&example_graph(), Variant::Binary)?;
    eq("L d K", (inst.substring_len(), inst.budget(), inst.count()), (480, 9, 4))?;
    let front: Vec<Symbol> = (0..12).flat_map(|_| std::iter::repeat_n(1, 36).chain([0])).collect();
    for s in inst.strings() {
        eq("front tag", &s[..front.len()], &front[..])?;
    }
    eq("back section", back_section_len(4, 3), 8)?;
    let wit = Variant::Binary.forward_witness(&meta, &clique_134()).map_err(|e| e.to_string())?;
    let profile = region_profile(&inst, &wit, &meta.layout).map_err(|e| e.to_string())?;
    eq("region distances", profile, vec![[0, 1, 8], [0, 1, 8], [0, 1, 8], [0, 9, 0]])?;
    eq("totals", evaluate(&inst, &wit).unwrap().distances, vec![9; 4])?;
    eq("extracted", solve_and_extract(&inst, &meta)?, Some(clique_134()))?;
    within("example 2", start.elapsed(), LIMIT_EXAMPLE_2)?;
    Ok(format!("{:?}", start.elapsed()))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let (inst, meta) = reduce(&example_graph(), Variant::Consensus)?;
    eq("L d templates", (inst.substring_len(), inst.budget(), meta.template_count), (11892, 12, 1))?;
    let wit = Variant::Consensus.forward_witness(&meta, &clique_134()).map_err(|e| e.to_string())?;
    eq("witness total", evaluate(&inst, &wit).unwrap().aggregate, 12)?;
    eq("extracted", solve_and_extract(&inst, &meta)?, Some(clique_134()))?;
    let (inst, meta) = reduce(&example_graph().without_edge(3, 4), Variant::Consensus)?;
    eq("verdict without (3,4)", solve_and_extract(&inst, &meta)?, None)?;
    within("consensus example", start.elapsed(), LIMIT_CONSENSUS)?;
    Ok(format!("{:?}", start.elapsed()))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let cfg = SolverConfig::default();
    let mut runs = Vec::new();
    for variant in Variant::ALL {
        runs.push(sweep(4, 3, variant, GraphSource::Exhaustive, &cfg));
    }
    for variant in [Variant::Unbounded, Variant::Binary] {
        runs.push(sweep(5, 3, variant, GraphSource::SeededRandom { count: 32, seed: RANDOM_GRAPH_SEED }, &cfg));
    }
    let mut notes = Vec::new();
    for s in &runs {
        ensure(s.all_pass(), || format!("{} sweep on n={}:\n{}", s.variant, s.n, s.to_text()))?;
        notes.push(format!("{} n={} {}/{}", s.variant, s.n, s.passes(), s.reports.len()));
    }
    let total: usize = runs.iter().map(|s| s.passes()).sum();
    eq("passes", total, 192 + 64)?;
    within("round trips", start.elapsed(), LIMIT_ROUND_TRIP)?;
    Ok(format!("{total} passes, 0 inconclusive ({}) in {:?}", notes.join(", "), start.elapsed()))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let sets = random_closest_string_sets(500, CLOSEST_STRING_SEED);
    let mut sat = 0;
    for (idx, (strings, alphabet, d)) in sets.iter().enumerate() {
        let brute = closest_string_enumerate(strings, *alphabet, *d, ORACLE_CAP).map_err(|e| e.to_string())?.is_some();
        let branch = closest_string_branch(strings, *d).map_err(|e| e.to_string())?.is_some();
        eq(&format!("closest string #{idx} branch"), branch, brute)?;
        if *alphabet == 2 {
            let dp = closest_string_column_dp(strings, *d, ORACLE_CAP).map_err(|e| e.to_string())?.is_some();
            eq(&format!("closest string #{idx} dp"), dp, brute)?;
        }
        sat += usize::from(brute);
    }
    let cfg = SolverConfig::default();
    for (metric, seed) in [(Metric::MaxDistance, SUBSTRING_SEED), (Metric::SumDistance, CONSENSUS_SEED)] {
        for (idx, inst) in random_motif_instances(metric, 200, seed).iter().enumerate() {
            let oracle = naive_center_oracle(inst, ORACLE_CAP).map_err(|e| e.to_string())?.verdict.is_sat();
            let report = match metric {
                Metric::MaxDistance => closest_substring_exact(inst, &cfg),
                Metric::SumDistance => consensus_exact(inst, &cfg),
            }
            .map_err(|e| e.to_string())?;
            eq(&format!("{} #{idx}", metric.keyword()), report.verdict.is_sat(), oracle)?;
        }
    }
    within("cross-validation", start.elapsed(), LIMIT_CROSS_VALIDATION)?;
    Ok(format!("500 + 200 + 200 agree ({sat}/500 closest string SAT) in {:?}", start.elapsed()))
}

/// Reduction instances of the golden examples and of every round-trip graph.
fn corpus() -> Vec<(String, Variant, Graph)> {
    let mut out = Vec::new();
    for variant in Variant::ALL {
        out.push((format!("example-{variant}"), variant, example_graph()));
    }
    out.push(("example-consensus-minus-34".into(), Variant::Consensus, example_graph().without_edge(3, 4)));
    for variant in Variant::ALL {
        for (i, g) in GraphSource::Exhaustive.graphs(4).into_iter().enumerate() {
            out.push((format!("{variant}-n4-{i}"), variant, g));
        }
    }
    for variant in [Variant::Unbounded, Variant::Binary] {
        let src = GraphSource::SeededRandom { count: 32, seed: RANDOM_GRAPH_SEED };
        for (i, g) in src.graphs(5).into_iter().enumerate() {
            out.push((format!("{variant}-n5-{i}"), variant, g));
        }
    }
    out
}

fn criterion_6() -> Check {
    let (mut witnesses, mut aligned_checked) = (0usize, 0usize);
    for (name, variant, g) in corpus() {
        let (inst, meta) = reduce(&g, variant)?;
        let domain = prune_offsets(&inst);
        if let Some(clique) = find_clique(&g, 3) {
            let wit = variant.forward_witness(&meta, &clique).map_err(|e| e.to_string())?;
            for (i, &o) in wit.offsets.iter().enumerate() {
                ensure(domain.contains(i, o), || format!("{name}: witness offset {o} of string {i} pruned"))?;
            }
            witnesses += 1;
        }
        if variant != Variant::Unbounded {
            for (i, offsets) in domain.offsets.iter().enumerate().take(meta.choice_count) {
                if let Some(o) = offsets.iter().find(|&&o| o % meta.block_stride != 0) {
                    return Err(format!("{name}: string {i} keeps unaligned offset {o}"));
                }
            }
            aligned_checked += 1;
        }
    }
    Ok(format!(
        "{witnesses} witnesses survive; all survivors block-aligned in {aligned_checked} binary-alphabet instances"
    ))
}

fn run_solve(bin: &str, path: &Path, threads: usize) -> Result<Vec<u8>, String> {
    let out = Command::new(bin)
        .args(["solve", "--in"])
        .arg(path)
        .args(["--threads", &threads.to_string()])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(matches!(out.status.code(), Some(0 | 1)), || {
        format!("{} exited with {:?}: {}", path.display(), out.status, String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn criterion_7() -> Check {
    let bin = env!("CARGO_BIN_EXE_cliquemotif");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut count = 0;
    let mut files = Vec::new();
    for (name, variant, g) in corpus() {
        let (inst, _) = reduce(&g, variant)?;
        files.push((name, serialize_instance(&inst)));
    }
    for metric in [Metric::MaxDistance, Metric::SumDistance] {
        for (i, inst) in random_motif_instances(metric, 50, 7).iter().enumerate() {
            files.push((format!("toy-{}-{i}", metric.keyword()), serialize_instance(inst)));
        }
    }
    for (name, text) in files {
        let path = dir.path().join(format!("{name}.msi"));
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        let one = run_solve(bin, &path, 1)?;
        let eight = run_solve(bin, &path, 8)?;
        ensure(one == eight, || {
            format!("{name}: reports differ\n{}---\n{}", String::from_utf8_lossy(&one), String::from_utf8_lossy(&eight))
        })?;
        count += 1;
    }
    Ok(format!("{count} instances byte-identical at 1 and 8 threads"))
}

fn main() {
    let criteria: [(usize, fn() -> Check); 7] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {n}: PASS ({detail})"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({msg})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
