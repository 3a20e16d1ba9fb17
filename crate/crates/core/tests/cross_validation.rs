//! Exact solvers against brute force written independently here.

use cliquemotif::solvers::{
    closest_string_branch, closest_string_column_dp, closest_string_enumerate, closest_substring_exact,
    consensus_exact, naive_center_oracle,
};
use cliquemotif::{
    evaluate, random_closest_string_sets, random_motif_instances, Metric, MotifInstance, SolverConfig, Symbol,
};

fn all_strings(alphabet: usize, len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..alphabet as Symbol).map(move |s| {
                    let mut next = prefix.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
    }
    out
}

fn dist(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn brute_closest_string(strings: &[Vec<Symbol>], alphabet: usize, d: usize) -> bool {
    let len = strings[0].len();
    all_strings(alphabet, len).iter().any(|c| strings.iter().all(|s| dist(c, s) <= d))
}

fn brute_motif(inst: &MotifInstance) -> bool {
    let len = inst.substring_len();
    all_strings(inst.alphabet_size(), len).iter().any(|c| {
        let best: Option<Vec<usize>> =
            inst.strings().iter().map(|s| s.windows(len).map(|w| dist(c, w)).min()).collect();
        match best {
            None => false,
            Some(ds) => match inst.metric() {
                Metric::MaxDistance => ds.iter().all(|&x| x <= inst.budget()),
                Metric::SumDistance => ds.iter().sum::<usize>() <= inst.budget(),
            },
        }
    })
}

#[test]
fn closest_string_solvers_agree() {
    for (idx, (strings, alphabet, d)) in random_closest_string_sets(500, 11).into_iter().enumerate() {
        let raw: Vec<Vec<Symbol>> = strings.iter().map(|s| s.to_vec()).collect();
        let truth = brute_closest_string(&raw, alphabet, d);
        let check = |name: &str, got: Option<cliquemotif::SymbolString>| {
            assert_eq!(got.is_some(), truth, "#{idx} {name}");
            if let Some(c) = got {
                assert!(raw.iter().all(|s| dist(&c, s) <= d), "#{idx} {name} center {c}");
            }
        };
        check("branch", closest_string_branch(&strings, d).unwrap());
        check("enumerate", closest_string_enumerate(&strings, alphabet, d, 1 << 20).unwrap());
        if alphabet == 2 {
            check("dp", closest_string_column_dp(&strings, d, 1 << 20).unwrap());
        }
    }
}

#[test]
fn substring_solver_matches_oracles() {
    for (idx, inst) in random_motif_instances(Metric::MaxDistance, 200, 12).iter().enumerate() {
        let truth = brute_motif(inst);
        let naive = naive_center_oracle(inst, 1 << 20).unwrap();
        assert_eq!(naive.verdict.is_sat(), truth, "#{idx} naive");
        for cfg in [SolverConfig::default(), SolverConfig { naive_cap: 1, ..SolverConfig::default() }] {
            let report = closest_substring_exact(inst, &cfg).unwrap();
            assert_eq!(report.verdict.is_sat(), truth, "#{idx} exact");
            if let Some(sol) = report.verdict.solution() {
                assert!(evaluate(inst, sol).unwrap().feasible);
            }
        }
    }
}

#[test]
fn consensus_solver_matches_oracles() {
    for (idx, inst) in random_motif_instances(Metric::SumDistance, 200, 13).iter().enumerate() {
        let truth = brute_motif(inst);
        assert_eq!(naive_center_oracle(inst, 1 << 20).unwrap().verdict.is_sat(), truth, "#{idx} naive");
        let report = consensus_exact(inst, &SolverConfig::default()).unwrap();
        assert_eq!(report.verdict.is_sat(), truth, "#{idx} exact");
        if let Some(sol) = report.verdict.solution() {
            assert!(evaluate(inst, sol).unwrap().feasible);
        }
    }
}

#[test]
fn corpus_has_both_verdicts() {
    let sat = random_motif_instances(Metric::MaxDistance, 200, 12).iter().filter(|i| brute_motif(i)).count();
    assert!(sat > 20 && sat < 180, "{sat} of 200 satisfiable");
    let sat = random_motif_instances(Metric::SumDistance, 200, 13).iter().filter(|i| brute_motif(i)).count();
    assert!(sat > 20 && sat < 180, "{sat} of 200 satisfiable");
}
