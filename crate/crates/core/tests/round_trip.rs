use cliquemotif::{sweep, GraphSource, SolverConfig, Variant};

fn assert_clean(n: usize, variant: Variant, source: GraphSource, expected: usize) {
    let s = sweep(n, 3, variant, source, &SolverConfig::default());
    assert_eq!(s.reports.len(), expected);
    assert!(s.all_pass(), "{}", s.to_text());
}

#[test]
fn exhaustive_four_vertices_every_variant() {
    for variant in Variant::ALL {
        assert_clean(4, variant, GraphSource::Exhaustive, 64);
    }
}

#[test]
fn random_five_vertices_unbounded_and_binary() {
    for variant in [Variant::Unbounded, Variant::Binary] {
        assert_clean(5, variant, GraphSource::SeededRandom { count: 32, seed: 1 }, 32);
    }
}

#[test]
fn sweep_text_is_reproducible() {
    let src = GraphSource::SeededRandom { count: 6, seed: 7 };
    let one = sweep(5, 3, Variant::Binary, src, &SolverConfig::default()).to_text();
    let two = sweep(5, 3, Variant::Binary, src, &SolverConfig { threads: 3, ..SolverConfig::default() }).to_text();
    assert_eq!(one, two);
    assert!(one.contains("# source random count 6 seed 7\n"));
}
