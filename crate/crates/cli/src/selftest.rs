//! Golden vectors for the example graph on four vertices with edges
//! (1,3), (1,4), (2,3), (3,4) and clique size 3.

use cliquemotif::reduce::binary::back_section_len;
use cliquemotif::{
    evaluate, region_profile, serialize_instance, solve, Graph, MotifInstance, ReductionMeta, SolverConfig, Symbol,
    SymbolString, Variant, VertexSet,
};

type Check = Result<(), String>;

fn example_graph() -> Graph {
    Graph::new(4, vec![(1, 3), (1, 4), (2, 3), (3, 4)]).expect("example graph is valid")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn reduce(g: &Graph, variant: Variant) -> Result<(MotifInstance, ReductionMeta), String> {
    variant.reduce(g, 3).map_err(|e| e.to_string())
}

fn solved_clique(inst: &MotifInstance, meta: &ReductionMeta) -> Result<Option<(VertexSet, SymbolString)>, String> {
    let report = solve(inst, &SolverConfig::default()).map_err(|e| e.to_string())?;
    match report.verdict.solution() {
        None => Ok(None),
        Some(sol) => {
            let c = meta.variant.extract_clique(meta, &sol.center).map_err(|e| e.to_string())?;
            Ok(Some((c, sol.center.clone())))
        }
    }
}

fn clique_134() -> VertexSet {
    VertexSet::new(vec![1, 3, 4]).expect("valid vertex set")
}

fn unbounded() -> Check {
    let (inst, meta) = reduce(&example_graph(), Variant::Unbounded)?;
    let header = serialize_instance(&inst).lines().next().unwrap_or_default().to_string();
    expect("header", header.as_str(), "MSI max 8 3 4 1")?;
    expect("string lengths", inst.strings().iter().map(|s| s.len()).collect::<Vec<_>>(), vec![25; 3])?;
    let blocks: [(usize, usize, [Symbol; 4]); 3] = [(0, 0, [0, 2, 4, 7]), (1, 7, [0, 5, 3, 7]), (2, 21, [6, 2, 3, 7])];
    for (s, offset, want) in blocks {
        expect("block", inst.strings()[s].window(offset, 4), &want[..])?;
    }
    let wit = Variant::Unbounded.forward_witness(&meta, &clique_134()).map_err(|e| e.to_string())?;
    expect("witness offsets", wit.offsets.clone(), vec![0, 7, 21])?;
    expect("witness distances", evaluate(&inst, &wit).map_err(|e| e.to_string())?.distances, vec![1, 1, 1])?;
    let (c, center) = solved_clique(&inst, &meta)?.ok_or("solver returned UNSAT")?;
    expect("center", center.as_slice(), &[0, 2, 3, 7][..])?;
    expect("extracted clique", c, clique_134())
}

fn binary() -> Check {
    let (inst, meta) = reduce(&example_graph(), Variant::Binary)?;
    expect("K L d", (inst.count(), inst.substring_len(), inst.budget()), (4, 480, 9))?;
    let front: Vec<Symbol> = (0..12).flat_map(|_| std::iter::repeat_n(1, 36).chain([0])).collect();
    expect("front tag", &inst.strings()[3][..front.len()], &front[..])?;
    expect("back section length", back_section_len(4, 3), 8)?;
    let wit = Variant::Binary.forward_witness(&meta, &clique_134()).map_err(|e| e.to_string())?;
    expect("witness offsets", wit.offsets.clone(), vec![0, 480, 1440, 0])?;
    let profile = region_profile(&inst, &wit, &meta.layout).map_err(|e| e.to_string())?;
    expect("region distances", profile, vec![[0, 1, 8], [0, 1, 8], [0, 1, 8], [0, 9, 0]])?;
    let (c, _) = solved_clique(&inst, &meta)?.ok_or("solver returned UNSAT")?;
    expect("extracted clique", c, clique_134())
}

fn consensus() -> Check {
    let (inst, meta) = reduce(&example_graph(), Variant::Consensus)?;
    expect("K L d", (inst.count(), inst.substring_len(), inst.budget()), (4, 11892, 12))?;
    let wit = Variant::Consensus.forward_witness(&meta, &clique_134()).map_err(|e| e.to_string())?;
    expect("witness total", evaluate(&inst, &wit).map_err(|e| e.to_string())?.aggregate, 12)?;
    let (c, _) = solved_clique(&inst, &meta)?.ok_or("solver returned UNSAT")?;
    expect("extracted clique", c, clique_134())?;
    let (inst, meta) = reduce(&example_graph().without_edge(3, 4), Variant::Consensus)?;
    expect("verdict without edge (3,4)", solved_clique(&inst, &meta)?.is_some(), false)
}

pub fn run() -> Vec<(&'static str, Check)> {
    vec![("unbounded example", unbounded()), ("binary example", binary()), ("consensus example", consensus())]
}
