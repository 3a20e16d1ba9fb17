//! Parameterized reductions from Clique to the motif problems Closest
//! Substring and Consensus Patterns, exact solvers for the generated
//! instances, and a harness that checks `clique exists <=> instance solvable`
//! graph by graph.

pub mod bits;
pub mod graphs;
pub mod harness;
pub mod instances;
pub mod reduce;
pub mod solvers;

pub use graphs::{find_clique, is_clique, parse_graph, Graph, GraphError, VertexSet};
pub use harness::{
    random_closest_string_sets, random_motif_instances, round_trip, sweep, GraphSource, Outcome, RoundTripReport,
    SweepSummary,
};
pub use instances::{
    evaluate, hamming, parse_instance, region_profile, serialize_instance, BlockLayout, Evaluation, InstanceError,
    Metric, MotifInstance, Solution, Symbol, SymbolString,
};
pub use reduce::{ReductionError, ReductionMeta, Variant};
pub use solvers::{solve, Counters, SolverConfig, SolverError, SolverReport, Verdict};
