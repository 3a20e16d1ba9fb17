//! Reductions from Clique to Closest Substring and Consensus Patterns.
//!
//! All three constructions build one *choice string* `c_{i,j}` per clique
//! slot pair `1 <= i < j <= k`, ordered `c_{1,2}, c_{1,3}, .., c_{k-1,k}`,
//! each containing one block per edge in canonical edge order. The binary
//! variants append template strings after the choice strings.

pub mod binary;
pub mod consensus;
pub mod unbounded;

use std::fmt;

use thiserror::Error;

use crate::graphs::{is_clique, Edge, Graph, VertexSet};
use crate::instances::{BlockLayout, InstanceError, MotifInstance, Solution, Symbol, SymbolString};

pub use binary::{
    back_tag, encode_part, extract_clique_binary, forward_witness_binary, front_tag, number_string, reduce_binary,
};
pub use consensus::{extract_clique_cp, forward_witness_cp, front_tag_cp, reduce_consensus};
pub use unbounded::{block_unbounded, extract_clique_unbounded, forward_witness_unbounded, reduce_unbounded};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("clique size k = {0} is not supported (need k >= 3)")]
    KTooSmall(usize),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("{0} is not a {1}-clique of the source graph")]
    NotAClique(VertexSet, usize),
    #[error("center does not encode a vertex set: {0}")]
    Decode(String),
    #[error("witness distance profile mismatch: {0}")]
    WitnessProfile(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Closest Substring over an alphabet growing with `n` and `k`.
    Unbounded,
    /// Closest Substring over `{0, 1}`.
    Binary,
    /// Consensus Patterns over `{0, 1}`.
    Consensus,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Unbounded, Variant::Binary, Variant::Consensus];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Unbounded => "unbounded",
            Variant::Binary => "binary",
            Variant::Consensus => "consensus",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Variant::ALL.into_iter().find(|v| v.name() == name)
    }

    pub fn reduce(self, g: &Graph, k: usize) -> Result<(MotifInstance, ReductionMeta), ReductionError> {
        match self {
            Variant::Unbounded => reduce_unbounded(g, k),
            Variant::Binary => reduce_binary(g, k),
            Variant::Consensus => reduce_consensus(g, k),
        }
    }

    pub fn forward_witness(self, meta: &ReductionMeta, clique: &VertexSet) -> Result<Solution, ReductionError> {
        match self {
            Variant::Unbounded => forward_witness_unbounded(meta, clique),
            Variant::Binary => forward_witness_binary(meta, clique),
            Variant::Consensus => forward_witness_cp(meta, clique),
        }
    }

    pub fn extract_clique(self, meta: &ReductionMeta, center: &[Symbol]) -> Result<VertexSet, ReductionError> {
        match self {
            Variant::Unbounded => extract_clique_unbounded(meta, center),
            Variant::Binary => extract_clique_binary(meta, center),
            Variant::Consensus => extract_clique_cp(meta, center),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Slot pairs `(i, j)`, `1 <= i < j <= k`, in choice-string order.
pub fn slot_pairs(k: usize) -> Vec<(usize, usize)> {
    (1..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).collect()
}

/// Symbol-id assignment of the unbounded-alphabet reduction:
/// `sigma_i -> i-1`, `phi_i' -> n+i'-1`, `# -> n + C(k,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Legend {
    n: usize,
    pairs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendSymbol {
    Sigma(usize),
    Phi(usize),
    Hash,
}

impl Legend {
    pub fn new(n: usize, k: usize) -> Self {
        Legend { n, pairs: binomial2(k) }
    }

    pub fn sigma(&self, i: usize) -> Symbol {
        assert!((1..=self.n).contains(&i), "sigma index {i} out of range");
        (i - 1) as Symbol
    }

    pub fn phi(&self, iprime: usize) -> Symbol {
        assert!((1..=self.pairs).contains(&iprime), "phi index {iprime} out of range");
        (self.n + iprime - 1) as Symbol
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn hash(&self) -> Symbol {
        (self.n + self.pairs) as Symbol
    }

    pub fn alphabet_size(&self) -> usize {
        self.n + self.pairs + 1
    }

    pub fn decode(&self, id: Symbol) -> Option<LegendSymbol> {
        let id = id as usize;
        if id < self.n {
            Some(LegendSymbol::Sigma(id + 1))
        } else if id < self.n + self.pairs {
            Some(LegendSymbol::Phi(id - self.n + 1))
        } else if id == self.n + self.pairs {
            Some(LegendSymbol::Hash)
        } else {
            None
        }
    }

    /// Sidecar text: `sigma <i> <id>`, `phi <i'> <id>`, `hash <id>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            out.push_str(&format!("sigma {i} {}\n", self.sigma(i)));
        }
        for ip in 1..=self.pairs {
            out.push_str(&format!("phi {ip} {}\n", self.phi(ip)));
        }
        out.push_str(&format!("hash {}\n", self.hash()));
        out
    }
}

/// Everything needed to map solver output back to the source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMeta {
    pub variant: Variant,
    pub graph: Graph,
    pub k: usize,
    pub layout: BlockLayout,
    pub legend: Option<Legend>,
    /// Number of choice strings, `C(k,2)`; they occupy indices `0..choice_count`.
    pub choice_count: usize,
    /// Template strings follow the choice strings.
    pub template_count: usize,
    /// Distance between consecutive block starts in a choice string.
    pub block_stride: usize,
}

impl ReductionMeta {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn edge_order(&self) -> &[Edge] {
        self.graph.edges()
    }

    pub fn slot_pairs(&self) -> Vec<(usize, usize)> {
        slot_pairs(self.k)
    }

    /// Start of block `b` (1-based) inside a choice string.
    pub fn block_offset(&self, b: usize) -> usize {
        assert!(b >= 1);
        (b - 1) * self.block_stride
    }

    /// 1-based position of `edge` in the canonical edge order.
    pub fn edge_rank(&self, edge: Edge) -> Option<usize> {
        self.edge_order().binary_search(&edge).ok().map(|i| i + 1)
    }

    /// Offsets choosing, in every `c_{i,j}`, the block of edge
    /// `(v_{h_i}, v_{h_j})`, and offset 0 in every template.
    fn witness_offsets(&self, clique: &VertexSet) -> Result<Vec<usize>, ReductionError> {
        self.check_clique(clique)?;
        let h = clique.vertices();
        let mut offsets: Vec<usize> = self
            .slot_pairs()
            .into_iter()
            .map(|(i, j)| {
                let b = self.edge_rank((h[i - 1], h[j - 1])).expect("clique edges are present");
                self.block_offset(b)
            })
            .collect();
        offsets.extend(std::iter::repeat_n(0, self.template_count));
        Ok(offsets)
    }

    fn check_clique(&self, clique: &VertexSet) -> Result<(), ReductionError> {
        if clique.len() != self.k || !is_clique(&self.graph, clique) {
            return Err(ReductionError::NotAClique(clique.clone(), self.k));
        }
        Ok(())
    }
}

pub(crate) fn check_k(k: usize) -> Result<(), ReductionError> {
    if k < 3 {
        Err(ReductionError::KTooSmall(k))
    } else {
        Ok(())
    }
}

/// Concatenates `m` blocks built by `block(edge)`, with `barrier` between
/// consecutive blocks.
pub(crate) fn choice_string(
    edges: &[Edge],
    barrier: &[Symbol],
    mut block: impl FnMut(Edge) -> SymbolString,
) -> SymbolString {
    let mut out = SymbolString::default();
    for (b, &e) in edges.iter().enumerate() {
        if b > 0 {
            out.extend_from(barrier);
        }
        out.extend_from(&block(e));
    }
    out
}

/// Decodes a binary encoding part of `k` sections of length `n`: each
/// section must contain exactly one 1, read as the vertex at that position.
pub(crate) fn decode_sections(enc: &[Symbol], n: usize, k: usize) -> Result<VertexSet, ReductionError> {
    debug_assert_eq!(enc.len(), n * k);
    let mut vertices = Vec::with_capacity(k);
    for (sec, chunk) in enc.chunks(n).enumerate() {
        let ones: Vec<usize> = chunk.iter().enumerate().filter(|(_, &s)| s != 0).map(|(p, _)| p + 1).collect();
        if ones.len() != 1 {
            return Err(ReductionError::Decode(format!(
                "section {} of the encoding part holds {} ones",
                sec + 1,
                ones.len()
            )));
        }
        vertices.push(ones[0]);
    }
    VertexSet::new(vertices.clone())
        .map_err(|_| ReductionError::Decode(format!("section vertices {vertices:?} are not strictly increasing")))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graphs::Graph;

    /// Four vertices, edges (1,3), (1,4), (2,3), (3,4); its only triangle is {1,3,4}.
    pub fn example_graph() -> Graph {
        Graph::new(4, [(1, 3), (1, 4), (2, 3), (3, 4)]).unwrap()
    }
}
