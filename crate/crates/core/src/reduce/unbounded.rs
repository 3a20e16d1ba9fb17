//! Clique to Closest Substring over an unbounded alphabet.
//!
//! Each block is `k + 1` symbols: `sigma_r` at slot `i`, `sigma_s` at slot
//! `j`, the string's identification symbol `phi_i'` elsewhere, then `#`.
//! Blocks are separated by `k` copies of `phi_i'`. `L = k + 1`, `d = k - 2`.

use crate::graphs::{Edge, Graph, VertexSet};
use crate::instances::{BlockLayout, Metric, MotifInstance, Solution, Symbol, SymbolString};

use super::{
    binomial2, check_k, choice_string, slot_pairs, Legend, LegendSymbol, ReductionError, ReductionMeta, Variant,
};

/// `(phi_i')^{i-1} sigma_r (phi_i')^{j-i-1} sigma_s (phi_i')^{k-j} #`.
pub fn block_unbounded(
    legend: &Legend,
    i: usize,
    j: usize,
    edge: Edge,
    k: usize,
    iprime: usize,
) -> Result<SymbolString, ReductionError> {
    let (r, s) = edge;
    if !(1 <= i && i < j && j <= k) {
        return Err(ReductionError::Index(format!("slots ({i}, {j}) with k = {k}")));
    }
    if !(1 <= r && r < s && s <= legend.vertex_count()) {
        return Err(ReductionError::Index(format!("edge ({r}, {s})")));
    }
    if !(1..=binomial2(k)).contains(&iprime) {
        return Err(ReductionError::Index(format!("string rank {iprime}")));
    }
    let phi = legend.phi(iprime);
    let mut block = vec![phi; k + 1];
    block[i - 1] = legend.sigma(r);
    block[j - 1] = legend.sigma(s);
    block[k] = legend.hash();
    Ok(SymbolString::new(block))
}

pub fn reduce_unbounded(g: &Graph, k: usize) -> Result<(MotifInstance, ReductionMeta), ReductionError> {
    check_k(k)?;
    let legend = Legend::new(g.n(), k);
    let strings = slot_pairs(k)
        .into_iter()
        .enumerate()
        .map(|(idx, (i, j))| {
            let iprime = idx + 1;
            let barrier = vec![legend.phi(iprime); k];
            choice_string(g.edges(), &barrier, |e| {
                block_unbounded(&legend, i, j, e, k, iprime).expect("indices are in range by construction")
            })
        })
        .collect();
    let inst = MotifInstance::new(Metric::MaxDistance, legend.alphabet_size(), strings, k + 1, k - 2)?;
    let meta = ReductionMeta {
        variant: Variant::Unbounded,
        graph: g.clone(),
        k,
        layout: BlockLayout { front_len: 0, enc_len: k, back_len: 1 },
        legend: Some(legend),
        choice_count: binomial2(k),
        template_count: 0,
        block_stride: 2 * k + 1,
    };
    Ok((inst, meta))
}

/// Center `sigma_{h_1} .. sigma_{h_k} #`, matched against the block of edge
/// `(v_{h_i}, v_{h_j})` in every `c_{i,j}`.
pub fn forward_witness_unbounded(meta: &ReductionMeta, clique: &VertexSet) -> Result<Solution, ReductionError> {
    let legend = meta.legend.as_ref().expect("unbounded metadata carries a legend");
    let offsets = meta.witness_offsets(clique)?;
    let mut center: Vec<Symbol> = clique.vertices().iter().map(|&v| legend.sigma(v)).collect();
    center.push(legend.hash());
    Ok(Solution::new(SymbolString::new(center), offsets))
}

/// Reads the first `k` center symbols as vertices; the last must be `#`.
pub fn extract_clique_unbounded(meta: &ReductionMeta, center: &[Symbol]) -> Result<VertexSet, ReductionError> {
    let legend = meta.legend.as_ref().expect("unbounded metadata carries a legend");
    let k = meta.k;
    if center.len() != k + 1 {
        return Err(ReductionError::Decode(format!("center length {} != k + 1 = {}", center.len(), k + 1)));
    }
    if legend.decode(center[k]) != Some(LegendSymbol::Hash) {
        return Err(ReductionError::Decode("last symbol is not #".into()));
    }
    let vertices = center[..k]
        .iter()
        .enumerate()
        .map(|(p, &id)| match legend.decode(id) {
            Some(LegendSymbol::Sigma(v)) => Ok(v),
            _ => Err(ReductionError::Decode(format!("position {} holds non-vertex symbol {id}", p + 1))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    VertexSet::new(vertices.clone())
        .map_err(|_| ReductionError::Decode(format!("vertices {vertices:?} are not strictly increasing")))
}
