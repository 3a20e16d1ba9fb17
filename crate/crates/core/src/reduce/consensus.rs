//! Clique to Consensus Patterns over the binary alphabet.
//!
//! Blocks are `front_tag_cp ++ encode(i, j, e)` with no back tag, and
//! `C(k,2) - (k-1)` template strings `front_tag_cp ++ 1^{nk}` follow the
//! choice strings. With `T = C(k,2) - (k-1)`, the budget is `d = T * nk`:
//! every encoding column costs at least `T` mismatches, and exactly `T`
//! iff the chosen blocks spell out a clique.

use crate::graphs::{Graph, VertexSet};
use crate::instances::{BlockLayout, InstanceError, Metric, MotifInstance, Solution, Symbol, SymbolString};

use super::binary::{clique_encoding, encode_part};
use super::{binomial2, check_k, choice_string, decode_sections, slot_pairs, ReductionError, ReductionMeta, Variant};

/// `(1^{nk^3} 0)^{nk^3} 0^{nk^3}`, of length `n^2 k^6 + 2 n k^3`.
pub fn front_tag_cp(n: usize, k: usize) -> SymbolString {
    let w = n * k * k * k;
    let mut period = vec![1; w];
    period.push(0);
    let mut tag = period.repeat(w);
    tag.resize(tag.len() + w, 0);
    SymbolString::new(tag)
}

/// Number of template strings, `C(k,2) - (k-1)`.
pub fn template_count_cp(k: usize) -> usize {
    binomial2(k) + 1 - k
}

pub fn consensus_layout(n: usize, k: usize) -> BlockLayout {
    let w = n * k * k * k;
    BlockLayout { front_len: w * w + 2 * w, enc_len: n * k, back_len: 0 }
}

pub fn consensus_template(n: usize, k: usize) -> SymbolString {
    let mut t = front_tag_cp(n, k);
    t.extend_from(&vec![1; n * k]);
    t
}

pub fn reduce_consensus(g: &Graph, k: usize) -> Result<(MotifInstance, ReductionMeta), ReductionError> {
    check_k(k)?;
    let n = g.n();
    let layout = consensus_layout(n, k);
    let front = front_tag_cp(n, k);
    let mut strings: Vec<SymbolString> = slot_pairs(k)
        .into_iter()
        .map(|(i, j)| {
            choice_string(g.edges(), &[], |e| {
                let mut block = front.clone();
                block.extend_from(&encode_part(i, j, e, n, k).expect("indices are in range by construction"));
                block
            })
        })
        .collect();
    let templates = template_count_cp(k);
    strings.extend(std::iter::repeat_n(consensus_template(n, k), templates));
    let inst = MotifInstance::new(Metric::SumDistance, 2, strings, layout.total(), templates * n * k)?;
    let meta = ReductionMeta {
        variant: Variant::Consensus,
        graph: g.clone(),
        k,
        layout,
        legend: None,
        choice_count: binomial2(k),
        template_count: templates,
        block_stride: layout.total(),
    };
    Ok((inst, meta))
}

/// Mismatches between the center and the selected substrings, per column.
pub fn column_mismatches(inst: &MotifInstance, sol: &Solution) -> Result<Vec<usize>, InstanceError> {
    sol.validate(inst)?;
    let len = inst.substring_len();
    let mut cols = vec![0usize; len];
    for (s, &o) in inst.strings().iter().zip(&sol.offsets) {
        for (c, (&a, &b)) in cols.iter_mut().zip(sol.center.iter().zip(s.window(o, len))) {
            *c += usize::from(a != b);
        }
    }
    Ok(cols)
}

/// Center `front_tag_cp ++ number(h_1)..number(h_k)`. Checked column by
/// column against the instance rebuilt from `meta`: zero mismatches on the
/// front tag and exactly `C(k,2) - (k-1)` on every encoding column.
pub fn forward_witness_cp(meta: &ReductionMeta, clique: &VertexSet) -> Result<Solution, ReductionError> {
    let offsets = meta.witness_offsets(clique)?;
    let (n, k) = (meta.n(), meta.k);
    let mut center = front_tag_cp(n, k);
    center.extend_from(&clique_encoding(clique, n));
    let sol = Solution::new(center, offsets);

    let (inst, _) = reduce_consensus(&meta.graph, k)?;
    let cols = column_mismatches(&inst, &sol)?;
    let per_column = template_count_cp(k);
    if let Some(c) = cols[meta.layout.front()].iter().position(|&x| x != 0) {
        return Err(ReductionError::WitnessProfile(format!("front-tag column {} has mismatches", c + 1)));
    }
    if let Some(c) = cols[meta.layout.encoding()].iter().position(|&x| x != per_column) {
        return Err(ReductionError::WitnessProfile(format!(
            "encoding column {} has {} mismatches, expected {per_column}",
            c + 1,
            cols[meta.layout.front_len + c]
        )));
    }
    Ok(sol)
}

/// Reads one vertex per encoding section of the center.
pub fn extract_clique_cp(meta: &ReductionMeta, center: &[Symbol]) -> Result<VertexSet, ReductionError> {
    let layout = meta.layout;
    if center.len() != layout.total() {
        return Err(ReductionError::Decode(format!("center length {} != L = {}", center.len(), layout.total())));
    }
    decode_sections(&center[layout.encoding()], meta.n(), meta.k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{all_pairs, find_clique};
    use crate::instances::evaluate;
    use crate::reduce::fixtures::example_graph;

    #[test]
    fn front_tag_lengths() {
        assert_eq!(front_tag_cp(4, 3).len(), 11880);
        assert_eq!(front_tag_cp(3, 3).len(), 6723);
        assert_eq!(front_tag_cp(1, 1), SymbolString::from_bits("100"));
        assert_eq!(front_tag_cp(4, 3).weight(), 16 * 729);
    }

    #[test]
    fn example_instance_shape() {
        let (inst, meta) = reduce_consensus(&example_graph(), 3).unwrap();
        assert_eq!(inst.metric(), Metric::SumDistance);
        assert_eq!((inst.substring_len(), inst.budget(), inst.count()), (11892, 12, 4));
        assert_eq!(meta.template_count, 1);
        assert!(inst.strings()[..3].iter().all(|s| s.len() == 4 * 11892));

        let (inst, _) = reduce_consensus(&Graph::complete(3), 3).unwrap();
        assert_eq!((inst.substring_len(), inst.budget(), inst.count()), (6732, 9, 4));

        let (inst, meta) = reduce_consensus(&Graph::empty(3), 3).unwrap();
        assert!(inst.strings()[..meta.choice_count].iter().all(|s| s.is_empty()));
    }

    #[test]
    fn template_counts() {
        assert_eq!(template_count_cp(3), 1);
        assert_eq!(template_count_cp(4), 3);
        assert_eq!(template_count_cp(5), 6);
    }

    #[test]
    fn example_forward_witness() {
        let (inst, meta) = reduce_consensus(&example_graph(), 3).unwrap();
        let clique = VertexSet::new(vec![1, 3, 4]).unwrap();
        let sol = forward_witness_cp(&meta, &clique).unwrap();
        let ev = evaluate(&inst, &sol).unwrap();
        assert_eq!(ev.aggregate, 12);
        assert!(ev.feasible);
        assert_eq!(extract_clique_cp(&meta, &sol.center).unwrap(), clique);

        let (tri, tmeta) = reduce_consensus(&Graph::complete(3), 3).unwrap();
        let sol = forward_witness_cp(&tmeta, &VertexSet::new(vec![1, 2, 3]).unwrap()).unwrap();
        assert_eq!(evaluate(&tri, &sol).unwrap().aggregate, 9);

        assert!(forward_witness_cp(&meta, &VertexSet::new(vec![1, 2, 3]).unwrap()).is_err());
    }

    #[test]
    fn extraction_rejects_empty_section() {
        let (_, meta) = reduce_consensus(&example_graph(), 3).unwrap();
        let sol = forward_witness_cp(&meta, &VertexSet::new(vec![1, 3, 4]).unwrap()).unwrap();
        let mut center = sol.center.into_vec();
        let enc = meta.layout.encoding().start;
        center[enc] = 0;
        assert!(matches!(extract_clique_cp(&meta, &center), Err(ReductionError::Decode(_))));
    }

    #[test]
    fn witness_sum_is_exactly_budget_on_small_graphs() {
        let pairs = all_pairs(4).count();
        for mask in 0..1u64 << pairs {
            let g = Graph::from_mask(4, mask);
            let (inst, meta) = reduce_consensus(&g, 3).unwrap();
            let template = &inst.strings()[inst.count() - 1];
            assert_eq!(template.weight(), 16 * 729 + 12);
            match find_clique(&g, 3) {
                Some(c) => {
                    let sol = forward_witness_cp(&meta, &c).unwrap();
                    assert_eq!(evaluate(&inst, &sol).unwrap().aggregate, inst.budget());
                }
                None => assert!(g.m() < 6),
            }
        }
    }

    #[test]
    fn k4_templates() {
        let g = Graph::complete(4);
        let (inst, meta) = reduce_consensus(&g, 4).unwrap();
        assert_eq!(inst.count(), 6 + 3);
        assert_eq!(inst.budget(), 3 * 16);
        let sol = forward_witness_cp(&meta, &VertexSet::new(vec![1, 2, 3, 4]).unwrap()).unwrap();
        assert_eq!(evaluate(&inst, &sol).unwrap().aggregate, 48);
    }
}
