//! Clique to Closest Substring over the binary alphabet.
//!
//! A block is `front_tag ++ encode(i, j, e) ++ back_tag(i')` and choice
//! strings are blocks laid end to end. One template string
//! `front_tag ++ 1^{nk} ++ 0^{C(k,2)(nk-2k+2)}` closes the instance.
//! `L` is the block length and `d = nk - k`.

use crate::graphs::{Edge, Graph, VertexSet};
use crate::instances::{BlockLayout, Metric, MotifInstance, Solution, Symbol, SymbolString};

use super::{binomial2, check_k, choice_string, decode_sections, slot_pairs, ReductionError, ReductionMeta, Variant};

/// `0^{pos-1} 1 0^{n-pos}`.
pub fn number_string(pos: usize, n: usize) -> Result<SymbolString, ReductionError> {
    if !(1..=n).contains(&pos) {
        return Err(ReductionError::Index(format!("position {pos} outside 1..={n}")));
    }
    let mut s = vec![0; n];
    s[pos - 1] = 1;
    Ok(SymbolString::new(s))
}

/// `(1^{3nk} 0)^{nk}`.
pub fn front_tag(n: usize, k: usize) -> SymbolString {
    let nk = n * k;
    let mut period = vec![1; 3 * nk];
    period.push(0);
    SymbolString::new(period.repeat(nk))
}

/// Length of one back-tag section, `nk - 2k + 2`. Zero for the degenerate
/// `n <= 1` graphs where the expression would go negative.
pub fn back_section_len(n: usize, k: usize) -> usize {
    (n * k + 2).saturating_sub(2 * k)
}

/// `C(k,2)` sections of length `nk - 2k + 2`; section `i'` is all ones.
pub fn back_tag(iprime: usize, n: usize, k: usize) -> Result<SymbolString, ReductionError> {
    let pairs = binomial2(k);
    if !(1..=pairs).contains(&iprime) {
        return Err(ReductionError::Index(format!("string rank {iprime} outside 1..={pairs}")));
    }
    let sec = back_section_len(n, k);
    let mut s = vec![0; pairs * sec];
    s[(iprime - 1) * sec..iprime * sec].fill(1);
    Ok(SymbolString::new(s))
}

/// `k` sections of length `n`: `number(r)` in section `i`, `number(s)` in
/// section `j`, zeros elsewhere.
pub fn encode_part(i: usize, j: usize, edge: Edge, n: usize, k: usize) -> Result<SymbolString, ReductionError> {
    let (r, s) = edge;
    if !(1 <= i && i < j && j <= k) {
        return Err(ReductionError::Index(format!("slots ({i}, {j}) with k = {k}")));
    }
    if !(1 <= r && r < s && s <= n) {
        return Err(ReductionError::Index(format!("edge ({r}, {s}) with n = {n}")));
    }
    let mut enc = vec![0; n * k];
    enc[(i - 1) * n + r - 1] = 1;
    enc[(j - 1) * n + s - 1] = 1;
    Ok(SymbolString::new(enc))
}

pub fn binary_layout(n: usize, k: usize) -> BlockLayout {
    BlockLayout { front_len: (3 * n * k + 1) * n * k, enc_len: n * k, back_len: binomial2(k) * back_section_len(n, k) }
}

pub fn block_binary(
    i: usize,
    j: usize,
    edge: Edge,
    n: usize,
    k: usize,
    iprime: usize,
) -> Result<SymbolString, ReductionError> {
    let mut block = front_tag(n, k);
    block.extend_from(&encode_part(i, j, edge, n, k)?);
    block.extend_from(&back_tag(iprime, n, k)?);
    Ok(block)
}

pub fn binary_template(n: usize, k: usize) -> SymbolString {
    let layout = binary_layout(n, k);
    let mut t = front_tag(n, k);
    t.extend_from(&vec![1; layout.enc_len]);
    t.extend_from(&vec![0; layout.back_len]);
    t
}

pub fn reduce_binary(g: &Graph, k: usize) -> Result<(MotifInstance, ReductionMeta), ReductionError> {
    check_k(k)?;
    let n = g.n();
    let layout = binary_layout(n, k);
    let mut strings: Vec<SymbolString> = slot_pairs(k)
        .into_iter()
        .enumerate()
        .map(|(idx, (i, j))| {
            choice_string(g.edges(), &[], |e| {
                block_binary(i, j, e, n, k, idx + 1).expect("indices are in range by construction")
            })
        })
        .collect();
    strings.push(binary_template(n, k));
    let inst = MotifInstance::new(Metric::MaxDistance, 2, strings, layout.total(), n * k - k)?;
    let meta = ReductionMeta {
        variant: Variant::Binary,
        graph: g.clone(),
        k,
        layout,
        legend: None,
        choice_count: binomial2(k),
        template_count: 1,
        block_stride: layout.total(),
    };
    Ok((inst, meta))
}

/// Encoding part `number(h_1) .. number(h_k)` of the canonical center.
pub(crate) fn clique_encoding(clique: &VertexSet, n: usize) -> Vec<Symbol> {
    clique
        .vertices()
        .iter()
        .flat_map(|&v| number_string(v, n).expect("clique vertices are in range").into_vec())
        .collect()
}

/// Center `front_tag ++ number(h_1)..number(h_k) ++ 0^back`, with its
/// per-region distance profile checked against the construction: `(0, k-2,
/// nk-2k+2)` to every chosen block and `(0, nk-k, 0)` to the template.
pub fn forward_witness_binary(meta: &ReductionMeta, clique: &VertexSet) -> Result<Solution, ReductionError> {
    let offsets = meta.witness_offsets(clique)?;
    let (n, k) = (meta.n(), meta.k);
    let layout = meta.layout;
    let mut center = front_tag(n, k);
    center.extend_from(&clique_encoding(clique, n));
    center.extend_from(&vec![0; layout.back_len]);

    let h = clique.vertices();
    let block_profile = [0, k - 2, back_section_len(n, k)];
    for (idx, (i, j)) in meta.slot_pairs().into_iter().enumerate() {
        let block = block_binary(i, j, (h[i - 1], h[j - 1]), n, k, idx + 1)?;
        let got = layout.region_distances(&center, &block);
        if got != block_profile {
            return Err(ReductionError::WitnessProfile(format!(
                "block of c_{{{i},{j}}}: {got:?}, expected {block_profile:?}"
            )));
        }
    }
    let template_profile = [0, n * k - k, 0];
    let got = layout.region_distances(&center, &binary_template(n, k));
    if got != template_profile {
        return Err(ReductionError::WitnessProfile(format!("template: {got:?}, expected {template_profile:?}")));
    }
    Ok(Solution::new(center, offsets))
}

/// Reads one vertex per encoding section; the back-tag region must be all
/// zeros.
pub fn extract_clique_binary(meta: &ReductionMeta, center: &[Symbol]) -> Result<VertexSet, ReductionError> {
    let layout = meta.layout;
    if center.len() != layout.total() {
        return Err(ReductionError::Decode(format!("center length {} != L = {}", center.len(), layout.total())));
    }
    if center[layout.back()].iter().any(|&s| s != 0) {
        return Err(ReductionError::Decode("back-tag region holds a 1".into()));
    }
    decode_sections(&center[layout.encoding()], meta.n(), meta.k)
}
