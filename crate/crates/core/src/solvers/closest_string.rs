//! Closest String: find a center within Hamming distance `d` of every one of
//! `K` equal-length strings.

use std::collections::BTreeMap;

use crate::instances::{hamming_unchecked, Symbol, SymbolString};

use super::{pow_within, SolverError};

fn common_len<S: AsRef<[Symbol]>>(strings: &[S]) -> Result<usize, SolverError> {
    let len = strings.first().map_or(0, |s| s.as_ref().len());
    if let Some(s) = strings.iter().find(|s| s.as_ref().len() != len) {
        return Err(SolverError::Precondition(format!("strings of unequal length ({} and {len})", s.as_ref().len())));
    }
    Ok(len)
}

fn within<S: AsRef<[Symbol]>>(center: &[Symbol], strings: &[S], d: usize) -> bool {
    strings.iter().all(|s| hamming_unchecked(center, s.as_ref()) <= d)
}

/// Enumerates `alphabet^L` centers in lexicographic order and returns the
/// first one within `d` of every string. Fails if `alphabet^L > cap`.
pub fn closest_string_enumerate<S: AsRef<[Symbol]>>(
    strings: &[S],
    alphabet: usize,
    d: usize,
    cap: u64,
) -> Result<Option<SymbolString>, SolverError> {
    let len = common_len(strings)?;
    if pow_within(alphabet as u64, len, cap).is_none() {
        return Err(SolverError::ResourceCap(format!("{alphabet}^{len} centers exceed the cap of {cap}")));
    }
    let mut center = vec![0 as Symbol; len];
    loop {
        if within(&center, strings, d) {
            return Ok(Some(SymbolString::new(center)));
        }
        if !odometer_step(&mut center, alphabet) {
            return Ok(None);
        }
    }
}

/// Advances `digits` to the next string in lexicographic order; false once
/// it wraps around.
pub(crate) fn odometer_step(digits: &mut [Symbol], alphabet: usize) -> bool {
    for p in (0..digits.len()).rev() {
        if (digits[p] as usize) + 1 < alphabet {
            digits[p] += 1;
            return true;
        }
        digits[p] = 0;
    }
    false
}

/// Bounded-search-tree algorithm: start from the first string with a
/// change budget of `d`; while some string is farther than `d`, take the
/// lowest-index such string and branch on copying its symbol at each of the
/// first `d + 1` positions where they differ.
pub fn closest_string_branch<S: AsRef<[Symbol]>>(strings: &[S], d: usize) -> Result<Option<SymbolString>, SolverError> {
    branch_with_cap(strings, d, u64::MAX)
}

pub(crate) fn branch_with_cap<S: AsRef<[Symbol]>>(
    strings: &[S],
    d: usize,
    cap: u64,
) -> Result<Option<SymbolString>, SolverError> {
    common_len(strings)?;
    let Some(first) = strings.first() else {
        return Ok(Some(SymbolString::default()));
    };
    let mut center = first.as_ref().to_vec();
    let mut nodes = 0u64;
    match branch(strings, d, &mut center, d, &mut nodes, cap) {
        Some(true) => Ok(Some(SymbolString::new(center))),
        Some(false) => Ok(None),
        None => Err(SolverError::ResourceCap(format!("branching exceeded {cap} nodes"))),
    }
}

/// `None` when the node budget runs out.
fn branch<S: AsRef<[Symbol]>>(
    strings: &[S],
    d: usize,
    center: &mut [Symbol],
    budget: usize,
    nodes: &mut u64,
    cap: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > cap {
        return None;
    }
    let mut violated = None;
    for (i, s) in strings.iter().enumerate() {
        let dist = hamming_unchecked(center, s.as_ref());
        if dist > d + budget {
            return Some(false);
        }
        if dist > d && violated.is_none() {
            violated = Some(i);
        }
    }
    let Some(i) = violated else { return Some(true) };
    if budget == 0 {
        return Some(false);
    }
    let target = strings[i].as_ref();
    let positions: Vec<usize> = (0..center.len()).filter(|&p| center[p] != target[p]).take(d + 1).collect();
    for p in positions {
        let old = center[p];
        center[p] = target[p];
        if branch(strings, d, center, budget - 1, nodes, cap)? {
            return Some(true);
        }
        center[p] = old;
    }
    Some(false)
}

/// Exact Closest String for binary strings by dynamic programming over
/// column classes.
///
/// Columns with the same `K`-bit pattern are interchangeable, so only the
/// number of 1s the center puts in each class matters. The DP walks the
/// classes in pattern order with per-string mismatch counts as state;
/// counts above `d` are dead and dropped, so live states are bounded by
/// `(d+1)^K`. Fails if `(d+2)^K > cap`.
pub fn closest_string_column_dp<S: AsRef<[Symbol]>>(
    strings: &[S],
    d: usize,
    cap: u64,
) -> Result<Option<SymbolString>, SolverError> {
    let len = common_len(strings)?;
    let k = strings.len();
    if strings.iter().any(|s| s.as_ref().iter().any(|&x| x > 1)) {
        return Err(SolverError::Precondition("column DP needs binary strings".into()));
    }
    if k > 63 || pow_within(d as u64 + 2, k, cap).is_none() {
        return Err(SolverError::ResourceCap(format!("({d}+2)^{k} DP states exceed the cap of {cap}")));
    }
    if k == 0 {
        return Ok(Some(SymbolString::new(vec![0; len])));
    }

    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for col in 0..len {
        let pattern = strings.iter().enumerate().fold(0u64, |acc, (i, s)| acc | (u64::from(s.as_ref()[col]) << i));
        classes.entry(pattern).or_default().push(col);
    }

    let radix = d + 1;
    let mut place = Vec::with_capacity(k);
    let mut states = 1usize;
    for _ in 0..k {
        place.push(states as i64);
        states *= radix;
    }

    // layers[g] lists (state, parent, ones) for every state first reached
    // after class g, sorted by state for lookup during reconstruction.
    let mut layers: Vec<Vec<(u32, u32, u32)>> = Vec::with_capacity(classes.len());
    let mut stamp = vec![u32::MAX; states];
    let mut frontier: Vec<u32> = vec![0];
    let mut counts = vec![0usize; k];

    for (g, (&pattern, cols)) in classes.iter().enumerate() {
        let size = cols.len();
        // Moving one more 1 into the class: strings with a 0 there gain a
        // mismatch, strings with a 1 lose one.
        let step: i64 = (0..k).map(|i| if pattern >> i & 1 == 1 { -place[i] } else { place[i] }).sum();
        let mut layer = Vec::new();
        for &st in &frontier {
            let mut rest = st as usize;
            for c in counts.iter_mut() {
                *c = rest % radix;
                rest /= radix;
            }
            let (mut lo, mut hi) = (0usize, size);
            let mut base = st as i64;
            for i in 0..k {
                let slack = d - counts[i];
                if pattern >> i & 1 == 1 {
                    lo = lo.max(size.saturating_sub(slack));
                    base += size as i64 * place[i];
                } else {
                    hi = hi.min(slack);
                }
            }
            if lo > hi {
                continue;
            }
            let mut next = base + lo as i64 * step;
            for ones in lo..=hi {
                let idx = next as usize;
                if stamp[idx] != g as u32 {
                    stamp[idx] = g as u32;
                    layer.push((idx as u32, st, ones as u32));
                }
                next += step;
            }
        }
        if layer.is_empty() {
            return Ok(None);
        }
        frontier = layer.iter().map(|&(s, _, _)| s).collect();
        layer.sort_unstable_by_key(|&(s, _, _)| s);
        layers.push(layer);
    }

    let mut state = *frontier.iter().min().expect("frontier is nonempty");
    let mut ones_per_class = vec![0usize; layers.len()];
    for (g, layer) in layers.iter().enumerate().rev() {
        let pos = layer.binary_search_by_key(&state, |&(s, _, _)| s).expect("reconstruction follows recorded states");
        let (_, parent, ones) = layer[pos];
        ones_per_class[g] = ones as usize;
        state = parent;
    }

    let mut center = vec![0 as Symbol; len];
    for (cols, ones) in classes.values().zip(ones_per_class) {
        for &col in &cols[cols.len() - ones..] {
            center[col] = 1;
        }
    }
    debug_assert!(within(&center, strings, d));
    Ok(Some(SymbolString::new(center)))
}
