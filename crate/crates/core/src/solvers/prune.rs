use crate::instances::{Metric, MotifInstance};

use super::search::WindowSource;

/// Admissible start offsets per input string after pruning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetDomain {
    pub offsets: Vec<Vec<usize>>,
    pub pruned: u64,
}

impl OffsetDomain {
    pub fn contains(&self, string: usize, offset: usize) -> bool {
        self.offsets[string].binary_search(&offset).is_ok()
    }
}

/// Drops offsets that cannot take part in any solution.
///
/// Strings of length exactly `L` are *anchors*: their only substring is
/// themselves, so they keep offset 0. Any other window `w` is dropped if
/// some anchor `f` has `d_H(w, f) > 2d` (max metric) or `> d` (sum metric):
/// a center within budget of both would contradict the triangle
/// inequality. Strings shorter than `L` get an empty domain.
pub fn prune_offsets(inst: &MotifInstance) -> OffsetDomain {
    let len = inst.substring_len();
    let limit = match inst.metric() {
        Metric::MaxDistance => 2 * inst.budget(),
        Metric::SumDistance => inst.budget(),
    };
    let source = WindowSource::new(inst);
    let anchors: Vec<usize> = (0..inst.count()).filter(|&i| inst.strings()[i].len() == len).collect();
    let anchor_windows: Vec<_> = anchors.iter().map(|&f| source.window(f, 0)).collect();

    let mut pruned = 0u64;
    let offsets = (0..inst.count())
        .map(|i| {
            let total = inst.offset_count(i);
            if anchors.contains(&i) {
                return vec![0];
            }
            let keep: Vec<usize> = (0..total)
                .filter(|&o| anchor_windows.iter().all(|f| source.distance_to(i, o, f, limit) <= limit))
                .collect();
            pruned += (total - keep.len()) as u64;
            keep
        })
        .collect();
    OffsetDomain { offsets, pruned }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Metric, SymbolString};

    fn inst(metric: Metric, strings: &[&str], len: usize, d: usize) -> MotifInstance {
        let strings = strings.iter().map(|s| SymbolString::from_bits(s)).collect();
        MotifInstance::new(metric, 2, strings, len, d).unwrap()
    }

    #[test]
    fn no_anchor_keeps_everything() {
        let i = inst(Metric::MaxDistance, &["0101", "11111"], 3, 0);
        let dom = prune_offsets(&i);
        assert_eq!(dom.offsets, vec![vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(dom.pruned, 0);
    }

    #[test]
    fn anchors_prune_by_metric() {
        // anchor 000; windows of 0011100: 001 011 111 110 100
        let max = prune_offsets(&inst(Metric::MaxDistance, &["0011100", "000"], 3, 1));
        assert_eq!(max.offsets, vec![vec![0, 1, 3, 4], vec![0]]);
        assert_eq!(max.pruned, 1);
        let sum = prune_offsets(&inst(Metric::SumDistance, &["0011100", "000"], 3, 1));
        assert_eq!(sum.offsets, vec![vec![0, 4], vec![0]]);
        assert_eq!(sum.pruned, 3);
    }

    #[test]
    fn short_strings_have_empty_domains() {
        let dom = prune_offsets(&inst(Metric::MaxDistance, &["01", "0110"], 3, 1));
        assert!(dom.offsets[0].is_empty());
        assert_eq!(dom.offsets[1], vec![0, 1]);
    }

    #[test]
    fn plain_alphabet_matches_packed() {
        let strings: Vec<SymbolString> = ["0110100111", "01101"].iter().map(|s| SymbolString::from_bits(s)).collect();
        let a2 = MotifInstance::new(Metric::MaxDistance, 2, strings.clone(), 5, 1).unwrap();
        let a3 = MotifInstance::new(Metric::MaxDistance, 3, strings, 5, 1).unwrap();
        assert_eq!(prune_offsets(&a2), prune_offsets(&a3));
    }
}
