use crate::instances::{hamming_unchecked, MotifInstance, Solution, Symbol, SymbolString};

use super::closest_string::odometer_step;
use super::{check_witness, pow_within, SolverError, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveOutcome {
    pub verdict: Verdict,
    pub centers_checked: u64,
}

/// Reference decision procedure: tries every center in lexicographic order
/// and, per string, its nearest window (lowest offset on ties). Fails if
/// `A^L > cap`. Independent of pruning and of the tuple search.
pub fn naive_center_oracle(inst: &MotifInstance, cap: u64) -> Result<NaiveOutcome, SolverError> {
    let len = inst.substring_len();
    let alphabet = inst.alphabet_size();
    if pow_within(alphabet as u64, len, cap).is_none() {
        return Err(SolverError::ResourceCap(format!("{alphabet}^{len} centers exceed the cap of {cap}")));
    }
    if inst.strings().iter().any(|s| s.len() < len) {
        return Ok(NaiveOutcome { verdict: Verdict::Unsat, centers_checked: 0 });
    }
    let mut center = vec![0 as Symbol; len];
    let mut checked = 0u64;
    loop {
        checked += 1;
        let (distances, offsets): (Vec<usize>, Vec<usize>) =
            inst.strings().iter().map(|s| nearest_window(&center, s, len)).unzip();
        if inst.metric().aggregate(&distances) <= inst.budget() {
            let sol = Solution::new(SymbolString::new(center), offsets);
            check_witness(inst, &sol)?;
            return Ok(NaiveOutcome { verdict: Verdict::Sat(sol), centers_checked: checked });
        }
        if !odometer_step(&mut center, alphabet) {
            return Ok(NaiveOutcome { verdict: Verdict::Unsat, centers_checked: checked });
        }
    }
}

/// `(distance, offset)` of the nearest length-`len` window of `s`.
fn nearest_window(center: &[Symbol], s: &[Symbol], len: usize) -> (usize, usize) {
    (0..=s.len() - len)
        .map(|o| (hamming_unchecked(center, &s[o..o + len]), o))
        .min()
        .expect("string has at least one window")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Metric;
    use crate::reduce::{fixtures::example_graph, Variant};

    fn inst(metric: Metric, strings: &[&str], len: usize, d: usize) -> MotifInstance {
        let strings = strings.iter().map(|s| SymbolString::from_bits(s)).collect();
        MotifInstance::new(metric, 2, strings, len, d).unwrap()
    }

    #[test]
    fn lex_least_center_and_nearest_offsets() {
        let out = naive_center_oracle(&inst(Metric::MaxDistance, &["1100", "0011", "0110"], 2, 0), 100).unwrap();
        let sol = out.verdict.solution().unwrap();
        assert_eq!(sol.center, SymbolString::from_bits("11"));
        assert_eq!(sol.offsets, vec![0, 2, 1]);
        assert_eq!(out.centers_checked, 4);
    }

    #[test]
    fn sum_metric_and_unsat() {
        let sat = naive_center_oracle(&inst(Metric::SumDistance, &["00111", "11000", "0111"], 3, 1), 100).unwrap();
        assert_eq!(sat.verdict.solution().unwrap().center, SymbolString::from_bits("111"));
        let unsat = naive_center_oracle(&inst(Metric::SumDistance, &["000", "111"], 3, 2), 100).unwrap();
        assert_eq!((unsat.verdict, unsat.centers_checked), (Verdict::Unsat, 8));
        let short = naive_center_oracle(&inst(Metric::MaxDistance, &["0", "111"], 2, 2), 100).unwrap();
        assert_eq!(short.verdict, Verdict::Unsat);
    }

    #[test]
    fn cap_is_enforced() {
        let i = inst(Metric::MaxDistance, &["0000000000"], 10, 0);
        assert!(matches!(naive_center_oracle(&i, 1000), Err(SolverError::ResourceCap(_))));
    }

    #[test]
    fn unbounded_example_is_sat() {
        let (inst, _) = Variant::Unbounded.reduce(&example_graph(), 3).unwrap();
        assert_eq!((inst.alphabet_size(), inst.substring_len()), (8, 4));
        let out = naive_center_oracle(&inst, 4096).unwrap();
        assert!(out.verdict.is_sat());
    }
}
