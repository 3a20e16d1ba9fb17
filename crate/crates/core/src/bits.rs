//! Binary strings packed 64 symbols per word.
//!
//! Bit `p % 64` of word `p / 64` holds symbol `p`. Bits past `len` in the last
//! word are always zero, so whole-word XOR + popcount is exact.

use crate::instances::Symbol;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackedBits {
    words: Vec<u64>,
    len: usize,
}

impl PackedBits {
    /// Packs a 0/1 symbol slice. Any nonzero symbol is stored as 1.
    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let mut words = vec![0u64; symbols.len().div_ceil(64)];
        for (p, &s) in symbols.iter().enumerate() {
            if s != 0 {
                words[p / 64] |= 1 << (p % 64);
            }
        }
        PackedBits { words, len: symbols.len() }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, p: usize) -> bool {
        debug_assert!(p < self.len);
        self.words[p / 64] >> (p % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The `w`-th 64-bit word of the window starting at `offset`, with bits
    /// beyond `offset + window_len` left as they are in the source.
    #[inline]
    fn shifted_word(&self, offset: usize, w: usize) -> u64 {
        let bit = offset + w * 64;
        let (q, r) = (bit / 64, bit % 64);
        let lo = self.words.get(q).copied().unwrap_or(0);
        if r == 0 {
            lo
        } else {
            let hi = self.words.get(q + 1).copied().unwrap_or(0);
            (lo >> r) | (hi << (64 - r))
        }
    }

    /// Copies out `self[offset .. offset + len]`.
    pub fn window(&self, offset: usize, len: usize) -> PackedBits {
        assert!(offset + len <= self.len, "window out of range");
        let n = len.div_ceil(64);
        let mut words: Vec<u64> = (0..n).map(|w| self.shifted_word(offset, w)).collect();
        if !len.is_multiple_of(64) {
            words[n - 1] &= (1u64 << (len % 64)) - 1;
        }
        PackedBits { words, len }
    }

    /// Hamming distance between equal-length packed strings.
    pub fn hamming(&self, other: &PackedBits) -> usize {
        assert_eq!(self.len, other.len, "hamming of unequal lengths");
        self.words.iter().zip(&other.words).map(|(a, b)| (a ^ b).count_ones() as usize).sum()
    }

    /// Hamming distance between `self[offset .. offset + other.len()]` and
    /// `other`, stopping early once it exceeds `limit`. The result is exact
    /// when it is `<= limit`, and some value `> limit` otherwise.
    pub fn window_hamming_bounded(&self, offset: usize, other: &PackedBits, limit: usize) -> usize {
        assert!(offset + other.len <= self.len, "window out of range");
        let n = other.words.len();
        let mut dist = 0usize;
        for w in 0..n {
            let mut x = self.shifted_word(offset, w) ^ other.words[w];
            if w + 1 == n && !other.len.is_multiple_of(64) {
                x &= (1u64 << (other.len % 64)) - 1;
            }
            dist += x.count_ones() as usize;
            if dist > limit {
                return dist;
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &[Symbol], b: &[Symbol]) -> usize {
        a.iter().zip(b).filter(|(x, y)| x != y).count()
    }

    #[test]
    fn windows_match_naive_hamming() {
        let src: Vec<Symbol> = (0..300u32).map(|i| (i * 7 + i / 5) % 3 % 2).collect();
        let pat: Vec<Symbol> = (0..130u32).map(|i| (i * 13 + 1) % 5 % 2).collect();
        let packed = PackedBits::from_symbols(&src);
        let p = PackedBits::from_symbols(&pat);
        for off in 0..=src.len() - pat.len() {
            let expect = naive(&src[off..off + pat.len()], &pat);
            assert_eq!(packed.window(off, pat.len()).hamming(&p), expect);
            assert_eq!(packed.window_hamming_bounded(off, &p, usize::MAX), expect);
            let capped = packed.window_hamming_bounded(off, &p, 10);
            assert!(if expect <= 10 { capped == expect } else { capped > 10 });
        }
    }

    #[test]
    fn window_clears_tail_bits() {
        let src = PackedBits::from_symbols(&[1; 100]);
        let w = src.window(3, 70);
        assert_eq!(w.count_ones(), 70);
        assert_eq!(w, PackedBits::from_symbols(&[1; 70]));
    }
}
