//! Strings, motif instances, solutions, and the `MSI` text format.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::bits::PackedBits;

/// Dense symbol id in `0..A`.
pub type Symbol = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("line {line}, column {column}: {msg}")]
    Format { line: usize, column: usize, msg: String },
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("malformed solution: {0}")]
    MalformedSolution(String),
}

/// A finite sequence of symbol ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolString(Vec<Symbol>);

impl SymbolString {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        SymbolString(symbols)
    }

    /// `count` copies of `symbol`.
    pub fn repeat(symbol: Symbol, count: usize) -> Self {
        SymbolString(vec![symbol; count])
    }

    /// Parses a compact binary literal such as `"1000 0010"`; spaces are ignored.
    pub fn from_bits(text: &str) -> Self {
        SymbolString(
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '0' => 0,
                    '1' => 1,
                    _ => panic!("not a bit: {c:?}"),
                })
                .collect(),
        )
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn extend_from(&mut self, other: &[Symbol]) {
        self.0.extend_from_slice(other);
    }

    /// The length-`len` substring starting at `offset`.
    pub fn window(&self, offset: usize, len: usize) -> &[Symbol] {
        &self.0[offset..offset + len]
    }

    /// Number of nonzero symbols (for binary strings, the count of 1s).
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&s| s != 0).count()
    }
}

impl Deref for SymbolString {
    type Target = [Symbol];
    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl AsRef<[Symbol]> for SymbolString {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for SymbolString {
    fn from(v: Vec<Symbol>) -> Self {
        SymbolString(v)
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.0)
    }
}

fn write_symbols(f: &mut impl fmt::Write, symbols: &[Symbol]) -> fmt::Result {
    for (i, s) in symbols.iter().enumerate() {
        if i > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

/// Number of positions where `a` and `b` differ.
pub fn hamming(a: &[Symbol], b: &[Symbol]) -> Result<usize, InstanceError> {
    if a.len() != b.len() {
        return Err(InstanceError::LengthMismatch(a.len(), b.len()));
    }
    Ok(hamming_unchecked(a, b))
}

#[inline]
pub(crate) fn hamming_unchecked(a: &[Symbol], b: &[Symbol]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Closest Substring: the largest distance must stay within budget.
    MaxDistance,
    /// Consensus Patterns: the sum of distances must stay within budget.
    SumDistance,
}

impl Metric {
    pub fn keyword(self) -> &'static str {
        match self {
            Metric::MaxDistance => "max",
            Metric::SumDistance => "sum",
        }
    }

    pub fn aggregate(self, distances: &[usize]) -> usize {
        match self {
            Metric::MaxDistance => distances.iter().copied().max().unwrap_or(0),
            Metric::SumDistance => distances.iter().sum(),
        }
    }
}

/// Input to the motif solvers: strings over `0..alphabet_size`, a target
/// substring length, and a distance budget under `metric`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotifInstance {
    metric: Metric,
    alphabet_size: usize,
    strings: Vec<SymbolString>,
    substring_len: usize,
    budget: usize,
    packed: Option<Vec<PackedBits>>,
}

impl MotifInstance {
    pub fn new(
        metric: Metric,
        alphabet_size: usize,
        strings: Vec<SymbolString>,
        substring_len: usize,
        budget: usize,
    ) -> Result<Self, InstanceError> {
        if alphabet_size == 0 {
            return Err(InstanceError::Invalid("alphabet size must be positive".into()));
        }
        if substring_len == 0 {
            return Err(InstanceError::Invalid("substring length must be positive".into()));
        }
        for (i, s) in strings.iter().enumerate() {
            if let Some(p) = s.iter().position(|&x| x as usize >= alphabet_size) {
                return Err(InstanceError::Invalid(format!(
                    "string {i} position {p}: symbol {} outside alphabet of size {alphabet_size}",
                    s[p]
                )));
            }
        }
        let packed = (alphabet_size == 2).then(|| strings.iter().map(|s| PackedBits::from_symbols(s)).collect());
        Ok(MotifInstance { metric, alphabet_size, strings, substring_len, budget, packed })
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn strings(&self) -> &[SymbolString] {
        &self.strings
    }

    /// Number of input strings.
    pub fn count(&self) -> usize {
        self.strings.len()
    }

    pub fn substring_len(&self) -> usize {
        self.substring_len
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Packed copies of the strings, present iff the alphabet is binary.
    pub fn packed(&self) -> Option<&[PackedBits]> {
        self.packed.as_deref()
    }

    /// Number of valid start offsets in string `i`.
    pub fn offset_count(&self, i: usize) -> usize {
        (self.strings[i].len() + 1).saturating_sub(self.substring_len)
    }
}

/// A center string plus one 0-based match offset per input string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    pub center: SymbolString,
    pub offsets: Vec<usize>,
}

impl Solution {
    pub fn new(center: SymbolString, offsets: Vec<usize>) -> Self {
        Solution { center, offsets }
    }

    /// Checks shape against `inst`: center length, offset count and ranges,
    /// and center symbols.
    pub fn validate(&self, inst: &MotifInstance) -> Result<(), InstanceError> {
        let bad = |m: String| Err(InstanceError::MalformedSolution(m));
        if self.center.len() != inst.substring_len() {
            return bad(format!("center length {} != L = {}", self.center.len(), inst.substring_len()));
        }
        if self.offsets.len() != inst.count() {
            return bad(format!("{} offsets for {} strings", self.offsets.len(), inst.count()));
        }
        for (i, (&o, s)) in self.offsets.iter().zip(inst.strings()).enumerate() {
            if o + inst.substring_len() > s.len() {
                return bad(format!("offset {o} out of range for string {i} of length {}", s.len()));
            }
        }
        if let Some(&x) = self.center.iter().find(|&&x| x as usize >= inst.alphabet_size()) {
            return bad(format!("center symbol {x} outside alphabet"));
        }
        Ok(())
    }
}

/// Per-string distances of a solution and their aggregate under the metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub distances: Vec<usize>,
    pub aggregate: usize,
    pub feasible: bool,
}

pub fn evaluate(inst: &MotifInstance, sol: &Solution) -> Result<Evaluation, InstanceError> {
    sol.validate(inst)?;
    let len = inst.substring_len();
    let distances: Vec<usize> = match inst.packed() {
        Some(packed) => {
            let center = PackedBits::from_symbols(&sol.center);
            packed.iter().zip(&sol.offsets).map(|(p, &o)| p.window_hamming_bounded(o, &center, usize::MAX)).collect()
        }
        None => inst
            .strings()
            .iter()
            .zip(&sol.offsets)
            .map(|(s, &o)| hamming_unchecked(&sol.center, s.window(o, len)))
            .collect(),
    };
    let aggregate = inst.metric().aggregate(&distances);
    Ok(Evaluation { distances, aggregate, feasible: aggregate <= inst.budget() })
}

/// Region split of a length-`L` block: front tag, encoding part, back tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockLayout {
    pub front_len: usize,
    pub enc_len: usize,
    pub back_len: usize,
}

impl BlockLayout {
    pub fn total(&self) -> usize {
        self.front_len + self.enc_len + self.back_len
    }

    pub fn front(&self) -> std::ops::Range<usize> {
        0..self.front_len
    }

    pub fn encoding(&self) -> std::ops::Range<usize> {
        self.front_len..self.front_len + self.enc_len
    }

    pub fn back(&self) -> std::ops::Range<usize> {
        self.front_len + self.enc_len..self.total()
    }

    /// Distances between two length-`L` strings, region by region.
    pub fn region_distances(&self, a: &[Symbol], b: &[Symbol]) -> [usize; 3] {
        assert_eq!(a.len(), self.total());
        assert_eq!(b.len(), self.total());
        [self.front(), self.encoding(), self.back()].map(|r| hamming_unchecked(&a[r.clone()], &b[r]))
    }
}

/// Per-string region distances of `sol` (see [`BlockLayout::region_distances`]).
pub fn region_profile(
    inst: &MotifInstance,
    sol: &Solution,
    layout: &BlockLayout,
) -> Result<Vec<[usize; 3]>, InstanceError> {
    sol.validate(inst)?;
    if layout.total() != inst.substring_len() {
        return Err(InstanceError::Invalid("layout does not cover L".into()));
    }
    Ok(inst
        .strings()
        .iter()
        .zip(&sol.offsets)
        .map(|(s, &o)| layout.region_distances(&sol.center, s.window(o, inst.substring_len())))
        .collect())
}

/// Writes an instance as `MSI <max|sum> <A> <K> <L> <d>` followed by one
/// line of space-separated symbol ids per string.
pub fn serialize_instance(inst: &MotifInstance) -> String {
    let mut out = format!(
        "MSI {} {} {} {} {}\n",
        inst.metric().keyword(),
        inst.alphabet_size(),
        inst.count(),
        inst.substring_len(),
        inst.budget()
    );
    for s in inst.strings() {
        write_symbols(&mut out, s).expect("writing to a String cannot fail");
        out.push('\n');
    }
    out
}

/// Tokens of a line with their 1-based character columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line.char_indices().peekable();
    std::iter::from_fn(move || {
        while let Some(&(_, c)) = rest.peek() {
            if !c.is_whitespace() {
                break;
            }
            rest.next();
        }
        let (start, _) = *rest.peek()?;
        let mut end = line.len();
        while let Some(&(i, c)) = rest.peek() {
            if c.is_whitespace() {
                end = i;
                break;
            }
            rest.next();
        }
        Some((line[..start].chars().count() + 1, &line[start..end]))
    })
}

pub fn parse_instance(text: &str) -> Result<MotifInstance, InstanceError> {
    let fail = |line: usize, column: usize, msg: String| InstanceError::Format { line, column, msg };
    let Some(body) = text.strip_suffix('\n') else {
        let last = text.lines().count().max(1);
        return Err(fail(last, 1, "missing trailing newline".into()));
    };
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or("");
    let fields: Vec<(usize, &str)> = tokens(header).collect();
    if fields.len() != 6 || fields[0].1 != "MSI" {
        return Err(fail(1, 1, "expected `MSI <max|sum> <A> <K> <L> <d>`".into()));
    }
    let metric = match fields[1].1 {
        "max" => Metric::MaxDistance,
        "sum" => Metric::SumDistance,
        other => return Err(fail(1, fields[1].0, format!("unknown metric `{other}`"))),
    };
    let mut nums = [0usize; 4];
    for (slot, &(col, tok)) in nums.iter_mut().zip(&fields[2..]) {
        *slot = parse_decimal(tok).ok_or_else(|| fail(1, col, format!("bad number `{tok}`")))?;
    }
    let [alphabet, count, len, budget] = nums;
    if alphabet == 0 || alphabet > Symbol::MAX as usize {
        return Err(fail(1, fields[2].0, format!("alphabet size {alphabet} out of range")));
    }
    if len == 0 {
        return Err(fail(1, fields[4].0, "substring length must be positive".into()));
    }

    let mut strings = Vec::with_capacity(count);
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        if idx >= count {
            return Err(fail(lineno, 1, format!("more than the declared {count} strings")));
        }
        let mut symbols = Vec::new();
        for (col, tok) in tokens(line) {
            let v = parse_decimal(tok).ok_or_else(|| fail(lineno, col, format!("bad symbol `{tok}`")))?;
            if v >= alphabet {
                return Err(fail(lineno, col, format!("symbol {v} >= alphabet size {alphabet}")));
            }
            symbols.push(v as Symbol);
        }
        strings.push(SymbolString(symbols));
    }
    if strings.len() < count {
        return Err(fail(strings.len() + 2, 1, format!("expected {count} strings, found {}", strings.len())));
    }
    MotifInstance::new(metric, alphabet, strings, len, budget).map_err(|e| fail(1, 1, e.to_string()))
}

fn parse_decimal(tok: &str) -> Option<usize> {
    if !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit()) {
        tok.parse().ok()
    } else {
        None
    }
}
