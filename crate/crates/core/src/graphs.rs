//! Simple undirected graphs, the DIMACS-like edge-list format, and an exact
//! clique oracle used as ground truth by the round-trip checks.

use std::fmt;

use thiserror::Error;

/// An undirected edge `(u, v)` with `1 <= u < v <= n`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex set is not strictly increasing or contains vertex 0")]
    UnsortedVertexSet,
}

/// Simple undirected graph on vertices `1..=n`.
///
/// The edge list is kept in canonical lexicographic order; every reduction
/// numbers the edges `e_1..e_m` by their position in this list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Endpoints are normalized
    /// to `u < v`; self-loops, out-of-range vertices and duplicates are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut adj = vec![vec![false; n + 1]; n + 1];
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u][v] {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u][v] = true;
            adj[v][u] = true;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is always valid")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is always valid")
    }

    /// The labeled graph on `n` vertices whose edge set is selected by `mask`:
    /// bit `i` selects the `i`-th pair of the lexicographic pair order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let edges = all_pairs(n).enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
        Graph::new(n, edges).expect("mask graphs are always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u <= self.n && v <= self.n && self.adj[u][v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    /// A copy of this graph without edge `(u, v)` (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        Graph::new(self.n, self.edges.iter().copied().filter(|&e| e != (u, v)))
            .expect("subgraph of a valid graph is valid")
    }

    /// Writes the graph in the edge-list text format.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.m());
        for (u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} E={{", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({u},{v})")?;
        }
        write!(f, "}}")
    }
}

/// All vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Edge> {
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
}

/// Sorted set of distinct vertex names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: Vec<usize>) -> Result<Self, GraphError> {
        let increasing = vertices.windows(2).all(|w| w[0] < w[1]);
        if !increasing || vertices.first() == Some(&0) {
            return Err(GraphError::UnsortedVertexSet);
        }
        Ok(VertexSet(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Parses the edge-list format: `c` comment lines, one `p edge <n> <m>`
/// header, then exactly `m` lines `e <u> <v>`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let err = |line: usize, msg: String| GraphError::Parse { line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut adj: Vec<Vec<bool>> = Vec::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(err(line, "second problem line".into()));
                }
                if rest.len() != 3 || rest[0] != "edge" {
                    return Err(err(line, "expected `p edge <n> <m>`".into()));
                }
                let n = parse_num(rest[1]).ok_or_else(|| err(line, format!("bad vertex count `{}`", rest[1])))?;
                let m = parse_num(rest[2]).ok_or_else(|| err(line, format!("bad edge count `{}`", rest[2])))?;
                header = Some((n, m));
                adj = vec![vec![false; n + 1]; n + 1];
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(err(line, "edge before problem line".into()));
                };
                if rest.len() != 2 {
                    return Err(err(line, "expected `e <u> <v>`".into()));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&rest) {
                    *slot = parse_num(tok).ok_or_else(|| err(line, format!("bad vertex `{tok}`")))?;
                    if *slot == 0 || *slot > n {
                        return Err(err(line, format!("vertex {} out of range 1..={n}", *slot)));
                    }
                }
                let [a, b] = ends;
                if a == b {
                    return Err(err(line, format!("self-loop on vertex {a}")));
                }
                let (u, v) = (a.min(b), a.max(b));
                if adj[u][v] {
                    return Err(err(line, format!("duplicate edge ({u}, {v})")));
                }
                adj[u][v] = true;
                edges.push((u, v));
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }

    let (n, m) = header.ok_or_else(|| err(text.lines().count().max(1), "missing `p edge` line".into()))?;
    if edges.len() != m {
        return Err(err(text.lines().count().max(1), format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

fn parse_num(tok: &str) -> Option<usize> {
    if tok.bytes().all(|b| b.is_ascii_digit()) {
        tok.parse().ok()
    } else {
        None
    }
}

/// True iff every pair of `s` is an edge of `g`. Out-of-range vertices make
/// the answer false.
pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let vs = s.vertices();
    if vs.iter().any(|&v| v == 0 || v > g.n()) {
        return false;
    }
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Lexicographically smallest `k`-clique of `g`, if any.
///
/// Depth-first extension over vertices in increasing order; vertices of
/// degree below `k - 1` never start or join a clique.
pub fn find_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    assert!(k >= 1, "clique size must be positive");
    if k > g.n() {
        return None;
    }
    let eligible: Vec<bool> = (0..=g.n()).map(|v| v > 0 && g.degree(v) + 1 >= k).collect();
    let mut stack = Vec::with_capacity(k);
    extend_clique(g, k, &eligible, 1, &mut stack).then_some(VertexSet(stack))
}

fn extend_clique(g: &Graph, k: usize, eligible: &[bool], from: usize, stack: &mut Vec<usize>) -> bool {
    if stack.len() == k {
        return true;
    }
    let need = k - stack.len();
    for v in from..=g.n() {
        if g.n() + 1 - v < need {
            break;
        }
        if !eligible[v] || !stack.iter().all(|&u| g.has_edge(u, v)) {
            continue;
        }
        stack.push(v);
        if extend_clique(g, k, eligible, v + 1, stack) {
            return true;
        }
        stack.pop();
    }
    false
}
