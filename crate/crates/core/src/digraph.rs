//! Simple loop-free digraphs with adjacency queryable in both directions.
//!
//! `Digraph` is immutable after construction. Vertices are dense indices
//! `0..n`. Adjacency is stored as sorted neighbor lists plus, for graphs up
//! to a configurable size, per-vertex bitset rows in both directions; the
//! bitsets drive all intersection-type counters.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bits::{andnot3_count, BitMatrix};

/// Graphs up to this size carry bitset adjacency by default.
pub const DEFAULT_BITSET_THRESHOLD: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range for n = {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
}

/// Errors from the edge-list text format, carrying 1-based line numbers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected vertex count `n`, got {got:?}")]
    BadHeader { line: usize, got: String },
    #[error("line {line}: expected `u v`, got {got:?}")]
    BadEdge { line: usize, got: String },
    #[error("line {line}: loop edge at vertex {v}")]
    Loop { line: usize, v: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {v} out of range for n = {n}")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error("empty input: missing vertex count line")]
    Empty,
}

/// Which family of vertex sequences a counting query ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    /// Any sequence of vertices joined by consecutive edges.
    Walk,
    /// A walk with all vertices distinct.
    Path,
    /// A path whose vertex set carries no edges besides the consecutive ones.
    InducedPath,
}

#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    bits: Option<Box<(BitMatrix, BitMatrix)>>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Digraph {}

impl Digraph {
    /// Builds a digraph on `n` vertices from an edge list. Rejects loops,
    /// duplicate edges and out-of-range endpoints.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::with_bitset_threshold(n, edges, DEFAULT_BITSET_THRESHOLD)
    }

    /// As [`Digraph::new`], with an explicit cutoff for bitset adjacency.
    pub fn with_bitset_threshold(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        threshold: usize,
    ) -> Result<Self, GraphError> {
        let mut edge_vec: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            edge_vec.push((u, v));
        }
        edge_vec.sort_unstable();
        if let Some(w) = edge_vec.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &edge_vec {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for l in in_adj.iter_mut() {
            l.sort_unstable();
        }

        let bits = if n <= threshold {
            let mut out_bits = BitMatrix::new(n);
            let mut in_bits = BitMatrix::new(n);
            for &(u, v) in &edge_vec {
                out_bits.set(u, v);
                in_bits.set(v, u);
            }
            Some(Box::new((out_bits, in_bits)))
        } else {
            None
        };

        Ok(Digraph {
            n,
            edges: edge_vec,
            out_adj,
            in_adj,
            bits,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        match &self.bits {
            Some(b) => b.0.get(u, v),
            None => self.out_adj[u].binary_search(&v).is_ok(),
        }
    }

    /// True when neither `uv` nor `vu` is an edge (and `u != v`).
    #[inline]
    pub fn is_non_edge_pair(&self, u: usize, v: usize) -> bool {
        u != v && !self.has_edge(u, v) && !self.has_edge(v, u)
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub(crate) fn bit_rows(&self) -> Option<(&BitMatrix, &BitMatrix)> {
        self.bits.as_deref().map(|b| (&b.0, &b.1))
    }

    /// Exactly one direction present for every vertex pair.
    pub fn is_tournament(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
            && self.first_digon().is_none()
    }

    /// Some pair with edges both ways, if any.
    pub fn first_digon(&self) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .find(|&&(u, v)| u < v && self.has_edge(v, u))
            .map(|&(u, v)| (u, v))
    }

    pub fn min_out_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.out_degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    /// True iff the digraph has no directed cycle of length at most `k`.
    ///
    /// Runs a depth-limited frontier search from each start vertex,
    /// restricted to vertices ≥ start (a shortest cycle is found from its
    /// minimum vertex), so the cost stays O(n·k·m).
    pub fn is_k_free(&self, k: usize) -> bool {
        assert!(k >= 1, "k must be positive");
        let n = self.n;
        // stamp[v] = (start, level) marks membership of the current frontier
        let mut stamp = vec![(usize::MAX, 0usize); n];
        let mut frontier = Vec::new();
        let mut next = Vec::new();
        for start in 0..n {
            frontier.clear();
            frontier.push(start);
            for level in 1..=k {
                next.clear();
                for &u in &frontier {
                    for &w in &self.out_adj[u] {
                        if w == start {
                            return false;
                        }
                        if w > start && stamp[w] != (start, level) {
                            stamp[w] = (start, level);
                            next.push(w);
                        }
                    }
                }
                std::mem::swap(&mut frontier, &mut next);
                if frontier.is_empty() {
                    break;
                }
            }
        }
        true
    }

    /// W_s: the number of directed s-vertex walks, exactly.
    pub fn count_walks(&self, s: usize) -> BigUint {
        assert!(s >= 1, "s must be positive");
        let mut counts: Vec<BigUint> = vec![BigUint::one(); self.n];
        for _ in 1..s {
            let mut next: Vec<BigUint> = vec![BigUint::zero(); self.n];
            for &(u, v) in &self.edges {
                next[v] += &counts[u];
            }
            counts = next;
        }
        counts.into_iter().sum()
    }

    /// P_s: the number of directed s-vertex paths (distinct vertices),
    /// by depth-limited search with visited-set pruning.
    pub fn count_paths(&self, s: usize) -> u64 {
        assert!(s >= 1, "s must be positive");
        if s > self.n {
            return 0;
        }
        if s == 1 {
            return self.n as u64;
        }
        let mut visited = vec![false; self.n];
        let mut total = 0u64;
        for start in 0..self.n {
            visited[start] = true;
            total += self.paths_from(start, s - 1, &mut visited);
            visited[start] = false;
        }
        total
    }

    fn paths_from(&self, u: usize, remaining: usize, visited: &mut [bool]) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0u64;
        for &w in &self.out_adj[u] {
            if !visited[w] {
                visited[w] = true;
                total += self.paths_from(w, remaining - 1, visited);
                visited[w] = false;
            }
        }
        total
    }

    /// P̃₃: ordered triples (u, x, v) with edges ux, xv and no other edge
    /// among {u, x, v}.
    pub fn count_induced_p3(&self) -> u64 {
        match self.bit_rows() {
            Some((out_bits, in_bits)) => {
                let mut total = 0u64;
                for x in 0..self.n {
                    for &u in &self.in_adj[x] {
                        if self.has_edge(x, u) {
                            continue; // digon u~x: never on an induced path
                        }
                        // v ranges over N⁺(x) ∖ (N⁻(x) ∪ N⁺(u) ∪ N⁻(u));
                        // v = u is impossible since u ∈ N⁺(x) was skipped as a digon.
                        total += andnot3_count(
                            out_bits.row(x),
                            in_bits.row(x),
                            out_bits.row(u),
                            in_bits.row(u),
                        );
                    }
                }
                total
            }
            None => {
                let mut total = 0u64;
                for x in 0..self.n {
                    for &u in &self.in_adj[x] {
                        if self.has_edge(x, u) {
                            continue;
                        }
                        for &v in &self.out_adj[x] {
                            if v != u
                                && !self.has_edge(v, x)
                                && !self.has_edge(u, v)
                                && !self.has_edge(v, u)
                            {
                                total += 1;
                            }
                        }
                    }
                }
                total
            }
        }
    }

    /// Dispatches s-vertex sequence counting by kind. Walk counts are exact
    /// big integers since they grow like n^(s-1).
    pub fn count_sequences(&self, s: usize, kind: PathKind) -> BigUint {
        match kind {
            PathKind::Walk => self.count_walks(s),
            PathKind::Path => BigUint::from(self.count_paths(s)),
            PathKind::InducedPath => match s {
                1 => BigUint::from(self.n),
                2 => BigUint::from(self.count_induced_p2()),
                3 => BigUint::from(self.count_induced_p3()),
                _ => BigUint::from(self.count_induced_ps_slow(s)),
            },
        }
    }

    /// Induced 2-vertex paths: edges uv with vu absent.
    fn count_induced_p2(&self) -> u64 {
        self.edges
            .iter()
            .filter(|&&(u, v)| !self.has_edge(v, u))
            .count() as u64
    }

    /// Induced s-vertex paths by explicit search; only used for s ≥ 4.
    fn count_induced_ps_slow(&self, s: usize) -> u64 {
        if s > self.n {
            return 0;
        }
        let mut seq = Vec::with_capacity(s);
        let mut total = 0u64;
        for start in 0..self.n {
            seq.push(start);
            self.induced_paths_from(&mut seq, s, &mut total);
            seq.pop();
        }
        total
    }

    fn induced_paths_from(&self, seq: &mut Vec<usize>, s: usize, total: &mut u64) {
        if seq.len() == s {
            *total += 1;
            return;
        }
        let last = *seq.last().unwrap();
        'next: for &w in &self.out_adj[last] {
            if seq.contains(&w) {
                continue;
            }
            // w may only touch the path via the new edge last→w
            if self.has_edge(w, last) {
                continue;
            }
            for &p in seq[..seq.len() - 1].iter() {
                if self.has_edge(p, w) || self.has_edge(w, p) {
                    continue 'next;
                }
            }
            seq.push(w);
            self.induced_paths_from(seq, s, total);
            seq.pop();
        }
    }

    /// Copy with the edge `uv` added.
    pub fn with_edge_added(&self, u: usize, v: usize) -> Result<Digraph, GraphError> {
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Digraph::new(self.n, edges)
    }

    /// Copy with the edge `uv` removed.
    pub fn with_edge_removed(&self, u: usize, v: usize) -> Result<Digraph, GraphError> {
        let pos = self
            .edges
            .binary_search(&(u, v))
            .map_err(|_| GraphError::MissingEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Digraph::new(self.n, edges)
    }

    /// Copy with every edge reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph::new(self.n, self.edges.iter().map(|&(u, v)| (v, u))).expect("reversal is simple")
    }

    /// Copy with vertices renamed by `perm` (old index → new index).
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph, GraphError> {
        assert_eq!(perm.len(), self.n);
        Digraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Induced subgraph on `keep` (in the given order), relabeled to 0..k.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Digraph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (pu, pv) = (pos[u], pos[v]);
            (pu != usize::MAX && pv != usize::MAX).then_some((pu, pv))
        });
        Digraph::new(keep.len(), edges).expect("subgraph of a simple digraph is simple")
    }
}

/// Parses the edge-list text format: first non-comment line `n`, then one
/// `u v` pair per line; `#` starts a comment; blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Digraph, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_lines: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => {
                n = Some(line.parse().map_err(|_| EdgeListError::BadHeader {
                    line: line_no,
                    got: line.to_string(),
                })?);
            }
            Some(n) => {
                let mut it = line.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(a), Some(b), None) => {
                        let parse = |s: &str| {
                            s.parse::<usize>().map_err(|_| EdgeListError::BadEdge {
                                line: line_no,
                                got: line.to_string(),
                            })
                        };
                        (parse(a)?, parse(b)?)
                    }
                    _ => {
                        return Err(EdgeListError::BadEdge {
                            line: line_no,
                            got: line.to_string(),
                        })
                    }
                };
                if u == v {
                    return Err(EdgeListError::Loop { line: line_no, v: u });
                }
                for &(pu, pv, _) in &seen_lines {
                    if (pu, pv) == (u, v) {
                        return Err(EdgeListError::Duplicate { line: line_no, u, v });
                    }
                }
                if u >= n {
                    return Err(EdgeListError::OutOfRange { line: line_no, v: u, n });
                }
                if v >= n {
                    return Err(EdgeListError::OutOfRange { line: line_no, v, n });
                }
                seen_lines.push((u, v, line_no));
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(EdgeListError::Empty)?;
    Ok(Digraph::new(n, edges).expect("validated above"))
}

/// Writes the edge-list text format emitted by the generators.
pub fn format_edge_list(g: &Digraph) -> String {
    let mut out = String::new();
    out.push_str(&g.n().to_string());
    out.push('\n');
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

/// The directed cycle 0 → 1 → ⋯ → n−1 → 0.
pub fn directed_cycle(n: usize) -> Digraph {
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

/// The transitive (acyclic) tournament: i → j iff i < j.
pub fn transitive_tournament(n: usize) -> Digraph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Digraph::new(n, edges).expect("tournament is simple")
}
