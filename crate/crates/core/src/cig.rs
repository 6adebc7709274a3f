//! Circular interval digraphs.
//!
//! Vertices sit on a circle in index order; vertex `i` points to the next
//! `a_i` vertices clockwise. The out-extent vector determines the digraph
//! completely, and every edge's clockwise span is "filled in", which is the
//! circular interval property.
//!
//! The module carries the full slack apparatus for these graphs: pair
//! lengths d(u,v), the extreme lengths α (shortest non-edge) and β (longest
//! edge), the inversion count ξ, γ = 4(α+β) − 3n, the uniform family G_β and
//! its length-β subgraph H_β, pendant counts over H_β subsets, single-edge
//! toggles with recount-based deltas, and augmenting-sequence transforms
//! that trade longest edges for shortest non-edges.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::rational::{BoundReport, Exact};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CigError {
    #[error("extent {extent} out of range for n = {n}")]
    ExtentOutOfRange { extent: usize, n: usize },
    #[error("beta = {beta} creates digons on n = {n} vertices (requires 2*beta < n)")]
    BetaTooLarge { beta: usize, n: usize },
    #[error("({u}, {v}) is not an edge of H_beta")]
    NotHBetaEdge { u: usize, v: usize },
    #[error("hypothesis violated: requires {requirement}, got 8*beta - 3*n = {delta}")]
    HypothesisViolated {
        requirement: &'static str,
        delta: i64,
    },
    #[error("({u}, {v}) is not a longest edge")]
    NotLongestEdge { u: usize, v: usize },
    #[error("({u}, {v}) is not a shortest non-edge")]
    NotShortestNonEdge { u: usize, v: usize },
    #[error("toggling ({u}, {v}) would leave the circular interval class")]
    WouldLeaveClass { u: usize, v: usize },
    #[error("no extreme pair exists (n < 2)")]
    NoExtremePair,
    #[error("alpha is infinite (no non-edge)")]
    AlphaInfinite,
    #[error("transform requires alpha <= beta (got alpha {alpha}, beta {beta})")]
    TransformSideCondition { alpha: usize, beta: usize },
    #[error("transform created a digon between {0} and {1}")]
    DigonCreated(usize, usize),
    #[error("vertex {v}: out-neighborhood is not a clockwise interval")]
    NotCircularInterval { v: usize },
}

/// Length of a shortest non-edge; `Infinite` when every pair is adjacent.
/// Orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Alpha {
    Finite(usize),
    Infinite,
}

impl Alpha {
    pub fn finite(self) -> Option<usize> {
        match self {
            Alpha::Finite(a) => Some(a),
            Alpha::Infinite => None,
        }
    }
}

/// The extreme-length data of a circular interval digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremeState {
    /// Shortest non-edge length (∞ when the circular graph is complete).
    pub alpha: Alpha,
    /// Longest edge length (0 when there are no edges).
    pub beta: usize,
    /// Ordered (edge, non-edge) pairs whose edge is strictly longer.
    pub xi: u64,
    /// 4(α+β) − 3n; defined only for finite α.
    pub gamma: Option<i64>,
    /// 0 when β > α, 1 when β ≤ α.
    pub epsilon: u8,
}

/// d(u,v): 0 when u = v, else one plus the number of vertices strictly
/// between u and v clockwise.
#[inline]
pub fn clockwise_distance(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < n && v < n);
    (v + n - u) % n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularIntervalDigraph {
    extents: Vec<usize>,
}

impl CircularIntervalDigraph {
    pub fn new(extents: Vec<usize>) -> Result<Self, CigError> {
        let n = extents.len();
        if let Some(&extent) = extents.iter().find(|&&a| a + 1 > n) {
            return Err(CigError::ExtentOutOfRange { extent, n });
        }
        Ok(CircularIntervalDigraph { extents })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.extents.len()
    }

    #[inline]
    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    #[inline]
    pub fn extent(&self, v: usize) -> usize {
        self.extents[v]
    }

    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> usize {
        clockwise_distance(self.n(), u, v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let d = self.distance(u, v);
        d >= 1 && d <= self.extents[u]
    }

    /// True when neither direction of {u, v} is an edge.
    #[inline]
    pub fn is_non_edge_pair(&self, u: usize, v: usize) -> bool {
        u != v && !self.has_edge(u, v) && !self.has_edge(v, u)
    }

    pub fn edge_count(&self) -> usize {
        self.extents.iter().sum()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.extents[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        let n = self.n();
        (1..n)
            .filter(|&k| self.extents[(v + n - k) % n] >= k)
            .count()
    }

    /// Some pair with edges both ways, if any.
    pub fn first_digon_pair(&self) -> Option<(usize, usize)> {
        let n = self.n();
        for u in 0..n {
            for d in 1..=self.extents[u] {
                let v = (u + d) % n;
                if self.has_edge(v, u) && u <= v {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_two_free(&self) -> bool {
        self.first_digon_pair().is_none()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| (1..=self.extents[u]).map(move |d| (u, (u + d) % n)))
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::new(self.n(), self.edges()).expect("interval representation is simple")
    }

    /// P̃₃ by full recount on the materialized digraph; the independent
    /// oracle against which all closed forms are checked.
    pub fn induced_p3(&self) -> u64 {
        self.to_digraph().count_induced_p3()
    }

    /// Reads off extents from a digraph whose circular order is the index
    /// order; fails if some out-neighborhood is not a clockwise interval.
    pub fn from_digraph_in_index_order(g: &Digraph) -> Result<Self, CigError> {
        let n = g.n();
        let mut extents = vec![0; n];
        for v in 0..n {
            let mut dists: Vec<usize> = g
                .out_neighbors(v)
                .iter()
                .map(|&w| clockwise_distance(n, v, w))
                .collect();
            dists.sort_unstable();
            if dists.iter().enumerate().any(|(i, &d)| d != i + 1) {
                return Err(CigError::NotCircularInterval { v });
            }
            extents[v] = dists.len();
        }
        CircularIntervalDigraph::new(extents)
    }

    /// Scans all ordered pairs and classifies lengths to produce α, β, ξ,
    /// γ and ε.
    pub fn extreme_state(&self) -> ExtremeState {
        let n = self.n();
        let mut edge_len = vec![0u64; n]; // index = length
        let mut nonedge_len = vec![0u64; n];
        for u in 0..n {
            for l in 1..=self.extents[u] {
                edge_len[l] += 1;
            }
            for l in self.extents[u] + 1..n {
                let v = (u + l) % n;
                if !self.has_edge(v, u) {
                    nonedge_len[l] += 1;
                }
            }
        }
        let beta = (1..n).rev().find(|&l| edge_len[l] > 0).unwrap_or(0);
        let alpha = match (1..n).find(|&l| nonedge_len[l] > 0) {
            Some(l) => Alpha::Finite(l),
            None => Alpha::Infinite,
        };
        // ξ: for every edge length L, count non-edge orientations shorter than L
        let mut xi = 0u64;
        let mut shorter_nonedges = 0u64;
        for l in 1..n {
            xi += edge_len[l] * shorter_nonedges;
            shorter_nonedges += nonedge_len[l];
        }
        let gamma = alpha
            .finite()
            .map(|a| 4 * (a as i64 + beta as i64) - 3 * n as i64);
        let epsilon = match alpha {
            Alpha::Finite(a) if beta > a => 0,
            _ => 1,
        };
        ExtremeState {
            alpha,
            beta,
            xi,
            gamma,
            epsilon,
        }
    }

    /// Per-vertex slack against the extreme lengths:
    /// s⁺ = δ⁺ − (α−1), s⁻ = δ⁻ − (α−1), t⁺ = β − δ⁺, t⁻ = β − δ⁻.
    pub fn slacks(&self, v: usize) -> Result<Slacks, CigError> {
        let state = self.extreme_state();
        let alpha = state.alpha.finite().ok_or(CigError::AlphaInfinite)? as i64;
        let beta = state.beta as i64;
        let dout = self.out_degree(v) as i64;
        let din = self.in_degree(v) as i64;
        Ok(Slacks {
            s_out: dout - (alpha - 1),
            s_in: din - (alpha - 1),
            t_out: beta - dout,
            t_in: beta - din,
        })
    }

    /// α−1 ≤ δ⁺(v), δ⁻(v) ≤ β for every vertex; the regime where the slack
    /// values are all nonnegative.
    pub fn is_degree_bounded(&self) -> Result<bool, CigError> {
        let state = self.extreme_state();
        let alpha = state.alpha.finite().ok_or(CigError::AlphaInfinite)?;
        let lo = alpha.saturating_sub(1);
        Ok((0..self.n()).all(|v| {
            let dout = self.out_degree(v);
            let din = self.in_degree(v);
            lo <= dout && dout <= state.beta && lo <= din && din <= state.beta
        }))
    }
}

/// Slack values (s⁺, s⁻, t⁺, t⁻) of a vertex; may be negative on graphs
/// violating the degree bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slacks {
    pub s_out: i64,
    pub s_in: i64,
    pub t_out: i64,
    pub t_in: i64,
}

/// G_β: the uniform circular interval digraph whose edges are exactly the
/// pairs of length ≤ β. Requires 2β < n so no pair is an edge both ways.
pub fn generate_g_beta(n: usize, beta: usize) -> Result<CircularIntervalDigraph, CigError> {
    if n == 0 || 2 * beta >= n {
        return Err(CigError::BetaTooLarge { beta, n });
    }
    CircularIntervalDigraph::new(vec![beta; n])
}

/// The edges of H_β: the n pairs of length exactly β (empty for β = 0).
pub fn h_beta_edges(n: usize, beta: usize) -> Result<Vec<(usize, usize)>, CigError> {
    if 2 * beta >= n.max(1) {
        return Err(CigError::BetaTooLarge { beta, n });
    }
    if beta == 0 {
        return Ok(Vec::new());
    }
    Ok((0..n).map(|u| (u, (u + beta) % n)).collect())
}

fn validate_h_beta_subset(n: usize, beta: usize, x: &[(usize, usize)]) -> Result<(), CigError> {
    for &(u, v) in x {
        if u >= n || v >= n || beta == 0 || clockwise_distance(n, u, v) != beta {
            return Err(CigError::NotHBetaEdge { u, v });
        }
    }
    Ok(())
}

/// t(X): the number of vertices incident with exactly one edge of
/// X ⊆ E(H_β).
pub fn pendant_count(n: usize, beta: usize, x: &[(usize, usize)]) -> Result<u64, CigError> {
    validate_h_beta_subset(n, beta, x)?;
    let mut incidence = vec![0u32; n];
    for &(u, v) in x {
        incidence[u] += 1;
        incidence[v] += 1;
    }
    Ok(incidence.iter().filter(|&&c| c == 1).count() as u64)
}

/// G_β with the H_β edges in X removed (still a circular interval digraph:
/// each removed edge is the outermost edge of its tail).
pub fn g_beta_minus_x(
    n: usize,
    beta: usize,
    x: &[(usize, usize)],
) -> Result<CircularIntervalDigraph, CigError> {
    validate_h_beta_subset(n, beta, x)?;
    let g = generate_g_beta(n, beta)?;
    let mut extents = g.extents().to_vec();
    for &(u, _) in x {
        extents[u] = beta - 1;
    }
    CircularIntervalDigraph::new(extents)
}

/// The closed-form count n(n−2β−1)(2β−n/2+1) of induced 3-vertex paths in
/// G_β. Exact (and equal to the recount) whenever 3β ≥ n−2; outside that
/// range the expression goes below the true count.
pub fn p3_closed_form(n: usize, beta: usize) -> Exact {
    let n = n as i128;
    let beta = beta as i128;
    // n(n−2β−1)(2β − n/2 + 1) = n(n−2β−1)(4β−n+2) / 2
    let num = n * (n - 2 * beta - 1) * (4 * beta - n + 2);
    Exact::big_ratio(BigInt::from(num), BigInt::from(2))
}

/// n³/16, the circular-interval ceiling for induced 3-vertex paths.
pub fn n_cubed_over_16(n: usize) -> Exact {
    let n = BigInt::from(n);
    Exact::big_ratio(&n * &n * &n, BigInt::from(16))
}

/// P̃₃(G_β ∖ X) in closed form: P̃₃(G_β) + |X|(8β − 3n) + t(X).
///
/// Only valid under the hypothesis 8β − 3n ≥ 2; refuses otherwise.
pub fn p3_of_g_beta_minus_x(
    n: usize,
    beta: usize,
    x: &[(usize, usize)],
) -> Result<i64, CigError> {
    if 2 * beta >= n.max(1) {
        return Err(CigError::BetaTooLarge { beta, n });
    }
    let delta = 8 * beta as i64 - 3 * n as i64;
    if delta < 2 {
        return Err(CigError::HypothesisViolated {
            requirement: "8*beta - 3*n >= 2",
            delta,
        });
    }
    let t = pendant_count(n, beta, x)? as i64;
    let base = p3_closed_form(n, beta)
        .to_integer()
        .expect("G_beta path count is integral");
    let base = i64::try_from(base).expect("count fits i64");
    Ok(base + (x.len() as i64) * delta + t)
}

/// Evaluates |X|(8β−3n) + t(X) + n(n−2β−1)(2β−n/2+1) ≤ n³/16 exactly,
/// under the hypothesis −2 ≤ 8β−3n ≤ 2.
pub fn check_g_beta_inequality(
    n: usize,
    beta: usize,
    x: &[(usize, usize)],
) -> Result<BoundReport, CigError> {
    let delta = 8 * beta as i64 - 3 * n as i64;
    if !(-2..=2).contains(&delta) {
        return Err(CigError::HypothesisViolated {
            requirement: "-2 <= 8*beta - 3*n <= 2",
            delta,
        });
    }
    let t = pendant_count(n, beta, x)?;
    let lhs = &(&Exact::from_int(x.len() as i64 * delta) + &Exact::from_u64(t))
        + &p3_closed_form(n, beta);
    Ok(BoundReport::le(
        "|X|(8b-3n) + t(X) + p3(G_b) <= n^3/16",
        lhs,
        n_cubed_over_16(n),
    ))
}

/// Single-edge toggle direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToggleMode {
    /// Remove a longest edge.
    Remove,
    /// Add a shortest non-edge (in the orientation realizing α).
    Add,
}

/// Applies a single extreme-pair toggle at the representation level.
///
/// Removal is only allowed for a longest edge (necessarily the outermost
/// edge of its tail); addition only for a shortest non-edge that extends
/// its tail's interval by one slot — anything else would leave the
/// circular interval class.
pub fn toggle(
    g: &CircularIntervalDigraph,
    u: usize,
    v: usize,
    mode: ToggleMode,
) -> Result<CircularIntervalDigraph, CigError> {
    let state = g.extreme_state();
    let d = g.distance(u, v);
    let mut extents = g.extents().to_vec();
    match mode {
        ToggleMode::Remove => {
            if !g.has_edge(u, v) || d != state.beta {
                return Err(CigError::NotLongestEdge { u, v });
            }
            // longest edge from u is at distance a_u = beta
            extents[u] -= 1;
        }
        ToggleMode::Add => {
            if !g.is_non_edge_pair(u, v) || Alpha::Finite(d) != state.alpha {
                return Err(CigError::NotShortestNonEdge { u, v });
            }
            if d != extents[u] + 1 {
                return Err(CigError::WouldLeaveClass { u, v });
            }
            extents[u] += 1;
        }
    }
    CircularIntervalDigraph::new(extents)
}

/// P̃₃ difference caused by one toggle, by direct local recount over the
/// triples containing both endpoints (no other triple can change).
pub fn toggle_delta(
    g: &CircularIntervalDigraph,
    u: usize,
    v: usize,
    mode: ToggleMode,
) -> Result<i64, CigError> {
    let after = toggle(g, u, v, mode)?;
    Ok(local_p3_delta(&g.to_digraph(), &after.to_digraph(), u, v))
}

/// Sum over w of the induced-path count change on the triple {u, v, w}.
fn local_p3_delta(before: &Digraph, after: &Digraph, u: usize, v: usize) -> i64 {
    let mut delta = 0i64;
    for w in 0..before.n() {
        if w == u || w == v {
            continue;
        }
        delta += p3_on_triple(after, u, v, w) - p3_on_triple(before, u, v, w);
    }
    delta
}

/// Number of induced directed paths on the ordered triple's vertex set.
fn p3_on_triple(g: &Digraph, a: usize, b: usize, c: usize) -> i64 {
    let vs = [a, b, c];
    let mut count = 0i64;
    for &x in &vs {
        for &y in &vs {
            for &z in &vs {
                if x != y
                    && y != z
                    && x != z
                    && g.has_edge(x, y)
                    && g.has_edge(y, z)
                    && !g.has_edge(x, z)
                    && !g.has_edge(z, x)
                    && !g.has_edge(y, x)
                    && !g.has_edge(z, y)
                {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Formula value for removing a longest edge uv:
/// −(δ⁻(u) + δ⁺(v) − 2c) + (β − 1 + c) with c = |N⁺(v) ∩ N⁻(u)|.
pub fn remove_delta_formula(g: &CircularIntervalDigraph, u: usize, v: usize) -> i64 {
    let beta = g.extreme_state().beta as i64;
    let c = common_count(g, v, u) as i64;
    -(g.in_degree(u) as i64 + g.out_degree(v) as i64 - 2 * c) + (beta - 1 + c)
}

/// Formula value for adding a shortest non-edge uv:
/// (δ⁻(u) + δ⁺(v) − 2c) − (α − 1 + c) with c = |N⁺(v) ∩ N⁻(u)|.
pub fn add_delta_formula(g: &CircularIntervalDigraph, u: usize, v: usize) -> Option<i64> {
    let alpha = g.extreme_state().alpha.finite()? as i64;
    let c = common_count(g, v, u) as i64;
    Some((g.in_degree(u) as i64 + g.out_degree(v) as i64 - 2 * c) - (alpha - 1 + c))
}

/// |N⁺(a) ∩ N⁻(b)|
fn common_count(g: &CircularIntervalDigraph, a: usize, b: usize) -> usize {
    (0..g.n())
        .filter(|&w| w != a && w != b && g.has_edge(a, w) && g.has_edge(w, b))
        .count()
}

/// The delta formulas count gained paths through the toggled pair as if
/// every vertex strictly between the endpoints completed a path; this
/// predicate checks that (plus, for additions, the disjointness of the
/// in-neighborhoods), which is exactly where the formulas are valid.
pub fn delta_formula_applies(
    g: &CircularIntervalDigraph,
    u: usize,
    v: usize,
    mode: ToggleMode,
) -> bool {
    let n = g.n();
    let d = g.distance(u, v);
    let between_complete = (1..d).all(|k| {
        let w = (u + k) % n;
        g.extent(w) >= d - k
    });
    match mode {
        ToggleMode::Remove => between_complete,
        ToggleMode::Add => {
            between_complete
                && (0..n).all(|x| !(x != u && x != v && g.has_edge(x, u) && g.has_edge(x, v)))
        }
    }
}

/// ξ of an arbitrary digraph read in index circular order: ordered
/// (edge, non-edge) pairs whose edge is strictly longer. Pairs with exactly
/// one direction present count as neither edges' lengths nor non-edges.
pub fn xi_by_index_order(g: &Digraph) -> u64 {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let mut edge_len = vec![0u64; n];
    let mut nonedge_len = vec![0u64; n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let d = clockwise_distance(n, u, v);
            if g.has_edge(u, v) {
                edge_len[d] += 1;
            } else if !g.has_edge(v, u) {
                nonedge_len[d] += 1;
            }
        }
    }
    let mut xi = 0u64;
    let mut shorter_nonedges = 0u64;
    for l in 1..n {
        xi += edge_len[l] * shorter_nonedges;
        shorter_nonedges += nonedge_len[l];
    }
    xi
}

/// One extreme pair of an alternating sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremePair {
    pub tail: usize,
    pub head: usize,
    pub kind: PairKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairKind {
    LongestEdge,
    ShortestNonEdge,
}

/// A maximal alternating sequence of longest edges and shortest non-edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AugmentingSequence {
    /// v₁ … v_{k+1}; pairs[i] joins vertices[i] → vertices[i+1].
    pub vertices: Vec<usize>,
    pub pairs: Vec<ExtremePair>,
    /// Longest edges of the sequence (to remove).
    pub x_edges: Vec<(usize, usize)>,
    /// Shortest non-edges of the sequence (to add).
    pub y_nonedges: Vec<(usize, usize)>,
    /// v₁ = v_{k+1}: the sequence wraps around.
    pub closed: bool,
    /// β ≤ α: no transform intended; a single extreme pair stands alone.
    pub degenerate: bool,
}

/// The unique longest edge leaving `tail`, if any.
fn longest_edge_from(g: &CircularIntervalDigraph, beta: usize, tail: usize) -> Option<usize> {
    (beta > 0 && g.extent(tail) == beta).then(|| (tail + beta) % g.n())
}

/// The shortest non-edge orientation leaving `tail`, if any.
fn shortest_nonedge_from(g: &CircularIntervalDigraph, alpha: usize, tail: usize) -> Option<usize> {
    let n = g.n();
    let head = (tail + alpha) % n;
    (g.extent(tail) < alpha && g.extent(head) < n - alpha).then_some(head)
}

fn all_extreme_pairs(g: &CircularIntervalDigraph, state: &ExtremeState) -> Vec<ExtremePair> {
    let mut pairs = Vec::new();
    for tail in 0..g.n() {
        if let Some(head) = longest_edge_from(g, state.beta, tail) {
            pairs.push(ExtremePair {
                tail,
                head,
                kind: PairKind::LongestEdge,
            });
        }
        if let Some(alpha) = state.alpha.finite() {
            if let Some(head) = shortest_nonedge_from(g, alpha, tail) {
                pairs.push(ExtremePair {
                    tail,
                    head,
                    kind: PairKind::ShortestNonEdge,
                });
            }
        }
    }
    pairs.sort_by_key(|p| (p.tail, p.head, p.kind == PairKind::ShortestNonEdge));
    pairs
}

/// Builds a maximal alternating sequence of longest edges and shortest
/// non-edges.
///
/// Extension is forced: each vertex has at most one longest edge and at
/// most one shortest non-edge orientation leaving it (and entering it), so
/// from a seed pair the maximal sequence is unique. The seed is the
/// lexicographically smallest extreme pair. When β ≤ α the transform has no
/// use; the sequence degenerates to that single pair.
pub fn find_augmenting_sequence(
    g: &CircularIntervalDigraph,
) -> Result<AugmentingSequence, CigError> {
    let state = g.extreme_state();
    let candidates = all_extreme_pairs(g, &state);
    let seed = *candidates.first().ok_or(CigError::NoExtremePair)?;

    let degenerate = match state.alpha {
        Alpha::Finite(a) => state.beta <= a,
        Alpha::Infinite => true,
    };
    if degenerate {
        return Ok(sequence_from_pairs(vec![seed], false, true));
    }
    let alpha = state.alpha.finite().expect("beta > alpha implies finite");

    let next_pair = |tail: usize, kind: PairKind| -> Option<ExtremePair> {
        match kind {
            PairKind::LongestEdge => longest_edge_from(g, state.beta, tail).map(|head| {
                ExtremePair {
                    tail,
                    head,
                    kind,
                }
            }),
            PairKind::ShortestNonEdge => {
                shortest_nonedge_from(g, alpha, tail).map(|head| ExtremePair {
                    tail,
                    head,
                    kind,
                })
            }
        }
    };
    let prev_pair = |head: usize, kind: PairKind| -> Option<ExtremePair> {
        let n = g.n();
        match kind {
            PairKind::LongestEdge => {
                let tail = (head + n - state.beta) % n;
                (longest_edge_from(g, state.beta, tail) == Some(head)).then_some(ExtremePair {
                    tail,
                    head,
                    kind,
                })
            }
            PairKind::ShortestNonEdge => {
                let tail = (head + n - alpha) % n;
                (shortest_nonedge_from(g, alpha, tail) == Some(head)).then_some(ExtremePair {
                    tail,
                    head,
                    kind,
                })
            }
        }
    };
    let opposite = |kind: PairKind| match kind {
        PairKind::LongestEdge => PairKind::ShortestNonEdge,
        PairKind::ShortestNonEdge => PairKind::LongestEdge,
    };

    let mut pairs = vec![seed];
    let mut closed = false;
    // forward from the head of the last pair
    loop {
        let last = *pairs.last().unwrap();
        match next_pair(last.head, opposite(last.kind)) {
            Some(p) if p == pairs[0] => {
                closed = true;
                break;
            }
            Some(p) if !pairs.contains(&p) && no_reverse_conflict(&pairs, p) => pairs.push(p),
            _ => break,
        }
    }
    // backward from the tail of the first pair
    if !closed {
        loop {
            let first = pairs[0];
            match prev_pair(first.tail, opposite(first.kind)) {
                Some(p) if !pairs.contains(&p) && no_reverse_conflict(&pairs, p) => {
                    pairs.insert(0, p)
                }
                _ => break,
            }
        }
    }
    Ok(sequence_from_pairs(pairs, closed, false))
}

/// Both orientations of a pair must not be added: reject a non-edge whose
/// reverse is already queued (possible only when α = n/2).
fn no_reverse_conflict(pairs: &[ExtremePair], p: ExtremePair) -> bool {
    p.kind == PairKind::LongestEdge
        || !pairs
            .iter()
            .any(|q| q.kind == PairKind::ShortestNonEdge && (q.tail, q.head) == (p.head, p.tail))
}

fn sequence_from_pairs(pairs: Vec<ExtremePair>, closed: bool, degenerate: bool) -> AugmentingSequence {
    let mut vertices: Vec<usize> = pairs.iter().map(|p| p.tail).collect();
    vertices.push(pairs.last().unwrap().head);
    let x_edges = pairs
        .iter()
        .filter(|p| p.kind == PairKind::LongestEdge)
        .map(|p| (p.tail, p.head))
        .collect();
    let y_nonedges = pairs
        .iter()
        .filter(|p| p.kind == PairKind::ShortestNonEdge)
        .map(|p| (p.tail, p.head))
        .collect();
    AugmentingSequence {
        vertices,
        pairs,
        x_edges,
        y_nonedges,
        closed,
        degenerate,
    }
}

/// (G ∖ X_S) + Y_S: removes the sequence's longest edges and adds its
/// shortest non-edges, at the representation level. Requires α ≤ β; the
/// result must stay a 2-free circular interval digraph.
pub fn apply_augmenting_transform(
    g: &CircularIntervalDigraph,
    seq: &AugmentingSequence,
) -> Result<CircularIntervalDigraph, CigError> {
    let state = g.extreme_state();
    match state.alpha {
        Alpha::Finite(a) if a <= state.beta => {}
        Alpha::Finite(a) => {
            return Err(CigError::TransformSideCondition {
                alpha: a,
                beta: state.beta,
            })
        }
        Alpha::Infinite => {
            return Err(CigError::TransformSideCondition {
                alpha: usize::MAX,
                beta: state.beta,
            })
        }
    }
    let mut extents = g.extents().to_vec();
    for &(u, v) in &seq.x_edges {
        if !g.has_edge(u, v) || g.distance(u, v) != state.beta {
            return Err(CigError::NotLongestEdge { u, v });
        }
        extents[u] -= 1;
    }
    for &(u, v) in &seq.y_nonedges {
        let d = g.distance(u, v);
        if !g.is_non_edge_pair(u, v) || Alpha::Finite(d) != state.alpha {
            return Err(CigError::NotShortestNonEdge { u, v });
        }
        if extents[u] + 1 != d {
            return Err(CigError::WouldLeaveClass { u, v });
        }
        extents[u] += 1;
    }
    let result = CircularIntervalDigraph::new(extents)?;
    if let Some((a, b)) = result.first_digon_pair() {
        return Err(CigError::DigonCreated(a, b));
    }
    Ok(result)
}
