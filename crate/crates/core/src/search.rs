//! Exhaustive small-n verification and stochastic local search.
//!
//! Digon-free digraphs on n vertices are enumerated by a ternary choice per
//! unordered pair {none, forward, backward} — 3^C(n,2) labeled graphs, no
//! isomorphism reduction. Work is partitioned by fixing the choices of the
//! first k pairs; partitions merge by max-with-witness, tie-broken toward
//! the lexicographically smallest edge set, so results are identical for
//! every partitioning and thread count.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::census::{bondy_bound, thomasse_bound};
use crate::cig::{xi_by_index_order, CircularIntervalDigraph};
use crate::digraph::Digraph;
use crate::families::layered_tournaments;
use crate::parallel::map_fold;
use crate::rational::{BoundReport, Exact};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("n = {n} exceeds the enumeration limit {limit} (set DIGRAPH_CENSUS_MAX_N to raise)")]
    LimitExceeded { n: usize, limit: usize },
    #[error("seed digraph violates the freeness constraint")]
    SeedNotFree,
    #[error("resume file does not match this run: {0}")]
    ResumeMismatch(String),
    #[error("resume file: {0}")]
    ResumeIo(#[from] std::io::Error),
}

/// Default exhaustive-enumeration ceiling (3^15 ≈ 14.3M graphs at n = 6).
pub const DEFAULT_ENUM_LIMIT: usize = 6;

fn enumeration_limit() -> usize {
    std::env::var("DIGRAPH_CENSUS_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ENUM_LIMIT)
}

fn check_enum_limit(n: usize) -> Result<(), SearchError> {
    let limit = enumeration_limit();
    if n > limit {
        Err(SearchError::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// Compact digraph on at most 16 vertices: one word per adjacency row.
#[derive(Clone)]
pub(crate) struct MiniDigraph {
    n: usize,
    out: [u16; 16],
    inn: [u16; 16],
}

impl MiniDigraph {
    pub(crate) fn new(n: usize) -> Self {
        assert!(n <= 16);
        MiniDigraph {
            n,
            out: [0; 16],
            inn: [0; 16],
        }
    }

    #[inline]
    fn add(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    #[inline]
    fn remove(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1 << v);
        self.inn[v] &= !(1 << u);
    }

    #[inline]
    fn pair_adjacent(&self, u: usize, v: usize) -> bool {
        (self.out[u] >> v) & 1 == 1 || (self.out[v] >> u) & 1 == 1
    }

    /// Induced 3-vertex paths, assuming no digons: Σ |N⁺(u) ∩ N⁻(v)| over
    /// non-adjacent ordered pairs.
    fn induced_p3_digon_free(&self) -> u64 {
        let mut total = 0u64;
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.pair_adjacent(u, v) {
                    total += (self.out[u] & self.inn[v]).count_ones() as u64;
                }
            }
        }
        total
    }

    fn edges_sorted(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if (self.out[u] >> v) & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        edges
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Streams every labeled digon-free digraph on n vertices exactly once:
/// one ternary digit per unordered pair.
pub fn enumerate_digon_free(n: usize) -> Result<DigonFreeEnumerator, SearchError> {
    check_enum_limit(n)?;
    Ok(DigonFreeEnumerator {
        n,
        pairs: pair_list(n),
        digits: vec![0; n * n.saturating_sub(1) / 2],
        state: EnumState::Fresh,
    })
}

enum EnumState {
    Fresh,
    Running,
    Done,
}

pub struct DigonFreeEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    digits: Vec<u8>,
    state: EnumState,
}

impl Iterator for DigonFreeEnumerator {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        match self.state {
            EnumState::Fresh => self.state = EnumState::Running,
            EnumState::Running => {
                // increment the base-3 counter, least significant digit last
                let mut i = self.digits.len();
                loop {
                    if i == 0 {
                        self.state = EnumState::Done;
                        return None;
                    }
                    i -= 1;
                    if self.digits[i] < 2 {
                        self.digits[i] += 1;
                        break;
                    }
                    self.digits[i] = 0;
                }
            }
            EnumState::Done => return None,
        }
        let edges = self
            .digits
            .iter()
            .zip(&self.pairs)
            .filter_map(|(&d, &(u, v))| match d {
                1 => Some((u, v)),
                2 => Some((v, u)),
                _ => None,
            });
        Some(Digraph::new(self.n, edges).expect("enumeration emits simple digraphs"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ThomasseVerification {
    pub n: usize,
    /// 3^C(n,2), the number of digraphs enumerated.
    pub total: u128,
    pub max_p3: u64,
    /// Lexicographically smallest maximizing edge set.
    pub witness_edges: Vec<(usize, usize)>,
    pub thomasse: BoundReport,
    pub bondy: BoundReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BestSoFar {
    max_p3: u64,
    witness: Vec<(usize, usize)>,
}

impl BestSoFar {
    fn absorb(&mut self, other: BestSoFar) {
        if other.max_p3 > self.max_p3
            || (other.max_p3 == self.max_p3 && other.witness < self.witness)
        {
            *self = other;
        }
    }
}

fn thomasse_shard(n: usize, pairs: &[(usize, usize)], prefix_len: usize, shard: usize) -> BestSoFar {
    let mut mini = MiniDigraph::new(n);
    // decode the shard index as the first `prefix_len` ternary digits
    let mut idx = shard;
    for i in (0..prefix_len).rev() {
        let digit = (idx % 3) as u8;
        idx /= 3;
        let (u, v) = pairs[i];
        match digit {
            1 => mini.add(u, v),
            2 => mini.add(v, u),
            _ => {}
        }
    }
    let mut best = BestSoFar {
        max_p3: 0,
        witness: Vec::new(),
    };
    // the empty prefix state must seed the witness comparison correctly:
    // start with the first leaf encountered rather than a fake empty one
    let mut seeded = false;
    thomasse_dfs(&mut mini, pairs, prefix_len, &mut best, &mut seeded);
    best
}

fn thomasse_dfs(
    mini: &mut MiniDigraph,
    pairs: &[(usize, usize)],
    idx: usize,
    best: &mut BestSoFar,
    seeded: &mut bool,
) {
    if idx == pairs.len() {
        let p3 = mini.induced_p3_digon_free();
        if !*seeded || p3 > best.max_p3 {
            *seeded = true;
            best.max_p3 = p3;
            best.witness = mini.edges_sorted();
        } else if p3 == best.max_p3 {
            let witness = mini.edges_sorted();
            if witness < best.witness {
                best.witness = witness;
            }
        }
        return;
    }
    let (u, v) = pairs[idx];
    thomasse_dfs(mini, pairs, idx + 1, best, seeded);
    mini.add(u, v);
    thomasse_dfs(mini, pairs, idx + 1, best, seeded);
    mini.remove(u, v);
    mini.add(v, u);
    thomasse_dfs(mini, pairs, idx + 1, best, seeded);
    mini.remove(v, u);
}

/// Exhaustively maximizes the induced 3-vertex path count over all labeled
/// digon-free digraphs on n vertices and reports the verdicts against
/// (n−1)n(n+1)/15 and 2n³/25.
pub fn verify_thomasse(n: usize, jobs: usize) -> Result<ThomasseVerification, SearchError> {
    verify_thomasse_with_resume(n, jobs, None)
}

/// As [`verify_thomasse`]; when `resume` names a file, partition progress
/// is recorded there after every chunk and picked up on restart.
pub fn verify_thomasse_with_resume(
    n: usize,
    jobs: usize,
    resume: Option<&Path>,
) -> Result<ThomasseVerification, SearchError> {
    check_enum_limit(n)?;
    let pairs = pair_list(n);
    let total = 3u128.pow(pairs.len() as u32);

    // fix enough leading pairs that shards outnumber threads comfortably
    let prefix_len = if jobs <= 1 && resume.is_none() {
        0
    } else {
        let mut k = 0;
        while 3usize.pow(k as u32) < 16 * jobs.max(1) && k < pairs.len() {
            k += 1;
        }
        k.max(usize::from(resume.is_some()))
    };
    let shard_count = 3usize.pow(prefix_len as u32);

    let mut start_shard = 0usize;
    let mut best = BestSoFar {
        max_p3: 0,
        witness: Vec::new(),
    };
    let mut have_any = false;
    if let Some(path) = resume {
        if let Some(state) = load_resume(path, n, prefix_len)? {
            start_shard = state.0;
            best = state.1;
            have_any = start_shard > 0;
        }
    }

    let chunk = (jobs.max(1) * 4).min(shard_count);
    let mut shard = start_shard;
    while shard < shard_count {
        let end = (shard + chunk).min(shard_count);
        let results: Vec<BestSoFar> = map_fold(
            jobs,
            (shard..end).collect(),
            |s| thomasse_shard(n, &pairs, prefix_len, s),
            Vec::new(),
            |mut acc, r| {
                acc.push(r);
                acc
            },
        );
        for r in results {
            if have_any {
                best.absorb(r);
            } else {
                best = r;
                have_any = true;
            }
        }
        shard = end;
        if let Some(path) = resume {
            save_resume(path, n, prefix_len, shard, &best)?;
        }
    }

    let max = Exact::from_u64(best.max_p3);
    Ok(ThomasseVerification {
        n,
        total,
        max_p3: best.max_p3,
        witness_edges: best.witness,
        thomasse: BoundReport::le("max_p3 <= (n-1)n(n+1)/15", max.clone(), thomasse_bound(n)),
        bondy: BoundReport::le("max_p3 <= 2n^3/25", max, bondy_bound(n)),
    })
}

fn save_resume(
    path: &Path,
    n: usize,
    prefix_len: usize,
    next_shard: usize,
    best: &BestSoFar,
) -> Result<(), SearchError> {
    let witness = best
        .witness
        .iter()
        .map(|&(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ");
    let body = format!(
        "thomasse-resume v1\nn={n} k={prefix_len}\nnext={next_shard}\nmax={}\nwitness={witness}\n",
        best.max_p3
    );
    std::fs::write(path, body)?;
    Ok(())
}

fn load_resume(
    path: &Path,
    n: usize,
    prefix_len: usize,
) -> Result<Option<(usize, BestSoFar)>, SearchError> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut lines = text.lines();
    let bad = |msg: &str| SearchError::ResumeMismatch(msg.to_string());
    if lines.next() != Some("thomasse-resume v1") {
        return Err(bad("unknown header"));
    }
    let params = lines.next().ok_or_else(|| bad("missing parameters"))?;
    if params != format!("n={n} k={prefix_len}") {
        return Err(bad(&format!("expected n={n} k={prefix_len}, got {params:?}")));
    }
    let next = lines
        .next()
        .and_then(|l| l.strip_prefix("next="))
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| bad("missing next shard"))?;
    let max = lines
        .next()
        .and_then(|l| l.strip_prefix("max="))
        .and_then(|v| v.parse::<u64>().ok())
        .ok_or_else(|| bad("missing max"))?;
    let witness_line = lines
        .next()
        .and_then(|l| l.strip_prefix("witness="))
        .ok_or_else(|| bad("missing witness"))?;
    let mut witness = Vec::new();
    for token in witness_line.split_whitespace() {
        let (u, v) = token
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
            .ok_or_else(|| bad("malformed witness"))?;
        witness.push((u, v));
    }
    Ok(Some((next, BestSoFar { max_p3: max, witness })))
}

#[derive(Clone, Debug, Serialize)]
pub struct CigVerification {
    pub n: usize,
    /// Per-vertex extent ceiling used for the sweep.
    pub max_extent: usize,
    pub total_representations: u128,
    pub two_free_count: u64,
    pub max_p3: u64,
    /// ξ of the reported witness (minimal among maximizers).
    pub witness_xi: u64,
    pub witness_extents: Vec<usize>,
    pub bound16: BoundReport,
}

#[derive(Clone)]
struct CigBest {
    max_p3: u64,
    xi: u64,
    extents: Vec<usize>,
    two_free: u64,
    seeded: bool,
}

impl CigBest {
    fn new() -> Self {
        CigBest {
            max_p3: 0,
            xi: 0,
            extents: Vec::new(),
            two_free: 0,
            seeded: false,
        }
    }

    fn offer(&mut self, p3: u64, extents: &[usize]) {
        self.two_free += 1;
        let better = !self.seeded
            || p3 > self.max_p3
            || (p3 == self.max_p3 && {
                let xi = cig_xi(extents);
                xi < self.xi || (xi == self.xi && extents < self.extents.as_slice())
            });
        if better {
            self.xi = cig_xi(extents);
            self.max_p3 = p3;
            self.extents = extents.to_vec();
            self.seeded = true;
        }
    }

    fn absorb(&mut self, other: CigBest) {
        self.two_free += other.two_free;
        if !other.seeded {
            return;
        }
        if !self.seeded
            || other.max_p3 > self.max_p3
            || (other.max_p3 == self.max_p3
                && (other.xi < self.xi || (other.xi == self.xi && other.extents < self.extents)))
        {
            let two_free = self.two_free;
            *self = other;
            self.two_free = two_free;
        }
    }
}

fn cig_xi(extents: &[usize]) -> u64 {
    CircularIntervalDigraph::new(extents.to_vec())
        .expect("extents validated by enumeration")
        .extreme_state()
        .xi
}

fn cig_dfs(n: usize, cap: usize, extents: &mut Vec<usize>, mini: &mut MiniDigraph, best: &mut CigBest) {
    let i = extents.len();
    if i == n {
        best.offer(mini.induced_p3_digon_free(), extents);
        return;
    }
    'extent: for a in 0..=cap {
        // digon check against already-assigned vertices
        for j in 0..i {
            let d_ji = i - j;
            let d_ij = n - d_ji;
            if extents[j] >= d_ji && a >= d_ij {
                // a larger extent only keeps the digon; stop this branch
                break 'extent;
            }
        }
        for d in 1..=a {
            mini.add(i, (i + d) % n);
        }
        extents.push(a);
        cig_dfs(n, cap, extents, mini, best);
        extents.pop();
        for d in 1..=a {
            mini.remove(i, (i + d) % n);
        }
    }
}

/// Exhaustively sweeps circular interval representations (extent vectors in
/// {0..max_extent}ⁿ), keeping the 2-free ones, and maximizes the induced
/// 3-vertex path count with ξ as the tie-break — the optimality criterion.
/// The default ceiling ⌊(n−1)/2⌋ covers every graph that can win (longer
/// extents force digons or strictly fewer induced paths at the optimum).
pub fn verify_cig(n: usize, max_extent: Option<usize>, jobs: usize) -> Result<CigVerification, SearchError> {
    let limit = enumeration_limit().max(10);
    if n == 0 || n > limit.min(16) {
        return Err(SearchError::LimitExceeded {
            n,
            limit: limit.min(16),
        });
    }
    let cap = max_extent.unwrap_or(n.saturating_sub(1) / 2).min(n - 1);

    let best = map_fold(
        jobs,
        (0..=cap).collect::<Vec<usize>>(),
        |first| {
            let mut best = CigBest::new();
            let mut extents = Vec::with_capacity(n);
            let mut mini = MiniDigraph::new(n);
            // fix a_0 = first, then sweep the rest
            for d in 1..=first {
                mini.add(0, d % n);
            }
            extents.push(first);
            if n == 1 {
                if first == 0 {
                    best.offer(0, &extents);
                }
            } else {
                // a_0 alone cannot form a digon (checked when later extents land)
                cig_dfs(n, cap, &mut extents, &mut mini, &mut best);
            }
            best
        },
        CigBest::new(),
        |mut acc, part| {
            acc.absorb(part);
            acc
        },
    );

    Ok(CigVerification {
        n,
        max_extent: cap,
        total_representations: (cap as u128 + 1).pow(n as u32),
        two_free_count: best.two_free,
        max_p3: best.max_p3,
        witness_xi: best.xi,
        witness_extents: best.extents,
        bound16: BoundReport::le(
            "max_p3 <= n^3/16",
            Exact::from_u64(best.max_p3),
            crate::cig::n_cubed_over_16(n),
        ),
    })
}

/// What the hill climb maximizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Objective {
    InducedP3,
    P4,
}

/// Forbidden short-cycle length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Freeness {
    TwoFree,
    ThreeFree,
}

impl Freeness {
    pub fn k(self) -> usize {
        match self {
            Freeness::TwoFree => 2,
            Freeness::ThreeFree => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ToggleOp {
    Add,
    Remove,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TraceEntry {
    pub step: usize,
    pub op: ToggleOp,
    pub u: usize,
    pub v: usize,
    /// Objective value after the move.
    pub value: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best: Digraph,
    pub best_value: u64,
    pub trace: Vec<TraceEntry>,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub objective: Objective,
    pub freeness: Freeness,
    /// Maximum number of accepted moves.
    pub budget: usize,
    pub rng_seed: u64,
    /// Break objective ties toward strictly smaller ξ (index circular
    /// order), the secondary optimality criterion for interval instances.
    pub cig_tiebreak: bool,
}

fn objective_value(g: &Digraph, objective: Objective) -> u64 {
    match objective {
        Objective::InducedP3 => g.count_induced_p3(),
        Objective::P4 => g.count_paths(4),
    }
}

/// Adding uv is legal iff no directed path v → … → u of length ≤ k−1
/// exists (such a path would close a cycle of length ≤ k).
fn addition_keeps_free(g: &Digraph, u: usize, v: usize, k: usize) -> bool {
    let mut frontier = vec![v];
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    for _ in 0..k - 1 {
        let mut next = Vec::new();
        for &x in &frontier {
            for &y in g.out_neighbors(x) {
                if y == u {
                    return false;
                }
                if !seen[y] {
                    seen[y] = true;
                    next.push(y);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    true
}

/// Hill climbing over single-edge toggles that preserve k-freeness.
///
/// Move priority per step: (1) the steepest strict objective improvement,
/// (2) with `cig_tiebreak`, an equal-objective move that strictly lowers ξ,
/// (3) a seeded-random sideways move along the objective plateau — without
/// these the climb cannot leave flat regions such as the empty graph, where
/// no single toggle changes the count. Ties inside (1) and (2) break to the
/// lexicographically smallest (u, v, op). Deterministic for a fixed seed.
pub fn local_search(seed: &Digraph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let k = cfg.freeness.k();
    if !seed.is_k_free(k) {
        return Err(SearchError::SeedNotFree);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mut current = seed.clone();
    let mut value = objective_value(&current, cfg.objective);
    let mut xi = cfg.cig_tiebreak.then(|| xi_by_index_order(&current));
    let mut trace = Vec::new();

    for step in 1..=cfg.budget {
        let mut strict: Option<(u64, usize, usize, ToggleOp)> = None;
        let mut xi_move: Option<(u64, usize, usize, ToggleOp)> = None;
        let mut sideways: Vec<(usize, usize, ToggleOp)> = Vec::new();

        for u in 0..current.n() {
            for v in 0..current.n() {
                if u == v {
                    continue;
                }
                let (candidate, op) = if current.has_edge(u, v) {
                    (current.with_edge_removed(u, v).expect("edge exists"), ToggleOp::Remove)
                } else {
                    if !addition_keeps_free(&current, u, v, k) {
                        continue;
                    }
                    (current.with_edge_added(u, v).expect("non-edge"), ToggleOp::Add)
                };
                let cand_value = objective_value(&candidate, cfg.objective);
                if cand_value > value {
                    let better = match strict {
                        None => true,
                        Some((best_val, ..)) => cand_value > best_val,
                    };
                    if better {
                        strict = Some((cand_value, u, v, op));
                    }
                } else if cand_value == value {
                    if let Some(current_xi) = xi {
                        let cand_xi = xi_by_index_order(&candidate);
                        if cand_xi < current_xi {
                            let better = match xi_move {
                                None => true,
                                Some((best_xi, ..)) => cand_xi < best_xi,
                            };
                            if better {
                                xi_move = Some((cand_xi, u, v, op));
                            }
                            continue;
                        }
                    }
                    sideways.push((u, v, op));
                }
            }
        }

        let chosen = if let Some((_, u, v, op)) = strict {
            Some((u, v, op))
        } else if let Some((_, u, v, op)) = xi_move {
            Some((u, v, op))
        } else if !sideways.is_empty() {
            Some(sideways[rng.gen_range(0..sideways.len())])
        } else {
            None
        };

        let Some((u, v, op)) = chosen else { break };
        current = match op {
            ToggleOp::Add => current.with_edge_added(u, v).expect("legal add"),
            ToggleOp::Remove => current.with_edge_removed(u, v).expect("legal remove"),
        };
        assert!(current.is_k_free(k), "accepted move broke freeness");
        value = objective_value(&current, cfg.objective);
        xi = cfg.cig_tiebreak.then(|| xi_by_index_order(&current));
        trace.push(TraceEntry {
            step,
            op,
            u,
            v,
            value,
        });
    }

    Ok(SearchOutcome {
        best_value: value,
        best: current,
        trace,
    })
}

/// Seeded random digon-free digraph: each unordered pair independently
/// keeps no edge or one uniformly oriented edge.
pub fn random_digon_free(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                } else {
                    edges.push((v, u));
                }
            }
        }
    }
    Digraph::new(n, edges).expect("sampled digraph is simple")
}

/// Seeded random 3-free digraph: sparse rejection sampling with a fallback
/// to random subgraphs of the layered tournament (subgraphs of a 3-free
/// digraph stay 3-free).
pub fn random_three_free(n: usize, rng: &mut impl Rng) -> Digraph {
    if n >= 4 && rng.gen_bool(0.5) {
        return random_layered_subgraph(n, rng);
    }
    let density = (1.5 / n.max(2) as f64).min(0.5);
    for _ in 0..20 {
        let g = random_digon_free(n, density, rng);
        if g.is_k_free(3) {
            return g;
        }
    }
    if n >= 4 {
        random_layered_subgraph(n, rng)
    } else {
        Digraph::new(n, vec![]).expect("empty digraph")
    }
}

/// Random edge-subgraph of the layered tournament, induced on the first n
/// vertices.
pub fn random_layered_subgraph(n: usize, rng: &mut impl Rng) -> Digraph {
    assert!(n >= 4);
    let m = n.div_ceil(4) * 4;
    let host = layered_tournaments(m).expect("multiple of four");
    let keep_prob = rng.gen_range(0.3..0.95);
    let edges: Vec<(usize, usize)> = host
        .edges()
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(keep_prob))
        .collect();
    let g = Digraph::new(m, edges).expect("subgraph is simple");
    let keep: Vec<usize> = (0..n).collect();
    g.induced_subgraph(&keep)
}

/// Seeded random k-free digraph for seeding searches: greedy random
/// insertions that keep the freeness constraint.
pub fn random_free_digraph(n: usize, freeness: Freeness, rng_seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let k = freeness.k();
    let mut g = Digraph::new(n, vec![]).expect("empty digraph");
    if n < 2 {
        return g;
    }
    let attempts = 3 * n;
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && addition_keeps_free(&g, u, v, k) {
            g = g.with_edge_added(u, v).expect("legal add");
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_digon_free(2).unwrap().count(), 3);
        assert_eq!(enumerate_digon_free(3).unwrap().count(), 27);
        assert_eq!(enumerate_digon_free(4).unwrap().count(), 729);
    }

    #[test]
    fn enumeration_is_digon_free_and_distinct() {
        let graphs: Vec<Digraph> = enumerate_digon_free(3).unwrap().collect();
        for g in &graphs {
            assert!(g.is_k_free(2));
        }
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn thomasse_small_n() {
        let r3 = verify_thomasse(3, 1).unwrap();
        assert_eq!(r3.total, 27);
        assert_eq!(r3.max_p3, 1);
        assert_eq!(r3.thomasse.rhs, Exact::ratio(24, 15));
        assert!(r3.thomasse.holds);

        let r4 = verify_thomasse(4, 1).unwrap();
        assert_eq!(r4.total, 729);
        assert_eq!(r4.max_p3, 4);
        assert_eq!(r4.thomasse.rhs, Exact::from_int(4));
        assert!(r4.thomasse.holds && r4.bondy.holds);
        // the witness achieves the maximum
        let w = Digraph::new(4, r4.witness_edges.clone()).unwrap();
        assert_eq!(w.count_induced_p3(), 4);
    }

    #[test]
    fn thomasse_results_independent_of_jobs() {
        let a = verify_thomasse(4, 1).unwrap();
        let b = verify_thomasse(4, 3).unwrap();
        assert_eq!(a.max_p3, b.max_p3);
        assert_eq!(a.witness_edges, b.witness_edges);
    }

    #[test]
    fn thomasse_resume_roundtrip() {
        let dir = std::env::temp_dir().join(format!("dgs-resume-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t4.resume");
        let _ = std::fs::remove_file(&path);
        let full = verify_thomasse(4, 1).unwrap();
        let resumed = verify_thomasse_with_resume(4, 2, Some(&path)).unwrap();
        assert_eq!(resumed.max_p3, full.max_p3);
        assert_eq!(resumed.witness_edges, full.witness_edges);
        // file now says every shard is done; rerunning just reloads it
        let again = verify_thomasse_with_resume(4, 2, Some(&path)).unwrap();
        assert_eq!(again.max_p3, full.max_p3);
        assert_eq!(again.witness_edges, full.witness_edges);
        let _ = std::fs::remove_file(&path);
    }

    #[test]
    fn enumeration_limit_guard() {
        assert!(matches!(
            verify_thomasse(9, 1).unwrap_err(),
            SearchError::LimitExceeded { n: 9, .. }
        ));
    }

    #[test]
    fn cig_sweep_small() {
        let r = verify_cig(4, None, 1).unwrap();
        assert_eq!(r.max_extent, 1);
        assert_eq!(r.total_representations, 16);
        assert_eq!(r.max_p3, 4); // the directed 4-cycle
        assert_eq!(r.witness_extents, vec![1, 1, 1, 1]);
        assert!(r.bound16.holds);

        for n in 1..=5 {
            let r = verify_cig(n, None, 1).unwrap();
            assert!(r.bound16.holds, "n={n}");
        }
    }

    #[test]
    fn cig_sweep_full_extent_range_still_bounded() {
        for n in 2..=5 {
            let r = verify_cig(n, Some(n - 1), 1).unwrap();
            assert!(r.bound16.holds, "n={n}");
        }
    }

    #[test]
    fn cig_sweep_independent_of_jobs() {
        let a = verify_cig(5, None, 1).unwrap();
        let b = verify_cig(5, None, 3).unwrap();
        assert_eq!(a.max_p3, b.max_p3);
        assert_eq!(a.witness_extents, b.witness_extents);
        assert_eq!(a.two_free_count, b.two_free_count);
    }

    #[test]
    fn climb_reaches_the_four_cycle_optimum() {
        let empty = Digraph::new(4, vec![]).unwrap();
        let cfg = SearchConfig {
            objective: Objective::InducedP3,
            freeness: Freeness::TwoFree,
            budget: 400,
            rng_seed: 5,
            cig_tiebreak: true,
        };
        let out = local_search(&empty, &cfg).unwrap();
        assert_eq!(out.best_value, 4);
        assert!(out.best.is_k_free(2));
    }

    #[test]
    fn climb_is_deterministic() {
        let seed = random_free_digraph(6, Freeness::TwoFree, 99);
        let cfg = SearchConfig {
            objective: Objective::InducedP3,
            freeness: Freeness::TwoFree,
            budget: 60,
            rng_seed: 42,
            cig_tiebreak: false,
        };
        let a = local_search(&seed, &cfg).unwrap();
        let b = local_search(&seed, &cfg).unwrap();
        assert_eq!(a.best_value, b.best_value);
        assert_eq!(a.best, b.best);
        assert_eq!(
            a.trace.iter().map(|t| (t.step, t.u, t.v, t.value)).collect::<Vec<_>>(),
            b.trace.iter().map(|t| (t.step, t.u, t.v, t.value)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn climb_respects_p4_ceiling_on_layered_seed() {
        let seed = layered_tournaments(8).unwrap();
        let cfg = SearchConfig {
            objective: Objective::P4,
            freeness: Freeness::ThreeFree,
            budget: 40,
            rng_seed: 7,
            cig_tiebreak: false,
        };
        let out = local_search(&seed, &cfg).unwrap();
        assert!(out.best.is_k_free(3));
        // 75·P4 ≤ 4·n⁴ throughout the run
        for entry in &out.trace {
            assert!(75 * entry.value as u128 <= 4 * 8u128.pow(4));
        }
        assert!(75 * out.best_value as u128 <= 4 * 8u128.pow(4));
    }

    #[test]
    fn climb_rejects_unfree_seed() {
        let digon = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        let cfg = SearchConfig {
            objective: Objective::InducedP3,
            freeness: Freeness::TwoFree,
            budget: 5,
            rng_seed: 0,
            cig_tiebreak: false,
        };
        assert!(matches!(
            local_search(&digon, &cfg).unwrap_err(),
            SearchError::SeedNotFree
        ));
    }

    #[test]
    fn random_generators_respect_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_digon_free(8, 0.4, &mut rng);
            assert!(g.is_k_free(2));
            let h = random_three_free(8, &mut rng);
            assert!(h.is_k_free(3));
        }
        let g = random_free_digraph(8, Freeness::ThreeFree, 3);
        assert!(g.is_k_free(3));
    }
}
