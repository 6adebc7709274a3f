//! Seven-type triad census for digon-free digraphs.
//!
//! Only the two triangle types are counted directly (word-parallel
//! neighbor-set intersections over the edge list); the remaining five
//! counts follow from degree identities:
//!
//! ```text
//! s1+s2+s3+s4+s5+s6+s7 = C(n,3)
//! s2+2s3+2s4+2s5+3s6+3s7 = (n−2)/2 · Σ(dᵢ⁻+dᵢ⁺)
//! s3+s6 = Σ C(dᵢ⁻,2)
//! s4+s6+3s7 = Σ dᵢ⁻dᵢ⁺
//! s5+s6 = Σ C(dᵢ⁺,2)
//! ```
//!
//! Type numbering: s1 empty, s2 one edge, s3 two edges sharing a head
//! (in-star), s4 directed 2-edge path, s5 two edges sharing a tail
//! (out-star), s6 transitive triangle, s7 cyclic triangle.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::bits::{and_count, and_count_below};
use crate::digraph::Digraph;
use crate::parallel::{map_fold, split_ranges};
use crate::rational::{BoundReport, Exact};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("digon present between vertices {0} and {1}")]
    DigonPresent(usize, usize),
}

/// Counts of the seven induced 3-vertex subgraph types.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TriadCensus {
    pub s1: u64,
    pub s2: u64,
    pub s3: u64,
    pub s4: u64,
    pub s5: u64,
    pub s6: u64,
    pub s7: u64,
}

impl TriadCensus {
    pub fn as_array(&self) -> [u64; 7] {
        [self.s1, self.s2, self.s3, self.s4, self.s5, self.s6, self.s7]
    }

    pub fn total(&self) -> u64 {
        self.as_array().iter().sum()
    }
}

fn ensure_digon_free(g: &Digraph) -> Result<(), CensusError> {
    match g.first_digon() {
        Some((u, v)) => Err(CensusError::DigonPresent(u, v)),
        None => Ok(()),
    }
}

fn choose2(d: u64) -> u64 {
    d * d.saturating_sub(1) / 2
}

fn choose3(n: u64) -> u64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Triangle counts (transitive, cyclic) over a range of the edge list.
///
/// A transitive triangle is counted once via its source edge (u,v) with
/// apex w ∈ N⁺(u)∩N⁺(v); a cyclic triangle once via the edge whose
/// completing vertex w ∈ N⁺(v)∩N⁻(u) has the smallest index of the three.
fn triangle_counts(g: &Digraph, range: std::ops::Range<usize>) -> (u64, u64) {
    let edges = &g.edges()[range];
    let mut s6 = 0u64;
    let mut s7 = 0u64;
    if let Some((out_bits, in_bits)) = g.bit_rows() {
        for &(u, v) in edges {
            s6 += and_count(out_bits.row(u), out_bits.row(v));
            s7 += and_count_below(out_bits.row(v), in_bits.row(u), u.min(v));
        }
    } else {
        for &(u, v) in edges {
            s6 += sorted_intersection_count(g.out_neighbors(u), g.out_neighbors(v), usize::MAX);
            s7 += sorted_intersection_count(g.out_neighbors(v), g.in_neighbors(u), u.min(v));
        }
    }
    (s6, s7)
}

fn sorted_intersection_count(a: &[usize], b: &[usize], below: usize) -> u64 {
    let mut count = 0u64;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= below {
            break;
        }
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Computes the census of a digon-free digraph via triangle counting plus
/// the degree identities.
pub fn census(g: &Digraph) -> Result<TriadCensus, CensusError> {
    census_with_jobs(g, 1)
}

/// As [`census`], parallelized over edge ranges; totals are associative
/// sums, so the result is identical for every `jobs` value.
pub fn census_with_jobs(g: &Digraph, jobs: usize) -> Result<TriadCensus, CensusError> {
    ensure_digon_free(g)?;
    if g.n() < 3 {
        return Ok(TriadCensus::default());
    }
    let n = g.n() as u64;
    let m = g.edge_count() as u64;

    let ranges = split_ranges(g.edge_count(), if jobs > 1 { jobs * 8 } else { 1 });
    let (s6, s7) = map_fold(
        jobs,
        ranges,
        |r| triangle_counts(g, r),
        (0u64, 0u64),
        |acc, part| (acc.0 + part.0, acc.1 + part.1),
    );

    let mut sum_c2_in = 0u64;
    let mut sum_c2_out = 0u64;
    let mut sum_inout = 0u64;
    for v in 0..g.n() {
        let din = g.in_degree(v) as u64;
        let dout = g.out_degree(v) as u64;
        sum_c2_in += choose2(din);
        sum_c2_out += choose2(dout);
        sum_inout += din * dout;
    }

    let s3 = sum_c2_in - s6;
    let s5 = sum_c2_out - s6;
    let s4 = sum_inout - s6 - 3 * s7;
    // second identity rearranged for s2; Σ(d⁻+d⁺) = 2m
    let s2 = (n - 2) * m - 2 * (s3 + s4 + s5) - 3 * (s6 + s7);
    let s1 = choose3(n) - s2 - s3 - s4 - s5 - s6 - s7;

    Ok(TriadCensus {
        s1,
        s2,
        s3,
        s4,
        s5,
        s6,
        s7,
    })
}

/// Classifies all C(n,3) vertex triples directly. Oracle for [`census`].
pub fn census_bruteforce(g: &Digraph) -> Result<TriadCensus, CensusError> {
    ensure_digon_free(g)?;
    let mut counts = [0u64; 7];
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                counts[triad_type(g, a, b, c) - 1] += 1;
            }
        }
    }
    let [s1, s2, s3, s4, s5, s6, s7] = counts;
    Ok(TriadCensus {
        s1,
        s2,
        s3,
        s4,
        s5,
        s6,
        s7,
    })
}

/// Type (1..=7) of the triple {a,b,c} in a digon-free digraph.
fn triad_type(g: &Digraph, a: usize, b: usize, c: usize) -> usize {
    let vs = [a, b, c];
    let mut edges = [(0usize, 0usize); 3];
    let mut e = 0;
    for i in 0..3 {
        for j in 0..3 {
            if i != j && g.has_edge(vs[i], vs[j]) {
                edges[e] = (vs[i], vs[j]);
                e += 1;
            }
        }
    }
    match e {
        0 => 1,
        1 => 2,
        2 => {
            let (x1, y1) = edges[0];
            let (x2, y2) = edges[1];
            if y1 == y2 {
                3 // shared head: in-star
            } else if x1 == x2 {
                5 // shared tail: out-star
            } else {
                4 // 2-edge path
            }
        }
        3 => {
            // each vertex has out-degree 1 iff the triangle is cyclic
            let cyclic = vs
                .iter()
                .all(|&v| vs.iter().filter(|&&w| w != v && g.has_edge(v, w)).count() == 1);
            if cyclic {
                7
            } else {
                6
            }
        }
        _ => unreachable!("digon-free triples have at most 3 edges"),
    }
}

/// Residuals (LHS − RHS) of the five census identities. All must be zero.
pub fn census_residuals(g: &Digraph, c: &TriadCensus) -> [i128; 5] {
    let n = g.n() as i128;
    let m = g.edge_count() as i128;
    let [s1, s2, s3, s4, s5, s6, s7] = c.as_array().map(|x| x as i128);
    let mut sum_c2_in = 0i128;
    let mut sum_c2_out = 0i128;
    let mut sum_inout = 0i128;
    for v in 0..g.n() {
        let din = g.in_degree(v) as i128;
        let dout = g.out_degree(v) as i128;
        sum_c2_in += din * (din - 1) / 2;
        sum_c2_out += dout * (dout - 1) / 2;
        sum_inout += din * dout;
    }
    [
        s1 + s2 + s3 + s4 + s5 + s6 + s7 - choose3(g.n() as u64) as i128,
        s2 + 2 * (s3 + s4 + s5) + 3 * (s6 + s7) - (n - 2) * m,
        s3 + s6 - sum_c2_in,
        s4 + s6 + 3 * s7 - sum_inout,
        s5 + s6 - sum_c2_out,
    ]
}

/// 2n³/25, the unconditional upper bound for s₄ in digon-free digraphs.
pub fn bondy_bound(n: usize) -> Exact {
    let n = BigInt::from(n);
    Exact::big_ratio(2 * &n * &n * &n, BigInt::from(25))
}

/// The degree-deficit refinement of the 2n³/25 bound:
///
/// 2n³/25 − (1/10)Σ(dᵢ⁻−dᵢ⁺)² − (1/4)Σ(2n/5−dᵢ⁻)² − (1/4)Σ(2n/5−dᵢ⁺)²
pub fn bondy_refined_bound(g: &Digraph) -> Result<Exact, CensusError> {
    ensure_digon_free(g)?;
    let n = g.n() as i128;
    let mut imbalance = 0i128; // Σ (d⁻−d⁺)²
    let mut deficit = 0i128; // Σ (2n−5d⁻)² + (2n−5d⁺)²
    for v in 0..g.n() {
        let din = g.in_degree(v) as i128;
        let dout = g.out_degree(v) as i128;
        imbalance += (din - dout) * (din - dout);
        deficit += (2 * n - 5 * din).pow(2) + (2 * n - 5 * dout).pow(2);
    }
    // (2n/5 − d)² = (2n − 5d)²/25, and the quarter factor gives /100
    let result = &bondy_bound(g.n())
        - &(&Exact::big_ratio(BigInt::from(imbalance), BigInt::from(10))
            + &Exact::big_ratio(BigInt::from(deficit), BigInt::from(100)));
    Ok(result)
}

/// (n−1)n(n+1)/15 — the conjectured sharp bound for s₄.
pub fn thomasse_bound(n: usize) -> Exact {
    let n = BigInt::from(n);
    Exact::big_ratio((&n - 1) * &n * (&n + 1), BigInt::from(15))
}

/// The standard bound reports for a digon-free digraph's s₄ count.
pub fn census_bounds(g: &Digraph, c: &TriadCensus) -> Result<Vec<BoundReport>, CensusError> {
    let s4 = Exact::from_u64(c.s4);
    Ok(vec![
        BoundReport::le("s4 <= 2n^3/25", s4.clone(), bondy_bound(g.n())),
        BoundReport::le("s4 <= refined 2n^3/25", s4.clone(), bondy_refined_bound(g)?),
        BoundReport::le("s4 <= (n-1)n(n+1)/15", s4, thomasse_bound(g.n())),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{directed_cycle, transitive_tournament, Digraph};

    #[test]
    fn triangle_censuses() {
        let cyc = directed_cycle(3);
        assert_eq!(
            census(&cyc).unwrap().as_array(),
            [0, 0, 0, 0, 0, 0, 1]
        );
        let tt = transitive_tournament(3);
        assert_eq!(census(&tt).unwrap().as_array(), [0, 0, 0, 0, 0, 1, 0]);
    }

    #[test]
    fn four_cycle_census() {
        let c4 = directed_cycle(4);
        let c = census(&c4).unwrap();
        assert_eq!(c.as_array(), [0, 0, 0, 4, 0, 0, 0]);
        assert_eq!(c.s4, c4.count_induced_p3());
        assert_eq!(c, census_bruteforce(&c4).unwrap());
        assert_eq!(census_residuals(&c4, &c), [0; 5]);
    }

    #[test]
    fn bruteforce_trivial_cases() {
        let empty = Digraph::new(5, vec![]).unwrap();
        let c = census_bruteforce(&empty).unwrap();
        assert_eq!(c.s1, 10);
        assert_eq!(c.total(), 10);
        let one_edge = Digraph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(census_bruteforce(&one_edge).unwrap().s2, 1);
    }

    #[test]
    fn digon_rejected_with_pair() {
        let g = Digraph::new(3, vec![(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(census(&g).unwrap_err(), CensusError::DigonPresent(0, 1));
        assert_eq!(
            census_bruteforce(&g).unwrap_err(),
            CensusError::DigonPresent(0, 1)
        );
    }

    #[test]
    fn bondy_bound_values() {
        assert_eq!(bondy_bound(5), Exact::from_int(10));
        assert_eq!(bondy_bound(4), Exact::ratio(128, 25));
        assert_eq!(bondy_bound(10), Exact::from_int(80));
    }

    #[test]
    fn refined_bound_values() {
        let c4 = directed_cycle(4);
        let refined = bondy_refined_bound(&c4).unwrap();
        assert_eq!(refined, Exact::ratio(22, 5));
        assert!(Exact::from_u64(census(&c4).unwrap().s4) <= refined);

        let empty = Digraph::new(5, vec![]).unwrap();
        assert_eq!(bondy_refined_bound(&empty).unwrap(), Exact::zero());
        assert_eq!(census(&empty).unwrap().s4, 0);
    }

    #[test]
    fn thomasse_bound_values() {
        assert_eq!(thomasse_bound(4), Exact::from_int(4));
        assert_eq!(thomasse_bound(16), Exact::from_int(272));
        assert_eq!(thomasse_bound(1), Exact::zero());
    }

    #[test]
    fn parallel_census_matches_sequential() {
        let g = crate::cig::generate_g_beta(48, 13).unwrap().to_digraph();
        let seq = census(&g).unwrap();
        for jobs in [2, 4] {
            assert_eq!(census_with_jobs(&g, jobs).unwrap(), seq);
        }
    }

    #[test]
    fn tiny_graphs() {
        for n in 0..3 {
            let g = Digraph::new(n, vec![]).unwrap();
            let c = census(&g).unwrap();
            assert_eq!(c.total(), 0);
            assert_eq!(census_residuals(&g, &c), [0; 5]);
        }
    }
}
