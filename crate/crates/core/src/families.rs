//! Extremal generator constructions with known exact counts.

use thiserror::Error;

use crate::digraph::Digraph;

/// Default ceiling on generated sizes; `DIGRAPH_CENSUS_MAX_N` overrides it.
pub const DEFAULT_MAX_N: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("size {n} exceeds the limit {limit} (set DIGRAPH_CENSUS_MAX_N to raise)")]
    SizeLimit { n: usize, limit: usize },
    #[error("n = {0} must be a positive multiple of 4")]
    NotMultipleOfFour(usize),
}

/// Size guard shared by the generators and the exhaustive searches.
pub fn size_limit() -> usize {
    std::env::var("DIGRAPH_CENSUS_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn check_size(n: usize) -> Result<(), FamilyError> {
    let limit = size_limit();
    if n > limit {
        return Err(FamilyError::SizeLimit { n, limit });
    }
    Ok(())
}

/// The recursive square construction on 4^i vertices: level 0 is a single
/// vertex; level i arranges four copies of level i−1 in a square with all
/// edges between consecutive copies clockwise. Its induced 3-vertex path
/// count is exactly (n−1)n(n+1)/15 with n = 4^i.
pub fn recursive_family(i: u32) -> Result<Digraph, FamilyError> {
    let n = 4usize.checked_pow(i).ok_or(FamilyError::SizeLimit {
        n: usize::MAX,
        limit: size_limit(),
    })?;
    check_size(n)?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // copy D_j occupies the index block [j·4^(i−1), (j+1)·4^(i−1))
    let mut block = 1usize;
    for _ in 0..i {
        let next: Vec<(usize, usize)> = (0..4)
            .flat_map(|j| {
                let offset = j * block;
                edges.iter().map(move |&(u, v)| (u + offset, v + offset))
            })
            .chain((0..4).flat_map(|j| {
                let from = j * block;
                let to = ((j + 1) % 4) * block;
                (0..block).flat_map(move |u| (0..block).map(move |v| (from + u, to + v)))
            }))
            .collect();
        edges = next;
        block *= 4;
    }
    Ok(Digraph::new(n, edges).expect("construction is simple"))
}

/// Four acyclic tournaments of n/4 vertices in a cycle: all edges inside a
/// layer follow index order, and every vertex of layer ℓ points to every
/// vertex of layer ℓ+1 (mod 4). The result is 3-free.
pub fn layered_tournaments(n: usize) -> Result<Digraph, FamilyError> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(FamilyError::NotMultipleOfFour(n));
    }
    check_size(n)?;
    let layer = n / 4;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for l in 0..4 {
        let start = l * layer;
        for u in 0..layer {
            for v in u + 1..layer {
                edges.push((start + u, start + v));
            }
        }
        let next = ((l + 1) % 4) * layer;
        for u in 0..layer {
            for v in 0..layer {
                edges.push((start + u, next + v));
            }
        }
    }
    Ok(Digraph::new(n, edges).expect("construction is simple"))
}

/// The layer (0..4) a vertex of `layered_tournaments(n)` belongs to.
pub fn layer_of(n: usize, v: usize) -> usize {
    v / (n / 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::thomasse_bound;
    use crate::digraph::directed_cycle;
    use crate::rational::Exact;

    #[test]
    fn recursive_level_one_is_the_four_cycle() {
        let g = recursive_family(1).unwrap();
        assert_eq!(g, directed_cycle(4));
        assert_eq!(g.count_induced_p3(), 4);
    }

    #[test]
    fn recursive_counts_match_the_cubic_formula() {
        for i in 1..=3u32 {
            let g = recursive_family(i).unwrap();
            let n = 4u64.pow(i);
            assert_eq!(g.n() as u64, n);
            assert!(g.is_k_free(2));
            let expected = (n - 1) * n * (n + 1) / 15;
            assert_eq!(g.count_induced_p3(), expected, "i={i}");
            // the conjectured bound is met with equality on this family
            assert_eq!(
                Exact::from_u64(g.count_induced_p3()),
                thomasse_bound(g.n())
            );
        }
    }

    #[test]
    fn layered_tournament_structure() {
        assert_eq!(layered_tournaments(4).unwrap(), directed_cycle(4));
        let g = layered_tournaments(8).unwrap();
        assert!(g.is_k_free(3));
        assert!(!g.is_k_free(4));
        assert_eq!(
            layered_tournaments(6).unwrap_err(),
            FamilyError::NotMultipleOfFour(6)
        );
        assert_eq!(
            layered_tournaments(0).unwrap_err(),
            FamilyError::NotMultipleOfFour(0)
        );
    }

    #[test]
    fn layered_ratio_climbs_toward_25_over_512() {
        let limit = Exact::ratio(25, 512);
        let mut last = Exact::zero();
        for n in [4usize, 8, 16, 32, 64] {
            let g = layered_tournaments(n).unwrap();
            let p4 = g.count_paths(4);
            let ratio = Exact::big_ratio(p4.into(), (n as u64).pow(4).into());
            assert!(ratio > last, "ratio should increase at n={n}");
            assert!(ratio < limit, "ratio stays below 25/512 at n={n}");
            last = ratio;
        }
    }

    #[test]
    fn every_layered_four_cycle_crosses_all_layers() {
        let n = 8;
        let g = layered_tournaments(n).unwrap();
        let mut cycles = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let distinct = a < b.min(c).min(d) && b != c && b != d && c != d;
                        if distinct
                            && g.has_edge(a, b)
                            && g.has_edge(b, c)
                            && g.has_edge(c, d)
                            && g.has_edge(d, a)
                        {
                            cycles += 1;
                            let mut layers = [layer_of(n, a), layer_of(n, b), layer_of(n, c), layer_of(n, d)];
                            layers.sort_unstable();
                            assert_eq!(layers, [0, 1, 2, 3]);
                        }
                    }
                }
            }
        }
        assert!(cycles > 0);
    }

    #[test]
    fn size_guard_respected() {
        assert!(matches!(
            recursive_family(7).unwrap_err(),
            FamilyError::SizeLimit { .. }
        ));
    }
}
