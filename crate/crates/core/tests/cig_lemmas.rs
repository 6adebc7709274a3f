//! Circular-interval machinery checked against the recount oracle, plus
//! exhaustive certification of optimal interval digraphs at small n.

use digraph_stats::cig::{
    add_delta_formula, check_g_beta_inequality, delta_formula_applies, find_augmenting_sequence,
    g_beta_minus_x, generate_g_beta, h_beta_edges, n_cubed_over_16, p3_closed_form,
    p3_of_g_beta_minus_x, remove_delta_formula, toggle, toggle_delta, Alpha,
    CircularIntervalDigraph, ToggleMode,
};
use digraph_stats::rational::Exact;
use digraph_stats::search::verify_cig;

/// Subset of H_β selected by bitmask over the edge tails.
fn subset(h: &[(usize, usize)], mask: u32) -> Vec<(usize, usize)> {
    h.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect()
}

#[test]
fn delta_lemma_matches_recount_exhaustively_at_n10() {
    // 8β − 3n ≥ 2 with 2β < n: at n = 10 only β = 4 qualifies
    let (n, beta) = (10usize, 4usize);
    let h = h_beta_edges(n, beta).unwrap();
    for mask in 0..1u32 << n {
        let x = subset(&h, mask);
        let closed = p3_of_g_beta_minus_x(n, beta, &x).unwrap();
        let recount = g_beta_minus_x(n, beta, &x).unwrap().induced_p3();
        assert_eq!(closed as u64, recount, "mask={mask:#b}");
    }
}

#[test]
fn delta_lemma_matches_recount_on_random_subsets_up_to_n24() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xD317A);
    let mut samples = 0u32;
    for n in 17..=24usize {
        for beta in 1..n.div_ceil(2) {
            if (8 * beta as i64 - 3 * n as i64) < 2 || 2 * beta >= n {
                continue;
            }
            let h = h_beta_edges(n, beta).unwrap();
            for _ in 0..128 {
                let mask: u32 = rng.gen::<u32>() & ((1 << n) - 1);
                let x = subset(&h, mask);
                let closed = p3_of_g_beta_minus_x(n, beta, &x).unwrap();
                let recount = g_beta_minus_x(n, beta, &x).unwrap().induced_p3();
                assert_eq!(closed as u64, recount, "n={n} beta={beta} mask={mask:#b}");
                samples += 1;
            }
        }
    }
    assert!(samples >= 1000, "drew {samples} subsets");
}

#[test]
fn inequality_lemma_exhaustive_at_small_n() {
    // pairs (n, β) with −2 ≤ 8β−3n ≤ 2 and 2β < n, up to n = 11
    for (n, beta) in [(6usize, 2usize), (8, 3), (10, 4), (11, 4)] {
        let h = h_beta_edges(n, beta).unwrap();
        for mask in 0..1u32 << n {
            let x = subset(&h, mask);
            let report = check_g_beta_inequality(n, beta, &x).unwrap();
            assert!(report.holds, "n={n} beta={beta} mask={mask:#b}");
        }
    }
}

#[test]
fn toggle_formulas_agree_with_recount_where_applicable() {
    // random-ish 2-free interval digraphs from a deterministic sweep
    let mut fixtures: Vec<CircularIntervalDigraph> = Vec::new();
    for n in 4..=12usize {
        for beta in 1..(n / 2) {
            fixtures.push(generate_g_beta(n, beta).unwrap());
        }
    }
    for shift in 0..4usize {
        let mut extents = vec![4; 12];
        extents[shift] = 5;
        extents[(shift + 5) % 12] = 2;
        if let Ok(g) = CircularIntervalDigraph::new(extents) {
            if g.is_two_free() {
                fixtures.push(g);
            }
        }
    }

    let mut formula_checks = 0u32;
    for g in &fixtures {
        let base = g.induced_p3() as i64;
        let state = g.extreme_state();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                let d = g.distance(u, v);
                if g.has_edge(u, v) && d == state.beta {
                    let delta = toggle_delta(g, u, v, ToggleMode::Remove).unwrap();
                    let after = toggle(g, u, v, ToggleMode::Remove).unwrap();
                    assert_eq!(delta, after.induced_p3() as i64 - base);
                    if delta_formula_applies(g, u, v, ToggleMode::Remove) {
                        assert_eq!(delta, remove_delta_formula(g, u, v));
                        formula_checks += 1;
                    }
                }
                if g.is_non_edge_pair(u, v)
                    && state.alpha == Alpha::Finite(d)
                    && d == g.extent(u) + 1
                {
                    let delta = toggle_delta(g, u, v, ToggleMode::Add).unwrap();
                    let after = toggle(g, u, v, ToggleMode::Add).unwrap();
                    assert_eq!(delta, after.induced_p3() as i64 - base);
                    if delta_formula_applies(g, u, v, ToggleMode::Add) {
                        assert_eq!(delta, add_delta_formula(g, u, v).unwrap());
                        formula_checks += 1;
                    }
                }
            }
        }
    }
    assert!(formula_checks > 100, "conditional checks actually ran");
}

#[test]
fn slacks_nonnegative_on_degree_bounded_fixtures() {
    for n in [8usize, 10, 12, 16] {
        for beta in 2..n / 2 {
            if 8 * beta as i64 - 3 * n as i64 >= 2 {
                let h = h_beta_edges(n, beta).unwrap();
                for mask in [0u32, 1, 3, 5, (1 << n) - 1] {
                    let x = subset(&h, mask);
                    let g = g_beta_minus_x(n, beta, &x).unwrap();
                    if g.is_degree_bounded().unwrap() {
                        for v in 0..n {
                            let s = g.slacks(v).unwrap();
                            assert!(
                                s.s_out >= 0 && s.s_in >= 0 && s.t_out >= 0 && s.t_in >= 0
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn two_free_fixture_corpus_respects_the_sixteenth_bound() {
    let mut fixtures: Vec<CircularIntervalDigraph> = Vec::new();
    for n in 2..=20usize {
        for beta in 0..n.div_ceil(2) {
            if 2 * beta < n {
                fixtures.push(generate_g_beta(n, beta).unwrap());
            }
        }
    }
    let h = h_beta_edges(12, 5).unwrap();
    for mask in [1u32, 7, 0b101010101010] {
        fixtures.push(g_beta_minus_x(12, 5, &subset(&h, mask)).unwrap());
    }
    // the stretched fixture and its transform
    let mut extents = vec![4; 12];
    extents[0] = 6;
    let stretched = CircularIntervalDigraph::new(extents).unwrap();
    let seq = find_augmenting_sequence(&stretched).unwrap();
    let transformed =
        digraph_stats::cig::apply_augmenting_transform(&stretched, &seq).unwrap();
    fixtures.push(stretched);
    fixtures.push(transformed);

    for g in &fixtures {
        assert!(g.is_two_free());
        let p3 = g.induced_p3();
        assert!(
            Exact::from_u64(p3) <= n_cubed_over_16(g.n()),
            "n={} extents={:?}",
            g.n(),
            g.extents()
        );
    }
}

#[test]
fn tightness_family_hits_the_bound_exactly() {
    // (3n−4)/8 integral ⟺ n ≡ 4 (mod 8)
    for n in (4..=36).step_by(8) {
        let beta = (3 * n - 4) / 8;
        let g = generate_g_beta(n, beta).unwrap();
        assert_eq!(Exact::from_u64(g.induced_p3()), n_cubed_over_16(n));
        assert_eq!(p3_closed_form(n, beta), n_cubed_over_16(n));
    }
}

/// Exhaustive sweep = the true optimum over 2-free circular interval
/// digraphs; the certified optima exhibit the structure proved for them:
/// β ≤ α ≤ β+1, |γ| ≤ 2, degree bounds, no stable 3-set, and a nonempty
/// return set behind every shortest non-edge.
#[test]
fn certified_optima_satisfy_the_structure_theorems() {
    for n in 4..=9usize {
        let r = verify_cig(n, None, 1).unwrap();
        let g = CircularIntervalDigraph::new(r.witness_extents.clone()).unwrap();
        assert!(g.is_two_free());
        assert_eq!(g.induced_p3(), r.max_p3);
        let state = g.extreme_state();
        let alpha = state.alpha.finite().expect("optimum has a non-edge for n >= 4");
        let beta = state.beta;

        // dichotomy: β ≤ α and α ∈ {β, β+1}
        assert!(beta <= alpha, "n={n}");
        assert!(alpha == beta || alpha == beta + 1, "n={n}");
        // sandwich: 3n/4 − 1/2 − ε/4 < α+β < 3n/4 + 1/2 + ε/4 with ε = 1
        let gamma = state.gamma.unwrap();
        assert!(gamma.abs() <= 2, "n={n} gamma={gamma}");
        // degree bounds
        for v in 0..n {
            let dout = g.out_degree(v);
            let din = g.in_degree(v);
            assert!(alpha - 1 <= dout && dout <= beta, "n={n} v={v}");
            assert!(alpha - 1 <= din && din <= beta, "n={n} v={v}");
        }
        // no stable set of size three
        let d = g.to_digraph();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let stable = d.is_non_edge_pair(a, b)
                        && d.is_non_edge_pair(a, c)
                        && d.is_non_edge_pair(b, c);
                    assert!(!stable, "n={n} stable {{{a},{b},{c}}}");
                }
            }
        }
        // every shortest non-edge has a return path: N⁺(v) ∩ N⁻(u) ≠ ∅
        for u in 0..n {
            for v in 0..n {
                if g.is_non_edge_pair(u, v) && g.distance(u, v) == alpha {
                    let c = (0..n)
                        .filter(|&w| w != u && w != v && g.has_edge(v, w) && g.has_edge(w, u))
                        .count();
                    assert!(c > 0, "n={n} non-edge ({u},{v})");
                }
            }
        }
    }
}
