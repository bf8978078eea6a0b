use cliquecover_core::clique::{clique_number, clique_number_within, has_clique_of_size};
use cliquecover_core::coloring::{chromatic_number, color_with};
use cliquecover_core::graph::triangle_free_chromatic;
use cliquecover_core::paths::longest_paths;
use cliquecover_core::{Graph, VertexSet};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn subset_clique_number(g: &Graph, within: u32) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|s| s & !within == 0)
        .filter(|s| {
            let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    (1..=n.max(1))
        .find(|&k| {
            let mut colors = vec![0usize; n];
            loop {
                if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                    return true;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        return false;
                    }
                    colors[i] += 1;
                    if colors[i] < k {
                        break;
                    }
                    colors[i] = 0;
                    i += 1;
                }
            }
        })
        .unwrap_or(0)
}

fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .any(|(u, v)| g.neighbors(u).iter().any(|&w| w != v && g.has_edge(v, w)))
}

/// All simple paths by brute force over vertex sequences; returns the
/// maximum edge count and the set of vertex sequences (both directions).
fn brute_longest(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    fn grow(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for v in 0..g.n() {
            if !path.contains(&v) && g.has_edge(last, v) {
                path.push(v);
                grow(g, path, out);
                path.pop();
            }
        }
    }
    let mut all = Vec::new();
    for s in 0..g.n() {
        grow(g, &mut vec![s], &mut all);
    }
    let best = all.iter().map(|p| p.len() - 1).max().unwrap_or(0);
    let mut longest: Vec<Vec<usize>> = all.into_iter().filter(|p| p.len() - 1 == best).collect();
    longest.sort();
    (best, longest)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn clique_number_matches_subset_enumeration(g in random_graph(10)) {
        let (w, witness) = clique_number(&g);
        prop_assert_eq!(w, subset_clique_number(&g, u32::MAX));
        prop_assert_eq!(witness.len(), w);
        prop_assert!(g.is_clique(&witness));
        prop_assert!(has_clique_of_size(&g, None, w));
        prop_assert!(!has_clique_of_size(&g, None, w + 1));
    }

    #[test]
    fn restricted_clique_number_matches(g in random_graph(10), mask in any::<u32>()) {
        let within = mask & ((1u32 << g.n()) - 1);
        let set = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|v| within >> v & 1 == 1)).unwrap();
        let (w, witness) = clique_number_within(&g, &set);
        prop_assert_eq!(w, subset_clique_number(&g, within));
        prop_assert!(witness.iter().all(|&v| set.contains(v)));
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in random_graph(7)) {
        let chi = chromatic_number(&g, 64).unwrap();
        prop_assert_eq!(chi, brute_chromatic(&g));
        let coloring = color_with(&g, chi).unwrap();
        prop_assert!(g.edges().all(|(u, v)| coloring[u] != coloring[v]));
    }

    #[test]
    fn mycielskian_raises_chromatic_number(g in random_graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let chi = chromatic_number(&g, 64).unwrap();
        let m = g.mycielskian();
        prop_assert_eq!(m.n(), 2 * g.n() + 1);
        prop_assert_eq!(chromatic_number(&m, 64).unwrap(), chi + 1);
        prop_assert_eq!(has_triangle(&m), has_triangle(&g));
    }

    #[test]
    fn longest_paths_match_brute_force(g in random_graph(8)) {
        let lp = longest_paths(&g, 16).unwrap();
        let (best, all) = brute_longest(&g);
        prop_assert_eq!(lp.length, best);
        // canonical form keeps the direction with the smaller first vertex,
        // except single vertices which appear once
        let canonical: Vec<Vec<usize>> = all
            .into_iter()
            .filter(|p| p.first() <= p.last())
            .collect();
        prop_assert_eq!(lp.paths, canonical);
    }
}

#[test]
fn mycielskian_of_k2_is_c5() {
    let m = Graph::complete(2).mycielskian();
    let c5 = Graph::cycle(5);
    let mut perm: Vec<usize> = (0..5).collect();
    let mut iso = false;
    // Heap's algorithm over all 120 relabelings
    let mut c = [0usize; 5];
    let check = |p: &[usize]| m.edges().all(|(u, v)| c5.has_edge(p[u], p[v])) && m.edge_count() == 5;
    iso |= check(&perm);
    let mut i = 0;
    while i < 5 {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            iso |= check(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    assert!(iso);
}

#[test]
fn mycielski_ladder() {
    // K2, C5, the Grötzsch graph, and the 23-vertex next step
    for (j, n) in [(0, 2), (1, 5), (2, 11), (3, 23)] {
        let g = triangle_free_chromatic(j + 2).unwrap();
        assert_eq!(g.n(), n);
        assert!(!has_triangle(&g));
        assert_eq!(chromatic_number(&g, 64).unwrap(), j + 2);
    }
}
