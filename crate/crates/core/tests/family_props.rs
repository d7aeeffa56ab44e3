mod common;

use common::{brute_contains, graph};
use proptest::prelude::*;
use spexlab::family::{contains_subgraph, cycle_spectrum, has_minor, has_subdivision, is_free, FamilySpec, Member};
use spexlab::Graph;
use std::collections::BTreeSet;

/// Cycle lengths by depth-first search from each cycle's smallest vertex.
fn brute_cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    fn dfs(g: &Graph, start: usize, v: usize, path: &mut Vec<usize>, out: &mut BTreeSet<usize>) {
        for u in g.neighbors(v).collect::<Vec<_>>() {
            if u == start && path.len() >= 3 {
                out.insert(path.len());
            } else if u > start && !path.contains(&u) {
                path.push(u);
                dfs(g, start, u, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.order() {
        dfs(g, s, s, &mut vec![s], &mut out);
    }
    out
}

fn with_edge(g: &Graph, k: usize) -> Option<Graph> {
    let non = g.non_edges();
    (!non.is_empty()).then(|| {
        let (u, v) = non[k % non.len()];
        let mut h = g.clone();
        h.add_edge(u, v);
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn subgraph_matches_injection_oracle(g in graph(0, 8), f in graph(1, 6)) {
        prop_assert_eq!(contains_subgraph(&g, &f).unwrap(), brute_contains(&g, &f));
    }

    #[test]
    fn cycle_spectrum_matches_dfs(g in graph(0, 8)) {
        let got: BTreeSet<usize> = cycle_spectrum(&g).unwrap().iter().collect();
        prop_assert_eq!(got, brute_cycle_lengths(&g));
    }

    #[test]
    fn containment_is_monotone_under_adding_edges(g in graph(2, 8), f in graph(1, 5), k in any::<usize>()) {
        if let Some(h) = with_edge(&g, k) {
            if contains_subgraph(&g, &f).unwrap() {
                prop_assert!(contains_subgraph(&h, &f).unwrap());
            }
            if has_minor(&g, &f).unwrap() {
                prop_assert!(has_minor(&h, &f).unwrap());
            }
            if has_subdivision(&g, &f).unwrap() {
                prop_assert!(has_subdivision(&h, &f).unwrap());
            }
        }
    }

    #[test]
    fn subdivision_implies_minor(g in graph(1, 8), f in graph(1, 5)) {
        if has_subdivision(&g, &f).unwrap() {
            prop_assert!(has_minor(&g, &f).unwrap());
        }
        if contains_subgraph(&g, &f).unwrap() {
            prop_assert!(has_subdivision(&g, &f).unwrap());
        }
    }

    #[test]
    fn minor_freeness_is_hereditary(g in graph(1, 8), f in graph(3, 5), k in any::<usize>(), drop in any::<usize>()) {
        let spec = FamilySpec::MinorsOf(Member::new("F", f));
        if is_free(&g, &spec).unwrap() {
            let edges = g.edges();
            if !edges.is_empty() {
                let (u, v) = edges[k % edges.len()];
                let mut h = g.clone();
                h.remove_edge(u, v);
                prop_assert!(is_free(&h, &spec).unwrap());
            }
            prop_assert!(is_free(&g.remove_vertex(drop % g.order()), &spec).unwrap());
        }
    }
}
