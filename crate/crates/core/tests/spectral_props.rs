mod common;

use common::{connected_graph, graph};
use proptest::prelude::*;
use spexlab::graph::parse_expr;
use spexlab::spectral::bounds::eigen_equation_residuals;
use spexlab::spectral::{char_poly, check_alpha_bounds, equitable_partition, max_real_root, quotient, spectral_radius};
use spexlab::Graph;

const ALPHAS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn alpha_bounds_hold(g in graph(1, 20)) {
        for a in ALPHAS {
            let b = check_alpha_bounds(&g, a).unwrap();
            prop_assert!(b.slack >= -1e-9, "{b:?}");
        }
    }

    #[test]
    fn perron_vector_is_scaled(g in graph(1, 20), ai in 0usize..4) {
        let s = spectral_radius(&g, ALPHAS[ai]).unwrap();
        prop_assert!(s.perron.iter().all(|&x| x >= 0.0));
        if g.size() > 0 {
            prop_assert_eq!(s.perron.iter().copied().fold(0.0, f64::max), 1.0);
        }
    }

    #[test]
    fn eigen_equations_hold_on_connected_graphs(g in connected_graph(2, 16), ai in 0usize..4) {
        let s = spectral_radius(&g, ALPHAS[ai]).unwrap();
        let (first, second, rayleigh) = eigen_equation_residuals(&g, &s);
        prop_assert!(first <= 1e-8 && second <= 1e-8 && rayleigh <= 1e-8, "{first} {second} {rayleigh}");
    }

    #[test]
    fn adding_an_edge_increases_radius(g in connected_graph(3, 14), k in any::<usize>()) {
        let non = g.non_edges();
        if !non.is_empty() {
            let (u, v) = non[k % non.len()];
            let mut h = g.clone();
            h.add_edge(u, v);
            for a in ALPHAS {
                let (x, y) = (spectral_radius(&g, a).unwrap().lambda, spectral_radius(&h, a).unwrap().lambda);
                prop_assert!(y > x + 1e-12, "alpha {a}: {x} -> {y}");
            }
        }
    }

    #[test]
    fn equitable_quotient_shares_top_eigenvalue(g in graph(1, 14)) {
        let cells = equitable_partition(&g, &[(0..g.order()).collect()]).unwrap();
        let root = max_real_root(&char_poly(&quotient(&g, &cells).unwrap()), -1.0).unwrap();
        prop_assert!((root - spectral_radius(&g, 0.0).unwrap().lambda).abs() <= 1e-9);
    }

    #[test]
    fn join_quotients_match(a in 1usize..6, c in 1usize..10, b in 1usize..6) {
        let g = Graph::complete(a).join(&Graph::complete(b).repeat(c));
        let cells = equitable_partition(&g, &[(0..g.order()).collect()]).unwrap();
        let root = max_real_root(&char_poly(&quotient(&g, &cells).unwrap()), -1.0).unwrap();
        prop_assert!((root - spectral_radius(&g, 0.0).unwrap().lambda).abs() <= 1e-9);
    }
}

#[test]
fn weyl_upper_bound_for_join_with_edge() {
    for k in 1..=4 {
        for n in k + 2..=40 {
            let g = parse_expr(&format!("K{k} + (K2 u E{})", n - k - 2)).unwrap().realize();
            let l = spectral_radius(&g, 0.0).unwrap().lambda;
            assert!(l <= ((k * (n - k)) as f64).sqrt() + k as f64 + 1e-12, "k={k} n={n}: {l}");
        }
    }
}
