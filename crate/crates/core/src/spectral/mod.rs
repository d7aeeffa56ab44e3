//! Spectral radii of `A` and `A_α = αD + (1−α)A`, Perron vectors, equitable
//! quotients and exact characteristic polynomials.

pub mod bounds;
pub mod dense;
pub mod poly;
pub mod quotient;

pub use bounds::{
    alpha_spex_lower_bound, check_alpha_bounds, check_forest_edge_bound, eigen_equation_residuals, forest_constant,
    AlphaBounds,
};
pub use dense::{jacobi, power_iteration, SymMatrix};
pub use poly::{compare_max_roots, max_real_root, Polynomial, RootComparison};
pub use quotient::{char_poly, char_poly_matrix, equitable_partition, is_equitable, quotient, QuotientMatrix};

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// Solver settings.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenOptions {
    /// Components up to this order use dense Jacobi; larger ones use power iteration.
    pub jacobi_max: usize,
    /// Relative residual target for power iteration.
    pub tol: f64,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions { jacobi_max: 500, tol: 1e-12 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub alpha: f64,
    pub lambda: f64,
    /// Nonnegative, maximum entry exactly 1, zero off the winning component.
    pub perron: Vec<f64>,
    /// `‖M x − λ x‖_∞` for the returned pair.
    pub residual: f64,
    /// Index (in `Graph::components` order) of the component attaining `λ`.
    pub component: usize,
    pub component_size: usize,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::ParamRange(format!("alpha must lie in [0, 1), got {alpha}")));
    }
    Ok(())
}

/// `A_α(g) = αD + (1−α)A` as a dense matrix.
pub fn a_alpha(g: &Graph, alpha: f64) -> Result<SymMatrix> {
    check_alpha(alpha)?;
    let n = g.order();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, alpha * g.degree(v) as f64);
        for u in g.neighbors(v) {
            m.set(v, u, 1.0 - alpha);
        }
    }
    Ok(m)
}

/// `A_α x` evaluated from adjacency lists.
pub fn apply_a_alpha(g: &Graph, alpha: f64, x: &[f64]) -> Vec<f64> {
    (0..g.order())
        .map(|v| alpha * g.degree(v) as f64 * x[v] + (1.0 - alpha) * g.neighbors(v).map(|u| x[u]).sum::<f64>())
        .collect()
}

fn top_pair(h: &Graph, alpha: f64, opts: &EigenOptions) -> (f64, Vec<f64>) {
    let n = h.order();
    if n == 1 {
        return (0.0, vec![1.0]);
    }
    if n <= opts.jacobi_max {
        let m = a_alpha(h, alpha).expect("alpha checked");
        let e = dense::jacobi(&m);
        (e.values[n - 1], e.vectors[n - 1].clone())
    } else {
        let shift = 1.0 + h.max_degree() as f64 * 0.01;
        power_iteration(|x| apply_a_alpha(h, alpha, x), n, shift, opts.tol, 2_000_000)
    }
}

pub fn spectral_radius_with(g: &Graph, alpha: f64, opts: &EigenOptions) -> Result<Spectrum> {
    check_alpha(alpha)?;
    let n = g.order();
    if n == 0 {
        return Err(Error::Invalid("spectral radius of the graph with no vertices".into()));
    }
    let comps = g.components();
    let mut best: Option<(usize, f64, Vec<f64>)> = None;
    for (ci, comp) in comps.iter().enumerate() {
        // an isolated vertex cannot beat any component already seen
        if comp.len() == 1 && best.is_some() {
            continue;
        }
        let (lam, vec) = top_pair(&g.induced(comp), alpha, opts);
        if best.as_ref().is_none_or(|(_, b, _)| lam > *b) {
            best = Some((ci, lam, vec));
        }
    }
    let (ci, lambda, local) = best.unwrap();
    let comp = &comps[ci];
    let mut perron = vec![0.0; n];
    let peak = local.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut arg = 0;
    for (i, &v) in comp.iter().enumerate() {
        perron[v] = local[i].abs() / peak;
        if local[i].abs() == peak {
            arg = v;
        }
    }
    perron[arg] = 1.0;
    let mx = apply_a_alpha(g, alpha, &perron);
    let residual = mx.iter().zip(&perron).map(|(a, b)| (a - lambda * b).abs()).fold(0.0, f64::max);
    Ok(Spectrum { alpha, lambda, perron, residual, component: ci, component_size: comp.len() })
}

/// Largest eigenvalue of `A_α(g)` with its Perron vector.
pub fn spectral_radius(g: &Graph, alpha: f64) -> Result<Spectrum> {
    spectral_radius_with(g, alpha, &EigenOptions::default())
}

/// Adjacency spectral radius; 0 for the graph with no vertices.
pub fn lambda(g: &Graph) -> f64 {
    if g.order() == 0 {
        return 0.0;
    }
    spectral_radius(g, 0.0).map(|s| s.lambda).unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_alpha_definition() {
        let m = a_alpha(&Graph::complete(2), 0.3).unwrap();
        assert_eq!((m.get(0, 0), m.get(0, 1)), (0.3, 0.7));
        let star = a_alpha(&Graph::star(3), 0.5).unwrap();
        assert_eq!(star.get(0, 0), 1.5);
        assert_eq!(star.get(1, 1), 0.5);
        assert_eq!(star.get(0, 2), 0.5);
        assert_eq!(star.get(1, 2), 0.0);
        assert!(a_alpha(&Graph::complete(2), 1.0).is_err());
        let a0 = a_alpha(&Graph::petersen(), 0.0).unwrap();
        assert!(a0.is_symmetric());
    }

    #[test]
    fn known_radii() {
        let s = spectral_radius(&Graph::complete_bipartite(3, 7), 0.0).unwrap();
        assert!((s.lambda - 21f64.sqrt()).abs() < 1e-12);
        assert!(s.residual < 1e-12);
        for a in [0.0, 0.3, 0.9] {
            assert!((spectral_radius(&Graph::complete(2), a).unwrap().lambda - 1.0).abs() < 1e-14);
        }
        assert!((lambda(&Graph::cycle(5)) - 2.0).abs() < 1e-13);
        let s = spectral_radius(&Graph::empty(5), 0.5).unwrap();
        assert_eq!(s.lambda, 0.0);
        assert!(spectral_radius(&Graph::empty(0), 0.0).is_err());
    }

    #[test]
    fn disconnected_graph_uses_dominant_component() {
        let g = Graph::path(3).disjoint_union(&Graph::complete(4));
        let s = spectral_radius(&g, 0.0).unwrap();
        assert!((s.lambda - 3.0).abs() < 1e-12);
        assert_eq!(&s.perron[..3], &[0.0, 0.0, 0.0]);
        assert!(s.perron[3..].iter().all(|&x| (x - 1.0).abs() < 1e-12));
        assert_eq!(s.component_size, 4);
    }

    #[test]
    fn power_iteration_path_for_large_components() {
        let g = Graph::complete_bipartite(4, 30);
        let opts = EigenOptions { jacobi_max: 10, tol: 1e-13 };
        let s = spectral_radius_with(&g, 0.0, &opts).unwrap();
        assert!((s.lambda - 120f64.sqrt()).abs() < 1e-9);
        let s = spectral_radius_with(&g, 0.5, &opts).unwrap();
        let d = spectral_radius(&g, 0.5).unwrap();
        assert!((s.lambda - d.lambda).abs() < 1e-9);
    }
}
