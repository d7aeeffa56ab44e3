//! Checkable inequalities and identities for `λ` and `λ_α`.

use super::{spectral_radius, Spectrum};
use crate::error::Result;
use crate::graph::Graph;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaBounds {
    pub alpha: f64,
    /// `αΔ`
    pub lower: f64,
    pub value: f64,
    /// `αΔ + (1−α)λ`
    pub upper: f64,
    /// `min(value − lower, upper − value)`
    pub slack: f64,
    pub holds: bool,
}

/// `αΔ(g) ≤ λ_α(g) ≤ αΔ(g) + (1−α)λ(g)`, allowing `1e−9` of rounding.
pub fn check_alpha_bounds(g: &Graph, alpha: f64) -> Result<AlphaBounds> {
    let value = spectral_radius(g, alpha)?.lambda;
    let lam = spectral_radius(g, 0.0)?.lambda;
    let lower = alpha * g.max_degree() as f64;
    let upper = lower + (1.0 - alpha) * lam;
    let slack = (value - lower).min(upper - value);
    Ok(AlphaBounds { alpha, lower, value, upper, slack, holds: slack >= -1e-9 })
}

/// `2e(N₁(v)) + e(N₁(v), N₂(v)) ≤ 3cn`.
pub fn check_forest_edge_bound(g: &Graph, v: usize, c: f64) -> bool {
    let n1 = g.sphere(v, 1);
    let n2 = g.sphere(v, 2);
    let lhs = 2 * g.edges_within(&n1) + g.edges_between(&n1, &n2);
    lhs as f64 <= 3.0 * c * g.order() as f64
}

/// For a bipartite `f` with a vertex whose removal leaves a forest, the
/// constant `c = 2(|V(f)| − 1)` for which the forest-edge bound holds in every
/// `f`-free graph; `None` when `f` has no such vertex.
pub fn forest_constant(f: &Graph) -> Option<usize> {
    f.bipartition()?;
    (0..f.order()).find(|&v| f.remove_vertex(v).is_forest()).map(|_| 2 * (f.order() - 1))
}

/// Largest per-vertex residuals of the first- and second-degree eigen
/// equations and the Rayleigh-quotient gap for a Perron pair of a connected
/// graph:
///
/// ```text
/// λ y_v   = α d_v y_v + (1−α) Σ_{u∼v} y_u
/// λ² y_v  = α d_v λ y_v + α(1−α) Σ_{u∼v} d_u y_u + (1−α)² Σ_{w∼v} Σ_{u∼w} y_u
/// λ       = (α Σ d_v y_v² + 2(1−α) Σ_{uv∈E} y_u y_v) / yᵀy
/// ```
///
/// The Rayleigh form counts each edge once per endpoint, hence the factor 2
/// when summing over unordered edges.
pub fn eigen_equation_residuals(g: &Graph, s: &Spectrum) -> (f64, f64, f64) {
    let (a, lam, y) = (s.alpha, s.lambda, &s.perron);
    let d: Vec<f64> = g.degrees().into_iter().map(|x| x as f64).collect();
    let mut first = 0.0f64;
    let mut second = 0.0f64;
    for v in 0..g.order() {
        let nb: f64 = g.neighbors(v).map(|u| y[u]).sum();
        first = first.max((lam * y[v] - a * d[v] * y[v] - (1.0 - a) * nb).abs());
        let weighted: f64 = g.neighbors(v).map(|u| d[u] * y[u]).sum();
        let two_step: f64 = g.neighbors(v).map(|w| g.neighbors(w).map(|u| y[u]).sum::<f64>()).sum();
        let rhs = a * d[v] * lam * y[v] + a * (1.0 - a) * weighted + (1.0 - a).powi(2) * two_step;
        second = second.max((lam * lam * y[v] - rhs).abs());
    }
    let yy: f64 = y.iter().map(|x| x * x).sum();
    let quad: f64 = a * (0..g.order()).map(|v| d[v] * y[v] * y[v]).sum::<f64>()
        + 2.0 * (1.0 - a) * g.edges().iter().map(|&(u, v)| y[u] * y[v]).sum::<f64>();
    (first, second, (lam - quad / yy).abs())
}

/// `max{αn + k/α − k − 1 − 2k(k+1)/(α³n − α²(k+1+α) + αk), αn + k/α − k − 1 − α, α(n−1)}`,
/// a lower bound for `λ_α(K_k + K̄_{n−k})` once `n` is large.
pub fn alpha_spex_lower_bound(n: usize, k: usize, alpha: f64) -> f64 {
    let (n, k, a) = (n as f64, k as f64, alpha);
    let base = a * n + k / a - k - 1.0;
    let denom = a.powi(3) * n - a * a * (k + 1.0 + a) + a * k;
    let first = base - 2.0 * k * (k + 1.0) / denom;
    first.max(base - a).max(a * (n - 1.0))
}
