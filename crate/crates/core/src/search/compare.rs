//! Ranking explicit candidate graphs by `λ_α`, exactly when their equitable
//! quotients are small.

use crate::error::Result;
use crate::family::{is_free_capped, Caps, FamilySpec};
use crate::graph::Graph;
use crate::spectral::poly::{q_from_f64, q_int, Q};
use crate::spectral::{
    char_poly_matrix, compare_max_roots, equitable_partition, quotient, spectral_radius_with, EigenOptions, Polynomial,
};
use serde::Serialize;
use std::cmp::Ordering;

/// Largest quotient for which exact characteristic polynomials are formed.
pub const MAX_EXACT_CELLS: usize = 24;

/// Characteristic polynomial of the `A_α` quotient by the coarsest equitable
/// partition. Its largest root is `λ_α(g)`: `A_α^k 1 = S B^k 1` for the
/// cell-indicator matrix `S`, so both have the same growth rate.
pub fn exact_char_poly(g: &Graph, alpha: &Q) -> Result<Polynomial> {
    let cells = equitable_partition(g, &[(0..g.order()).collect()])?;
    let q = quotient(g, &cells)?;
    Ok(char_poly_matrix(&q.alpha(alpha)))
}

fn quotient_size(g: &Graph) -> Result<usize> {
    Ok(equitable_partition(g, &[(0..g.order()).collect()])?.len())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CandidateEntry {
    pub name: String,
    pub order: usize,
    pub size: usize,
    /// `None` when no family was given or the freeness test hit a cap.
    pub free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free_error: Option<String>,
    pub lambda: f64,
    pub quotient_cells: usize,
    /// Present when the quotient has at most [`MAX_EXACT_CELLS`] cells.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<String>,
    #[serde(skip)]
    poly: Option<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairComparison {
    pub higher: String,
    pub lower: String,
    /// `exact` (sign test at a rational point) or `float`.
    pub method: String,
    pub equal: bool,
    /// False when a float comparison lies within the tie tolerance.
    pub conclusive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub test_point: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompareReport {
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    /// Entries sorted by decreasing `λ_α`.
    pub ranking: Vec<CandidateEntry>,
    /// Consecutive pairs of the ranking.
    pub comparisons: Vec<PairComparison>,
}

impl CompareReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn exact_order(a: &CandidateEntry, b: &CandidateEntry, below: &Q) -> Option<(Ordering, Option<Q>)> {
    let (p, q) = (a.poly.as_ref()?, b.poly.as_ref()?);
    compare_max_roots(p, q, below).ok().map(|c| (c.ordering, c.test_point))
}

/// Rank `candidates` by `λ_α`, optionally reporting freeness in `spec`.
pub fn candidate_compare(
    candidates: &[(String, Graph)],
    spec: Option<&FamilySpec>,
    alpha: f64,
    caps: &Caps,
    eigen: &EigenOptions,
    tie_tol: f64,
) -> Result<CompareReport> {
    let a = q_from_f64(alpha);
    let below = q_int(-1);
    let mut entries = Vec::with_capacity(candidates.len());
    for (name, g) in candidates {
        let (free, free_error) = match spec.map(|s| is_free_capped(g, s, caps)) {
            None => (None, None),
            Some(Ok(f)) => (Some(f), None),
            Some(Err(e)) => (None, Some(e.to_string())),
        };
        let lambda = spectral_radius_with(g, alpha, eigen)?.lambda;
        let cells = quotient_size(g)?;
        let poly = if cells <= MAX_EXACT_CELLS { Some(exact_char_poly(g, &a)?) } else { None };
        entries.push(CandidateEntry {
            name: name.clone(),
            order: g.order(),
            size: g.size(),
            free,
            free_error,
            lambda,
            quotient_cells: cells,
            char_poly: poly.as_ref().map(ToString::to_string),
            poly,
        });
    }
    entries.sort_by(|x, y| match exact_order(y, x, &below) {
        Some((o, _)) => o,
        None => y.lambda.total_cmp(&x.lambda),
    });
    let comparisons = entries
        .windows(2)
        .map(|w| {
            let (hi, lo) = (&w[0], &w[1]);
            match exact_order(hi, lo, &below) {
                Some((o, point)) => PairComparison {
                    higher: hi.name.clone(),
                    lower: lo.name.clone(),
                    method: "exact".into(),
                    equal: o == Ordering::Equal,
                    conclusive: true,
                    test_point: point.map(|p| p.to_string()),
                },
                None => {
                    let gap = hi.lambda - lo.lambda;
                    PairComparison {
                        higher: hi.name.clone(),
                        lower: lo.name.clone(),
                        method: "float".into(),
                        equal: false,
                        conclusive: gap > tie_tol,
                        test_point: None,
                    }
                }
            }
        })
        .collect();
    Ok(CompareReport { alpha, family: spec.map(ToString::to_string), ranking: entries, comparisons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_expr;

    fn cand(s: &str) -> (String, Graph) {
        (s.to_string(), parse_expr(s).unwrap().realize())
    }

    #[test]
    fn exact_poly_root_matches_float_radius() {
        for s in ["K2 + E8", "K3,5", "P7", "C5 u K4", "K1 + M6", "S2,2,1"] {
            let g = parse_expr(s).unwrap().realize();
            for a in [0.0, 0.25, 0.5] {
                let p = exact_char_poly(&g, &q_from_f64(a)).unwrap();
                let r = crate::spectral::max_real_root(&p, -1.0).unwrap();
                let l = spectral_radius_with(&g, a, &EigenOptions::default()).unwrap().lambda;
                assert!((r - l).abs() < 1e-9, "{s} alpha={a}: {r} vs {l}");
            }
        }
    }

    #[test]
    fn ranking_and_exact_ties() {
        let spec = FamilySpec::parse("list:P6").unwrap();
        let list = [cand("K2 + E4"), cand("K5 u K1"), cand("K1,4 u K1"), cand("K3 u E3")];
        let r = candidate_compare(&list, Some(&spec), 0.0, &Caps::default(), &EigenOptions::default(), 1e-9).unwrap();
        assert_eq!(r.ranking[0].name, "K5 u K1");
        assert_eq!(r.ranking[1].name, "K2 + E4");
        let last = r.comparisons.last().unwrap();
        // K_{1,4} ∪ K1 and K3 ∪ 3K1 share radius 2
        assert!(last.equal && last.method == "exact");
        assert_eq!(r.ranking[0].free, Some(true));
    }
}
