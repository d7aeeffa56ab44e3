//! Exhaustive extremal searches: `ex(n, F)`, `spex_α(n, F)`, the search
//! restricted to graphs containing `K_{k,n−k}`, and comparison of explicit
//! candidate graphs.

mod compare;
mod enumerate;

pub use compare::{candidate_compare, exact_char_poly, CandidateEntry, CompareReport, PairComparison, MAX_EXACT_CELLS};
pub use enumerate::{
    check_enum_cap, enumerate_filtered, enumerate_graphs, Keep, MAX_CONNECTED_ENUM_ORDER, MAX_ENUM_ORDER,
};

use crate::error::{Error, Result};
use crate::family::{is_free_capped, Caps, FamilySpec};
use crate::graph::{canonical_form, is_isomorphic, Graph};
use crate::spectral::{compare_max_roots, poly::{q_from_f64, q_int}, spectral_radius_with, EigenOptions};
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

/// Largest left side for the restricted search.
pub const MAX_RESTRICTED_K: usize = 4;
/// Largest host order for the restricted search.
pub const MAX_RESTRICTED_ORDER: usize = 14;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Enumerate connected graphs only.
    pub connected: bool,
    /// Worker threads (0 = rayon default).
    pub workers: usize,
    pub caps: Caps,
    pub eigen: EigenOptions,
    /// Spectral radii within this distance of the best are re-checked exactly.
    pub tie_tol: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { connected: false, workers: 0, caps: Caps::default(), eigen: EigenOptions::default(), tie_tol: 1e-9 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Edges,
    Lambda { alpha: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Optimum {
    Edges(usize),
    Lambda(f64),
}

impl Optimum {
    pub fn as_f64(&self) -> f64 {
        match *self {
            Optimum::Edges(e) => e as f64,
            Optimum::Lambda(l) => l,
        }
    }
}

/// Split of a restricted-search witness into its two sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decomposition {
    /// Graph induced on the `k` left vertices.
    pub left: String,
    pub left_edges: usize,
    /// Graph induced on the `n − k` right vertices.
    pub right: String,
    pub right_edges: usize,
    /// `i` when the right side is `⌊(n−k)/i⌋ P_i` plus isolated vertices, `i ∈ {1, 2, 3}`.
    pub right_path_union: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub query: String,
    pub n: usize,
    pub family: String,
    pub objective: Objective,
    pub optimum: Optimum,
    /// Canonical graph6 strings of every optimal class, sorted.
    pub witnesses: Vec<String>,
    /// Free classes examined on `n` vertices.
    pub enumerated: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_to: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub decompositions: Vec<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    pub flags: Vec<String>,
}

impl SearchReport {
    /// Drop the wall-clock field so output is reproducible byte for byte.
    pub fn without_runtime(mut self) -> Self {
        self.runtime_ms = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn csv_header() -> &'static str {
        "query,n,optimum,witnesses,enumerated,runtime_ms,flags"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "\"{}\",{},{},{},{},{},\"{}\"",
            self.query,
            self.n,
            self.optimum.as_f64(),
            self.witnesses.len(),
            self.enumerated,
            self.runtime_ms.map(|r| r.to_string()).unwrap_or_default(),
            self.flags.join(";")
        )
    }

    pub fn witness_graphs(&self) -> Vec<Graph> {
        self.witnesses.iter().map(|w| crate::graph::graph6_decode(w).expect("witnesses are valid graph6")).collect()
    }
}

/// CSV table for a sweep of reports.
pub fn reports_to_csv(reports: &[SearchReport]) -> String {
    let mut out = String::from(SearchReport::csv_header());
    out.push('\n');
    for r in reports {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

fn free_classes(n: usize, spec: &FamilySpec, opts: &SearchOptions) -> Result<Vec<Graph>> {
    let keep = |g: &Graph| is_free_capped(g, spec, &opts.caps);
    enumerate_filtered(n, opts.connected, opts.workers, &keep)
}

fn base_flags(opts: &SearchOptions) -> Vec<String> {
    if opts.connected {
        vec!["connected-only".into()]
    } else {
        vec![]
    }
}

/// `ex(n, F)` with every extremal class.
pub fn ex(n: usize, spec: &FamilySpec, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    let graphs = free_classes(n, spec, opts)?;
    let best = graphs.iter().map(Graph::size).max().ok_or_else(|| no_free(n, spec))?;
    let witnesses = graphs.iter().filter(|g| g.size() == best).map(Graph::graph6).collect();
    Ok(SearchReport {
        query: format!("ex n={n} family={spec}"),
        n,
        family: spec.to_string(),
        objective: Objective::Edges,
        optimum: Optimum::Edges(best),
        witnesses,
        enumerated: graphs.len() as u64,
        restricted_to: opts.connected.then(|| "connected".to_string()),
        decompositions: vec![],
        runtime_ms: Some(start.elapsed().as_millis() as u64),
        flags: base_flags(opts),
    })
}

fn no_free(n: usize, spec: &FamilySpec) -> Error {
    Error::NoFreeGraph(format!("no {spec}-free graph on {n} vertices"))
}

/// Among graphs whose float radii are within `tie_tol` of the best, keep
/// exactly those whose largest root equals the exact maximum.
fn resolve_ties(cands: Vec<(f64, Graph)>, alpha: f64, flags: &mut Vec<String>) -> Result<Vec<(f64, Graph)>> {
    if cands.len() <= 1 {
        return Ok(cands);
    }
    flags.push("exact-tie-check".into());
    let a = q_from_f64(alpha);
    // radii are nonnegative, so every top root lies above −1
    let below = q_int(-1);
    let mut best: Vec<(f64, Graph, crate::spectral::Polynomial)> = Vec::new();
    for (lam, g) in cands {
        let p = exact_char_poly(&g, &a)?;
        match best.first() {
            None => best.push((lam, g, p)),
            Some((_, _, bp)) => match compare_max_roots(&p, bp, &below)?.ordering {
                Ordering::Greater => best = vec![(lam, g, p)],
                Ordering::Equal => best.push((lam, g, p)),
                Ordering::Less => {}
            },
        }
    }
    if best.len() > 1 {
        flags.push("tie".into());
    }
    Ok(best.into_iter().map(|(l, g, _)| (l, g)).collect())
}

/// `spex_α(n, F)` with every extremal class. Near-ties are settled by exact
/// comparison of characteristic polynomials of equitable quotients.
pub fn spex(n: usize, spec: &FamilySpec, alpha: f64, opts: &SearchOptions) -> Result<SearchReport> {
    Ok(spex_multi(n, spec, &[alpha], opts)?.remove(0))
}

/// [`spex`] for several values of `α`, sharing one enumeration.
pub fn spex_multi(n: usize, spec: &FamilySpec, alphas: &[f64], opts: &SearchOptions) -> Result<Vec<SearchReport>> {
    let start = Instant::now();
    let graphs = free_classes(n, spec, opts)?;
    if graphs.is_empty() {
        return Err(no_free(n, spec));
    }
    let enumerated_ms = start.elapsed().as_millis() as u64;
    alphas.iter().map(|&alpha| spex_over(n, spec, alpha, &graphs, opts, enumerated_ms)).collect()
}

fn spex_over(
    n: usize,
    spec: &FamilySpec,
    alpha: f64,
    graphs: &[Graph],
    opts: &SearchOptions,
    enumerated_ms: u64,
) -> Result<SearchReport> {
    let start = Instant::now();
    let radii: Vec<f64> = enumerate::in_pool(opts.workers, || {
        graphs
            .par_iter()
            .map(|g| spectral_radius_with(g, alpha, &opts.eigen).map(|s| s.lambda))
            .collect::<Result<Vec<f64>>>()
    })??;
    let top = radii.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let near: Vec<(f64, Graph)> = radii
        .iter()
        .zip(graphs)
        .filter(|(&l, _)| l >= top - opts.tie_tol)
        .map(|(&l, g)| (l, g.clone()))
        .collect();
    let mut flags = base_flags(opts);
    let best = resolve_ties(near, alpha, &mut flags)?;
    let optimum = best.iter().map(|(l, _)| *l).fold(f64::NEG_INFINITY, f64::max);
    let mut witnesses: Vec<String> = best.iter().map(|(_, g)| g.graph6()).collect();
    witnesses.sort();
    Ok(SearchReport {
        query: format!("spex n={n} family={spec} alpha={alpha}"),
        n,
        family: spec.to_string(),
        objective: Objective::Lambda { alpha },
        optimum: Optimum::Lambda(optimum),
        witnesses,
        enumerated: graphs.len() as u64,
        restricted_to: opts.connected.then(|| "connected".to_string()),
        decompositions: vec![],
        runtime_ms: Some(enumerated_ms + start.elapsed().as_millis() as u64),
        flags,
    })
}

fn path_union_index(x: &Graph) -> Option<usize> {
    (1..=3).find(|&i| Graph::path(i).maximal_union(x.order()).is_ok_and(|u| is_isomorphic(x, &u)))
}

/// `ex` over graphs on `n` vertices containing `K_{k,n−k}`: a graph `L` on
/// the `k` left vertices joined completely to a graph `X` on the rest.
///
/// `L` ranges over all classes on `k` vertices and `X` over classes on
/// `n − k` vertices, grown with pruning on freeness of `L + X`. Every class
/// of such graphs arises this way.
pub fn ex_restricted(n: usize, spec: &FamilySpec, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if k == 0 || k > MAX_RESTRICTED_K {
        return Err(Error::ParamRange(format!("restricted search needs 1 <= k <= {MAX_RESTRICTED_K}, got {k}")));
    }
    if n <= k {
        return Err(Error::ParamRange(format!("restricted search needs n > k (n = {n}, k = {k})")));
    }
    if n > MAX_RESTRICTED_ORDER {
        return Err(Error::CapExceeded { what: "restricted search order", limit: MAX_RESTRICTED_ORDER, got: n });
    }
    if !is_free_capped(&Graph::complete_bipartite(k, n - k), spec, &opts.caps)? {
        return Err(Error::NoFreeGraph(format!("K_{{{k},{}}} is not {spec}-free", n - k)));
    }
    let lefts = enumerate_filtered(k, false, opts.workers, &|l| is_free_capped(l, spec, &opts.caps))?;
    let mut found: BTreeMap<String, (Graph, Decomposition)> = BTreeMap::new();
    let mut enumerated = 0u64;
    for left in &lefts {
        let keep = |x: &Graph| is_free_capped(&left.join(x), spec, &opts.caps);
        let rights = enumerate::in_pool(opts.workers, || enumerate::enumerate_uncapped(n - k, false, &keep))??;
        enumerated += rights.len() as u64;
        for right in rights {
            let g = left.join(&right);
            let form = canonical_form(&g).0;
            found.entry(form).or_insert_with(|| {
                let d = Decomposition {
                    left: left.graph6(),
                    left_edges: left.size(),
                    right: right.graph6(),
                    right_edges: right.size(),
                    right_path_union: path_union_index(&right),
                };
                (g, d)
            });
        }
    }
    let best = found.values().map(|(g, _)| g.size()).max().ok_or_else(|| no_free(n, spec))?;
    let (witnesses, decompositions): (Vec<String>, Vec<Decomposition>) = found
        .into_iter()
        .filter(|(_, (g, _))| g.size() == best)
        .map(|(form, (_, d))| (form, d))
        .unzip();
    let mut flags = vec![];
    if decompositions.iter().any(|d| d.right_path_union.is_none()) {
        flags.push("right-side-not-path-union".into());
    }
    Ok(SearchReport {
        query: format!("ex-restricted n={n} family={spec} k={k}"),
        n,
        family: spec.to_string(),
        objective: Objective::Edges,
        optimum: Optimum::Edges(best),
        witnesses,
        enumerated,
        restricted_to: Some(format!("K_{{{k},{}}}", n - k)),
        decompositions,
        runtime_ms: Some(start.elapsed().as_millis() as u64),
        flags,
    })
}
