//! Isomorph-free generation by canonical augmentation.
//!
//! A child `C` of a parent `P` on `n − 1` vertices is `P` plus one vertex
//! joined to a subset of `V(P)`. Let `w` be the last vertex of `C` in its
//! canonical order (restricted to non-cut vertices in connected mode). The
//! child is kept iff `C − w ≅ P`. Every class `C` is therefore produced from
//! exactly one parent class, namely `[C − w]`, and children of one parent are
//! deduplicated by canonical form.
//!
//! Pruning: a child is dropped when `keep` rejects it. When `keep` is closed
//! under taking subgraphs (true of every family predicate in this crate),
//! `C − w ⊆ C` means every kept graph's canonical parent was itself kept, so
//! no class is lost.

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_labeling, graph6_encode, CanonicalForm, Graph};
use rayon::prelude::*;
use std::collections::HashSet;

/// Largest order for unrestricted enumeration.
pub const MAX_ENUM_ORDER: usize = 9;
/// Largest order for connected-only enumeration.
pub const MAX_CONNECTED_ENUM_ORDER: usize = 10;

pub type Keep<'a> = dyn Fn(&Graph) -> Result<bool> + Sync + 'a;

/// Canonical relabelling of `g` with its canonical form and the original
/// positions (`lab[i]` is the vertex of `g` placed at position `i`).
fn canonical_rep(g: &Graph) -> (Graph, CanonicalForm, Vec<usize>) {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    let rep = g.permuted(&perm);
    let form = CanonicalForm(graph6_encode(&rep));
    (rep, form, lab)
}

fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    g.order() > 1 && !g.remove_vertex(v).is_connected()
}

fn children(parent: &Graph, parent_form: &CanonicalForm, connected: bool, keep: &Keep) -> Result<Vec<(CanonicalForm, Graph)>> {
    let p = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let first = if connected && p > 0 { 1u64 } else { 0 };
    for subset in first..(1u64 << p) {
        let child = parent.with_vertex((0..p).filter(|&i| subset >> i & 1 == 1));
        let (rep, form, lab) = canonical_rep(&child);
        if seen.contains(&form) {
            continue;
        }
        let w = if connected {
            *lab.iter().rev().find(|&&v| !is_cut_vertex(&child, v)).expect("connected graphs have a non-cut vertex")
        } else {
            lab[p]
        };
        let accept = w == p || canonical_form(&child.remove_vertex(w)) == *parent_form;
        if !accept {
            continue;
        }
        seen.insert(form.clone());
        if keep(&rep)? {
            out.push((form, rep));
        }
    }
    Ok(out)
}

fn run_in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Generate all kept classes on `n` vertices, level by level.
fn generate(n: usize, connected: bool, keep: &Keep) -> Result<Vec<Graph>> {
    if n == 0 {
        let g = Graph::empty(0);
        return Ok(if keep(&g)? { vec![g] } else { vec![] });
    }
    let k1 = Graph::empty(1);
    if !keep(&k1)? {
        return Ok(Vec::new());
    }
    let mut level: Vec<(CanonicalForm, Graph)> = vec![(canonical_form(&k1), k1)];
    for _ in 2..=n {
        let next: Result<Vec<Vec<(CanonicalForm, Graph)>>> =
            level.par_iter().map(|(form, g)| children(g, form, connected, keep)).collect();
        let mut next: Vec<(CanonicalForm, Graph)> = next?.into_iter().flatten().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

pub fn check_enum_cap(n: usize, connected: bool) -> Result<()> {
    let cap = if connected { MAX_CONNECTED_ENUM_ORDER } else { MAX_ENUM_ORDER };
    if n > cap {
        return Err(Error::cap(
            if connected { "connected enumeration order" } else { "enumeration order" },
            cap,
            n,
        ));
    }
    Ok(())
}

/// All isomorphism classes on `n` vertices accepted by `keep` (which must be
/// closed under subgraphs), as canonically labelled representatives sorted
/// by canonical form. `workers = 0` uses the global thread pool.
pub fn enumerate_filtered(n: usize, connected: bool, workers: usize, keep: &Keep) -> Result<Vec<Graph>> {
    check_enum_cap(n, connected)?;
    run_in_pool(workers, || generate(n, connected, keep))?
}

/// As [`enumerate_filtered`] without the order cap (for internal callers
/// whose pruning keeps the search small).
pub(crate) fn enumerate_uncapped(n: usize, connected: bool, keep: &Keep) -> Result<Vec<Graph>> {
    generate(n, connected, keep)
}

pub(crate) fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    run_in_pool(workers, f)
}

/// Visit each isomorphism class on `n` vertices once; returns the count.
pub fn enumerate_graphs(n: usize, connected: bool, mut visitor: impl FnMut(&Graph)) -> Result<u64> {
    let all = enumerate_filtered(n, connected, 0, &|_| Ok(true))?;
    for g in &all {
        visitor(g);
    }
    Ok(all.len() as u64)
}
