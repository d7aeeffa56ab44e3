//! Trees: unlabelled generation and the Prüfer bijection for labelled trees.

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};
use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

/// Largest order accepted by [`all_trees`].
pub const MAX_TREE_ORDER: usize = 10;

fn cache() -> &'static Mutex<BTreeMap<usize, Vec<Graph>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Vec<Graph>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// One representative of every isomorphism class of trees on `t` vertices,
/// sorted by canonical form. Built by attaching a leaf to every vertex of
/// every tree on `t − 1` vertices and deduplicating canonically.
pub fn all_trees(t: usize) -> Result<Vec<Graph>> {
    if t > MAX_TREE_ORDER {
        return Err(Error::cap("tree order", MAX_TREE_ORDER, t));
    }
    if let Some(v) = cache().lock().unwrap().get(&t) {
        return Ok(v.clone());
    }
    let out = match t {
        0 => vec![Graph::empty(0)],
        1 => vec![Graph::empty(1)],
        _ => {
            let mut seen = BTreeMap::new();
            for parent in all_trees(t - 1)? {
                for v in 0..parent.order() {
                    let child = parent.with_vertex([v]);
                    seen.entry(canonical_form(&child)).or_insert(child);
                }
            }
            seen.into_values().collect()
        }
    };
    cache().lock().unwrap().insert(t, out.clone());
    Ok(out)
}

/// Decode a Prüfer sequence over `0..n` (length `n − 2`) into a labelled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return if seq.is_empty() {
            Ok(Graph::empty(n))
        } else {
            Err(Error::Invalid("Prüfer sequence too long".into()))
        };
    }
    if seq.len() != n - 2 {
        return Err(Error::Invalid(format!("Prüfer sequence for n = {n} needs length {}", n - 2)));
    }
    if let Some(&x) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::Invalid(format!("label {x} out of range for n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n);
    // linear-time decode: `ptr` scans for the smallest leaf
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        g.add_edge(leaf, x);
        degree[x] -= 1;
        if x < ptr && degree[x] == 1 {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    Ok(g)
}

/// Visit every labelled tree on `0..n` (`n^{n−2}` of them) in Prüfer order.
pub fn for_each_labelled_tree(n: usize, mut visit: impl FnMut(&Graph)) -> Result<()> {
    if n < 2 {
        visit(&Graph::empty(n));
        return Ok(());
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        visit(&prufer_decode(&seq, n)?);
        let mut i = 0;
        loop {
            if i == len {
                return Ok(());
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}
