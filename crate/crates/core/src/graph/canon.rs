//! Canonical labelling by individualisation-refinement.
//!
//! The search tree is the usual one: refine the current ordered partition to
//! the coarsest equitable refinement, individualise each vertex of the first
//! non-singleton cell, recurse. The canonical leaf is the one whose permuted
//! adjacency code is lexicographically largest. Automorphisms are collected
//! whenever two leaves produce the same code and are used for orbit pruning
//! and for jumping back to the divergence point with the first/best path.

use super::{graph6_encode, Graph};
use serde::{Deserialize, Serialize};

/// Isomorphism-invariant byte string: graph6 of the canonically relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Coarsest equitable refinement of the ordered partition `cells`.
///
/// Cells are split in place; fragments are ordered by their neighbour-count
/// signature, so the resulting order depends only on the isomorphism type of
/// `(g, cells)`.
pub fn refine_partition(g: &Graph, cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut cells = cells;
    let mut cell_of = vec![0usize; n];
    let mut counts: Vec<u32> = Vec::new();
    loop {
        let k = cells.len();
        if k == n {
            return cells;
        }
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        counts.clear();
        counts.resize(n * k, 0);
        for v in 0..n {
            for u in g.neighbors(v) {
                counts[v * k + cell_of[u]] += 1;
            }
        }
        let row = |v: usize| &counts[v * k..(v + 1) * k];
        let mut next = Vec::with_capacity(k + 4);
        for mut cell in cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            cell.sort_by(|&a, &b| row(a).cmp(row(b)).then(a.cmp(&b)));
            let mut start = 0;
            for i in 1..=cell.len() {
                if i == cell.len() || row(cell[i]) != row(cell[start]) {
                    next.push(cell[start..i].to_vec());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

struct Leaf {
    lab: Vec<usize>,
    code: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl<'a> Search<'a> {
    fn code(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let bits = n * n.saturating_sub(1) / 2;
        let mut code = vec![0u64; bits.div_ceil(64).max(1)];
        let mut k = 0;
        for i in 0..n {
            let row = self.g.neighborhood(lab[i]);
            for &w in &lab[i + 1..] {
                if row.contains(w) {
                    code[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        code
    }

    fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        gamma
    }

    fn record(&mut self, gamma: Vec<usize>) {
        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
            self.autos.push(gamma);
        }
    }

    /// Returns `Some(d)` to unwind the recursion to the node at depth `d`.
    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = self.code(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf { lab, code, path: path.to_vec() };
            self.best = Some(Leaf { lab: leaf.lab.clone(), code: leaf.code.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if code == first.code {
            let gamma = Self::automorphism(&first.lab, &lab);
            let d = common_prefix(path, &first.path);
            self.record(gamma);
            return Some(d);
        }
        let best = self.best.as_ref().unwrap();
        match code.cmp(&best.code) {
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf { lab, code, path: path.to_vec() });
                None
            }
            std::cmp::Ordering::Equal => {
                let gamma = Self::automorphism(&best.lab, &lab);
                let d = common_prefix(path, &best.path);
                self.record(gamma);
                Some(d)
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn in_explored_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn search(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine_partition(self.g, cells);
        if cells.len() == self.g.order() {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let t = cells.iter().position(|c| c.len() > 1).unwrap();
        let target = cells[t].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..t].iter().cloned());
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&u| u != v).collect());
            child.extend(cells[t + 1..].iter().cloned());
            path.push(v);
            let jump = self.search(child, path);
            path.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Canonical order of the vertices: `lab[i]` is the vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut s = Search { g, first: None, best: None, autos: Vec::new() };
    s.search(vec![(0..n).collect()], &mut Vec::new());
    s.best.unwrap().lab
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    CanonicalForm(graph6_encode(&g.permuted(&perm)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && {
            let (mut dg, mut dh) = (g.degrees(), h.degrees());
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph6_decode;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn paw_has_one_canonical_string() {
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let forms: std::collections::BTreeSet<_> =
            permutations(4).iter().map(|p| canonical_form(&paw.permuted(p))).collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn p4_c4_differ() {
        assert_ne!(canonical_form(&Graph::path(4)), canonical_form(&Graph::cycle(4)));
        assert!(is_isomorphic(&Graph::complete_bipartite(2, 2), &Graph::cycle(4)));
        assert!(!is_isomorphic(&Graph::complete(3), &Graph::path(3)));
    }

    #[test]
    fn canonical_form_is_a_valid_relabelling() {
        let g = Graph::petersen();
        let c = canonical_form(&g);
        let h = graph6_decode(c.as_str()).unwrap();
        assert_eq!(h.size(), 15);
        assert_eq!(canonical_form(&h), c);
    }

    #[test]
    fn refinement_of_star() {
        let cells = refine_partition(&Graph::star(3), vec![(0..4).collect()]);
        assert_eq!(cells, vec![vec![1, 2, 3], vec![0]]);
        let cells = refine_partition(&Graph::cycle(6), vec![(0..6).collect()]);
        assert_eq!(cells.len(), 1);
    }

    #[test]
    fn symmetric_graphs_are_fast_and_stable() {
        for g in [Graph::empty(12), Graph::complete(12), Graph::complete_bipartite(6, 6), Graph::cycle(12)] {
            let c = canonical_form(&g);
            let perm: Vec<usize> = (0..12).rev().collect();
            assert_eq!(canonical_form(&g.permuted(&perm)), c);
        }
    }
}
