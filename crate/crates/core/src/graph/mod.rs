//! Finite simple undirected graphs and the construction algebra used to
//! describe extremal candidates (join, disjoint union, repetition, complement,
//! maximal unions) together with the named families that appear in the
//! application catalog.

mod canon;
mod expr;
mod graph6;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, refine_partition, CanonicalForm};
pub use expr::{parse_expr, GraphExpr};
pub use graph6::{graph6_decode, graph6_encode};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// A simple graph on vertices `0..n`, stored as adjacency-row bitsets.
///
/// Rows are kept symmetric and irreflexive by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::with_capacity(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!("edge ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Adds `uv`. Panics on a self-loop or an out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighborhood(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adjacency rows as `u64` masks; `None` when `n > 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.adj.iter().map(VertexSet::low_word).collect())
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &[usize]) -> usize {
        let mut count = 0;
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `e(U, W)` counted as ordered pairs `(u, w)` with `u ∈ U`, `w ∈ W`, `u ~ w`.
    pub fn edges_between(&self, left: &[usize], right: &[usize]) -> usize {
        left.iter()
            .map(|&u| right.iter().filter(|&&w| self.has_edge(u, w)).count())
            .sum()
    }

    /// Vertices at distance exactly `dist` from `v`.
    pub fn sphere(&self, v: usize, dist: usize) -> Vec<usize> {
        let d = self.distances_from(v);
        (0..self.n).filter(|&u| d[u] == Some(dist)).collect()
    }

    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut d = vec![None; self.n];
        let mut queue = VecDeque::new();
        d[v] = Some(0);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let du = d[u].unwrap();
            for w in self.neighbors(u) {
                if d[w].is_none() {
                    d[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        d
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.n
    }

    /// Proper 2-colouring if the graph is bipartite (colour of each vertex).
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in self.neighbors(u) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Subgraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if self.has_edge(verts[i], verts[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Adds a new vertex adjacent to `nbrs`; returns the enlarged graph.
    pub fn with_vertex(&self, nbrs: impl IntoIterator<Item = usize>) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for u in nbrs {
            g.add_edge(u, self.n);
        }
        g
    }

    // ---- construction algebra ----

    /// Join `G + H`: vertices of `self` first, every cross pair adjacent.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Disjoint union `G ∪ H`, vertices of `self` first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// `a · G`, `a` disjoint copies.
    pub fn repeat(&self, a: usize) -> Graph {
        (0..a).fold(Graph::empty(0), |acc, _| acc.disjoint_union(self))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// As many disjoint copies of `self` as fit in `n` vertices, padded with
    /// isolated vertices.
    pub fn maximal_union(&self, n: usize) -> Result<Graph> {
        if self.n == 0 {
            return if n == 0 {
                Ok(Graph::empty(0))
            } else {
                Err(Error::Invalid("maximal union of the null graph".into()))
            };
        }
        Ok(self.repeat(n / self.n).disjoint_union(&Graph::empty(n % self.n)))
    }

    // ---- named graphs ----

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::empty(a).join(&Graph::empty(b))
    }

    /// Path of order `n`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(0, n - 1);
        g
    }

    /// Maximum matching on `n` vertices (`⌊n/2⌋` edges, one isolated vertex if `n` is odd).
    pub fn matching(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n / 2 {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    /// Spider: paths of orders `legs[i] + 1` sharing the endpoint `0`.
    pub fn spider(legs: &[usize]) -> Graph {
        let n = 1 + legs.iter().sum::<usize>();
        let mut g = Graph::empty(n);
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        g
    }

    /// Double star `D_{a,b}`: adjacent centres `0` and `1` with `a` and `b` pendant leaves.
    pub fn double_star(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b + 2);
        g.add_edge(0, 1);
        for i in 0..a {
            g.add_edge(0, 2 + i);
        }
        for i in 0..b {
            g.add_edge(1, 2 + a + i);
        }
        g
    }

    /// `D*_{2,2}`: a leaf hung from one leaf of `D_{2,2}`.
    pub fn double_star_extended() -> Graph {
        Graph::double_star(2, 2).with_vertex([2])
    }

    /// Friendship graph: `k` triangles sharing vertex `0`.
    pub fn friendship(k: usize) -> Graph {
        let mut g = Graph::empty(2 * k + 1);
        for i in 0..k {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            g.add_edge(0, a);
            g.add_edge(0, b);
            g.add_edge(a, b);
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn graph6(&self) -> String {
        graph6_encode(self)
    }

    /// Debug invariant check: symmetric, irreflexive, bits in range.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u].iter().all(|v| v < self.n && self.adj[v].contains(u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {})", self.n, self.size(), graph6_encode(self))
    }
}
