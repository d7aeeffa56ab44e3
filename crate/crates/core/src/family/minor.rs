//! Minor and topological-minor containment by exhaustive search.

use super::subgraph::{contains_subgraph, masks_of};
use super::Caps;
use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use std::collections::HashSet;

fn check_caps(g: &Graph, f: &Graph, caps: &Caps) -> Result<()> {
    if f.order() > caps.minor_pattern {
        return Err(Error::cap("minor pattern order", caps.minor_pattern, f.order()));
    }
    if g.order() > caps.minor_host {
        return Err(Error::cap("minor host order", caps.minor_host, g.order()));
    }
    Ok(())
}

/// Merge `v` into `u` (which must be adjacent); vertices above `v` shift down.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let n = g.order();
    let idx = |w: usize| if w > v { w - 1 } else { w };
    let mut h = Graph::empty(n - 1);
    for (a, b) in g.edges() {
        let a = if a == v { u } else { a };
        let b = if b == v { u } else { b };
        if a != b {
            h.add_edge(idx(a), idx(b));
        }
    }
    h
}

/// Remove vertices that can never help host a minor of a pattern with
/// minimum degree `delta`, and suppress degree-2 vertices when `delta ≥ 3`.
fn reduce(mut g: Graph, delta: usize) -> Graph {
    loop {
        let victim = (0..g.order()).find(|&v| g.degree(v) < delta.min(2));
        if let Some(v) = victim {
            g = g.remove_vertex(v);
            continue;
        }
        if delta >= 3 {
            if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 2) {
                let u = g.neighbors(v).next().unwrap();
                g = contract_edge(&g, u, v);
                continue;
            }
        }
        return g;
    }
}

struct MinorSearch<'a> {
    f: &'a Graph,
    delta: usize,
    seen: HashSet<CanonicalForm>,
}

impl MinorSearch<'_> {
    fn go(&mut self, g: Graph) -> bool {
        let g = reduce(g, self.delta);
        if g.order() < self.f.order() || g.size() < self.f.size() {
            return false;
        }
        if contains_subgraph(&g, self.f).unwrap_or(false) {
            return true;
        }
        if g.order() == self.f.order() {
            return false;
        }
        if !self.seen.insert(canonical_form(&g)) {
            return false;
        }
        for (u, v) in g.edges() {
            if self.go(contract_edge(&g, u, v)) {
                return true;
            }
        }
        false
    }
}

/// Is `f` a minor of `g`? Every minor is a subgraph of a contraction, so the
/// search walks contractions (deduplicated up to isomorphism) and tests
/// subgraph containment at each node.
pub fn has_minor_capped(g: &Graph, f: &Graph, caps: &Caps) -> Result<bool> {
    check_caps(g, f, caps)?;
    if f.order() > g.order() || f.size() > g.size() {
        return Ok(false);
    }
    let delta = if f.order() == 0 { 0 } else { f.min_degree() };
    let mut s = MinorSearch { f, delta, seen: HashSet::new() };
    Ok(s.go(g.clone()))
}

/// Is `f` a minor of `g`? Caps: `|V(f)| ≤ 8`, `|V(g)| ≤ 14`.
pub fn has_minor(g: &Graph, f: &Graph) -> Result<bool> {
    has_minor_capped(g, f, &Caps::default())
}

struct SubdivSearch<'a> {
    g: &'a [u64],
    /// pattern vertices (non-isolated) in mapping order
    order: Vec<usize>,
    /// for each position, earlier positions it must be joined to
    back: Vec<Vec<usize>>,
    /// pattern degree per position
    fdeg: Vec<usize>,
    isolated: usize,
    img: Vec<usize>,
    /// number of routed edges per position
    routed: Vec<usize>,
}

impl SubdivSearch<'_> {
    /// Every branch vertex among the first `check` positions still has room
    /// for its unrouted edges. Paths start at a free vertex or run directly to
    /// another branch vertex, so images up to position `last` count as room.
    fn slack_ok(&self, check: usize, last: usize, free: u64) -> bool {
        let room = self.img[..=last].iter().fold(free, |acc, &x| acc | 1 << x);
        (0..check).all(|i| {
            let pending = self.fdeg[i] - self.routed[i];
            pending == 0 || (self.g[self.img[i]] & room).count_ones() as usize >= pending
        })
    }

    fn map(&mut self, i: usize, free: u64) -> bool {
        if i == self.order.len() {
            return free.count_ones() as usize >= self.isolated;
        }
        for x in bits(free) {
            if (self.g[x].count_ones() as usize) < self.fdeg[i] {
                continue;
            }
            self.img[i] = x;
            let free = free & !(1 << x);
            if !self.slack_ok(i, i, free) {
                continue;
            }
            let back = self.back[i].clone();
            if self.route(i, &back, 0, free) {
                return true;
            }
        }
        false
    }

    fn route(&mut self, i: usize, back: &[usize], k: usize, free: u64) -> bool {
        if k == back.len() {
            return self.slack_ok(i + 1, i, free) && self.map(i + 1, free);
        }
        let (a, b) = (self.img[i], self.img[back[k]]);
        self.routed[i] += 1;
        self.routed[back[k]] += 1;
        let found = self.paths(a, b, free, &mut |s, rest| s.route(i, back, k + 1, rest));
        self.routed[i] -= 1;
        self.routed[back[k]] -= 1;
        found
    }

    /// Calls `then` for every `a`–`b` path whose internal vertices lie in
    /// `free`, passing the remaining free set; stops at the first success.
    fn paths(&mut self, a: usize, b: usize, free: u64, then: &mut dyn FnMut(&mut Self, u64) -> bool) -> bool {
        if self.g[a] >> b & 1 == 1 && then(self, free) {
            return true;
        }
        for w in bits(self.g[a] & free) {
            if self.paths(w, b, free & !(1 << w), then) {
                return true;
            }
        }
        false
    }
}

/// Does some subdivision of `f` occur as a subgraph of `g`?
pub fn has_subdivision_capped(g: &Graph, f: &Graph, caps: &Caps) -> Result<bool> {
    check_caps(g, f, caps)?;
    if f.order() > g.order() || f.size() > g.size() || f.max_degree() > g.max_degree() {
        return Ok(false);
    }
    if contains_subgraph(g, f)? {
        return Ok(true);
    }
    let masks = masks_of(g)?;
    // mapping order: connectivity-first, high degree first
    let nonisolated: Vec<usize> = (0..f.order()).filter(|&v| f.degree(v) > 0).collect();
    let mut order: Vec<usize> = Vec::new();
    let mut placed = vec![false; f.order()];
    while order.len() < nonisolated.len() {
        let v = *nonisolated
            .iter()
            .filter(|&&v| !placed[v])
            .max_by_key(|&&v| (f.neighbors(v).filter(|&u| placed[u]).count(), f.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
    }
    let pos = |v: usize| order.iter().position(|&w| w == v).unwrap();
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| f.neighbors(v).map(pos).filter(|&j| j < i).collect())
        .collect();
    let fdeg = order.iter().map(|&v| f.degree(v)).collect();
    let k = order.len();
    let mut s = SubdivSearch {
        g: &masks,
        order,
        back,
        fdeg,
        isolated: f.order() - k,
        img: vec![0; k],
        routed: vec![0; k],
    };
    Ok(s.map(0, super::subgraph::full_mask(g.order())))
}

/// Does some subdivision of `f` occur in `g`? Same caps as [`has_minor`].
pub fn has_subdivision(g: &Graph, f: &Graph) -> Result<bool> {
    has_subdivision_capped(g, f, &Caps::default())
}
