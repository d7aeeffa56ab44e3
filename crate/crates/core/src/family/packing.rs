//! Vertex-disjoint packing of pieces.
//!
//! Each piece is turned into the list of vertex sets that can carry it, then
//! a backtracking search looks for pairwise-disjoint choices. Copies of the
//! same piece are forced to use increasing candidate indices, and failed
//! `(slot, used, start)` states are memoised.

use super::cycles::hamiltonian_sets;
use super::subgraph::{connected_sets, full_mask, Pattern};
use crate::bitset::bits;
use crate::graph::{is_isomorphic, Graph};
use std::collections::HashSet;

/// Largest host order handled by the packing engine.
pub(crate) const PACKING_MAX_ORDER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Piece {
    /// A fixed connected graph (as a non-induced subgraph).
    Fixed(Graph),
    /// Any connected graph on `size` vertices, optionally excluding one
    /// isomorphism type.
    Connected { size: usize, except: Option<Graph> },
    /// A cycle of length in `min..=max`, with a chord if `chorded`.
    Cycle { min: usize, max: usize, chorded: bool },
}

impl Piece {
    fn min_order(&self) -> usize {
        match self {
            Piece::Fixed(f) => f.order(),
            Piece::Connected { size, .. } => *size,
            Piece::Cycle { min, chorded, .. } => (*min).max(if *chorded { 4 } else { 3 }),
        }
    }
}

pub(crate) fn induced_from_mask(g: &[u64], set: u64) -> Graph {
    let verts: Vec<usize> = bits(set).collect();
    let mut h = Graph::empty(verts.len());
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if g[u] >> v & 1 == 1 {
                h.add_edge(i, j);
            }
        }
    }
    h
}

pub(crate) fn edges_in(g: &[u64], set: u64) -> usize {
    bits(set).map(|v| (g[v] & set).count_ones() as usize).sum::<usize>() / 2
}

struct Ctx<'a> {
    g: &'a [u64],
    ham: Option<Vec<u64>>,
}

impl Ctx<'_> {
    fn candidates(&mut self, piece: &Piece) -> Vec<u64> {
        let g = self.g;
        let full = full_mask(g.len());
        let mut out: Vec<u64> = match piece {
            Piece::Fixed(f) => {
                let pat = Pattern::new(f);
                connected_sets(g, pat.order(), full)
                    .into_iter()
                    .filter(|&s| pat.embeds(g, s))
                    .collect()
            }
            Piece::Connected { size, except } => connected_sets(g, *size, full)
                .into_iter()
                .filter(|&s| match except {
                    None => true,
                    Some(x) => {
                        edges_in(g, s) != x.size() || !is_isomorphic(&induced_from_mask(g, s), x)
                    }
                })
                .collect(),
            Piece::Cycle { min, max, chorded } => {
                let ham = self.ham.get_or_insert_with(|| hamiltonian_sets(g));
                ham.iter()
                    .copied()
                    .filter(|&s| {
                        let len = s.count_ones() as usize;
                        len >= *min && len <= *max && (!chorded || edges_in(g, s) > len)
                    })
                    .collect()
            }
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Can all `pieces` be placed on pairwise vertex-disjoint sets of `g`?
/// Requires `g.len() <= PACKING_MAX_ORDER`.
pub(crate) fn pack(g: &[u64], pieces: &[Piece]) -> bool {
    assert!(g.len() <= PACKING_MAX_ORDER);
    if pieces.iter().map(Piece::min_order).sum::<usize>() > g.len() {
        return false;
    }
    let mut groups: Vec<(Piece, usize)> = Vec::new();
    for p in pieces {
        match groups.iter_mut().find(|(q, _)| q == p) {
            Some((_, c)) => *c += 1,
            None => groups.push((p.clone(), 1)),
        }
    }
    let mut ctx = Ctx { g, ham: None };
    let mut lists: Vec<(Vec<u64>, usize, usize)> = Vec::with_capacity(groups.len());
    for (piece, count) in &groups {
        let cands = ctx.candidates(piece);
        if cands.len() < *count {
            return false;
        }
        lists.push((cands, *count, piece.min_order()));
    }
    lists.sort_by_key(|(c, count, _)| (c.len(), *count));
    // slots: (list index, continues the previous slot's group)
    let mut slots = Vec::new();
    for (i, (_, count, _)) in lists.iter().enumerate() {
        for c in 0..*count {
            slots.push((i, c > 0));
        }
    }
    let mut need_after = vec![0usize; slots.len() + 1];
    for s in (0..slots.len()).rev() {
        need_after[s] = need_after[s + 1] + lists[slots[s].0].2;
    }
    let mut search = PackSearch { lists: &lists, slots: &slots, need_after: &need_after, n: g.len(), failed: HashSet::new() };
    search.go(0, 0, 0)
}

struct PackSearch<'a> {
    lists: &'a [(Vec<u64>, usize, usize)],
    slots: &'a [(usize, bool)],
    need_after: &'a [usize],
    n: usize,
    failed: HashSet<(usize, u64, usize)>,
}

impl PackSearch<'_> {
    fn go(&mut self, slot: usize, used: u64, start: usize) -> bool {
        if slot == self.slots.len() {
            return true;
        }
        if self.need_after[slot] > self.n - used.count_ones() as usize {
            return false;
        }
        let key = (slot, used, start);
        if self.failed.contains(&key) {
            return false;
        }
        let list = &self.lists[self.slots[slot].0].0;
        for (i, &set) in list.iter().enumerate().skip(start) {
            if set & used != 0 {
                continue;
            }
            let next_start = match self.slots.get(slot + 1) {
                Some(&(_, true)) => i + 1,
                _ => 0,
            };
            if self.go(slot + 1, used | set, next_start) {
                return true;
            }
        }
        self.failed.insert(key);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: try every assignment of pieces to disjoint subsets.
    fn brute(g: &Graph, pieces: &[Piece]) -> bool {
        let m = g.masks().unwrap();
        let n = g.order();
        fn fits(m: &[u64], set: u64, p: &Piece) -> bool {
            let h = induced_from_mask(m, set);
            match p {
                Piece::Fixed(f) => h.order() == f.order() && super::super::subgraph::contains_subgraph(&h, f).unwrap(),
                Piece::Connected { size, except } => {
                    h.order() == *size && h.is_connected() && except.as_ref().is_none_or(|x| !is_isomorphic(&h, x))
                }
                Piece::Cycle { min, max, chorded } => {
                    let len = h.order();
                    len >= *min
                        && len <= *max
                        && (!chorded || h.size() > len)
                        && super::super::cycles::cycle_spectrum(&h).unwrap().contains(len)
                }
            }
        }
        fn go(m: &[u64], n: usize, pieces: &[Piece], used: u64) -> bool {
            let Some((p, rest)) = pieces.split_first() else { return true };
            (0u64..1 << n).any(|s| s & used == 0 && fits(m, s, p) && go(m, n, rest, used | s))
        }
        go(&m, n, pieces, 0)
    }

    #[test]
    fn two_triangles() {
        let tri = Piece::Cycle { min: 3, max: 3, chorded: false };
        let g = Graph::complete(3).repeat(2);
        assert!(pack(&g.masks().unwrap(), &[tri.clone(), tri.clone()]));
        let k5 = Graph::complete(5);
        assert!(!pack(&k5.masks().unwrap(), &[tri.clone(), tri]));
    }

    #[test]
    fn connected_except_path() {
        let p8 = Graph::path(8);
        let piece = Piece::Connected { size: 8, except: Some(p8.clone()) };
        assert!(!pack(&p8.masks().unwrap(), std::slice::from_ref(&piece)));
        assert!(pack(&Graph::cycle(8).masks().unwrap(), &[piece]));
    }

    #[test]
    fn random_agreement() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let menu = [
            vec![Piece::Fixed(Graph::path(3)), Piece::Fixed(Graph::path(3))],
            vec![Piece::Cycle { min: 3, max: 4, chorded: false }, Piece::Fixed(Graph::complete(2))],
            vec![Piece::Cycle { min: 4, max: 7, chorded: true }],
            vec![Piece::Connected { size: 3, except: Some(Graph::path(3)) }, Piece::Fixed(Graph::star(2))],
            vec![Piece::Fixed(Graph::star(3)), Piece::Connected { size: 2, except: None }],
        ];
        for _ in 0..150 {
            let n = rng.gen_range(4..=8);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            let pieces = &menu[rng.gen_range(0..menu.len())];
            assert_eq!(pack(&g.masks().unwrap(), pieces), brute(&g, pieces), "{g:?} {pieces:?}");
        }
    }
}
