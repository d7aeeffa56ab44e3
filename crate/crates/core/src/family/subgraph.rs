//! Non-induced subgraph containment on `u64` adjacency masks.

use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const MAX_MASK_ORDER: usize = 64;

pub(crate) fn masks_of(g: &Graph) -> Result<Vec<u64>> {
    g.masks()
        .ok_or_else(|| Error::cap("host graph order", MAX_MASK_ORDER, g.order()))
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Pattern prepared for repeated embedding: vertices in a connectivity-first
/// order, each with the mask of earlier pattern neighbours.
pub(crate) struct Pattern {
    #[cfg_attr(not(test), allow(dead_code))]
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    degree: Vec<u32>,
    n: usize,
    m: usize,
}

impl Pattern {
    pub(crate) fn new(f: &Graph) -> Pattern {
        let n = f.order();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            // next vertex: most neighbours already placed, then highest degree
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = f.neighbors(v).filter(|&u| placed[u]).count();
                    (back, f.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[v] = true;
            order.push(v);
        }
        let pos: Vec<usize> = {
            let mut p = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                p[v] = i;
            }
            p
        };
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| f.neighbors(v).map(|u| pos[u]).filter(|&j| j < i).collect())
            .collect();
        let degree = order.iter().map(|&v| f.degree(v) as u32).collect();
        Pattern { order, back, degree, n, m: f.size() }
    }

    pub(crate) fn order(&self) -> usize {
        self.n
    }

    /// Is there an embedding of the pattern using only vertices in `avail`?
    pub(crate) fn embeds(&self, g: &[u64], avail: u64) -> bool {
        if self.n == 0 {
            return true;
        }
        if self.n > avail.count_ones() as usize {
            return false;
        }
        let host_edges: usize = bits(avail).map(|v| (g[v] & avail).count_ones() as usize).sum::<usize>() / 2;
        if host_edges < self.m {
            return false;
        }
        let mut img = vec![0usize; self.n];
        self.extend(g, avail, 0, &mut img)
    }

    fn extend(&self, g: &[u64], free: u64, i: usize, img: &mut [usize]) -> bool {
        if i == self.n {
            return true;
        }
        let mut cand = free;
        for &j in &self.back[i] {
            cand &= g[img[j]];
        }
        let need = self.degree[i];
        for x in bits(cand) {
            if g[x].count_ones() < need {
                continue;
            }
            img[i] = x;
            if self.extend(g, free & !(1 << x), i + 1, img) {
                return true;
            }
        }
        false
    }

    /// Images of an embedding indexed by pattern vertex, if one exists.
    #[cfg(test)]
    pub(crate) fn find(&self, g: &[u64], avail: u64) -> Option<Vec<usize>> {
        let mut img = vec![0usize; self.n];
        if self.n == 0 || self.extend(g, avail, 0, &mut img) {
            let mut out = vec![0; self.n];
            for (i, &v) in self.order.iter().enumerate() {
                out[v] = img[i];
            }
            Some(out)
        } else {
            None
        }
    }
}

/// All connected vertex sets of exactly `k` vertices inside `avail`
/// (ESU enumeration; each set reported once).
pub(crate) fn connected_sets(g: &[u64], k: usize, avail: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    for v in bits(avail) {
        let higher = avail & !((1u64 << v) | ((1u64 << v) - 1));
        let sub = 1u64 << v;
        let ext = g[v] & higher;
        esu(g, k, higher, sub, ext, sub | g[v], &mut out);
    }
    out
}

fn esu(g: &[u64], k: usize, higher: u64, sub: u64, mut ext: u64, closed: u64, out: &mut Vec<u64>) {
    if sub.count_ones() as usize == k {
        out.push(sub);
        return;
    }
    while ext != 0 {
        let w = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        let excl = g[w] & higher & !closed;
        esu(g, k, higher, sub | (1 << w), ext | excl, closed | g[w], out);
    }
}

#[cfg(test)]
pub(crate) fn is_connected_set(g: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut next = seen;
        for v in bits(seen) {
            next |= g[v] & set;
        }
        if next == seen {
            return seen == set;
        }
        seen = next;
    }
}

/// Non-induced subgraph containment: an injective, adjacency-preserving map
/// `V(f) → V(g)` exists.
pub fn contains_subgraph(g: &Graph, f: &Graph) -> Result<bool> {
    if f.order() == 0 {
        return Ok(true);
    }
    if f.order() > g.order() || f.size() > g.size() || f.max_degree() > g.max_degree() {
        return Ok(false);
    }
    let masks = masks_of(g)?;
    Ok(subgraph_in_masks(&masks, f))
}

pub(crate) fn subgraph_in_masks(masks: &[u64], f: &Graph) -> bool {
    let comps = f.components();
    if comps.len() > 1 && masks.len() <= super::packing::PACKING_MAX_ORDER {
        let pieces: Vec<super::packing::Piece> = comps
            .iter()
            .map(|c| super::packing::Piece::Fixed(f.induced(c)))
            .collect();
        return super::packing::pack(masks, &pieces);
    }
    Pattern::new(f).embeds(masks, full_mask(masks.len()))
}
