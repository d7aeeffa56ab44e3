#![allow(dead_code)]

use proptest::prelude::*;
use spexlab::Graph;

/// Graph on `lo..=hi` vertices, each pair an edge with the drawn density.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| from_bits(n, &bits))
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graph(lo, hi).prop_filter("connected", |g| g.is_connected())
}

/// A permutation of `0..n` from a shuffle seed.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Every injective map of `f` into `g` as a brute-force subgraph test.
pub fn brute_contains(g: &Graph, f: &Graph) -> bool {
    fn go(g: &Graph, f: &Graph, img: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = img.len();
        if i == f.order() {
            return true;
        }
        for x in 0..g.order() {
            if used[x] || !(0..i).all(|j| !f.has_edge(i, j) || g.has_edge(x, img[j])) {
                continue;
            }
            used[x] = true;
            img.push(x);
            if go(g, f, img, used) {
                return true;
            }
            img.pop();
            used[x] = false;
        }
        false
    }
    f.order() <= g.order() && go(g, f, &mut Vec::new(), &mut vec![false; g.order()])
}
