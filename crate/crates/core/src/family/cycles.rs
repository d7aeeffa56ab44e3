//! Cycle structure via a Hamiltonian-path dynamic programme over vertex subsets.
//!
//! `ends[S]` is the set of vertices `v` such that some path starting at
//! `min(S)` visits exactly the vertices of `S` and stops at `v`. A subset `S`
//! with `|S| ≥ 3` spans a cycle iff some such end is adjacent to `min(S)`.
//! Time `O(2^n n^2)` in the worst case, memory `2^n` words.

use super::subgraph::masks_of;
use crate::bitset::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::collections::BTreeSet;

/// Set of cycle lengths present in a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CycleSpectrum(pub BTreeSet<usize>);

impl CycleSpectrum {
    pub fn contains(&self, len: usize) -> bool {
        self.0.contains(&len)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.iter().next_back().copied()
    }

    /// Is there `t` with `2t, 2t+2, …, 2t+2(k−1)` all present?
    pub fn has_consecutive_even(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        self.0
            .iter()
            .filter(|&&l| l % 2 == 0)
            .any(|&l| (0..k).all(|i| self.0.contains(&(l + 2 * i))))
    }
}

/// Every vertex subset that spans a cycle through all of its vertices.
pub(crate) fn hamiltonian_sets(g: &[u64]) -> Vec<u64> {
    let n = g.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let mut ends = vec![0u64; 1usize << n];
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    for set in 1usize..1 << n {
        let e = ends[set];
        if e == 0 {
            continue;
        }
        let s = set.trailing_zeros() as usize;
        let set64 = set as u64;
        if set64.count_ones() >= 3 && e & g[s] != 0 {
            out.push(set64);
        }
        let above = !((1u64 << (s + 1)) - 1);
        for v in bits(e) {
            for w in bits(g[v] & !set64 & above) {
                ends[set | 1 << w] |= 1 << w;
            }
        }
    }
    out
}

pub(crate) fn check_order(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::cap("cycle enumeration order", cap, g.order()));
    }
    Ok(())
}

pub fn cycle_spectrum_capped(g: &Graph, cap: usize) -> Result<CycleSpectrum> {
    check_order(g, cap)?;
    if g.size() < g.order() && g.is_forest() {
        return Ok(CycleSpectrum::default());
    }
    let m = masks_of(g)?;
    Ok(CycleSpectrum(
        hamiltonian_sets(&m).into_iter().map(|s| s.count_ones() as usize).collect(),
    ))
}

/// Exact set of cycle lengths, for graphs within the default enumeration cap (16).
pub fn cycle_spectrum(g: &Graph) -> Result<CycleSpectrum> {
    cycle_spectrum_capped(g, super::Caps::default().cycle_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations_hamiltonian(g: &Graph, set: &[usize]) -> bool {
        // fix set[0] as the start and try every order of the rest
        fn go(g: &Graph, start: usize, cur: usize, rest: &mut Vec<usize>) -> bool {
            if rest.is_empty() {
                return g.has_edge(cur, start);
            }
            for i in 0..rest.len() {
                let v = rest[i];
                if g.has_edge(cur, v) {
                    rest.swap_remove(i);
                    let ok = go(g, start, v, rest);
                    rest.push(v);
                    let last = rest.len() - 1;
                    rest.swap(i, last);
                    if ok {
                        return true;
                    }
                }
            }
            false
        }
        set.len() >= 3 && go(g, set[0], set[0], &mut set[1..].to_vec())
    }

    fn brute_spectrum(g: &Graph) -> BTreeSet<usize> {
        let n = g.order();
        let mut out = BTreeSet::new();
        for s in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            if permutations_hamiltonian(g, &set) {
                out.insert(set.len());
            }
        }
        out
    }

    #[test]
    fn named_spectra() {
        assert_eq!(cycle_spectrum(&Graph::cycle(6)).unwrap().0, BTreeSet::from([6]));
        assert_eq!(cycle_spectrum(&Graph::complete(4)).unwrap().0, BTreeSet::from([3, 4]));
        let pet = cycle_spectrum(&Graph::petersen()).unwrap();
        assert_eq!(pet.0, brute_spectrum(&Graph::petersen()));
        assert_eq!(pet.0, BTreeSet::from([5, 6, 8, 9]));
        assert!(cycle_spectrum(&Graph::path(7)).unwrap().is_empty());
        assert!(cycle_spectrum(&Graph::empty(17)).is_err());
    }

    #[test]
    fn circumference_of_join() {
        let g = Graph::complete(3).join(&Graph::empty(7));
        assert_eq!(cycle_spectrum(&g).unwrap().max(), Some(6));
    }

    #[test]
    fn consecutive_even() {
        let s = CycleSpectrum(BTreeSet::from([3, 4, 6, 7, 10]));
        assert!(s.has_consecutive_even(2));
        assert!(!s.has_consecutive_even(3));
        assert!(!CycleSpectrum(BTreeSet::from([3, 5])).has_consecutive_even(1));
    }

    #[test]
    fn random_agreement_with_subset_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..120 {
            let n = rng.gen_range(3..=9);
            let p = rng.gen_range(0.15..0.7);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(cycle_spectrum(&g).unwrap().0, brute_spectrum(&g), "{g:?}");
        }
    }
}
