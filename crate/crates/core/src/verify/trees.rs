//! The good-tree property of labelled trees, its frequency, and exact edge
//! counts over all labelled trees on `[n]`.

use crate::error::{Error, Result};
use crate::family::{for_each_labelled_tree, is_free, is_saturated, prufer_decode, FamilySpec, Member};
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Exhaustive statistics are used when `m^{m−2}` is at most this.
pub const MAX_EXHAUSTIVE_TREES: u64 = 1_000_000;

fn has_good_vertex(t: &Graph, side: &[bool], b: bool) -> bool {
    (0..t.order()).any(|v| {
        side[v] == b && t.degree(v) >= 3 && t.neighbors(v).filter(|&u| t.degree(u) > 1).count() == 1
    })
}

/// Sides of the bipartition as `(A, B)` with `|A| ≤ |B|`; `None` for the
/// colour of `B` means both choices are valid.
fn sides(t: &Graph) -> (Vec<bool>, Option<bool>) {
    let side = t.bipartition().expect("trees are bipartite");
    let trues = side.iter().filter(|&&s| s).count();
    let falses = side.len() - trues;
    let b = match trues.cmp(&falses) {
        std::cmp::Ordering::Greater => Some(true),
        std::cmp::Ordering::Less => Some(false),
        std::cmp::Ordering::Equal => None,
    };
    (side, b)
}

/// True when the larger side `B` of the bipartition has a vertex of degree
/// at least 3 with exactly one non-leaf neighbour. Leaves are vertices of
/// degree 1 in `t`. When the sides are equal both orientations are tried.
pub fn good_tree(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::Invalid("good_tree needs a tree".into()));
    }
    let (side, b) = sides(t);
    Ok(match b {
        Some(b) => has_good_vertex(t, &side, b),
        None => has_good_vertex(t, &side, true) || has_good_vertex(t, &side, false),
    })
}

/// Size of the smaller side of the bipartition of a tree.
pub fn smaller_side(t: &Graph) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::Invalid("smaller_side needs a tree".into()));
    }
    let side = t.bipartition().expect("trees are bipartite");
    let trues = side.iter().filter(|&&s| s).count();
    Ok(trues.min(side.len() - trues))
}

/// For a tree with smaller side `k+1`: `K_{k,m'}` is `t`-free and
/// `t`-saturated for every `m'` from `|t| − k` (the first order that can
/// host `t`) up to `m_max`.
pub fn good_tree_consistent(t: &Graph, m_max: usize) -> Result<bool> {
    let k = smaller_side(t)? - 1;
    let spec = FamilySpec::FiniteList(vec![Member::new("T", t.clone())]);
    for m in t.order() - k..=m_max {
        let g = Graph::complete_bipartite(k, m);
        if !is_free(&g, &spec)? || !is_saturated(&g, &spec)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TreeMode {
    /// Exhaustive when `m^{m−2} ≤ 10⁶`, sampled otherwise.
    #[default]
    Auto,
    Sample,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TreeStats {
    pub m: usize,
    /// Trees examined (all `m^{m−2}` when exhaustive).
    pub samples: u64,
    pub good_count: u64,
    pub fraction: f64,
    /// 95% normal-approximation half-width; 0 when exhaustive.
    pub half_width: f64,
    pub seed: u64,
    pub exhaustive: bool,
}

fn labelled_tree_count(m: usize) -> Option<u64> {
    if m < 2 {
        return Some(1);
    }
    (m as u64).checked_pow(m as u32 - 2)
}

/// Fraction of good trees among labelled trees on `m` vertices.
pub fn tree_stats(m: usize, samples: u64, seed: u64, mode: TreeMode) -> Result<TreeStats> {
    if m < 3 {
        return Err(Error::ParamRange(format!("tree order must be at least 3, got {m}")));
    }
    let total = labelled_tree_count(m);
    let small = total.is_some_and(|t| t <= MAX_EXHAUSTIVE_TREES);
    let exhaustive = match mode {
        TreeMode::Auto => small,
        TreeMode::Sample => false,
        TreeMode::Exhaustive if small => true,
        TreeMode::Exhaustive => {
            return Err(Error::cap("labelled trees", MAX_EXHAUSTIVE_TREES as usize, total.unwrap_or(u64::MAX) as usize))
        }
    };
    let (count, good) = if exhaustive {
        let mut good = 0u64;
        let mut err = None;
        for_each_labelled_tree(m, |t| match good_tree(t) {
            Ok(true) => good += 1,
            Ok(false) => {}
            Err(e) => err = Some(e),
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        (total.expect("small counts fit"), good)
    } else {
        if samples == 0 {
            return Err(Error::ParamRange("sample count must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seq = vec![0usize; m - 2];
        let mut good = 0u64;
        for _ in 0..samples {
            seq.iter_mut().for_each(|x| *x = rng.gen_range(0..m));
            if good_tree(&prufer_decode(&seq, m)?)? {
                good += 1;
            }
        }
        (samples, good)
    };
    let fraction = good as f64 / count as f64;
    let half_width = if exhaustive { 0.0 } else { 1.96 * (fraction * (1.0 - fraction) / count as f64).sqrt() };
    Ok(TreeStats { m, samples: count, good_count: good, fraction, half_width, seed, exhaustive })
}

/// Each fraction is at least the previous one minus twice the larger of the
/// two half-widths.
pub fn trend_nondecreasing(stats: &[TreeStats]) -> bool {
    stats.windows(2).all(|w| w[1].fraction >= w[0].fraction - 2.0 * w[0].half_width.max(w[1].half_width))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEdgeCounts {
    pub n: usize,
    /// Trees containing the edge `01`.
    pub n_ij: u64,
    /// Trees containing `01` and `02`.
    pub n_ij_ik: u64,
    /// Trees containing `01` and `23`.
    pub n_ij_kl: u64,
    pub expected_ij: u64,
    pub expected_ij_ik: u64,
    pub expected_ij_kl: u64,
}

impl TreeEdgeCounts {
    pub fn holds(&self) -> bool {
        self.n_ij == self.expected_ij && self.n_ij_ik == self.expected_ij_ik && self.n_ij_kl == self.expected_ij_kl
    }
}

pub const MAX_EDGE_COUNT_ORDER: usize = 8;

/// Exact counts over all `n^{n−2}` labelled trees, with the closed forms
/// `2n^{n−3}`, `3n^{n−4}` and `4n^{n−4}`.
pub fn tree_edge_counts(n: usize) -> Result<TreeEdgeCounts> {
    if n < 4 {
        return Err(Error::ParamRange(format!("edge counts need n >= 4, got {n}")));
    }
    if n > MAX_EDGE_COUNT_ORDER {
        return Err(Error::cap("tree edge count order", MAX_EDGE_COUNT_ORDER, n));
    }
    let (mut a, mut b, mut c) = (0u64, 0u64, 0u64);
    for_each_labelled_tree(n, |t| {
        if t.has_edge(0, 1) {
            a += 1;
            b += t.has_edge(0, 2) as u64;
            c += t.has_edge(2, 3) as u64;
        }
    })?;
    let p = |e: u32| (n as u64).pow(e);
    Ok(TreeEdgeCounts {
        n,
        n_ij: a,
        n_ij_ik: b,
        n_ij_kl: c,
        expected_ij: 2 * p(n as u32 - 3),
        expected_ij_ik: 3 * p(n as u32 - 4),
        expected_ij_kl: 4 * p(n as u32 - 4),
    })
}
