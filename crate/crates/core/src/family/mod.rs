//! Forbidden families and containment predicates.
//!
//! Every family here is closed under taking supergraphs, so "free" is closed
//! under taking subgraphs: a subgraph of a free graph is free. Enumeration
//! relies on this to prune.
//!
//! - Finite lists and all cycle rules: a cycle or embedding in a subgraph is
//!   one in the whole graph.
//! - Minors and subdivisions: a minor (subdivision) of a subgraph is a minor
//!   (subdivision) of the whole graph.
//! - All trees on `t` vertices: containing every tree is inherited upwards.

mod cycles;
mod minor;
pub(crate) mod packing;
pub(crate) mod subgraph;
mod trees;

pub use cycles::{cycle_spectrum, cycle_spectrum_capped, CycleSpectrum};
pub use minor::{contract_edge, has_minor, has_minor_capped, has_subdivision, has_subdivision_capped};
pub use subgraph::contains_subgraph;
pub use trees::{all_trees, for_each_labelled_tree, prufer_decode, MAX_TREE_ORDER};

use crate::error::{Error, Result};
use crate::graph::{graph6_decode, parse_expr, Graph};
use packing::{pack, Piece, PACKING_MAX_ORDER};
use serde::Serialize;
use std::fmt;

/// Search caps for the structural predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Host order for cycle-spectrum based rules.
    pub cycle_order: usize,
    /// Host order for packings of two or more cycles.
    pub disjoint_cycle_order: usize,
    /// Pattern order for minor and subdivision tests.
    pub minor_pattern: usize,
    /// Host order for minor and subdivision tests.
    pub minor_host: usize,
    /// Host order for the seven-item counterexample family.
    pub counterexample_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { cycle_order: 16, disjoint_cycle_order: 14, minor_pattern: 8, minor_host: 14, counterexample_order: 16 }
    }
}

/// Upper limit for every cap: hosts are handled as 64-bit adjacency masks.
pub const MAX_CAP: usize = subgraph::MAX_MASK_ORDER;

impl Caps {
    /// Reject caps that are zero or exceed [`MAX_CAP`].
    pub fn validated(self) -> Result<Caps> {
        let named = [
            ("cycle_order", self.cycle_order),
            ("disjoint_cycle_order", self.disjoint_cycle_order),
            ("minor_pattern", self.minor_pattern),
            ("minor_host", self.minor_host),
            ("counterexample_order", self.counterexample_order),
        ];
        for (name, v) in named {
            if v == 0 || v > MAX_CAP {
                return Err(Error::ParamRange(format!("cap {name} must lie in 1..={MAX_CAP}, got {v}")));
            }
        }
        Ok(self)
    }
}

/// A named graph in a finite family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub name: String,
    pub graph: Graph,
}

impl Member {
    /// Parse `g6:<graph6>` or a graph expression.
    pub fn parse(text: &str) -> Result<Member> {
        let text = text.trim();
        let graph = match text.strip_prefix("g6:") {
            Some(s) => graph6_decode(s)?,
            None => parse_expr(text)?.realize(),
        };
        Ok(Member { name: text.to_string(), graph })
    }

    pub fn new(name: impl Into<String>, graph: Graph) -> Member {
        Member { name: name.into(), graph }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Forbid each listed graph as a subgraph.
    FiniteList(Vec<Member>),
    /// Forbid cycles of length `≥ ℓ`.
    CyclesAtLeast(usize),
    /// Forbid cycles whose length is `residue` modulo `modulus`.
    CyclesModulo { residue: usize, modulus: usize },
    /// Forbid `k` consecutive even cycle lengths.
    ConsecutiveEvenCycles(usize),
    /// Forbid `chorded.len()` vertex-disjoint cycles of length `≥ min_len`,
    /// cycle `i` carrying a chord when `chorded[i]`.
    DisjointCycles { min_len: usize, chorded: Vec<bool> },
    /// Forbid this many vertex-disjoint chorded cycles.
    ChordedCycles(usize),
    MinorsOf(Member),
    SubdivisionsOf(Member),
    /// Forbid graphs containing every tree on `t` vertices.
    AllTreesOn(usize),
    /// The seven-item family built around `K_{2,6}`, `K_{1,3}`, `K_{1,4}`
    /// and disjoint copies of small connected graphs and cycles.
    Counterexample7,
}

/// Outcome of the bipartite threshold search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteK {
    /// Largest `j` with `K_{j, m_cap}` free (0 when even `j = 0` fails).
    pub k: usize,
    pub m_cap: usize,
    /// The family is not a finite list, so truncating `K_{j,∞}` is not known to be exact.
    pub truncated: bool,
    /// `K_{0, m_cap}` is not free: the family contains an edgeless graph.
    pub empty_member: bool,
    /// Every `j ≤ m_cap` was free.
    pub unbounded: bool,
}

fn disjoint_cycle_pieces(min_len: usize, chorded: &[bool], n: usize) -> Vec<Piece> {
    chorded.iter().map(|&c| Piece::Cycle { min: min_len, max: n, chorded: c }).collect()
}

fn counterexample_items() -> Vec<Vec<Piece>> {
    let k26 = || Piece::Fixed(Graph::complete_bipartite(2, 6));
    let conn = |s| Piece::Connected { size: s, except: None };
    vec![
        vec![Piece::Fixed(Graph::star(4)); 3],
        vec![k26(), conn(5), conn(5)],
        vec![k26(), Piece::Fixed(Graph::star(3)), conn(5)],
        vec![k26(), conn(9)],
        vec![k26(), Piece::Connected { size: 8, except: Some(Graph::path(8)) }],
        vec![conn(5); 4],
        vec![Piece::Cycle { min: 3, max: 7, chorded: false }; 3],
    ]
}

impl FamilySpec {
    /// Convenience constructor from expression strings.
    pub fn list(items: &[&str]) -> Result<FamilySpec> {
        let members = items.iter().map(|s| Member::parse(s)).collect::<Result<Vec<_>>>()?;
        FamilySpec::FiniteList(members).validated()
    }

    pub fn disjoint_cycles(count: usize, min_len: usize, chorded: usize) -> Result<FamilySpec> {
        FamilySpec::DisjointCycles { min_len, chorded: (0..count).map(|i| i < chorded).collect() }.validated()
    }

    pub fn validated(self) -> Result<FamilySpec> {
        use FamilySpec::*;
        let bad = |m: &str| Err(Error::ParamRange(m.to_string()));
        match &self {
            FiniteList(v) if v.is_empty() => return bad("finite list must have at least one member"),
            CyclesAtLeast(l) if *l < 3 => return bad("cycles-ge needs length >= 3"),
            CyclesModulo { residue, modulus } if residue >= modulus => {
                return bad("cycles-mod needs residue < modulus")
            }
            ConsecutiveEvenCycles(0) => return bad("consec-even needs k >= 1"),
            DisjointCycles { chorded, .. } if chorded.is_empty() => return bad("disjoint-cycles needs k >= 1"),
            DisjointCycles { min_len, .. } if *min_len < 3 => return bad("disjoint-cycles min length must be >= 3"),
            ChordedCycles(0) => return bad("chorded needs count >= 1"),
            AllTreesOn(0) => return bad("all-trees needs t >= 1"),
            _ => {}
        }
        Ok(self)
    }

    /// Parse the family DSL, e.g. `list:P6;3*P3`, `cycles-mod:3,5`,
    /// `disjoint-cycles:2,min=5,chorded=1`, `minor:K5`, `list:@file.g6`.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let text = text.trim();
        let (kind, arg) = text.split_once(':').unwrap_or((text, ""));
        let syntax = |msg: String| Error::Syntax { pos: kind.len() + 1, msg };
        let int = |s: &str| -> Result<usize> {
            s.trim().parse().map_err(|_| syntax(format!("expected integer, found `{s}`")))
        };
        let spec = match kind {
            "list" => {
                if let Some(path) = arg.strip_prefix('@') {
                    let body = std::fs::read_to_string(path)?;
                    let members = body
                        .lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(|l| Member::parse(&format!("g6:{l}")))
                        .collect::<Result<Vec<_>>>()?;
                    FamilySpec::FiniteList(members)
                } else {
                    let items: Vec<&str> = arg.split(';').collect();
                    return FamilySpec::list(&items);
                }
            }
            "cycles-ge" => FamilySpec::CyclesAtLeast(int(arg)?),
            "cycles-mod" => {
                let (a, b) = arg.split_once(',').ok_or_else(|| syntax("expected `residue,modulus`".into()))?;
                FamilySpec::CyclesModulo { residue: int(a)?, modulus: int(b)? }
            }
            "consec-even" => FamilySpec::ConsecutiveEvenCycles(int(arg)?),
            "disjoint-cycles" => {
                let mut parts = arg.split(',');
                let count = int(parts.next().unwrap_or(""))?;
                let (mut min_len, mut chorded) = (3, 0);
                for p in parts {
                    match p.trim().split_once('=') {
                        Some(("min", v)) => min_len = int(v)?,
                        Some(("chorded", v)) => chorded = int(v)?,
                        _ => return Err(syntax(format!("unknown disjoint-cycles option `{p}`"))),
                    }
                }
                if chorded > count {
                    return Err(Error::ParamRange("more chorded cycles than cycles".into()));
                }
                return FamilySpec::disjoint_cycles(count, min_len, chorded);
            }
            "chorded" => FamilySpec::ChordedCycles(int(arg)?),
            "minor" => FamilySpec::MinorsOf(Member::parse(arg)?),
            "subdiv" => FamilySpec::SubdivisionsOf(Member::parse(arg)?),
            "all-trees" => FamilySpec::AllTreesOn(int(arg)?),
            "counterexample7" if arg.is_empty() => FamilySpec::Counterexample7,
            _ => {
                return Err(Error::Syntax { pos: 0, msg: format!("unknown family kind `{kind}`") });
            }
        };
        spec.validated()
    }

    pub fn is_finite_list(&self) -> bool {
        matches!(self, FamilySpec::FiniteList(_))
    }

    /// Largest member order of a finite list.
    pub fn max_member_order(&self) -> Option<usize> {
        match self {
            FamilySpec::FiniteList(v) => v.iter().map(|m| m.graph.order()).max(),
            _ => None,
        }
    }

    /// Default right-side size for [`max_bipartite_k`]: twice the largest
    /// member order for lists, otherwise half the relevant host cap.
    pub fn default_m_cap(&self, caps: &Caps) -> usize {
        use FamilySpec::*;
        match self {
            FiniteList(_) => 2 * self.max_member_order().unwrap_or(0).max(1),
            CyclesAtLeast(_) | CyclesModulo { .. } | ConsecutiveEvenCycles(_) => caps.cycle_order / 2,
            ChordedCycles(1) => caps.cycle_order / 2,
            DisjointCycles { chorded, .. } if chorded.len() == 1 => caps.cycle_order / 2,
            DisjointCycles { .. } | ChordedCycles(_) => caps.disjoint_cycle_order / 2,
            MinorsOf(_) | SubdivisionsOf(_) => caps.minor_host / 2,
            AllTreesOn(t) => 2 * t,
            Counterexample7 => caps.counterexample_order / 2,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            FiniteList(v) => {
                let names: Vec<&str> = v.iter().map(|m| m.name.as_str()).collect();
                write!(f, "list:{}", names.join(";"))
            }
            CyclesAtLeast(l) => write!(f, "cycles-ge:{l}"),
            CyclesModulo { residue, modulus } => write!(f, "cycles-mod:{residue},{modulus}"),
            ConsecutiveEvenCycles(k) => write!(f, "consec-even:{k}"),
            DisjointCycles { min_len, chorded } => {
                write!(f, "disjoint-cycles:{},min={min_len}", chorded.len())?;
                let c = chorded.iter().filter(|&&b| b).count();
                if c > 0 {
                    write!(f, ",chorded={c}")?;
                }
                Ok(())
            }
            ChordedCycles(c) => write!(f, "chorded:{c}"),
            MinorsOf(m) => write!(f, "minor:{}", m.name),
            SubdivisionsOf(m) => write!(f, "subdiv:{}", m.name),
            AllTreesOn(t) => write!(f, "all-trees:{t}"),
            Counterexample7 => write!(f, "counterexample7"),
        }
    }
}

fn pack_capped(g: &Graph, pieces: &[Piece], cap: usize, what: &'static str) -> Result<bool> {
    let cap = cap.min(PACKING_MAX_ORDER);
    if g.order() > cap {
        return Err(Error::cap(what, cap, g.order()));
    }
    let masks = subgraph::masks_of(g)?;
    Ok(pack(&masks, pieces))
}

/// Is `g` free of every member of `spec`?
pub fn is_free_capped(g: &Graph, spec: &FamilySpec, caps: &Caps) -> Result<bool> {
    use FamilySpec::*;
    match spec {
        FiniteList(members) => {
            for m in members {
                if contains_subgraph(g, &m.graph)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        CyclesAtLeast(l) => {
            if g.order() < *l {
                return Ok(true);
            }
            Ok(cycle_spectrum_capped(g, caps.cycle_order)?.max().is_none_or(|c| c < *l))
        }
        CyclesModulo { residue, modulus } => {
            Ok(!cycle_spectrum_capped(g, caps.cycle_order)?.iter().any(|c| c % modulus == *residue))
        }
        ConsecutiveEvenCycles(k) => Ok(!cycle_spectrum_capped(g, caps.cycle_order)?.has_consecutive_even(*k)),
        DisjointCycles { min_len, chorded } => {
            let cap = if chorded.len() == 1 { caps.cycle_order } else { caps.disjoint_cycle_order };
            let pieces = disjoint_cycle_pieces(*min_len, chorded, g.order());
            Ok(!pack_capped(g, &pieces, cap, "disjoint-cycle host order")?)
        }
        ChordedCycles(c) => {
            let cap = if *c == 1 { caps.cycle_order } else { caps.disjoint_cycle_order };
            let pieces = disjoint_cycle_pieces(3, &vec![true; *c], g.order());
            Ok(!pack_capped(g, &pieces, cap, "chorded-cycle host order")?)
        }
        MinorsOf(f) => Ok(!has_minor_capped(g, &f.graph, caps)?),
        SubdivisionsOf(f) => Ok(!has_subdivision_capped(g, &f.graph, caps)?),
        AllTreesOn(t) => {
            if g.order() < *t {
                return Ok(true);
            }
            for tree in all_trees(*t)? {
                if !contains_subgraph(g, &tree)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Counterexample7 => {
            for item in counterexample_items() {
                if pack_capped(g, &item, caps.counterexample_order, "counterexample host order")? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// [`is_free_capped`] with default caps.
pub fn is_free(g: &Graph, spec: &FamilySpec) -> Result<bool> {
    is_free_capped(g, spec, &Caps::default())
}

/// Free, and adding any missing edge destroys freeness.
pub fn is_saturated_capped(g: &Graph, spec: &FamilySpec, caps: &Caps) -> Result<bool> {
    if !is_free_capped(g, spec, caps)? {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        let mut h = g.clone();
        h.add_edge(u, v);
        if is_free_capped(&h, spec, caps)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_saturated(g: &Graph, spec: &FamilySpec) -> Result<bool> {
    is_saturated_capped(g, spec, &Caps::default())
}

/// Largest `j` with `K_{j, m_cap}` free.
///
/// For a finite list with `m_cap` at least the largest member order this is
/// exact: a member inside `K_{j,∞}` uses at most that many right vertices.
pub fn max_bipartite_k(spec: &FamilySpec, m_cap: usize, caps: &Caps) -> Result<BipartiteK> {
    if let Some(m) = spec.max_member_order() {
        if m_cap < m {
            return Err(Error::ParamRange(format!("m_cap {m_cap} is below the largest member order {m}")));
        }
    }
    let mut report = BipartiteK { k: 0, m_cap, truncated: !spec.is_finite_list(), empty_member: false, unbounded: false };
    for j in 0..=m_cap {
        if !is_free_capped(&Graph::complete_bipartite(j, m_cap), spec, caps)? {
            if j == 0 {
                report.empty_member = true;
            } else {
                report.k = j - 1;
            }
            return Ok(report);
        }
    }
    report.k = m_cap;
    report.unbounded = true;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(g: &Graph, spec: &str) -> bool {
        is_free(g, &FamilySpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn dsl_round_trip() {
        for s in [
            "list:P6;3*P3",
            "cycles-ge:5",
            "cycles-mod:3,5",
            "consec-even:2",
            "disjoint-cycles:2,min=5",
            "disjoint-cycles:2,min=3,chorded=1",
            "chorded:1",
            "minor:K5",
            "subdiv:K4",
            "all-trees:6",
            "counterexample7",
            "list:g6:A_",
        ] {
            assert_eq!(FamilySpec::parse(s).unwrap().to_string(), s);
        }
        assert!(matches!(FamilySpec::parse("cycles-mod:5,3"), Err(Error::ParamRange(_))));
        assert!(matches!(FamilySpec::parse("bogus:1"), Err(Error::Syntax { .. })));
        assert!(matches!(FamilySpec::parse("list:P6;Q2"), Err(Error::Syntax { .. })));
        assert!(FamilySpec::parse("list:@/nonexistent/file.g6").is_err());
    }

    #[test]
    fn family_file() {
        let dir = std::env::temp_dir().join(format!("spexlab-family-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("f.g6");
        std::fs::write(&path, "# comment\nA_\nBw\n").unwrap();
        let spec = FamilySpec::parse(&format!("list:@{}", path.display())).unwrap();
        assert_eq!(spec.max_member_order(), Some(3));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn freeness_examples() {
        assert!(free(&Graph::star(7), "list:M4"));
        assert!(free(&Graph::complete(3).join(&Graph::empty(7)), "cycles-ge:7"));
        assert!(!free(&Graph::complete(3).join(&Graph::empty(7)), "cycles-ge:6"));
        assert!(!free(&Graph::cycle(8), "cycles-mod:3,5"));
        assert!(free(&Graph::cycle(7), "cycles-mod:3,5"));
        assert!(!free(&Graph::complete(5), "consec-even:1"));
        assert!(free(&Graph::complete_bipartite(2, 8), "chorded:1"));
        assert!(!free(&Graph::complete(4), "chorded:1"));
        assert!(free(&Graph::complete(5), "disjoint-cycles:2"));
        assert!(!free(&Graph::complete(6), "disjoint-cycles:2"));
        assert!(free(&Graph::complete(9), "disjoint-cycles:2,min=5"));
        assert!(!free(&Graph::complete(10), "disjoint-cycles:2,min=5"));
        assert!(free(&Graph::complete(3).join(&Graph::empty(5)), "minor:K5"));
        assert!(!free(&Graph::complete(5), "minor:K5"));
        assert!(free(&Graph::star(8), "all-trees:4"));
        assert!(!free(&Graph::complete(6), "all-trees:4"));
    }

    #[test]
    fn counterexample_constructions_are_free() {
        let spec = FamilySpec::Counterexample7;
        let h10 = Graph::complete(2).join(&Graph::path(8));
        let g10 = Graph::complete(2).join(&Graph::star(3).repeat(2));
        let h14 = Graph::complete(2).join(&Graph::path(8).disjoint_union(&Graph::path(4)));
        let g14 = Graph::complete(2).join(&Graph::star(3).repeat(3));
        for g in [&h10, &g10, &h14, &g14] {
            assert!(is_free(g, &spec).unwrap(), "{g:?}");
        }
        // three disjoint triangles violate item (7)
        assert!(!is_free(&Graph::complete(3).repeat(3), &spec).unwrap());
        // item (1): three disjoint K_{1,4}
        assert!(!is_free(&Graph::star(4).repeat(3), &spec).unwrap());
        assert!(is_free(&Graph::empty(17), &spec).is_err());
    }

    #[test]
    fn saturation_examples() {
        let m4 = FamilySpec::parse("list:M4").unwrap();
        assert!(is_saturated(&Graph::star(5), &m4).unwrap());
        let k2 = FamilySpec::parse("list:K2").unwrap();
        assert!(is_saturated(&Graph::empty(5), &k2).unwrap());
        let k3 = FamilySpec::parse("list:K3").unwrap();
        // any chord of C5 closes a triangle
        assert!(is_saturated(&Graph::cycle(5), &k3).unwrap());
        assert!(!is_saturated(&Graph::path(5), &k3).unwrap());
    }

    #[test]
    fn bipartite_threshold() {
        let caps = Caps::default();
        let m4 = FamilySpec::parse("list:M4").unwrap();
        assert_eq!(max_bipartite_k(&m4, 8, &caps).unwrap().k, 1);
        let p6 = FamilySpec::parse("list:P6").unwrap();
        let r = max_bipartite_k(&p6, 10, &caps).unwrap();
        assert_eq!((r.k, r.truncated), (2, false));
        let c4 = FamilySpec::parse("consec-even:1").unwrap();
        let r = max_bipartite_k(&c4, 8, &caps).unwrap();
        assert_eq!((r.k, r.truncated), (1, true));
        let e2 = FamilySpec::parse("list:E2").unwrap();
        assert!(max_bipartite_k(&e2, 4, &caps).unwrap().empty_member);
        assert!(max_bipartite_k(&p6, 3, &caps).is_err());
    }
}
