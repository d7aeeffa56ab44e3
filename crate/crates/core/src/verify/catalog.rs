//! Named application cases: a family, its bipartite threshold `k` and the
//! predicted spectral extremal graph, checked against exhaustive search.

use crate::error::{Error, Result};
use crate::family::{is_free_capped, max_bipartite_k, BipartiteK, FamilySpec, Member};
use crate::graph::{is_isomorphic, Graph};
use crate::search::{check_enum_cap, spex_multi, SearchOptions};
use crate::spectral::spectral_radius_with;
use serde::Serialize;
use std::fmt;

/// Predicted extremal graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prediction {
    /// `K_k + K̄_{n−k}`
    JoinEmpty(usize),
    /// `K_k + (K_2 ∪ K̄_{n−k−2})`
    JoinEdge(usize),
    /// `K_k + M_{n−k}`
    JoinMatching(usize),
    /// `K_{k,n−k}`
    Bipartite(usize),
    /// `K_k + X` with `X` as regular as possible of degree `d`; checked by
    /// degree multiset since many such `X` exist.
    JoinNearRegular { k: usize, d: usize },
}

impl Prediction {
    fn left(&self) -> usize {
        match *self {
            Prediction::JoinEmpty(k)
            | Prediction::JoinEdge(k)
            | Prediction::JoinMatching(k)
            | Prediction::Bipartite(k) => k,
            Prediction::JoinNearRegular { k, .. } => k,
        }
    }

    fn min_order(&self) -> usize {
        match *self {
            Prediction::JoinEdge(k) => k + 2,
            Prediction::JoinNearRegular { k, d } => k + d + 1,
            _ => self.left() + 1,
        }
    }

    /// The predicted graph, or `None` when `n` is too small for its shape.
    pub fn build(&self, n: usize) -> Option<Graph> {
        if n < self.min_order() {
            return None;
        }
        Some(match *self {
            Prediction::JoinEmpty(k) => Graph::complete(k).join(&Graph::empty(n - k)),
            Prediction::JoinEdge(k) => Graph::complete(k).join(&Graph::complete(2).disjoint_union(&Graph::empty(n - k - 2))),
            Prediction::JoinMatching(k) => Graph::complete(k).join(&Graph::matching(n - k)),
            Prediction::Bipartite(k) => Graph::complete_bipartite(k, n - k),
            Prediction::JoinNearRegular { k, d } => Graph::complete(k).join(&near_regular(n - k, d)),
        })
    }

    fn target_degrees(&self, n: usize) -> Option<Vec<usize>> {
        let Prediction::JoinNearRegular { k, d } = *self else { return None };
        let m = n - k;
        let mut degs = vec![d + k; m];
        if m * d % 2 == 1 {
            degs[0] -= 1;
        }
        degs.extend(std::iter::repeat_n(n - 1, k));
        degs.sort_unstable();
        Some(degs)
    }

    /// Does `g` have the predicted shape?
    pub fn matches(&self, g: &Graph, n: usize) -> bool {
        match self.target_degrees(n) {
            Some(target) => {
                let mut degs = g.degrees();
                degs.sort_unstable();
                degs == target
            }
            None => self.build(n).is_some_and(|p| is_isomorphic(g, &p)),
        }
    }
}

/// `m` vertices, every degree `d` except one vertex of degree `d − 1` when
/// `md` is odd. Requires `m > d`.
fn near_regular(m: usize, d: usize) -> Graph {
    let mut g = Graph::empty(m);
    for v in 0..m {
        for j in 1..=d / 2 {
            g.add_edge(v, (v + j) % m);
        }
    }
    if d % 2 == 1 {
        if m.is_multiple_of(2) {
            for v in 0..m / 2 {
                g.add_edge(v, v + m / 2);
            }
        } else {
            let h = (m - 1) / 2;
            for v in 0..h {
                g.add_edge(v, v + h);
            }
        }
    }
    g
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Prediction::JoinEmpty(k) => write!(f, "K{k} + E(n-{k})"),
            Prediction::JoinEdge(k) => write!(f, "K{k} + (K2 u E(n-{}))", k + 2),
            Prediction::JoinMatching(k) => write!(f, "K{k} + M(n-{k})"),
            Prediction::Bipartite(k) => write!(f, "K{k},(n-{k})"),
            Prediction::JoinNearRegular { k, d } => write!(f, "K{k} + X, X {d}-regular up to one vertex"),
        }
    }
}

/// A catalog entry.
#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub citation: &'static str,
    pub family: FamilySpec,
    pub prediction: Prediction,
}

/// Case names accepted by [`case`], with their parameter syntax.
pub const CATALOG: &[(&str, &str)] = &[
    ("paths", "paths:<order>"),
    ("matchings", "matchings:<k>  (forbid M_{2k+2})"),
    ("copies-p3", "copies-p3:<k>  (forbid k*P3)"),
    ("linear-forests", "linear-forests:<v1>,<v2>,..."),
    ("star-forests", "star-forests:<d1>,<d2>,..."),
    ("small-trees", "small-trees:<S2,2,1|S3,1,1|D2,2|D2,2*|S3,2,1|D2,3>"),
    ("erdos-sos", "erdos-sos:<t>  (forbid containing every tree on t vertices)"),
    ("long-cycles", "long-cycles:<l>"),
    ("cycles-mod", "cycles-mod:<l>,<r>"),
    ("consec-even-cycles", "consec-even-cycles:<k>"),
    ("disjoint-cycles", "disjoint-cycles:<k>"),
    ("chorded-cycles", "chorded-cycles:<c>  (c disjoint chorded cycles)"),
    ("minors-kk", "minors-kk:<k>"),
    ("friendship-minor", "friendship-minor:<k>"),
];

fn default_arg(kind: &str) -> &'static str {
    match kind {
        "paths" => "6",
        "matchings" => "1",
        "copies-p3" => "3",
        "linear-forests" => "3,4",
        "star-forests" => "2,2",
        "small-trees" => "S2,2,1",
        "erdos-sos" => "4",
        "long-cycles" => "5",
        "cycles-mod" => "3,5",
        "consec-even-cycles" => "2",
        "disjoint-cycles" => "2",
        "chorded-cycles" => "1",
        "minors-kk" => "5",
        "friendship-minor" => "2",
        _ => "",
    }
}

fn ints(arg: &str) -> Result<Vec<usize>> {
    arg.split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Syntax { pos: 0, msg: format!("expected integer, found `{s}`") }))
        .collect()
}

fn one_int(arg: &str, min: usize) -> Result<usize> {
    let v = ints(arg)?;
    match v.as_slice() {
        [x] if *x >= min => Ok(*x),
        [x] => Err(Error::ParamRange(format!("parameter {x} must be at least {min}"))),
        _ => Err(Error::Syntax { pos: 0, msg: format!("expected one integer, found `{arg}`") }),
    }
}

fn single(name: &str, g: Graph) -> FamilySpec {
    FamilySpec::FiniteList(vec![Member::new(name, g)])
}

/// Build a catalog case from `kind[:args]`.
pub fn case(spec: &str) -> Result<Case> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, default_arg(spec)));
    use Prediction::*;
    let (citation, family, prediction) = match kind {
        "paths" => {
            let v = one_int(arg, 4)?;
            let l = (v - 2) / 2;
            let p = if v % 2 == 0 { JoinEmpty(l) } else { JoinEdge(l) };
            ("paths: SPEX(n, P_{2l+2}) = K_l + E, SPEX(n, P_{2l+3}) = K_l + (K2 u E)", single(&format!("P{v}"), Graph::path(v)), p)
        }
        "matchings" => {
            let k = one_int(arg, 1)?;
            let m = 2 * k + 2;
            ("matchings: SPEX(n, M_{2k+2}) = K_k + E", single(&format!("M{m}"), Graph::matching(m)), JoinEmpty(k))
        }
        "copies-p3" => {
            let k = one_int(arg, 2)?;
            ("copies of P3: SPEX(n, k*P3) = K_{k-1} + M_{n-k+1}", single(&format!("{k}*P3"), Graph::path(3).repeat(k)), JoinMatching(k - 1))
        }
        "linear-forests" => {
            let v = ints(arg)?;
            if v.len() < 2 || v.iter().any(|&x| x < 2) || v.iter().all(|&x| x == 3) {
                return Err(Error::ParamRange("linear forests need >= 2 paths of order >= 2, not all P3".into()));
            }
            let k = v.iter().map(|x| x / 2).sum::<usize>() - 1;
            let g = v.iter().fold(Graph::empty(0), |acc, &x| acc.disjoint_union(&Graph::path(x)));
            let name = v.iter().map(|x| format!("P{x}")).collect::<Vec<_>>().join(" u ");
            let p = if v.iter().any(|x| x % 2 == 0) { JoinEmpty(k) } else { JoinEdge(k) };
            ("linear forests: K_k + E if some path order is even, else K_k + (K2 u E)", single(&name, g), p)
        }
        "star-forests" => {
            let mut d = ints(arg)?;
            if d.len() < 2 || d.contains(&0) {
                return Err(Error::ParamRange("star forests need >= 2 stars with >= 1 leaf".into()));
            }
            d.sort_unstable_by(|a, b| b.cmp(a));
            let k = d.len();
            let g = d.iter().fold(Graph::empty(0), |acc, &x| acc.disjoint_union(&Graph::star(x)));
            let name = d.iter().map(|x| format!("K1,{x}")).collect::<Vec<_>>().join(" u ");
            // the summands sorted by decreasing leaves; the last one sets the degree
            ("star forests: K_{k-1} + X with X (d_k - 1)-regular", single(&name, g), JoinNearRegular { k: k - 1, d: d[k - 1] - 1 })
        }
        "small-trees" => {
            let (g, p) = match arg {
                "S2,2,1" => (Graph::spider(&[2, 2, 1]), JoinEmpty(2)),
                "S3,1,1" => (Graph::spider(&[3, 1, 1]), JoinMatching(1)),
                "D2,2" => (Graph::double_star(2, 2), Bipartite(2)),
                "D2,2*" => (Graph::double_star_extended(), JoinEmpty(2)),
                "S3,2,1" => (Graph::spider(&[3, 2, 1]), JoinEmpty(2)),
                "D2,3" => (Graph::double_star(2, 3), Bipartite(2)),
                _ => return Err(Error::UnknownCase(format!("small-trees:{arg}"))),
            };
            ("certain small trees: connected extremal graphs of S2,2,1 S3,1,1 D2,2 D2,2* S3,2,1 D2,3", single(arg, g), p)
        }
        "erdos-sos" => {
            let t = one_int(arg, 4)?;
            let k = (t - 2) / 2;
            let p = if t % 2 == 0 { JoinEmpty(k) } else { JoinEdge(k) };
            ("Erdos-Sos: graphs without every tree on 2k+2 (2k+3) vertices", FamilySpec::AllTreesOn(t), p)
        }
        "long-cycles" => {
            let l = one_int(arg, 5)?;
            let k = (l - 1) / 2;
            let p = if l % 2 == 1 { JoinEmpty(k) } else { JoinEdge(k) };
            ("long cycles: forbid every cycle of length >= l", FamilySpec::CyclesAtLeast(l), p)
        }
        "cycles-mod" => {
            let v = ints(arg)?;
            let [l, r] = v[..] else {
                return Err(Error::Syntax { pos: 0, msg: "cycles-mod expects `l,r`".into() });
            };
            let p = if l % 2 == 0 && l >= 5 {
                JoinEdge(l / 2 - 1)
            } else if l % 2 == 1 && r % 2 == 1 {
                Bipartite((r + l) / 2 - 1)
            } else {
                return Err(Error::ParamRange("cycles-mod case needs l even >= 6, or l and r both odd".into()));
            };
            let fam = FamilySpec::CyclesModulo { residue: l, modulus: r }.validated()?;
            ("arithmetic progressions of cycles: forbid lengths congruent to l mod r", fam, p)
        }
        "consec-even-cycles" => {
            let k = one_int(arg, 1)?;
            ("interval of even cycles: forbid k consecutive even cycle lengths", FamilySpec::ConsecutiveEvenCycles(k), JoinEdge(k))
        }
        "disjoint-cycles" => {
            let k = one_int(arg, 2)?;
            ("disjoint cycles: forbid k vertex-disjoint cycles", FamilySpec::disjoint_cycles(k, 3, 0)?, JoinEmpty(2 * k - 1))
        }
        "chorded-cycles" => {
            let c = one_int(arg, 1)?;
            ("chorded cycles: forbid c vertex-disjoint chorded cycles", FamilySpec::ChordedCycles(c), Bipartite(3 * c - 1))
        }
        "minors-kk" => {
            let k = one_int(arg, 3)?;
            ("minors: the K_k-minor free extremal graph is K_{k-2} + E", FamilySpec::MinorsOf(Member::new(format!("K{k}"), Graph::complete(k))), JoinEmpty(k - 2))
        }
        "friendship-minor" => {
            let k = one_int(arg, 1)?;
            ("minors: the F_k-minor free extremal graph is K_k + E", FamilySpec::MinorsOf(Member::new(format!("F{k}"), Graph::friendship(k))), JoinEmpty(k))
        }
        _ => return Err(Error::UnknownCase(spec.to_string())),
    };
    Ok(Case { name: format!("{kind}:{arg}"), citation, family, prediction })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The prediction is the unique optimum.
    Matched,
    /// The prediction attains the optimum together with other classes.
    Tied,
    Unmatched,
    /// Search not run (order or family caps).
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaRecord {
    pub alpha: f64,
    pub verdict: Verdict,
    pub lambda_pred: Option<f64>,
    pub lambda_best: Option<f64>,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub n: usize,
    /// graph6 of the predicted graph (absent when `n` is below its order).
    pub predicted: Option<String>,
    /// `None` when freeness could not be decided within caps.
    pub predicted_free: Option<bool>,
    pub by_alpha: Vec<AlphaRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Threshold {
    pub alpha: f64,
    /// Smallest tested `n` from which every searched `n` matched.
    pub from_n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub citation: String,
    pub family: String,
    pub prediction: String,
    pub bipartite_k: Option<BipartiteK>,
    pub records: Vec<CaseRecord>,
    pub thresholds: Vec<Threshold>,
    /// The predicted graph was free at every `n` where freeness was decided.
    pub predictions_free: bool,
}

fn threshold(records: &[CaseRecord], slot: usize) -> Option<usize> {
    let mut from = None;
    for r in records {
        match r.by_alpha[slot].verdict {
            Verdict::Matched => {
                from.get_or_insert(r.n);
            }
            Verdict::Skipped => {}
            Verdict::Tied | Verdict::Unmatched => from = None,
        }
    }
    from
}

fn skipped(alpha: f64, lambda_pred: Option<f64>, note: String) -> AlphaRecord {
    AlphaRecord { alpha, verdict: Verdict::Skipped, lambda_pred, lambda_best: None, witnesses: vec![], note: Some(note) }
}

/// Check one case at every `n` in `ns` and every `α` in `alphas`.
pub fn run_case(name: &str, ns: &[usize], alphas: &[f64], opts: &SearchOptions) -> Result<CaseResult> {
    let case = case(name)?;
    let m_cap = case.family.default_m_cap(&opts.caps);
    let bipartite_k = max_bipartite_k(&case.family, m_cap, &opts.caps).ok();
    let mut records = Vec::new();
    let mut predictions_free = true;
    for &n in ns {
        let predicted = case.prediction.build(n);
        let predicted_free = match &predicted {
            Some(g) => is_free_capped(g, &case.family, &opts.caps).ok(),
            None => None,
        };
        if predicted_free == Some(false) {
            predictions_free = false;
        }
        let lambdas: Vec<Option<f64>> = alphas
            .iter()
            .map(|&a| predicted.as_ref().and_then(|g| spectral_radius_with(g, a, &opts.eigen).ok()).map(|s| s.lambda))
            .collect();
        let by_alpha = match (&predicted, check_enum_cap(n, opts.connected)) {
            (None, _) => alphas.iter().map(|&a| skipped(a, None, "n below the order of the prediction".into())).collect(),
            (_, Err(e)) => alphas.iter().zip(&lambdas).map(|(&a, &l)| skipped(a, l, e.to_string())).collect(),
            (Some(_), Ok(())) => match spex_multi(n, &case.family, alphas, opts) {
                Err(e @ Error::CapExceeded { .. }) => {
                    alphas.iter().zip(&lambdas).map(|(&a, &l)| skipped(a, l, e.to_string())).collect()
                }
                Err(e) => return Err(e),
                Ok(reports) => reports
                    .into_iter()
                    .zip(lambdas.iter().zip(alphas))
                    .map(|(r, (&l, &alpha))| {
                        let hits = r.witness_graphs().iter().filter(|w| case.prediction.matches(w, n)).count();
                        let verdict = match hits {
                            0 => Verdict::Unmatched,
                            h if h == r.witnesses.len() && (h == 1 || matches!(case.prediction, Prediction::JoinNearRegular { .. })) => {
                                Verdict::Matched
                            }
                            _ => Verdict::Tied,
                        };
                        AlphaRecord {
                            alpha,
                            verdict,
                            lambda_pred: l,
                            lambda_best: Some(r.optimum.as_f64()),
                            witnesses: r.witnesses,
                            note: None,
                        }
                    })
                    .collect(),
            },
        };
        records.push(CaseRecord { n, predicted: predicted.map(|g| g.graph6()), predicted_free, by_alpha });
    }
    let thresholds = alphas.iter().enumerate().map(|(i, &alpha)| Threshold { alpha, from_n: threshold(&records, i) }).collect();
    Ok(CaseResult {
        case: case.name,
        citation: case.citation.to_string(),
        family: case.family.to_string(),
        prediction: case.prediction.to_string(),
        bipartite_k,
        records,
        thresholds,
        predictions_free,
    })
}

impl CaseResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `case,n,alpha,lambda_pred,lambda_best,verdict` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("case,n,alpha,lambda_pred,lambda_best,verdict\n");
        let opt = |x: Option<f64>| x.map(|v| format!("{v:.12}")).unwrap_or_default();
        for r in &self.records {
            for a in &r.by_alpha {
                out.push_str(&format!(
                    "\"{}\",{},{},{},{},{}\n",
                    self.case,
                    r.n,
                    a.alpha,
                    opt(a.lambda_pred),
                    opt(a.lambda_best),
                    serde_json::to_value(&a.verdict).unwrap().as_str().unwrap()
                ));
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("## Case `{}`\n\n{}\n\n", self.case, self.citation);
        out.push_str(&format!("- family: `{}`\n- prediction: `{}`\n", self.family, self.prediction));
        if let Some(b) = &self.bipartite_k {
            out.push_str(&format!("- largest j with K_(j,{}) free: {}{}\n", b.m_cap, b.k, if b.truncated { " (truncated)" } else { "" }));
        }
        out.push_str(&format!("- predicted graph free at every decided n: {}\n\n", self.predictions_free));
        out.push_str("| n | alpha | predicted free | lambda(pred) | optimum | verdict |\n|---|---|---|---|---|---|\n");
        let opt = |x: Option<f64>| x.map(|v| format!("{v:.10}")).unwrap_or_else(|| "-".into());
        for r in &self.records {
            for a in &r.by_alpha {
                let free = r.predicted_free.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
                let verdict = serde_json::to_value(&a.verdict).unwrap().as_str().unwrap().to_string();
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    r.n,
                    a.alpha,
                    free,
                    opt(a.lambda_pred),
                    opt(a.lambda_best),
                    verdict
                ));
            }
        }
        out.push('\n');
        for t in &self.thresholds {
            let from = t.from_n.map(|n| format!("n >= {n}")).unwrap_or_else(|| "not observed".into());
            out.push_str(&format!("- threshold (alpha = {}): {from}\n", t.alpha));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn near_regular_degrees() {
        for (m, d) in [(6, 1), (7, 1), (7, 2), (8, 3), (9, 3), (10, 4)] {
            let g = near_regular(m, d);
            let mut degs = g.degrees();
            degs.sort_unstable();
            let low = degs.iter().filter(|&&x| x + 1 == d).count();
            assert_eq!(low, (m * d) % 2, "m={m} d={d}");
            assert!(degs.iter().all(|&x| x == d || x + 1 == d));
        }
    }

    #[test]
    fn catalog_parses_with_defaults() {
        for (kind, _) in CATALOG {
            let c = case(kind).unwrap();
            assert!(c.prediction.build(12).is_some(), "{kind}");
        }
        assert!(matches!(case("nope"), Err(Error::UnknownCase(_))));
        assert!(case("paths:3").is_err());
    }

    #[test]
    fn matchings_case() {
        let r = run_case("matchings:1", &[6, 7], &[0.0, 0.5], &SearchOptions::default()).unwrap();
        assert!(r.predictions_free);
        assert!(r.records.iter().all(|rec| rec.by_alpha.iter().all(|a| a.verdict == Verdict::Matched)));
        assert_eq!(r.thresholds[0].from_n, Some(6));
        assert_eq!(r.bipartite_k.as_ref().unwrap().k, 1);
        assert!(r.to_markdown().contains("| 6 | 0 | true |"));
        assert_eq!(r.to_csv().lines().count(), 5);
    }

    #[test]
    fn skipped_beyond_caps_still_checks_freeness() {
        let r = run_case("paths:6", &[12], &[0.0], &SearchOptions::default()).unwrap();
        assert_eq!(r.records[0].predicted_free, Some(true));
        assert_eq!(r.records[0].by_alpha[0].verdict, Verdict::Skipped);
        assert_eq!(r.thresholds[0].from_n, None);
    }
}
