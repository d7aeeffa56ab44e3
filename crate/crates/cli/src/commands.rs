//! Command implementations. Each returns whether every exact check passed.

use crate::config::Config;
use crate::output::{emit, Emission};
use crate::{Cli, Command, CompareArgs, CounterexampleArgs, Format, LambdaArgs, ReportArgs, SearchArgs, TreesArgs, VerifyArgs};
use serde::Serialize;
use spexlab::family::FamilySpec;
use spexlab::graph::{graph6_decode, parse_expr};
use spexlab::search::{
    candidate_compare, ex, ex_restricted, exact_char_poly, reports_to_csv, spex_multi, SearchReport, MAX_EXACT_CELLS,
};
use spexlab::spectral::poly::{max_real_root_certified, q_from_f64};
use spexlab::spectral::{equitable_partition, spectral_radius_with};
use spexlab::verify::{
    counterexample_report, run_case, tree_edge_counts, tree_stats, trend_nondecreasing, CaseResult, CounterexampleReport,
    TreeEdgeCounts, TreeMode, TreeStats, CATALOG,
};
use spexlab::{Error, Graph, Result};

/// `g6:<graph6>` or a graph expression.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match text.strip_prefix("g6:") {
        Some(g6) => graph6_decode(g6),
        None => Ok(parse_expr(text)?.realize()),
    }
}

/// `a..b` (inclusive), `a..=b`, `a,b,c` or a single value.
pub fn parse_orders(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::Syntax { pos: 0, msg: format!("bad order list `{text}`") };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = text.split_once("..") {
        let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
        if a > b {
            return Err(Error::ParamRange(format!("empty range `{text}`")));
        }
        return Ok((a..=b).collect());
    }
    text.split(',').map(num).collect()
}

/// A nonnegative integer, also accepted in `1e6` form.
pub fn parse_count(text: &str) -> Result<usize> {
    if let Ok(v) = text.parse::<usize>() {
        return Ok(v);
    }
    match text.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= 1e15 => Ok(v as usize),
        _ => Err(Error::Syntax { pos: 0, msg: format!("expected a nonnegative integer, got `{text}`") }),
    }
}

pub fn run(cli: &Cli, config: &Config) -> Result<bool> {
    let timestamp = !cli.no_timestamp;
    let out = config.out_dir.as_deref();
    let mut format = cli.format;
    let (emission, ok) = match &cli.command {
        Command::Lambda(a) => (lambda(a, config)?, true),
        Command::Ex(a) | Command::Spex(a) => {
            if a.csv {
                format = Format::Csv;
            }
            (search(a, matches!(cli.command, Command::Spex(_)), config, timestamp)?, true)
        }
        Command::Compare(a) => (compare(a, config)?, true),
        Command::Verify(a) => verify(a, config)?,
        Command::Counterexample(a) => counterexample(a, config)?,
        Command::Trees(a) => trees(a, config)?,
        Command::Report(a) => report(a, config)?,
    };
    emit(&emission, format, timestamp, out)?;
    Ok(ok)
}

#[derive(Serialize)]
struct PerronSummary {
    min: f64,
    max: f64,
    /// Vertices where the vector attains 1.
    argmax: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    entries: Option<Vec<f64>>,
}

#[derive(Serialize)]
struct LambdaOutput {
    graph: String,
    graph6: String,
    order: usize,
    size: usize,
    alpha: f64,
    lambda: f64,
    residual: f64,
    component_size: usize,
    perron: PerronSummary,
    quotient_cells: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    char_poly: Option<String>,
    /// Largest root of the quotient polynomial, certified to `certified_tol`.
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda_exact: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certified_tol: Option<f64>,
}

const PERRON_LISTED_MAX: usize = 30;

fn lambda(a: &LambdaArgs, config: &Config) -> Result<Emission> {
    let g = parse_graph(&a.graph)?;
    let s = spectral_radius_with(&g, a.alpha, &config.eigen())?;
    let cells = equitable_partition(&g, &[(0..g.order()).collect()])?.len();
    let (char_poly, lambda_exact, certified_tol) = if cells <= MAX_EXACT_CELLS && g.order() > 0 {
        let p = exact_char_poly(&g, &q_from_f64(a.alpha))?;
        let r = max_real_root_certified(&p, -1.0, config.root_tol)?;
        (Some(p.to_string()), Some(r.value), Some(r.tol))
    } else {
        (None, None, None)
    };
    let min = s.perron.iter().copied().filter(|&x| x > 0.0).fold(f64::INFINITY, f64::min);
    let perron = PerronSummary {
        min: if min.is_finite() { min } else { 0.0 },
        max: s.perron.iter().copied().fold(0.0, f64::max),
        argmax: (0..s.perron.len()).filter(|&i| s.perron[i] == 1.0).collect(),
        entries: (g.order() <= PERRON_LISTED_MAX).then(|| s.perron.clone()),
    };
    let out = LambdaOutput {
        graph: a.graph.clone(),
        graph6: g.graph6(),
        order: g.order(),
        size: g.size(),
        alpha: a.alpha,
        lambda: s.lambda,
        residual: s.residual,
        component_size: s.component_size,
        perron,
        quotient_cells: cells,
        char_poly,
        lambda_exact,
        certified_tol,
    };
    let md = format!(
        "| graph | n | e | alpha | lambda | residual |\n|---|---|---|---|---|---|\n| `{}` | {} | {} | {} | {:.12} | {:.2e} |\n",
        out.graph, out.order, out.size, out.alpha, out.lambda, out.residual
    );
    Ok(Emission::new("lambda", &out).md(md))
}

fn search(a: &SearchArgs, spectral: bool, config: &Config, timestamp: bool) -> Result<Emission> {
    let spec = FamilySpec::parse(&a.family)?;
    let opts = config.search(a.connected);
    let mut reports: Vec<SearchReport> = match (spectral, a.restricted_k) {
        (false, None) => vec![ex(a.n, &spec, &opts)?],
        (false, Some(k)) => vec![ex_restricted(a.n, &spec, k, &opts)?],
        (true, None) => spex_multi(a.n, &spec, &a.alpha, &opts)?,
        (true, Some(_)) => return Err(Error::ParamRange("--restricted-k applies to ex only".into())),
    };
    if !timestamp {
        reports = reports.into_iter().map(SearchReport::without_runtime).collect();
    }
    let name = if spectral { "spex" } else { "ex" };
    let csv = reports_to_csv(&reports);
    Ok(if reports.len() == 1 { Emission::new(name, &reports[0]) } else { Emission::new(name, &reports) }.csv(csv))
}

fn compare(a: &CompareArgs, config: &Config) -> Result<Emission> {
    let candidates = a.graphs.iter().map(|s| Ok((s.clone(), parse_graph(s)?))).collect::<Result<Vec<_>>>()?;
    let spec = a.family.as_deref().map(FamilySpec::parse).transpose()?;
    let r = candidate_compare(&candidates, spec.as_ref(), a.alpha, &config.caps, &config.eigen(), config.tie_tol)?;
    let mut md = String::from("| rank | graph | n | e | free | lambda |\n|---|---|---|---|---|---|\n");
    for (i, c) in r.ranking.iter().enumerate() {
        let free = c.free.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
        md.push_str(&format!("| {} | `{}` | {} | {} | {} | {:.12} |\n", i + 1, c.name, c.order, c.size, free, c.lambda));
    }
    Ok(Emission::new("compare", &r).md(md))
}

#[derive(Serialize)]
struct CatalogEntry {
    name: &'static str,
    usage: &'static str,
}

fn catalog_listing() -> Emission {
    let entries: Vec<CatalogEntry> = CATALOG.iter().map(|&(name, usage)| CatalogEntry { name, usage }).collect();
    let mut md = String::from("| case | usage |\n|---|---|\n");
    let mut csv = String::from("case,usage\n");
    for e in &entries {
        md.push_str(&format!("| {} | `{}` |\n", e.name, e.usage));
        csv.push_str(&format!("{},\"{}\"\n", e.name, e.usage));
    }
    Emission::new("catalog", &entries).md(md).csv(csv)
}

fn verify(a: &VerifyArgs, config: &Config) -> Result<(Emission, bool)> {
    let Some(case) = a.case.as_deref().filter(|_| !a.list) else {
        return Ok((catalog_listing(), true));
    };
    let ns = parse_orders(&a.n)?;
    let r = run_case(case, &ns, &a.alphas, &config.search(false))?;
    let ok = r.predictions_free;
    Ok((Emission::new("verify", &r).csv(r.to_csv()).md(r.to_markdown()), ok))
}

fn counterexample(a: &CounterexampleArgs, config: &Config) -> Result<(Emission, bool)> {
    let r = counterexample_report(&a.n, parse_count(&a.ceiling)?, &config.caps)?;
    let ok = r.exact_ok();
    Ok((Emission::new("counterexample", &r).md(r.to_markdown()), ok))
}

#[derive(Serialize)]
struct TreesOutput {
    stats: Vec<TreeStats>,
    trend_nondecreasing: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    edge_counts: Vec<TreeEdgeCounts>,
}

impl TreesOutput {
    fn ok(&self) -> bool {
        self.edge_counts.iter().all(TreeEdgeCounts::holds)
    }

    fn csv(&self) -> String {
        let mut out = String::from("m,samples,good_count,fraction,half_width,exhaustive,seed\n");
        for s in &self.stats {
            out.push_str(&format!(
                "{},{},{},{:.6},{:.6},{},{}\n",
                s.m, s.samples, s.good_count, s.fraction, s.half_width, s.exhaustive, s.seed
            ));
        }
        out
    }

    fn markdown(&self) -> String {
        let mut out = String::from("## Good trees\n\n| m | trees | good | fraction | 95% half-width | mode |\n|---|---|---|---|---|---|\n");
        for s in &self.stats {
            let mode = if s.exhaustive { "exhaustive".to_string() } else { format!("sampled (seed {})", s.seed) };
            out.push_str(&format!(
                "| {} | {} | {} | {:.4} | {:.4} | {} |\n",
                s.m, s.samples, s.good_count, s.fraction, s.half_width, mode
            ));
        }
        out.push_str(&format!("\nNondecreasing within two half-widths: {}\n", self.trend_nondecreasing));
        if !self.edge_counts.is_empty() {
            out.push_str("\n## Labelled trees through fixed edges\n\n");
            out.push_str("| n | N(01) | 2n^(n-3) | N(01,02) | 3n^(n-4) | N(01,23) | 4n^(n-4) |\n|---|---|---|---|---|---|---|\n");
            for c in &self.edge_counts {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    c.n, c.n_ij, c.expected_ij, c.n_ij_ik, c.expected_ij_ik, c.n_ij_kl, c.expected_ij_kl
                ));
            }
        }
        out
    }
}

fn tree_output(ms: &[usize], samples: u64, mode: TreeMode, edge_orders: &[usize], seed: u64) -> Result<TreesOutput> {
    let stats = ms.iter().map(|&m| tree_stats(m, samples, seed, mode)).collect::<Result<Vec<_>>>()?;
    let edge_counts = edge_orders.iter().map(|&n| tree_edge_counts(n)).collect::<Result<Vec<_>>>()?;
    Ok(TreesOutput { trend_nondecreasing: trend_nondecreasing(&stats), stats, edge_counts })
}

fn trees(a: &TreesArgs, config: &Config) -> Result<(Emission, bool)> {
    let mode = match (a.exhaustive, a.sample) {
        (true, _) => TreeMode::Exhaustive,
        (_, true) => TreeMode::Sample,
        _ => TreeMode::Auto,
    };
    let edge_orders = a.edge_counts.as_deref().map(parse_orders).transpose()?.unwrap_or_default();
    let t = tree_output(&a.m, a.samples, mode, &edge_orders, config.seed)?;
    let ok = t.ok();
    Ok((Emission::new("trees", &t).csv(t.csv()).md(t.markdown()), ok))
}

#[derive(Serialize)]
struct FullReport {
    cases: Vec<CaseResult>,
    counterexample: CounterexampleReport,
    trees: TreesOutput,
}

fn report(a: &ReportArgs, config: &Config) -> Result<(Emission, bool)> {
    let ns = parse_orders(&a.n)?;
    let opts = config.search(false);
    let cases = CATALOG.iter().map(|&(name, _)| run_case(name, &ns, &a.alphas, &opts)).collect::<Result<Vec<_>>>()?;
    let counterexample = counterexample_report(&[10, 14, 50], parse_count(&a.ceiling)?, &config.caps)?;
    let trees = tree_output(&[4, 8, 16, 32, 64], a.samples, TreeMode::Auto, &[4, 5, 6, 7], config.seed)?;
    let ok = cases.iter().all(|c| c.predictions_free) && counterexample.exact_ok() && trees.ok();
    let mut md = String::from("# spexlab reproduction report\n\n");
    for c in &cases {
        md.push_str(&c.to_markdown());
        md.push('\n');
    }
    md.push_str(&counterexample.to_markdown());
    md.push('\n');
    md.push_str(&trees.markdown());
    let mut csv = String::new();
    for (i, c) in cases.iter().enumerate() {
        let body = c.to_csv();
        csv.push_str(if i == 0 { &body } else { body.split_once('\n').map_or("", |(_, rest)| rest) });
    }
    let full = FullReport { cases, counterexample, trees };
    Ok((Emission::new("report", &full).md(md).csv(csv), ok))
}
