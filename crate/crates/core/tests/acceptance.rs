//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the console.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spexlab::family::FamilySpec;
use spexlab::graph::{graph6_decode, is_isomorphic, parse_expr};
use spexlab::search::{enumerate_graphs, ex, ex_restricted, spex, SearchOptions, SearchReport};
use spexlab::spectral::poly::{q_int, Q};
use spexlab::spectral::{
    char_poly, char_poly_matrix, equitable_partition, max_real_root, quotient, spectral_radius, spectral_radius_with,
    EigenOptions,
};
use spexlab::verify::{counterexample_report, tree_edge_counts, tree_stats, trend_nondecreasing, TreeMode};
use spexlab::{Graph, Result};
use std::time::{Duration, Instant};

const TOL_BIPARTITE: f64 = 1e-10;
const TOL_ORACLE: f64 = 1e-8;
const TOL_ALPHA_SLACK: f64 = -1e-9;
const TOL_QUOTIENT: f64 = 1e-9;
const RANDOM_GRAPHS: usize = 1000;
const RANDOM_MAX_ORDER: usize = 30;
const ALPHAS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];
const TREE_SEED: u64 = 42;
const TREE_SAMPLES: u64 = 10_000;
const CROSSOVER_CEILING: usize = 1_000_000;
const JOIN_GRAPHS: usize = 50;
const JOIN_MAX_ORDER: usize = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn radius(g: &Graph, alpha: f64) -> f64 {
    spectral_radius(g, alpha).expect("alpha in range").lambda
}

fn c1() -> Result<Outcome> {
    let k37 = (radius(&Graph::complete_bipartite(3, 7), 0.0) - 21f64.sqrt()).abs();
    let mut worst: f64 = 0.0;
    for a in 1..=10 {
        for b in a..=10 {
            let err = (radius(&Graph::complete_bipartite(a, b), 0.0) - ((a * b) as f64).sqrt()).abs();
            worst = worst.max(err);
        }
    }
    outcome(k37 <= TOL_BIPARTITE && worst <= TOL_BIPARTITE, format!("|lambda(K3,7) - sqrt 21| = {k37:.1e}, worst over K_a,b = {worst:.1e}"))
}

fn adjacency_q(g: &Graph) -> Vec<Vec<Q>> {
    (0..g.order()).map(|i| (0..g.order()).map(|j| q_int(g.has_edge(i, j) as i64)).collect()).collect()
}

fn c2() -> Result<Outcome> {
    const KNOWN: [u64; 7] = [1, 2, 4, 11, 34, 156, 1044];
    let mut counts = Vec::new();
    let mut worst: f64 = 0.0;
    let mut failure = None;
    for n in 1..=7 {
        let c = enumerate_graphs(n, false, |g| {
            let oracle = max_real_root(&char_poly_matrix(&adjacency_q(g)), -1.0).expect("adjacency has real roots");
            let err = (radius(g, 0.0) - oracle).abs();
            worst = worst.max(err);
            if err > TOL_ORACLE && failure.is_none() {
                failure = Some(g.graph6());
            }
        })?;
        counts.push(c);
    }
    let total: u64 = counts.iter().sum();
    let pass = counts == KNOWN && worst <= TOL_ORACLE;
    let mut detail = format!("{total} classes (counts {counts:?}), worst |solver - root| = {worst:.1e}");
    if let Some(g) = failure {
        detail.push_str(&format!(", first failure {g}"));
    }
    outcome(pass, detail)
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(1..=RANDOM_MAX_ORDER);
    let p: f64 = rng.gen_range(0.05..0.95);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn c3() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = f64::INFINITY;
    for _ in 0..RANDOM_GRAPHS {
        let g = random_graph(&mut rng);
        let lam = radius(&g, 0.0);
        let delta = g.max_degree() as f64;
        for alpha in ALPHAS {
            let v = radius(&g, alpha);
            let slack = (v - alpha * delta).min(alpha * delta + (1.0 - alpha) * lam - v);
            worst = worst.min(slack);
        }
    }
    outcome(worst >= TOL_ALPHA_SLACK, format!("{RANDOM_GRAPHS} graphs x {} alphas, minimum slack {worst:.3e}", ALPHAS.len()))
}

fn opts(workers: usize) -> SearchOptions {
    SearchOptions { workers, ..SearchOptions::default() }
}

fn iso_to(witnesses: &[String], g: &Graph) -> Vec<bool> {
    witnesses.iter().map(|w| is_isomorphic(&graph6_decode(w).expect("valid graph6"), g)).collect()
}

fn c4_reports(workers: usize) -> Result<Vec<SearchReport>> {
    let spec = FamilySpec::parse("list:M4")?;
    let mut out = Vec::new();
    for n in 5..=8 {
        out.push(ex(n, &spec, &opts(workers))?.without_runtime());
        out.push(spex(n, &spec, 0.0, &opts(workers))?.without_runtime());
    }
    Ok(out)
}

fn c4(reports: &[SearchReport]) -> Result<Outcome> {
    let mut pass = true;
    let mut notes = Vec::new();
    for (i, n) in (5..=8).enumerate() {
        let star = Graph::star(n - 1);
        let (e, s) = (&reports[2 * i], &reports[2 * i + 1]);
        let ex_ok = e.optimum.as_f64() == (n - 1) as f64 && iso_to(&e.witnesses, &star) == vec![true];
        let hits = iso_to(&s.witnesses, &star);
        let spex_ok = hits.contains(&true);
        if hits.len() > 1 {
            notes.push(format!("n={n}: K_1,{} ties exactly with {} other class(es)", n - 1, hits.len() - 1));
        }
        pass &= ex_ok && spex_ok;
    }
    let mut detail = "ex(n, M4) = n-1 with unique witness K_1,n-1 and K_1,n-1 spectrally extremal for n = 5..8".to_string();
    if !notes.is_empty() {
        detail.push_str(&format!(" ({})", notes.join("; ")));
    }
    outcome(pass, detail)
}

fn c5_reports(workers: usize) -> Result<Vec<SearchReport>> {
    let mut out = Vec::new();
    for fam in ["list:P6", "list:P7", "list:3*P3"] {
        let spec = FamilySpec::parse(fam)?;
        for n in 8..=12 {
            out.push(ex_restricted(n, &spec, 2, &opts(workers))?.without_runtime());
        }
    }
    Ok(out)
}

fn c5(reports: &[SearchReport]) -> Result<Outcome> {
    let shapes = ["K2 + E{}", "K2 + (K2 u E{})", "K2 + M{}"];
    let mut fails = Vec::new();
    for (f, shape) in shapes.iter().enumerate() {
        for (i, n) in (8..=12).enumerate() {
            let expr = match f {
                1 => shape.replace("{}", &(n - 4).to_string()),
                _ => shape.replace("{}", &(n - 2).to_string()),
            };
            let want = parse_expr(&expr)?.realize();
            let r = &reports[5 * f + i];
            if iso_to(&r.witnesses, &want) != vec![true] {
                let found = r.witness_graphs().iter().map(|g| format!("{} edges", g.size())).collect::<Vec<_>>();
                fails.push(format!("{expr} at n={n} (found {} witness(es): {})", found.len(), found.join(", ")));
            }
        }
    }
    let detail = if fails.is_empty() {
        "P6 -> K2 + E, P7 -> K2 + (K2 u E), 3P3 -> K2 + M, unique for n = 8..12".to_string()
    } else {
        format!("mismatched: {}", fails.join(", "))
    };
    outcome(fails.is_empty(), detail)
}

fn c6_report() -> Result<String> {
    Ok(counterexample_report(&[10, 14, 50], CROSSOVER_CEILING, &spexlab::family::Caps::default())?.to_json())
}

fn c6() -> Result<Outcome> {
    let r = counterexample_report(&[10, 14, 50], CROSSOVER_CEILING, &spexlab::family::Caps::default())?;
    let free = r.spots.iter().filter(|s| s.n <= 14).all(|s| s.g_free == Some(true) && s.h_free == Some(true));
    let cross = r.sweep.first.as_ref();
    let pass = r.exact_ok() && free && cross.is_some_and(|c| c.edge_difference == 1 && c.sign_p_g < 0 && c.sign_p_h > 0);
    let detail = match cross {
        Some(c) => format!(
            "matrices and polynomials exact at n = 10, 14, 50; both free at 10, 14; first crossover n = {} (x = {:.6}, e(H) - e(G) = {})",
            c.n, c.test_point_f64, c.edge_difference
        ),
        None => format!("no crossover up to {CROSSOVER_CEILING}"),
    };
    outcome(pass, detail)
}

fn c7() -> Result<Outcome> {
    let counts = (4..=7).map(tree_edge_counts).collect::<Result<Vec<_>>>()?;
    let pass = counts.iter().all(|c| c.holds());
    let n7 = &counts[3];
    outcome(pass, format!("exact for n = 4..7 (n = 7: {} / {} / {})", n7.n_ij, n7.n_ij_ik, n7.n_ij_kl))
}

fn c8() -> Result<Outcome> {
    let exact = tree_stats(4, 0, TREE_SEED, TreeMode::Exhaustive)?;
    let sampled = [8, 16, 32, 64]
        .iter()
        .map(|&m| tree_stats(m, TREE_SAMPLES, TREE_SEED, TreeMode::Sample))
        .collect::<Result<Vec<_>>>()?;
    let trend = trend_nondecreasing(&sampled);
    let pass = exact.exhaustive && exact.samples == 16 && exact.half_width == 0.0 && trend;
    let fr: Vec<String> = sampled.iter().map(|s| format!("{:.4}+-{:.4}", s.fraction, s.half_width)).collect();
    outcome(pass, format!("m=4 exact {}/16; m = 8,16,32,64: {}", exact.good_count, fr.join(", ")))
}

fn join_graph(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let a = rng.gen_range(1..=8);
        let left = if rng.gen_bool(0.5) { Graph::complete(a) } else { Graph::empty(a) };
        let c = rng.gen_range(1..=12);
        let piece = match rng.gen_range(0..5) {
            0 => Graph::complete(rng.gen_range(1..=6)),
            1 => Graph::star(rng.gen_range(1..=5)),
            2 => Graph::cycle(rng.gen_range(3..=8)),
            3 => Graph::complete_bipartite(rng.gen_range(1..=3), rng.gen_range(1..=4)),
            _ => Graph::path(rng.gen_range(2..=6)),
        };
        let right = piece.repeat(c).disjoint_union(&Graph::empty(rng.gen_range(0..=5)));
        let g = left.join(&right);
        if g.order() <= JOIN_MAX_ORDER {
            return g;
        }
    }
}

fn c9() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst: f64 = 0.0;
    let mut largest = 0;
    for _ in 0..JOIN_GRAPHS {
        let g = join_graph(&mut rng);
        largest = largest.max(g.order());
        let cells = equitable_partition(&g, &[(0..g.order()).collect()])?;
        let root = max_real_root(&char_poly(&quotient(&g, &cells)?), -1.0)?;
        let l = spectral_radius_with(&g, 0.0, &EigenOptions::default())?.lambda;
        worst = worst.max((root - l).abs());
    }
    outcome(worst <= TOL_QUOTIENT, format!("{JOIN_GRAPHS} joins up to order {largest}, worst |quotient - graph| = {worst:.1e}"))
}

fn c10() -> Result<Outcome> {
    let render = |w: usize| -> Result<String> {
        let mut s = String::new();
        for r in c4_reports(w)?.iter().chain(c5_reports(w)?.iter()) {
            s.push_str(&r.to_json());
        }
        s.push_str(&c6_report()?);
        Ok(s)
    };
    let first = render(1)?;
    let again = render(1)?;
    let wide = render(4)?;
    outcome(first == again && first == wide, format!("{} bytes identical across two runs and workers 1, 4", first.len()))
}

type Check = Box<dyn FnOnce() -> Result<Outcome>>;

fn main() {
    let criteria: Vec<(&str, Duration, Check)> = vec![
        ("bipartite radii", Duration::from_secs(1), Box::new(c1)),
        ("eigensolver vs characteristic polynomial", Duration::from_secs(60), Box::new(c2)),
        ("alpha bounds", Duration::from_secs(60), Box::new(c3)),
        ("matchings M4 by enumeration", Duration::from_secs(600), Box::new(|| c4(&c4_reports(0)?))),
        ("restricted extremal shapes", Duration::from_secs(300), Box::new(|| c5(&c5_reports(0)?))),
        ("seven-item counterexample", Duration::from_secs(120), Box::new(c6)),
        ("tree completion counts", Duration::from_secs(120), Box::new(c7)),
        ("good-tree statistics", Duration::from_secs(600), Box::new(c8)),
        ("equitable quotients of joins", Duration::from_secs(60), Box::new(c9)),
        ("determinism", Duration::from_secs(1800), Box::new(c10)),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let (pass, detail) = match result {
            Ok(o) => (o.pass && took <= budget, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name}: {detail} [{:.2}s, budget {}s]",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {} of 10 passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
