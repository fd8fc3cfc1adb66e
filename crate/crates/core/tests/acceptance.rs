//! Acceptance checks. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use dcs::dcsad::{dcs_greedy, greedy_peel};
use dcs::dcsga::{
    new_sea, smart_init_order, InitPolicy, ReplicatorStop, ShrinkMethod, SolverConfig,
};
use dcs::oracle::{oracle_clique_affinity, oracle_dcsad, oracle_dcsga};
use dcs::{DifferenceGraph, WeightedGraph};
use rand::Rng;
use serde_json::Value;

const TOL: f64 = 1e-9;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// 500 signed graphs with `n <= 10`, edge probability 0.5, weights in [-5, 5].
fn small_suite() -> Vec<DifferenceGraph> {
    let mut r = rng(1);
    (0..500)
        .map(|_| {
            let n = r.gen_range(2..=10);
            random_gd(&mut r, n, 0.5, -5.0, 5.0)
        })
        .collect()
}

/// Signed graphs with `n <= 12` for the seed-order comparison.
fn twelve_suite() -> Vec<DifferenceGraph> {
    let mut r = rng(7);
    (0..300)
        .map(|_| {
            let n = r.gen_range(4..=12);
            random_gd(&mut r, n, 0.5, -5.0, 5.0)
        })
        .collect()
}

/// 200 signed graphs with up to 200 vertices and varying density.
fn large_suite() -> Vec<DifferenceGraph> {
    let mut r = rng(4);
    (0..200)
        .map(|_| {
            let n = r.gen_range(10..=200);
            let degree: f64 = r.gen_range(3.0..20.0);
            let p = (degree / n as f64).min(1.0);
            random_gd(&mut r, n, p, -5.0, 5.0)
        })
        .collect()
}

fn planted_suite() -> Vec<(usize, DifferenceGraph)> {
    let mut r = rng(3);
    let mut out = Vec::new();
    for k in 3..=8 {
        out.push((k, DifferenceGraph::from_graph(clique(k))));
        for _ in 0..3 {
            out.push((
                k,
                DifferenceGraph::from_graph(planted_clique(&mut r, k, 40, 0.1)),
            ));
        }
    }
    out
}

fn c1_dcsad_soundness() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut failures = 0;
    for gd in small_suite() {
        let r = dcs_greedy(&gd).unwrap();
        let opt = oracle_dcsad(&gd, 15).unwrap().optimum_value;
        let brute = brute_max_average_degree(gd.graph()).max(0.0);
        let mut ok = (opt - brute).abs() <= TOL && r.density <= opt + TOL;
        if r.density > 0.0 {
            let beta = r.ratio_beta.unwrap();
            ok &= opt <= beta * r.density + TOL;
            worst = worst.max(opt / r.density);
        }
        failures += usize::from(!ok);
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        failures == 0 && secs < 60.0,
        format!("500 graphs, {failures} failures, worst oracle/greedy {worst:.4}, {secs:.2}s"),
    )
}

fn c2_charikar() -> Outcome {
    let mut worst = f64::INFINITY;
    let mut failures = 0;
    for gd in small_suite() {
        let plus = DifferenceGraph::from_graph(gd.positive().clone());
        let peel = greedy_peel(plus.graph()).unwrap().density;
        let opt = oracle_dcsad(&plus, 15).unwrap().optimum_value;
        if opt > 0.0 {
            worst = worst.min(peel / opt);
        }
        failures += usize::from(peel < 0.5 * opt - TOL);
    }
    outcome(
        failures == 0,
        format!("500 graphs, {failures} failures, worst peel/oracle {worst:.4}"),
    )
}

fn c3_motzkin_straus() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for (k, gd) in planted_suite() {
        let r = new_sea(&gd, &SolverConfig::default()).unwrap();
        let target = 1.0 - 1.0 / k as f64;
        let err = (r.affinity - target).abs();
        worst = worst.max(err);
        let x = &r.embedding;
        let support = x.support();
        let uniform = x.weights().all(|(_, w)| (w - 1.0 / k as f64).abs() <= 1e-6);
        if err > 1e-6 || support.len() != k || !uniform || !positive_clique(gd.graph(), &support) {
            failures.push(k);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        failures.is_empty() && secs < 10.0,
        format!("k=3..8, 24 instances, max |f - (1-1/k)| {worst:.2e}, failures {failures:?}, {secs:.2}s"),
    )
}

fn c4_certificates() -> Outcome {
    let cfg = SolverConfig::default();
    let mut failures = 0;
    let mut worst_ratio = 0.0f64;
    for gd in large_suite() {
        let r = new_sea(&gd, &cfg).unwrap();
        let support = r.embedding.support();
        let tol = cfg.tolerance(support.len());
        let residual = independent_residual(gd.graph(), &r.embedding);
        worst_ratio = worst_ratio.max(residual / tol);
        if residual > tol || !positive_clique(gd.graph(), &support) {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("200 graphs, {failures} failures, worst residual/tolerance {worst_ratio:.3}"),
    )
}

/// Global KKT residual recomputed densely from the edge list.
fn independent_residual(g: &WeightedGraph, x: &dcs::Embedding) -> f64 {
    let n = g.vertex_count();
    let dense: Vec<f64> = (0..n).map(|u| x.weight(u)).collect();
    let grad: Vec<f64> = (0..n)
        .map(|u| {
            2.0 * g
                .neighbors(u)
                .iter()
                .map(|&(v, w)| w * dense[v])
                .sum::<f64>()
        })
        .collect();
    let hi = (0..n)
        .filter(|&u| dense[u] < 1.0)
        .map(|u| grad[u])
        .fold(f64::NEG_INFINITY, f64::max);
    let lo = (0..n)
        .filter(|&u| dense[u] > 0.0)
        .map(|u| grad[u])
        .fold(f64::INFINITY, f64::min);
    if hi.is_finite() {
        (hi - lo).max(0.0)
    } else {
        0.0
    }
}

fn c5_monotonicity() -> Outcome {
    let cfg = SolverConfig::default();
    let mut steps = 0u64;
    let mut violations = 0usize;
    let suites = small_suite()
        .into_iter()
        .chain(twelve_suite())
        .chain(large_suite())
        .chain(planted_suite().into_iter().map(|p| p.1));
    for gd in suites {
        for policy in [InitPolicy::SmartOrder, InitPolicy::AllVertices] {
            let cfg = SolverConfig {
                init_policy: policy,
                ..cfg.clone()
            };
            let r = new_sea(&gd, &cfg).unwrap();
            steps += r.audit.steps;
            violations += r.audit.violations.len();
        }
    }
    outcome(
        violations == 0,
        format!("{steps} audited steps, {violations} violations"),
    )
}

fn c6_bound() -> Outcome {
    let mut r = rng(6);
    let mut checks = 0;
    let mut failures = 0;
    let mut tightest = f64::INFINITY;
    for _ in 0..100 {
        let n = r.gen_range(3..=12);
        let gd = random_gd(&mut r, n, 0.5, 0.1, 5.0);
        let bounds = smart_init_order(&gd);
        let mut mu = vec![0.0; n];
        for b in &bounds {
            mu[b.vertex] = b.mu_u;
        }
        for c in maximal_positive_cliques(gd.graph()) {
            let value = oracle_clique_affinity(&gd, &c).unwrap();
            for &u in &c {
                checks += 1;
                tightest = tightest.min(mu[u] - value);
                failures += usize::from(value > mu[u] + TOL);
            }
        }
    }
    outcome(
        failures == 0,
        format!("{checks} (vertex, maximal clique) pairs, {failures} failures, min slack {tightest:.3e}"),
    )
}

fn c7_smart_init() -> Outcome {
    let mut mismatches = 0;
    let mut more = 0;
    let mut fewer = 0;
    let suite = twelve_suite();
    for gd in &suite {
        let smart = new_sea(gd, &SolverConfig::default()).unwrap();
        let all = new_sea(
            gd,
            &SolverConfig {
                init_policy: InitPolicy::AllVertices,
                ..SolverConfig::default()
            },
        )
        .unwrap();
        let exact = oracle_dcsga(gd, 12).unwrap().optimum_value;
        mismatches += usize::from((smart.affinity - all.affinity).abs() > TOL);
        mismatches += usize::from(smart.affinity > exact + TOL);
        more += usize::from(smart.inits_used > all.inits_used);
        fewer += usize::from(smart.inits_used < all.inits_used);
    }
    let share = fewer as f64 / suite.len() as f64;
    outcome(
        mismatches == 0 && more == 0 && share >= 0.5,
        format!(
            "{} graphs, {mismatches} value mismatches, smart used more seeds {more} times, fewer in {:.0}%",
            suite.len(),
            100.0 * share
        ),
    )
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dcs"))
        .args(args)
        .output()
        .expect("spawn dcs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn c8_fixture_end_to_end() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    fs::write(p("g1.txt"), "1 2 1\n2 3 1\n1 3 1\n").unwrap();
    fs::write(p("g2.txt"), "1 2 3\n2 3 3\n").unwrap();
    let mut problems = Vec::new();

    let (code, _) = run_cli(&[
        "diff",
        "--g1",
        &p("g1.txt"),
        "--g2",
        &p("g2.txt"),
        "--output",
        &p("gd.txt"),
    ]);
    if code != 0 {
        problems.push(format!("diff exit {code}"));
    }
    let report = |args: &[&str]| -> Value {
        let (code, out) = run_cli(args);
        assert_eq!(code, 0, "{args:?}");
        serde_json::from_str::<Value>(&out).unwrap()["result"].clone()
    };
    let gd = p("gd.txt");
    let ad = report(&["dcsad", &gd]);
    let ga = report(&["dcsga", &gd]);
    let oad = report(&["oracle", &gd, "--measure", "ad"]);
    let oga = report(&["oracle", &gd, "--measure", "ga"]);

    let close = |v: &Value, x: f64| (v.as_f64().unwrap() - x).abs() <= TOL;
    if ad["vertices"] != serde_json::json!(["1", "2"]) || !close(&ad["density"], 2.0) {
        problems.push(format!("dcsad {ad}"));
    }
    if !close(&ad["ratio_beta"], 8.0 / 3.0) {
        problems.push(format!("beta {}", ad["ratio_beta"]));
    }
    let support: Vec<(String, f64)> = serde_json::from_value(ga["support"].clone()).unwrap();
    let labels: Vec<&str> = support.iter().map(|s| s.0.as_str()).collect();
    if !close(&ga["affinity_diff"], 1.0)
        || labels != ["1", "2"]
        || support.iter().any(|s| (s.1 - 0.5).abs() > TOL)
        || ga["is_positive_clique"] != Value::Bool(true)
    {
        problems.push(format!("dcsga {ga}"));
    }
    if !close(&oad["optimum_value"], 2.0) || !close(&oga["optimum_value"], 1.0) {
        problems.push(format!(
            "oracle {} {}",
            oad["optimum_value"], oga["optimum_value"]
        ));
    }
    outcome(
        problems.is_empty(),
        if problems.is_empty() {
            "S={1,2}, rho=2, beta=8/3; f=1 on {1,2}; oracle 2 and 1".to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn synthetic(m: usize, seed: u64) -> DifferenceGraph {
    let n = m / 5;
    let mut r = rng(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = r.gen_range(0..n);
        let v = r.gen_range(0..n);
        if u == v || !seen.insert((u.min(v), u.max(v))) {
            continue;
        }
        let w: f64 = r.gen_range(-5.0..5.0);
        if w != 0.0 {
            edges.push((u, v, w));
        }
    }
    DifferenceGraph::from_graph(WeightedGraph::from_id_edges(n, &edges).unwrap())
}

fn median_time(gd: &DifferenceGraph, runs: usize) -> Duration {
    let mut times: Vec<Duration> = (0..runs)
        .map(|_| {
            let start = Instant::now();
            dcs_greedy(gd).unwrap();
            start.elapsed()
        })
        .collect();
    times.sort();
    times[runs / 2]
}

fn c9_scalability() -> Outcome {
    let t4 = median_time(&synthetic(10_000, 91), 7).as_secs_f64();
    let t5 = median_time(&synthetic(100_000, 92), 5).as_secs_f64();
    let t6 = median_time(&synthetic(1_000_000, 93), 1).as_secs_f64();
    let (r54, r65) = (t5 / t4, t6 / t5);
    outcome(
        t6 < 30.0 && r54 < 30.0 && r65 < 30.0,
        format!(
            "1e4: {:.1}ms, 1e5: {:.1}ms, 1e6: {:.1}ms, growth x{r54:.1} and x{r65:.1} per 10x edges",
            t4 * 1e3,
            t5 * 1e3,
            t6 * 1e3
        ),
    )
}

/// Heavy 6-clique with three lighter vertices joined to everything.
fn dense_contrast_instance() -> DifferenceGraph {
    let (k, n) = (6, 9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let w = if v < k {
                100.0
            } else {
                40.0 + ((u * 7 + v * 3) % 5) as f64
            };
            edges.push((u, v, w));
        }
    }
    DifferenceGraph::from_graph(WeightedGraph::from_id_edges(n, &edges).unwrap())
}

fn c10_baseline_contrast() -> Outcome {
    let gd = dense_contrast_instance();
    let run = |shrink| {
        new_sea(
            &gd,
            &SolverConfig {
                shrink,
                init_policy: InitPolicy::AllVertices,
                ..SolverConfig::default()
            },
        )
        .unwrap()
    };
    let cd = run(ShrinkMethod::CoordinateDescent);
    let rep = run(ShrinkMethod::Replicator(
        ReplicatorStop::ObjectiveImprovement(1e-6),
    ));
    outcome(
        rep.audit.guard_rejections >= 1 && cd.audit.guard_rejections == 0,
        format!(
            "guard rejections: replicator {} (f={:.9}, converged {}), coordinate descent {} (f={:.9})",
            rep.audit.guard_rejections,
            rep.affinity,
            rep.converged,
            cd.audit.guard_rejections,
            cd.affinity
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 dcsad oracle soundness", c1_dcsad_soundness),
        ("2 peeling half-approximation", c2_charikar),
        ("3 planted clique exactness", c3_motzkin_straus),
        ("4 KKT and clique certificates", c4_certificates),
        ("5 monotonicity audit", c5_monotonicity),
        ("6 affinity bound", c6_bound),
        ("7 smart seed order fidelity", c7_smart_init),
        ("8 fixture end to end", c8_fixture_end_to_end),
        ("9 peeling scalability", c9_scalability),
        ("10 replicator baseline contrast", c10_baseline_contrast),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let o = check();
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
