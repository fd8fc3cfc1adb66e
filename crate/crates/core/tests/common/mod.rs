//! Instance generators and brute-force references shared by the test targets.
#![allow(dead_code)]

use dcs::{DifferenceGraph, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi graph with weights uniform in `[lo, hi]` (zero draws skipped).
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, lo: f64, hi: f64) -> WeightedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let w: f64 = rng.gen_range(lo..=hi);
                if w != 0.0 {
                    edges.push((u, v, w));
                }
            }
        }
    }
    WeightedGraph::from_id_edges(n, &edges).unwrap()
}

pub fn random_gd(rng: &mut impl Rng, n: usize, p: f64, lo: f64, hi: f64) -> DifferenceGraph {
    DifferenceGraph::from_graph(random_graph(rng, n, p, lo, hi))
}

/// Unit-weight clique on `0..k`.
pub fn clique(k: usize) -> WeightedGraph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v, 1.0));
        }
    }
    WeightedGraph::from_id_edges(k, &edges).unwrap()
}

/// Unit clique on `0..k` plus `noise` vertices. Noise carries unit edges
/// between its two halves only, so it has no triangles, and each clique
/// vertex gets a few `-1` edges into the noise.
pub fn planted_clique(rng: &mut impl Rng, k: usize, noise: usize, p: f64) -> WeightedGraph {
    let n = k + noise;
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v, 1.0));
        }
    }
    let half = k + noise / 2;
    for u in k..half {
        for v in half..n {
            if rng.gen_bool(p) {
                edges.push((u, v, 1.0));
            }
        }
    }
    for u in 0..k {
        for v in k..n {
            if rng.gen_bool(p) {
                edges.push((u, v, -1.0));
            }
        }
    }
    WeightedGraph::from_id_edges(n, &edges).unwrap()
}

pub fn edge_sum(g: &WeightedGraph, s: &[usize]) -> f64 {
    let mut total = 0.0;
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            total += g.weight(u, v);
        }
    }
    total
}

/// Largest `2 W(S) / |S|` over all non-empty subsets, by plain enumeration.
pub fn brute_max_average_degree(g: &WeightedGraph) -> f64 {
    let n = g.vertex_count();
    let mut best = f64::NEG_INFINITY;
    for mask in 1u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        best = best.max(2.0 * edge_sum(g, &s) / s.len() as f64);
    }
    best
}

/// `x^T A x` for a dense vector.
pub fn quad(g: &WeightedGraph, x: &[f64]) -> f64 {
    let mut f = 0.0;
    for (u, &xu) in x.iter().enumerate() {
        for &(v, w) in g.neighbors(u) {
            f += xu * w * x[v];
        }
    }
    f
}

/// Every maximal clique of the positive edges (Bron-Kerbosch with pivoting).
pub fn maximal_positive_cliques(g: &WeightedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && g.weight(u, v) > 0.0).collect())
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&adj, Vec::new(), (0..n).collect(), Vec::new(), &mut out);
    out
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut c = r;
        c.sort_unstable();
        out.push(c);
        return;
    }
    let pivot = *p
        .iter()
        .chain(&x)
        .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let mut p = p;
    let mut x = x;
    for v in p.clone() {
        if adj[pivot][v] {
            continue;
        }
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let x2 = x.iter().copied().filter(|&w| adj[v][w]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// True when every support pair carries a positive edge.
pub fn positive_clique(g: &WeightedGraph, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.weight(u, v) > 0.0))
}
