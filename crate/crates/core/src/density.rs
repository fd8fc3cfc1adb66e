//! Density measures of vertex subsets and related structural queries.
//!
//! `W(S)` throughout is the *total degree* of `S` inside its induced
//! subgraph: every undirected edge with both endpoints in `S` contributes its
//! weight twice. The average degree is `W(S) / |S|` and the edge density is
//! `W(S) / |S|^2`.

use std::collections::VecDeque;

use crate::difference::DifferenceGraph;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Membership mask for `s`, validating ids and rejecting the empty set.
fn mask(g: &WeightedGraph, s: &[usize]) -> Result<(Vec<bool>, usize)> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut m = vec![false; g.vertex_count()];
    let mut size = 0;
    for &u in s {
        g.check_vertex(u)?;
        if !m[u] {
            m[u] = true;
            size += 1;
        }
    }
    Ok((m, size))
}

/// Total degree `W(S)` of the induced subgraph.
pub fn total_degree(g: &WeightedGraph, s: &[usize]) -> Result<f64> {
    let (m, _) = mask(g, s)?;
    Ok(total_degree_masked(g, s, &m))
}

fn total_degree_masked(g: &WeightedGraph, s: &[usize], m: &[bool]) -> f64 {
    let mut seen = vec![false; m.len()];
    let mut half = 0.0;
    for &u in s {
        if std::mem::replace(&mut seen[u], true) {
            continue;
        }
        for &(v, w) in g.neighbors(u) {
            if u < v && m[v] {
                half += w;
            }
        }
    }
    2.0 * half
}

pub fn average_degree(g: &WeightedGraph, s: &[usize]) -> Result<f64> {
    let (m, size) = mask(g, s)?;
    Ok(total_degree_masked(g, s, &m) / size as f64)
}

pub fn edge_density(g: &WeightedGraph, s: &[usize]) -> Result<f64> {
    let (m, size) = mask(g, s)?;
    Ok(total_degree_masked(g, s, &m) / (size * size) as f64)
}

/// `rho_D(S)`, the average-degree difference of `S`.
pub fn average_degree_diff(gd: &DifferenceGraph, s: &[usize]) -> Result<f64> {
    average_degree(gd.graph(), s)
}

/// `W_D(S) / |S|^2`.
pub fn edge_density_diff(gd: &DifferenceGraph, s: &[usize]) -> Result<f64> {
    edge_density(gd.graph(), s)
}

/// Components of the subgraph induced by `s`, where an edge of either sign
/// connects. Each component is sorted and the list is ordered by smallest
/// member.
pub fn components(g: &WeightedGraph, s: &[usize]) -> Result<Vec<Vec<usize>>> {
    let (m, _) = mask(g, s)?;
    let mut sorted: Vec<usize> = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut visited = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for &root in &sorted {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        queue.push_back(root);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for &(v, _) in g.neighbors(u) {
                if m[v] && !visited[v] {
                    visited[v] = true;
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    Ok(out)
}

pub fn connected_components(gd: &DifferenceGraph, s: &[usize]) -> Result<Vec<Vec<usize>>> {
    components(gd.graph(), s)
}

/// True when every pair of `s` is joined by a positive edge. A single vertex
/// counts as a clique.
pub fn is_positive_clique(g: &WeightedGraph, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(k, &u)| s[k + 1..].iter().all(|&v| u != v && g.weight(u, v) > 0.0))
}

/// Unweighted core numbers by bucket peeling (Batagelj-Zaversnik). Weights
/// are ignored; only the topology matters.
pub fn core_numbers(g: &WeightedGraph) -> Vec<u32> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut degree: Vec<usize> = (0..n).map(|u| g.neighbors(u).len()).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);

    // bin[d] = start of the block of vertices with current degree d
    let mut bin = vec![0usize; max_deg + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut order = vec![0usize; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for u in 0..n {
            pos[u] = next[degree[u]];
            order[pos[u]] = u;
            next[degree[u]] += 1;
        }
    }

    for i in 0..n {
        let u = order[i];
        for &(v, _) in g.neighbors(u) {
            if degree[v] > degree[u] {
                let dv = degree[v];
                let pv = pos[v];
                let pw = bin[dv];
                let w = order[pw];
                if v != w {
                    order.swap(pv, pw);
                    pos[v] = pw;
                    pos[w] = pv;
                }
                bin[dv] += 1;
                degree[v] -= 1;
            }
        }
    }
    degree.into_iter().map(|d| d as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn fixture_t() -> DifferenceGraph {
        DifferenceGraph::from_graph(parse_edge_list("1 2 2\n2 3 2\n1 3 -1").unwrap())
    }

    fn clique(k: usize) -> WeightedGraph {
        let mut e = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                e.push((u, v, 1.0));
            }
        }
        WeightedGraph::from_id_edges(k, &e).unwrap()
    }

    #[test]
    fn average_degree_examples() {
        let e = DifferenceGraph::from_graph(parse_edge_list("a b 3\nc").unwrap());
        assert_eq!(average_degree_diff(&e, &[0, 1]).unwrap(), 3.0);
        assert_eq!(average_degree_diff(&e, &[0]).unwrap(), 0.0);
        assert_eq!(average_degree_diff(&fixture_t(), &[0, 1, 2]).unwrap(), 2.0);
        assert!(matches!(average_degree_diff(&e, &[]), Err(Error::EmptySet)));
    }

    #[test]
    fn edge_density_examples() {
        let e = DifferenceGraph::from_graph(parse_edge_list("a b 3").unwrap());
        assert_eq!(edge_density_diff(&e, &[0, 1]).unwrap(), 1.5);
        let t = edge_density_diff(&fixture_t(), &[0, 1, 2]).unwrap();
        assert!((t - 2.0 / 3.0).abs() < 1e-15);
        let empty = DifferenceGraph::from_graph(WeightedGraph::from_id_edges(4, &[]).unwrap());
        assert_eq!(edge_density_diff(&empty, &[0, 1, 2, 3]).unwrap(), 0.0);
    }

    #[test]
    fn duplicate_members_count_once() {
        let t = fixture_t();
        assert_eq!(average_degree_diff(&t, &[0, 1, 1, 0]).unwrap(), 2.0);
    }

    #[test]
    fn components_examples() {
        let t = fixture_t();
        assert_eq!(
            connected_components(&t, &[2, 0, 1]).unwrap(),
            vec![vec![0, 1, 2]]
        );
        let path = DifferenceGraph::from_graph(parse_edge_list("1 2 1\n2 3 1").unwrap());
        assert_eq!(
            connected_components(&path, &[0, 2]).unwrap(),
            vec![vec![0], vec![2]]
        );
        let two = DifferenceGraph::from_graph(parse_edge_list("a b 1\nc d 2").unwrap());
        assert_eq!(
            connected_components(&two, &[3, 2, 1, 0]).unwrap(),
            vec![vec![0, 1], vec![2, 3]]
        );
    }

    #[test]
    fn positive_clique_check() {
        let t = fixture_t();
        assert!(!is_positive_clique(t.graph(), &[0, 1, 2]));
        assert!(is_positive_clique(t.graph(), &[0, 1]));
        assert!(is_positive_clique(t.graph(), &[2]));
        assert!(!is_positive_clique(t.graph(), &[0, 2]));
    }

    #[test]
    fn core_number_examples() {
        assert_eq!(core_numbers(&clique(4)), vec![3, 3, 3, 3]);
        let path = parse_edge_list("a b 1\nb c 1").unwrap();
        assert_eq!(core_numbers(&path), vec![1, 1, 1]);
        let mut e = vec![(0, 4, 1.0)];
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v, 1.0));
            }
        }
        let pendant = WeightedGraph::from_id_edges(5, &e).unwrap();
        assert_eq!(core_numbers(&pendant), vec![3, 3, 3, 3, 1]);
        let iso = WeightedGraph::from_id_edges(2, &[]).unwrap();
        assert_eq!(core_numbers(&iso), vec![0, 0]);
    }
}
