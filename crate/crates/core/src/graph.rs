//! Undirected graphs with signed edge weights over a dense vertex id space.
//!
//! Vertices carry an external string label and a dense id assigned in
//! first-seen order. Every adjacency list is sorted by neighbor id, holds no
//! self loops, no zero weights and no duplicate neighbors, and each edge is
//! stored in both endpoint lists with the identical weight.

use std::collections::{HashMap, HashSet};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<(usize, f64)>>,
    positive_edges: usize,
    negative_edges: usize,
}

impl WeightedGraph {
    /// Builds a graph over vertices labelled `"0".."n-1"` from id triples.
    pub fn from_id_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.add_vertex(&i.to_string());
        }
        for (k, &(u, v, w)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            b.add_edge_ids(k + 1, u, v, w)?;
        }
        Ok(b.build())
    }

    /// Assembles a graph from per-vertex lists that are already symmetric and
    /// free of zero weights; lists are sorted here.
    pub(crate) fn from_parts(labels: Vec<String>, mut adj: Vec<Vec<(usize, f64)>>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut positive_edges = 0;
        let mut negative_edges = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable_by_key(|&(v, _)| v);
            for &(v, w) in list.iter() {
                if u < v {
                    if w > 0.0 {
                        positive_edges += 1;
                    } else {
                        negative_edges += 1;
                    }
                }
            }
        }
        WeightedGraph {
            labels,
            index,
            adj,
            positive_edges,
            negative_edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.positive_edges + self.negative_edges
    }

    pub fn positive_edge_count(&self) -> usize {
        self.positive_edges
    }

    pub fn negative_edge_count(&self) -> usize {
        self.negative_edges
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn neighbors(&self, u: usize) -> &[(usize, f64)] {
        &self.adj[u]
    }

    /// Weight of `(u, v)`, zero when the pair is not an edge.
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        let list = &self.adj[u];
        match list.binary_search_by_key(&v, |&(x, _)| x) {
            Ok(k) => list[k].1,
            Err(_) => 0.0,
        }
    }

    /// Undirected edges `(u, v, w)` with `u < v`, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    /// Same vertex table, keeping only the positive-weight edges.
    pub fn positive_part(&self) -> WeightedGraph {
        self.map_weights(|w| if w > 0.0 { w } else { 0.0 })
    }

    /// Applies `f` to every weight; edges mapped to zero are dropped.
    pub fn map_weights(&self, f: impl Fn(f64) -> f64) -> WeightedGraph {
        let adj = self
            .adj
            .iter()
            .map(|list| {
                list.iter()
                    .map(|&(v, w)| (v, f(w)))
                    .filter(|&(_, w)| w != 0.0)
                    .collect()
            })
            .collect();
        WeightedGraph::from_parts(self.labels.clone(), adj)
    }

    pub(crate) fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(u))
        }
    }
}

/// Incremental construction with the input-format rules: no duplicate
/// undirected edge, no self loop, finite non-zero weights.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<(usize, f64)>>,
    seen: HashSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.adj.push(Vec::new());
        id
    }

    /// Adds the edge `u v w`; `line` is only used for error reporting.
    pub fn add_edge(&mut self, line: usize, u: &str, v: &str, w: f64) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop {
                line,
                label: u.to_owned(),
            });
        }
        let a = self.add_vertex(u);
        let b = self.add_vertex(v);
        self.add_edge_ids(line, a, b, w)
    }

    fn add_edge_ids(&mut self, line: usize, a: usize, b: usize, w: f64) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop {
                line,
                label: self.labels[a].clone(),
            });
        }
        if !w.is_finite() || w == 0.0 {
            return Err(Error::BadWeight {
                line,
                weight: w.to_string(),
            });
        }
        if !self.seen.insert((a.min(b), a.max(b))) {
            return Err(Error::DuplicateEdge {
                line,
                u: self.labels[a].clone(),
                v: self.labels[b].clone(),
            });
        }
        self.adj[a].push((b, w));
        self.adj[b].push((a, w));
        Ok(())
    }

    pub fn build(self) -> WeightedGraph {
        WeightedGraph::from_parts(self.labels, self.adj)
    }
}

/// Reads the whitespace-separated `u v w` edge-list format. `#` starts a
/// comment; a line holding a single label declares an isolated vertex.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<WeightedGraph> {
    let mut b = GraphBuilder::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = k + 1;
        let content = match line.find('#') {
            Some(p) => &line[..p],
            None => &line[..],
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [u] => {
                b.add_vertex(u);
            }
            [u, v, w] => {
                let weight: f64 = w.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("cannot parse weight `{w}`"),
                })?;
                if !weight.is_finite() || weight == 0.0 {
                    return Err(Error::BadWeight {
                        line: lineno,
                        weight: (*w).to_owned(),
                    });
                }
                b.add_edge(lineno, u, v, weight)?;
            }
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected `u v w`, found {} fields", tokens.len()),
                })
            }
        }
    }
    Ok(b.build())
}

pub fn parse_edge_list(text: &str) -> Result<WeightedGraph> {
    read_edge_list(text.as_bytes())
}

/// Writes one line per undirected edge, lower id first, then one line per
/// isolated vertex. Weights use the shortest representation that parses back
/// to the same `f64`.
pub fn write_edge_list<W: Write>(g: &WeightedGraph, mut out: W) -> std::io::Result<()> {
    for (u, v, w) in g.edges() {
        writeln!(out, "{} {} {}", g.label(u), g.label(v), w)?;
    }
    for u in 0..g.vertex_count() {
        if g.neighbors(u).is_empty() {
            writeln!(out, "{}", g.label(u))?;
        }
    }
    Ok(())
}
