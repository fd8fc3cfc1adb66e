//! Sparse points on the probability simplex.

use std::collections::BTreeMap;

use crate::difference::DifferenceGraph;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Tolerance on `sum(x) == 1` for embeddings handed in from outside.
pub const SIMPLEX_TOL: f64 = 1e-12;

/// A point `x` on the simplex, stored on its support only, together with the
/// cached products `(Dx)_u` for every vertex adjacent to the support and the
/// affinity `f(x) = x^T D x`. The caches refer to the graph the embedding was
/// built against.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    weights: BTreeMap<usize, f64>,
    dx: BTreeMap<usize, f64>,
    value: f64,
}

impl Embedding {
    pub fn one_hot(g: &WeightedGraph, u: usize) -> Result<Self> {
        g.check_vertex(u)?;
        Ok(Self::from_map(g, BTreeMap::from([(u, 1.0)])))
    }

    pub fn uniform(g: &WeightedGraph, s: &[usize]) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut set = s.to_vec();
        set.sort_unstable();
        set.dedup();
        let w = 1.0 / set.len() as f64;
        Self::from_weights(g, set.into_iter().map(|u| (u, w)))
    }

    /// Validates non-negative finite weights summing to one (within
    /// [`SIMPLEX_TOL`]); zero entries are dropped from the support.
    pub fn from_weights(
        g: &WeightedGraph,
        weights: impl IntoIterator<Item = (usize, f64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut sum = 0.0;
        for (u, w) in weights {
            g.check_vertex(u)?;
            if !w.is_finite() || w < 0.0 {
                return Err(Error::BadEmbedding(format!("weight {w} on vertex {u}")));
            }
            if map.contains_key(&u) {
                return Err(Error::BadEmbedding(format!("vertex {u} listed twice")));
            }
            sum += w;
            if w > 0.0 {
                map.insert(u, w);
            }
        }
        if (sum - 1.0).abs() > SIMPLEX_TOL {
            return Err(Error::BadEmbedding(format!("weights sum to {sum}")));
        }
        Ok(Self::from_map(g, map))
    }

    pub(crate) fn from_map(g: &WeightedGraph, weights: BTreeMap<usize, f64>) -> Self {
        let mut e = Embedding {
            weights,
            dx: BTreeMap::new(),
            value: 0.0,
        };
        e.recompute(g);
        e
    }

    /// Rebuilds the caches against `g` from the stored weights.
    pub fn recompute(&mut self, g: &WeightedGraph) {
        self.dx.clear();
        for (&u, &xu) in &self.weights {
            for &(v, w) in g.neighbors(u) {
                *self.dx.entry(v).or_insert(0.0) += w * xu;
            }
        }
        self.refresh_value();
    }

    fn refresh_value(&mut self) {
        self.value = self
            .weights
            .iter()
            .map(|(u, &xu)| xu * self.dx.get(u).copied().unwrap_or(0.0))
            .sum();
    }

    /// Same point, caches rebuilt against another graph.
    pub fn rebind(&self, g: &WeightedGraph) -> Embedding {
        Self::from_map(g, self.weights.clone())
    }

    pub fn weight(&self, u: usize) -> f64 {
        self.weights.get(&u).copied().unwrap_or(0.0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.weights.iter().map(|(&u, &w)| (u, w))
    }

    /// Sorted support ids.
    pub fn support(&self) -> Vec<usize> {
        self.weights.keys().copied().collect()
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn in_support(&self, u: usize) -> bool {
        self.weights.contains_key(&u)
    }

    pub fn mass(&self) -> f64 {
        self.weights.values().sum()
    }

    /// Cached `f(x) = x^T D x`.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Cached `(Dx)_u`; zero for vertices not adjacent to the support.
    pub fn dx(&self, u: usize) -> f64 {
        self.dx.get(&u).copied().unwrap_or(0.0)
    }

    /// Cached partial derivative `2 (Dx)_u`.
    pub fn gradient(&self, u: usize) -> f64 {
        2.0 * self.dx(u)
    }

    /// Vertices with a cached `(Dx)_u` entry: the neighborhood of the support.
    pub fn touched(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.dx.iter().map(|(&u, &d)| (u, d))
    }

    pub(crate) fn is_touched(&self, u: usize) -> bool {
        self.dx.contains_key(&u)
    }

    /// Sets `x_i` and `x_j`, updating the caches in
    /// `O(|N(i)| + |N(j)| + |support|)`.
    pub(crate) fn set_pair(&mut self, g: &WeightedGraph, i: usize, xi: f64, j: usize, xj: f64) {
        for (u, new) in [(i, xi), (j, xj)] {
            let old = self.weight(u);
            let delta = new - old;
            if delta == 0.0 {
                continue;
            }
            for &(v, w) in g.neighbors(u) {
                *self.dx.entry(v).or_insert(0.0) += w * delta;
            }
            if new > 0.0 {
                self.weights.insert(u, new);
            } else {
                self.weights.remove(&u);
            }
        }
        self.refresh_value();
    }

    /// Rescales onto the simplex and rebuilds the caches when the mass has
    /// drifted.
    pub(crate) fn normalize(&mut self, g: &WeightedGraph) {
        let m = self.mass();
        if (m - 1.0).abs() > 1e-14 {
            for w in self.weights.values_mut() {
                *w /= m;
            }
            self.recompute(g);
        }
    }
}

/// `f(x) = x^T A x` evaluated from scratch on `g`.
pub fn affinity(g: &WeightedGraph, x: &Embedding) -> f64 {
    x.weights()
        .map(|(u, xu)| {
            xu * g
                .neighbors(u)
                .iter()
                .map(|&(v, w)| w * x.weight(v))
                .sum::<f64>()
        })
        .sum()
}

/// `f_D(x)` on the difference graph; rejects points off the simplex.
pub fn graph_affinity_diff(gd: &DifferenceGraph, x: &Embedding) -> Result<f64> {
    let m = x.mass();
    if (m - 1.0).abs() > SIMPLEX_TOL {
        return Err(Error::BadEmbedding(format!("weights sum to {m}")));
    }
    for (u, _) in x.weights() {
        gd.graph().check_vertex(u)?;
    }
    Ok(affinity(gd.graph(), x))
}
