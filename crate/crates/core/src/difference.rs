//! Difference graphs `D = A2 - alpha * A1` and their weight transforms.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// A difference graph together with its positive part.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceGraph {
    gd: WeightedGraph,
    plus: WeightedGraph,
    alpha: f64,
}

/// Summary columns of a difference graph.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub positive_edges: usize,
    pub negative_edges: usize,
    pub max_weight: Option<f64>,
    pub min_weight: Option<f64>,
    pub avg_weight: Option<f64>,
}

impl DifferenceGraph {
    /// Wraps an already-built signed graph (for example one read from disk).
    pub fn from_graph(gd: WeightedGraph) -> Self {
        Self::with_alpha(gd, 1.0)
    }

    fn with_alpha(gd: WeightedGraph, alpha: f64) -> Self {
        let plus = gd.positive_part();
        DifferenceGraph { gd, plus, alpha }
    }

    /// The signed graph `G_D`.
    pub fn graph(&self) -> &WeightedGraph {
        &self.gd
    }

    /// `G_{D+}`: the positive-weight edges of `G_D` over the same vertex ids.
    pub fn positive(&self) -> &WeightedGraph {
        &self.plus
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn vertex_count(&self) -> usize {
        self.gd.vertex_count()
    }

    pub fn into_graph(self) -> WeightedGraph {
        self.gd
    }

    pub fn stats(&self) -> GraphStats {
        let g = &self.gd;
        let mut max_w = f64::NEG_INFINITY;
        let mut min_w = f64::INFINITY;
        let mut sum = NeumaierSum::default();
        for (_, _, w) in g.edges() {
            max_w = max_w.max(w);
            min_w = min_w.min(w);
            sum.add(w);
        }
        let m = g.edge_count();
        let some_if = |x: f64| if m > 0 { Some(x) } else { None };
        GraphStats {
            n: g.vertex_count(),
            positive_edges: g.positive_edge_count(),
            negative_edges: g.negative_edge_count(),
            max_weight: some_if(max_w),
            min_weight: some_if(min_w),
            avg_weight: some_if(sum.value() / m as f64),
        }
    }
}

/// Builds `D(u, v) = A2(u, v) - alpha * A1(u, v)` over the union of both
/// vertex sets. Vertex ids follow `g1`'s labels, then labels new in `g2`.
/// Pairs whose difference is exactly zero are not edges of the result.
pub fn build_difference(g1: &WeightedGraph, g2: &WeightedGraph, alpha: f64) -> DifferenceGraph {
    let mut labels: Vec<String> = g1.labels().to_vec();
    let mut lookup: std::collections::HashMap<&str, usize> = g1
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut g2_to_union = Vec::with_capacity(g2.vertex_count());
    for l in g2.labels() {
        let id = *lookup.entry(l.as_str()).or_insert_with(|| {
            labels.push(l.clone());
            labels.len() - 1
        });
        g2_to_union.push(id);
    }
    let n = labels.len();

    // Each union vertex appears at most once in g2, so invert the map.
    let mut union_to_g2 = vec![usize::MAX; n];
    for (i2, &u) in g2_to_union.iter().enumerate() {
        union_to_g2[u] = i2;
    }

    let mut adj = Vec::with_capacity(n);
    let mut second: Vec<(usize, f64)> = Vec::new();
    for (u, &in_g2) in union_to_g2.iter().enumerate() {
        let first: &[(usize, f64)] = if u < g1.vertex_count() {
            g1.neighbors(u)
        } else {
            &[]
        };
        second.clear();
        if in_g2 != usize::MAX {
            second.extend(
                g2.neighbors(in_g2)
                    .iter()
                    .map(|&(v, w)| (g2_to_union[v], w)),
            );
            second.sort_unstable_by_key(|&(v, _)| v);
        }
        adj.push(merge_difference(first, &second, alpha));
    }
    DifferenceGraph::with_alpha(WeightedGraph::from_parts(labels, adj), alpha)
}

fn merge_difference(a1: &[(usize, f64)], a2: &[(usize, f64)], alpha: f64) -> Vec<(usize, f64)> {
    let mut out = Vec::with_capacity(a1.len() + a2.len());
    let (mut i, mut j) = (0, 0);
    while i < a1.len() || j < a2.len() {
        let (v, w) = match (a1.get(i), a2.get(j)) {
            (Some(&(v1, w1)), Some(&(v2, w2))) if v1 == v2 => {
                i += 1;
                j += 1;
                (v1, w2 - alpha * w1)
            }
            (Some(&(v1, w1)), Some(&(v2, _))) if v1 < v2 => {
                i += 1;
                (v1, -alpha * w1)
            }
            (Some(_), Some(&(v2, w2))) => {
                j += 1;
                (v2, w2)
            }
            (Some(&(v1, w1)), None) => {
                i += 1;
                (v1, -alpha * w1)
            }
            (None, Some(&(v2, w2))) => {
                j += 1;
                (v2, w2)
            }
            (None, None) => unreachable!(),
        };
        if w != 0.0 {
            out.push((v, w));
        }
    }
    out
}

/// One band of a discretizing transform: weights from `lower` upward (up to
/// the next band) map to `weight`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Band {
    pub lower: f64,
    pub inclusive: bool,
    pub weight: f64,
}

impl Band {
    pub fn from(lower: f64, weight: f64) -> Self {
        Band {
            lower,
            inclusive: true,
            weight,
        }
    }

    pub fn above(lower: f64, weight: f64) -> Self {
        Band {
            lower,
            inclusive: false,
            weight,
        }
    }

    fn contains_from(&self, w: f64) -> bool {
        if self.inclusive {
            w >= self.lower
        } else {
            w > self.lower
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum WeightTransform {
    Identity,
    /// Caps weights above `cap`; smaller weights are untouched.
    ClampMax(f64),
    /// Bands ordered by strictly increasing lower bound. Weights below the
    /// first band map to zero.
    Discretize(Vec<Band>),
}

impl WeightTransform {
    /// Co-authorship bands: `>= 5 -> 2`, `[2, 5) -> 1`, `[0, 2) -> 0`,
    /// `(-4, 0) -> -1`, `<= -4 -> -2`.
    pub fn coauthor_bands() -> Self {
        WeightTransform::Discretize(vec![
            Band::from(f64::NEG_INFINITY, -2.0),
            Band::above(-4.0, -1.0),
            Band::from(0.0, 0.0),
            Band::from(2.0, 1.0),
            Band::from(5.0, 2.0),
        ])
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            WeightTransform::Identity => Ok(()),
            WeightTransform::ClampMax(cap) => {
                if cap.is_nan() {
                    Err(Error::BadTransform("clamp cap is NaN".into()))
                } else {
                    Ok(())
                }
            }
            WeightTransform::Discretize(bands) => {
                if bands.is_empty() {
                    return Err(Error::BadTransform("no bands".into()));
                }
                for b in bands {
                    if b.lower.is_nan() || !b.weight.is_finite() {
                        return Err(Error::BadTransform(format!("bad band {b:?}")));
                    }
                }
                for pair in bands.windows(2) {
                    if pair[1].lower <= pair[0].lower {
                        return Err(Error::BadTransform(format!(
                            "bands overlap at {} and {}",
                            pair[0].lower, pair[1].lower
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn apply(&self, w: f64) -> f64 {
        match self {
            WeightTransform::Identity => w,
            WeightTransform::ClampMax(cap) => w.min(*cap),
            WeightTransform::Discretize(bands) => bands
                .iter()
                .rev()
                .find(|b| b.contains_from(w))
                .map_or(0.0, |b| b.weight),
        }
    }
}

pub fn transform_weights(gd: &DifferenceGraph, t: &WeightTransform) -> Result<DifferenceGraph> {
    t.validate()?;
    let g = gd.graph().map_weights(|w| t.apply(w));
    Ok(DifferenceGraph::with_alpha(g, gd.alpha))
}

/// Negates every weight, turning the emerging direction into the
/// disappearing one.
pub fn flip_signs(gd: &DifferenceGraph) -> DifferenceGraph {
    DifferenceGraph::with_alpha(gd.graph().map_weights(|w| -w), gd.alpha)
}

impl fmt::Display for GraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v}"));
        writeln!(
            f,
            "{:>10} {:>10} {:>10} {:>12} {:>12} {:>22}",
            "n", "m+", "m-", "max_w", "min_w", "avg_w"
        )?;
        write!(
            f,
            "{:>10} {:>10} {:>10} {:>12} {:>12} {:>22}",
            self.n,
            self.positive_edges,
            self.negative_edges,
            opt(self.max_weight),
            opt(self.min_weight),
            opt(self.avg_weight)
        )
    }
}

#[derive(Default)]
struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}
