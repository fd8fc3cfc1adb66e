use serde::Serialize;

use crate::density::core_numbers;
use crate::difference::DifferenceGraph;

/// Upper bound on the affinity of any positive clique containing `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InitBound {
    pub vertex: usize,
    /// Largest positive weight on an edge touching the closed neighborhood.
    pub w_u: f64,
    /// Core number in the positive part.
    pub tau_u: u32,
    pub mu_u: f64,
}

/// Bounds for every vertex, by decreasing `mu_u` with ties to the smaller id.
pub fn smart_init_order(gd: &DifferenceGraph) -> Vec<InitBound> {
    let plus = gd.positive();
    let n = plus.vertex_count();
    let heaviest: Vec<f64> = (0..n)
        .map(|u| {
            plus.neighbors(u)
                .iter()
                .map(|&(_, w)| w)
                .fold(0.0, f64::max)
        })
        .collect();
    let cores = core_numbers(plus);
    let mut bounds: Vec<InitBound> = (0..n)
        .map(|u| {
            let w_u = plus
                .neighbors(u)
                .iter()
                .map(|&(v, _)| heaviest[v])
                .fold(heaviest[u], f64::max);
            let tau_u = cores[u];
            let t = f64::from(tau_u);
            InitBound {
                vertex: u,
                w_u,
                tau_u,
                mu_u: t * w_u / (t + 1.0),
            }
        })
        .collect();
    bounds.sort_by(|a, b| b.mu_u.total_cmp(&a.mu_u).then(a.vertex.cmp(&b.vertex)));
    bounds
}
