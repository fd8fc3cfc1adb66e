use std::collections::BTreeMap;

use serde::Serialize;

use super::descent::{kkt_residual, ShrinkOutcome};
use super::{check_shrink_set, Audit, SolverConfig, Stage};
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// When the replicator shrink stops.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ReplicatorStop {
    /// Same local KKT test as coordinate descent.
    GradientGap,
    /// Stop once one iteration raises `f` by less than the given amount.
    ObjectiveImprovement(f64),
}

/// Replicator dynamics `x_i <- x_i (Dx)_i / f(x)` on the vertices of `s`.
///
/// Only defined for non-negative weights inside `s`; zero coordinates stay
/// zero, so the support never grows.
pub fn replicator_shrink(
    g: &WeightedGraph,
    x: &mut Embedding,
    s: &[usize],
    cfg: &SolverConfig,
    stop: ReplicatorStop,
    audit: &mut Audit,
) -> Result<ShrinkOutcome> {
    let set = check_shrink_set(g, s)?;
    for &u in &set {
        for &(v, w) in g.neighbors(u) {
            if w < 0.0 && set.binary_search(&v).is_ok() {
                return Err(Error::NegativeWeight { u, v, w });
            }
        }
    }
    let mut residual = kkt_residual(g, x, &set)?;
    if x.value() <= 0.0 {
        return Err(Error::ZeroAffinity);
    }
    let tol = cfg.tolerance(set.len());
    let mut iterations = 0;
    while iterations < cfg.max_shrink_iters {
        if stop == ReplicatorStop::GradientGap && residual <= tol {
            break;
        }
        let f = x.value();
        let mut next: BTreeMap<usize, f64> = x
            .weights()
            .map(|(u, xu)| (u, xu * x.dx(u) / f))
            .filter(|&(_, w)| w > 0.0)
            .collect();
        let mass: f64 = next.values().sum();
        for w in next.values_mut() {
            *w /= mass;
        }
        let candidate = Embedding::from_map(g, next);
        iterations += 1;
        audit.record(Stage::Replicator, f, candidate.value());
        let gain = candidate.value() - f;
        let unchanged = candidate.weights().eq(x.weights());
        *x = candidate;
        residual = kkt_residual(g, x, &set)?;
        if unchanged {
            break;
        }
        if let ReplicatorStop::ObjectiveImprovement(delta) = stop {
            if gain < delta {
                break;
            }
        }
    }
    Ok(ShrinkOutcome {
        iterations,
        converged: residual <= tol,
        residual,
    })
}

/// Shrink stage of the replicator baseline: nothing to do on a single
/// vertex or a point with zero affinity.
pub(crate) fn shrink_for_baseline(
    g: &WeightedGraph,
    x: &mut Embedding,
    s: &[usize],
    cfg: &SolverConfig,
    stop: ReplicatorStop,
    audit: &mut Audit,
) -> Result<()> {
    if x.support_len() <= 1 || x.value() <= 0.0 {
        return Ok(());
    }
    replicator_shrink(g, x, s, cfg, stop, audit).map(|_| ())
}
