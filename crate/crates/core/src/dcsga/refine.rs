use super::descent::{coordinate_descent, global_kkt_residual, pair_update};
use super::{Audit, SolverConfig, Stage};
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Shrinks a KKT point onto a support that is a clique of positive edges
/// without lowering `f`.
///
/// While some support pair `(u, v)` (first in lexicographic order) lacks a
/// positive edge, one of the two is emptied: for `D(u,v) = 0` the mass goes
/// to the vertex with larger `b` (ties to `u`), for `D(u,v) < 0` the pair is
/// re-optimized, which always lands on an endpoint. Coordinate descent then
/// runs on the smaller support.
pub fn refine_to_clique(
    g: &WeightedGraph,
    x: &mut Embedding,
    cfg: &SolverConfig,
    audit: &mut Audit,
) -> Result<()> {
    let residual = global_kkt_residual(g, x);
    let tolerance = cfg.tolerance(x.support_len());
    if residual > tolerance {
        return Err(Error::NotAKktPoint {
            residual,
            tolerance,
        });
    }
    refine_unchecked(g, x, cfg, audit)
}

pub(crate) fn refine_unchecked(
    g: &WeightedGraph,
    x: &mut Embedding,
    cfg: &SolverConfig,
    audit: &mut Audit,
) -> Result<()> {
    while let Some((u, v)) = first_missing_pair(g, &x.support()) {
        let before = x.value();
        let w = g.weight(u, v);
        let (xu, xv) = (x.weight(u), x.weight(v));
        if w == 0.0 {
            if x.dx(u) >= x.dx(v) {
                x.set_pair(g, u, xu + xv, v, 0.0);
            } else {
                x.set_pair(g, u, 0.0, v, xu + xv);
            }
        } else {
            pair_update(g, x, u, v)?;
            if x.in_support(u) && x.in_support(v) {
                force_endpoint(g, x, u, v);
            }
        }
        audit.record(Stage::Refinement, before, x.value());
        let support = x.support();
        coordinate_descent(g, x, &support, cfg, audit)?;
    }
    Ok(())
}

fn first_missing_pair(g: &WeightedGraph, s: &[usize]) -> Option<(usize, usize)> {
    s.iter().enumerate().find_map(|(k, &u)| {
        s[k + 1..]
            .iter()
            .find(|&&v| g.weight(u, v) <= 0.0)
            .map(|&v| (u, v))
    })
}

/// Numerical fallback for a convex pair whose update stopped strictly inside.
fn force_endpoint(g: &WeightedGraph, x: &mut Embedding, u: usize, v: usize) {
    let c = x.weight(u) + x.weight(v);
    let mut to_u = x.clone();
    to_u.set_pair(g, u, c, v, 0.0);
    let mut to_v = x.clone();
    to_v.set_pair(g, u, 0.0, v, c);
    *x = if to_u.value() >= to_v.value() {
        to_u
    } else {
        to_v
    };
}
