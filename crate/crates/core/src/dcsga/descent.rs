use serde::Serialize;

use super::{check_shrink_set, Audit, SolverConfig, Stage};
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// `df/dx_u = 2 (Dx)_u`, evaluated from the adjacency of `u`.
pub fn gradient(g: &WeightedGraph, x: &Embedding, u: usize) -> f64 {
    2.0 * g
        .neighbors(u)
        .iter()
        .map(|&(v, w)| w * x.weight(v))
        .sum::<f64>()
}

/// `max(0, max_{k in s, x_k < 1} grad_k - min_{k in s, x_k > 0} grad_k)`.
/// Zero means `x` is a KKT point restricted to `s`. Uses the cached
/// gradients of `x`.
pub fn kkt_residual(g: &WeightedGraph, x: &Embedding, s: &[usize]) -> Result<f64> {
    let set = check_shrink_set(g, s)?;
    for u in x.support() {
        if set.binary_search(&u).is_err() {
            return Err(Error::BadEmbedding(format!(
                "support vertex {u} lies outside the shrink set"
            )));
        }
    }
    Ok(residual_on(x, &set))
}

fn residual_on(x: &Embedding, set: &[usize]) -> f64 {
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for &k in set {
        let xk = x.weight(k);
        let gk = x.gradient(k);
        if xk < 1.0 {
            hi = hi.max(gk);
        }
        if xk > 0.0 {
            lo = lo.min(gk);
        }
    }
    if hi == f64::NEG_INFINITY || lo == f64::INFINITY {
        return 0.0;
    }
    (hi - lo).max(0.0)
}

/// [`kkt_residual`] over every vertex, computed in time proportional to the
/// neighborhood of the support.
pub fn global_kkt_residual(g: &WeightedGraph, x: &Embedding) -> f64 {
    let mut hi = f64::NEG_INFINITY;
    let mut covered = 0usize;
    for (u, d) in x.touched() {
        covered += 1;
        if x.weight(u) < 1.0 {
            hi = hi.max(2.0 * d);
        }
    }
    for (u, xu) in x.weights() {
        if !x.is_touched(u) {
            covered += 1;
            if xu < 1.0 {
                hi = hi.max(0.0);
            }
        }
    }
    if covered < g.vertex_count() {
        // some vertex has zero gradient and zero weight
        hi = hi.max(0.0);
    }
    let lo = x
        .weights()
        .map(|(u, _)| x.gradient(u))
        .fold(f64::INFINITY, f64::min);
    if hi == f64::NEG_INFINITY || lo == f64::INFINITY {
        return 0.0;
    }
    (hi - lo).max(0.0)
}

/// Optimizes `f` over the pair `(x_i, x_j)` with `x_i + x_j` held fixed.
///
/// With `b_i = (Dx)_i - D(i,j) x_j` (and `b_j` symmetric) the objective as a
/// function of `x_i` is `g(t) = -D(i,j) t^2 + B t + const` where
/// `B = D(i,j) C + b_i - b_j`. The maximizer over `[0, C]` is taken among the
/// endpoints and the stationary point `B / (2 D(i,j))`; ties go to the larger
/// `x_i`. When `D(i,j) = 0` all mass moves to the side with larger `b`, and
/// nothing changes if they are equal.
pub fn two_coord_update(g: &WeightedGraph, x: &mut Embedding, i: usize, j: usize) -> Result<()> {
    pair_update(g, x, i, j).map(|_| ())
}

/// Returns whether `x` changed.
pub(crate) fn pair_update(
    g: &WeightedGraph,
    x: &mut Embedding,
    i: usize,
    j: usize,
) -> Result<bool> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if i == j {
        return Ok(false);
    }
    let (xi, xj) = (x.weight(i), x.weight(j));
    let c = xi + xj;
    if c <= 0.0 {
        return Err(Error::NoMass);
    }
    let dij = g.weight(i, j);
    let bi = x.dx(i) - dij * xj;
    let bj = x.dx(j) - dij * xi;

    let new_xi = if dij == 0.0 {
        if bi > bj {
            c
        } else if bi < bj {
            0.0
        } else {
            return Ok(false);
        }
    } else {
        let big_b = dij * c + bi - bj;
        let r = big_b / (2.0 * dij);
        let obj = |t: f64| (-dij * t + big_b) * t;
        // descending in t so the first maximum is the larger x_i
        let mut best = (c, obj(c));
        if r > 0.0 && r < c {
            let v = obj(r);
            if v > best.1 {
                best = (r, v);
            }
        }
        let v0 = obj(0.0);
        if v0 > best.1 {
            best = (0.0, v0);
        }
        best.0
    };
    if new_xi == xi {
        return Ok(false);
    }
    let new_xj = if new_xi == c {
        0.0
    } else if new_xi == 0.0 {
        c
    } else {
        c - new_xi
    };
    x.set_pair(g, i, new_xi, j, new_xj);
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShrinkOutcome {
    pub iterations: usize,
    pub converged: bool,
    /// Residual on the shrink set when the loop stopped.
    pub residual: f64,
}

/// Two-coordinate descent restricted to `s` until the local KKT residual is
/// at most `eps_scale / |s|`.
///
/// Each iteration picks `i = argmax_{k in s, x_k < 1} grad_k` and
/// `j = argmin_{k in s, x_k > 0} grad_k` (ties to the smaller id) and
/// re-optimizes the pair. `x` keeps its support inside `s`.
pub fn coordinate_descent(
    g: &WeightedGraph,
    x: &mut Embedding,
    s: &[usize],
    cfg: &SolverConfig,
    audit: &mut Audit,
) -> Result<ShrinkOutcome> {
    let set = check_shrink_set(g, s)?;
    for u in x.support() {
        if set.binary_search(&u).is_err() {
            return Err(Error::BadEmbedding(format!(
                "support vertex {u} lies outside the shrink set"
            )));
        }
    }
    let tol = cfg.tolerance(set.len());
    let mut iterations = 0;
    let mut residual;
    loop {
        let mut pick_i: Option<(usize, f64)> = None;
        let mut pick_j: Option<(usize, f64)> = None;
        for &k in &set {
            let xk = x.weight(k);
            let gk = x.gradient(k);
            if xk < 1.0 && pick_i.is_none_or(|(_, best)| gk > best) {
                pick_i = Some((k, gk));
            }
            if xk > 0.0 && pick_j.is_none_or(|(_, best)| gk < best) {
                pick_j = Some((k, gk));
            }
        }
        let (Some((i, gi)), Some((j, gj))) = (pick_i, pick_j) else {
            residual = 0.0;
            break;
        };
        residual = (gi - gj).max(0.0);
        if residual <= tol || i == j || iterations >= cfg.max_shrink_iters {
            break;
        }
        let before = x.value();
        let changed = pair_update(g, x, i, j)?;
        audit.record(Stage::PairUpdate, before, x.value());
        iterations += 1;
        if !changed {
            break;
        }
    }
    x.normalize(g);
    Ok(ShrinkOutcome {
        iterations,
        converged: residual <= tol,
        residual,
    })
}
