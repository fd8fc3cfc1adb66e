use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::descent::{coordinate_descent, global_kkt_residual};
use super::replicator::shrink_for_baseline;
use super::{Audit, ShrinkMethod, SolverConfig, Stage};
use crate::embedding::Embedding;
use crate::error::Result;
use crate::graph::WeightedGraph;

/// Required gain for an expansion step to be accepted.
const GUARD: f64 = 1e-12;
const MAX_HALVINGS: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExpansionOutcome {
    Moved,
    /// No vertex has gradient above `2 f(x)`, or no step along the
    /// expansion direction raised `f`.
    Converged,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeaOutcome {
    pub rounds: usize,
    pub converged: bool,
    /// Global KKT residual of the returned point.
    pub residual: f64,
}

/// Moves mass from the support towards the vertices whose gradient exceeds
/// `lambda = 2 f(x)`.
///
/// With `gamma_i = (Dx)_i - f(x)` on `Z`, `s = sum gamma`, `zeta = sum gamma^2`
/// and `omega = gamma^T D gamma`, the point `x + tau (gamma - s x)` has
/// `f = f(x) + 2 zeta tau - a tau^2` where `a = f s^2 + 2 s zeta - omega`.
/// The step is the vertex of that parabola, capped at `1/s` so the old
/// support stays non-negative.
pub fn expansion_step(g: &WeightedGraph, x: &mut Embedding, audit: &mut Audit) -> ExpansionOutcome {
    let f = x.value();
    let gamma: HashMap<usize, f64> = if f >= 0.0 {
        x.touched()
            .filter(|&(_, d)| d > f)
            .map(|(u, d)| (u, d - f))
            .collect()
    } else {
        // every vertex outside the neighborhood has gradient 0 > 2f
        (0..g.vertex_count())
            .map(|u| (u, x.dx(u)))
            .filter(|&(_, d)| d > f)
            .map(|(u, d)| (u, d - f))
            .collect()
    };
    if gamma.is_empty() {
        return ExpansionOutcome::Converged;
    }
    audit.expansions += 1;

    let s: f64 = gamma.values().sum();
    let zeta: f64 = gamma.values().map(|c| c * c).sum();
    let omega: f64 = gamma
        .iter()
        .map(|(&i, &gi)| {
            g.neighbors(i)
                .iter()
                .filter_map(|&(j, w)| gamma.get(&j).map(|&gj| gi * gj * w))
                .sum::<f64>()
        })
        .sum();
    let a = f * s * s + 2.0 * s * zeta - omega;
    let cap = 1.0 / s;
    let mut tau = if a <= 0.0 { cap } else { cap.min(zeta / a) };

    for attempt in 0..=MAX_HALVINGS {
        let candidate = step(g, x, &gamma, s, tau);
        if candidate.value() > f + GUARD {
            audit.record(Stage::Expansion, f, candidate.value());
            *x = candidate;
            return ExpansionOutcome::Moved;
        }
        if attempt == 0 {
            audit.guard_rejections += 1;
        }
        tau /= 2.0;
    }
    ExpansionOutcome::Converged
}

fn step(
    g: &WeightedGraph,
    x: &Embedding,
    gamma: &HashMap<usize, f64>,
    s: f64,
    tau: f64,
) -> Embedding {
    let mut shrink = 1.0 - tau * s;
    if shrink < 1e-15 {
        shrink = 0.0;
    }
    let mut map = BTreeMap::new();
    for (u, xu) in x.weights() {
        let w = xu * shrink;
        if w > 0.0 {
            map.insert(u, w);
        }
    }
    for (&u, &gu) in gamma {
        *map.entry(u).or_insert(0.0) += tau * gu;
    }
    let mass: f64 = map.values().sum();
    for w in map.values_mut() {
        *w /= mass;
    }
    map.retain(|_, w| *w > 0.0);
    Embedding::from_map(g, map)
}

/// Alternates a shrink on the current support with an expansion step until
/// the point is a global KKT point within tolerance, the expansion makes no
/// progress, or `max_sea_rounds` is reached.
pub fn seacd(
    g: &WeightedGraph,
    x: &mut Embedding,
    cfg: &SolverConfig,
    audit: &mut Audit,
) -> Result<SeaOutcome> {
    cfg.validate()?;
    let mut rounds = 0;
    while rounds < cfg.max_sea_rounds {
        rounds += 1;
        let before = x.value();
        let support = x.support();
        match cfg.shrink {
            ShrinkMethod::CoordinateDescent => {
                coordinate_descent(g, x, &support, cfg, audit)?;
            }
            ShrinkMethod::Replicator(stop) => {
                shrink_for_baseline(g, x, &support, cfg, stop, audit)?;
            }
        }
        if global_kkt_residual(g, x) <= cfg.tolerance(x.support_len()) {
            audit.record(Stage::SeaRound, before, x.value());
            break;
        }
        let outcome = expansion_step(g, x, audit);
        audit.record(Stage::SeaRound, before, x.value());
        if outcome == ExpansionOutcome::Converged {
            break;
        }
    }
    let residual = global_kkt_residual(g, x);
    Ok(SeaOutcome {
        rounds,
        converged: residual <= cfg.tolerance(x.support_len()),
        residual,
    })
}
