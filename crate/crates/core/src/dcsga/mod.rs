//! Density contrast under the graph-affinity measure: maximize `x^T D x`
//! over the simplex.
//!
//! The building blocks are a two-coordinate descent that reaches local KKT
//! points on a vertex set, a shrink-and-expand driver ([`seacd`]) that turns
//! those into global KKT points, a refinement pass that shrinks a KKT point
//! onto a positive clique, and [`new_sea`], which seeds the driver from the
//! vertices ranked by an upper bound on the affinity reachable through them.
//! A replicator-dynamics shrink is kept as a baseline.

mod descent;
mod expand;
mod init;
mod newsea;
mod polish;
mod refine;
mod replicator;

pub use descent::{
    coordinate_descent, global_kkt_residual, gradient, kkt_residual, two_coord_update,
    ShrinkOutcome,
};
pub use expand::{expansion_step, seacd, ExpansionOutcome, SeaOutcome};
pub use init::{smart_init_order, InitBound};
pub use newsea::{new_sea, DcsgaResult};
pub use refine::refine_to_clique;
pub use replicator::{replicator_shrink, ReplicatorStop};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Where seeds for the multi-start search come from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum InitPolicy {
    /// Vertices in decreasing order of their affinity upper bound, stopping
    /// once the bound cannot beat the incumbent.
    SmartOrder,
    /// Every vertex, in id order.
    AllVertices,
    GivenSeeds(Vec<usize>),
}

/// How the shrink stage reaches a local optimum on the current support.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum ShrinkMethod {
    CoordinateDescent,
    /// Replicator dynamics; requires non-negative weights, so only valid on
    /// `G_{D+}`.
    Replicator(ReplicatorStop),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolverConfig {
    /// The shrink tolerance on a set `S` is `eps_scale / |S|`.
    pub eps_scale: f64,
    pub max_shrink_iters: usize,
    pub max_sea_rounds: usize,
    pub init_policy: InitPolicy,
    /// Upper bound on the number of seeds tried.
    pub max_inits: Option<usize>,
    pub parallel_inits: bool,
    /// Reserved; every default path is deterministic.
    pub rng_seed: u64,
    pub shrink: ShrinkMethod,
    /// Panic on the first objective decrease instead of only recording it.
    pub strict_audit: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            eps_scale: 1e-2,
            max_shrink_iters: 100_000,
            max_sea_rounds: 10_000,
            init_policy: InitPolicy::SmartOrder,
            max_inits: None,
            parallel_inits: false,
            rng_seed: 0,
            shrink: ShrinkMethod::CoordinateDescent,
            strict_audit: false,
        }
    }
}

impl SolverConfig {
    pub fn tolerance(&self, set_size: usize) -> f64 {
        self.eps_scale / set_size.max(1) as f64
    }

    pub fn validate(&self) -> Result<()> {
        if self.eps_scale.is_nan() || self.eps_scale <= 0.0 {
            return Err(Error::BadConfig(format!(
                "eps_scale must be positive, got {}",
                self.eps_scale
            )));
        }
        if self.max_shrink_iters == 0 || self.max_sea_rounds == 0 {
            return Err(Error::BadConfig("iteration caps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Stage {
    PairUpdate,
    Expansion,
    Refinement,
    Polish,
    Replicator,
    SeaRound,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub stage: Stage,
    pub before: f64,
    pub after: f64,
}

/// Step-level record of objective values.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Audit {
    pub steps: u64,
    pub violations: Vec<Violation>,
    /// Expansions whose first proposed step failed to raise the objective.
    pub guard_rejections: u64,
    pub expansions: u64,
    pub strict: bool,
}

/// Decreases smaller than this (relative to `max(1, |f|)`) count as noise.
const MONOTONE_SLACK: f64 = 1e-12;

impl Audit {
    pub fn strict() -> Self {
        Audit {
            strict: true,
            ..Audit::default()
        }
    }

    pub fn record(&mut self, stage: Stage, before: f64, after: f64) {
        self.steps += 1;
        if after < before - MONOTONE_SLACK * before.abs().max(1.0) {
            assert!(
                !self.strict,
                "objective decreased in {stage:?}: {before} -> {after}"
            );
            self.violations.push(Violation {
                stage,
                before,
                after,
            });
        }
    }

    pub fn merge(&mut self, other: Audit) {
        self.steps += other.steps;
        self.violations.extend(other.violations);
        self.guard_rejections += other.guard_rejections;
        self.expansions += other.expansions;
    }
}

pub(crate) fn check_shrink_set(g: &WeightedGraph, s: &[usize]) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    for &u in &set {
        g.check_vertex(u)?;
    }
    Ok(set)
}
