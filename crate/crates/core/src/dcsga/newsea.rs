use rayon::prelude::*;
use serde::Serialize;

use super::descent::global_kkt_residual;
use super::expand::seacd;
use super::init::smart_init_order;
use super::polish::polish;
use super::refine::refine_unchecked;
use super::{Audit, InitPolicy, ShrinkMethod, SolverConfig};
use crate::density::{edge_density_diff, is_positive_clique};
use crate::difference::DifferenceGraph;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DcsgaResult {
    /// The solution, with caches bound to `G_D`.
    #[serde(skip)]
    pub embedding: Embedding,
    pub affinity: f64,
    /// `W_D(S) / |S|^2` on the support.
    pub edge_density: f64,
    /// Global KKT residual on `G_D`.
    pub kkt_residual: f64,
    pub is_positive_clique: bool,
    pub inits_used: usize,
    pub converged: bool,
    pub audit: Audit,
    /// Seed vertex that produced the solution, if any seed ran.
    pub seed: Option<usize>,
}

struct SeedRun {
    x: Embedding,
    converged: bool,
    audit: Audit,
}

/// Multi-start search for the maximum of `x^T D x` over the simplex.
///
/// Every seed starts from a one-hot point on `G_{D+}`, alternates the
/// shrink-and-expand driver with the clique refinement until the point is a
/// global KKT point, and is scored on `G_D`. Under
/// [`InitPolicy::SmartOrder`] the scan stops at the first seed whose bound
/// cannot beat the incumbent.
pub fn new_sea(gd: &DifferenceGraph, cfg: &SolverConfig) -> Result<DcsgaResult> {
    cfg.validate()?;
    let g = gd.graph();
    let plus = gd.positive();
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if plus.edge_count() == 0 {
        let x = Embedding::one_hot(g, 0)?;
        return Ok(DcsgaResult {
            affinity: 0.0,
            edge_density: 0.0,
            kkt_residual: global_kkt_residual(g, &x),
            is_positive_clique: true,
            inits_used: 0,
            converged: true,
            audit: Audit::default(),
            seed: None,
            embedding: x,
        });
    }

    let mut seeds: Vec<(usize, Option<f64>)> = match &cfg.init_policy {
        InitPolicy::SmartOrder => smart_init_order(gd)
            .into_iter()
            .map(|b| (b.vertex, Some(b.mu_u)))
            .collect(),
        InitPolicy::AllVertices => (0..n).map(|u| (u, None)).collect(),
        InitPolicy::GivenSeeds(list) => {
            for &u in list {
                g.check_vertex(u)?;
            }
            list.iter().map(|&u| (u, None)).collect()
        }
    };
    if let Some(cap) = cfg.max_inits {
        seeds.truncate(cap);
    }

    let mut best: Option<(f64, usize, SeedRun)> = None;
    let mut audit = Audit {
        strict: cfg.strict_audit,
        ..Audit::default()
    };
    let mut inits_used = 0;
    let chunk = if cfg.parallel_inits {
        rayon::current_num_threads().max(1)
    } else {
        1
    };

    'scan: for block in seeds.chunks(chunk) {
        // seeds the snapshot already rules out are not run at all
        let snapshot = best.as_ref().map(|b| b.0);
        let live: Vec<(usize, Option<f64>)> = block
            .iter()
            .copied()
            .take_while(|&(_, mu)| !stops(mu, snapshot))
            .collect();
        let runs: Vec<Result<SeedRun>> = if cfg.parallel_inits {
            live.par_iter()
                .map(|&(u, _)| run_seed(plus, u, cfg))
                .collect()
        } else {
            live.iter().map(|&(u, _)| run_seed(plus, u, cfg)).collect()
        };
        for (&(u, mu), run) in live.iter().zip(runs) {
            if stops(mu, best.as_ref().map(|b| b.0)) {
                break 'scan;
            }
            let run = run?;
            inits_used += 1;
            let f = run.x.rebind(g).value();
            audit.merge(run.audit.clone());
            if best.as_ref().is_none_or(|b| f > b.0) {
                best = Some((f, u, run));
            }
        }
        if live.len() < block.len() {
            break;
        }
    }

    let (affinity, seed, run) = best.expect("a positive edge gives every seed order a live head");
    let x = run.x.rebind(g);
    let support = x.support();
    Ok(DcsgaResult {
        affinity,
        edge_density: edge_density_diff(gd, &support)?,
        kkt_residual: global_kkt_residual(g, &x),
        is_positive_clique: is_positive_clique(g, &support),
        inits_used,
        converged: run.converged,
        audit,
        seed: Some(seed),
        embedding: x,
    })
}

fn stops(mu: Option<f64>, best: Option<f64>) -> bool {
    match mu {
        Some(mu) => mu <= best.unwrap_or(0.0),
        None => false,
    }
}

fn run_seed(plus: &WeightedGraph, u: usize, cfg: &SolverConfig) -> Result<SeedRun> {
    let mut audit = Audit {
        strict: cfg.strict_audit,
        ..Audit::default()
    };
    let mut x = Embedding::one_hot(plus, u)?;
    let baseline = matches!(cfg.shrink, ShrinkMethod::Replicator(_));
    let mut converged = false;
    for _ in 0..cfg.max_sea_rounds {
        let sea = seacd(plus, &mut x, cfg, &mut audit)?;
        refine_unchecked(plus, &mut x, cfg, &mut audit)?;
        converged = global_kkt_residual(plus, &x) <= cfg.tolerance(x.support_len());
        if converged || baseline || !sea.converged {
            break;
        }
    }
    if converged && !baseline {
        polish(plus, &mut x, cfg, &mut audit);
    }
    Ok(SeedRun {
        x,
        converged,
        audit,
    })
}
