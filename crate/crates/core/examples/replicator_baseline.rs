//! Coordinate-descent shrink versus the replicator baseline with
//! objective-improvement stopping on a dense instance. The replicator stops
//! short of a KKT point, and the expansions that follow gain so little that
//! the improvement guard rejects them.

use dcs::dcsga::{InitPolicy, ReplicatorStop, ShrinkMethod};
use dcs::{new_sea, DifferenceGraph, SolverConfig, WeightedGraph};

fn main() -> dcs::Result<()> {
    let mut edges = Vec::new();
    for u in 0..9 {
        for v in u + 1..9 {
            let w = if v < 6 {
                100.0
            } else {
                40.0 + ((u * 7 + v * 3) % 5) as f64
            };
            edges.push((u, v, w));
        }
    }
    let gd = DifferenceGraph::from_graph(WeightedGraph::from_id_edges(9, &edges)?);
    for shrink in [
        ShrinkMethod::CoordinateDescent,
        ShrinkMethod::Replicator(ReplicatorStop::ObjectiveImprovement(1e-6)),
    ] {
        let r = new_sea(
            &gd,
            &SolverConfig {
                shrink,
                init_policy: InitPolicy::AllVertices,
                ..SolverConfig::default()
            },
        )?;
        println!("{shrink:?}");
        println!(
            "  f {:.9}  support {}  converged {}  expansions {}  guard rejections {}",
            r.affinity,
            r.embedding.support_len(),
            r.converged,
            r.audit.expansions,
            r.audit.guard_rejections
        );
    }
    Ok(())
}
