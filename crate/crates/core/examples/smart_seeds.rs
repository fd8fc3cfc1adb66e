//! Seed ordering by affinity upper bound, and how many seeds it saves.

use dcs::dcsga::{smart_init_order, InitPolicy};
use dcs::{new_sea, DifferenceGraph, SolverConfig, WeightedGraph};

fn main() -> dcs::Result<()> {
    // a 5-clique of weight 2 and a long path of weight 1
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            edges.push((u, v, 2.0));
        }
    }
    for u in 5..30 {
        edges.push((u, u + 1, 1.0));
    }
    let gd = DifferenceGraph::from_graph(WeightedGraph::from_id_edges(31, &edges)?);

    println!("{:>6} {:>8} {:>5} {:>8}", "vertex", "w_u", "tau", "mu_u");
    for b in smart_init_order(&gd).iter().take(8) {
        println!(
            "{:>6} {:>8.3} {:>5} {:>8.3}",
            b.vertex, b.w_u, b.tau_u, b.mu_u
        );
    }

    let smart = new_sea(&gd, &SolverConfig::default())?;
    let all = new_sea(
        &gd,
        &SolverConfig {
            init_policy: InitPolicy::AllVertices,
            ..SolverConfig::default()
        },
    )?;
    println!(
        "smart order: f = {:.6} after {} seeds",
        smart.affinity, smart.inits_used
    );
    println!(
        "all seeds:   f = {:.6} after {} seeds",
        all.affinity, all.inits_used
    );
    Ok(())
}
