//! Compare both heuristics with the exhaustive solvers on random signed
//! graphs small enough to enumerate.

use dcs::oracle::{oracle_dcsad, oracle_dcsga, DEFAULT_DCSAD_LIMIT, DEFAULT_DCSGA_LIMIT};
use dcs::{dcs_greedy, new_sea, DifferenceGraph, SolverConfig, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> dcs::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    println!(
        "{:>3} {:>10} {:>10} {:>8} {:>10} {:>10}",
        "n", "greedy", "optimum", "beta", "new_sea", "optimum"
    );
    for _ in 0..10 {
        let n = rng.gen_range(5..=DEFAULT_DCSGA_LIMIT);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v, rng.gen_range(-4.0..4.0)));
                }
            }
        }
        let gd = DifferenceGraph::from_graph(WeightedGraph::from_id_edges(n, &edges)?);
        let ad = dcs_greedy(&gd)?;
        let ad_opt = oracle_dcsad(&gd, DEFAULT_DCSAD_LIMIT)?.optimum_value;
        let ga = new_sea(&gd, &SolverConfig::default())?;
        let ga_opt = oracle_dcsga(&gd, DEFAULT_DCSGA_LIMIT)?.optimum_value;
        println!(
            "{n:>3} {:>10.4} {ad_opt:>10.4} {:>8} {:>10.4} {ga_opt:>10.4}",
            ad.density,
            ad.ratio_beta.map_or("-".into(), |b| format!("{b:.3}")),
            ga.affinity,
        );
    }
    Ok(())
}
