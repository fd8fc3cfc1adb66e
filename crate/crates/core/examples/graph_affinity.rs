//! Graph-affinity contrast: the heaviest emerging clique and its embedding.

use dcs::{new_sea, parse_edge_list, DifferenceGraph, SolverConfig};

fn main() -> dcs::Result<()> {
    let gd = DifferenceGraph::from_graph(parse_edge_list(
        "a b 4\na c 4\nb c 4\n\
         c d 1\nd e 5\ne f 1\nd f -2\n\
         a x -3\nx y 2\n",
    )?);
    let r = new_sea(&gd, &SolverConfig::default())?;
    for (u, w) in r.embedding.weights() {
        println!("{:>3} {w:.4}", gd.graph().label(u));
    }
    println!("f_D         {:.6}", r.affinity);
    println!("edge dens.  {:.6}", r.edge_density);
    println!("kkt         {:.2e}", r.kkt_residual);
    println!("clique      {}", r.is_positive_clique);
    println!("seeds tried {}", r.inits_used);
    Ok(())
}
