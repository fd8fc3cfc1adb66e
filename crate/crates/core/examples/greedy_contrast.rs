//! Average-degree contrast: a group that became tightly connected between
//! two snapshots while the rest of the graph thinned out.

use dcs::density::core_numbers;
use dcs::{build_difference, dcs_greedy, WeightedGraph};

fn main() -> dcs::Result<()> {
    let n = 12;
    let mut old = Vec::new();
    let mut new = Vec::new();
    let in_group = |u: usize| (4..8).contains(&u);
    // a ring that loses most of its edges
    for u in 0..n {
        let v = (u + 1) % n;
        old.push((u, v, 2.0));
        if u % 3 == 0 && !(in_group(u) && in_group(v)) {
            new.push((u, v, 1.0));
        }
    }
    // a 4-clique on 4..8 that appears in the second snapshot
    for u in 4..8 {
        for v in u + 1..8 {
            new.push((u, v, 3.0));
        }
    }
    let g1 = WeightedGraph::from_id_edges(n, &old)?;
    let g2 = WeightedGraph::from_id_edges(n, &new)?;
    let gd = build_difference(&g1, &g2, 1.0);

    let r = dcs_greedy(&gd)?;
    let labels: Vec<&str> = r.vertices.iter().map(|&u| gd.graph().label(u)).collect();
    println!("vertices   {labels:?}");
    println!("density    {:.4}", r.density);
    println!("provenance {:?}", r.provenance);
    match r.ratio_beta {
        Some(beta) => println!(
            "optimum is at most {:.4} (beta {beta:.4})",
            beta * r.density
        ),
        None => println!("no positive edge"),
    }
    println!("core numbers of G_D+: {:?}", core_numbers(gd.positive()));
    Ok(())
}
