//! Emerging keyword groups: co-occurrence graphs of two title collections,
//! their difference, and the densest contrast under both measures.

use dcs::cooccur::{cooccurrence_graph, Tokenizer};
use dcs::{build_difference, dcs_greedy, new_sea, SolverConfig};

const EARLY: &str = "\
frequent pattern mining in large databases
mining association rules with constraints
efficient frequent itemset mining
sequential pattern mining for the web
clustering large databases
";

const LATE: &str = "\
deep graph neural networks for recommendation
graph neural networks on large graphs
scalable graph representation learning
frequent pattern mining revisited
representation learning with graph neural networks
";

fn main() -> dcs::Result<()> {
    let tok = Tokenizer::default();
    let early = cooccurrence_graph(EARLY.as_bytes(), &tok)?;
    let late = cooccurrence_graph(LATE.as_bytes(), &tok)?;
    let gd = build_difference(&early, &late, 1.0);
    let label = |u: usize| gd.graph().label(u).to_string();

    let ad = dcs_greedy(&gd)?;
    let words: Vec<String> = ad.vertices.iter().map(|&u| label(u)).collect();
    println!("average degree: {words:?} (density {:.1})", ad.density);

    let ga = new_sea(&gd, &SolverConfig::default())?;
    let words: Vec<String> = ga.embedding.support().into_iter().map(label).collect();
    println!("graph affinity: {words:?} (f {:.1})", ga.affinity);
    Ok(())
}
