//! Exhaustive solvers for small graphs.
//!
//! [`oracle_dcsad`] enumerates every non-empty vertex subset.
//! [`oracle_dcsga`] enumerates every face of the simplex: on a support `S`
//! a maximizer interior to the face satisfies `D_S x = mu 1`, `sum x = 1`,
//! and then `f(x) = mu`. Taking the best strictly positive solution over all
//! faces gives the global maximum.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::density::is_positive_clique;
use crate::difference::DifferenceGraph;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

pub const DEFAULT_DCSAD_LIMIT: usize = 15;
pub const DEFAULT_DCSGA_LIMIT: usize = 12;

/// Relative slack used when comparing candidate optima.
const TIE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Sorted vertex ids.
    Set(Vec<usize>),
    /// `(vertex, weight)` pairs in id order.
    Embedding(Vec<(usize, f64)>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleResult {
    pub optimum_value: f64,
    pub witness: Witness,
    pub instances_enumerated: u64,
    /// Faces whose stationarity system was singular.
    pub skipped: u64,
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limit || n >= 64 {
        return Err(Error::TooLarge { n, limit });
    }
    Ok(())
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn better(value: f64, best: f64) -> bool {
    value > best + TIE * best.abs().max(1.0)
}

/// Maximum average degree over all non-empty subsets. The witness is the
/// smallest optimal set, ties broken lexicographically.
pub fn oracle_dcsad(gd: &DifferenceGraph, limit_n: usize) -> Result<OracleResult> {
    let g = gd.graph();
    let n = g.vertex_count();
    check_size(n, limit_n)?;
    let mut masks: Vec<u64> = (1..1u64 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), sort_key(m)));
    let mut best: Option<(f64, u64)> = None;
    for &m in &masks {
        let s = members(m);
        let mut half = 0.0;
        for &u in &s {
            for &(v, w) in g.neighbors(u) {
                if v > u && m >> v & 1 == 1 {
                    half += w;
                }
            }
        }
        let rho = 2.0 * half / s.len() as f64;
        if best.is_none_or(|b| better(rho, b.0)) {
            best = Some((rho, m));
        }
    }
    let (value, m) = best.expect("at least one subset");
    Ok(OracleResult {
        optimum_value: value,
        witness: Witness::Set(members(m)),
        instances_enumerated: masks.len() as u64,
        skipped: 0,
    })
}

/// Lexicographic order of the sorted member lists, as a sortable key.
fn sort_key(m: u64) -> Vec<usize> {
    members(m)
}

/// Maximum of `x^T D x` over the simplex by face enumeration.
pub fn oracle_dcsga(gd: &DifferenceGraph, limit_n: usize) -> Result<OracleResult> {
    let g = gd.graph();
    let n = g.vertex_count();
    check_size(n, limit_n)?;
    let all: Vec<usize> = (0..n).collect();
    Ok(best_face(g, &all))
}

/// Maximum of `x^T D x` over embeddings supported inside `clique`, which must
/// be a clique of positive edges.
pub fn oracle_clique_affinity(gd: &DifferenceGraph, clique: &[usize]) -> Result<f64> {
    let g = gd.graph();
    if clique.is_empty() {
        return Err(Error::EmptySet);
    }
    for &u in clique {
        g.check_vertex(u)?;
    }
    let mut set = clique.to_vec();
    set.sort_unstable();
    set.dedup();
    if !is_positive_clique(g, &set) {
        return Err(Error::NotAClique);
    }
    check_size(set.len(), DEFAULT_DCSGA_LIMIT.max(20))?;
    Ok(best_face(g, &set).optimum_value)
}

fn best_face(g: &WeightedGraph, ground: &[usize]) -> OracleResult {
    let k = ground.len();
    let mut masks: Vec<u64> = (1..1u64 << k).collect();
    masks.sort_by_key(|&m| (m.count_ones(), sort_key(m)));
    let mut best: Option<(f64, Vec<(usize, f64)>)> = None;
    let mut skipped = 0;
    for &m in &masks {
        let s: Vec<usize> = members(m).into_iter().map(|i| ground[i]).collect();
        let candidate = match stationary_point(g, &s) {
            Some(x) => x,
            None => {
                skipped += 1;
                let w = 1.0 / s.len() as f64;
                s.iter().map(|&u| (u, w)).collect()
            }
        };
        if candidate.iter().any(|&(_, w)| w <= 0.0) {
            continue;
        }
        let f = value(g, &candidate);
        if best.as_ref().is_none_or(|b| better(f, b.0)) {
            best = Some((f, candidate));
        }
    }
    let (optimum_value, x) = best.expect("singletons are always feasible");
    OracleResult {
        optimum_value,
        witness: Witness::Embedding(x),
        instances_enumerated: masks.len() as u64,
        skipped,
    }
}

/// Solves `[D_S -1; 1^T 0] [x; mu] = [0; 1]`.
fn stationary_point(g: &WeightedGraph, s: &[usize]) -> Option<Vec<(usize, f64)>> {
    let k = s.len();
    let mut a = DMatrix::<f64>::zeros(k + 1, k + 1);
    for (r, &u) in s.iter().enumerate() {
        for (c, &v) in s.iter().enumerate() {
            a[(r, c)] = g.weight(u, v);
        }
        a[(r, k)] = -1.0;
        a[(k, r)] = 1.0;
    }
    let mut b = DVector::<f64>::zeros(k + 1);
    b[k] = 1.0;
    let sol = a.lu().solve(&b)?;
    if sol.iter().any(|v| !v.is_finite()) {
        return None;
    }
    Some(s.iter().enumerate().map(|(i, &u)| (u, sol[i])).collect())
}

fn value(g: &WeightedGraph, x: &[(usize, f64)]) -> f64 {
    x.iter()
        .map(|&(u, xu)| xu * x.iter().map(|&(v, xv)| g.weight(u, v) * xv).sum::<f64>())
        .sum()
}
