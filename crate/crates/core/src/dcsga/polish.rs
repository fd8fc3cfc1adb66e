use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use super::descent::global_kkt_residual;
use super::{Audit, SolverConfig, Stage};
use crate::embedding::Embedding;
use crate::graph::WeightedGraph;

/// Largest support solved directly.
const MAX_FACE: usize = 512;

/// Moves a converged point to the exact stationary point of its face,
/// `D_S y = mu 1` with `sum y = 1`, when that point is strictly positive, no
/// worse and still a KKT point. Returns whether `x` changed.
pub(crate) fn polish(
    g: &WeightedGraph,
    x: &mut Embedding,
    cfg: &SolverConfig,
    audit: &mut Audit,
) -> bool {
    let s = x.support();
    let k = s.len();
    if !(2..=MAX_FACE).contains(&k) {
        return false;
    }
    let mut a = DMatrix::<f64>::zeros(k + 1, k + 1);
    for (r, &u) in s.iter().enumerate() {
        for &(v, w) in g.neighbors(u) {
            if let Ok(c) = s.binary_search(&v) {
                a[(r, c)] = w;
            }
        }
        a[(r, k)] = -1.0;
        a[(k, r)] = 1.0;
    }
    let mut b = DVector::<f64>::zeros(k + 1);
    b[k] = 1.0;
    let Some(sol) = a.lu().solve(&b) else {
        return false;
    };
    if (0..k).any(|i| !(sol[i] > 0.0 && sol[i].is_finite())) {
        return false;
    }
    let mass: f64 = (0..k).map(|i| sol[i]).sum();
    let map: BTreeMap<usize, f64> = s
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, sol[i] / mass))
        .collect();
    let y = Embedding::from_map(g, map);
    if y.value() < x.value() || global_kkt_residual(g, &y) > cfg.tolerance(k) {
        return false;
    }
    audit.record(Stage::Polish, x.value(), y.value());
    *x = y;
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    #[test]
    fn snaps_to_the_clique_center() {
        let g = parse_edge_list("a b 1\nb c 1\na c 1").unwrap();
        let mut x = Embedding::from_weights(&g, [(0, 0.334), (1, 0.333), (2, 0.333)]).unwrap();
        assert!(polish(
            &g,
            &mut x,
            &SolverConfig::default(),
            &mut Audit::strict()
        ));
        assert!((x.value() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_a_worse_face_solution() {
        // the face {1,2,3} of the triangle fixture is solved by the saddle
        // (2/9, 5/9, 2/9), worse than the current point
        let t = parse_edge_list("1 2 2\n2 3 2\n1 3 -1").unwrap();
        let mut x = Embedding::from_weights(&t, [(0, 1e-3), (1, 0.5), (2, 0.499)]).unwrap();
        let before = x.clone();
        assert!(!polish(
            &t,
            &mut x,
            &SolverConfig::default(),
            &mut Audit::strict()
        ));
        assert_eq!(x, before);
    }
}
