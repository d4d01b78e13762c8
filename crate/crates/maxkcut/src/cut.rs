//! Classical MAX k-CUT machinery: cut values, exhaustive search with color
//! symmetry fixing, and reference baselines.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::{Error, Result};

/// One color per vertex, colors in `0..k`. Stored as bytes; every operation
/// validates length and range against the graph and `k` it is used with.
pub type ColorAssignment = Vec<u8>;

/// Outcome of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutResult {
    /// Largest cut weight found.
    pub best_value: f64,
    /// Lexicographically smallest assignment attaining `best_value`.
    pub best_assignment: ColorAssignment,
    /// Number of assignments evaluated (after symmetry reduction).
    pub evaluated: u64,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > u8::MAX as usize {
        return Err(Error::Parameter(format!("color count k={k} outside supported range")));
    }
    Ok(())
}

/// Total weight of edges whose endpoints receive different colors.
pub fn cut_value(graph: &Graph, k: usize, assignment: &[u8]) -> Result<f64> {
    check_k(k)?;
    if assignment.len() != graph.num_vertices() {
        return Err(Error::Parameter(format!(
            "assignment has {} entries for a graph with {} vertices",
            assignment.len(),
            graph.num_vertices()
        )));
    }
    if let Some(&c) = assignment.iter().find(|&&c| c as usize >= k) {
        return Err(Error::Parameter(format!("color {c} out of range for k={k}")));
    }
    Ok(graph
        .edges()
        .iter()
        .map(|&(u, v, w)| if assignment[u] != assignment[v] { w } else { 0.0 })
        .sum())
}

/// Exhaustive MAX k-CUT over all assignments with vertex 0 pinned to color 0
/// (a cut is invariant under global color relabeling, so the reduction loses
/// nothing — and because every maximizer can be relabeled to start with color
/// 0, the reduced search still finds the globally lexicographically smallest
/// maximizer). Ties are broken toward the lexicographically smallest
/// assignment. `budget` caps the number of evaluations (default 10^8);
/// larger searches return a capacity error.
pub fn brute_force(graph: &Graph, k: usize, budget: Option<u64>) -> Result<CutResult> {
    check_k(k)?;
    let n = graph.num_vertices();
    let budget = budget.unwrap_or(100_000_000);
    let space = (k as u128).checked_pow(n.saturating_sub(1) as u32).unwrap_or(u128::MAX);
    if space > budget as u128 {
        return Err(Error::Capacity(format!(
            "exhaustive search needs {space} evaluations, budget is {budget}"
        )));
    }

    // Parallelize over the color of vertex 1; each branch scans its slice of
    // the reduced space in lexicographic order, so combining branches in
    // order preserves the smallest-assignment tie-break.
    let branch_colors: Vec<u8> = if n >= 2 { (0..k as u8).collect() } else { vec![0] };
    let branch_results: Vec<(f64, ColorAssignment, u64)> = branch_colors
        .par_iter()
        .map(|&c1| {
            let mut assignment = vec![0u8; n];
            if n >= 2 {
                assignment[1] = c1;
            }
            let mut best_value = f64::NEG_INFINITY;
            let mut best_assignment = assignment.clone();
            let mut evaluated = 0u64;
            loop {
                let value = graph
                    .edges()
                    .iter()
                    .map(|&(u, v, w)| if assignment[u] != assignment[v] { w } else { 0.0 })
                    .sum::<f64>();
                evaluated += 1;
                if value > best_value {
                    best_value = value;
                    best_assignment.copy_from_slice(&assignment);
                }
                // Odometer over vertices 2..n (vertices 0 and 1 are pinned
                // in this branch); lexicographic order by construction.
                let mut pos = n;
                loop {
                    if pos <= 2 {
                        pos = 0;
                        break;
                    }
                    pos -= 1;
                    if (assignment[pos] as usize) + 1 < k {
                        assignment[pos] += 1;
                        for a in assignment.iter_mut().skip(pos + 1) {
                            *a = 0;
                        }
                        break;
                    }
                }
                if pos == 0 {
                    return (best_value, best_assignment, evaluated);
                }
            }
        })
        .collect();

    let mut best: Option<(f64, ColorAssignment)> = None;
    let mut evaluated = 0;
    for (value, assignment, count) in branch_results {
        evaluated += count;
        let better = match &best {
            None => true,
            Some((bv, _)) => value > *bv,
        };
        if better {
            best = Some((value, assignment));
        }
    }
    let (best_value, best_assignment) = best.expect("at least one branch");
    Ok(CutResult { best_value, best_assignment, evaluated })
}

/// Expected cut fraction of a uniformly random assignment: 1 − 1/k.
pub fn random_baseline(k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::Parameter(format!("baseline needs k >= 2, got {k}")));
    }
    Ok(1.0 - 1.0 / k as f64)
}

/// Best known polynomial-time approximation guarantees for MAX k-CUT,
/// 2 <= k <= 9, used as reference lines when judging solver output.
pub fn reference_ratio(k: usize) -> Result<f64> {
    const RATIOS: [f64; 8] = [
        0.878567, 0.836008, 0.857487, 0.876610, 0.891543, 0.903259, 0.912664, 0.920367,
    ];
    if !(2..=9).contains(&k) {
        return Err(Error::Parameter(format!("reference ratio tabulated only for 2 <= k <= 9, got {k}")));
    }
    Ok(RATIOS[k - 2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_erdos_renyi;
    use proptest::prelude::*;

    fn cycle4() -> Graph {
        Graph::new(4, vec![(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (0, 3, 4.0)]).unwrap()
    }

    /// Unreduced reference enumeration, deliberately independent of
    /// `brute_force` (no symmetry fixing, no parallelism).
    fn exhaustive_unreduced(graph: &Graph, k: usize) -> (f64, ColorAssignment) {
        let n = graph.num_vertices();
        let mut best = (f64::NEG_INFINITY, vec![0u8; n]);
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut assignment = vec![0u8; n];
            for v in (0..n).rev() {
                assignment[v] = (c % k as u64) as u8;
                c /= k as u64;
            }
            let value = cut_value(graph, k, &assignment).unwrap();
            if value > best.0 {
                best = (value, assignment);
            }
        }
        best
    }

    #[test]
    fn cut_value_validates_inputs() {
        let g = Graph::barbell();
        assert!(cut_value(&g, 2, &[0]).is_err());
        assert!(cut_value(&g, 2, &[0, 2]).is_err());
        assert!(cut_value(&g, 0, &[0, 0]).is_err());
        assert_eq!(cut_value(&g, 2, &[0, 1]).unwrap(), 1.0);
        assert_eq!(cut_value(&g, 2, &[1, 1]).unwrap(), 0.0);
    }

    #[test]
    fn barbell_brute_force() {
        let r = brute_force(&Graph::barbell(), 2, None).unwrap();
        assert_eq!(r.best_value, 1.0);
        assert_eq!(r.best_assignment, vec![0, 1]);
        assert_eq!(r.evaluated, 2);
    }

    #[test]
    fn triangle_needs_three_colors() {
        let g = Graph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let two = brute_force(&g, 2, None).unwrap();
        assert_eq!(two.best_value, 2.0);
        let three = brute_force(&g, 3, None).unwrap();
        assert_eq!(three.best_value, 3.0);
        assert_eq!(three.best_assignment, vec![0, 1, 2]);
    }

    #[test]
    fn weighted_cycle_optimum_and_tie_break() {
        let r = brute_force(&cycle4(), 2, None).unwrap();
        assert_eq!(r.best_value, 10.0);
        assert_eq!(r.best_assignment, vec![0, 1, 0, 1]);
        assert_eq!(r.evaluated, 8);
    }

    #[test]
    fn single_vertex_graph() {
        let g = Graph::new(1, vec![]).unwrap();
        let r = brute_force(&g, 3, None).unwrap();
        assert_eq!(r.best_value, 0.0);
        assert_eq!(r.best_assignment, vec![0]);
        assert_eq!(r.evaluated, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = gen_erdos_renyi(30, 0.2, 1, None).unwrap();
        match brute_force(&g, 2, None) {
            Err(Error::Capacity(_)) => {}
            other => panic!("expected capacity error, got {other:?}"),
        }
        assert!(brute_force(&g, 2, Some(1 << 40)).is_ok());
    }

    #[test]
    fn baselines_and_reference_ratios() {
        assert_eq!(random_baseline(2).unwrap(), 0.5);
        assert_eq!(random_baseline(4).unwrap(), 0.75);
        assert!(random_baseline(1).is_err());
        assert_eq!(reference_ratio(2).unwrap(), 0.878567);
        assert_eq!(reference_ratio(9).unwrap(), 0.920367);
        assert!(reference_ratio(10).is_err());
    }

    proptest! {
        /// Relabeling colors by any permutation never changes the cut.
        #[test]
        fn cut_invariant_under_color_permutation(
            seed in 0u64..500,
            perm_seed in 0u64..100,
        ) {
            let g = gen_erdos_renyi(6, 0.5, seed, Some((0.5, 2.0))).unwrap();
            let k = 2 + (seed % 3) as usize;
            let assignment: Vec<u8> =
                (0..6).map(|v| ((seed >> v) % k as u64) as u8).collect();
            // Build a permutation of 0..k from perm_seed.
            let mut perm: Vec<u8> = (0..k as u8).collect();
            for i in (1..k).rev() {
                let j = (perm_seed as usize + i * 7) % (i + 1);
                perm.swap(i, j);
            }
            let relabeled: Vec<u8> = assignment.iter().map(|&c| perm[c as usize]).collect();
            let a = cut_value(&g, k, &assignment).unwrap();
            let b = cut_value(&g, k, &relabeled).unwrap();
            prop_assert_eq!(a, b);
        }

        /// Symmetry-reduced search agrees with the unreduced one.
        #[test]
        fn reduced_search_matches_unreduced(seed in 0u64..40) {
            let n = 2 + (seed % 4) as usize;
            let g = gen_erdos_renyi(n, 0.6, seed, Some((0.5, 2.0))).unwrap();
            let k = 2 + (seed % 3) as usize;
            let reduced = brute_force(&g, k, None).unwrap();
            let (value, _) = exhaustive_unreduced(&g, k);
            prop_assert_eq!(reduced.best_value, value);
        }
    }
}
