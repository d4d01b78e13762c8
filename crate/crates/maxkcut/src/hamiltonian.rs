//! Diagonal cost operators for MAX k-CUT in two encodings.
//!
//! **Binary encoding** packs each vertex color into L = ⌈log₂ k⌉ qubits.
//! Every basis state decodes to a valid assignment: labels below k map to
//! themselves, and each surplus label l ∈ {k, …, 2^L−1} is merged with the
//! color 2k−1−l (so label k pairs with color k−1, label k+1 with color k−2,
//! and so on — each surplus label shares a color with exactly one partner,
//! which is what keeps the correction-circuit count at 2(2^L − k)).
//!
//! **One-hot encoding** uses k qubits per vertex; a vertex group is feasible
//! iff exactly one qubit is set, with the set position (counted from the
//! group's first qubit) naming the color.
//!
//! **Bit order** follows the simulator: within a vertex group the
//! lowest-numbered qubit is the most significant bit of the label, and
//! vertex 0's group occupies the most significant bits of the basis index.

use rayon::prelude::*;
use serde::Serialize;

use crate::cut::{cut_value, ColorAssignment};
use crate::graph::Graph;
use crate::{Error, Result};

/// Which encoding + mixer family a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SchemeKind {
    /// ⌈log₂ k⌉ qubits per vertex, X mixer, uniform initial state.
    #[serde(rename = "binary")]
    Binary,
    /// k qubits per vertex, X mixer, uniform initial state, no penalty.
    #[serde(rename = "onehot-x")]
    OneHotX,
    /// k qubits per vertex, X mixer, uniform initial state, penalized objective.
    #[serde(rename = "onehot-penalty")]
    OneHotPenaltyX,
    /// k qubits per vertex, feasibility-preserving XY mixer, W-state init.
    #[serde(rename = "onehot-xy")]
    OneHotXY,
}

/// A problem encoding: scheme kind, color count, and (for the penalized
/// variant) the penalty strength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EncodingScheme {
    pub kind: SchemeKind,
    pub k: usize,
    /// Penalty strength β; `Some` exactly for `OneHotPenaltyX`.
    pub penalty_beta: Option<f64>,
}

impl EncodingScheme {
    pub fn binary(k: usize) -> Self {
        EncodingScheme { kind: SchemeKind::Binary, k, penalty_beta: None }
    }

    pub fn onehot_x(k: usize) -> Self {
        EncodingScheme { kind: SchemeKind::OneHotX, k, penalty_beta: None }
    }

    pub fn onehot_penalty_x(k: usize, beta: f64) -> Self {
        EncodingScheme { kind: SchemeKind::OneHotPenaltyX, k, penalty_beta: Some(beta) }
    }

    pub fn onehot_xy(k: usize) -> Self {
        EncodingScheme { kind: SchemeKind::OneHotXY, k, penalty_beta: None }
    }

    pub fn is_onehot(&self) -> bool {
        self.kind != SchemeKind::Binary
    }

    /// Qubits per vertex: ⌈log₂ k⌉ for binary, k for one-hot.
    pub fn qubits_per_vertex(&self) -> usize {
        if self.kind == SchemeKind::Binary {
            binary_label_bits(self.k)
        } else {
            self.k
        }
    }

    /// Work qubits for a graph (ancillas used by compiled circuits are
    /// accounted separately in the circuit module).
    pub fn num_qubits(&self, num_vertices: usize) -> usize {
        self.qubits_per_vertex() * num_vertices
    }

    /// Checks k, the penalty-strength bounds (β ≥ |V|/k and β > k·|E|), and
    /// that the penalty field is present exactly when the scheme uses it.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        if self.k < 2 || self.k > 255 {
            return Err(Error::Parameter(format!("color count k={} outside supported range", self.k)));
        }
        match (self.kind, self.penalty_beta) {
            (SchemeKind::OneHotPenaltyX, Some(beta)) => {
                let nv = graph.num_vertices() as f64;
                let ne = graph.num_edges() as f64;
                let k = self.k as f64;
                if !(beta >= nv / k && beta > k * ne) {
                    return Err(Error::Parameter(format!(
                        "penalty strength {beta} too weak: need beta >= |V|/k = {} and beta > k*|E| = {}",
                        nv / k,
                        k * ne
                    )));
                }
            }
            (SchemeKind::OneHotPenaltyX, None) => {
                return Err(Error::Parameter("penalized scheme needs a penalty strength".into()));
            }
            (_, Some(_)) => {
                return Err(Error::Parameter("penalty strength given but scheme has no penalty".into()));
            }
            (_, None) => {}
        }
        Ok(())
    }
}

/// A cost operator that is diagonal in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalHamiltonian {
    pub n_qubits: usize,
    pub values: Vec<f64>,
}

impl DiagonalHamiltonian {
    pub fn min_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

/// L = ⌈log₂ k⌉, the binary label width.
pub fn binary_label_bits(k: usize) -> usize {
    assert!(k >= 1);
    (usize::BITS - (k - 1).leading_zeros()) as usize
}

/// Color a binary label decodes to: identity below k, merged partner above.
fn color_of_label(label: usize, k: usize) -> usize {
    if label < k {
        label
    } else {
        2 * k - 1 - label
    }
}

/// Ordered pairs of distinct labels that decode to the same color, i.e. the
/// basis patterns needing a pairwise correction on top of the
/// same-label-detection circuit. Exactly 2(2^L − k) pairs; empty when k is a
/// power of two. Ordered as (partner, surplus), (surplus, partner) with
/// surplus ascending.
pub fn merged_label_pairs(k: usize) -> Vec<(usize, usize)> {
    let size = 1usize << binary_label_bits(k);
    let mut pairs = Vec::new();
    for surplus in k..size {
        let partner = color_of_label(surplus, k);
        pairs.push((partner, surplus));
        pairs.push((surplus, partner));
    }
    pairs
}

/// The 2^L × 2^L label-pair cost matrix: entry [l0][l1] is +1 when the two
/// labels decode to the same color (edge not cut) and −1 otherwise.
pub fn build_d_matrix(k: usize) -> Vec<Vec<f64>> {
    let size = 1usize << binary_label_bits(k);
    (0..size)
        .map(|l0| {
            (0..size)
                .map(|l1| {
                    if color_of_label(l0, k) == color_of_label(l1, k) {
                        1.0
                    } else {
                        -1.0
                    }
                })
                .collect()
        })
        .collect()
}

fn label_of_vertex(z: usize, vertex: usize, bits: usize, n_qubits: usize) -> usize {
    (z >> (n_qubits - (vertex + 1) * bits)) & ((1 << bits) - 1)
}

/// Binary-encoding cost operator: values[z] = Σ_edges w·D[l_u(z)][l_v(z)].
/// An edge contributes +w when its endpoints carry the same color and −w
/// otherwise, so cut(z) = (total_weight − values[z]) / 2.
pub fn build_binary_diagonal(graph: &Graph, k: usize) -> Result<DiagonalHamiltonian> {
    EncodingScheme::binary(k).validate(graph)?;
    let bits = binary_label_bits(k);
    let n_qubits = bits * graph.num_vertices();
    let d = build_d_matrix(k);
    let edges = graph.edges();
    let values = (0..1usize << n_qubits)
        .into_par_iter()
        .map(|z| {
            edges
                .iter()
                .map(|&(u, v, w)| {
                    w * d[label_of_vertex(z, u, bits, n_qubits)][label_of_vertex(z, v, bits, n_qubits)]
                })
                .sum()
        })
        .collect();
    Ok(DiagonalHamiltonian { n_qubits, values })
}

/// One-hot cost operator: for each edge and color slot the two indicator
/// qubits contribute +w when equal and −w when different, i.e.
/// values[z] = Σ_edges w·(k − 2·popcount(g_u ⊕ g_v)) over the vertex groups.
/// On feasible states cut(z) = (k·total_weight − values[z]) / 4.
pub fn build_onehot_diagonal(graph: &Graph, k: usize) -> Result<DiagonalHamiltonian> {
    EncodingScheme::onehot_x(k).validate(graph)?;
    let n_qubits = k * graph.num_vertices();
    if n_qubits > 34 {
        return Err(Error::Capacity(format!(
            "one-hot diagonal needs {n_qubits} qubits for k={k} on {} vertices",
            graph.num_vertices()
        )));
    }
    let edges = graph.edges();
    let values = (0..1usize << n_qubits)
        .into_par_iter()
        .map(|z| {
            edges
                .iter()
                .map(|&(u, v, w)| {
                    let gu = label_of_vertex(z, u, k, n_qubits);
                    let gv = label_of_vertex(z, v, k, n_qubits);
                    w * (k as f64 - 2.0 * (gu ^ gv).count_ones() as f64)
                })
                .sum()
        })
        .collect();
    Ok(DiagonalHamiltonian { n_qubits, values })
}

/// Feasibility penalty for the one-hot encoding: half the sum, over vertex
/// groups and qubit pairs within a group, of the ±1 products of the pair's
/// indicators. Per group this depends only on the Hamming weight h:
/// ((k−2h)² − k) / 4.
pub fn build_penalty_diagonal(num_vertices: usize, k: usize) -> Result<DiagonalHamiltonian> {
    if k < 2 {
        return Err(Error::Parameter(format!("penalty needs k >= 2, got {k}")));
    }
    let n_qubits = k * num_vertices;
    if n_qubits > 34 {
        return Err(Error::Capacity(format!("penalty diagonal needs {n_qubits} qubits")));
    }
    // Group value by Hamming weight: ½·Σ_{a<b} ζ_a ζ_b = ((k−2h)² − k)/4,
    // exact in f64 since everything is a small integer over 4.
    let by_weight: Vec<f64> = (0..=k)
        .map(|h| {
            let s = k as f64 - 2.0 * h as f64;
            (s * s - k as f64) / 4.0
        })
        .collect();
    let values = (0..1usize << n_qubits)
        .into_par_iter()
        .map(|z| {
            (0..num_vertices)
                .map(|v| by_weight[label_of_vertex(z, v, k, n_qubits).count_ones() as usize])
                .sum()
        })
        .collect();
    Ok(DiagonalHamiltonian { n_qubits, values })
}

/// The diagonal a scheme's optimizer works on: the plain cost operator, plus
/// β times the penalty for the penalized one-hot variant.
pub fn build_objective_diagonal(graph: &Graph, scheme: &EncodingScheme) -> Result<DiagonalHamiltonian> {
    scheme.validate(graph)?;
    match scheme.kind {
        SchemeKind::Binary => build_binary_diagonal(graph, scheme.k),
        SchemeKind::OneHotX | SchemeKind::OneHotXY => build_onehot_diagonal(graph, scheme.k),
        SchemeKind::OneHotPenaltyX => {
            let mut h = build_onehot_diagonal(graph, scheme.k)?;
            let pen = build_penalty_diagonal(graph.num_vertices(), scheme.k)?;
            let beta = scheme.penalty_beta.expect("validated");
            for (v, p) in h.values.iter_mut().zip(&pen.values) {
                *v += beta * p;
            }
            Ok(h)
        }
    }
}

/// Reads the color assignment a binary-encoded basis state represents.
/// Always succeeds: every label decodes (surplus labels via their merge
/// partner).
pub fn decode_binary(z: u64, num_vertices: usize, k: usize) -> ColorAssignment {
    let bits = binary_label_bits(k);
    let n_qubits = bits * num_vertices;
    (0..num_vertices)
        .map(|v| color_of_label(label_of_vertex(z as usize, v, bits, n_qubits), k) as u8)
        .collect()
}

/// Reads the color assignment a one-hot basis state represents, or `None`
/// when any vertex group's Hamming weight differs from 1. The set qubit's
/// offset within its group (0 = the group's first qubit) is the color.
pub fn decode_onehot(z: u64, num_vertices: usize, k: usize) -> Option<ColorAssignment> {
    let n_qubits = k * num_vertices;
    let mut colors = Vec::with_capacity(num_vertices);
    for v in 0..num_vertices {
        let group = label_of_vertex(z as usize, v, k, n_qubits);
        if group.count_ones() != 1 {
            return None;
        }
        colors.push((k - 1 - group.trailing_zeros() as usize) as u8);
    }
    Some(colors)
}

/// Fraction of the one-hot basis that is feasible: (k / 2^k) per vertex.
pub fn feasible_fraction(k: usize, num_vertices: usize) -> f64 {
    (k as f64 / (1u64 << k) as f64).powi(num_vertices as i32)
}

/// Cut value of every basis state under a scheme's decoding; infeasible
/// one-hot states count 0. This is the diagonal that turns a measured or
/// simulated distribution into a cut expectation.
pub fn build_cut_diagonal(graph: &Graph, scheme: &EncodingScheme) -> Result<Vec<f64>> {
    scheme.validate(graph)?;
    let nv = graph.num_vertices();
    let k = scheme.k;
    let n_qubits = scheme.num_qubits(nv);
    if n_qubits > 34 {
        return Err(Error::Capacity(format!("cut diagonal needs {n_qubits} qubits")));
    }
    let is_binary = scheme.kind == SchemeKind::Binary;
    (0..1usize << n_qubits)
        .into_par_iter()
        .map(|z| {
            let assignment = if is_binary {
                Some(decode_binary(z as u64, nv, k))
            } else {
                decode_onehot(z as u64, nv, k)
            };
            match assignment {
                Some(a) => cut_value(graph, k, &a),
                None => Ok(0.0),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_erdos_renyi;
    use proptest::prelude::*;

    #[test]
    fn label_bits() {
        for (k, l) in [(2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4)] {
            assert_eq!(binary_label_bits(k), l, "k={k}");
        }
    }

    #[test]
    fn d_matrix_small_k() {
        assert_eq!(build_d_matrix(2), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        assert_eq!(
            build_d_matrix(3),
            vec![
                vec![1.0, -1.0, -1.0, -1.0],
                vec![-1.0, 1.0, -1.0, -1.0],
                vec![-1.0, -1.0, 1.0, 1.0],
                vec![-1.0, -1.0, 1.0, 1.0],
            ]
        );
        // Power of two: no merging, 2I − J.
        let d4 = build_d_matrix(4);
        for (i, row) in d4.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                assert_eq!(e, if i == j { 1.0 } else { -1.0 });
            }
        }
    }

    #[test]
    fn d_matrix_is_symmetric_with_unit_diagonal() {
        for k in 2..=9 {
            let d = build_d_matrix(k);
            for (i, row) in d.iter().enumerate() {
                assert_eq!(row[i], 1.0);
                for (j, &e) in row.iter().enumerate() {
                    assert!(e == 1.0 || e == -1.0);
                    assert_eq!(e, d[j][i]);
                }
            }
        }
    }

    #[test]
    fn merged_pairs_count_and_order() {
        assert_eq!(merged_label_pairs(2), vec![]);
        assert_eq!(merged_label_pairs(4), vec![]);
        assert_eq!(merged_label_pairs(8), vec![]);
        assert_eq!(merged_label_pairs(3), vec![(2, 3), (3, 2)]);
        assert_eq!(merged_label_pairs(7), vec![(6, 7), (7, 6)]);
        assert_eq!(
            merged_label_pairs(5),
            vec![(4, 5), (5, 4), (3, 6), (6, 3), (2, 7), (7, 2)]
        );
        assert_eq!(merged_label_pairs(6), vec![(5, 6), (6, 5), (4, 7), (7, 4)]);
        for k in 2..=9 {
            let bits = binary_label_bits(k);
            assert_eq!(merged_label_pairs(k).len(), 2 * ((1 << bits) - k), "k={k}");
        }
    }

    #[test]
    fn d_matrix_agrees_with_merged_pairs() {
        // D must be (2I − J) corrected at exactly the merged pairs.
        for k in 2..=9 {
            let d = build_d_matrix(k);
            let pairs = merged_label_pairs(k);
            for (i, row) in d.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    let base = if i == j { 1.0 } else { -1.0 };
                    let corrected = pairs.contains(&(i, j));
                    assert_eq!(e, if corrected { base + 2.0 } else { base }, "k={k} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn binary_diagonal_barbell() {
        let g = crate::graph::Graph::barbell();
        let h2 = build_binary_diagonal(&g, 2).unwrap();
        assert_eq!(h2.values, vec![1.0, -1.0, -1.0, 1.0]);
        let h3 = build_binary_diagonal(&g, 3).unwrap();
        assert_eq!(
            h3.values,
            vec![
                1.0, -1.0, -1.0, -1.0, // l0 = 0
                -1.0, 1.0, -1.0, -1.0, // l0 = 1
                -1.0, -1.0, 1.0, 1.0, //  l0 = 2
                -1.0, -1.0, 1.0, 1.0, //  l0 = 3
            ]
        );
    }

    #[test]
    fn decode_binary_examples() {
        assert_eq!(decode_binary(0b01, 2, 2), vec![0, 1]);
        assert_eq!(decode_binary(0b11, 1, 3), vec![2]); // surplus label 3 → color 2
        assert_eq!(decode_binary(0b10, 1, 4), vec![2]);
        assert_eq!(decode_binary(0b110, 1, 5), vec![3]); // surplus label 6 → color 3
        assert_eq!(decode_binary(0b1101, 2, 4), vec![3, 1], "two-vertex split");
    }

    #[test]
    fn decode_onehot_examples() {
        // k=4, one vertex: group 0100 → color 1.
        assert_eq!(decode_onehot(0b0100, 1, 4), Some(vec![1]));
        assert_eq!(decode_onehot(0b0001, 1, 4), Some(vec![3]));
        assert_eq!(decode_onehot(0b0110, 1, 4), None);
        assert_eq!(decode_onehot(0b0000, 1, 4), None);
        // Two vertices, k=2: (01, 10) → colors (1, 0).
        assert_eq!(decode_onehot(0b0110, 2, 2), Some(vec![1, 0]));
    }

    #[test]
    fn onehot_diagonal_barbell_k2() {
        let g = crate::graph::Graph::barbell();
        let h = build_onehot_diagonal(&g, 2).unwrap();
        assert_eq!(h.values[0b0101], 2.0); // same color
        assert_eq!(h.values[0b0110], -2.0); // different colors
        assert_eq!(h.values[0b1010], 2.0);
        assert_eq!(h.values[0b0011], -2.0); // infeasible but still ±2 pattern
    }

    #[test]
    fn penalty_diagonal_matches_literal_sum() {
        // Independent evaluation straight from the pairwise definition.
        fn literal(z: usize, nv: usize, k: usize) -> f64 {
            let n = nv * k;
            let mut total = 0.0;
            for v in 0..nv {
                for a in 0..k {
                    for b in (a + 1)..k {
                        let za = (z >> (n - 1 - (v * k + a))) & 1;
                        let zb = (z >> (n - 1 - (v * k + b))) & 1;
                        let zeta = |bit: usize| if bit == 0 { 1.0 } else { -1.0 };
                        total += 0.5 * zeta(za) * zeta(zb);
                    }
                }
            }
            total
        }
        for (nv, k) in [(1, 2), (1, 3), (2, 3), (1, 5), (2, 4)] {
            let h = build_penalty_diagonal(nv, k).unwrap();
            for (z, &v) in h.values.iter().enumerate() {
                assert_eq!(v, literal(z, nv, k), "nv={nv} k={k} z={z}");
            }
        }
    }

    #[test]
    fn penalty_group_values_by_weight() {
        // Single vertex: value depends only on Hamming weight as ((k−2h)²−k)/4.
        for k in 2..=8 {
            let h = build_penalty_diagonal(1, k).unwrap();
            for (z, &v) in h.values.iter().enumerate() {
                let hw = z.count_ones() as f64;
                let s = k as f64 - 2.0 * hw;
                assert_eq!(v, (s * s - k as f64) / 4.0);
            }
            // Feasible groups sit at −(k−... the weight-1 value.
            let feasible = h.values[1];
            let s = k as f64 - 2.0;
            assert_eq!(feasible, (s * s - k as f64) / 4.0);
            // All-zeros group pays the largest penalty: ½·C(k,2).
            assert_eq!(h.values[0], (k * (k - 1)) as f64 / 4.0);
        }
    }

    #[test]
    fn penalized_objective_adds_beta_times_penalty() {
        let g = crate::graph::Graph::barbell();
        let beta = 5.0; // |V|/k = 1, k|E| = 2 → valid
        let scheme = EncodingScheme::onehot_penalty_x(2, beta);
        let combined = build_objective_diagonal(&g, &scheme).unwrap();
        let plain = build_onehot_diagonal(&g, 2).unwrap();
        let pen = build_penalty_diagonal(2, 2).unwrap();
        for z in 0..combined.values.len() {
            assert_eq!(combined.values[z], plain.values[z] + beta * pen.values[z]);
        }
    }

    #[test]
    fn penalty_bounds_are_enforced() {
        let g = crate::graph::Graph::barbell();
        assert!(EncodingScheme::onehot_penalty_x(2, 2.0).validate(&g).is_err()); // k|E| = 2 needs >
        assert!(EncodingScheme::onehot_penalty_x(2, 2.5).validate(&g).is_ok());
        assert!(EncodingScheme::onehot_x(2).validate(&g).is_ok());
        assert!(
            EncodingScheme { kind: SchemeKind::OneHotX, k: 2, penalty_beta: Some(1.0) }
                .validate(&g)
                .is_err()
        );
        assert!(EncodingScheme::binary(1).validate(&g).is_err());
    }

    #[test]
    fn feasible_fraction_values() {
        assert_eq!(feasible_fraction(2, 1), 0.5);
        assert_eq!(feasible_fraction(3, 1), 3.0 / 8.0);
        assert_eq!(feasible_fraction(2, 2), 0.25);
        assert_eq!(feasible_fraction(8, 2), (8.0f64 / 256.0).powi(2));
    }

    #[test]
    fn onehot_cut_conversion_on_feasible_states() {
        let g = gen_erdos_renyi(3, 0.9, 2, None).unwrap();
        let k = 3;
        let h = build_onehot_diagonal(&g, k).unwrap();
        let w = g.total_weight();
        for z in 0..h.values.len() {
            if let Some(assignment) = decode_onehot(z as u64, 3, k) {
                let cut = cut_value(&g, k, &assignment).unwrap();
                assert_eq!((k as f64 * w - h.values[z]) / 4.0, cut, "z={z}");
            }
        }
    }

    proptest! {
        /// Binary cost ↔ cut identity on random integer-weighted graphs.
        #[test]
        fn binary_cut_identity(seed in 0u64..60) {
            let nv = 2 + (seed % 4) as usize;
            let k = 2 + (seed % 4) as usize;
            let mut g = gen_erdos_renyi(nv, 0.7, seed, None).unwrap();
            // Integer weights keep every sum exact.
            let edges: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &(u, v, _))| (u, v, ((seed + i as u64) % 5 + 1) as f64))
                .collect();
            g = crate::graph::Graph::new(nv, edges).unwrap();
            let h = build_binary_diagonal(&g, k).unwrap();
            let w = g.total_weight();
            for (z, &value) in h.values.iter().enumerate() {
                let cut = cut_value(&g, k, &decode_binary(z as u64, nv, k)).unwrap();
                prop_assert_eq!((w - value) / 2.0, cut);
            }
        }
    }
}
