//! Prints the depth-1 approximation ratio on the two-vertex single-edge
//! graph for every scheme and a range of color counts — the smallest
//! instance where the encodings behave measurably differently.

use maxkcut::graph::Graph;
use maxkcut::hamiltonian::EncodingScheme;
use maxkcut::qaoa::{run_qaoa, RunConfig};

fn ratio(scheme: EncodingScheme) -> f64 {
    let g = Graph::barbell();
    let mut config = RunConfig::new(scheme);
    config.max_depth = 1;
    config.seed = 1;
    let run = run_qaoa(&g, &config).expect("barbell run");
    run.depths[0].exact_ratio
}

fn main() {
    println!("{:<4} {:>10} {:>10} {:>10}", "k", "compact", "onehot-xy", "onehot-x");
    for k in 2..=8usize {
        let compact = ratio(EncodingScheme::binary(k));
        let xy = ratio(EncodingScheme::onehot_xy(k));
        let x = ratio(EncodingScheme::onehot_x(k));
        println!("{k:<4} {compact:>10.4} {xy:>10.4} {x:>10.4}");
    }
}
