//! Weighted undirected graphs, random generators, and an edge-list format.
//!
//! Edges are stored canonically as `(u, v, w)` with `u < v`; parallel edges
//! are rejected. Weights are arbitrary finite `f64`s (weight 1.0 throughout
//! means "unweighted"). The text format is line-oriented:
//!
//! ```text
//! # optional comments
//! p <num_vertices> <num_edges>
//! e <u> <v> <w>
//! ```

use std::collections::HashSet;
use std::io::{BufRead, Write};

use rand::distributions::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Error, Result};

/// An undirected graph with weighted edges and no self-loops.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Graph {
    num_vertices: usize,
    /// Canonical edge list: `u < v`, no duplicates, finite weights.
    edges: Vec<(usize, usize, f64)>,
}

impl Graph {
    /// Builds a graph after validating every edge.
    ///
    /// Requires `num_vertices >= 1`, `u < v < num_vertices` for every edge,
    /// no duplicate vertex pairs, and finite weights.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::Parameter("graph must have at least one vertex".into()));
        }
        let mut seen = HashSet::new();
        for &(u, v, w) in &edges {
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            if u > v {
                return Err(Error::Parameter(format!(
                    "edge ({u}, {v}) not in canonical order u < v"
                )));
            }
            if v >= num_vertices {
                return Err(Error::Parameter(format!(
                    "edge ({u}, {v}) references vertex {v} but the graph has {num_vertices} vertices"
                )));
            }
            if !w.is_finite() {
                return Err(Error::Parameter(format!("edge ({u}, {v}) has non-finite weight {w}")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::Parameter(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph { num_vertices, edges })
    }

    /// Two vertices joined by a unit-weight edge; the smallest nontrivial
    /// instance, handy as a calibration problem.
    pub fn barbell() -> Self {
        Graph { num_vertices: 2, edges: vec![(0, 1, 1.0)] }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|&(_, _, w)| w).sum()
    }

    /// Mean of |w| over edges; 1.0 for an empty edge set so callers can
    /// divide by it unconditionally.
    pub fn mean_abs_weight(&self) -> f64 {
        if self.edges.is_empty() {
            return 1.0;
        }
        self.edges.iter().map(|&(_, _, w)| w.abs()).sum::<f64>() / self.edges.len() as f64
    }

    /// True if any weight differs from 1.0.
    pub fn is_weighted(&self) -> bool {
        self.edges.iter().any(|&(_, _, w)| w != 1.0)
    }
}

fn gen_weight(rng: &mut impl Rng, range: Option<(f64, f64)>) -> f64 {
    match range {
        None => 1.0,
        Some((lo, hi)) => Uniform::new(lo, hi).sample(rng),
    }
}

/// Erdős–Rényi G(n, p): each of the C(n, 2) vertex pairs becomes an edge
/// independently with probability `p`. Deterministic for a fixed seed.
/// `weight_range = Some((lo, hi))` draws weights uniformly from [lo, hi);
/// `None` gives unit weights.
pub fn gen_erdos_renyi(
    n: usize,
    p: f64,
    seed: u64,
    weight_range: Option<(f64, f64)>,
) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v, gen_weight(&mut rng, weight_range)));
            }
        }
    }
    Graph::new(n, edges)
}

/// Preferential attachment: start from `m` isolated vertices, then attach
/// each new vertex to `m` distinct existing vertices chosen with probability
/// proportional to degree + 1 (the +1 lets the isolated seed vertices be
/// picked). Always produces exactly m·(n−m) edges. Deterministic for a
/// fixed seed.
pub fn gen_barabasi_albert(
    n: usize,
    m: usize,
    seed: u64,
    weight_range: Option<(f64, f64)>,
) -> Result<Graph> {
    if m == 0 || m >= n {
        return Err(Error::Parameter(format!(
            "attachment count m={m} must satisfy 1 <= m < n={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for v in m..n {
        // Weighted sampling without replacement among vertices 0..v.
        let mut candidates: Vec<usize> = (0..v).collect();
        for _ in 0..m {
            let total: usize = candidates.iter().map(|&c| degree[c] + 1).sum();
            let mut ticket = rng.gen_range(0..total);
            let mut chosen = candidates.len() - 1;
            for (idx, &c) in candidates.iter().enumerate() {
                let w = degree[c] + 1;
                if ticket < w {
                    chosen = idx;
                    break;
                }
                ticket -= w;
            }
            let u = candidates.swap_remove(chosen);
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v, gen_weight(&mut rng, weight_range)));
        }
    }
    edges.sort_by_key(|e| (e.0, e.1));
    Graph::new(n, edges)
}

/// Parses the edge-list format. Errors carry the 1-based line number.
pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, declared edges, line)
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::Parse { line: lineno, msg: "duplicate 'p' header".into() });
                }
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected 'p <num_vertices> <num_edges>'".into(),
                    });
                }
                let n = parse_field(fields[1], lineno, "vertex count")?;
                let ne = parse_field(fields[2], lineno, "edge count")?;
                header = Some((n, ne, lineno));
            }
            "e" => {
                let (n, _, _) = header.ok_or(Error::Parse {
                    line: lineno,
                    msg: "edge before 'p' header".into(),
                })?;
                if fields.len() != 4 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected 'e <u> <v> <w>'".into(),
                    });
                }
                let u: usize = parse_field(fields[1], lineno, "vertex index")?;
                let v: usize = parse_field(fields[2], lineno, "vertex index")?;
                let w: f64 = fields[3].parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("invalid weight '{}'", fields[3]),
                })?;
                if u == v {
                    return Err(Error::Parse { line: lineno, msg: format!("self-loop at vertex {u}") });
                }
                if u > v {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("edge ({u}, {v}) not in canonical order u < v"),
                    });
                }
                if v >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("vertex {v} out of range (graph has {n} vertices)"),
                    });
                }
                if !w.is_finite() {
                    return Err(Error::Parse { line: lineno, msg: format!("non-finite weight {w}") });
                }
                if !seen.insert((u, v)) {
                    return Err(Error::Parse { line: lineno, msg: format!("duplicate edge ({u}, {v})") });
                }
                edges.push((u, v, w));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown directive '{other}'"),
                });
            }
        }
    }

    let (n, declared, header_line) = header.ok_or(Error::Parse {
        line: last_line.max(1),
        msg: "missing 'p' header".into(),
    })?;
    if edges.len() != declared {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header declares {declared} edges but file has {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_field<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("invalid {what} '{s}'") })
}

/// Writes the edge-list format. `read_graph(write_graph(g)) == g` exactly:
/// weights print with enough digits to round-trip.
pub fn write_graph<W: Write>(graph: &Graph, mut writer: W) -> Result<()> {
    writeln!(writer, "p {} {}", graph.num_vertices, graph.edges.len())?;
    for &(u, v, w) in &graph.edges {
        writeln!(writer, "e {u} {v} {w}")?;
    }
    Ok(())
}
