//! The alternating-operator pipeline: state evolution, parameter search
//! (coarse grid → depth-to-depth interpolation → Nelder–Mead refinement),
//! and approximation-ratio reporting.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cut::{brute_force, ColorAssignment};
use crate::graph::Graph;
use crate::hamiltonian::{
    build_cut_diagonal, build_objective_diagonal, DiagonalHamiltonian, EncodingScheme, SchemeKind,
};
use crate::sim::{check_qubit_budget, SampleSet, Statevector};
use crate::{Error, Result};

/// Per-layer angles: `gammas[t]` scales the cost phase of layer t, `betas[t]`
/// the mixer. Both vectors share the depth p ≥ 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QaoaSchedule {
    pub gammas: Vec<f64>,
    pub betas: Vec<f64>,
}

impl QaoaSchedule {
    pub fn new(gammas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        if gammas.is_empty() || gammas.len() != betas.len() {
            return Err(Error::Parameter(format!(
                "schedule needs equal, nonempty angle vectors (got {} and {})",
                gammas.len(),
                betas.len()
            )));
        }
        Ok(QaoaSchedule { gammas, betas })
    }

    pub fn depth(&self) -> usize {
        self.gammas.len()
    }
}

/// A problem instance with everything the inner optimization loop needs
/// precomputed: the objective diagonal, the scheme's initial state, and the
/// mixer layout.
pub struct QaoaProblem {
    scheme: EncodingScheme,
    num_vertices: usize,
    objective: DiagonalHamiltonian,
    initial: Statevector,
}

impl QaoaProblem {
    pub fn new(graph: &Graph, scheme: &EncodingScheme, qubit_budget: Option<usize>) -> Result<Self> {
        scheme.validate(graph)?;
        let n_qubits = scheme.num_qubits(graph.num_vertices());
        check_qubit_budget(n_qubits, qubit_budget)?;
        let objective = build_objective_diagonal(graph, scheme)?;
        let initial = initial_state(scheme, graph.num_vertices())?;
        Ok(QaoaProblem {
            scheme: *scheme,
            num_vertices: graph.num_vertices(),
            objective,
            initial,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.objective.n_qubits
    }

    pub fn objective(&self) -> &DiagonalHamiltonian {
        &self.objective
    }

    /// Runs the alternating evolution from the scheme's initial state.
    pub fn evolve(&self, schedule: &QaoaSchedule) -> Statevector {
        let mut state = self.initial.clone();
        for (&gamma, &beta) in schedule.gammas.iter().zip(&schedule.betas) {
            state.apply_diagonal_phase(gamma, &self.objective.values);
            apply_mixer(&mut state, &self.scheme, self.num_vertices, beta);
        }
        state
    }

    /// Objective expectation after evolving with packed parameters
    /// [γ₁…γ_p, β₁…β_p] — the function the optimizers minimize.
    fn energy_of(&self, packed: &[f64]) -> f64 {
        let p = packed.len() / 2;
        let schedule = QaoaSchedule {
            gammas: packed[..p].to_vec(),
            betas: packed[p..].to_vec(),
        };
        self.evolve(&schedule).expectation(&self.objective.values)
    }
}

/// The scheme's start state: the uniform superposition for X-mixer schemes,
/// a product of single-vertex equal-weight one-hot superpositions for the
/// XY scheme (so the evolution never leaves the feasible subspace).
fn initial_state(scheme: &EncodingScheme, num_vertices: usize) -> Result<Statevector> {
    let n_qubits = scheme.num_qubits(num_vertices);
    if scheme.kind != SchemeKind::OneHotXY {
        return Statevector::prepare_plus(n_qubits);
    }
    let k = scheme.k;
    let dim = 1usize << n_qubits;
    let amp = num_complex::Complex64::new((k as f64).powi(-(num_vertices as i32)).sqrt(), 0.0);
    let mut amps = vec![num_complex::Complex64::new(0.0, 0.0); dim];
    // Walk all k^nv feasible assignments with an odometer.
    let mut colors = vec![0usize; num_vertices];
    loop {
        let mut z = 0usize;
        for (v, &c) in colors.iter().enumerate() {
            z |= 1 << (n_qubits - 1 - (v * k + c));
        }
        amps[z] = amp;
        let mut pos = num_vertices;
        while pos > 0 {
            pos -= 1;
            colors[pos] += 1;
            if colors[pos] < k {
                break;
            }
            colors[pos] = 0;
            if pos == 0 {
                return Statevector::from_amplitudes(amps);
            }
        }
    }
}

/// Color-index pairs forming one parity pass of the ring mixer.
pub type PairPass = Vec<(usize, usize)>;

/// Color pairs the XY mixer sweeps, as two passes: adjacent pairs starting
/// at even positions, then the remaining adjacent pairs plus the wrap-around
/// (k−1, 0). Together the passes cover the k-cycle once, so a mixer layer
/// costs k pair rotations per vertex.
pub fn xy_partitions(k: usize) -> (PairPass, PairPass) {
    let odd: PairPass = (0..k - 1).step_by(2).map(|a| (a, a + 1)).collect();
    let mut even: PairPass = (1..k - 1).step_by(2).map(|a| (a, a + 1)).collect();
    even.push((k - 1, 0));
    (odd, even)
}

fn apply_mixer(state: &mut Statevector, scheme: &EncodingScheme, num_vertices: usize, beta: f64) {
    match scheme.kind {
        SchemeKind::Binary | SchemeKind::OneHotX | SchemeKind::OneHotPenaltyX => {
            for q in 0..state.n_qubits() {
                state.apply_rx(q, beta);
            }
        }
        SchemeKind::OneHotXY => {
            let k = scheme.k;
            let (first, second) = xy_partitions(k);
            for v in 0..num_vertices {
                for &(a, b) in &first {
                    state.apply_xy_pair(v * k + a, v * k + b, beta);
                }
                for &(a, b) in &second {
                    state.apply_xy_pair(v * k + a, v * k + b, beta);
                }
            }
        }
    }
}

/// Evolves a fresh problem; convenience wrapper over [`QaoaProblem`].
pub fn evolve(graph: &Graph, scheme: &EncodingScheme, schedule: &QaoaSchedule) -> Result<Statevector> {
    Ok(QaoaProblem::new(graph, scheme, None)?.evolve(schedule))
}

/// Exact cut expectation of a state: Σ_z |amp[z]|²·cut(z), with infeasible
/// one-hot states counting zero.
pub fn expected_cost(state: &Statevector, graph: &Graph, scheme: &EncodingScheme) -> Result<f64> {
    let cut = build_cut_diagonal(graph, scheme)?;
    Ok(state.expectation(&cut))
}

/// expected / best, defined as 1.0 when the optimum is zero (empty or
/// single-color-optimal graphs cut nothing, and the solver trivially ties).
pub fn approximation_ratio(expected: f64, best: f64) -> f64 {
    if best == 0.0 {
        1.0
    } else {
        expected / best
    }
}

/// Coarse p=1 search lattice. `None` bounds resolve to γ ∈ [0, 2π] (scaled
/// by 1/mean|w| on weighted graphs, keeping the phase period covered) and
/// β ∈ [0, π]; both axes include their endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub n_gamma: usize,
    pub n_beta: usize,
    pub gamma_max: Option<f64>,
    pub beta_max: Option<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { n_gamma: 20, n_beta: 20, gamma_max: None, beta_max: None }
    }
}

impl GridSpec {
    pub fn resolve(&self, graph: &Graph) -> Result<(f64, f64)> {
        if self.n_gamma < 2 || self.n_beta < 2 {
            return Err(Error::Parameter("grid needs at least 2 nodes per axis".into()));
        }
        let gamma_max = self.gamma_max.unwrap_or_else(|| {
            let base = 2.0 * std::f64::consts::PI;
            if graph.is_weighted() {
                base / graph.mean_abs_weight()
            } else {
                base
            }
        });
        let beta_max = self.beta_max.unwrap_or(std::f64::consts::PI);
        if gamma_max <= 0.0 || beta_max <= 0.0 {
            return Err(Error::Parameter("grid bounds must be positive".into()));
        }
        Ok((gamma_max, beta_max))
    }
}

/// Output of the p=1 lattice scan: the best node plus the full table
/// (row-major over γ then β) for landscape export.
#[derive(Debug, Clone, Serialize)]
pub struct GridSearchResult {
    pub gamma: f64,
    pub beta: f64,
    pub energy: f64,
    pub table: Vec<(f64, f64, f64)>,
}

/// Evaluates the p=1 objective expectation on the lattice and returns the
/// lowest-energy node, breaking ties toward the lexicographically smallest
/// (γ, β). Nodes are independent evolutions and evaluate in parallel.
pub fn grid_search_p1(
    graph: &Graph,
    problem: &QaoaProblem,
    grid: &GridSpec,
) -> Result<GridSearchResult> {
    let (gamma_max, beta_max) = grid.resolve(graph)?;
    let mut nodes = Vec::with_capacity(grid.n_gamma * grid.n_beta);
    for i in 0..grid.n_gamma {
        let gamma = gamma_max * i as f64 / (grid.n_gamma - 1) as f64;
        for j in 0..grid.n_beta {
            let beta = beta_max * j as f64 / (grid.n_beta - 1) as f64;
            nodes.push((gamma, beta));
        }
    }
    let table: Vec<(f64, f64, f64)> = nodes
        .par_iter()
        .map(|&(gamma, beta)| (gamma, beta, problem.energy_of(&[gamma, beta])))
        .collect();
    // Scan order is lexicographic in (γ, β); strict improvement keeps the
    // first (smallest) minimizer.
    let mut best = table[0];
    for &node in &table[1..] {
        if node.2 < best.2 {
            best = node;
        }
    }
    Ok(GridSearchResult { gamma: best.0, beta: best.1, energy: best.2, table })
}

/// Stretches a depth-p angle vector to depth p+1 by linear blending: entry i
/// (1-based) of the output is ((i−1)/p)·in[i−1] + ((p−i+1)/p)·in[i], with
/// out-of-range input entries reading 0. Endpoints are preserved, p=1
/// duplicates the single angle.
pub fn interpolate(params: &[f64]) -> Vec<f64> {
    let p = params.len();
    assert!(p >= 1, "cannot interpolate an empty schedule");
    let at = |i: isize| -> f64 {
        if i < 0 || i >= p as isize {
            0.0
        } else {
            params[i as usize]
        }
    };
    (1..=p + 1)
        .map(|i| {
            let w = (i - 1) as f64 / p as f64;
            w * at(i as isize - 2) + (1.0 - w) * at(i as isize - 1)
        })
        .collect()
}

/// Downhill-simplex settings. Coefficients are fixed (reflection 1.0,
/// expansion 2.0, contraction 0.5, shrink 0.5); the initial simplex scales
/// each nonzero coordinate of x0 by 1.05 and steps zero coordinates to
/// 0.00025.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NmOptions {
    /// Iteration cap; `None` means 200 per dimension.
    pub max_iter: Option<usize>,
    /// Convergence threshold on the simplex's function-value spread.
    pub tol: f64,
}

impl Default for NmOptions {
    fn default() -> Self {
        NmOptions { max_iter: None, tol: 1e-6 }
    }
}

/// Minimization outcome: best point, value, and the best-value trace
/// (one entry per iteration).
#[derive(Debug, Clone, Serialize)]
pub struct NmResult {
    pub x: Vec<f64>,
    pub fx: f64,
    pub iterations: usize,
    pub trace: Vec<f64>,
}

/// Deterministic Nelder–Mead descent. Returns an error if the objective
/// ever produces a non-finite value.
pub fn nelder_mead<F>(mut f: F, x0: &[f64], opts: &NmOptions) -> Result<NmResult>
where
    F: FnMut(&[f64]) -> f64,
{
    if x0.is_empty() {
        return Err(Error::Parameter("optimizer needs at least one dimension".into()));
    }
    let n = x0.len();
    let max_iter = opts.max_iter.unwrap_or(200 * n);
    let mut eval = |x: &[f64]| -> Result<f64> {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFiniteObjective { point: x.to_vec() });
        }
        Ok(v)
    };

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut y = x0.to_vec();
        if y[i] != 0.0 {
            y[i] *= 1.05;
        } else {
            y[i] = 0.00025;
        }
        simplex.push(y);
    }
    let mut fvals: Vec<f64> = simplex.iter().map(|x| eval(x)).collect::<Result<_>>()?;

    let sort_simplex = |simplex: &mut Vec<Vec<f64>>, fvals: &mut Vec<f64>| {
        let mut order: Vec<usize> = (0..simplex.len()).collect();
        // Stable sort keeps insertion order on ties, so runs are reproducible.
        order.sort_by(|&a, &b| fvals[a].partial_cmp(&fvals[b]).unwrap());
        *simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        *fvals = order.iter().map(|&i| fvals[i]).collect();
    };
    sort_simplex(&mut simplex, &mut fvals);

    let mut trace = Vec::new();
    let mut iterations = 0;
    while iterations < max_iter {
        let spread = fvals[1..]
            .iter()
            .map(|&v| (v - fvals[0]).abs())
            .fold(0.0f64, f64::max);
        if spread < opts.tol {
            break;
        }
        iterations += 1;

        let centroid: Vec<f64> = (0..n)
            .map(|d| simplex[..n].iter().map(|x| x[d]).sum::<f64>() / n as f64)
            .collect();
        let worst = simplex[n].clone();
        let reflect: Vec<f64> = (0..n).map(|d| 2.0 * centroid[d] - worst[d]).collect();
        let f_reflect = eval(&reflect)?;

        if f_reflect < fvals[0] {
            let expand: Vec<f64> = (0..n).map(|d| 3.0 * centroid[d] - 2.0 * worst[d]).collect();
            let f_expand = eval(&expand)?;
            if f_expand < f_reflect {
                simplex[n] = expand;
                fvals[n] = f_expand;
            } else {
                simplex[n] = reflect;
                fvals[n] = f_reflect;
            }
        } else if f_reflect < fvals[n - 1] {
            simplex[n] = reflect;
            fvals[n] = f_reflect;
        } else if f_reflect < fvals[n] {
            // Outside contraction, halfway from centroid toward the reflection.
            let point: Vec<f64> = (0..n).map(|d| 1.5 * centroid[d] - 0.5 * worst[d]).collect();
            let f_point = eval(&point)?;
            if f_point <= f_reflect {
                simplex[n] = point;
                fvals[n] = f_point;
            } else {
                shrink(&mut simplex, &mut fvals, &mut eval)?;
            }
        } else {
            // Inside contraction, halfway from centroid toward the worst point.
            let point: Vec<f64> = (0..n).map(|d| 0.5 * centroid[d] + 0.5 * worst[d]).collect();
            let f_point = eval(&point)?;
            if f_point < fvals[n] {
                simplex[n] = point;
                fvals[n] = f_point;
            } else {
                shrink(&mut simplex, &mut fvals, &mut eval)?;
            }
        }
        sort_simplex(&mut simplex, &mut fvals);
        trace.push(fvals[0]);
    }

    Ok(NmResult { x: simplex[0].clone(), fx: fvals[0], iterations, trace })
}

fn shrink<E>(simplex: &mut [Vec<f64>], fvals: &mut [f64], eval: &mut E) -> Result<()>
where
    E: FnMut(&[f64]) -> Result<f64>,
{
    let best = simplex[0].clone();
    for j in 1..simplex.len() {
        for d in 0..best.len() {
            simplex[j][d] = best[d] + 0.5 * (simplex[j][d] - best[d]);
        }
        fvals[j] = eval(&simplex[j])?;
    }
    Ok(())
}

/// Everything a full solve needs beyond the graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub scheme: EncodingScheme,
    /// Deepest circuit to optimize; depths 1..=max_depth all run.
    pub max_depth: usize,
    pub shots: u64,
    pub seed: u64,
    pub grid: GridSpec,
    pub nm: NmOptions,
    /// Simulator size cap; `None` = 26 qubits.
    pub qubit_budget: Option<usize>,
    /// Exhaustive-search cap; `None` = 10^8 assignments.
    pub brute_budget: Option<u64>,
}

impl RunConfig {
    pub fn new(scheme: EncodingScheme) -> Self {
        RunConfig {
            scheme,
            max_depth: 1,
            shots: 8192,
            seed: 0,
            grid: GridSpec::default(),
            nm: NmOptions::default(),
            qubit_budget: None,
            brute_budget: None,
        }
    }
}

/// Everything recorded about one depth of the pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct DepthReport {
    pub depth: usize,
    /// Starting angles (grid node at depth 1, interpolation above).
    pub gamma_init: Vec<f64>,
    pub beta_init: Vec<f64>,
    /// Angles after Nelder–Mead refinement.
    pub gamma_opt: Vec<f64>,
    pub beta_opt: Vec<f64>,
    /// Optimized objective expectation (includes the penalty term when the
    /// scheme has one).
    pub energy: f64,
    /// Exact decode-based cut expectation and its ratio to the optimum.
    pub expected_cut: f64,
    pub exact_ratio: f64,
    /// Shot-based estimate of the same quantities.
    pub sampled_cut: f64,
    pub sampled_ratio: f64,
    pub samples: SampleSet,
    pub nm_iterations: usize,
    pub nm_trace: Vec<f64>,
    /// Wall-clock; excluded from serialized reports so identical runs
    /// produce byte-identical files.
    #[serde(skip)]
    pub wall_ms: u128,
}

/// A full solve: per-depth schedules, energies, ratios, and samples.
#[derive(Debug, Clone, Serialize)]
pub struct QaoaRun {
    pub config: RunConfig,
    pub graph: Graph,
    pub best_value: f64,
    pub best_assignment: ColorAssignment,
    /// Resolved grid bounds actually used at depth 1.
    pub gamma_max: f64,
    pub beta_max: f64,
    pub depths: Vec<DepthReport>,
}

/// Runs the full pipeline: exhaustive optimum for reference, p=1 grid
/// search, then for each depth Nelder–Mead refinement seeded by the previous
/// depth's interpolated optimum. The seed fans out to the sampler as
/// `seed + depth`.
pub fn run_qaoa(graph: &Graph, config: &RunConfig) -> Result<QaoaRun> {
    if config.max_depth == 0 {
        return Err(Error::Parameter("depth must be at least 1".into()));
    }
    let problem = QaoaProblem::new(graph, &config.scheme, config.qubit_budget)?;
    let cut_diag = build_cut_diagonal(graph, &config.scheme)?;
    let optimum = brute_force(graph, config.scheme.k, config.brute_budget)?;
    let (gamma_max, beta_max) = config.grid.resolve(graph)?;

    let mut depths = Vec::with_capacity(config.max_depth);
    let mut prev_opt: Option<(Vec<f64>, Vec<f64>)> = None;
    for depth in 1..=config.max_depth {
        let start = Instant::now();
        let (gamma_init, beta_init) = match &prev_opt {
            None => {
                let grid = grid_search_p1(graph, &problem, &config.grid)?;
                (vec![grid.gamma], vec![grid.beta])
            }
            Some((gammas, betas)) => (interpolate(gammas), interpolate(betas)),
        };

        let mut packed = gamma_init.clone();
        packed.extend_from_slice(&beta_init);
        let nm = nelder_mead(|x| problem.energy_of(x), &packed, &config.nm)?;
        let gamma_opt = nm.x[..depth].to_vec();
        let beta_opt = nm.x[depth..].to_vec();

        let schedule = QaoaSchedule::new(gamma_opt.clone(), beta_opt.clone())?;
        let state = problem.evolve(&schedule);
        let expected_cut = state.expectation(&cut_diag);
        let samples = state.sample(config.shots, config.seed + depth as u64);
        let sampled_cut = samples.expectation(&cut_diag);

        depths.push(DepthReport {
            depth,
            gamma_init,
            beta_init,
            gamma_opt: gamma_opt.clone(),
            beta_opt: beta_opt.clone(),
            energy: nm.fx,
            expected_cut,
            exact_ratio: approximation_ratio(expected_cut, optimum.best_value),
            sampled_cut,
            sampled_ratio: approximation_ratio(sampled_cut, optimum.best_value),
            samples,
            nm_iterations: nm.iterations,
            nm_trace: nm.trace,
            wall_ms: start.elapsed().as_millis(),
        });
        prev_opt = Some((gamma_opt, beta_opt));
    }

    Ok(QaoaRun {
        config: config.clone(),
        graph: graph.clone(),
        best_value: optimum.best_value,
        best_assignment: optimum.best_assignment,
        gamma_max,
        beta_max,
        depths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::decode_onehot;

    #[test]
    fn schedule_validation() {
        assert!(QaoaSchedule::new(vec![], vec![]).is_err());
        assert!(QaoaSchedule::new(vec![0.1], vec![0.2, 0.3]).is_err());
        assert_eq!(QaoaSchedule::new(vec![0.1], vec![0.2]).unwrap().depth(), 1);
    }

    #[test]
    fn barbell_binary_energy_matches_closed_form() {
        // For a single unit edge in the binary k=2 encoding the p=1 energy
        // is sin(4β)·sin(2γ) — derived by hand from the gate conventions.
        let g = Graph::barbell();
        let scheme = EncodingScheme::binary(2);
        for (gamma, beta) in [(0.3, 0.2), (1.1, 0.8), (2.0, 2.9), (4.4, 0.1)] {
            let schedule = QaoaSchedule::new(vec![gamma], vec![beta]).unwrap();
            let state = evolve(&g, &scheme, &schedule).unwrap();
            let h = crate::hamiltonian::build_binary_diagonal(&g, 2).unwrap();
            let e = state.expectation(&h.values);
            let expected = (4.0 * beta).sin() * (2.0 * gamma).sin();
            assert!((e - expected).abs() < 1e-12, "γ={gamma} β={beta}: {e} vs {expected}");
        }
    }

    #[test]
    fn scaling_weights_and_inverse_scaling_gamma_is_identity() {
        let g = Graph::new(3, vec![(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        let doubled = Graph::new(3, vec![(0, 1, 2.0), (1, 2, 4.0)]).unwrap();
        let scheme = EncodingScheme::binary(3);
        let a = evolve(&g, &scheme, &QaoaSchedule::new(vec![0.8], vec![0.37]).unwrap()).unwrap();
        let b = evolve(&doubled, &scheme, &QaoaSchedule::new(vec![0.4], vec![0.37]).unwrap()).unwrap();
        for (x, y) in a.amplitudes().iter().zip(b.amplitudes()) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn xy_mixer_preserves_the_feasible_subspace() {
        let g = Graph::barbell();
        for k in [2, 3, 5] {
            let scheme = EncodingScheme::onehot_xy(k);
            let schedule =
                QaoaSchedule::new(vec![0.7, 1.3, 0.2], vec![0.4, 0.9, 2.2]).unwrap();
            let state = evolve(&g, &scheme, &schedule).unwrap();
            let leaked: f64 = state
                .amplitudes()
                .iter()
                .enumerate()
                .filter(|(z, _)| decode_onehot(*z as u64, 2, k).is_none())
                .map(|(_, a)| a.norm_sqr())
                .sum();
            assert!(leaked < 1e-12, "k={k} leaked {leaked}");
            assert!((state.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn xy_partition_shapes() {
        assert_eq!(xy_partitions(2), (vec![(0, 1)], vec![(1, 0)]));
        assert_eq!(xy_partitions(3), (vec![(0, 1)], vec![(1, 2), (2, 0)]));
        assert_eq!(xy_partitions(4), (vec![(0, 1), (2, 3)], vec![(1, 2), (3, 0)]));
        for k in 2..=9 {
            let (a, b) = xy_partitions(k);
            assert_eq!(a.len() + b.len(), k, "k={k}");
        }
    }

    #[test]
    fn interpolate_closed_forms() {
        assert_eq!(interpolate(&[0.4]), vec![0.4, 0.4]);
        let out = interpolate(&[1.0, 3.0]);
        assert_eq!(out, vec![1.0, 2.0, 3.0]);
        // Endpoints always survive.
        let out = interpolate(&[0.3, -1.0, 2.0]);
        assert_eq!(out[0], 0.3);
        assert_eq!(out[3], 2.0);
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn nelder_mead_minimizes_a_quadratic() {
        let f = |x: &[f64]| (x[0] - 1.5).powi(2) + 3.0 * (x[1] + 0.5).powi(2) + 2.0;
        let r = nelder_mead(f, &[3.0, -2.0], &NmOptions { max_iter: None, tol: 1e-12 }).unwrap();
        assert!((r.x[0] - 1.5).abs() < 1e-4, "{:?}", r.x);
        assert!((r.x[1] + 0.5).abs() < 1e-4);
        assert!((r.fx - 2.0).abs() < 1e-8);
        // Trace is monotonically non-increasing.
        for w in r.trace.windows(2) {
            assert!(w[1] <= w[0] + 1e-15);
        }
        // Zero coordinates still move (dedicated initial step).
        let g = |x: &[f64]| (x[0] - 0.1).powi(2);
        let r = nelder_mead(g, &[0.0], &NmOptions::default()).unwrap();
        assert!((r.x[0] - 0.1).abs() < 1e-3);
    }

    #[test]
    fn nelder_mead_rejects_non_finite_objectives() {
        let f = |x: &[f64]| if x[0] > 1.0 { f64::NAN } else { -x[0] };
        assert!(matches!(
            nelder_mead(f, &[0.9], &NmOptions::default()),
            Err(Error::NonFiniteObjective { .. })
        ));
    }

    #[test]
    fn grid_search_finds_the_barbell_optimum_region() {
        let g = Graph::barbell();
        let scheme = EncodingScheme::binary(2);
        let problem = QaoaProblem::new(&g, &scheme, None).unwrap();
        let r = grid_search_p1(&g, &problem, &GridSpec::default()).unwrap();
        assert_eq!(r.table.len(), 400);
        // Closed form: energy = sin(4β)sin(2γ); check table consistency.
        for &(gamma, beta, e) in &r.table {
            assert!((e - (4.0 * beta).sin() * (2.0 * gamma).sin()).abs() < 1e-12);
        }
        assert!(r.energy < -0.9, "grid should land near the minimum, got {}", r.energy);
    }

    #[test]
    fn grid_search_tie_break_picks_origin_on_flat_landscapes() {
        let g = Graph::new(2, vec![]).unwrap(); // no edges → all energies 0
        let scheme = EncodingScheme::binary(2);
        let problem = QaoaProblem::new(&g, &scheme, None).unwrap();
        let r = grid_search_p1(&g, &problem, &GridSpec::default()).unwrap();
        assert_eq!((r.gamma, r.beta), (0.0, 0.0));
    }

    #[test]
    fn run_qaoa_barbell_reaches_the_optimum() {
        let g = Graph::barbell();
        let mut config = RunConfig::new(EncodingScheme::binary(2));
        config.max_depth = 2;
        config.seed = 5;
        let run = run_qaoa(&g, &config).unwrap();
        assert_eq!(run.best_value, 1.0);
        assert_eq!(run.depths.len(), 2);
        let d1 = &run.depths[0];
        assert!(d1.exact_ratio > 0.999, "p=1 should solve the single edge: {}", d1.exact_ratio);
        assert!(d1.exact_ratio <= 1.0 + 1e-12);
        assert!((d1.sampled_ratio - d1.exact_ratio).abs() < 0.05);
        assert_eq!(d1.samples.counts.values().sum::<u64>(), 8192);
        // Depth 2 starts from the interpolated depth-1 schedule.
        assert_eq!(run.depths[1].gamma_init.len(), 2);
        assert!(run.depths[1].exact_ratio >= d1.exact_ratio - 1e-9);
    }

    #[test]
    fn run_qaoa_is_deterministic() {
        let g = crate::graph::gen_erdos_renyi(5, 0.6, 3, None).unwrap();
        let mut config = RunConfig::new(EncodingScheme::binary(3));
        config.max_depth = 2;
        config.seed = 11;
        let a = run_qaoa(&g, &config).unwrap();
        let b = run_qaoa(&g, &config).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn qubit_budget_guards_large_problems() {
        let g = crate::graph::gen_erdos_renyi(10, 0.5, 1, None).unwrap();
        let scheme = EncodingScheme::onehot_xy(3); // 30 qubits
        assert!(matches!(QaoaProblem::new(&g, &scheme, None), Err(Error::Capacity(_))));
    }
}
