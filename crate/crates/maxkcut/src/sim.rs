//! Dense statevector simulator.
//!
//! A state over n qubits is a `Vec<Complex64>` of length 2^n. **Bit order:**
//! qubit 0 is the *most significant* bit of the basis index, so
//! `apply_x(0)` on |00⟩ moves the amplitude to index 2. All rotation
//! conventions are documented on the method that owns them and pinned by
//! matrix-exponential oracle tests.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{Error, Result};

/// Default cap on simulated qubits (2^26 amplitudes ≈ 1 GiB).
pub const DEFAULT_QUBIT_BUDGET: usize = 26;

/// Errors out when a requested register exceeds the qubit budget.
pub fn check_qubit_budget(n_qubits: usize, budget: Option<usize>) -> Result<()> {
    let budget = budget.unwrap_or(DEFAULT_QUBIT_BUDGET);
    if n_qubits > budget {
        return Err(Error::Capacity(format!(
            "{n_qubits} qubits requested, budget is {budget} (override the budget to go larger)"
        )));
    }
    Ok(())
}

/// Multinomial measurement record: basis index → hit count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleSet {
    pub shots: u64,
    pub seed: u64,
    /// Ordered map so serialization is deterministic.
    pub counts: BTreeMap<u64, u64>,
}

impl SampleSet {
    /// Mean of `values[z]` under the empirical distribution.
    pub fn expectation(&self, values: &[f64]) -> f64 {
        let total: f64 = self
            .counts
            .iter()
            .map(|(&z, &c)| c as f64 * values[z as usize])
            .sum();
        total / self.shots as f64
    }
}

/// Dense complex statevector.
#[derive(Debug, Clone)]
pub struct Statevector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl Statevector {
    /// |0…0⟩ on `n_qubits`.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        let mut sv = Self::filled(n_qubits, Complex64::new(0.0, 0.0))?;
        sv.amps[0] = Complex64::new(1.0, 0.0);
        Ok(sv)
    }

    /// A single computational basis state |z⟩.
    pub fn basis_state(n_qubits: usize, z: u64) -> Result<Self> {
        let mut sv = Self::filled(n_qubits, Complex64::new(0.0, 0.0))?;
        if z as usize >= sv.amps.len() {
            return Err(Error::Parameter(format!("basis index {z} out of range")));
        }
        sv.amps[z as usize] = Complex64::new(1.0, 0.0);
        Ok(sv)
    }

    /// Uniform superposition (H on every qubit of |0…0⟩).
    pub fn prepare_plus(n_qubits: usize) -> Result<Self> {
        let dim = 1usize << n_qubits;
        let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Self::filled(n_qubits, amp)
    }

    /// Equal positive superposition of all Hamming-weight-1 basis states on
    /// k qubits (amplitude 1/√k on each).
    pub fn prepare_wk(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Parameter("W state needs at least one qubit".into()));
        }
        let mut sv = Self::filled(k, Complex64::new(0.0, 0.0))?;
        let amp = Complex64::new(1.0 / (k as f64).sqrt(), 0.0);
        for q in 0..k {
            sv.amps[1 << (k - 1 - q)] = amp;
        }
        Ok(sv)
    }

    /// Wraps raw amplitudes; the length must be a power of two and the norm
    /// must already be 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() || !amps.len().is_power_of_two() {
            return Err(Error::Parameter(format!(
                "amplitude vector length {} is not a power of two",
                amps.len()
            )));
        }
        let n_qubits = amps.len().trailing_zeros() as usize;
        let sv = Statevector { n_qubits, amps };
        let norm = sv.norm();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::Parameter(format!("state norm {norm} is not 1")));
        }
        Ok(sv)
    }

    fn filled(n_qubits: usize, amp: Complex64) -> Result<Self> {
        if n_qubits == 0 || n_qubits > 34 {
            return Err(Error::Parameter(format!("cannot simulate {n_qubits} qubits")));
        }
        Ok(Statevector { n_qubits, amps: vec![amp; 1usize << n_qubits] })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }

    fn qubit_mask(&self, qubit: usize) -> usize {
        assert!(qubit < self.n_qubits, "qubit {qubit} out of range");
        1usize << (self.n_qubits - 1 - qubit)
    }

    /// Applies a general single-qubit unitary
    /// U3(θ, φ, λ) = [[cos(θ/2), −e^{iλ}·sin(θ/2)],
    ///               [e^{iφ}·sin(θ/2), e^{i(φ+λ)}·cos(θ/2)]].
    pub fn apply_u3(&mut self, qubit: usize, theta: f64, phi: f64, lambda: f64) {
        let c = (theta / 2.0).cos();
        let s = (theta / 2.0).sin();
        let m00 = Complex64::new(c, 0.0);
        let m01 = -Complex64::from_polar(s, lambda);
        let m10 = Complex64::from_polar(s, phi);
        let m11 = Complex64::from_polar(c, phi + lambda);
        let mask = self.qubit_mask(qubit);
        let dim = self.amps.len();
        let mut base = 0;
        while base < dim {
            for i0 in base..base + mask {
                let i1 = i0 | mask;
                let a0 = self.amps[i0];
                let a1 = self.amps[i1];
                self.amps[i0] = m00 * a0 + m01 * a1;
                self.amps[i1] = m10 * a0 + m11 * a1;
            }
            base += mask << 1;
        }
    }

    /// Pauli X (bit flip) — a fast path for the common case.
    pub fn apply_x(&mut self, qubit: usize) {
        let mask = self.qubit_mask(qubit);
        let dim = self.amps.len();
        let mut base = 0;
        while base < dim {
            for i0 in base..base + mask {
                self.amps.swap(i0, i0 | mask);
            }
            base += mask << 1;
        }
    }

    /// Controlled-X: flips `target` where `control` reads 1.
    pub fn apply_cx(&mut self, control: usize, target: usize) {
        assert_ne!(control, target, "control and target must differ");
        let cmask = self.qubit_mask(control);
        let tmask = self.qubit_mask(target);
        for i in 0..self.amps.len() {
            if i & cmask != 0 && i & tmask == 0 {
                self.amps.swap(i, i | tmask);
            }
        }
    }

    /// Multiplies amplitudes by e^{iφ} exactly where all `controls` *and*
    /// `target` read 1. An empty control set is a plain phase gate.
    pub fn apply_controlled_phase(&mut self, controls: &[usize], target: usize, phi: f64) {
        let mut mask = self.qubit_mask(target);
        for &c in controls {
            assert_ne!(c, target, "control duplicates target");
            mask |= self.qubit_mask(c);
        }
        let phase = Complex64::from_polar(1.0, phi);
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *amp *= phase;
            }
        }
    }

    /// e^{−iγ·diag(values)}: amplitude[z] *= e^{−iγ·values[z]}.
    /// This is the fast path for diagonal cost operators.
    pub fn apply_diagonal_phase(&mut self, gamma: f64, values: &[f64]) {
        assert_eq!(values.len(), self.amps.len(), "diagonal length mismatch");
        for (amp, &v) in self.amps.iter_mut().zip(values) {
            *amp *= Complex64::from_polar(1.0, -gamma * v);
        }
    }

    /// Full-angle X rotation e^{−iβσx} = [[cos β, −i·sin β], [−i·sin β, cos β]].
    pub fn apply_rx(&mut self, qubit: usize, beta: f64) {
        let c = Complex64::new(beta.cos(), 0.0);
        let s = Complex64::new(0.0, -beta.sin());
        let mask = self.qubit_mask(qubit);
        let dim = self.amps.len();
        let mut base = 0;
        while base < dim {
            for i0 in base..base + mask {
                let i1 = i0 | mask;
                let a0 = self.amps[i0];
                let a1 = self.amps[i1];
                self.amps[i0] = c * a0 + s * a1;
                self.amps[i1] = s * a0 + c * a1;
            }
            base += mask << 1;
        }
    }

    /// Exact two-qubit rotation e^{−iβ(σx⊗σx + σy⊗σy)}: acts as
    /// [[cos 2β, −i·sin 2β], [−i·sin 2β, cos 2β]] on the {|01⟩, |10⟩}
    /// subspace and as the identity on |00⟩ and |11⟩, so Hamming weight is
    /// preserved exactly.
    pub fn apply_xy_pair(&mut self, qubit_a: usize, qubit_b: usize, beta: f64) {
        assert_ne!(qubit_a, qubit_b, "pair qubits must differ");
        let c = Complex64::new((2.0 * beta).cos(), 0.0);
        let s = Complex64::new(0.0, -(2.0 * beta).sin());
        let amask = self.qubit_mask(qubit_a);
        let bmask = self.qubit_mask(qubit_b);
        for i in 0..self.amps.len() {
            // Visit each {|01⟩, |10⟩} pair once, from its a=0,b=1 member.
            if i & amask == 0 && i & bmask != 0 {
                let j = (i | amask) & !bmask;
                let a01 = self.amps[i];
                let a10 = self.amps[j];
                self.amps[i] = c * a01 + s * a10;
                self.amps[j] = s * a01 + c * a10;
            }
        }
    }

    /// ⟨state| diag(values) |state⟩, exactly (no sampling).
    pub fn expectation(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.amps.len(), "diagonal length mismatch");
        self.amps
            .iter()
            .zip(values)
            .map(|(a, &v)| a.norm_sqr() * v)
            .sum()
    }

    /// Draws `shots` basis states from |amplitude|² with a dedicated seeded
    /// generator. Deterministic for fixed (state, shots, seed).
    pub fn sample(&self, shots: u64, seed: u64) -> SampleSet {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draws: Vec<f64> = (0..shots).map(|_| rng.gen::<f64>()).collect();
        draws.sort_by(|a, b| a.partial_cmp(b).unwrap());

        let mut counts = BTreeMap::new();
        let mut cumulative = 0.0;
        let mut next = 0usize;
        let mut last_nonzero = 0u64;
        for (z, amp) in self.amps.iter().enumerate() {
            let p = amp.norm_sqr();
            if p == 0.0 {
                continue;
            }
            last_nonzero = z as u64;
            cumulative += p;
            let mut hits = 0u64;
            while next < draws.len() && draws[next] < cumulative {
                hits += 1;
                next += 1;
            }
            if hits > 0 {
                *counts.entry(z as u64).or_insert(0) += hits;
            }
        }
        // Rounding can leave the cumulative total a hair below the last few
        // draws; attribute the remainder to the last populated state.
        if next < draws.len() {
            *counts.entry(last_nonzero).or_insert(0) += (draws.len() - next) as u64;
        }
        SampleSet { shots, seed, counts }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_amp(sv: &Statevector, z: usize, re: f64, im: f64) {
        let a = sv.amplitudes()[z];
        assert!(
            (a.re - re).abs() < 1e-12 && (a.im - im).abs() < 1e-12,
            "amp[{z}] = {a}, expected {re}+{im}i"
        );
    }

    #[test]
    fn qubit_zero_is_most_significant() {
        let mut sv = Statevector::zero(2).unwrap();
        sv.apply_x(0);
        assert_amp(&sv, 2, 1.0, 0.0);
        sv.apply_x(1);
        assert_amp(&sv, 3, 1.0, 0.0);
    }

    #[test]
    fn cx_moves_index_2_to_3() {
        let mut sv = Statevector::basis_state(2, 2).unwrap();
        sv.apply_cx(0, 1);
        assert_amp(&sv, 3, 1.0, 0.0);
        // Control clear: nothing happens.
        let mut sv = Statevector::basis_state(2, 1).unwrap();
        sv.apply_cx(0, 1);
        assert_amp(&sv, 1, 1.0, 0.0);
    }

    #[test]
    fn u3_special_cases() {
        use std::f64::consts::{FRAC_1_SQRT_2, PI};
        // U3(π, 0, π) = X.
        let mut sv = Statevector::zero(1).unwrap();
        sv.apply_u3(0, PI, 0.0, PI);
        assert_amp(&sv, 1, 1.0, 0.0);
        // U3(π/2, 0, π) = H.
        let mut sv = Statevector::zero(1).unwrap();
        sv.apply_u3(0, PI / 2.0, 0.0, PI);
        assert_amp(&sv, 0, FRAC_1_SQRT_2, 0.0);
        assert_amp(&sv, 1, FRAC_1_SQRT_2, 0.0);
        // U3(0, φ, 0) = diag(1, e^{iφ}).
        let mut sv = Statevector::prepare_plus(1).unwrap();
        sv.apply_u3(0, 0.0, PI / 2.0, 0.0);
        assert_amp(&sv, 0, FRAC_1_SQRT_2, 0.0);
        assert_amp(&sv, 1, 0.0, FRAC_1_SQRT_2);
    }

    #[test]
    fn rx_uses_the_full_angle() {
        use std::f64::consts::PI;
        // e^{−i(π/2)σx} = −i·σx.
        let mut sv = Statevector::zero(1).unwrap();
        sv.apply_rx(0, PI / 2.0);
        assert_amp(&sv, 1, 0.0, -1.0);
    }

    #[test]
    fn controlled_phase_hits_all_ones_only() {
        use std::f64::consts::PI;
        let mut sv = Statevector::prepare_plus(3).unwrap();
        sv.apply_controlled_phase(&[0, 1], 2, PI);
        let a = 1.0 / 8f64.sqrt();
        for z in 0..7 {
            assert_amp(&sv, z, a, 0.0);
        }
        assert_amp(&sv, 7, -a, 0.0);
    }

    #[test]
    fn diagonal_phase_on_uniform_barbell() {
        use std::f64::consts::FRAC_PI_4;
        let mut sv = Statevector::prepare_plus(2).unwrap();
        sv.apply_diagonal_phase(FRAC_PI_4, &[1.0, -1.0, -1.0, 1.0]);
        let c = 0.5 * FRAC_PI_4.cos();
        let s = 0.5 * FRAC_PI_4.sin();
        assert_amp(&sv, 0, c, -s);
        assert_amp(&sv, 1, c, s);
        assert_amp(&sv, 2, c, s);
        assert_amp(&sv, 3, c, -s);
    }

    #[test]
    fn xy_pair_swaps_01_and_10_and_fixes_the_rest() {
        use std::f64::consts::FRAC_PI_4;
        let mut sv = Statevector::basis_state(2, 0b01).unwrap();
        sv.apply_xy_pair(0, 1, FRAC_PI_4);
        assert_amp(&sv, 0b10, 0.0, -1.0);
        let mut sv = Statevector::basis_state(2, 0b11).unwrap();
        sv.apply_xy_pair(0, 1, 0.7);
        assert_amp(&sv, 0b11, 1.0, 0.0);
    }

    #[test]
    fn wk_state_has_uniform_weight_one_support() {
        for k in 1..=8 {
            let sv = Statevector::prepare_wk(k).unwrap();
            let amp = 1.0 / (k as f64).sqrt();
            for (z, a) in sv.amplitudes().iter().enumerate() {
                if (z as u64).count_ones() == 1 {
                    assert!((a.re - amp).abs() < 1e-12 && a.im == 0.0);
                } else {
                    assert_eq!(a.norm_sqr(), 0.0);
                }
            }
            assert!((sv.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn expectation_of_uniform_barbell_diagonal_is_zero() {
        let sv = Statevector::prepare_plus(2).unwrap();
        let e = sv.expectation(&[1.0, -1.0, -1.0, 1.0]);
        assert!(e.abs() < 1e-15);
    }

    #[test]
    fn sampling_is_deterministic_and_counts_sum_to_shots() {
        let mut sv = Statevector::prepare_plus(3).unwrap();
        sv.apply_rx(1, 0.3);
        let a = sv.sample(4096, 42);
        let b = sv.sample(4096, 42);
        assert_eq!(a, b);
        assert_eq!(a.counts.values().sum::<u64>(), 4096);
        let c = sv.sample(4096, 43);
        assert_ne!(a, c, "different seeds should (generically) differ");

        // A pure basis state puts every shot on that index.
        let basis = Statevector::basis_state(3, 5).unwrap();
        let s = basis.sample(100, 7);
        assert_eq!(s.counts.len(), 1);
        assert_eq!(s.counts[&5], 100);
    }

    #[test]
    fn sample_expectation_matches_counts() {
        let sv = Statevector::prepare_plus(2).unwrap();
        let s = sv.sample(10_000, 1);
        let values = [0.0, 1.0, 1.0, 0.0];
        let manual: f64 = s.counts.iter().map(|(&z, &c)| c as f64 * values[z as usize]).sum();
        assert_eq!(s.expectation(&values), manual / 10_000.0);
    }

    #[test]
    fn budget_check() {
        assert!(check_qubit_budget(26, None).is_ok());
        assert!(check_qubit_budget(27, None).is_err());
        assert!(check_qubit_budget(27, Some(28)).is_ok());
    }
}
