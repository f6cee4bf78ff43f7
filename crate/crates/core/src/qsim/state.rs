// Copyright 2026 The qautoenc Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

use super::{c, check_targets, qubits_for_dim, CMatrix, DensityMatrix, Unitary, C64, MAX_QUBITS, NORM_TOL};
use crate::error::{invalid, Result};

/// Normalized pure state of `n_qubits` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// Wraps an amplitude vector that must already be normalized within [`NORM_TOL`].
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        let n_qubits = dim_to_qubits(amps.len())?;
        check_finite(&amps)?;
        let norm = norm_of(&amps);
        if (norm - 1.0).abs() > NORM_TOL {
            return invalid(format!("state norm {norm} deviates from 1"));
        }
        Ok(Self { n_qubits, amps })
    }

    /// Rescales the amplitudes to unit norm. Rejects the zero vector.
    pub fn normalized(mut amps: Vec<C64>) -> Result<Self> {
        let n_qubits = dim_to_qubits(amps.len())?;
        check_finite(&amps)?;
        let norm = norm_of(&amps);
        if norm < NORM_TOL {
            return invalid("cannot normalize a zero vector");
        }
        amps.iter_mut().for_each(|a| *a /= norm);
        Ok(Self { n_qubits, amps })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&x| c(x, 0.0)).collect())
    }

    /// Computational basis state `|index>` on `n_qubits` qubits.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return invalid(format!("unsupported register size {n_qubits}"));
        }
        let dim = 1 << n_qubits;
        if index >= dim {
            return invalid(format!("basis index {index} out of range for dimension {dim}"));
        }
        let mut amps = vec![C64::default(); dim];
        amps[index] = c(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    /// `(|0> + |1>)/sqrt2`
    pub fn plus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::from_raw(vec![c(h, 0.0), c(h, 0.0)])
    }

    /// `(|0> - |1>)/sqrt2`
    pub fn minus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::from_raw(vec![c(h, 0.0), c(-h, 0.0)])
    }

    /// Amplitudes produced by norm-preserving maps; caller guarantees length and norm.
    pub(crate) fn from_raw(amps: Vec<C64>) -> Self {
        let n_qubits = amps.len().trailing_zeros() as usize;
        Self { n_qubits, amps }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amps)
    }

    /// `<self|other>`
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.dim() != other.dim() {
            return invalid(format!("inner product of dimensions {} and {}", self.dim(), other.dim()));
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// Multiplies every amplitude by `e^{i phase}`.
    pub fn with_global_phase(&self, phase: f64) -> Self {
        let p = C64::from_polar(1.0, phase);
        Self::from_raw(self.amps.iter().map(|a| a * p).collect())
    }

    /// Kronecker product; qubits of `self` come first (most significant).
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let n = self.n_qubits + other.n_qubits;
        if n > MAX_QUBITS {
            return invalid(format!("tensor product would have {n} qubits"));
        }
        let amps = self.amps.iter().flat_map(|a| other.amps.iter().map(move |b| a * b)).collect();
        Ok(Self { n_qubits: n, amps })
    }

    /// Applies `gate` to the qubits at `targets` (zero-based, MSB first). `targets[0]` addresses
    /// the most significant index bit of the gate matrix.
    pub fn apply_gate(&self, gate: &Unitary, targets: &[usize]) -> Result<StateVector> {
        let k = targets.len();
        if k == 0 || gate.dim() != 1 << k {
            return invalid(format!("gate of dimension {} does not match {} target(s)", gate.dim(), k));
        }
        check_targets(targets, self.n_qubits)?;
        let mut out = self.amps.clone();
        apply_gate_in_place(&mut out, self.n_qubits, gate.matrix(), targets);
        Ok(Self::from_raw(out))
    }

    /// Full-register product `U * state`.
    pub fn apply_unitary(&self, u: &Unitary) -> Result<StateVector> {
        if u.dim() != self.dim() {
            return invalid(format!("unitary of dimension {} applied to state of dimension {}", u.dim(), self.dim()));
        }
        let m = u.matrix();
        let out = (0..self.dim()).map(|r| (0..self.dim()).map(|col| m[(r, col)] * self.amps[col]).sum()).collect();
        Ok(Self::from_raw(out))
    }

    /// `|psi><psi|`
    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::from_pure(self)
    }
}

/// Gate kernel shared by states and by column-wise unitary updates. Targets must already be
/// validated against `n_qubits` and the gate dimension.
pub(crate) fn apply_gate_in_place(amps: &mut [C64], n_qubits: usize, m: &CMatrix, targets: &[usize]) {
    let k = targets.len();
    let sub = 1 << k;
    let masks: Vec<usize> = targets.iter().map(|&t| 1 << (n_qubits - 1 - t)).collect();
    let target_mask: usize = masks.iter().sum();
    let offsets: Vec<usize> = (0..sub)
        .map(|j| masks.iter().enumerate().filter(|(p, _)| j & (1 << (k - 1 - p)) != 0).map(|(_, m)| m).sum())
        .collect();
    let mut local = [C64::new(0.0, 0.0); 16];
    for base in (0..amps.len()).filter(|i| i & target_mask == 0) {
        for (j, off) in offsets.iter().enumerate() {
            local[j] = amps[base + off];
        }
        for (r, off) in offsets.iter().enumerate() {
            amps[base + off] = (0..sub).map(|col| m[(r, col)] * local[col]).sum();
        }
    }
}

/// `cos(theta)|0> + sin(theta)|1>`
pub fn single_qubit_state(theta: f64) -> Result<StateVector> {
    if !theta.is_finite() {
        return invalid(format!("non-finite angle {theta}"));
    }
    Ok(StateVector::from_raw(vec![c(theta.cos(), 0.0), c(theta.sin(), 0.0)]))
}

fn dim_to_qubits(dim: usize) -> Result<usize> {
    match qubits_for_dim(dim) {
        Some(n) => Ok(n),
        None => invalid(format!("amplitude count {dim} is not 2^n with 1 <= n <= {MAX_QUBITS}")),
    }
}

fn check_finite(amps: &[C64]) -> Result<()> {
    if amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
        Ok(())
    } else {
        invalid("non-finite amplitude")
    }
}

fn norm_of(amps: &[C64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    fn close(a: &StateVector, b: &[C64]) -> bool {
        a.amplitudes().iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12)
    }

    #[test]
    fn single_qubit_angles() {
        let z = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        assert!(close(&single_qubit_state(0.0).unwrap(), &[one, z]));
        assert!(close(&single_qubit_state(FRAC_PI_2).unwrap(), &[z, one]));
        let h = c(1.0 / SQRT_2, 0.0);
        assert!(close(&single_qubit_state(FRAC_PI_4).unwrap(), &[h, h]));
        assert!(single_qubit_state(f64::NAN).is_err());
        assert!(single_qubit_state(f64::INFINITY).is_err());
    }

    #[test]
    fn tensor_basis_products() {
        let k0 = StateVector::zero(1).unwrap();
        let k1 = StateVector::basis(1, 1).unwrap();
        assert_eq!(k0.tensor(&k1).unwrap(), StateVector::basis(2, 1).unwrap());
        assert_eq!(k1.tensor(&k1).unwrap(), StateVector::basis(2, 3).unwrap());
        let p0 = StateVector::plus().tensor(&k0).unwrap();
        let h = c(1.0 / SQRT_2, 0.0);
        let z = c(0.0, 0.0);
        assert!(close(&p0, &[h, z, h, z]));
        assert!((p0.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(StateVector::from_real(&[1.0, 1.0]).is_err());
        assert!(StateVector::from_real(&[1.0, 0.0, 0.0]).is_err());
        assert!(StateVector::normalized(vec![c(0.0, 0.0); 2]).is_err());
        assert!(StateVector::basis(5, 0).is_err());
        let s = StateVector::normalized(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert!((s.amplitude(1) - c(0.0, 0.8)).norm() < 1e-15);
    }

    #[test]
    fn apply_gate_rejects_mismatch_and_duplicates() {
        let s = StateVector::zero(2).unwrap();
        let id2 = Unitary::identity(1);
        let id4 = Unitary::identity(2);
        assert!(s.apply_gate(&id2, &[0, 1]).is_err());
        assert!(s.apply_gate(&id4, &[1, 1]).is_err());
        assert!(s.apply_gate(&id2, &[2]).is_err());
        assert!(s.apply_unitary(&Unitary::identity(3)).is_err());
    }

    #[test]
    fn identity_gate_is_noop() {
        let s = StateVector::normalized(vec![c(0.3, 0.1), c(-0.2, 0.5), c(0.4, 0.0), c(0.0, -0.6)]).unwrap();
        for t in 0..2 {
            let out = s.apply_gate(&Unitary::identity(1), &[t]).unwrap();
            assert!(close(&out, s.amplitudes()));
        }
        assert!(close(&s.apply_unitary(&Unitary::identity(2)).unwrap(), s.amplitudes()));
    }
}
