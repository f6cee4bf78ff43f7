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

use super::{c, max_abs_diff, qubits_for_dim, CMatrix, DensityMatrix, StateVector, C64, UNITARITY_TOL};
use crate::error::{invalid, Result};

/// Square unitary on `n_qubits` qubits, `U^dagger U = I` within [`UNITARITY_TOL`].
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary {
    m: CMatrix,
}

impl Unitary {
    pub fn new(m: CMatrix) -> Result<Self> {
        Self::with_tolerance(m, UNITARITY_TOL)
    }

    pub fn with_tolerance(m: CMatrix, tol: f64) -> Result<Self> {
        if !m.is_square() || qubits_for_dim(m.nrows()).is_none() {
            return invalid(format!("{}x{} is not a qubit-register operator", m.nrows(), m.ncols()));
        }
        let dev = unitarity_error(&m);
        if !(dev <= tol) {
            return invalid(format!("matrix deviates from unitarity by {dev:e}"));
        }
        Ok(Self { m })
    }

    /// Builds the unitary whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[StateVector]) -> Result<Self> {
        let dim = columns.len();
        if columns.iter().any(|col| col.dim() != dim) {
            return invalid("column dimensions do not match column count");
        }
        let m = CMatrix::from_fn(dim, dim, |r, col| columns[col].amplitude(r));
        Self::new(m)
    }

    pub(crate) fn from_matrix_unchecked(m: CMatrix) -> Self {
        Self { m }
    }

    pub fn identity(n_qubits: usize) -> Self {
        let d = 1 << n_qubits;
        Self { m: CMatrix::identity(d, d) }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn n_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn entry(&self, r: usize, col: usize) -> C64 {
        self.m[(r, col)]
    }

    pub fn dagger(&self) -> Unitary {
        Self { m: self.m.adjoint() }
    }

    /// Matrix product `self * rhs`: `rhs` acts first.
    pub fn compose(&self, rhs: &Unitary) -> Result<Unitary> {
        if self.dim() != rhs.dim() {
            return invalid(format!("cannot compose dimensions {} and {}", self.dim(), rhs.dim()));
        }
        Ok(Self { m: &self.m * &rhs.m })
    }

    /// `self (x) rhs`
    pub fn kron(&self, rhs: &Unitary) -> Result<Unitary> {
        if self.n_qubits() + rhs.n_qubits() > super::MAX_QUBITS {
            return invalid("Kronecker product exceeds register limit");
        }
        Ok(Self { m: self.m.kronecker(&rhs.m) })
    }

    /// Lifts a gate on `targets` to the full `n_qubits` register.
    pub fn embed(&self, targets: &[usize], n_qubits: usize) -> Result<Unitary> {
        let dim = 1 << n_qubits;
        let mut m = CMatrix::zeros(dim, dim);
        for col in 0..dim {
            let out = StateVector::basis(n_qubits, col)?.apply_gate(self, targets)?;
            for (r, a) in out.amplitudes().iter().enumerate() {
                m[(r, col)] = *a;
            }
        }
        Ok(Self { m })
    }

    /// `G * self` where `G` is `gate` acting on `targets`, computed column by column.
    pub fn then_gate(&self, gate: &Unitary, targets: &[usize]) -> Result<Unitary> {
        let n = self.n_qubits();
        if targets.is_empty() || gate.dim() != 1 << targets.len() {
            return invalid("gate dimension does not match target count");
        }
        super::check_targets(targets, n)?;
        let mut m = self.m.clone();
        let d = self.dim();
        for col in m.as_mut_slice().chunks_mut(d) {
            super::state::apply_gate_in_place(col, n, gate.matrix(), targets);
        }
        Ok(Self { m })
    }

    /// Max-entry deviation of `U^dagger U` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        unitarity_error(&self.m)
    }

    /// Max-entry distance to `other` after removing the best global phase.
    pub fn phase_aligned_distance(&self, other: &Unitary) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        let overlap: C64 = self.m.iter().zip(other.m.iter()).map(|(a, b)| a.conj() * b).sum();
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { c(1.0, 0.0) };
        max_abs_diff(&self.m.map(|a| a * phase), &other.m)
    }
}

fn unitarity_error(m: &CMatrix) -> f64 {
    let d = m.nrows();
    max_abs_diff(&(m.adjoint() * m), &CMatrix::identity(d, d))
}

/// Hermitian operator; its expectation value in any density matrix is real.
#[derive(Clone, Debug, PartialEq)]
pub struct Observable {
    m: CMatrix,
}

impl Observable {
    pub fn new(m: CMatrix) -> Result<Self> {
        if !m.is_square() || qubits_for_dim(m.nrows()).is_none() {
            return invalid(format!("{}x{} is not a qubit-register operator", m.nrows(), m.ncols()));
        }
        let dev = max_abs_diff(&m, &m.adjoint());
        if !(dev <= super::NORM_TOL) {
            return invalid(format!("observable deviates from Hermiticity by {dev:e}"));
        }
        Ok(Self { m })
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let d = values.len();
        Self::new(CMatrix::from_fn(d, d, |r, col| if r == col { c(values[r], 0.0) } else { c(0.0, 0.0) }))
    }

    pub fn sigma_x() -> Self {
        Self { m: super::pauli(super::Pauli::X) }
    }

    pub fn sigma_y() -> Self {
        Self { m: super::pauli(super::Pauli::Y) }
    }

    pub fn sigma_z() -> Self {
        Self { m: super::pauli(super::Pauli::Z) }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    /// `Tr(O rho)`, imaginary residue discarded.
    pub fn expectation(&self, rho: &DensityMatrix) -> Result<f64> {
        if self.dim() != rho.dim() {
            return invalid(format!("observable of dimension {} vs state of dimension {}", self.dim(), rho.dim()));
        }
        Ok((&self.m * rho.matrix()).trace().re)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_unitary() {
        let m = CMatrix::from_element(2, 2, c(1.0, 0.0));
        assert!(Unitary::new(m).is_err());
        assert!(Unitary::new(CMatrix::identity(3, 3)).is_err());
    }

    #[test]
    fn pauli_expectations() {
        let k0 = StateVector::zero(1).unwrap().to_density();
        let k1 = StateVector::basis(1, 1).unwrap().to_density();
        let plus = StateVector::plus().to_density();
        let z = Observable::sigma_z();
        assert!((z.expectation(&k0).unwrap() - 1.0).abs() < 1e-15);
        assert!((z.expectation(&k1).unwrap() + 1.0).abs() < 1e-15);
        assert!(z.expectation(&plus).unwrap().abs() < 1e-15);
        assert!((Observable::sigma_x().expectation(&plus).unwrap() - 1.0).abs() < 1e-15);
        let two = StateVector::zero(2).unwrap().to_density();
        assert!(z.expectation(&two).is_err());
    }

    #[test]
    fn phase_alignment_ignores_global_phase() {
        let u = crate::qsim::gate_matrix(crate::qsim::GateKind::Ry, 0.7).unwrap();
        let v = Unitary::from_matrix_unchecked(u.matrix().map(|a| a * C64::from_polar(1.0, 2.1)));
        assert!(u.phase_aligned_distance(&v) < 1e-14);
        assert!(u.phase_aligned_distance(&Unitary::identity(1)) > 0.1);
    }
}
