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

//! Dense simulator for registers of one to four qubits.
//!
//! Qubits are addressed by zero-based position with position 0 the most significant bit of the
//! basis index, so the ket `|q0 q1 q2>` sits at index `q0*4 + q1*2 + q2`. The adder and
//! autoencoder layers speak in the one-based labels (qubit 1, 2, 3) used in circuit diagrams;
//! label `k` is position `k - 1`.

mod density;
mod gates;
mod state;
mod unitary;

pub use density::{fidelity_pure_mixed, DensityMatrix};
pub use gates::{gate_matrix, gate_matrix_by_id, pauli, GateKind, Pauli};
pub use state::{single_qubit_state, StateVector};
pub use unitary::{Observable, Unitary};

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMatrix = DMatrix<Complex64>;

/// Largest register the simulator accepts.
pub const MAX_QUBITS: usize = 4;

/// Default slack for unitarity and Hermiticity checks (max-entry norm).
pub const UNITARITY_TOL: f64 = 1e-10;

/// Default slack for norm and trace checks.
pub const NORM_TOL: f64 = 1e-12;

/// Tolerance for the smallest admissible density-matrix eigenvalue.
pub const PSD_TOL: f64 = 1e-10;

pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub(crate) fn qubits_for_dim(dim: usize) -> Option<usize> {
    if dim >= 2 && dim.is_power_of_two() {
        let n = dim.trailing_zeros() as usize;
        (n <= MAX_QUBITS).then_some(n)
    } else {
        None
    }
}

pub(crate) fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub(crate) fn check_targets(targets: &[usize], n_qubits: usize) -> crate::Result<()> {
    for (i, &t) in targets.iter().enumerate() {
        if t >= n_qubits {
            return crate::error::invalid(format!("qubit position {t} out of range for {n_qubits}-qubit register"));
        }
        if targets[..i].contains(&t) {
            return crate::error::invalid(format!("duplicate qubit position {t}"));
        }
    }
    Ok(())
}
