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

use nalgebra::SymmetricEigen;

use super::{c, check_targets, max_abs_diff, qubits_for_dim, CMatrix, StateVector, Unitary, C64};
use super::{NORM_TOL, PSD_TOL};
use crate::error::{invalid, Result};

/// Hermitian, unit-trace, positive-semidefinite operator.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    m: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity and unit trace within [`NORM_TOL`] and eigenvalues `>= -PSD_TOL`.
    pub fn new(m: CMatrix) -> Result<Self> {
        let n_qubits = match (m.is_square(), qubits_for_dim(m.nrows())) {
            (true, Some(n)) => n,
            _ => return invalid(format!("{}x{} is not a qubit-register operator", m.nrows(), m.ncols())),
        };
        let herm = max_abs_diff(&m, &m.adjoint());
        if !(herm <= NORM_TOL) {
            return invalid(format!("density matrix deviates from Hermiticity by {herm:e}"));
        }
        let tr = m.trace();
        if !((tr - c(1.0, 0.0)).norm() <= NORM_TOL) {
            return invalid(format!("density matrix trace {tr} is not 1"));
        }
        let rho = Self { n_qubits, m };
        let min_eig = rho.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min_eig < -PSD_TOL {
            return invalid(format!("density matrix has negative eigenvalue {min_eig:e}"));
        }
        Ok(rho)
    }

    pub fn from_pure(psi: &StateVector) -> Self {
        let d = psi.dim();
        let a = psi.amplitudes();
        let m = CMatrix::from_fn(d, d, |r, col| a[r] * a[col].conj());
        Self { n_qubits: psi.n_qubits(), m }
    }

    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let d = 1 << n_qubits;
        Self { n_qubits, m: CMatrix::identity(d, d).map(|x| x / d as f64) }
    }

    /// `weight * a + (1 - weight) * b` for `weight` in `[0, 1]`.
    pub fn mix(weight: f64, a: &DensityMatrix, b: &DensityMatrix) -> Result<Self> {
        if !(0.0..=1.0).contains(&weight) || a.dim() != b.dim() {
            return invalid("mixture needs weight in [0,1] and matching dimensions");
        }
        Ok(Self { n_qubits: a.n_qubits, m: a.m.map(|x| x * weight) + b.m.map(|x| x * (1.0 - weight)) })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn entry(&self, r: usize, col: usize) -> C64 {
        self.m[(r, col)]
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    pub fn purity(&self) -> f64 {
        (&self.m * &self.m).trace().re
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.m)
    }

    /// `rho (x) other`
    pub fn tensor(&self, other: &DensityMatrix) -> Result<Self> {
        let n = self.n_qubits + other.n_qubits;
        if n > super::MAX_QUBITS {
            return invalid(format!("tensor product would have {n} qubits"));
        }
        Ok(Self { n_qubits: n, m: self.m.kronecker(&other.m) })
    }

    /// `U rho U^dagger`
    pub fn apply_unitary(&self, u: &Unitary) -> Result<Self> {
        if u.dim() != self.dim() {
            return invalid(format!("unitary of dimension {} vs state of dimension {}", u.dim(), self.dim()));
        }
        let m = u.matrix() * &self.m * u.matrix().adjoint();
        Ok(Self { n_qubits: self.n_qubits, m })
    }

    /// Reduced state on the `keep` positions. The result orders the kept qubits by ascending
    /// original position regardless of the order in `keep`.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return invalid("partial trace must keep at least one qubit");
        }
        check_targets(keep, self.n_qubits)?;
        let n = self.n_qubits;
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        let traced: Vec<usize> = (0..n).filter(|q| !kept.contains(q)).collect();
        let spread = |sub: usize, positions: &[usize]| -> usize {
            let k = positions.len();
            positions
                .iter()
                .enumerate()
                .filter(|(i, _)| sub & (1 << (k - 1 - i)) != 0)
                .map(|(_, &q)| 1 << (n - 1 - q))
                .sum()
        };
        let kd = 1 << kept.len();
        let td = 1 << traced.len();
        let kept_idx: Vec<usize> = (0..kd).map(|s| spread(s, &kept)).collect();
        let traced_idx: Vec<usize> = (0..td).map(|s| spread(s, &traced)).collect();
        let m = CMatrix::from_fn(kd, kd, |r, col| {
            traced_idx.iter().map(|t| self.m[(kept_idx[r] + t, kept_idx[col] + t)]).sum()
        });
        Ok(Self { n_qubits: kept.len(), m })
    }

    /// `<psi| rho |psi>` clamped to `[0, 1]`.
    pub fn fidelity_with_pure(&self, psi: &StateVector) -> Result<f64> {
        if psi.dim() != self.dim() {
            return invalid(format!("state of dimension {} vs density matrix of dimension {}", psi.dim(), self.dim()));
        }
        let a = psi.amplitudes();
        let mut acc = C64::default();
        for r in 0..self.dim() {
            let row: C64 = (0..self.dim()).map(|col| self.m[(r, col)] * a[col]).sum();
            acc += a[r].conj() * row;
        }
        Ok(acc.re.clamp(0.0, 1.0))
    }

    /// `0.5 * ||self - other||_1`
    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64> {
        if self.dim() != other.dim() {
            return invalid("trace distance needs matching dimensions");
        }
        let diff = &self.m - &other.m;
        Ok(0.5 * hermitian_eigenvalues(&diff).iter().map(|x| x.abs()).sum::<f64>())
    }
}

/// Free-function form of [`DensityMatrix::fidelity_with_pure`].
pub fn fidelity_pure_mixed(psi: &StateVector, rho: &DensityMatrix) -> Result<f64> {
    rho.fidelity_with_pure(psi)
}

fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let sym = (m + m.adjoint()).map(|x| x * 0.5);
    let mut ev: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}
