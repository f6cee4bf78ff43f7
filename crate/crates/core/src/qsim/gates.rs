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

use serde::{Deserialize, Serialize};

use super::{c, CMatrix, Unitary};
use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

pub fn pauli(p: Pauli) -> CMatrix {
    let (o, i, z) = (c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0));
    let entries = match p {
        Pauli::X => [z, o, o, z],
        Pauli::Y => [z, -i, i, z],
        Pauli::Z => [o, z, z, -o],
    };
    CMatrix::from_row_slice(2, 2, &entries)
}

/// Native gate set: three single-qubit rotations and the Mølmer–Sørensen interaction.
/// Discriminants are the gate identifiers used in genome files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[repr(u8)]
pub enum GateKind {
    Rx = 1,
    Ry = 2,
    Rz = 3,
    Ms = 4,
}

impl GateKind {
    pub const ALL: [GateKind; 4] = [GateKind::Rx, GateKind::Ry, GateKind::Rz, GateKind::Ms];

    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Self::Rx),
            2 => Ok(Self::Ry),
            3 => Ok(Self::Rz),
            4 => Ok(Self::Ms),
            other => invalid(format!("unknown gate id {other}")),
        }
    }

    pub fn is_rotation(self) -> bool {
        self != Self::Ms
    }

    pub fn arity(self) -> usize {
        if self.is_rotation() {
            1
        } else {
            2
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Rx => "Rx",
            Self::Ry => "Ry",
            Self::Rz => "Rz",
            Self::Ms => "MS",
        }
    }

    fn generator(self) -> CMatrix {
        match self {
            Self::Rx => pauli(Pauli::X),
            Self::Ry => pauli(Pauli::Y),
            Self::Rz => pauli(Pauli::Z),
            Self::Ms => pauli(Pauli::Y).kronecker(&pauli(Pauli::Y)),
        }
    }
}

/// `exp(-i phase G / 2)` where `G` is `sigma_x`, `sigma_y`, `sigma_z` or `sigma_y (x) sigma_y`.
///
/// Every generator squares to the identity, so the exponential is
/// `cos(phase/2) I - i sin(phase/2) G`.
pub fn gate_matrix(kind: GateKind, phase: f64) -> Result<Unitary> {
    if !phase.is_finite() {
        return invalid(format!("non-finite phase {phase}"));
    }
    let g = kind.generator();
    let d = g.nrows();
    let (s, co) = (phase / 2.0).sin_cos();
    let m = CMatrix::identity(d, d).map(|x| x * co) + g.map(|x| x * c(0.0, -s));
    Ok(Unitary::from_matrix_unchecked(m))
}

pub fn gate_matrix_by_id(id: u8, phase: f64) -> Result<Unitary> {
    gate_matrix(GateKind::from_id(id)?, phase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::{max_abs_diff, C64};
    use nalgebra::SymmetricEigen;
    use std::f64::consts::PI;

    // Oracle: diagonalize the Hermitian generator and exponentiate its eigenvalues.
    fn exp_by_eigen(g: &CMatrix, phase: f64) -> CMatrix {
        let eig = SymmetricEigen::new(g.clone());
        let v = &eig.eigenvectors;
        let d = CMatrix::from_diagonal(&eig.eigenvalues.map(|lam| C64::from_polar(1.0, -phase * lam / 2.0)));
        v * d * v.adjoint()
    }

    #[test]
    fn zero_and_full_turns() {
        let rz = gate_matrix(GateKind::Rz, 0.0).unwrap();
        assert!(max_abs_diff(rz.matrix(), &CMatrix::identity(2, 2)) < 1e-15);
        let rx = gate_matrix(GateKind::Rx, 2.0 * PI).unwrap();
        assert!(max_abs_diff(rx.matrix(), &CMatrix::identity(2, 2).map(|x| -x)) < 1e-15);
    }

    #[test]
    fn ms_at_pi_matches_eigen_oracle() {
        let ms = gate_matrix(GateKind::Ms, PI).unwrap();
        let oracle = exp_by_eigen(&GateKind::Ms.generator(), PI);
        assert!(max_abs_diff(ms.matrix(), &oracle) < 1e-12);
        // exp(-i pi/2 YY) = -i YY and YY|00> = -|11>, so the |00> column is +i|11>.
        assert!((ms.entry(3, 0) - c(0.0, 1.0)).norm() < 1e-12);
        assert!(ms.entry(0, 0).norm() < 1e-12);
    }

    #[test]
    fn all_gates_match_eigen_oracle() {
        for kind in GateKind::ALL {
            for &phase in &[0.3, 1.575, 5.214, -2.0] {
                let u = gate_matrix(kind, phase).unwrap();
                let oracle = exp_by_eigen(&kind.generator(), phase);
                assert!(max_abs_diff(u.matrix(), &oracle) < 1e-12, "{kind:?} {phase}");
                assert!(u.unitarity_error() < 1e-12);
            }
        }
    }

    #[test]
    fn unknown_id_rejected() {
        assert!(gate_matrix_by_id(0, 1.0).is_err());
        assert!(gate_matrix_by_id(5, 1.0).is_err());
        assert!(gate_matrix(GateKind::Rx, f64::NAN).is_err());
        assert!(gate_matrix_by_id(3, 2.176).is_ok());
    }
}
