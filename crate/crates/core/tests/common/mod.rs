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

//! Independent oracles and random instance generators shared by the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use qautoenc::qsim::{CMatrix, DensityMatrix, StateVector, Unitary};
use rand::Rng;
use rand_distr::StandardNormal;

pub fn gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_state<R: Rng>(rng: &mut R, n_qubits: usize) -> StateVector {
    StateVector::normalized((0..1 << n_qubits).map(|_| gaussian(rng)).collect()).unwrap()
}

/// Haar-random unitary from the QR decomposition of a complex Ginibre matrix.
pub fn random_unitary<R: Rng>(rng: &mut R, n_qubits: usize) -> Unitary {
    let d = 1 << n_qubits;
    let z = DMatrix::from_fn(d, d, |_, _| gaussian(rng));
    let qr = z.qr();
    let (q, r) = (qr.q(), qr.r());
    let phases =
        DMatrix::from_fn(d, d, |i, j| if i == j { r[(i, i)] / r[(i, i)].norm() } else { Complex64::default() });
    Unitary::new(q * phases).unwrap()
}

/// Mixture of a few random pure states.
pub fn random_density<R: Rng>(rng: &mut R, n_qubits: usize) -> DensityMatrix {
    let mut rho = random_state(rng, n_qubits).to_density();
    for _ in 0..3 {
        let w: f64 = rng.random_range(0.1..0.9);
        rho = DensityMatrix::mix(w, &rho, &random_state(rng, n_qubits).to_density()).unwrap();
    }
    rho
}

/// Full-register matrix of a gate on `targets`: permute the target bits to the front,
/// take `gate (x) I`, permute back.
pub fn embed_oracle(gate: &Unitary, targets: &[usize], n_qubits: usize) -> CMatrix {
    let dim = 1 << n_qubits;
    let rest: Vec<usize> = (0..n_qubits).filter(|q| !targets.contains(q)).collect();
    let order: Vec<usize> = targets.iter().chain(&rest).copied().collect();
    let bit = |i: usize, q: usize| (i >> (n_qubits - 1 - q)) & 1;
    // perm maps an original index to the index with qubits listed in `order`
    let perm = |i: usize| order.iter().fold(0, |acc, &q| (acc << 1) | bit(i, q));
    let p =
        DMatrix::from_fn(dim, dim, |r, c| if r == perm(c) { Complex64::new(1.0, 0.0) } else { Complex64::default() });
    let rest_dim = 1 << rest.len();
    let lifted = gate.matrix().kronecker(&DMatrix::<Complex64>::identity(rest_dim, rest_dim));
    p.transpose() * lifted * p
}

pub fn mat_vec(m: &CMatrix, v: &StateVector) -> Vec<Complex64> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| m[(r, c)] * v.amplitude(c)).sum()).collect()
}

pub fn max_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn max_vec_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Distinct random target positions on `n_qubits`, in random order.
pub fn random_targets<R: Rng>(rng: &mut R, n_qubits: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n_qubits).collect();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(pool.remove(rng.random_range(0..pool.len())));
    }
    out
}
