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

// State vectors, gates, density matrices and partial traces on a Bell pair.

use std::f64::consts::PI;

use qautoenc::qsim::{gate_matrix, GateKind, Observable, StateVector};

pub fn run() -> qautoenc::Result<()> {
    // MS at pi/2 entangles |00> into (|00> + i|11>)/sqrt(2)
    let bell = StateVector::zero(2)?.apply_gate(&gate_matrix(GateKind::Ms, PI / 2.0)?, &[0, 1])?;
    for (i, a) in bell.amplitudes().iter().enumerate() {
        println!("|{i:02b}>  {:+.4} {:+.4}i", a.re, a.im);
    }

    let rho = bell.to_density();
    let half = rho.partial_trace(&[0])?;
    println!("purity of pair {:.4}, of one half {:.4}", rho.purity(), half.purity());
    println!("fidelity of half with |0>: {:.4}", half.fidelity_with_pure(&StateVector::zero(1)?)?);

    let flipped = StateVector::zero(1)?.apply_gate(&gate_matrix(GateKind::Rx, PI)?, &[0])?;
    println!("<sigma_z> after Rx(pi): {:+.4}", Observable::sigma_z().expectation(&flipped.to_density())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
