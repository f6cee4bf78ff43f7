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

// Adder-based compression: how much the memory register remembers, and round trips through
// the sum qubit.

use qautoenc::adders::basis_adder;
use qautoenc::autoencoder::{
    adder_autoencoder_roundtrip, memory_consistency, orthogonal_benchmark, paper_three_states,
};
use qautoenc::qsim::{single_qubit_state, Unitary};

pub fn run() -> qautoenc::Result<()> {
    let u = basis_adder();
    for family in [orthogonal_benchmark(2)?, orthogonal_benchmark(4)?, paper_three_states()] {
        println!("{:<14} max memory trace distance {:.4}", family.label(), memory_consistency(&u, &family)?);
    }
    let id = Unitary::identity(1);
    for (t1, t2) in [(0.0, 0.0), (0.3, 1.1), (0.785, 0.785)] {
        let (a, b) = (single_qubit_state(t1)?, single_qubit_state(t2)?);
        let rt = adder_autoencoder_roundtrip(&u, &a, &b, &id)?;
        println!("({t1}, {t2}) round trip fidelity {:.12}", rt.fidelity(&a.tensor(&b)?)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
