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

// A CPHASE on `alpha|00> + beta|11>` from a single `sigma_z` on the adder's sum qubit.

use qautoenc::adders::cphase_via_adder;
use qautoenc::qsim::C64;

pub fn run() -> qautoenc::Result<()> {
    for t in [0.0, 0.4, 0.8, 1.2, std::f64::consts::FRAC_PI_2] {
        let (alpha, beta) = (C64::new(f64::cos(t), 0.0), C64::from_polar(f64::sin(t), 0.7));
        let out = cphase_via_adder(alpha, beta)?;
        let (a, d) = (out.state.amplitude(0), out.state.amplitude(3));
        println!(
            "t={t:.3}  out |00> {:+.4}{:+.4}i  |11> {:+.4}{:+.4}i  fidelity {:.12}",
            a.re, a.im, d.re, d.im, out.fidelity
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
