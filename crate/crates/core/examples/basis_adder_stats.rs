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

// Average and worst-case fidelity of the basis adder over real inputs in `[0, pi/2]^2`.

use qautoenc::adders::{adder_fidelity, basis_adder, AdderRegion, FidelitySweep};

pub fn run() -> qautoenc::Result<()> {
    let u = basis_adder();
    println!("unitarity error {:.1e}", u.unitarity_error());

    let sweep = FidelitySweep::run(&u, &AdderRegion::quarter_turn(201)?)?;
    let r = sweep.report();
    println!("average fidelity {:.6}", r.average);
    println!("minimum fidelity {:.6} at ({:.4}, {:.4})", r.minimum, r.argmin.0, r.argmin.1);

    let f = std::f64::consts::FRAC_PI_4;
    println!("F(pi/4, pi/4) = {:.6}", adder_fidelity(&u, f, f)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
