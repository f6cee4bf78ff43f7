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

// The sum qubit's `<sigma_z>` carries `cos^2 t1 cos^2 t2 - sin^2 t1 sin^2 t2`.

use qautoenc::adders::{product_parity_observable, sigma_z_closed_form, sigma_z_summand, AdderRegion};
use qautoenc::qsim::single_qubit_state;

pub fn run() -> qautoenc::Result<()> {
    let axis = AdderRegion::quarter_turn(5)?.axis();
    let parity = product_parity_observable();
    for &t1 in &axis {
        for &t2 in &axis {
            let simulated = sigma_z_summand(t1, t2)?;
            let product = single_qubit_state(t1)?.tensor(&single_qubit_state(t2)?)?.to_density();
            println!(
                "({t1:.3}, {t2:.3})  simulated {simulated:+.6}  closed form {:+.6}  parity on inputs {:+.6}",
                sigma_z_closed_form(t1, t2),
                parity.expectation(&product)?
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
