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

// The published encoder/decoder circuits: convention sweep, per-state fidelities and the
// simplified gate layout.

use qautoenc::autoencoder::{table1_decoder_genome, table1_encoder_genome};
use qautoenc::verify::verify_table1;

pub fn run() -> qautoenc::Result<()> {
    let report = verify_table1()?;
    let marked = report.candidates.iter().filter(|c| c.within_tolerance).count();
    println!(
        "{} candidate conventions, {} within {} of {}",
        report.candidates.len(),
        marked,
        report.tolerance,
        report.target
    );
    if let Some(c) = &report.resolved {
        println!(
            "resolved {:?} rotations={:?} MS={:?} latent={:?}: average {:.4}, per state {:.4?}",
            c.gate_order, c.rotation_angle, c.ms_angle, c.latent_qubit, c.average, c.per_state
        );
    }

    for (name, genome) in [("encoder", table1_encoder_genome()), ("decoder", table1_decoder_genome())] {
        let simple = genome.simplify();
        println!("{name}: {} rows, {} after simplification", genome.len(), simple.len());
        for (q, wire) in simple.wire_layout().iter().enumerate() {
            println!("  q{} {}", q + 1, wire.join(" "));
        }
        print!("{simple}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
