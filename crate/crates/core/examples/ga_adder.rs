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

// Searching gate sequences for an approximate three-qubit adder.

use qautoenc::adders::{basis_adder, region_fidelity_stats, AdderRegion};
use qautoenc::ga::{fitness_adder_unitary, ga_run, BestIndividual, FitnessTarget, GaConfig};

pub fn run() -> qautoenc::Result<()> {
    let region = AdderRegion::quarter_turn(7)?;
    let reference = fitness_adder_unitary(&basis_adder(), &region.nodes())?;
    println!("basis adder on the 7x7 sample: {reference:.5}");

    let mut config = GaConfig::new(FitnessTarget::adder_region(&region), 2);
    config.generations = 40;
    config.gene_count = 10;
    let result = ga_run(&config)?;
    println!("GA best {:.5} after {} generations", result.best_fitness, result.generations_run());
    if let BestIndividual::Adder(genome) = &result.best {
        let u = genome.decode(&config.convention)?;
        let full = region_fidelity_stats(&u, &AdderRegion::quarter_turn(51)?)?;
        println!("on a 51x51 grid: average {:.5}, minimum {:.5}", full.average, full.minimum);
        print!("{}", genome.simplify());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
