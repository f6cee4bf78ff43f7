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

// Genetic synthesis of an encoder/decoder pair for the three-state family.

use qautoenc::autoencoder::paper_three_states;
use qautoenc::ga::{ga_run, BestIndividual, FitnessTarget, GaConfig};

pub fn run() -> qautoenc::Result<()> {
    let mut config = GaConfig::new(FitnessTarget::autoencoder(paper_three_states()), 5);
    config.generations = 150;
    let result = ga_run(&config)?;
    let h = &result.fitness_history;
    for g in (0..h.len()).step_by(25) {
        println!("generation {g:4}  best {:.5}", h[g]);
    }
    println!("final best {:.5} after {} generations", result.best_fitness, result.generations_run());
    if let BestIndividual::Autoencoder { encoder, decoder } = &result.best {
        println!("encoder (simplified):\n{}", encoder.simplify());
        println!("decoder (simplified):\n{}", decoder.simplify());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> qautoenc::Result<()> {
    run()
}
