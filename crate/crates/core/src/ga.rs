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

//! Seeded genetic search over gate-list genomes.
//!
//! Every random draw comes from a ChaCha8 stream keyed by `(generation, individual)`, so a run
//! is a pure function of its [`GaConfig`] no matter how many threads evaluate it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::Serialize;

use crate::adders::{adder_fidelity, AdderRegion};
use crate::autoencoder::{autoencode_fidelity, AutoencoderLayout, AutoencoderSpec, StateFamily, TrashHandling};
use crate::error::{invalid, Result};
use crate::genome::{random_gene, random_genome, DecodeConvention, Genome};
use crate::qsim::Unitary;

/// Fitness at or above this value stops the run.
pub const EARLY_STOP_FITNESS: f64 = 1.0 - 1e-9;

/// Probability that a mutated row is redrawn from scratch instead of nudged.
pub const RESAMPLE_PROBABILITY: f64 = 0.25;

#[derive(Clone, Debug)]
pub enum FitnessTarget {
    /// Three-qubit adder circuits scored by mean adder fidelity over `(theta1, theta2)` inputs.
    Adder { sample: Vec<(f64, f64)> },
    /// Encoder/decoder pairs scored by mean autoencoder fidelity over a state family.
    Autoencoder { family: StateFamily, layout: AutoencoderLayout },
}

impl FitnessTarget {
    pub fn adder_region(region: &AdderRegion) -> Self {
        FitnessTarget::Adder { sample: region.nodes() }
    }

    pub fn autoencoder(family: StateFamily) -> Self {
        FitnessTarget::Autoencoder { family, layout: AutoencoderLayout::default() }
    }

    fn register_qubits(&self) -> usize {
        match self {
            FitnessTarget::Adder { .. } => 3,
            FitnessTarget::Autoencoder { .. } => 2,
        }
    }

    fn circuits(&self) -> usize {
        match self {
            FitnessTarget::Adder { .. } => 1,
            FitnessTarget::Autoencoder { .. } => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GaConfig {
    pub population_size: usize,
    pub generations: usize,
    /// Gates per circuit; autoencoder individuals carry two circuits.
    pub gene_count: usize,
    pub mutation_rate: f64,
    /// Standard deviation of the Gaussian phase step, radians.
    pub mutation_scale: f64,
    pub elite_count: usize,
    pub tournament_size: usize,
    pub rng_seed: u64,
    pub target: FitnessTarget,
    pub convention: DecodeConvention,
}

impl GaConfig {
    pub const DEFAULT_POPULATION: usize = 60;
    pub const DEFAULT_GENERATIONS: usize = 500;
    pub const DEFAULT_GENE_COUNT: usize = 8;
    pub const DEFAULT_MUTATION_RATE: f64 = 0.15;
    pub const DEFAULT_MUTATION_SCALE: f64 = 0.3;
    pub const DEFAULT_ELITE: usize = 2;
    pub const DEFAULT_TOURNAMENT: usize = 3;

    /// Documented defaults around a target and seed.
    pub fn new(target: FitnessTarget, rng_seed: u64) -> Self {
        Self {
            population_size: Self::DEFAULT_POPULATION,
            generations: Self::DEFAULT_GENERATIONS,
            gene_count: Self::DEFAULT_GENE_COUNT,
            mutation_rate: Self::DEFAULT_MUTATION_RATE,
            mutation_scale: Self::DEFAULT_MUTATION_SCALE,
            elite_count: Self::DEFAULT_ELITE,
            tournament_size: Self::DEFAULT_TOURNAMENT,
            rng_seed,
            target,
            convention: DecodeConvention::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0 < self.elite_count && self.elite_count < self.population_size) {
            return invalid(format!(
                "elite_count {} must satisfy 0 < elite_count < population_size {}",
                self.elite_count, self.population_size
            ));
        }
        if self.tournament_size < 2 {
            return invalid("tournament_size must be at least 2");
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return invalid(format!("mutation_rate {} outside [0, 1]", self.mutation_rate));
        }
        if !(self.mutation_scale.is_finite() && self.mutation_scale >= 0.0) {
            return invalid("mutation_scale must be finite and non-negative");
        }
        if self.generations == 0 {
            return invalid("generations must be positive");
        }
        match &self.target {
            FitnessTarget::Adder { sample } if sample.is_empty() => invalid("adder sample is empty"),
            _ => Ok(()),
        }
    }

    fn genome_len(&self) -> usize {
        self.gene_count * self.target.circuits()
    }
}

/// Deterministic stream for individual `index` of `generation`; generation 0 seeds the initial
/// population, generation `k + 1` breeds from generation `k`.
pub fn stream_rng(seed: u64, generation: usize, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((generation as u64) << 32) | index as u64);
    rng
}

/// Per-row mutation: with probability `mutation_rate` the row is hit; a hit row is redrawn with
/// probability [`RESAMPLE_PROBABILITY`] and otherwise gets a Gaussian phase step.
pub fn mutate<R: Rng + ?Sized>(genome: &Genome, config: &GaConfig, rng: &mut R) -> Genome {
    mutate_with(genome, config.mutation_rate, config.mutation_scale, RESAMPLE_PROBABILITY, rng)
}

fn mutate_with<R: Rng + ?Sized>(genome: &Genome, rate: f64, scale: f64, resample: f64, rng: &mut R) -> Genome {
    let step = Normal::new(0.0, scale).expect("validated scale");
    let rows = genome
        .rows()
        .iter()
        .map(|gene| {
            if rng.random::<f64>() >= rate {
                return *gene;
            }
            if rng.random::<f64>() < resample {
                random_gene(genome.n_qubits(), rng)
            } else {
                gene.with_phase(gene.phase() + step.sample(rng))
            }
        })
        .collect();
    Genome::new(genome.n_qubits(), rows).expect("mutation keeps rows in range")
}

/// Child with rows `[0, cut)` from `a` and `[cut, g)` from `b`.
pub fn crossover_at(a: &Genome, b: &Genome, cut: usize) -> Result<Genome> {
    if a.len() != b.len() || a.n_qubits() != b.n_qubits() {
        return invalid(format!("crossover of genomes with {} and {} rows", a.len(), b.len()));
    }
    if cut > a.len() {
        return invalid(format!("cut {cut} beyond genome length {}", a.len()));
    }
    a.slice(0, cut).concat(&b.slice(cut, b.len()))
}

/// Single-point crossover with the cut drawn uniformly from `0..=g`.
pub fn crossover<R: Rng + ?Sized>(a: &Genome, b: &Genome, rng: &mut R) -> Result<Genome> {
    if a.len() != b.len() {
        return invalid(format!("crossover of genomes with {} and {} rows", a.len(), b.len()));
    }
    let cut = rng.random_range(0..=a.len());
    crossover_at(a, b, cut)
}

/// Mean adder fidelity of a fixed 3-qubit unitary over the sample.
pub fn fitness_adder_unitary(u: &Unitary, sample: &[(f64, f64)]) -> Result<f64> {
    if sample.is_empty() {
        return invalid("adder fitness needs a non-empty sample");
    }
    let total = sample.iter().map(|&(a, b)| adder_fidelity(u, a, b)).sum::<Result<f64>>()?;
    Ok(total / sample.len() as f64)
}

pub fn fitness_adder(genome: &Genome, sample: &[(f64, f64)], convention: &DecodeConvention) -> Result<f64> {
    if genome.n_qubits() != 3 {
        return invalid("adder genomes address 3 qubits");
    }
    fitness_adder_unitary(&genome.decode(convention)?, sample)
}

pub fn fitness_autoencoder(
    encoder: &Genome,
    decoder: &Genome,
    family: &StateFamily,
    layout: &AutoencoderLayout,
    convention: &DecodeConvention,
) -> Result<f64> {
    let spec = AutoencoderSpec::new(encoder.decode(convention)?, decoder.decode(convention)?, layout.clone())?;
    Ok(autoencode_fidelity(&spec, family)?.average)
}

fn evaluate(individual: &Genome, config: &GaConfig) -> Result<f64> {
    match &config.target {
        FitnessTarget::Adder { sample } => fitness_adder(individual, sample, &config.convention),
        FitnessTarget::Autoencoder { family, layout } => {
            let g = config.gene_count;
            fitness_autoencoder(
                &individual.slice(0, g),
                &individual.slice(g, 2 * g),
                family,
                layout,
                &config.convention,
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BestIndividual {
    Adder(Genome),
    Autoencoder { encoder: Genome, decoder: Genome },
}

#[derive(Clone, Debug)]
pub struct GaResult {
    pub best: BestIndividual,
    pub best_fitness: f64,
    /// Best fitness of each evaluated generation.
    pub fitness_history: Vec<f64>,
    pub config_echo: GaConfig,
}

impl GaResult {
    pub fn generations_run(&self) -> usize {
        self.fitness_history.len()
    }
}

fn tournament<'a, R: Rng + ?Sized>(pop: &'a [Genome], fitness: &[f64], size: usize, rng: &mut R) -> &'a Genome {
    let mut best = rng.random_range(0..pop.len());
    for _ in 1..size {
        let i = rng.random_range(0..pop.len());
        if fitness[i] > fitness[best] || (fitness[i] == fitness[best] && i < best) {
            best = i;
        }
    }
    &pop[best]
}

pub fn ga_run(config: &GaConfig) -> Result<GaResult> {
    config.validate()?;
    let n_qubits = config.target.register_qubits();
    let len = config.genome_len();
    let mut population = (0..config.population_size)
        .map(|i| random_genome(len, n_qubits, &mut stream_rng(config.rng_seed, 0, i)))
        .collect::<Result<Vec<_>>>()?;
    let mut history = Vec::with_capacity(config.generations);

    let mut generation = 0;
    loop {
        let fitness = population.par_iter().map(|ind| evaluate(ind, config)).collect::<Result<Vec<_>>>()?;
        let mut ranked: Vec<usize> = (0..population.len()).collect();
        ranked.sort_by(|&a, &b| fitness[b].total_cmp(&fitness[a]).then(a.cmp(&b)));
        let best = ranked[0];
        history.push(fitness[best]);

        generation += 1;
        if fitness[best] >= EARLY_STOP_FITNESS || generation >= config.generations {
            let winner = &population[best];
            let best = match config.target {
                FitnessTarget::Adder { .. } => BestIndividual::Adder(winner.clone()),
                FitnessTarget::Autoencoder { .. } => BestIndividual::Autoencoder {
                    encoder: winner.slice(0, config.gene_count),
                    decoder: winner.slice(config.gene_count, len),
                },
            };
            return Ok(GaResult {
                best,
                best_fitness: *history.last().expect("at least one generation"),
                fitness_history: history,
                config_echo: config.clone(),
            });
        }

        let elites = ranked[..config.elite_count].iter().map(|&i| population[i].clone());
        let children = (config.elite_count..config.population_size)
            .into_par_iter()
            .map(|i| {
                let mut rng = stream_rng(config.rng_seed, generation, i);
                let a = tournament(&population, &fitness, config.tournament_size, &mut rng);
                let b = tournament(&population, &fitness, config.tournament_size, &mut rng);
                let child = crossover(a, b, &mut rng)?;
                Ok(mutate(&child, config, &mut rng))
            })
            .collect::<Result<Vec<_>>>()?;
        population = elites.chain(children).collect();
    }
}

/// Machine-readable summary of a run; genomes are embedded in the genome text format.
#[derive(Clone, Debug, Serialize)]
pub struct GaReport {
    pub target: String,
    pub population_size: usize,
    pub generations: usize,
    pub gene_count: usize,
    pub mutation_rate: f64,
    pub mutation_scale: f64,
    pub elite_count: usize,
    pub tournament_size: usize,
    pub rng_seed: u64,
    pub convention: DecodeConvention,
    pub latent_qubit: Option<u8>,
    pub trash_handling: Option<String>,
    pub generations_run: usize,
    pub best_fitness: f64,
    pub best_genomes: Vec<(String, String)>,
    pub fitness_history: Vec<f64>,
}

impl GaResult {
    pub fn report(&self) -> GaReport {
        let c = &self.config_echo;
        let (target, latent_qubit, trash_handling) = match &c.target {
            FitnessTarget::Adder { sample } => (format!("adder ({} samples)", sample.len()), None, None),
            FitnessTarget::Autoencoder { family, layout } => (
                format!("autoencoder ({})", family.label()),
                Some(layout.latent_qubit()),
                Some(match layout.trash() {
                    TrashHandling::PassThrough => "pass-through".to_string(),
                    TrashHandling::Refresh(s) => format!("refresh {:?}", s.amplitudes()),
                }),
            ),
        };
        let best_genomes = match &self.best {
            BestIndividual::Adder(g) => vec![("adder".to_string(), g.to_text())],
            BestIndividual::Autoencoder { encoder, decoder } => {
                vec![("encoder".to_string(), encoder.to_text()), ("decoder".to_string(), decoder.to_text())]
            }
        };
        GaReport {
            target,
            population_size: c.population_size,
            generations: c.generations,
            gene_count: c.gene_count,
            mutation_rate: c.mutation_rate,
            mutation_scale: c.mutation_scale,
            elite_count: c.elite_count,
            tournament_size: c.tournament_size,
            rng_seed: c.rng_seed,
            convention: c.convention,
            latent_qubit,
            trash_handling,
            generations_run: self.generations_run(),
            best_fitness: self.best_fitness,
            best_genomes,
            fitness_history: self.fitness_history.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autoencoder::orthogonal_benchmark;
    use crate::qsim::StateVector;
    use std::f64::consts::FRAC_PI_2;

    fn small_config(seed: u64) -> GaConfig {
        let mut c = GaConfig::new(FitnessTarget::autoencoder(orthogonal_benchmark(2).unwrap()), seed);
        c.generations = 20;
        c.population_size = 16;
        c
    }

    #[test]
    fn config_invariants() {
        let mut c = small_config(1);
        assert!(c.validate().is_ok());
        c.elite_count = 0;
        assert!(c.validate().is_err());
        c.elite_count = 16;
        assert!(c.validate().is_err());
        c.elite_count = 2;
        c.tournament_size = 1;
        assert!(c.validate().is_err());
        c.tournament_size = 3;
        c.mutation_rate = 1.5;
        assert!(c.validate().is_err());
        let empty = GaConfig::new(FitnessTarget::Adder { sample: vec![] }, 0);
        assert!(empty.validate().is_err());
    }

    #[test]
    fn zero_rate_mutation_is_identity() {
        let mut c = small_config(3);
        c.mutation_rate = 0.0;
        let g = random_genome(8, 2, &mut stream_rng(3, 0, 0)).unwrap();
        assert_eq!(mutate(&g, &c, &mut stream_rng(3, 1, 0)), g);
    }

    #[test]
    fn zero_scale_mutation_keeps_phases() {
        let g = random_genome(8, 2, &mut stream_rng(3, 0, 0)).unwrap();
        let m = mutate_with(&g, 1.0, 0.0, 0.0, &mut stream_rng(3, 1, 0));
        assert_eq!(m, g);
    }

    #[test]
    fn mutation_is_seed_deterministic() {
        let c = small_config(5);
        let g = random_genome(8, 2, &mut stream_rng(5, 0, 0)).unwrap();
        assert_eq!(mutate(&g, &c, &mut stream_rng(9, 2, 1)), mutate(&g, &c, &mut stream_rng(9, 2, 1)));
    }

    #[test]
    fn crossover_cut_points() {
        let a = random_genome(6, 2, &mut stream_rng(1, 0, 0)).unwrap();
        let b = random_genome(6, 2, &mut stream_rng(1, 0, 1)).unwrap();
        assert_eq!(crossover_at(&a, &b, 0).unwrap(), b);
        assert_eq!(crossover_at(&a, &b, 6).unwrap(), a);
        let child = crossover_at(&a, &b, 3).unwrap();
        assert_eq!(&child.rows()[..3], &a.rows()[..3]);
        assert_eq!(&child.rows()[3..], &b.rows()[3..]);
        if a.rows()[3..] != b.rows()[3..] {
            assert_ne!(child, a);
        }
        if a.rows()[..3] != b.rows()[..3] {
            assert_ne!(child, b);
        }
        let short = random_genome(5, 2, &mut stream_rng(1, 0, 2)).unwrap();
        assert!(crossover_at(&a, &short, 2).is_err());
        assert!(crossover(&a, &short, &mut stream_rng(1, 0, 3)).is_err());
    }

    #[test]
    fn adder_fitness_edge_cases() {
        let id = Genome::empty(3).unwrap();
        let conv = DecodeConvention::TABLE1;
        assert!((fitness_adder(&id, &[(0.0, 0.0)], &conv).unwrap() - 1.0).abs() < 1e-12);
        assert!(fitness_adder(&id, &[(FRAC_PI_2, FRAC_PI_2)], &conv).unwrap().abs() < 1e-12);
        assert!(fitness_adder(&id, &[], &conv).is_err());
        let two = Genome::empty(2).unwrap();
        assert!(fitness_adder(&two, &[(0.0, 0.0)], &conv).is_err());
    }

    #[test]
    fn autoencoder_fitness_identity_pair() {
        let id = Genome::empty(2).unwrap();
        let conv = DecodeConvention::TABLE1;
        let layout = AutoencoderLayout::refresh_zero(1).unwrap();
        let pair =
            StateFamily::new("pair", vec![StateVector::basis(2, 0b00).unwrap(), StateVector::basis(2, 0b10).unwrap()])
                .unwrap();
        assert!((fitness_autoencoder(&id, &id, &pair, &layout, &conv).unwrap() - 1.0).abs() < 1e-12);
        let four = orthogonal_benchmark(4).unwrap();
        assert!((fitness_autoencoder(&id, &id, &four, &layout, &conv).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn run_is_deterministic_and_monotone() {
        let c = small_config(11);
        let r1 = ga_run(&c).unwrap();
        let r2 = ga_run(&c).unwrap();
        assert_eq!(r1.best, r2.best);
        assert_eq!(r1.fitness_history, r2.fitness_history);
        assert!(r1.fitness_history.windows(2).all(|w| w[1] >= w[0]));
        assert_eq!(r1.best_fitness, *r1.fitness_history.last().unwrap());
        assert!(r1.best_fitness <= 1.0 + 1e-12);
    }

    #[test]
    fn early_stop_on_perfect_fitness() {
        // identity is already optimal for |00> alone; any genome whose trash stays |0> scores 1
        let fam = StateFamily::new("one", vec![StateVector::zero(2).unwrap()]).unwrap();
        let mut c = GaConfig::new(FitnessTarget::autoencoder(fam), 4);
        c.gene_count = 1;
        c.population_size = 40;
        let r = ga_run(&c).unwrap();
        assert!(r.best_fitness >= EARLY_STOP_FITNESS);
        assert!(r.generations_run() < c.generations);
    }
}
