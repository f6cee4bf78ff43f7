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

//! Command implementations behind the `qautoenc` binary. Each writes its artifacts into an
//! output directory and returns the in-memory result so callers can check tolerances.
//!
//! Artifact names and JSON field names are stable:
//!
//! | command         | files                                                        |
//! |-----------------|--------------------------------------------------------------|
//! | `adder-stats`   | `adder_sweep.csv`, `adder_stats.json`                        |
//! | `verify-table1` | `table1_report.json`                                         |
//! | `ga`            | `ga_result.json`, `*.genome`, `fitness_history.csv`, `effective.conf` |

use std::f64::consts::TAU;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::adders::{
    basis_adder, cphase_via_adder, sigma_z_closed_form, sigma_z_summand, AdderRegion, FidelityReport, FidelitySweep,
};
use crate::autoencoder::{
    adder_roundtrip_state, orthogonal_benchmark, paper_three_states, AutoencoderLayout, StateFamily, TrashHandling,
};
use crate::config::RunConfig;
use crate::error::{invalid, Result};
use crate::ga::{ga_run, BestIndividual, FitnessTarget, GaConfig, GaReport, GaResult};
use crate::genome::DecodeConvention;
use crate::qsim::{c, Observable, StateVector, Unitary};
use crate::verify::{verify_table1, VerificationReport};

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct AdderStatsSummary {
    pub theta_min: f64,
    pub theta_max: f64,
    pub grid: usize,
    pub quadrature: &'static str,
    pub report: FidelityReport,
}

/// Sweeps the basis adder over `[0, pi/2]^2`.
pub fn adder_stats(grid: usize, out: &Path) -> Result<AdderStatsSummary> {
    let region = AdderRegion::quarter_turn(grid)?;
    let sweep = FidelitySweep::run(&basis_adder(), &region)?;
    fs::create_dir_all(out)?;
    let file = fs::File::create(out.join("adder_sweep.csv"))?;
    sweep.write_csv(std::io::BufWriter::new(file))?;
    let summary = AdderStatsSummary {
        theta_min: region.theta_min(),
        theta_max: region.theta_max(),
        grid,
        quadrature: "trapezoidal",
        report: sweep.report(),
    };
    write_json(&out.join("adder_stats.json"), &summary)?;
    Ok(summary)
}

pub fn table1(out: Option<&Path>) -> Result<VerificationReport> {
    let report = verify_table1()?;
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
        write_json(&dir.join("table1_report.json"), &report)?;
    }
    Ok(report)
}

/// Keys understood by the `ga` command.
pub const GA_KEYS: &[&str] = &[
    "seed",
    "target",
    "family",
    "family_file",
    "grid",
    "population_size",
    "generations",
    "gene_count",
    "mutation_rate",
    "mutation_scale",
    "elite_count",
    "tournament_size",
    "latent_qubit",
    "trash",
    "convention",
];

fn named_family(name: &str) -> Result<StateFamily> {
    match name {
        "orthogonal-2" => orthogonal_benchmark(2),
        "orthogonal-3" => orthogonal_benchmark(3),
        "orthogonal-4" => orthogonal_benchmark(4),
        "three-state" => Ok(paper_three_states()),
        other => invalid(format!("unknown family {other:?} (orthogonal-2, orthogonal-3, orthogonal-4, three-state)")),
    }
}

/// Resolves a [`GaConfig`] from a run config, filling every default into `cfg` so the caller can
/// echo the complete effective configuration. Returns warnings from family-file loading.
pub fn ga_config_from(cfg: &mut RunConfig) -> Result<(GaConfig, Vec<String>)> {
    cfg.check_known(GA_KEYS)?;
    let seed: u64 = cfg.require("seed")?;
    let target_name: String = cfg.get_or("target", "autoencoder".to_string())?;
    let convention = match cfg.get_or("convention", "table1".to_string())?.as_str() {
        "table1" => DecodeConvention::TABLE1,
        "uniform-half" => DecodeConvention::UNIFORM_HALF,
        other => return invalid(format!("unknown convention {other:?} (table1, uniform-half)")),
    };
    let mut warnings = Vec::new();
    let target = match target_name.as_str() {
        "autoencoder" => {
            let family = match cfg.get_str("family_file").map(PathBuf::from) {
                Some(path) => {
                    let (fam, w) = StateFamily::parse(path.display().to_string(), &fs::read_to_string(&path)?)?;
                    warnings = w;
                    fam
                }
                None => named_family(&cfg.get_or("family", "orthogonal-2".to_string())?)?,
            };
            let latent: u8 = cfg.get_or("latent_qubit", AutoencoderLayout::table1().latent_qubit())?;
            let trash = match cfg.get_or("trash", "refresh".to_string())?.as_str() {
                "refresh" => TrashHandling::refresh_zero(),
                "pass-through" => TrashHandling::PassThrough,
                other => return invalid(format!("unknown trash handling {other:?} (refresh, pass-through)")),
            };
            FitnessTarget::Autoencoder { family, layout: AutoencoderLayout::new(latent, trash)? }
        }
        "adder" => {
            let grid: usize = cfg.get_or("grid", 11)?;
            FitnessTarget::adder_region(&AdderRegion::quarter_turn(grid)?)
        }
        other => return invalid(format!("unknown target {other:?} (autoencoder, adder)")),
    };
    let mut ga = GaConfig::new(target, seed);
    ga.convention = convention;
    ga.population_size = cfg.get_or("population_size", ga.population_size)?;
    ga.generations = cfg.get_or("generations", ga.generations)?;
    ga.gene_count = cfg.get_or("gene_count", ga.gene_count)?;
    ga.mutation_rate = cfg.get_or("mutation_rate", ga.mutation_rate)?;
    ga.mutation_scale = cfg.get_or("mutation_scale", ga.mutation_scale)?;
    ga.elite_count = cfg.get_or("elite_count", ga.elite_count)?;
    ga.tournament_size = cfg.get_or("tournament_size", ga.tournament_size)?;
    ga.validate()?;
    Ok((ga, warnings))
}

#[derive(Serialize)]
struct GaArtifact<'a> {
    effective_config: &'a std::collections::BTreeMap<String, String>,
    result: GaReport,
}

/// Runs the GA and writes its artifacts. Output bytes depend only on the effective config.
pub fn ga(cfg: &RunConfig, out: &Path) -> Result<(GaResult, Vec<String>)> {
    let mut effective = cfg.clone();
    let (config, warnings) = ga_config_from(&mut effective)?;
    let result = ga_run(&config)?;
    fs::create_dir_all(out)?;
    fs::write(out.join("effective.conf"), effective.echo())?;
    let header = format!("# {}\n", effective.echo().trim_end().replace('\n', "\n# "));
    match &result.best {
        BestIndividual::Adder(g) => fs::write(out.join("adder.genome"), format!("{header}{g}"))?,
        BestIndividual::Autoencoder { encoder, decoder } => {
            fs::write(out.join("encoder.genome"), format!("{header}{encoder}"))?;
            fs::write(out.join("decoder.genome"), format!("{header}{decoder}"))?;
        }
    }
    let mut history = String::from("generation,best_fitness\n");
    for (i, f) in result.fitness_history.iter().enumerate() {
        history.push_str(&format!("{i},{f}\n"));
    }
    fs::write(out.join("fitness_history.csv"), history)?;
    write_json(
        &out.join("ga_result.json"),
        &GaArtifact { effective_config: effective.entries(), result: result.report() },
    )?;
    Ok((result, warnings))
}

/// Tolerances checked by [`demos`].
pub const DEMO_SIGMA_Z_TOL: f64 = 1e-10;
pub const DEMO_CPHASE_TOL: f64 = 1e-10;

#[derive(Clone, Debug, Serialize)]
pub struct DemoSummary {
    pub sigma_z_grid: usize,
    pub sigma_z_max_deviation: f64,
    pub cphase_points: usize,
    pub cphase_min_fidelity: f64,
    /// Max disagreement between the CPHASE protocol and the generic adder round trip.
    pub roundtrip_max_deviation: f64,
}

impl DemoSummary {
    pub fn passed(&self) -> bool {
        self.sigma_z_max_deviation < DEMO_SIGMA_Z_TOL
            && self.cphase_min_fidelity >= 1.0 - DEMO_CPHASE_TOL
            && self.roundtrip_max_deviation < 1e-12
    }
}

/// sigma_z encoding over a `grid x grid` square and the CPHASE round trip over `points`
/// superpositions `cos t |00> + sin t |11>`.
pub fn demos(grid: usize, points: usize) -> Result<DemoSummary> {
    let region = AdderRegion::quarter_turn(grid)?;
    let mut sigma_z_max_deviation = 0.0f64;
    for (a, b) in region.nodes() {
        // sigma_z_summand enforces the tolerance itself; report the raw deviation too
        let simulated = sigma_z_summand(a, b)?;
        sigma_z_max_deviation = sigma_z_max_deviation.max((simulated - sigma_z_closed_form(a, b)).abs());
    }
    let z = Unitary::new(Observable::sigma_z().matrix().clone())?;
    let adder = basis_adder();
    let mut cphase_min_fidelity = 1.0f64;
    let mut roundtrip_max_deviation = 0.0f64;
    for k in 0..points {
        let t = TAU * k as f64 / points as f64;
        let (alpha, beta) = (c(t.cos(), 0.0), c(t.sin(), 0.0));
        let outcome = cphase_via_adder(alpha, beta)?;
        cphase_min_fidelity = cphase_min_fidelity.min(outcome.fidelity);
        let zero = c(0.0, 0.0);
        let input = StateVector::normalized(vec![alpha, zero, zero, beta])?;
        let ideal = StateVector::normalized(vec![alpha, zero, zero, -beta])?;
        let generic = adder_roundtrip_state(&adder, &input, &z)?.fidelity(&ideal)?;
        roundtrip_max_deviation = roundtrip_max_deviation.max((generic - outcome.fidelity).abs());
    }
    Ok(DemoSummary {
        sigma_z_grid: grid,
        sigma_z_max_deviation,
        cphase_points: points,
        cphase_min_fidelity,
        roundtrip_max_deviation,
    })
}
