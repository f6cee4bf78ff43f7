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

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qautoenc::commands;
use qautoenc::config::RunConfig;

#[derive(Parser)]
#[command(name = "qautoenc", version, about = "Quantum adder and autoencoder reproduction runs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Flat `key = value` config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long)]
    grid: Option<usize>,
    /// Worker threads (does not affect results).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Basis-adder fidelity statistics over [0, pi/2]^2 (default grid 201).
    AdderStats(Common),
    /// Resolve decoding conventions against the published autoencoder circuits.
    VerifyTable1(Common),
    /// Genetic-algorithm synthesis; `seed` is required.
    Ga(Common),
    /// sigma_z encoding and CPHASE-via-adder checks (default grid 101).
    Demos(Common),
}

impl Common {
    fn run_config(&self) -> qautoenc::Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::new(),
        };
        let mut flags = RunConfig::new();
        if let Some(seed) = self.seed {
            flags.set("seed", seed);
        }
        if let Some(grid) = self.grid {
            flags.set("grid", grid);
        }
        cfg.merge(&flags);
        Ok(cfg)
    }
}

fn run(command: Command) -> qautoenc::Result<bool> {
    match command {
        Command::AdderStats(common) => {
            let mut cfg = common.run_config()?;
            cfg.check_known(&["grid"])?;
            let grid = cfg.get_or("grid", 201usize)?;
            let summary = commands::adder_stats(grid, &common.out)?;
            let r = &summary.report;
            println!("grid {}x{}", grid, grid);
            println!("average fidelity {:.6}", r.average);
            println!("minimum fidelity {:.6} at ({:.6}, {:.6})", r.minimum, r.argmin.0, r.argmin.1);
            println!("wrote {}", common.out.display());
            Ok(true)
        }
        Command::VerifyTable1(common) => {
            let report = commands::table1(Some(&common.out))?;
            for c in &report.candidates {
                let latent = c.latent_qubit.map_or("-".to_string(), |q| q.to_string());
                println!(
                    "{:<16} rot={:<4} ms={:<4} latent={} {:<12} average={:.4}{}",
                    format!("{:?}", c.gate_order),
                    format!("{:?}", c.rotation_angle),
                    format!("{:?}", c.ms_angle),
                    latent,
                    c.trash_handling,
                    c.average,
                    if c.within_tolerance { "  <-- within tolerance" } else { "" }
                );
            }
            match &report.resolved {
                Some(c) => println!("resolved: average {:.4} (per state {:?})", c.average, c.per_state),
                None => eprintln!("no convention reproduces {} +/- {}", report.target, report.tolerance),
            }
            Ok(report.passed())
        }
        Command::Ga(common) => {
            let cfg = common.run_config()?;
            let (result, warnings) = commands::ga(&cfg, &common.out)?;
            for w in warnings {
                eprintln!("warning: {w}");
            }
            println!("best fitness {:.6} after {} generations", result.best_fitness, result.generations_run());
            println!("wrote {}", common.out.display());
            Ok(true)
        }
        Command::Demos(common) => {
            let mut cfg = common.run_config()?;
            cfg.check_known(&["grid"])?;
            let grid = cfg.get_or("grid", 101usize)?;
            let summary = commands::demos(grid, 100)?;
            println!("sigma_z identity max deviation over {g}x{g}: {:.3e}", summary.sigma_z_max_deviation, g = grid);
            println!(
                "CPHASE sweep ({} points) min fidelity: {:.15}",
                summary.cphase_points, summary.cphase_min_fidelity
            );
            println!("adder round-trip vs CPHASE max deviation: {:.3e}", summary.roundtrip_max_deviation);
            Ok(summary.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match &cli.command {
        Command::AdderStats(c) | Command::VerifyTable1(c) | Command::Ga(c) | Command::Demos(c) => c.threads,
    };
    if let Some(n) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
