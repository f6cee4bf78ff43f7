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

//! Approximate quantum adders and two-qubit quantum autoencoders on small dense registers,
//! with a seeded genetic algorithm that synthesizes circuits over `{Rx, Ry, Rz, MS}`.
//!
//! - [`qsim`]: statevectors, density matrices, gates, partial traces, fidelities.
//! - [`adders`]: the basis adder, its fidelity landscape, the sigma_z encoding and CPHASE demo.
//! - [`genome`]: gate-list genomes, decoding conventions, simplification, text format.
//! - [`autoencoder`]: the encode/discard/refresh/decode pipeline and fixture instances.
//! - [`ga`]: the evolutionary search.
//! - [`verify`]: convention resolution against the published autoencoder circuits.
//! - [`commands`], [`config`]: what the `qautoenc` binary runs.

// Negated comparisons are used on purpose so NaN fails range checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod adders;
pub mod autoencoder;
pub mod commands;
pub mod config;
pub mod error;
pub mod ga;
pub mod genome;
pub mod qsim;
pub mod verify;

pub use error::{Error, Result};
