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

//! Gate-list genomes: one `(gate id, phase, qubit)` row per gate.
//!
//! Qubits are one-based labels here. A two-qubit row (MS) names a pair of labels; in two-qubit
//! registers the only pair is `(1, 2)` and is written `-` in genome files.

use std::f64::consts::TAU;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::qsim::{gate_matrix, GateKind, Unitary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    Qubit(u8),
    Pair(u8, u8),
}

impl Target {
    pub fn touches(&self, q: u8) -> bool {
        match *self {
            Target::Qubit(a) => a == q,
            Target::Pair(a, b) => a == q || b == q,
        }
    }

    pub fn overlaps(&self, other: &Target) -> bool {
        match *other {
            Target::Qubit(a) => self.touches(a),
            Target::Pair(a, b) => self.touches(a) || self.touches(b),
        }
    }

    /// Zero-based simulator positions.
    pub fn positions(&self) -> Vec<usize> {
        match *self {
            Target::Qubit(a) => vec![a as usize - 1],
            Target::Pair(a, b) => vec![a as usize - 1, b as usize - 1],
        }
    }
}

/// Wraps an angle into `[0, 2pi)`.
pub fn canonical_phase(phase: f64) -> f64 {
    let p = phase.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if p >= TAU {
        0.0
    } else {
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gene {
    kind: GateKind,
    phase: f64,
    target: Target,
}

impl Gene {
    pub fn new(kind: GateKind, phase: f64, target: Target) -> Result<Self> {
        if !phase.is_finite() {
            return invalid(format!("non-finite phase {phase}"));
        }
        match (kind.is_rotation(), target) {
            (true, Target::Qubit(q)) if q >= 1 => {}
            (false, Target::Pair(a, b)) if a >= 1 && b >= 1 && a != b => {}
            _ => return invalid(format!("{} cannot act on {target:?}", kind.name())),
        }
        Ok(Self { kind, phase: canonical_phase(phase), target })
    }

    pub fn rotation(kind: GateKind, phase: f64, qubit: u8) -> Result<Self> {
        Self::new(kind, phase, Target::Qubit(qubit))
    }

    /// MS on the pair `(1, 2)`.
    pub fn ms(phase: f64) -> Result<Self> {
        Self::new(GateKind::Ms, phase, Target::Pair(1, 2))
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn with_phase(&self, phase: f64) -> Self {
        Self { phase: canonical_phase(phase), ..*self }
    }

    fn max_label(&self) -> u8 {
        match self.target {
            Target::Qubit(a) => a,
            Target::Pair(a, b) => a.max(b),
        }
    }
}

/// Which genome row acts on the state first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GateOrder {
    /// Row 1 is applied first: `U = G_g ... G_2 G_1`.
    FirstRowFirst,
    /// Row g is applied first: `U = G_1 G_2 ... G_g`.
    LastRowFirst,
}

/// How a genome phase maps onto the exponent of the gate generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AngleScale {
    /// `exp(-i phase G / 2)`
    Half,
    /// `exp(-i phase G)`
    Full,
}

impl AngleScale {
    fn argument(self, phase: f64) -> f64 {
        match self {
            AngleScale::Half => phase,
            AngleScale::Full => 2.0 * phase,
        }
    }
}

/// Conventions used to turn genome rows into a unitary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecodeConvention {
    pub order: GateOrder,
    pub rotation_angle: AngleScale,
    pub ms_angle: AngleScale,
}

impl DecodeConvention {
    /// The only combination under which the published autoencoder circuits reach their reported
    /// fidelity: rows in order, half-angle rotations, MS as `exp(-i phase YY)`.
    pub const TABLE1: DecodeConvention = DecodeConvention {
        order: GateOrder::FirstRowFirst,
        rotation_angle: AngleScale::Half,
        ms_angle: AngleScale::Full,
    };

    /// Half-angle for every gate, rows in order.
    pub const UNIFORM_HALF: DecodeConvention = DecodeConvention {
        order: GateOrder::FirstRowFirst,
        rotation_angle: AngleScale::Half,
        ms_angle: AngleScale::Half,
    };

    pub fn all() -> Vec<DecodeConvention> {
        let mut out = Vec::with_capacity(8);
        for order in [GateOrder::FirstRowFirst, GateOrder::LastRowFirst] {
            for rotation_angle in [AngleScale::Half, AngleScale::Full] {
                for ms_angle in [AngleScale::Half, AngleScale::Full] {
                    out.push(DecodeConvention { order, rotation_angle, ms_angle });
                }
            }
        }
        out
    }

    pub fn gate_unitary(&self, gene: &Gene) -> Result<Unitary> {
        let scale = if gene.kind.is_rotation() { self.rotation_angle } else { self.ms_angle };
        gate_matrix(gene.kind, scale.argument(gene.phase))
    }
}

impl Default for DecodeConvention {
    fn default() -> Self {
        Self::TABLE1
    }
}

/// Ordered gate rows on a fixed-width register.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Genome {
    n_qubits: usize,
    rows: Vec<Gene>,
}

impl Genome {
    pub fn new(n_qubits: usize, rows: Vec<Gene>) -> Result<Self> {
        if !(2..=3).contains(&n_qubits) {
            return invalid(format!("genomes address 2 or 3 qubits, not {n_qubits}"));
        }
        if let Some(bad) = rows.iter().find(|g| g.max_label() as usize > n_qubits) {
            return invalid(format!("row {bad:?} addresses a qubit outside a {n_qubits}-qubit register"));
        }
        Ok(Self { n_qubits, rows })
    }

    pub fn empty(n_qubits: usize) -> Result<Self> {
        Self::new(n_qubits, Vec::new())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn rows(&self) -> &[Gene] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows `[start, end)` as a genome on the same register.
    pub fn slice(&self, start: usize, end: usize) -> Genome {
        Genome { n_qubits: self.n_qubits, rows: self.rows[start..end].to_vec() }
    }

    pub fn concat(&self, other: &Genome) -> Result<Genome> {
        if self.n_qubits != other.n_qubits {
            return invalid("cannot concatenate genomes on different registers");
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Ok(Genome { n_qubits: self.n_qubits, rows })
    }

    pub fn decode(&self, convention: &DecodeConvention) -> Result<Unitary> {
        let mut u = Unitary::identity(self.n_qubits);
        let apply = |u: Unitary, gene: &Gene| -> Result<Unitary> {
            u.then_gate(&convention.gate_unitary(gene)?, &gene.target.positions())
        };
        match convention.order {
            GateOrder::FirstRowFirst => {
                for gene in &self.rows {
                    u = apply(u, gene)?;
                }
            }
            GateOrder::LastRowFirst => {
                for gene in self.rows.iter().rev() {
                    u = apply(u, gene)?;
                }
            }
        }
        Ok(u)
    }

    /// Merges consecutive gates of the same type on the same qubit(s), where rows acting on
    /// disjoint qubits commute past each other. The merged gate takes the later row's slot.
    pub fn simplify(&self) -> Genome {
        let mut rows = self.rows.clone();
        'scan: loop {
            for i in 0..rows.len() {
                let next = (i + 1..rows.len()).find(|&j| rows[j].target.overlaps(&rows[i].target));
                if let Some(j) = next {
                    if rows[j].kind == rows[i].kind && rows[j].target == rows[i].target {
                        let merged = rows[j].with_phase(rows[i].phase + rows[j].phase);
                        rows[j] = merged;
                        rows.remove(i);
                        continue 'scan;
                    }
                }
            }
            break;
        }
        Genome { n_qubits: self.n_qubits, rows }
    }

    /// Gate names per wire in application order (first-row-first), diagram style.
    pub fn wire_layout(&self) -> Vec<Vec<&'static str>> {
        let mut wires = vec![Vec::new(); self.n_qubits];
        for gene in &self.rows {
            for p in gene.target.positions() {
                wires[p].push(gene.kind.name());
            }
        }
        wires
    }

    /// Parses `gate_id phase qubit` lines. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, n_qubits: usize) -> Result<Genome> {
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: lineno + 1, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err(format!("expected 3 fields, found {}", fields.len())));
            }
            let id: u8 = fields[0].parse().map_err(|_| err(format!("bad gate id {:?}", fields[0])))?;
            let kind = GateKind::from_id(id).map_err(|e| err(e.to_string()))?;
            let phase: f64 = fields[1].parse().map_err(|_| err(format!("bad phase {:?}", fields[1])))?;
            let target = parse_target(fields[2]).ok_or_else(|| err(format!("bad qubit {:?}", fields[2])))?;
            rows.push(Gene::new(kind, phase, target).map_err(|e| err(e.to_string()))?);
        }
        Genome::new(n_qubits, rows).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn parse_target(field: &str) -> Option<Target> {
    if field == "-" {
        return Some(Target::Pair(1, 2));
    }
    if let Some((a, b)) = field.split_once('-') {
        return Some(Target::Pair(a.parse().ok()?, b.parse().ok()?));
    }
    field.parse().ok().map(Target::Qubit)
}

/// Three decimals when that round-trips, otherwise the shortest exact representation.
fn format_phase(p: f64) -> String {
    let short = format!("{p:.3}");
    if short.parse::<f64>().ok() == Some(p) {
        short
    } else {
        format!("{p}")
    }
}

impl fmt::Display for Genome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for gene in &self.rows {
            let q = match gene.target {
                Target::Qubit(a) => a.to_string(),
                Target::Pair(1, 2) if self.n_qubits == 2 => "-".to_string(),
                Target::Pair(a, b) => format!("{a}-{b}"),
            };
            writeln!(f, "{} {} {}", gene.kind.id(), format_phase(gene.phase), q)?;
        }
        Ok(())
    }
}

/// Uniform gate type, uniform phase in `[0, 2pi)`, uniform qubit (or qubit pair).
pub fn random_gene<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Gene {
    let kind = GateKind::ALL[rng.random_range(0..4)];
    let phase = rng.random_range(0.0..TAU);
    let target = if kind.is_rotation() {
        Target::Qubit(rng.random_range(1..=n_qubits as u8))
    } else {
        let pairs: &[(u8, u8)] = if n_qubits == 2 { &[(1, 2)] } else { &[(1, 2), (1, 3), (2, 3)] };
        let (a, b) = pairs[rng.random_range(0..pairs.len())];
        Target::Pair(a, b)
    };
    Gene { kind, phase: canonical_phase(phase), target }
}

pub fn random_genome<R: Rng + ?Sized>(g: usize, n_qubits: usize, rng: &mut R) -> Result<Genome> {
    if !(2..=3).contains(&n_qubits) {
        return invalid(format!("genomes address 2 or 3 qubits, not {n_qubits}"));
    }
    Ok(Genome { n_qubits, rows: (0..g).map(|_| random_gene(n_qubits, rng)).collect() })
}
