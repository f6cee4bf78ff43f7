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

//! Two-qubit autoencoders: encode with `U1`, keep one latent qubit, refresh the trash qubit,
//! decode with `U2` and score the overlap with the input.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::genome::{DecodeConvention, Gene, Genome};
use crate::qsim::{c, DensityMatrix, GateKind, StateVector, Unitary, C64, UNITARITY_TOL};

/// A non-empty list of normalized two-qubit states.
#[derive(Clone, Debug, PartialEq)]
pub struct StateFamily {
    label: String,
    states: Vec<StateVector>,
}

impl StateFamily {
    pub fn new(label: impl Into<String>, states: Vec<StateVector>) -> Result<Self> {
        if states.is_empty() {
            return invalid("state family must not be empty");
        }
        if let Some(s) = states.iter().find(|s| s.n_qubits() != 2) {
            return invalid(format!("family members must be 2-qubit states, got {} qubits", s.n_qubits()));
        }
        Ok(Self { label: label.into(), states })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Parses one state per line, `re,im re,im re,im re,im` over `|00>, |01>, |10>, |11>`.
    /// Members are normalized; a warning is returned for each one whose norm was off by more
    /// than `1e-6`.
    pub fn parse(label: impl Into<String>, text: &str) -> Result<(Self, Vec<String>)> {
        let mut states = Vec::new();
        let mut warnings = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: lineno + 1, msg };
            let amps = line
                .split_whitespace()
                .map(|tok| {
                    let (re, im) = tok.split_once(',').ok_or_else(|| err(format!("expected re,im in {tok:?}")))?;
                    let re: f64 = re.trim().parse().map_err(|_| err(format!("bad real part {re:?}")))?;
                    let im: f64 = im.trim().parse().map_err(|_| err(format!("bad imaginary part {im:?}")))?;
                    Ok(c(re, im))
                })
                .collect::<Result<Vec<C64>>>()?;
            if amps.len() != 4 {
                return Err(err(format!("expected 4 amplitudes, found {}", amps.len())));
            }
            let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > 1e-6 {
                warnings.push(format!("line {}: norm {norm} renormalized", lineno + 1));
            }
            states.push(StateVector::normalized(amps).map_err(|e| err(e.to_string()))?);
        }
        Ok((Self::new(label, states)?, warnings))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.states {
            let fields: Vec<String> = s.amplitudes().iter().map(|a| format!("{},{}", a.re, a.im)).collect();
            out.push_str(&fields.join(" "));
            out.push('\n');
        }
        out
    }
}

/// What happens to the discarded qubit between encoder and decoder.
#[derive(Clone, Debug, PartialEq)]
pub enum TrashHandling {
    /// Trace it out and substitute a fresh single-qubit state.
    Refresh(StateVector),
    /// Hand both encoder outputs to the decoder untouched.
    PassThrough,
}

impl TrashHandling {
    pub fn refresh_zero() -> Self {
        TrashHandling::Refresh(StateVector::zero(1).expect("|0>"))
    }

    pub fn name(&self) -> &'static str {
        match self {
            TrashHandling::Refresh(_) => "refresh",
            TrashHandling::PassThrough => "pass-through",
        }
    }
}

/// Which qubit survives compression, and how the other one is handled.
#[derive(Clone, Debug, PartialEq)]
pub struct AutoencoderLayout {
    latent_qubit: u8,
    trash: TrashHandling,
}

impl AutoencoderLayout {
    pub fn new(latent_qubit: u8, trash: TrashHandling) -> Result<Self> {
        if latent_qubit != 1 && latent_qubit != 2 {
            return invalid(format!("latent qubit must be 1 or 2, got {latent_qubit}"));
        }
        if let TrashHandling::Refresh(r) = &trash {
            if r.n_qubits() != 1 {
                return invalid("refresh state must be a single qubit");
            }
        }
        Ok(Self { latent_qubit, trash })
    }

    pub fn refresh_zero(latent_qubit: u8) -> Result<Self> {
        Self::new(latent_qubit, TrashHandling::refresh_zero())
    }

    /// Latent qubit 2, trash qubit 1 refreshed with `|0>`; the layout the published circuits use.
    pub fn table1() -> Self {
        Self::refresh_zero(2).expect("valid layout")
    }

    pub fn latent_qubit(&self) -> u8 {
        self.latent_qubit
    }

    pub fn trash_qubit(&self) -> u8 {
        3 - self.latent_qubit
    }

    pub fn trash(&self) -> &TrashHandling {
        &self.trash
    }
}

impl Default for AutoencoderLayout {
    fn default() -> Self {
        Self::table1()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AutoencoderSpec {
    encoder: Unitary,
    decoder: Unitary,
    layout: AutoencoderLayout,
}

impl AutoencoderSpec {
    pub fn new(encoder: Unitary, decoder: Unitary, layout: AutoencoderLayout) -> Result<Self> {
        for (name, u) in [("encoder", &encoder), ("decoder", &decoder)] {
            if u.n_qubits() != 2 {
                return invalid(format!("{name} must act on 2 qubits"));
            }
            if u.unitarity_error() > UNITARITY_TOL {
                return invalid(format!("{name} is not unitary"));
            }
        }
        Ok(Self { encoder, decoder, layout })
    }

    pub fn identity(layout: AutoencoderLayout) -> Self {
        Self { encoder: Unitary::identity(2), decoder: Unitary::identity(2), layout }
    }

    pub fn encoder(&self) -> &Unitary {
        &self.encoder
    }

    pub fn decoder(&self) -> &Unitary {
        &self.decoder
    }

    pub fn layout(&self) -> &AutoencoderLayout {
        &self.layout
    }
}

/// Reduced states of the latent and trash qubits right after the encoder.
#[derive(Clone, Debug)]
pub struct Encoded {
    pub latent: DensityMatrix,
    pub trash: DensityMatrix,
}

pub fn encode_only(spec: &AutoencoderSpec, psi: &StateVector) -> Result<Encoded> {
    if psi.n_qubits() != 2 {
        return invalid("autoencoder input must be a 2-qubit state");
    }
    let rho = psi.apply_unitary(&spec.encoder)?.to_density();
    let latent_pos = spec.layout.latent_qubit as usize - 1;
    Ok(Encoded { latent: rho.partial_trace(&[latent_pos])?, trash: rho.partial_trace(&[1 - latent_pos])? })
}

fn reconstruct(spec: &AutoencoderSpec, psi: &StateVector) -> Result<DensityMatrix> {
    let encoded = psi.apply_unitary(&spec.encoder)?;
    let middle = match &spec.layout.trash {
        TrashHandling::PassThrough => encoded.to_density(),
        TrashHandling::Refresh(fresh) => {
            let latent_pos = spec.layout.latent_qubit as usize - 1;
            let latent = encoded.to_density().partial_trace(&[latent_pos])?;
            let fresh = fresh.to_density();
            if latent_pos == 0 {
                latent.tensor(&fresh)?
            } else {
                fresh.tensor(&latent)?
            }
        }
    };
    middle.apply_unitary(&spec.decoder)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FidelityScores {
    pub per_state: Vec<f64>,
    pub average: f64,
}

/// Scores every family member after the full encode, discard, refresh, decode cycle.
pub fn autoencode_fidelity(spec: &AutoencoderSpec, family: &StateFamily) -> Result<FidelityScores> {
    let per_state = family
        .states
        .iter()
        .map(|psi| reconstruct(spec, psi)?.fidelity_with_pure(psi))
        .collect::<Result<Vec<f64>>>()?;
    let average = per_state.iter().sum::<f64>() / per_state.len() as f64;
    Ok(FidelityScores { per_state, average })
}

/// Two-qubit state recovered after `U_add`, a latent operation on qubit 3, and `U_add^dagger`.
#[derive(Clone, Debug)]
pub struct Roundtrip {
    pub retrieved: DensityMatrix,
}

impl Roundtrip {
    pub fn fidelity(&self, target: &StateVector) -> Result<f64> {
        self.retrieved.fidelity_with_pure(target)
    }
}

/// Runs the adder-based autoencoder on an arbitrary two-qubit input (ancilla `|0>` appended).
pub fn adder_roundtrip_state(u_add: &Unitary, input: &StateVector, latent_op: &Unitary) -> Result<Roundtrip> {
    if u_add.n_qubits() != 3 || input.n_qubits() != 2 || latent_op.n_qubits() != 1 {
        return invalid("adder round trip needs an 8x8 adder, a 2-qubit input and a 1-qubit operation");
    }
    let out = input
        .tensor(&StateVector::zero(1)?)?
        .apply_unitary(u_add)?
        .apply_gate(latent_op, &[2])?
        .apply_unitary(&u_add.dagger())?;
    Ok(Roundtrip { retrieved: out.to_density().partial_trace(&[0, 1])? })
}

pub fn adder_autoencoder_roundtrip(
    u_add: &Unitary,
    psi1: &StateVector,
    psi2: &StateVector,
    latent_op: &Unitary,
) -> Result<Roundtrip> {
    if psi1.n_qubits() != 1 || psi2.n_qubits() != 1 {
        return invalid("adder inputs must be single-qubit states");
    }
    adder_roundtrip_state(u_add, &psi1.tensor(psi2)?, latent_op)
}

/// Largest pairwise trace distance between the memory-register (qubits 1-2) states the adder
/// leaves behind for the family members.
pub fn memory_consistency(u_add: &Unitary, family: &StateFamily) -> Result<f64> {
    if u_add.n_qubits() != 3 {
        return invalid("memory consistency needs an 8x8 adder");
    }
    let memories = family
        .states
        .iter()
        .map(|psi| psi.tensor(&StateVector::zero(1)?)?.apply_unitary(u_add)?.to_density().partial_trace(&[0, 1]))
        .collect::<Result<Vec<_>>>()?;
    let mut worst = 0.0f64;
    for i in 0..memories.len() {
        for j in i + 1..memories.len() {
            worst = worst.max(memories[i].trace_distance(&memories[j])?);
        }
    }
    Ok(worst)
}

/// `cos(pi/3)|00> + sin(pi/3)|01>`, `|01>`, `cos(pi/8)|10> - i sin(pi/8)|11>`.
pub fn paper_three_states() -> StateFamily {
    let z = c(0.0, 0.0);
    let s1 = vec![c((PI / 3.0).cos(), 0.0), c((PI / 3.0).sin(), 0.0), z, z];
    let s3 = vec![z, z, c((PI / 8.0).cos(), 0.0), c(0.0, -(PI / 8.0).sin())];
    let states = vec![
        StateVector::normalized(s1).expect("unit vector"),
        StateVector::basis(2, 1).expect("|01>"),
        StateVector::normalized(s3).expect("unit vector"),
    ];
    StateFamily::new("three-state", states).expect("non-empty")
}

/// The first `k` computational basis states `|00>, |01>, |10>, |11>`.
pub fn orthogonal_benchmark(k: usize) -> Result<StateFamily> {
    if !(2..=4).contains(&k) {
        return invalid(format!("orthogonal benchmark supports k in 2..=4, got {k}"));
    }
    let states = (0..k).map(|i| StateVector::basis(2, i)).collect::<Result<Vec<_>>>()?;
    StateFamily::new(format!("orthogonal-{k}"), states)
}

fn table1_rows(rows: &[(u8, f64, u8)]) -> Genome {
    let genes = rows
        .iter()
        .map(|&(id, phase, q)| {
            let kind = GateKind::from_id(id).expect("table gate id");
            if kind == GateKind::Ms { Gene::ms(phase) } else { Gene::rotation(kind, phase, q) }.expect("table row")
        })
        .collect();
    Genome::new(2, genes).expect("two-qubit genome")
}

/// Published encoder genome, phases as printed (three decimals). Qubit 0 marks MS rows.
pub fn table1_encoder_genome() -> Genome {
    table1_rows(&[
        (1, 1.575, 1),
        (3, 2.176, 1),
        (1, 0.246, 2),
        (1, 0.493, 2),
        (3, 4.099, 1),
        (4, 5.214, 0),
        (3, 2.719, 2),
        (4, 5.594, 0),
    ])
}

/// Published decoder genome.
pub fn table1_decoder_genome() -> Genome {
    table1_rows(&[
        (1, 2.672, 2),
        (4, 5.569, 0),
        (2, 1.976, 1),
        (3, 3.783, 2),
        (2, 0.963, 2),
        (2, 2.823, 1),
        (2, 2.930, 1),
        (1, 1.315, 2),
    ])
}

/// Decodes the published genome pair under an explicit convention and layout.
pub fn table1_spec_with(convention: &DecodeConvention, layout: AutoencoderLayout) -> Result<AutoencoderSpec> {
    AutoencoderSpec::new(
        table1_encoder_genome().decode(convention)?,
        table1_decoder_genome().decode(convention)?,
        layout,
    )
}

/// The published autoencoder under the resolved conventions
/// ([`DecodeConvention::TABLE1`], [`AutoencoderLayout::table1`]).
pub fn table1_spec() -> AutoencoderSpec {
    table1_spec_with(&DecodeConvention::TABLE1, AutoencoderLayout::table1()).expect("decodes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adders::basis_adder;
    use crate::qsim::{max_abs_diff, Observable};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn close(a: &DensityMatrix, b: &DensityMatrix) -> bool {
        max_abs_diff(a.matrix(), b.matrix()) < 1e-12
    }

    #[test]
    fn identity_encoder_marginals() {
        let spec = AutoencoderSpec::identity(AutoencoderLayout::refresh_zero(1).unwrap());
        let enc = encode_only(&spec, &StateVector::basis(2, 0b10).unwrap()).unwrap();
        assert!(close(&enc.latent, &StateVector::basis(1, 1).unwrap().to_density()));
        assert!(close(&enc.trash, &StateVector::zero(1).unwrap().to_density()));
        let bell = StateVector::from_real(&[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).unwrap();
        let enc = encode_only(&spec, &bell).unwrap();
        assert!(close(&enc.latent, &DensityMatrix::maximally_mixed(1)));
        assert!(close(&enc.trash, &DensityMatrix::maximally_mixed(1)));
    }

    #[test]
    fn identity_spec_fidelities() {
        let spec = AutoencoderSpec::identity(AutoencoderLayout::refresh_zero(1).unwrap());
        let fam =
            StateFamily::new("pair", vec![StateVector::basis(2, 0b00).unwrap(), StateVector::basis(2, 0b10).unwrap()])
                .unwrap();
        assert!((autoencode_fidelity(&spec, &fam).unwrap().average - 1.0).abs() < 1e-12);
        let four = orthogonal_benchmark(4).unwrap();
        let scores = autoencode_fidelity(&spec, &four).unwrap();
        assert!((scores.average - 0.5).abs() < 1e-12);
        assert_eq!(scores.per_state.len(), 4);
    }

    #[test]
    fn three_states_fixture() {
        let fam = paper_three_states();
        assert_eq!(fam.len(), 3);
        assert_eq!(fam.states()[1], StateVector::basis(2, 1).unwrap());
        assert!((fam.states()[0].amplitude(0).re - 0.5).abs() < 1e-15);
        assert!(fam.states().iter().all(|s| (s.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn table1_rows_as_printed() {
        let enc = table1_encoder_genome();
        assert_eq!(enc.rows()[5].kind(), GateKind::Ms);
        assert!((enc.rows()[5].phase() - 5.214).abs() < 1e-12);
        let dec = table1_decoder_genome();
        assert_eq!(dec.rows()[0].kind(), GateKind::Rx);
        assert!((dec.rows()[0].phase() - 2.672).abs() < 1e-12);
        assert_eq!(dec.rows()[0].target(), crate::genome::Target::Qubit(2));
        let spec = table1_spec();
        assert!(spec.encoder().unitarity_error() < 1e-10);
        assert!(spec.decoder().unitarity_error() < 1e-10);
    }

    #[test]
    fn table1_reaches_reported_fidelity() {
        let scores = autoencode_fidelity(&table1_spec(), &paper_three_states()).unwrap();
        assert!((scores.average - 0.8751).abs() <= 0.01, "{scores:?}");
    }

    #[test]
    fn orthogonal_benchmark_sizes() {
        assert_eq!(orthogonal_benchmark(2).unwrap().states()[1], StateVector::basis(2, 1).unwrap());
        assert_eq!(orthogonal_benchmark(4).unwrap().len(), 4);
        assert!(orthogonal_benchmark(1).is_err());
        assert!(orthogonal_benchmark(5).is_err());
        let fam = orthogonal_benchmark(4).unwrap();
        for (i, a) in fam.states().iter().enumerate() {
            for b in &fam.states()[i + 1..] {
                assert!(a.inner(b).unwrap().norm() < 1e-15);
            }
        }
    }

    #[test]
    fn roundtrip_identity_returns_input() {
        let psi1 = crate::qsim::single_qubit_state(0.3).unwrap();
        let psi2 = crate::qsim::single_qubit_state(1.1).unwrap();
        let rt = adder_autoencoder_roundtrip(&basis_adder(), &psi1, &psi2, &Unitary::identity(1)).unwrap();
        assert!((rt.fidelity(&psi1.tensor(&psi2).unwrap()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn roundtrip_sigma_z_on_zero_branch() {
        let z = Unitary::new(Observable::sigma_z().matrix().clone()).unwrap();
        let k0 = StateVector::zero(1).unwrap();
        let rt = adder_autoencoder_roundtrip(&basis_adder(), &k0, &k0, &z).unwrap();
        assert!((rt.fidelity(&StateVector::zero(2).unwrap()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn memory_consistency_cases() {
        let u = basis_adder();
        let fam = |idx: &[usize]| {
            StateFamily::new("f", idx.iter().map(|&i| StateVector::basis(2, i).unwrap()).collect()).unwrap()
        };
        assert!(memory_consistency(&u, &fam(&[0b00, 0b11])).unwrap() < 1e-12);
        assert_eq!(memory_consistency(&u, &fam(&[0b01])).unwrap(), 0.0);
        assert!((memory_consistency(&u, &fam(&[0b00, 0b01])).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn family_file_round_trip_and_warnings() {
        let text = "1,0 0,0 0,0 0,0\n0,0 2,0 0,0 0,0 # unnormalized\n";
        let (fam, warnings) = StateFamily::parse("file", text).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(warnings.len(), 1);
        assert_eq!(fam.states()[1], StateVector::basis(2, 1).unwrap());
        let (again, w2) = StateFamily::parse("file", &fam.to_text()).unwrap();
        assert_eq!(again, fam);
        assert!(w2.is_empty());
        assert!(StateFamily::parse("bad", "1,0 0,0 0,0\n").is_err());
        assert!(StateFamily::parse("bad", "").is_err());
        assert!(StateFamily::parse("bad", "1;0 0,0 0,0 0,0\n").is_err());
    }

    #[test]
    fn layout_validation() {
        assert!(AutoencoderLayout::refresh_zero(0).is_err());
        assert!(AutoencoderLayout::new(1, TrashHandling::Refresh(StateVector::zero(2).unwrap())).is_err());
        assert_eq!(AutoencoderLayout::table1().trash_qubit(), 1);
    }
}
