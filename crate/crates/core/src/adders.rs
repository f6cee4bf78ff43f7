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

//! The basis quantum adder and its fidelity landscape.
//!
//! Register layout for every adder here: qubit 1 and qubit 2 carry the addends, qubit 3 is the
//! ancilla that starts in `|0>` and holds the approximate sum afterwards.

use std::f64::consts::FRAC_PI_2;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::qsim::{fidelity_pure_mixed, single_qubit_state, DensityMatrix, Observable, StateVector, Unitary, C64};

/// Below this norm the sum `|psi1> + |psi2>` is treated as cancelled.
pub const DEGENERATE_SUM_TOL: f64 = 1e-12;

/// Allowed disagreement between the simulated and closed-form sigma_z summand.
pub const SIGMA_Z_TOL: f64 = 1e-10;

/// The 8x8 adder exact on computational basis inputs:
///
/// ```text
/// |000> -> |000>   |010> -> |01+>   |100> -> |10+>   |110> -> |001>
/// |001> -> |110>   |011> -> |01->   |101> -> |10->   |111> -> |111>
/// ```
pub fn basis_adder() -> Unitary {
    let k = |i| StateVector::basis(1, i).expect("single-qubit basis");
    let ket = |a: &StateVector, b: &StateVector, c: &StateVector| {
        a.tensor(b).and_then(|ab| ab.tensor(c)).expect("three-qubit product")
    };
    let (k0, k1) = (k(0), k(1));
    let (p, m) = (StateVector::plus(), StateVector::minus());
    let columns = [
        ket(&k0, &k0, &k0), // 000
        ket(&k1, &k1, &k0), // 001
        ket(&k0, &k1, &p),  // 010
        ket(&k0, &k1, &m),  // 011
        ket(&k1, &k0, &p),  // 100
        ket(&k1, &k0, &m),  // 101
        ket(&k0, &k0, &k1), // 110
        ket(&k1, &k1, &k1), // 111
    ];
    Unitary::from_columns(&columns).expect("basis adder images are orthonormal")
}

fn check_adder_inputs(u: &Unitary, psi1: &StateVector, psi2: &StateVector) -> Result<()> {
    if u.n_qubits() != 3 {
        return invalid(format!("adder must act on 3 qubits, got {}", u.n_qubits()));
    }
    if psi1.n_qubits() != 1 || psi2.n_qubits() != 1 {
        return invalid("adder inputs must be single-qubit states");
    }
    Ok(())
}

/// Runs `U |psi1 psi2 0>` and traces out qubits 1 and 2.
pub fn adder_output(u: &Unitary, psi1: &StateVector, psi2: &StateVector) -> Result<DensityMatrix> {
    check_adder_inputs(u, psi1, psi2)?;
    let input = psi1.tensor(psi2)?.tensor(&StateVector::zero(1)?)?;
    input.apply_unitary(u)?.to_density().partial_trace(&[2])
}

/// Normalized `|psi1> + |psi2>`.
pub fn ideal_sum(psi1: &StateVector, psi2: &StateVector) -> Result<StateVector> {
    if psi1.dim() != psi2.dim() {
        return invalid("ideal sum of states with different dimensions");
    }
    let raw: Vec<C64> = psi1.amplitudes().iter().zip(psi2.amplitudes()).map(|(a, b)| a + b).collect();
    let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm < DEGENERATE_SUM_TOL {
        return Err(Error::DegenerateSum(norm));
    }
    StateVector::normalized(raw)
}

/// Fidelity of the adder output with the ideal sum for inputs `cos t|0> + sin t|1>`.
pub fn adder_fidelity(u: &Unitary, theta1: f64, theta2: f64) -> Result<f64> {
    let psi1 = single_qubit_state(theta1)?;
    let psi2 = single_qubit_state(theta2)?;
    let ideal = ideal_sum(&psi1, &psi2)?;
    fidelity_pure_mixed(&ideal, &adder_output(u, &psi1, &psi2)?)
}

/// Square `[theta_min, theta_max]^2` sampled on a uniform grid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdderRegion {
    theta_min: f64,
    theta_max: f64,
    grid_points_per_axis: usize,
}

impl AdderRegion {
    pub fn new(theta_min: f64, theta_max: f64, grid_points_per_axis: usize) -> Result<Self> {
        if !(theta_min.is_finite() && theta_max.is_finite() && theta_min < theta_max) {
            return invalid(format!("empty angle interval [{theta_min}, {theta_max}]"));
        }
        if grid_points_per_axis < 2 {
            return invalid(format!("need at least 2 grid points per axis, got {grid_points_per_axis}"));
        }
        Ok(Self { theta_min, theta_max, grid_points_per_axis })
    }

    /// `[0, pi/2]` with the given resolution.
    pub fn quarter_turn(grid_points_per_axis: usize) -> Result<Self> {
        Self::new(0.0, FRAC_PI_2, grid_points_per_axis)
    }

    pub fn theta_min(&self) -> f64 {
        self.theta_min
    }

    pub fn theta_max(&self) -> f64 {
        self.theta_max
    }

    pub fn grid_points_per_axis(&self) -> usize {
        self.grid_points_per_axis
    }

    pub fn axis(&self) -> Vec<f64> {
        let n = self.grid_points_per_axis;
        let step = (self.theta_max - self.theta_min) / (n - 1) as f64;
        (0..n).map(|i| if i == n - 1 { self.theta_max } else { self.theta_min + step * i as f64 }).collect()
    }

    /// All grid nodes, row-major with `theta1` varying slowest.
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        let axis = self.axis();
        axis.iter().flat_map(|&a| axis.iter().map(move |&b| (a, b))).collect()
    }

    pub fn contains(&self, theta1: f64, theta2: f64) -> bool {
        let r = self.theta_min..=self.theta_max;
        r.contains(&theta1) && r.contains(&theta2)
    }
}

impl Default for AdderRegion {
    fn default() -> Self {
        Self::quarter_turn(201).expect("valid default region")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FidelityReport {
    pub average: f64,
    pub minimum: f64,
    pub argmin: (f64, f64),
    pub grid_points_per_axis: usize,
}

/// Fidelity evaluated at every node of an [`AdderRegion`].
#[derive(Clone, Debug)]
pub struct FidelitySweep {
    pub region: AdderRegion,
    /// Row-major, `theta1` outer.
    pub values: Vec<f64>,
}

impl FidelitySweep {
    pub fn run(u: &Unitary, region: &AdderRegion) -> Result<Self> {
        let values = region.nodes().par_iter().map(|&(a, b)| adder_fidelity(u, a, b)).collect::<Result<Vec<_>>>()?;
        Ok(Self { region: *region, values })
    }

    /// Trapezoidal average, grid minimum and its first (row-major) location.
    pub fn report(&self) -> FidelityReport {
        let n = self.region.grid_points_per_axis;
        let w = |i: usize| if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        let norm = ((n - 1) * (n - 1)) as f64;
        let mut total = 0.0;
        let mut best = (f64::INFINITY, 0);
        for (idx, &f) in self.values.iter().enumerate() {
            total += w(idx / n) * w(idx % n) * f;
            if f < best.0 {
                best = (f, idx);
            }
        }
        let axis = self.region.axis();
        FidelityReport {
            average: total / norm,
            minimum: best.0,
            argmin: (axis[best.1 / n], axis[best.1 % n]),
            grid_points_per_axis: n,
        }
    }

    /// Writes `theta1,theta2,fidelity` rows with 12 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "theta1,theta2,fidelity")?;
        for (&(a, b), &f) in self.region.nodes().iter().zip(&self.values) {
            writeln!(w, "{},{},{}", sig12(a), sig12(b), sig12(f))?;
        }
        Ok(())
    }
}

pub fn region_fidelity_stats(u: &Unitary, region: &AdderRegion) -> Result<FidelityReport> {
    Ok(FidelitySweep::run(u, region)?.report())
}

/// Shortest decimal with 12 significant digits, trailing zeros removed (like C's `%.12g`).
pub fn sig12(x: f64) -> String {
    format_significant(x, 12)
}

pub(crate) fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        return format!("{m}e{exp}");
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `cos^2 t1 cos^2 t2 - sin^2 t1 sin^2 t2`
pub fn sigma_z_closed_form(theta1: f64, theta2: f64) -> f64 {
    let (s1, c1) = theta1.sin_cos();
    let (s2, c2) = theta2.sin_cos();
    c1 * c1 * c2 * c2 - s1 * s1 * s2 * s2
}

/// Simulated `<sigma_z>` of the basis-adder output, checked against
/// [`sigma_z_closed_form`] within [`SIGMA_Z_TOL`].
pub fn sigma_z_summand(theta1: f64, theta2: f64) -> Result<f64> {
    let psi1 = single_qubit_state(theta1)?;
    let psi2 = single_qubit_state(theta2)?;
    let rho_s = adder_output(&basis_adder(), &psi1, &psi2)?;
    let simulated = Observable::sigma_z().expectation(&rho_s)?;
    let expected = sigma_z_closed_form(theta1, theta2);
    if (simulated - expected).abs() > SIGMA_Z_TOL {
        return Err(Error::ToleranceViolation(format!(
            "<sigma_z> at ({theta1}, {theta2}): simulated {simulated}, closed form {expected}"
        )));
    }
    Ok(simulated)
}

/// `|00><00| - |11><11|` on two qubits; its expectation in `rho1 (x) rho2` equals the summand.
pub fn product_parity_observable() -> Observable {
    Observable::diagonal(&[1.0, 0.0, 0.0, -1.0]).expect("diagonal real matrix")
}

/// Outcome of the CPHASE-through-the-adder protocol.
#[derive(Clone, Debug)]
pub struct CphaseOutcome {
    /// Qubits 1-2 after the round trip, taken from the branch where qubit 3 is back in `|0>`.
    pub state: StateVector,
    /// Fidelity of the reduced two-qubit state with `alpha|00> - beta|11>`.
    pub fidelity: f64,
}

/// Encodes `alpha|00> + beta|11>` with the basis adder, applies `sigma_z` on the sum qubit and
/// decodes with the adjoint: a CPHASE implemented by a single-qubit gate.
pub fn cphase_via_adder(alpha: C64, beta: C64) -> Result<CphaseOutcome> {
    let norm = alpha.norm_sqr() + beta.norm_sqr();
    if !((norm - 1.0).abs() <= 1e-10) {
        return invalid(format!("|alpha|^2 + |beta|^2 = {norm}, expected 1"));
    }
    let zero = C64::default();
    let mut amps = vec![zero; 8];
    amps[0b000] = alpha;
    amps[0b110] = beta;
    let input = StateVector::normalized(amps)?;
    let u = basis_adder();
    let z = Unitary::new(Observable::sigma_z().matrix().clone())?;
    let out = input.apply_unitary(&u)?.apply_gate(&z, &[2])?.apply_unitary(&u.dagger())?;

    let ideal = StateVector::normalized(vec![alpha, zero, zero, -beta])?;
    let reduced = out.to_density().partial_trace(&[0, 1])?;
    let fidelity = reduced.fidelity_with_pure(&ideal)?;
    let branch: Vec<C64> = out.amplitudes().iter().step_by(2).copied().collect();
    let state = StateVector::normalized(branch)?;
    Ok(CphaseOutcome { state, fidelity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::{c, CMatrix};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn max_diff(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
        crate::qsim::max_abs_diff(a.matrix(), b.matrix())
    }

    #[test]
    fn basis_adder_columns() {
        let u = basis_adder();
        assert!((u.entry(0, 0) - c(1.0, 0.0)).norm() < 1e-15);
        // |001> -> |110>
        assert!((u.entry(0b110, 0b001) - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn basis_adder_gram_matrix_is_identity() {
        let u = basis_adder();
        let gram = CMatrix::from_fn(8, 8, |i, j| (0..8).map(|r| u.entry(r, i).conj() * u.entry(r, j)).sum::<C64>());
        assert!(crate::qsim::max_abs_diff(&gram, &CMatrix::identity(8, 8)) < 1e-12);
    }

    #[test]
    fn adder_output_edge_inputs() {
        let u = basis_adder();
        let plus = StateVector::plus().to_density();
        let s = |t| single_qubit_state(t).unwrap();
        let out = adder_output(&u, &s(0.0), &s(0.0)).unwrap();
        assert!(max_diff(&out, &StateVector::zero(1).unwrap().to_density()) < 1e-12);
        let out = adder_output(&u, &s(0.0), &s(FRAC_PI_2)).unwrap();
        assert!(max_diff(&out, &plus) < 1e-12);
        let out = adder_output(&u, &s(FRAC_PI_4), &s(FRAC_PI_4)).unwrap();
        assert!(max_diff(&out, &plus) < 1e-12);
        assert!(adder_output(&Unitary::identity(2), &s(0.0), &s(0.0)).is_err());
    }

    #[test]
    fn ideal_sum_cases() {
        let k0 = StateVector::zero(1).unwrap();
        let k1 = StateVector::basis(1, 1).unwrap();
        assert_eq!(ideal_sum(&k0, &k0).unwrap(), k0);
        let p = ideal_sum(&k0, &k1).unwrap();
        assert!((p.amplitude(1) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        let neg = k0.with_global_phase(std::f64::consts::PI);
        assert!(matches!(ideal_sum(&k0, &neg), Err(Error::DegenerateSum(_))));
    }

    #[test]
    fn exact_fidelity_nodes() {
        let u = basis_adder();
        for (a, b) in [(0.0, 0.0), (0.0, FRAC_PI_2), (FRAC_PI_2, FRAC_PI_2), (FRAC_PI_4, FRAC_PI_4)] {
            assert!((adder_fidelity(&u, a, b).unwrap() - 1.0).abs() < 1e-12, "({a}, {b})");
        }
    }

    #[test]
    fn two_point_grid_averages_exact_corners() {
        let r = region_fidelity_stats(&basis_adder(), &AdderRegion::quarter_turn(2).unwrap()).unwrap();
        assert!((r.average - 1.0).abs() < 1e-12);
        assert!((r.minimum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn region_validation() {
        assert!(AdderRegion::new(1.0, 1.0, 10).is_err());
        assert!(AdderRegion::new(0.0, 1.0, 1).is_err());
        let r = AdderRegion::default();
        assert_eq!(r.axis().len(), 201);
        assert_eq!(*r.axis().last().unwrap(), FRAC_PI_2);
    }

    #[test]
    fn sigma_z_reference_points() {
        assert!((sigma_z_summand(0.0, 0.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((sigma_z_summand(FRAC_PI_2, FRAC_PI_2).unwrap() + 1.0).abs() < 1e-12);
        assert!(sigma_z_summand(FRAC_PI_4, FRAC_PI_4).unwrap().abs() < 1e-12);
    }

    #[test]
    fn product_observable_matches_closed_form() {
        let obs = product_parity_observable();
        for &(a, b) in &[(0.1, 0.7), (1.2, 0.4), (0.9, 0.9)] {
            let rho = single_qubit_state(a).unwrap().tensor(&single_qubit_state(b).unwrap()).unwrap().to_density();
            assert!((obs.expectation(&rho).unwrap() - sigma_z_closed_form(a, b)).abs() < 1e-12);
        }
    }

    #[test]
    fn cphase_edge_cases() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let r = cphase_via_adder(one, zero).unwrap();
        assert!((r.fidelity - 1.0).abs() < 1e-12);
        assert!((r.state.amplitude(0) - one).norm() < 1e-12);
        let r = cphase_via_adder(zero, one).unwrap();
        assert!((r.fidelity - 1.0).abs() < 1e-12);
        assert!((r.state.amplitude(3) + one).norm() < 1e-12);
        let h = c(FRAC_1_SQRT_2, 0.0);
        let r = cphase_via_adder(h, h).unwrap();
        assert!((r.fidelity - 1.0).abs() < 1e-12);
        assert!((r.state.amplitude(0) - h).norm() < 1e-12);
        assert!((r.state.amplitude(3) + h).norm() < 1e-12);
        assert!(cphase_via_adder(one, one).is_err());
    }

    #[test]
    fn csv_format() {
        let sweep = FidelitySweep::run(&basis_adder(), &AdderRegion::quarter_turn(2).unwrap()).unwrap();
        let mut buf = Vec::new();
        sweep.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "theta1,theta2,fidelity");
        assert_eq!(lines[1], "0,0,1");
        assert_eq!(lines[2], "0,1.57079632679,1");
        assert_eq!(lines.len(), 5);
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(sig12(0.5), "0.5");
        assert_eq!(sig12(FRAC_PI_4), "0.785398163397");
        assert_eq!(sig12(1.0e-7), "1e-7");
        assert_eq!(sig12(-2.5), "-2.5");
        assert_eq!(sig12(0.95031359400164), "0.950313594002");
    }
}
