//! Declarative scenario files: JSON descriptions of dynamics plus preparation.
//!
//! Complex numbers are encoded as two-element arrays [re, im] and matrices as
//! row-major nested arrays. Single-qubit states may be given either by name
//! ("0", "1", "plus", "minus", "plus_i", "minus_i") or as an amplitude pair.

use serde::{Deserialize, Serialize};

use negchan::assignment::AssignmentMap;
use negchan::energy::HamiltonianSpec;
use negchan::matrix::CMatrix;
use negchan::qubit::{
    hadamard, ket0, ket1, ket_minus, ket_minus_i, ket_plus, ket_plus_i, standard_gate,
    DensityMatrix, StateVector, TomographyBasis,
};
use num_complex::Complex64;

use crate::error::{CliError, Result};

fn default_tolerance() -> f64 {
    1e-10
}

fn default_time() -> f64 {
    1.0
}

/// Top-level scenario: what evolves the composite and how it was prepared.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub dynamics: DynamicsConfig,
    pub assignment: AssignmentConfig,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
}

/// Composite dynamics: a named or literal gate, or a Hamiltonian with a time.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DynamicsConfig {
    Gate {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrix: Option<MatrixSpec>,
    },
    Hamiltonian {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrix: Option<MatrixSpec>,
        #[serde(default)]
        k: f64,
        #[serde(default)]
        kprime: f64,
        #[serde(default = "default_time")]
        t: f64,
    },
}

/// Preparation rule. `extra_state` doubles as the bath state for `fixed_bath`
/// and as the padding state for `extended`; it defaults to the ground state.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AssignmentConfig {
    FixedBath {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        extra_state: Option<StateSpec>,
    },
    Copy,
    Rotated {
        rotation: RotationSpec,
    },
    Extended {
        rotation: RotationSpec,
        m: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        extra_state: Option<StateSpec>,
    },
    MeasurementPrep {
        psi: Vec<[f64; 2]>,
    },
}

/// Row-major nested complex matrix, entries as [re, im].
pub type MatrixSpec = Vec<Vec<[f64; 2]>>;

/// A rotation given by gate name or literal matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RotationSpec {
    Named(String),
    Matrix(MatrixSpec),
}

/// A single-qubit state given by name or amplitude pair.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateSpec {
    Named(String),
    Amplitudes(Vec<[f64; 2]>),
}

/// Scenario after name resolution and validation.
pub struct ResolvedScenario {
    pub description: String,
    pub dynamics: ResolvedDynamics,
    pub map: AssignmentMap,
    pub analytic: Option<AnalyticForm>,
    pub tolerance: f64,
}

pub enum ResolvedDynamics {
    Gate { name: String, matrix: CMatrix },
    Hamiltonian { name: String, spec: HamiltonianSpec, t: f64 },
}

/// Which closed-form Choi matrix applies to the scenario's preparation, when
/// one does (copy, or the specific rotated/extended forms with a Hadamard
/// rotation and ground-state extras).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyticForm {
    Copy,
    Rotated,
    Extended,
}

pub fn parse_matrix(spec: &MatrixSpec) -> Result<CMatrix> {
    let dim = spec.len();
    for row in spec {
        if row.len() != dim {
            return Err(CliError::Config(format!(
                "matrix rows must all have length {dim}, found {}",
                row.len()
            )));
        }
    }
    let entries: Vec<Complex64> = spec
        .iter()
        .flatten()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(CliError::Config("matrix entries must be finite".to_string()));
    }
    Ok(CMatrix::new(dim, entries))
}

fn parse_state(spec: &StateSpec) -> Result<DensityMatrix> {
    match spec {
        StateSpec::Named(name) => {
            let ket = match name.as_str() {
                "0" => ket0(),
                "1" => ket1(),
                "plus" | "+" => ket_plus(),
                "minus" | "-" => ket_minus(),
                "plus_i" | "+i" => ket_plus_i(),
                "minus_i" | "-i" => ket_minus_i(),
                other => {
                    return Err(CliError::Config(format!("unknown state name `{other}`")))
                }
            };
            Ok(ket.density())
        }
        StateSpec::Amplitudes(amps) => {
            let amplitudes: Vec<Complex64> =
                amps.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
            let psi = StateVector::from_unnormalized(amplitudes)
                .map_err(|e| CliError::Config(format!("bad state amplitudes: {e}")))?;
            if psi.dim() != 2 {
                return Err(CliError::Config(format!(
                    "state must be a single qubit, got {} amplitudes",
                    psi.dim()
                )));
            }
            Ok(psi.density())
        }
    }
}

fn parse_rotation(spec: &RotationSpec) -> Result<CMatrix> {
    match spec {
        RotationSpec::Named(name) => standard_gate(name)
            .map_err(|e| CliError::Config(format!("bad rotation: {e}"))),
        RotationSpec::Matrix(m) => parse_matrix(m),
    }
}

fn rotation_description(spec: &RotationSpec) -> String {
    match spec {
        RotationSpec::Named(name) => name.clone(),
        RotationSpec::Matrix(_) => "custom".to_string(),
    }
}

fn is_hadamard(r: &CMatrix) -> bool {
    r.dim() == 2 && r.max_abs_diff(&hadamard()) <= 1e-12
}

fn is_ground(state: &DensityMatrix) -> bool {
    state.matrix().max_abs_diff(ket0().density().matrix()) <= 1e-12
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn resolve(&self) -> Result<ResolvedScenario> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(CliError::Config(format!(
                "tolerance must be a positive number, got {}",
                self.tolerance
            )));
        }
        let basis = TomographyBasis::canonical();
        let (map, assignment_label, analytic) = match &self.assignment {
            AssignmentConfig::FixedBath { extra_state } => {
                let bath = match extra_state {
                    Some(spec) => parse_state(spec)?,
                    None => ket0().density(),
                };
                (AssignmentMap::fixed_bath(basis, &bath), "fixed_bath".to_string(), None)
            }
            AssignmentConfig::Copy => {
                (AssignmentMap::copy(basis), "copy".to_string(), Some(AnalyticForm::Copy))
            }
            AssignmentConfig::Rotated { rotation } => {
                let r = parse_rotation(rotation)?;
                let map = AssignmentMap::rotated(basis, &r)?;
                let analytic = is_hadamard(&r).then_some(AnalyticForm::Rotated);
                let label = format!("rotated({})", rotation_description(rotation));
                (map, label, analytic)
            }
            AssignmentConfig::Extended { rotation, m, extra_state } => {
                let r = parse_rotation(rotation)?;
                let extra = match extra_state {
                    Some(spec) => parse_state(spec)?,
                    None => ket0().density(),
                };
                let map = AssignmentMap::extended(basis, &r, *m, &extra)?;
                let analytic =
                    (is_hadamard(&r) && is_ground(&extra)).then_some(AnalyticForm::Extended);
                let label = format!("extended({}, m={m})", rotation_description(rotation));
                (map, label, analytic)
            }
            AssignmentConfig::MeasurementPrep { psi } => {
                let amplitudes: Vec<Complex64> =
                    psi.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
                let psi = StateVector::new(amplitudes).map_err(|e| {
                    CliError::Config(format!("bad measurement-prep state: {e}"))
                })?;
                let map = AssignmentMap::measurement_prep(&psi, basis)?;
                (map, "measurement_prep".to_string(), None)
            }
        };

        let (dynamics, dynamics_label) = match &self.dynamics {
            DynamicsConfig::Gate { name, matrix } => {
                let (label, parsed) = match (name, matrix) {
                    (Some(n), None) => (n.clone(), standard_gate(n)?),
                    (None, Some(m)) => ("custom gate".to_string(), parse_matrix(m)?),
                    _ => {
                        return Err(CliError::Config(
                            "gate dynamics takes exactly one of `name` or `matrix`"
                                .to_string(),
                        ))
                    }
                };
                (ResolvedDynamics::Gate { name: label.clone(), matrix: parsed }, label)
            }
            DynamicsConfig::Hamiltonian { name, matrix, k, kprime, t } => {
                if !t.is_finite() {
                    return Err(CliError::Config(format!("time must be finite, got {t}")));
                }
                let (label, spec) = match (name.as_deref(), matrix) {
                    (Some("ising"), None) => {
                        (format!("ising(k={k})"), HamiltonianSpec::ising(*k))
                    }
                    (Some("ising_transverse"), None) => (
                        format!("ising_transverse(k={k}, kprime={kprime})"),
                        HamiltonianSpec::ising_transverse(*k, *kprime),
                    ),
                    (Some(other), None) => {
                        return Err(CliError::Config(format!(
                            "unknown hamiltonian `{other}` (expected ising or ising_transverse)"
                        )))
                    }
                    (None, Some(m)) => {
                        ("custom hamiltonian".to_string(), HamiltonianSpec::new(parse_matrix(m)?)?)
                    }
                    _ => {
                        return Err(CliError::Config(
                            "hamiltonian dynamics takes exactly one of `name` or `matrix`"
                                .to_string(),
                        ))
                    }
                };
                let label = format!("{label} at t={t}");
                (ResolvedDynamics::Hamiltonian { name: label.clone(), spec, t: *t }, label)
            }
        };

        let composite_dim = match &dynamics {
            ResolvedDynamics::Gate { matrix, .. } => matrix.dim(),
            ResolvedDynamics::Hamiltonian { spec, .. } => spec.matrix().dim(),
        };
        if composite_dim != map.dim() {
            return Err(CliError::Config(format!(
                "dynamics dimension {composite_dim} does not match the assignment's composite dimension {}",
                map.dim()
            )));
        }

        Ok(ResolvedScenario {
            description: format!("{dynamics_label} + {assignment_label} assignment"),
            dynamics,
            map,
            analytic,
            tolerance: self.tolerance,
        })
    }
}

impl ResolvedScenario {
    /// The composite unitary the scenario evolves under.
    pub fn unitary(&self) -> Result<CMatrix> {
        match &self.dynamics {
            ResolvedDynamics::Gate { matrix, .. } => Ok(matrix.clone()),
            ResolvedDynamics::Hamiltonian { spec, t, .. } => Ok(spec.propagator(*t)?),
        }
    }
}
