//! Canonical qubit objects: kets, density matrices, Pauli operators, named
//! gates, and the tomography basis that defines channels by linear extension.

use std::str::FromStr;


use crate::error::{Error, Result};
use crate::matrix::{C64, CMatrix};
use crate::DEFAULT_TOL;

/// Normalized pure state on one or more qubits.
#[derive(Debug, Clone)]
pub struct StateVector {
    amplitudes: Vec<C64>,
}

impl StateVector {
    /// Wraps an amplitude list; the length must be a power of two and the norm 1.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if !amplitudes.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(amplitudes.len()));
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector { amplitudes })
    }

    /// Normalizes the amplitude list first; rejects the zero vector.
    pub fn from_unnormalized(amplitudes: Vec<C64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm <= DEFAULT_TOL {
            return Err(Error::NotNormalized { norm });
        }
        StateVector::new(amplitudes.into_iter().map(|z| z / norm).collect())
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// Tensor product; `self` becomes the most significant factor.
    pub fn kron(&self, other: &StateVector) -> StateVector {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        StateVector { amplitudes }
    }

    /// The rank-1 projector |psi><psi|.
    pub fn density(&self) -> DensityMatrix {
        let d = self.dim();
        let m = CMatrix::from_fn(d, |i, j| self.amplitudes[i] * self.amplitudes[j].conj());
        DensityMatrix { matrix: m }
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace, and positivity before wrapping.
    pub fn new(m: CMatrix) -> Result<Self> {
        let dev = m.hermitian_deviation();
        if dev > DEFAULT_TOL {
            return Err(Error::NotDensity(format!("Hermiticity deviation {dev:.3e}")));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > DEFAULT_TOL || tr.im.abs() > DEFAULT_TOL {
            return Err(Error::NotDensity(format!("trace is {tr}, expected 1")));
        }
        let (psd, min_eig) = m.is_psd(DEFAULT_TOL)?;
        if !psd {
            return Err(Error::NotDensity(format!("smallest eigenvalue is {min_eig:.3e}")));
        }
        Ok(DensityMatrix { matrix: m })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Tensor product of two valid density matrices, valid by construction.
    pub fn kron(&self, other: &DensityMatrix) -> DensityMatrix {
        DensityMatrix { matrix: self.matrix.kron(&other.matrix) }
    }
}

fn normalized_pair(a: C64, b: C64) -> StateVector {
    StateVector::from_unnormalized(vec![a, b]).expect("nonzero two-amplitude ket")
}

pub fn ket0() -> StateVector {
    normalized_pair(C64::new(1.0, 0.0), C64::new(0.0, 0.0))
}

pub fn ket1() -> StateVector {
    normalized_pair(C64::new(0.0, 0.0), C64::new(1.0, 0.0))
}

pub fn ket_plus() -> StateVector {
    normalized_pair(C64::new(1.0, 0.0), C64::new(1.0, 0.0))
}

pub fn ket_minus() -> StateVector {
    normalized_pair(C64::new(1.0, 0.0), C64::new(-1.0, 0.0))
}

pub fn ket_plus_i() -> StateVector {
    normalized_pair(C64::new(1.0, 0.0), C64::new(0.0, 1.0))
}

pub fn ket_minus_i() -> StateVector {
    normalized_pair(C64::new(1.0, 0.0), C64::new(0.0, -1.0))
}

/// The Pauli matrix with the given index: 0 identity, 1 x, 2 y, 3 z.
pub fn pauli(index: usize) -> CMatrix {
    match index {
        0 => CMatrix::identity(2),
        1 => CMatrix::from_rows(&[&[(0.0, 0.0), (1.0, 0.0)], &[(1.0, 0.0), (0.0, 0.0)]]),
        2 => CMatrix::from_rows(&[&[(0.0, 0.0), (0.0, -1.0)], &[(0.0, 1.0), (0.0, 0.0)]]),
        3 => CMatrix::from_rows(&[&[(1.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (-1.0, 0.0)]]),
        _ => panic!("Pauli index must be 0..=3"),
    }
}

pub fn hadamard() -> CMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    CMatrix::from_rows(&[&[(h, 0.0), (h, 0.0)], &[(h, 0.0), (-h, 0.0)]])
}

/// Two-qubit gates named by their conventional circuit symbols. The controlled
/// gates take the most significant qubit as control.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Identity1,
    Identity2,
    Hadamard,
    Cx,
    Cz,
    RootSwap,
}

impl Gate {
    pub const ALL: [Gate; 6] =
        [Gate::Identity1, Gate::Identity2, Gate::Hadamard, Gate::Cx, Gate::Cz, Gate::RootSwap];

    pub fn name(self) -> &'static str {
        match self {
            Gate::Identity1 => "identity1",
            Gate::Identity2 => "identity2",
            Gate::Hadamard => "hadamard",
            Gate::Cx => "cx",
            Gate::Cz => "cz",
            Gate::RootSwap => "root_swap",
        }
    }

    pub fn matrix(self) -> CMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        match self {
            Gate::Identity1 => CMatrix::identity(2),
            Gate::Identity2 => CMatrix::identity(4),
            Gate::Hadamard => hadamard(),
            Gate::Cx => CMatrix::from_rows(&[
                &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
                &[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
                &[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)],
                &[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0), (0.0, 0.0)],
            ]),
            Gate::Cz => CMatrix::from_fn(4, |i, j| {
                if i != j {
                    C64::new(0.0, 0.0)
                } else if i == 3 {
                    C64::new(-1.0, 0.0)
                } else {
                    C64::new(1.0, 0.0)
                }
            }),
            Gate::RootSwap => CMatrix::from_rows(&[
                &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
                &[(0.0, 0.0), (h, 0.0), (0.0, h), (0.0, 0.0)],
                &[(0.0, 0.0), (0.0, h), (h, 0.0), (0.0, 0.0)],
                &[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)],
            ]),
        }
    }
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gate::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGate(s.to_string()))
    }
}

/// Looks up a gate matrix by name.
pub fn standard_gate(name: &str) -> Result<CMatrix> {
    Ok(name.parse::<Gate>()?.matrix())
}

/// The ordered quadruple (|0><0|, |+><+|, |+_i><+_i|, |1><1|). Any 2x2 matrix
/// has a unique expansion over it, which is what makes four state preparations
/// enough to pin down a qubit channel.
#[derive(Debug, Clone)]
pub struct TomographyBasis {
    states: [DensityMatrix; 4],
}

impl TomographyBasis {
    pub fn canonical() -> Self {
        TomographyBasis {
            states: [
                ket0().density(),
                ket_plus().density(),
                ket_plus_i().density(),
                ket1().density(),
            ],
        }
    }

    pub fn states(&self) -> &[DensityMatrix; 4] {
        &self.states
    }

    pub fn state(&self, index: usize) -> &DensityMatrix {
        &self.states[index]
    }

    /// Coefficients c with a = sum_i c_i tau_i, found by solving the 4x4 system
    /// over vectorized matrices.
    pub fn expand(&self, a: &CMatrix) -> Result<[C64; 4]> {
        if a.dim() != 2 {
            return Err(Error::Dimension { expected: 2, got: a.dim() });
        }
        let system = CMatrix::from_fn(4, |entry, which| {
            self.states[which].matrix().get(entry / 2, entry % 2)
        });
        let rhs = [a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1)];
        let c = system.solve(&rhs)?;
        Ok([c[0], c[1], c[2], c[3]])
    }

    /// Overlap matrix with entries Tr(tau_i tau_j).
    pub fn gram(&self) -> CMatrix {
        CMatrix::from_fn(4, |i, j| {
            (self.states[i].matrix() * self.states[j].matrix()).trace()
        })
    }
}

/// The maximally entangled two-qubit state (|00>+|01>+|10>-|11>)/2 whose
/// reduced state is completely mixed.
pub fn equilibrium_psi() -> StateVector {
    StateVector::new(vec![
        C64::new(0.5, 0.0),
        C64::new(0.5, 0.0),
        C64::new(0.5, 0.0),
        C64::new(-0.5, 0.0),
    ])
    .expect("amplitudes (1,1,1,-1)/2 are normalized")
}
