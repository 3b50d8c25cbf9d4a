//! Reduced dynamics of the system qubit and their Choi-matrix reconstruction.
//!
//! A channel is a composite unitary together with an assignment map. Applying it
//! means preparing the composite state with the sharp operation, evolving, and
//! tracing the bath out. The Choi matrix is assembled the way a tomography
//! experiment would: each computational unit matrix is expanded over the
//! tomography basis and pushed through the channel by linearity, so any
//! basis dependence of the preparation shows up in the result instead of being
//! normalized away.

use num_complex::Complex64;

use crate::assignment::AssignmentMap;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::DEFAULT_TOL;

/// Reduced dynamics: composite unitary plus preparation rule.
#[derive(Debug, Clone)]
pub struct Channel {
    u: CMatrix,
    map: AssignmentMap,
}

impl Channel {
    pub fn new(u: CMatrix, map: AssignmentMap) -> Result<Self> {
        if u.dim() != map.dim() {
            return Err(Error::Dimension { expected: map.dim(), got: u.dim() });
        }
        if !u.is_unitary(1e-12) {
            let gram = &u.adjoint() * &u;
            let deviation = gram.max_abs_diff(&CMatrix::identity(u.dim()));
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Channel { u, map })
    }

    pub fn unitary(&self) -> &CMatrix {
        &self.u
    }

    pub fn assignment(&self) -> &AssignmentMap {
        &self.map
    }

    /// Evaluates the channel on a 2x2 input: sharp, evolve, trace the bath out.
    pub fn apply(&self, rho: &CMatrix) -> Result<CMatrix> {
        let composite = self.map.sharp_apply(rho)?;
        let evolved = &(&self.u * &composite) * &self.u.adjoint();
        evolved.partial_trace_bath(self.map.dim_b())
    }

    /// Reconstructs the Choi matrix: block (i, j) is the channel image of the
    /// unit matrix E_ij. Each block is computed independently, so Hermiticity of
    /// the result is evidence, not an input assumption.
    pub fn choi(&self) -> Result<ChoiMatrix> {
        let mut m = CMatrix::zeros(4);
        for i in 0..2 {
            for j in 0..2 {
                let mut unit = CMatrix::zeros(2);
                unit.set(i, j, Complex64::new(1.0, 0.0));
                let block = self.apply(&unit)?;
                for k in 0..2 {
                    for l in 0..2 {
                        m.set(2 * i + k, 2 * j + l, block.get(k, l));
                    }
                }
            }
        }
        ChoiMatrix::new(m)
    }
}

/// 4x4 Hermitian matrix summarizing a single-qubit channel; its spectrum decides
/// complete positivity.
#[derive(Debug, Clone)]
pub struct ChoiMatrix {
    matrix: CMatrix,
    eigenvalues: Vec<f64>,
}

impl ChoiMatrix {
    /// Validates dimension, Hermiticity, and the trace of a trace-preserving
    /// qubit channel (2), then caches the spectrum.
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.dim() != 4 {
            return Err(Error::Dimension { expected: 4, got: m.dim() });
        }
        let deviation = m.hermitian_deviation();
        if deviation > DEFAULT_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = m.trace();
        if (trace.re - 2.0).abs() > DEFAULT_TOL {
            return Err(Error::NotDensity(format!(
                "Choi trace is {:.12}, expected 2",
                trace.re
            )));
        }
        let eigenvalues = m.hermitian_eigenvalues()?;
        Ok(ChoiMatrix { matrix: m, eigenvalues })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Ascending spectrum.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn trace_norm(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }

    /// Negativity (1 - trace / trace norm) / 2: zero exactly when the channel is
    /// completely positive, and below 1/2 always. Clamped at zero so rounding in
    /// the trace norm cannot produce a negative result.
    pub fn negativity(&self) -> f64 {
        let trace = self.matrix.trace().re;
        (0.5 * (1.0 - trace / self.trace_norm())).max(0.0)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Complete positivity verdict: smallest eigenvalue above -tol.
    pub fn is_cp(&self, tol: f64) -> bool {
        self.min_eigenvalue() >= -tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::{hadamard, ket0, ket_plus, Gate, TomographyBasis};
    use crate::random::{haar_unitary, random_density, random_hermitian};
    use approx::assert_abs_diff_eq;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn canonical() -> TomographyBasis {
        TomographyBasis::canonical()
    }

    fn rotated_hadamard() -> AssignmentMap {
        AssignmentMap::rotated(canonical(), &hadamard()).unwrap()
    }

    #[test]
    fn identity_unitary_with_fixed_bath_is_the_identity_channel() {
        let map = AssignmentMap::fixed_bath(canonical(), &ket_plus().density());
        let channel = Channel::new(CMatrix::identity(4), map).unwrap();
        let mut rng = StdRng::seed_from_u64(51);
        for _ in 0..20 {
            let rho = random_hermitian(2, &mut rng);
            let out = channel.apply(&rho).unwrap();
            assert!(out.max_abs_diff(&rho) <= 1e-12);
        }
        let choi = channel.choi().unwrap();
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!((choi.matrix().get(i, j) - Complex64::new(1.0, 0.0)).norm() <= 1e-13);
        }
        assert_abs_diff_eq!(choi.negativity(), 0.0, epsilon = 1e-12);
        assert!(choi.is_cp(1e-10));
    }

    #[test]
    fn cz_leaves_the_ground_state_alone() {
        let channel = Channel::new(Gate::Cz.matrix(), rotated_hadamard()).unwrap();
        let out = channel.apply(ket0().density().matrix()).unwrap();
        assert!(out.max_abs_diff(ket0().density().matrix()) <= 1e-13);
    }

    #[test]
    fn root_swap_ground_state_output_is_pinned() {
        let channel = Channel::new(Gate::RootSwap.matrix(), rotated_hadamard()).unwrap();
        let out = channel.apply(ket0().density().matrix()).unwrap();
        let q = 0.5 * std::f64::consts::FRAC_1_SQRT_2;
        let expected = CMatrix::from_rows(&[
            &[(0.75, 0.0), (0.0, -q)],
            &[(0.0, q), (0.25, 0.0)],
        ]);
        assert!(out.max_abs_diff(&expected) <= 1e-13);
    }

    #[test]
    fn choi_matrices_are_hermitian_with_trace_two() {
        let mut rng = StdRng::seed_from_u64(52);
        for _ in 0..20 {
            let u = haar_unitary(4, &mut rng);
            let bath = random_density(2, &mut rng);
            let map = AssignmentMap::fixed_bath(canonical(), &bath);
            let choi = Channel::new(u, map).unwrap().choi().unwrap();
            assert!(choi.matrix().hermitian_deviation() <= 1e-12);
            assert_abs_diff_eq!(choi.matrix().trace().re, 2.0, epsilon = 1e-12);
            assert!(choi.negativity() >= 0.0);
            assert!(choi.negativity() < 0.5);
        }
    }

    #[test]
    fn choi_blocks_agree_with_direct_channel_application() {
        let channel = Channel::new(Gate::RootSwap.matrix(), rotated_hadamard()).unwrap();
        let choi = channel.choi().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut unit = CMatrix::zeros(2);
                unit.set(i, j, Complex64::new(1.0, 0.0));
                let block = channel.apply(&unit).unwrap();
                for k in 0..2 {
                    for l in 0..2 {
                        let diff =
                            (choi.matrix().get(2 * i + k, 2 * j + l) - block.get(k, l)).norm();
                        assert!(diff <= 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn cz_negativity_is_one_sixth() {
        let choi = Channel::new(Gate::Cz.matrix(), rotated_hadamard())
            .unwrap()
            .choi()
            .unwrap();
        assert_abs_diff_eq!(choi.negativity(), 1.0 / 6.0, epsilon = 1e-12);
        assert!(!choi.is_cp(1e-10));
        let expected = [-0.5, 0.5, 0.5, 1.5];
        for (got, want) in choi.eigenvalues().iter().zip(&expected) {
            assert_abs_diff_eq!(got, want, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(choi.trace_norm(), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn root_swap_negativity_is_pinned() {
        let choi = Channel::new(Gate::RootSwap.matrix(), rotated_hadamard())
            .unwrap()
            .choi()
            .unwrap();
        let c8 = (std::f64::consts::FRAC_PI_8).cos();
        let expected = (2.0 * c8 - 1.0) / (2.0 + 4.0 * c8);
        assert_abs_diff_eq!(choi.negativity(), expected, epsilon = 1e-12);
        assert_abs_diff_eq!(choi.negativity(), 0.148_846_697_642_915_58, epsilon = 1e-12);
    }

    #[test]
    fn channel_constructor_rejects_bad_unitaries() {
        let map = rotated_hadamard();
        assert!(matches!(
            Channel::new(CMatrix::identity(2), map.clone()),
            Err(Error::Dimension { .. })
        ));
        let not_unitary = CMatrix::identity(4).scaled(Complex64::new(2.0, 0.0));
        assert!(matches!(
            Channel::new(not_unitary, map),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn choi_constructor_enforces_its_invariants() {
        assert!(ChoiMatrix::new(CMatrix::identity(2)).is_err());
        assert!(ChoiMatrix::new(CMatrix::identity(4)).is_err());
        let half = CMatrix::identity(4).scaled(Complex64::new(0.5, 0.0));
        assert!(ChoiMatrix::new(half).is_ok());
        let mut skew = CMatrix::identity(4).scaled(Complex64::new(0.5, 0.0));
        skew.set(0, 1, Complex64::new(0.3, 0.0));
        assert!(matches!(ChoiMatrix::new(skew), Err(Error::NotHermitian { .. })));
    }
}
