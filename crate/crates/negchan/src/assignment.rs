//! Assignment maps: rules that place a reduced qubit state into a composite
//! system-bath state.
//!
//! A map is fixed by its images on the four tomography-basis states and acts on
//! everything else by linear extension. Consistency (tracing the bath out of an
//! image returns the basis state it came from) is checked at construction; the
//! linear extension is free to leave the positive cone, which is exactly the
//! effect the sharp operation exists to expose.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::qubit::{DensityMatrix, StateVector, TomographyBasis};
use crate::DEFAULT_TOL;

/// A correlated preparation rule: four composite images of the tomography basis.
#[derive(Debug, Clone)]
pub struct AssignmentMap {
    basis: TomographyBasis,
    images: [DensityMatrix; 4],
    dim_b: usize,
}

impl AssignmentMap {
    /// Wraps explicit images after checking dimensions and consistency.
    pub fn from_images(basis: TomographyBasis, images: [DensityMatrix; 4]) -> Result<Self> {
        let dim = images[0].dim();
        if !dim.is_multiple_of(2) || dim < 4 {
            return Err(Error::Dimension { expected: 4, got: dim });
        }
        for image in &images {
            if image.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: image.dim() });
            }
        }
        let dim_b = dim / 2;
        for (index, image) in images.iter().enumerate() {
            let reduced = image.matrix().partial_trace_bath(dim_b)?;
            let deviation = reduced.max_abs_diff(basis.state(index).matrix());
            if deviation > DEFAULT_TOL {
                return Err(Error::InconsistentAssignment { index, deviation });
            }
        }
        Ok(AssignmentMap { basis, images, dim_b })
    }

    /// Uncorrelated preparation: every basis state is paired with the same bath state.
    pub fn fixed_bath(basis: TomographyBasis, tau_fixed: &DensityMatrix) -> Self {
        let images = basis.states().clone().map(|tau| tau.kron(tau_fixed));
        AssignmentMap { basis, images, dim_b: tau_fixed.dim() }
    }

    /// Perfectly correlated preparation: the bath qubit copies the basis state.
    pub fn copy(basis: TomographyBasis) -> Self {
        let images = basis.states().clone().map(|tau| tau.kron(&tau));
        AssignmentMap { basis, images, dim_b: 2 }
    }

    /// Correlated preparation with the bath copy rotated by a fixed unitary.
    pub fn rotated(basis: TomographyBasis, r: &CMatrix) -> Result<Self> {
        if r.dim() != 2 {
            return Err(Error::Dimension { expected: 2, got: r.dim() });
        }
        if !r.is_unitary(1e-12) {
            let gram = &r.adjoint() * r;
            let deviation = gram.max_abs_diff(&CMatrix::identity(2));
            return Err(Error::NotUnitary { deviation });
        }
        let images = basis.states().clone().map(|tau| {
            let bath = &(r * tau.matrix()) * &r.adjoint();
            let bath = DensityMatrix::new(bath)
                .expect("unitary conjugate of a density matrix is a density matrix");
            tau.kron(&bath)
        });
        Ok(AssignmentMap { basis, images, dim_b: 2 })
    }

    /// Rotated preparation padded with `m - 2` uncorrelated extra bath qubits,
    /// for a composite of `m` qubits in total.
    pub fn extended(
        basis: TomographyBasis,
        r: &CMatrix,
        m: usize,
        extra_state: &DensityMatrix,
    ) -> Result<Self> {
        if m < 2 {
            return Err(Error::ExtensionTooShort(m));
        }
        if extra_state.dim() != 2 {
            return Err(Error::Dimension { expected: 2, got: extra_state.dim() });
        }
        let rotated = AssignmentMap::rotated(basis, r)?;
        let images = rotated.images.map(|image| {
            let mut padded = image;
            for _ in 2..m {
                padded = padded.kron(extra_state);
            }
            padded
        });
        Ok(AssignmentMap { basis: rotated.basis, images, dim_b: 1 << (m - 1) })
    }

    /// Preparation by measuring the system qubit of a fixed two-qubit state:
    /// each image is the projected, renormalized post-measurement state.
    pub fn measurement_prep(psi: &StateVector, basis: TomographyBasis) -> Result<Self> {
        if psi.dim() != 4 {
            return Err(Error::Dimension { expected: 4, got: psi.dim() });
        }
        let rho = psi.density();
        let mut images = Vec::with_capacity(4);
        for (index, tau) in basis.states().iter().enumerate() {
            let projector = tau.matrix().kron(&CMatrix::identity(2));
            let sandwiched = &(&projector * rho.matrix()) * &projector;
            let probability = sandwiched.trace().re;
            if probability <= DEFAULT_TOL {
                return Err(Error::ZeroProbability { index });
            }
            let normalized = sandwiched.scaled(Complex64::new(1.0 / probability, 0.0));
            images.push(DensityMatrix::new(normalized)?);
        }
        let images: [DensityMatrix; 4] =
            images.try_into().expect("loop pushes exactly four images");
        AssignmentMap::from_images(basis, images)
    }

    pub fn basis(&self) -> &TomographyBasis {
        &self.basis
    }

    pub fn images(&self) -> &[DensityMatrix; 4] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &DensityMatrix {
        &self.images[index]
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    /// Composite dimension 2 * dim_b.
    pub fn dim(&self) -> usize {
        2 * self.dim_b
    }

    /// The sharp operation: expands `rho` over the tomography basis and maps the
    /// coefficients onto the images. The result reduces back to `rho` but need
    /// not be positive.
    pub fn sharp_apply(&self, rho: &CMatrix) -> Result<CMatrix> {
        let coefficients = self.basis.expand(rho)?;
        let mut composite = CMatrix::zeros(self.dim());
        for (c, image) in coefficients.iter().zip(&self.images) {
            composite = &composite + &image.matrix().scaled(*c);
        }
        Ok(composite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CMatrix;
    use crate::qubit::{equilibrium_psi, hadamard, ket0, ket1, ket_minus, ket_plus};
    use crate::random::random_hermitian;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn canonical() -> TomographyBasis {
        TomographyBasis::canonical()
    }

    #[test]
    fn fixed_bath_images_are_products_with_the_bath_state() {
        let tau_fixed = ket0().density();
        let map = AssignmentMap::fixed_bath(canonical(), &tau_fixed);
        let expected = ket0().density().kron(&tau_fixed);
        assert!(map.image(0).matrix().max_abs_diff(expected.matrix()) <= 1e-15);
        assert_eq!(map.dim_b(), 2);
    }

    #[test]
    fn copy_images_duplicate_the_basis_states() {
        let map = AssignmentMap::copy(canonical());
        let zero_zero = ket0().kron(&ket0()).density();
        assert!(map.image(0).matrix().max_abs_diff(zero_zero.matrix()) <= 1e-15);
        let plus_plus = ket_plus().kron(&ket_plus()).density();
        assert!(map.image(1).matrix().max_abs_diff(plus_plus.matrix()) <= 1e-15);
    }

    #[test]
    fn rotated_with_identity_reduces_to_copy() {
        let copy = AssignmentMap::copy(canonical());
        let rotated = AssignmentMap::rotated(canonical(), &CMatrix::identity(2)).unwrap();
        for i in 0..4 {
            assert!(copy.image(i).matrix().max_abs_diff(rotated.image(i).matrix()) <= 1e-15);
        }
    }

    #[test]
    fn rotated_hadamard_sends_ground_to_plus_on_the_bath() {
        let map = AssignmentMap::rotated(canonical(), &hadamard()).unwrap();
        let expected = ket0().density().kron(&ket_plus().density());
        assert!(map.image(0).matrix().max_abs_diff(expected.matrix()) <= 1e-14);
    }

    #[test]
    fn rotated_rejects_non_unitary_rotations() {
        let shear =
            CMatrix::from_rows(&[&[(1.0, 0.0), (1.0, 0.0)], &[(0.0, 0.0), (1.0, 0.0)]]);
        assert!(matches!(
            AssignmentMap::rotated(canonical(), &shear),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn extended_with_two_qubits_equals_rotated() {
        let rotated = AssignmentMap::rotated(canonical(), &hadamard()).unwrap();
        let extended =
            AssignmentMap::extended(canonical(), &hadamard(), 2, &ket0().density()).unwrap();
        for i in 0..4 {
            assert!(
                rotated.image(i).matrix().max_abs_diff(extended.image(i).matrix()) <= 1e-15
            );
        }
    }

    #[test]
    fn extended_pads_with_the_extra_state() {
        let extra = ket0().density();
        let map = AssignmentMap::extended(canonical(), &hadamard(), 3, &extra).unwrap();
        assert_eq!(map.dim_b(), 4);
        assert_eq!(map.image(0).dim(), 8);
        let rotated = AssignmentMap::rotated(canonical(), &hadamard()).unwrap();
        let expected = rotated.image(0).kron(&extra);
        assert!(map.image(0).matrix().max_abs_diff(expected.matrix()) <= 1e-15);
        assert!(matches!(
            AssignmentMap::extended(canonical(), &hadamard(), 1, &extra),
            Err(Error::ExtensionTooShort(1))
        ));
    }

    #[test]
    fn measurement_prep_recovers_three_rotated_images() {
        let map = AssignmentMap::measurement_prep(&equilibrium_psi(), canonical()).unwrap();
        let rotated = AssignmentMap::rotated(canonical(), &hadamard()).unwrap();
        for i in [0usize, 1, 3] {
            assert!(
                map.image(i).matrix().max_abs_diff(rotated.image(i).matrix()) <= 1e-12,
                "image {i} should match the rotated preparation"
            );
        }
        let discrepancy = map.image(2).matrix().max_abs_diff(rotated.image(2).matrix());
        assert!(discrepancy > 0.4, "image 2 differs because the bath state is conjugated");
        let conjugated_bath = {
            let tau3 = canonical().state(2).matrix().clone();
            let bath = (&(&hadamard() * &tau3) * &hadamard()).conjugate();
            tau3.kron(&bath)
        };
        assert!(map.image(2).matrix().max_abs_diff(&conjugated_bath) <= 1e-12);
    }

    #[test]
    fn measurement_prep_rejects_zero_probability_branches() {
        let zero_zero = ket0().kron(&ket0());
        assert!(matches!(
            AssignmentMap::measurement_prep(&zero_zero, canonical()),
            Err(Error::ZeroProbability { .. })
        ));
    }

    #[test]
    fn sharp_on_basis_states_returns_the_images() {
        let map = AssignmentMap::rotated(canonical(), &hadamard()).unwrap();
        for i in 0..4 {
            let composite = map.sharp_apply(map.basis().state(i).matrix()).unwrap();
            assert!(composite.max_abs_diff(map.image(i).matrix()) <= 1e-13);
        }
    }

    #[test]
    fn sharp_is_linear_and_consistent() {
        let mut rng = StdRng::seed_from_u64(41);
        let maps = [
            AssignmentMap::fixed_bath(canonical(), &ket_plus().density()),
            AssignmentMap::copy(canonical()),
            AssignmentMap::rotated(canonical(), &hadamard()).unwrap(),
            AssignmentMap::extended(canonical(), &hadamard(), 3, &ket0().density()).unwrap(),
            AssignmentMap::measurement_prep(&equilibrium_psi(), canonical()).unwrap(),
        ];
        for map in &maps {
            for _ in 0..20 {
                let rho1 = random_hermitian(2, &mut rng);
                let rho2 = random_hermitian(2, &mut rng);
                let a = rng.gen_range(-2.0..2.0);
                let b = rng.gen_range(-2.0..2.0);
                let combined = &rho1.scaled(Complex64::new(a, 0.0))
                    + &rho2.scaled(Complex64::new(b, 0.0));
                let lhs = map.sharp_apply(&combined).unwrap();
                let rhs = &map.sharp_apply(&rho1).unwrap().scaled(Complex64::new(a, 0.0))
                    + &map.sharp_apply(&rho2).unwrap().scaled(Complex64::new(b, 0.0));
                assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
                let reduced = lhs.partial_trace_bath(map.dim_b()).unwrap();
                assert!(reduced.max_abs_diff(&combined) <= 1e-10);
                assert!(lhs.hermitian_deviation() <= 1e-12);
            }
        }
    }

    #[test]
    fn sharp_leaves_the_positive_cone_on_the_minus_state() {
        let map = AssignmentMap::rotated(canonical(), &hadamard()).unwrap();
        let composite = map.sharp_apply(ket_minus().density().matrix()).unwrap();
        let eigenvalues = composite.hermitian_eigenvalues().unwrap();
        assert!((eigenvalues[0] + std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-10);
        assert!((eigenvalues[3] - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn fixed_bath_sharp_factorizes_on_the_mixed_state() {
        let tau_fixed = ket_plus().density();
        let map = AssignmentMap::fixed_bath(canonical(), &tau_fixed);
        let half_identity = CMatrix::identity(2).scaled(Complex64::new(0.5, 0.0));
        let composite = map.sharp_apply(&half_identity).unwrap();
        let expected = half_identity.kron(tau_fixed.matrix());
        assert!(composite.max_abs_diff(&expected) <= 1e-13);
    }

    #[test]
    fn from_images_rejects_inconsistent_images() {
        let basis = canonical();
        let bad = [
            ket1().density().kron(&ket0().density()),
            basis.state(1).kron(&ket0().density()),
            basis.state(2).kron(&ket0().density()),
            basis.state(3).kron(&ket0().density()),
        ];
        assert!(matches!(
            AssignmentMap::from_images(basis, bad),
            Err(Error::InconsistentAssignment { index: 0, .. })
        ));
    }
}
