//! Correlation diagnostics for two-qubit composite states: concurrence and the
//! zero-discord form test.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{C64, CMatrix};
use crate::qubit::{
    ket0, ket1, ket_minus, ket_minus_i, ket_plus, ket_plus_i, pauli, DensityMatrix,
    TomographyBasis,
};
use crate::DEFAULT_TOL;

/// Wootters concurrence of a two-qubit state: max(0, s1 - s2 - s3 - s4) over the
/// descending square roots of the spin-flip spectrum.
///
/// The spin-flipped factor rho~ = (sigma2 x sigma2) conj(rho) (sigma2 x sigma2)
/// makes rho rho~ non-Hermitian, so its spectrum is taken from the similar
/// Hermitian product sqrt(rho) rho~ sqrt(rho).
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::Dimension { expected: 4, got: rho.dim() });
    }
    let yy = pauli(2).kron(&pauli(2));
    let flipped = &(&yy * &rho.matrix().conjugate()) * &yy;
    let (eigenvalues, vectors) = rho.matrix().hermitian_eigen()?;
    let sqrt_diag = CMatrix::from_fn(4, |i, j| {
        if i == j {
            Complex64::new(eigenvalues[i].max(0.0).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let sqrt_rho = &(&vectors * &sqrt_diag) * &vectors.adjoint();
    let core = &(&sqrt_rho * &flipped) * &sqrt_rho;
    let spectrum = core.hermitian_eigenvalues()?;
    let roots: Vec<f64> = spectrum.iter().rev().map(|l| l.max(0.0).sqrt()).collect();
    Ok((roots[0] - roots[1] - roots[2] - roots[3]).max(0.0))
}

/// An orthogonal pair of rank-1 qubit projectors summing to the identity.
#[derive(Debug, Clone)]
pub struct ProjectorPair {
    projectors: [DensityMatrix; 2],
}

impl ProjectorPair {
    pub fn new(first: DensityMatrix, second: DensityMatrix) -> Result<Self> {
        for p in [&first, &second] {
            if p.dim() != 2 {
                return Err(Error::InvalidProjectors(format!(
                    "projector dimension {} is not 2",
                    p.dim()
                )));
            }
            let squared = p.matrix() * p.matrix();
            let deviation = squared.max_abs_diff(p.matrix());
            if deviation > DEFAULT_TOL {
                return Err(Error::InvalidProjectors(format!(
                    "not idempotent, deviation {deviation:.3e}"
                )));
            }
        }
        let sum = first.matrix() + second.matrix();
        let deviation = sum.max_abs_diff(&CMatrix::identity(2));
        if deviation > DEFAULT_TOL {
            return Err(Error::InvalidProjectors(format!(
                "pair does not sum to the identity, deviation {deviation:.3e}"
            )));
        }
        Ok(ProjectorPair { projectors: [first, second] })
    }

    /// Computational basis pair (|0><0|, |1><1|).
    pub fn z() -> Self {
        ProjectorPair::new(ket0().density(), ket1().density())
            .expect("computational projectors are orthogonal and complete")
    }

    /// Hadamard basis pair (|+><+|, |-><-|).
    pub fn x() -> Self {
        ProjectorPair::new(ket_plus().density(), ket_minus().density())
            .expect("x projectors are orthogonal and complete")
    }

    /// Circular basis pair (|+i><+i|, |-i><-i|).
    pub fn y() -> Self {
        ProjectorPair::new(ket_plus_i().density(), ket_minus_i().density())
            .expect("y projectors are orthogonal and complete")
    }

    pub fn projectors(&self) -> &[DensityMatrix; 2] {
        &self.projectors
    }

    /// Dephases the system qubit: sum_i (P_i x 1) rho (P_i x 1).
    pub fn sandwich(&self, rho: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(rho.dim());
        let bath_dim = rho.dim() / 2;
        for p in &self.projectors {
            let lifted = p.matrix().kron(&CMatrix::identity(bath_dim));
            out = &out + &(&(&lifted * rho) * &lifted);
        }
        out
    }
}

/// True when the composite state already has the dephased form
/// sum_i (P_i x 1) rho (P_i x 1), which is what makes its reduced dynamics
/// completely positive under any coupling.
pub fn is_zero_discord(rho: &DensityMatrix, pair: &ProjectorPair) -> Result<bool> {
    if rho.dim() != 4 {
        return Err(Error::Dimension { expected: 4, got: rho.dim() });
    }
    let dephased = pair.sandwich(rho.matrix());
    Ok(dephased.max_abs_diff(rho.matrix()) <= DEFAULT_TOL)
}

/// Indices of tomography-basis states that cannot be written as a mixture of
/// the two projectors. The result is never empty: a basis that fit inside one
/// projector pair could not span the full matrix space.
pub fn tomography_basis_discord_obstruction(
    basis: &TomographyBasis,
    pair: &ProjectorPair,
) -> Vec<usize> {
    let mut failing = Vec::new();
    for (index, tau) in basis.states().iter().enumerate() {
        let mut mixture = CMatrix::zeros(2);
        for p in pair.projectors() {
            let weight = (p.matrix() * tau.matrix()).trace().re;
            mixture = &mixture + &p.matrix().scaled(C64::new(weight, 0.0));
        }
        if mixture.max_abs_diff(tau.matrix()) > DEFAULT_TOL {
            failing.push(index);
        }
    }
    failing
}
