//! Seeded random matrices and states for property checks.

use num_complex::Complex64;
use rand::Rng;

use crate::matrix::{C64, CMatrix};
use crate::qubit::DensityMatrix;

fn standard_normal(rng: &mut impl Rng) -> f64 {
    // Box-Muller from two uniform draws; the clamp keeps ln() finite.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn gaussian_complex(rng: &mut impl Rng) -> C64 {
    Complex64::new(standard_normal(rng), standard_normal(rng))
}

/// Ginibre matrix: independent standard complex Gaussian entries.
pub fn ginibre(dim: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(dim, |_, _| gaussian_complex(rng))
}

/// Haar-distributed unitary, obtained by Gram-Schmidt on a Ginibre matrix.
pub fn haar_unitary(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let g = ginibre(dim, rng);
    // Columns of g, orthonormalized in order (modified Gram-Schmidt).
    let mut cols: Vec<Vec<C64>> = (0..dim)
        .map(|j| (0..dim).map(|i| g.get(i, j)).collect())
        .collect();
    for j in 0..dim {
        let (done, rest) = cols.split_at_mut(j);
        let current = &mut rest[0];
        for prev in done.iter() {
            let overlap: C64 =
                prev.iter().zip(current.iter()).map(|(p, c)| p.conj() * c).sum();
            for (c, p) in current.iter_mut().zip(prev.iter()) {
                *c -= overlap * p;
            }
        }
        let norm: f64 = current.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in current.iter_mut() {
            *z /= norm;
        }
    }
    CMatrix::from_fn(dim, |i, j| cols[j][i])
}

/// Random Hermitian matrix with Gaussian entries, H = (G + G') / 2.
pub fn random_hermitian(dim: usize, rng: &mut impl Rng) -> CMatrix {
    let g = ginibre(dim, rng);
    let adj = g.adjoint();
    (&g + &adj).scaled(Complex64::new(0.5, 0.0))
}

/// Random full-rank density matrix, GG' normalized to unit trace.
pub fn random_density(dim: usize, rng: &mut impl Rng) -> DensityMatrix {
    let g = ginibre(dim, rng);
    let p = &g * &g.adjoint();
    let tr = p.trace().re;
    DensityMatrix::new(p.scaled(Complex64::new(1.0 / tr, 0.0)))
        .expect("GG' normalized by its trace is a density matrix")
}

/// Random pure state vector, uniform on the sphere.
pub fn random_state(dim: usize, rng: &mut impl Rng) -> Vec<C64> {
    let mut v: Vec<C64> = (0..dim).map(|_| gaussian_complex(rng)).collect();
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in v.iter_mut() {
        *z /= norm;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand::rngs::StdRng;

    #[test]
    fn haar_unitaries_pass_the_unitarity_check() {
        let mut rng = StdRng::seed_from_u64(21);
        for &dim in &[2usize, 4, 8] {
            for _ in 0..10 {
                let u = haar_unitary(dim, &mut rng);
                assert!(u.is_unitary(1e-12));
            }
        }
    }

    #[test]
    fn random_hermitian_is_hermitian() {
        let mut rng = StdRng::seed_from_u64(22);
        for _ in 0..10 {
            let h = random_hermitian(4, &mut rng);
            assert!(h.is_hermitian(1e-14));
        }
    }

    #[test]
    fn random_density_has_unit_trace_and_is_psd() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..10 {
            let rho = random_density(4, &mut rng);
            let m = rho.matrix();
            assert!((m.trace().re - 1.0).abs() <= 1e-12);
            let (ok, _) = m.is_psd(1e-12).unwrap();
            assert!(ok);
        }
    }

    #[test]
    fn random_states_are_normalized() {
        let mut rng = StdRng::seed_from_u64(24);
        for _ in 0..10 {
            let v = random_state(4, &mut rng);
            let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            assert!((norm - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn seeded_draws_are_reproducible() {
        let mut a = StdRng::seed_from_u64(25);
        let mut b = StdRng::seed_from_u64(25);
        let ua = haar_unitary(4, &mut a);
        let ub = haar_unitary(4, &mut b);
        assert!(ua.max_abs_diff(&ub) == 0.0);
    }
}
