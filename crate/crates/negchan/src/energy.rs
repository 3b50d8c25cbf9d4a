//! Hamiltonians, labeled spectra, diagonal propagators, and the closed-form
//! Choi matrices they induce.
//!
//! Everything here works in the energy basis: the computational basis is taken
//! to be the eigenbasis, so propagators are diagonal with phases e^{-i nu t}.
//! The eigenvalue combination f_nu = nu1 - nu2 - nu3 + nu4 depends on how the
//! levels are labeled, which is why spectra carry an explicit labeling rather
//! than an implied sort order.

use num_complex::Complex64;

use crate::channel::ChoiMatrix;
use crate::error::{Error, Result};
use crate::matrix::{C64, CMatrix};
use crate::qubit::pauli;

/// Rule that turns a Hamiltonian's eigenvalues into an ordered level list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Labeling {
    /// Diagonal entries in index order; only valid for diagonal matrices.
    DiagonalOrder,
    /// Each level sits at the computational index its eigenvector overlaps most.
    OverlapOrder,
    /// Plain ascending sort.
    Ascending,
    /// Explicit permutation applied to the ascending list: `values[i] = asc[p[i]]`.
    Permutation(Vec<usize>),
}

/// A Hamiltonian matrix together with the named parameters that built it.
#[derive(Debug, Clone)]
pub struct HamiltonianSpec {
    matrix: CMatrix,
    parameters: Vec<(String, f64)>,
}

impl HamiltonianSpec {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let deviation = matrix.hermitian_deviation();
        if deviation > 1e-12 {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(HamiltonianSpec { matrix, parameters: Vec::new() })
    }

    /// Two-qubit Ising model sigma3/2 x 1 + 1 x sigma3/2 + k sigma3 x sigma3,
    /// diagonal with entries (1+k, -k, -k, -1+k).
    pub fn ising(k: f64) -> Self {
        let half = Complex64::new(0.5, 0.0);
        let local = &pauli(3).scaled(half).kron(&pauli(0))
            + &pauli(0).kron(&pauli(3).scaled(half));
        let coupling = pauli(3).kron(&pauli(3)).scaled(Complex64::new(k, 0.0));
        HamiltonianSpec {
            matrix: &local + &coupling,
            parameters: vec![("k".to_string(), k)],
        }
    }

    /// Ising model plus a transverse coupling kp sigma1 x sigma1; no longer
    /// diagonal, spectrum {k +- sqrt(1+kp^2), -k +- kp}.
    pub fn ising_transverse(k: f64, kp: f64) -> Self {
        let transverse = pauli(1).kron(&pauli(1)).scaled(Complex64::new(kp, 0.0));
        let matrix = &HamiltonianSpec::ising(k).matrix + &transverse;
        HamiltonianSpec {
            matrix,
            parameters: vec![("k".to_string(), k), ("kprime".to_string(), kp)],
        }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn parameters(&self) -> &[(String, f64)] {
        &self.parameters
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.off_diagonal_max() <= tol
    }

    fn off_diagonal_max(&self) -> f64 {
        let d = self.matrix.dim();
        let mut max = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    max = max.max(self.matrix.get(i, j).norm());
                }
            }
        }
        max
    }

    /// Propagator e^{-iHt}, built from the eigendecomposition. For a diagonal
    /// Hamiltonian this equals the diagonal phase matrix of its spectrum.
    pub fn propagator(&self, t: f64) -> Result<CMatrix> {
        let (eigenvalues, vectors) = self.matrix.hermitian_eigen()?;
        let d = self.matrix.dim();
        let phases = CMatrix::from_fn(d, |i, j| {
            if i == j {
                Complex64::from_polar(1.0, -eigenvalues[i] * t)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Ok(&(&vectors * &phases) * &vectors.adjoint())
    }

    /// Eigenvalues ordered according to the labeling convention.
    pub fn spectrum(&self, labeling: &Labeling) -> Result<LabeledSpectrum> {
        let d = self.matrix.dim();
        let values = match labeling {
            Labeling::DiagonalOrder => {
                let off = self.off_diagonal_max();
                if off > 1e-12 {
                    return Err(Error::NotDiagonal { deviation: off });
                }
                (0..d).map(|i| self.matrix.get(i, i).re).collect()
            }
            Labeling::Ascending => self.matrix.hermitian_eigenvalues()?,
            Labeling::OverlapOrder => {
                let (eigenvalues, vectors) = self.matrix.hermitian_eigen()?;
                let mut assigned = vec![None; d];
                let mut used = vec![false; d];
                // Greedy assignment: repeatedly place the eigenvector with the
                // strongest remaining overlap at its computational index.
                for _ in 0..d {
                    let mut best = (0usize, 0usize, -1.0f64);
                    for (column, &taken) in used.iter().enumerate() {
                        if taken {
                            continue;
                        }
                        for (row, slot) in assigned.iter().enumerate() {
                            if slot.is_some() {
                                continue;
                            }
                            let overlap = vectors.get(row, column).norm_sqr();
                            if overlap > best.2 {
                                best = (row, column, overlap);
                            }
                        }
                    }
                    assigned[best.0] = Some(eigenvalues[best.1]);
                    used[best.1] = true;
                }
                assigned.into_iter().map(|v| v.expect("every index assigned")).collect()
            }
            Labeling::Permutation(p) => {
                let mut sorted = p.clone();
                sorted.sort_unstable();
                if sorted != (0..d).collect::<Vec<_>>() {
                    return Err(Error::InvalidPermutation(p.clone()));
                }
                let ascending = self.matrix.hermitian_eigenvalues()?;
                p.iter().map(|&i| ascending[i]).collect()
            }
        };
        LabeledSpectrum::from_values(values)
    }
}

/// Ordered Hamiltonian eigenvalues; the order is part of the meaning.
#[derive(Debug, Clone)]
pub struct LabeledSpectrum {
    values: Vec<f64>,
}

impl LabeledSpectrum {
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        if values.len() < 4 || !values.len().is_power_of_two() {
            return Err(Error::BadSpectrumShape(values.len()));
        }
        assert!(values.iter().all(|v| v.is_finite()), "spectrum values must be finite");
        Ok(LabeledSpectrum { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Number of energy levels.
    pub fn levels(&self) -> usize {
        self.values.len()
    }

    /// nu1 - nu2 - nu3 + nu4 for a four-level spectrum.
    pub fn f_nu(&self) -> Result<f64> {
        if self.values.len() != 4 {
            return Err(Error::SpectrumLength { expected: 4, got: self.values.len() });
        }
        Ok(self.values[0] - self.values[1] - self.values[2] + self.values[3])
    }

    /// The four-index combination that controls the extended-bath channel:
    /// with s = d/2 and r = d/4 (0-based), `nu[0] - nu[r] - nu[s] + nu[s+r]`.
    pub fn f_nu_extended(&self) -> f64 {
        let s = self.values.len() / 2;
        let r = self.values.len() / 4;
        self.values[0] - self.values[r] - self.values[s] + self.values[s + r]
    }

    /// Diagonal propagator diag(e^{-i nu_1 t}, ..., e^{-i nu_d t}).
    pub fn unitary(&self, t: f64) -> CMatrix {
        let d = self.values.len();
        CMatrix::from_fn(d, |i, j| {
            if i == j {
                Complex64::from_polar(1.0, -self.values[i] * t)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }
}

/// The explicit level labeling (k + R, -k + kp, k - R, -k - kp) with
/// R = sqrt(1 + kp^2), for which f_nu = 2(-kp + sqrt(1 + kp^2)).
pub fn transverse_spectrum(k: f64, kp: f64) -> LabeledSpectrum {
    let root = (1.0 + kp * kp).sqrt();
    LabeledSpectrum::from_values(vec![k + root, -k + kp, k - root, -k - kp])
        .expect("four finite values")
}

/// Negativity of the rotated-preparation channel as a function of the phase
/// f_nu * t: with s = |sin(phase/2)|, eta = s / (4 + 2s).
pub fn rotated_negativity(phase: f64) -> f64 {
    let s = (0.5 * phase).sin().abs();
    s / (4.0 + 2.0 * s)
}

fn phase(delta: f64, t: f64) -> C64 {
    Complex64::from_polar(1.0, -delta * t)
}

fn corner_choi(m: C64, n: C64) -> ChoiMatrix {
    let mut c = CMatrix::zeros(4);
    c.set(0, 0, Complex64::new(1.0, 0.0));
    c.set(3, 3, Complex64::new(1.0, 0.0));
    c.set(0, 3, m);
    c.set(3, 0, m.conj());
    c.set(1, 2, n);
    c.set(2, 1, n.conj());
    ChoiMatrix::new(c).expect("corner form is Hermitian with trace 2")
}

/// Closed-form Choi matrix of the copying preparation under a diagonal
/// propagator: corners 1, anti-corners z = (e^{-i(nu1-nu3)t} + e^{-i(nu2-nu4)t})/2.
pub fn analytic_choi_copy(spectrum: &LabeledSpectrum, t: f64) -> Result<ChoiMatrix> {
    if spectrum.levels() != 4 {
        return Err(Error::SpectrumLength { expected: 4, got: spectrum.levels() });
    }
    let v = spectrum.values();
    let z = 0.5 * (phase(v[0] - v[2], t) + phase(v[1] - v[3], t));
    Ok(corner_choi(z, Complex64::new(0.0, 0.0)))
}

/// Closed-form Choi matrix of the rotated preparation under a diagonal
/// propagator, together with its closed-form eigenvalues
/// {1 +- sqrt((5 + 3cos(f t))/8), +- sin(f t / 2)/2} in ascending order.
pub fn analytic_choi_rotated(
    spectrum: &LabeledSpectrum,
    t: f64,
) -> Result<(ChoiMatrix, [f64; 4])> {
    if spectrum.levels() != 4 {
        return Err(Error::SpectrumLength { expected: 4, got: spectrum.levels() });
    }
    let v = spectrum.values();
    let a = phase(v[0] - v[2], t);
    let b = phase(v[1] - v[3], t);
    let m = (3.0 * a + b) / 4.0;
    let n = (a.conj() - b.conj()) / 4.0;
    let f_t = spectrum.f_nu()? * t;
    let m_abs = ((5.0 + 3.0 * f_t.cos()) / 8.0).sqrt();
    let n_abs = (0.5 * f_t).sin().abs() / 2.0;
    let mut eigenvalues = [1.0 - m_abs, 1.0 + m_abs, -n_abs, n_abs];
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok((corner_choi(m, n), eigenvalues))
}

/// Closed-form Choi matrix for a bath extended to d/2 qubits with ground-state
/// extras: same corner form with the level differences taken at indices
/// (0, s) and (r, s+r), s = d/2, r = d/4.
pub fn analytic_choi_extended(spectrum: &LabeledSpectrum, t: f64) -> Result<ChoiMatrix> {
    let v = spectrum.values();
    let s = v.len() / 2;
    let r = v.len() / 4;
    let a = phase(v[0] - v[s], t);
    let b = phase(v[r] - v[s + r], t);
    let m = (3.0 * a + b) / 4.0;
    let n = (a.conj() - b.conj()) / 4.0;
    Ok(corner_choi(m, n))
}

/// All labelings of a four-level Hamiltonian's eigenvalues whose f_nu matches
/// `target` within `tol`. Each result permutes the ascending eigenvalue list.
pub fn labelings_matching_f_nu(
    h: &HamiltonianSpec,
    target: f64,
    tol: f64,
) -> Result<Vec<Vec<usize>>> {
    if h.matrix().dim() != 4 {
        return Err(Error::SpectrumLength { expected: 4, got: h.matrix().dim() });
    }
    let ascending = h.matrix().hermitian_eigenvalues()?;
    let mut matches = Vec::new();
    for p in permutations(4) {
        let f = ascending[p[0]] - ascending[p[1]] - ascending[p[2]] + ascending[p[3]];
        if (f - target).abs() <= tol {
            matches.push(p);
        }
    }
    Ok(matches)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn recurse(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            recurse(k + 1, items, out);
            items.swap(k, i);
        }
    }
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    recurse(0, &mut items, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::Gate;
    use crate::random::random_hermitian;
    use approx::assert_abs_diff_eq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn ising_matrix_is_diagonal_with_the_expected_entries() {
        let h0 = HamiltonianSpec::ising(0.0);
        let expected0 = [1.0, 0.0, 0.0, -1.0];
        for (i, want) in expected0.iter().enumerate() {
            assert_abs_diff_eq!(h0.matrix().get(i, i).re, want, epsilon = 1e-15);
        }
        let h1 = HamiltonianSpec::ising(1.0);
        let expected1 = [2.0, -1.0, -1.0, 0.0];
        for (i, want) in expected1.iter().enumerate() {
            assert_abs_diff_eq!(h1.matrix().get(i, i).re, want, epsilon = 1e-15);
        }
        assert!(h1.is_diagonal(1e-15));
        let ascending = h1.spectrum(&Labeling::Ascending).unwrap();
        let sorted = [-1.0, -1.0, 0.0, 2.0];
        for (got, want) in ascending.values().iter().zip(&sorted) {
            assert_abs_diff_eq!(got, want, epsilon = 1e-14);
        }
    }

    #[test]
    fn ising_f_nu_is_four_k() {
        let mut rng = StdRng::seed_from_u64(61);
        for _ in 0..50 {
            let k = rng.gen_range(-3.0..3.0);
            let spectrum =
                HamiltonianSpec::ising(k).spectrum(&Labeling::DiagonalOrder).unwrap();
            assert!((spectrum.f_nu().unwrap() - 4.0 * k).abs() <= 1e-12);
        }
        let exact = HamiltonianSpec::ising(0.8125)
            .spectrum(&Labeling::DiagonalOrder)
            .unwrap();
        assert_eq!(exact.f_nu().unwrap(), 4.0 * 0.8125);
    }

    #[test]
    fn transverse_model_reduces_to_ising_and_has_the_closed_spectrum() {
        let plain = HamiltonianSpec::ising(0.7);
        let reduced = HamiltonianSpec::ising_transverse(0.7, 0.0);
        assert!(plain.matrix().max_abs_diff(reduced.matrix()) <= 1e-15);
        let mut rng = StdRng::seed_from_u64(62);
        for _ in 0..20 {
            let k = rng.gen_range(-2.0..2.0);
            let kp = rng.gen_range(-2.0..2.0);
            let h = HamiltonianSpec::ising_transverse(k, kp);
            let mut closed = transverse_spectrum(k, kp).values().to_vec();
            closed.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let ascending = h.spectrum(&Labeling::Ascending).unwrap();
            for (got, want) in ascending.values().iter().zip(&closed) {
                assert!((got - want).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn transverse_labeling_reproduces_the_printed_f_nu() {
        let mut rng = StdRng::seed_from_u64(63);
        for _ in 0..20 {
            let k = rng.gen_range(-2.0..2.0);
            let kp = rng.gen_range(-2.0..2.0);
            let spectrum = transverse_spectrum(k, kp);
            let target = 2.0 * (-kp + (1.0 + kp * kp).sqrt());
            assert!((spectrum.f_nu().unwrap() - target).abs() <= 1e-12);
        }
    }

    #[test]
    fn labeling_rules_behave() {
        let h = HamiltonianSpec::ising_transverse(0.7, 0.3);
        assert!(matches!(
            h.spectrum(&Labeling::DiagonalOrder),
            Err(Error::NotDiagonal { .. })
        ));
        assert!(matches!(
            h.spectrum(&Labeling::Permutation(vec![0, 0, 1, 2])),
            Err(Error::InvalidPermutation(_))
        ));
        let ascending = h.spectrum(&Labeling::Ascending).unwrap();
        let reversed = h.spectrum(&Labeling::Permutation(vec![3, 2, 1, 0])).unwrap();
        for (a, b) in ascending.values().iter().zip(reversed.values().iter().rev()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-14);
        }
        let diagonal = HamiltonianSpec::ising(0.4);
        let by_overlap = diagonal.spectrum(&Labeling::OverlapOrder).unwrap();
        let by_index = diagonal.spectrum(&Labeling::DiagonalOrder).unwrap();
        for (a, b) in by_overlap.values().iter().zip(by_index.values()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn f_nu_extended_generalizes_f_nu() {
        let spectrum = LabeledSpectrum::from_values(vec![0.3, -0.2, 0.9, 1.4]).unwrap();
        assert_abs_diff_eq!(
            spectrum.f_nu_extended(),
            spectrum.f_nu().unwrap(),
            epsilon = 1e-15
        );
        let values: Vec<f64> = (0..8).map(|i| (i as f64).sin()).collect();
        let spectrum8 = LabeledSpectrum::from_values(values.clone()).unwrap();
        let direct = values[0] - values[2] - values[4] + values[6];
        assert_abs_diff_eq!(spectrum8.f_nu_extended(), direct, epsilon = 1e-15);
        let flat = LabeledSpectrum::from_values(vec![1.3; 8]).unwrap();
        assert_abs_diff_eq!(flat.f_nu_extended(), 0.0, epsilon = 1e-15);
        assert!(matches!(
            spectrum8.f_nu(),
            Err(Error::SpectrumLength { expected: 4, got: 8 })
        ));
        assert!(matches!(
            LabeledSpectrum::from_values(vec![1.0, 2.0]),
            Err(Error::BadSpectrumShape(2))
        ));
    }

    #[test]
    fn diagonal_propagator_phases() {
        let spectrum = LabeledSpectrum::from_values(vec![0.0, 0.0, 0.0, std::f64::consts::PI])
            .unwrap();
        assert!(spectrum.unitary(0.0).max_abs_diff(&CMatrix::identity(4)) <= 1e-15);
        let cz = spectrum.unitary(1.0);
        assert!(cz.max_abs_diff(&Gate::Cz.matrix()) <= 1e-12);
        let mut rng = StdRng::seed_from_u64(64);
        let values: Vec<f64> = (0..4).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let t = rng.gen_range(0.0..5.0);
        let spectrum = LabeledSpectrum::from_values(values.clone()).unwrap();
        let u = spectrum.unitary(t);
        let rho = random_hermitian(4, &mut rng);
        let evolved = &(&u * &rho) * &u.adjoint();
        for i in 0..4 {
            for j in 0..4 {
                let expected =
                    Complex64::from_polar(1.0, -(values[i] - values[j]) * t) * rho.get(i, j);
                assert!((evolved.get(i, j) - expected).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn copy_form_matches_its_stated_properties() {
        let mut rng = StdRng::seed_from_u64(65);
        for _ in 0..50 {
            let values: Vec<f64> = (0..4).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let t = rng.gen_range(0.0..5.0);
            let spectrum = LabeledSpectrum::from_values(values).unwrap();
            let choi = analytic_choi_copy(&spectrum, t).unwrap();
            let z = choi.matrix().get(0, 3);
            let f_t = spectrum.f_nu().unwrap() * t;
            assert!((z.norm_sqr() - (0.5 * f_t).cos().powi(2)).abs() <= 1e-12);
            assert!(choi.negativity() <= 1e-12);
            let ev = choi.eigenvalues();
            assert!(ev[0].abs() <= 1e-12);
            assert!(ev[1].abs() <= 1e-12);
            assert!((ev[2] - (1.0 - z.norm())).abs() <= 1e-12);
            assert!((ev[3] - (1.0 + z.norm())).abs() <= 1e-12);
        }
        let spectrum = LabeledSpectrum::from_values(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let at_zero = analytic_choi_copy(&spectrum, 0.0).unwrap();
        assert!((at_zero.matrix().get(0, 3) - Complex64::new(1.0, 0.0)).norm() <= 1e-15);
    }

    #[test]
    fn rotated_form_eigenvalues_match_the_matrix() {
        let mut rng = StdRng::seed_from_u64(66);
        for _ in 0..50 {
            let values: Vec<f64> = (0..4).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let t = rng.gen_range(0.0..5.0);
            let spectrum = LabeledSpectrum::from_values(values).unwrap();
            let (choi, closed) = analytic_choi_rotated(&spectrum, t).unwrap();
            for (got, want) in choi.eigenvalues().iter().zip(&closed) {
                assert!((got - want).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn rotated_form_hits_the_pinned_points() {
        let spectrum = LabeledSpectrum::from_values(vec![0.0, 0.0, 0.0, std::f64::consts::PI])
            .unwrap();
        let (choi, closed) = analytic_choi_rotated(&spectrum, 1.0).unwrap();
        let expected = [-0.5, 0.5, 0.5, 1.5];
        for (got, want) in closed.iter().zip(&expected) {
            assert_abs_diff_eq!(got, want, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(choi.negativity(), 1.0 / 6.0, epsilon = 1e-12);
        let (at_two_pi, _) = analytic_choi_rotated(&spectrum, 2.0).unwrap();
        assert!(at_two_pi.negativity() <= 1e-12);
    }

    #[test]
    fn extended_form_reduces_to_the_rotated_form() {
        let mut rng = StdRng::seed_from_u64(67);
        for _ in 0..20 {
            let values: Vec<f64> = (0..4).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let t = rng.gen_range(0.0..5.0);
            let spectrum = LabeledSpectrum::from_values(values).unwrap();
            let (rotated, _) = analytic_choi_rotated(&spectrum, t).unwrap();
            let extended = analytic_choi_extended(&spectrum, t).unwrap();
            assert!(rotated.matrix().max_abs_diff(extended.matrix()) <= 1e-14);
        }
        let flat = LabeledSpectrum::from_values(vec![0.4; 8]).unwrap();
        let choi = analytic_choi_extended(&flat, 2.3).unwrap();
        assert!(choi.negativity() <= 1e-12);
    }

    #[test]
    fn rotated_negativity_profile() {
        assert_abs_diff_eq!(rotated_negativity(0.0), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            rotated_negativity(2.0 * std::f64::consts::PI),
            0.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            rotated_negativity(std::f64::consts::PI),
            1.0 / 6.0,
            epsilon = 1e-15
        );
        let mut max = 0.0f64;
        for i in 0..=10_000 {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / 10_000.0;
            max = max.max(rotated_negativity(theta));
        }
        assert_abs_diff_eq!(max, 1.0 / 6.0, epsilon = 2e-3);
    }

    #[test]
    fn labeling_search_finds_the_printed_transverse_f_nu() {
        let mut rng = StdRng::seed_from_u64(68);
        for _ in 0..20 {
            let k = rng.gen_range(-2.0..2.0);
            let kp = rng.gen_range(-2.0..2.0);
            let h = HamiltonianSpec::ising_transverse(k, kp);
            let target = 2.0 * (-kp + (1.0 + kp * kp).sqrt());
            let found = labelings_matching_f_nu(&h, target, 1e-10).unwrap();
            assert!(!found.is_empty(), "no labeling matches at k={k}, kp={kp}");
            for p in &found {
                let spectrum = h.spectrum(&Labeling::Permutation(p.clone())).unwrap();
                assert!((spectrum.f_nu().unwrap() - target).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn propagator_is_unitary_and_matches_the_diagonal_form() {
        let h = HamiltonianSpec::ising(0.9);
        let t = 1.7;
        let direct = h.spectrum(&Labeling::DiagonalOrder).unwrap().unitary(t);
        let exponentiated = h.propagator(t).unwrap();
        assert!(direct.max_abs_diff(&exponentiated) <= 1e-12);
        let transverse = HamiltonianSpec::ising_transverse(0.9, 0.4);
        let u = transverse.propagator(t).unwrap();
        assert!(u.is_unitary(1e-12));
        let half = transverse.propagator(t / 2.0).unwrap();
        assert!((&half * &half).max_abs_diff(&u) <= 1e-12);
    }

    #[test]
    fn hamiltonian_constructor_rejects_non_hermitian_matrices() {
        let shear =
            CMatrix::from_rows(&[&[(0.0, 0.0), (1.0, 0.0)], &[(0.0, 0.0), (0.0, 0.0)]]);
        assert!(matches!(HamiltonianSpec::new(shear), Err(Error::NotHermitian { .. })));
    }
}
