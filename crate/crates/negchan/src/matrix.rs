//! Dense square complex matrices and the numerical kernels everything else builds on.
//!
//! Matrices are stored row-major. The composite index convention is fixed across
//! the crate: in a tensor product the left factor is the most significant index,
//! so `a.kron(&b)` places `a`'s indices in the high bits and `partial_trace_bath`
//! always removes the trailing (low-bit) factor.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::DEFAULT_TOL;

/// Shorthand for the complex scalar used throughout.
pub type C64 = Complex64;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone)]
pub struct CMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl CMatrix {
    /// Builds a matrix from row-major data; panics on length mismatch or non-finite entries.
    pub fn new(dim: usize, data: Vec<C64>) -> Self {
        assert_eq!(data.len(), dim * dim, "row-major data must hold dim*dim entries");
        assert!(
            data.iter().all(|z| z.re.is_finite() && z.im.is_finite()),
            "matrix entries must be finite"
        );
        CMatrix { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        CMatrix { dim, data: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, C64::new(1.0, 0.0));
        }
        m
    }

    /// Builds a matrix entry by entry from a closure over (row, col).
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        CMatrix::new(dim, data)
    }

    /// Builds a matrix from nested row slices of (re, im) pairs; handy for literals in tests.
    pub fn from_rows(rows: &[&[(f64, f64)]]) -> Self {
        let dim = rows.len();
        CMatrix::from_fn(dim, |i, j| {
            assert_eq!(rows[i].len(), dim, "rows must form a square matrix");
            let (re, im) = rows[i][j];
            C64::new(re, im)
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn scaled(&self, z: C64) -> Self {
        CMatrix { dim: self.dim, data: self.data.iter().map(|a| a * z).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        CMatrix::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        CMatrix::from_fn(self.dim, |i, j| self.get(j, i))
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        CMatrix { dim: self.dim, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Kronecker product; `self` becomes the most significant factor.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (da, db) = (self.dim, other.dim);
        let dim = da * db;
        let mut out = CMatrix::zeros(dim);
        for i in 0..da {
            for j in 0..da {
                let a_ij = self.get(i, j);
                for k in 0..db {
                    for l in 0..db {
                        out.set(i * db + k, j * db + l, a_ij * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Traces out the trailing factor of dimension `dim_b`.
    pub fn partial_trace_bath(&self, dim_b: usize) -> Result<CMatrix> {
        if dim_b == 0 || !self.dim.is_multiple_of(dim_b) {
            return Err(Error::BathDimension { dim: self.dim, dim_b });
        }
        let ds = self.dim / dim_b;
        Ok(CMatrix::from_fn(ds, |i, j| {
            (0..dim_b).map(|b| self.get(i * dim_b + b, j * dim_b + b)).sum()
        }))
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "vector length must match matrix dimension");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Largest entrywise absolute value.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max entry of |A - A'|.
    pub fn hermitian_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let gram = &self.adjoint() * self;
        gram.max_abs_diff(&CMatrix::identity(self.dim)) <= tol
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(self.hermitian_eigen()?.0)
    }

    /// Full eigendecomposition of a Hermitian matrix: ascending eigenvalues and a
    /// unitary whose columns are the matching eigenvectors.
    ///
    /// Cyclic complex Jacobi rotations; after each pivot the off-diagonal mass drops
    /// strictly, so a few sweeps reach machine precision at the dimensions used here.
    pub fn hermitian_eigen(&self) -> Result<(Vec<f64>, CMatrix)> {
        let dev = self.hermitian_deviation();
        if dev > DEFAULT_TOL {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let n = self.dim;
        let mut a = CMatrix::from_fn(n, |i, j| 0.5 * (self.get(i, j) + self.get(j, i).conj()));
        let mut v = CMatrix::identity(n);
        let scale = a.max_abs().max(1.0);

        for _sweep in 0..60 {
            let mut off = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += a.get(p, q).norm_sqr();
                }
            }
            if off.sqrt() <= 1e-15 * scale * n as f64 {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a.get(p, q);
                    let r = apq.norm();
                    if r <= 1e-18 * scale {
                        continue;
                    }
                    let phase = apq / r;
                    let tau = (a.get(q, q).re - a.get(p, p).re) / (2.0 * r);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        1.0 / (tau - (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    // Unitary G: identity except G[p][p]=c, G[p][q]=s,
                    // G[q][p]=-s*conj(phase), G[q][q]=c*conj(phase).
                    let gqp = -s * phase.conj();
                    let gqq = c * phase.conj();
                    for i in 0..n {
                        let aip = a.get(i, p);
                        let aiq = a.get(i, q);
                        a.set(i, p, c * aip + gqp * aiq);
                        a.set(i, q, s * aip + gqq * aiq);
                        let vip = v.get(i, p);
                        let viq = v.get(i, q);
                        v.set(i, p, c * vip + gqp * viq);
                        v.set(i, q, s * vip + gqq * viq);
                    }
                    for j in 0..n {
                        let apj = a.get(p, j);
                        let aqj = a.get(q, j);
                        a.set(p, j, c * apj + gqp.conj() * aqj);
                        a.set(q, j, s * apj + gqq.conj() * aqj);
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
        let values = order.iter().map(|&i| a.get(i, i).re).collect();
        let vectors = CMatrix::from_fn(n, |i, j| v.get(i, order[j]));
        Ok((values, vectors))
    }

    /// Sum of absolute eigenvalues of a Hermitian matrix.
    pub fn trace_norm(&self) -> Result<f64> {
        Ok(self.hermitian_eigenvalues()?.iter().map(|l| l.abs()).sum())
    }

    /// Positive-semidefinite test for a Hermitian matrix; returns the verdict and
    /// the smallest eigenvalue.
    pub fn is_psd(&self, tol: f64) -> Result<(bool, f64)> {
        let min = self.hermitian_eigenvalues()?[0];
        Ok((min >= -tol, min))
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> C64 {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = C64::new(1.0, 0.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col].norm().partial_cmp(&a[j * n + col].norm()).unwrap()
                })
                .unwrap();
            if a[pivot * n + col].norm() == 0.0 {
                return C64::new(0.0, 0.0);
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            det *= a[col * n + col];
            let inv = C64::new(1.0, 0.0) / a[col * n + col];
            for row in (col + 1)..n {
                let factor = a[row * n + col] * inv;
                for j in col..n {
                    let acj = a[col * n + j];
                    a[row * n + j] -= factor * acj;
                }
            }
        }
        det
    }

    /// Solves `self * x = rhs` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, rhs: &[C64]) -> Result<Vec<C64>> {
        assert_eq!(rhs.len(), self.dim, "right-hand side length must match dimension");
        let n = self.dim;
        let mut a = self.data.clone();
        let mut b = rhs.to_vec();
        let scale = self.max_abs().max(1.0);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col].norm().partial_cmp(&a[j * n + col].norm()).unwrap()
                })
                .unwrap();
            if a[pivot * n + col].norm() <= 1e-12 * scale {
                return Err(Error::SingularSystem);
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                b.swap(col, pivot);
            }
            let inv = C64::new(1.0, 0.0) / a[col * n + col];
            for row in (col + 1)..n {
                let factor = a[row * n + col] * inv;
                if factor.norm() == 0.0 {
                    continue;
                }
                for j in col..n {
                    let acj = a[col * n + j];
                    a[row * n + j] -= factor * acj;
                }
                let bc = b[col];
                b[row] -= factor * bc;
            }
        }
        let mut x = vec![C64::new(0.0, 0.0); n];
        for row in (0..n).rev() {
            let mut acc = b[row];
            for j in (row + 1)..n {
                acc -= a[row * n + j] * x[j];
            }
            x[row] = acc / a[row * n + row];
        }
        Ok(x)
    }
}

impl std::ops::Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + aik * rhs.get(k, j));
                }
            }
        }
        out
    }
}
