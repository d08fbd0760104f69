//! Thin dense complex vector/matrix wrappers over the product space.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// State vector in a `d^N`-dimensional product space.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseKet {
    amplitudes: DVector<Complex64>,
}

impl DenseKet {
    pub fn zeros(dim: usize) -> Self {
        DenseKet { amplitudes: DVector::zeros(dim) }
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        DenseKet { amplitudes: DVector::from_vec(amplitudes) }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn set(&mut self, index: usize, value: Complex64) {
        self.amplitudes[index] = value;
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &DenseKet) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn scale(&mut self, factor: Complex64) {
        self.amplitudes *= factor;
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: Complex64, other: &DenseKet) {
        self.amplitudes.axpy(factor, &other.amplitudes, Complex64::new(1.0, 0.0));
    }

    /// Kronecker product, `self` on the most significant slots.
    pub fn tensor(&self, other: &DenseKet) -> DenseKet {
        let (da, db) = (self.dim(), other.dim());
        let mut out = DVector::zeros(da * db);
        for i in 0..da {
            let a = self.amplitudes[i];
            if a != Complex64::ZERO {
                for j in 0..db {
                    out[i * db + j] = a * other.amplitudes[j];
                }
            }
        }
        DenseKet { amplitudes: out }
    }
}

/// Hermitian operator (POVM element, projector) on the product space.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    entries: DMatrix<Complex64>,
}

impl DenseOperator {
    pub fn zeros(dim: usize) -> Self {
        DenseOperator { entries: DMatrix::zeros(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    /// `self += weight |v><v|`.
    pub fn add_projector(&mut self, v: &DenseKet, weight: f64) {
        // ger performs a rank-one update without materializing the outer product
        self.entries.gerc(Complex64::new(weight, 0.0), v.amplitudes(), v.amplitudes(), Complex64::new(1.0, 0.0));
    }

    /// `<ket|self|ket>`.
    pub fn expectation(&self, ket: &DenseKet) -> Complex64 {
        let applied = &self.entries * ket.amplitudes();
        ket.amplitudes().dotc(&applied)
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    /// `max_ij |A_ij - conj(A_ji)|`.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let diff = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                worst = worst.max(diff);
            }
        }
        worst
    }

    /// Smallest eigenvalue, for positivity checks. The operator must be
    /// Hermitian.
    pub fn min_eigenvalue(&self) -> f64 {
        let eigen = self.entries.clone().symmetric_eigen();
        eigen.eigenvalues.min()
    }

    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                worst = worst.max((self.entries[(i, j)] - other.entries[(i, j)]).norm());
            }
        }
        worst
    }

    pub fn add_assign(&mut self, other: &DenseOperator) {
        self.entries += &other.entries;
    }

    pub fn sub_assign(&mut self, other: &DenseOperator) {
        self.entries -= &other.entries;
    }

    pub fn apply(&self, ket: &DenseKet) -> DenseKet {
        DenseKet { amplitudes: &self.entries * ket.amplitudes() }
    }
}
