#![allow(dead_code)]

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use symqsl::matcore::{matrix_exponential, ComplexMatrix, HermitianMatrix, UnitaryMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

pub fn complex_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix<f64> {
    ComplexMatrix::from_fn(rows, cols, |_, _| Complex::new(normal(rng), normal(rng)))
}

pub fn hermitian(rng: &mut ChaCha8Rng, d: usize) -> HermitianMatrix<f64> {
    let m = complex_matrix(rng, d, d);
    HermitianMatrix::new((&m + m.adjoint()).map(|z| z * 0.5)).unwrap()
}

pub fn unitary(rng: &mut ChaCha8Rng, d: usize) -> UnitaryMatrix<f64> {
    matrix_exponential(&hermitian(rng, d), 2.0).unwrap()
}

pub fn with_spectrum(v: &UnitaryMatrix<f64>, values: &[f64]) -> HermitianMatrix<f64> {
    let d = HermitianMatrix::from_real_diagonal(values);
    HermitianMatrix::new(v.matrix() * d.matrix() * v.matrix().adjoint()).unwrap()
}
