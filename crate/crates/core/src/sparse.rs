//! Row-compressed square matrices acting on dense row-major buffers.
//!
//! Used to apply `ad_H` without materializing superoperators. The element
//! type is either the real scalar or its complex extension.

use nalgebra::ComplexField;
use num_complex::Complex;
use num_traits::Zero;

use crate::matcore::ComplexMatrix;
use crate::scalar::Real;

#[derive(Debug, Clone)]
pub(crate) struct SparseRows<E> {
    n: usize,
    ptr: Vec<usize>,
    idx: Vec<usize>,
    val: Vec<E>,
}

impl<E: ComplexField + Copy> SparseRows<E> {
    fn from_entries(n: usize, rows: Vec<Vec<(usize, E)>>) -> Self {
        let mut ptr = Vec::with_capacity(n + 1);
        let mut idx = Vec::new();
        let mut val = Vec::new();
        ptr.push(0);
        for mut row in rows {
            row.sort_by_key(|&(j, _)| j);
            let mut merged: Vec<(usize, E)> = Vec::with_capacity(row.len());
            for (j, v) in row {
                match merged.last_mut() {
                    Some((k, acc)) if *k == j => *acc += v,
                    _ => merged.push((j, v)),
                }
            }
            for (j, v) in merged {
                if v != E::zero() {
                    idx.push(j);
                    val.push(v);
                }
            }
            ptr.push(idx.len());
        }
        Self { n, ptr, idx, val }
    }

    #[cfg(test)]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[cfg(test)]
    pub fn nnz(&self) -> usize {
        self.idx.len()
    }

    fn row(&self, i: usize) -> impl Iterator<Item = (usize, E)> + '_ {
        let (a, b) = (self.ptr[i], self.ptr[i + 1]);
        self.idx[a..b].iter().copied().zip(self.val[a..b].iter().copied())
    }

    /// Sparse form of `H ⊗ 1 + 1 ⊗ H`.
    pub fn iota(&self) -> Self {
        let n = self.n;
        let mut rows = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut row = Vec::new();
                for (c, v) in self.row(a) {
                    row.push((c * n + b, v));
                }
                for (d, v) in self.row(b) {
                    row.push((a * n + d, v));
                }
                rows.push(row);
            }
        }
        Self::from_entries(n * n, rows)
    }

    /// `out = [H, y]` for a dense row-major `n × n` buffer `y`.
    pub fn commutator_into(&self, y: &[E], out: &mut [E]) {
        let n = self.n;
        debug_assert_eq!(y.len(), n * n);
        debug_assert_eq!(out.len(), n * n);
        for i in 0..n {
            let dst = &mut out[i * n..(i + 1) * n];
            dst.fill(E::zero());
            for (k, h) in self.row(i) {
                let src = &y[k * n..(k + 1) * n];
                for (o, &s) in dst.iter_mut().zip(src) {
                    *o += h * s;
                }
            }
            let yrow = &y[i * n..(i + 1) * n];
            for (k, &a) in yrow.iter().enumerate() {
                if a == E::zero() {
                    continue;
                }
                for (j, h) in self.row(k) {
                    dst[j] -= a * h;
                }
            }
        }
    }

    /// `out = [H, [H, y]]`, using `tmp` as scratch.
    pub fn double_commutator_into(&self, y: &[E], tmp: &mut [E], out: &mut [E]) {
        self.commutator_into(y, tmp);
        self.commutator_into(tmp, out);
    }
}

impl<T: Real> SparseRows<Complex<T>> {
    pub fn from_complex(m: &ComplexMatrix<T>) -> Self {
        let n = m.nrows();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (j, m[(i, j)])).collect())
            .collect();
        Self::from_entries(n, rows)
    }
}

impl<T: Real> SparseRows<T> {
    /// Real form of `m`, or `None` if any entry has a nonzero imaginary part.
    pub fn from_real(m: &ComplexMatrix<T>) -> Option<Self> {
        if m.iter().any(|z| z.im != T::zero()) {
            return None;
        }
        let n = m.nrows();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (j, m[(i, j)].re)).collect())
            .collect();
        Some(Self::from_entries(n, rows))
    }
}

/// Row-major copy of a square complex matrix.
pub(crate) fn complex_buffer<T: Real>(m: &ComplexMatrix<T>) -> Vec<Complex<T>> {
    let n = m.nrows();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(m[(i, j)]);
        }
    }
    out
}

/// Row-major real parts, or `None` if `m` is not real.
pub(crate) fn real_buffer<T: Real>(m: &ComplexMatrix<T>) -> Option<Vec<T>> {
    if m.iter().any(|z| z.im != T::zero()) {
        return None;
    }
    Some(complex_buffer(m).into_iter().map(|z| z.re).collect())
}

pub(crate) fn norm_squared<E: ComplexField + Copy>(v: &[E]) -> E::RealField {
    v.iter()
        .fold(E::RealField::zero(), |acc, x| acc + x.modulus_squared())
}
