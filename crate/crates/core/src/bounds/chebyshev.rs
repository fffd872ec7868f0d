//! Shifted Chebyshev filters approximating the projector onto `ker A`.

use nalgebra::ComplexField;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Symmetry, SymmetryKind};
use crate::matcore::HermitianMatrix;
use crate::scalar::Real;
use crate::sparse::{complex_buffer, norm_squared, real_buffer, SparseRows};

/// `p(x) = T_m(Y(x)) / T_m(Y(0))` with `Y(x) = (σ_max + σ_min − 2x)/(σ_max − σ_min)`.
///
/// `p(0) = 1` and `|p| ≤ ε` on `[σ_min, σ_max]`. When the two estimates
/// coincide the filter is `1 − x/σ`, which vanishes on the single point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChebyshevFilter<T: Real> {
    degree: usize,
    sigma_min: T,
    sigma_max: T,
}

impl<T: Real> ChebyshevFilter<T> {
    pub fn new(degree: usize, sigma_min: T, sigma_max: T) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("Chebyshev degree must be at least 1".into()));
        }
        if !(sigma_min > T::zero()) {
            return Err(Error::InvalidArgument(format!(
                "sigma_min estimate must be positive, got {sigma_min}"
            )));
        }
        if sigma_min > sigma_max {
            return Err(Error::InvalidArgument(format!(
                "sigma_min estimate {sigma_min} exceeds sigma_max estimate {sigma_max}"
            )));
        }
        Ok(Self {
            degree,
            sigma_min,
            sigma_max,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn sigma_min(&self) -> T {
        self.sigma_min
    }

    pub fn sigma_max(&self) -> T {
        self.sigma_max
    }

    fn collapsed(&self) -> bool {
        self.sigma_max == self.sigma_min
    }

    fn y0(&self) -> T {
        (self.sigma_max + self.sigma_min) / (self.sigma_max - self.sigma_min)
    }

    /// `sech(m · arccosh(y0))`.
    pub fn epsilon(&self) -> T {
        if self.collapsed() {
            return T::zero();
        }
        let theta = self.y0().acosh() * T::from_usize_lossy(self.degree);
        T::one() / theta.cosh()
    }

    /// `(Y(x) weights)`: `Y(x) = a − b·x`.
    fn affine(&self) -> (T, T) {
        let width = self.sigma_max - self.sigma_min;
        (self.y0(), T::lit(2.0) / width)
    }

    pub fn eval(&self, x: T) -> T {
        if self.collapsed() {
            return T::one() - x / self.sigma_max;
        }
        let (a, b) = self.affine();
        let y = a - b * x;
        let mut rho = T::one() / self.y0();
        let mut prev = T::one();
        let mut cur = rho * y;
        for _ in 1..self.degree {
            let next_rho = T::one() / (T::lit(2.0) * self.y0() - rho);
            let next = T::lit(2.0) * next_rho * y * cur - next_rho * rho * prev;
            prev = cur;
            cur = next;
            rho = next_rho;
        }
        cur
    }

    /// Applies `p(A)` to `v` through the scaled three-term recurrence.
    ///
    /// Returns `(‖p_m(A) v‖, min_k ‖p_k(A) v‖)` over degrees `1..=m`.
    pub(crate) fn apply<E, F>(&self, v: Vec<E>, mut apply_a: F) -> (T, T)
    where
        E: ComplexField<RealField = T> + Copy,
        F: FnMut(&[E], &mut [E]),
    {
        let len = v.len();
        let mut av = vec![E::zero(); len];
        if self.collapsed() {
            apply_a(&v, &mut av);
            let inv = T::one() / self.sigma_max;
            let out: Vec<E> = v.iter().zip(&av).map(|(&x, &y)| x - y.scale(inv)).collect();
            let n = norm_squared(&out).sqrt();
            return (n, n);
        }
        let (a, b) = self.affine();
        let y0 = self.y0();
        let two = T::lit(2.0);

        let mut rho = T::one() / y0;
        apply_a(&v, &mut av);
        let mut prev = v;
        let mut cur: Vec<E> = prev
            .iter()
            .zip(&av)
            .map(|(&x, &ax)| (x.scale(a) - ax.scale(b)).scale(rho))
            .collect();
        let mut last = norm_squared(&cur).sqrt();
        let mut best = last;
        for _ in 1..self.degree {
            let next_rho = T::one() / (two * y0 - rho);
            apply_a(&cur, &mut av);
            let c1 = two * next_rho;
            let c0 = next_rho * rho;
            for ((p, &x), &ax) in prev.iter_mut().zip(&cur).zip(&av) {
                *p = (x.scale(a) - ax.scale(b)).scale(c1) - p.scale(c0);
            }
            std::mem::swap(&mut prev, &mut cur);
            rho = next_rho;
            last = norm_squared(&cur).sqrt();
            if last < best {
                best = last;
            }
        }
        (last, best)
    }
}

/// Outcome of a Chebyshev kernel-complement estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChebyshevEstimate<T: Real> {
    /// Best rigorous lower bound on `‖(1 − P_ker)S‖_F` found.
    pub lower_bound: T,
    /// `max(0, (1 − ε)‖S‖_F − ‖p(A)S‖_F)`.
    pub reverse_triangle: T,
    /// `√(‖S‖_F² − min_k ‖p_k(A)S‖_F²)`.
    pub orthogonal: T,
    pub epsilon: T,
    pub filtered_norm: T,
}

/// Lower bound on `‖(1 − P_ker ad_{H_s})S‖_F` via `p(ad²_{H_s})`.
///
/// `ad²` is applied matrix-free from a sparse copy of `H_s` (lifted through
/// `ι` for quadratic `S`). Because `p(0) = 1`, the kernel part of `S`
/// survives the filter unchanged and is orthogonal to the rest, so
/// `‖P S‖ ≤ ‖p_k(A) S‖` for every degree `k`. Both reported forms are
/// therefore valid for any positive spectral estimates; the estimates only
/// control how tight they are.
pub fn chebyshev_filter_bound<T: Real>(
    h_s: &HermitianMatrix<T>,
    s: &Symmetry<T>,
    filter: &ChebyshevFilter<T>,
) -> Result<ChebyshevEstimate<T>> {
    if h_s.dim() != s.system_dim() {
        return Err(Error::Dimension(format!(
            "Hamiltonian dimension {} does not match symmetry system dimension {}",
            h_s.dim(),
            s.system_dim()
        )));
    }
    let lift = s.kind == SymmetryKind::Quadratic;
    let (filtered, best) = match (SparseRows::from_real(h_s.matrix()), real_buffer(s.matrix.matrix())) {
        (Some(rows), Some(v)) => run(filter, if lift { rows.iota() } else { rows }, v),
        _ => {
            let rows = SparseRows::from_complex(h_s.matrix());
            run(
                filter,
                if lift { rows.iota() } else { rows },
                complex_buffer(s.matrix.matrix()),
            )
        }
    };
    let norm = s.frobenius_norm();
    let epsilon = filter.epsilon();
    let reverse_triangle = ((T::one() - epsilon) * norm - filtered).max(T::zero());
    let orthogonal = (norm * norm - best * best).max(T::zero()).sqrt();
    Ok(ChebyshevEstimate {
        lower_bound: reverse_triangle.max(orthogonal),
        reverse_triangle,
        orthogonal,
        epsilon,
        filtered_norm: filtered,
    })
}

fn run<T: Real, E: ComplexField<RealField = T> + Copy>(
    filter: &ChebyshevFilter<T>,
    rows: SparseRows<E>,
    v: Vec<E>,
) -> (T, T) {
    let mut tmp = vec![E::zero(); v.len()];
    filter.apply(v, |x, out| rows.double_commutator_into(x, &mut tmp, out))
}

/// Upper bound `(2 c ‖H_s‖_∞)²` on the spectrum of `ad²`, with `c = 2` for
/// the `ι`-lifted operator.
pub fn sigma_max_estimate<T: Real>(h_norm_bound: T, kind: SymmetryKind) -> T {
    let c = match kind {
        SymmetryKind::Linear => T::lit(2.0),
        SymmetryKind::Quadratic => T::lit(4.0),
    };
    let r = c * h_norm_bound;
    r * r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::ComplexMatrix;
    use crate::pauli;

    #[test]
    fn filter_is_normalized_and_small_on_interval() {
        for &(m, lo, hi) in &[(1usize, 0.5, 4.0), (5, 0.1, 2.0), (17, 0.01, 9.0)] {
            let f = ChebyshevFilter::new(m, lo, hi).unwrap();
            assert!((f.eval(0.0) - 1.0).abs() < 1e-12);
            let eps = f.epsilon();
            for k in 0..=1000 {
                let x = lo + (hi - lo) * k as f64 / 1000.0;
                assert!(f.eval(x).abs() <= eps + 1e-12, "m={m} x={x}");
            }
        }
    }

    #[test]
    fn epsilon_decreases_with_degree() {
        let mut last = 1.0;
        for m in 1..50 {
            let e = ChebyshevFilter::new(m, 0.2, 3.0).unwrap().epsilon();
            assert!(e < last);
            last = e;
        }
    }

    #[test]
    fn rejects_bad_estimates() {
        assert!(ChebyshevFilter::new(4, 0.0, 1.0).is_err());
        assert!(ChebyshevFilter::new(4, 2.0, 1.0).is_err());
        assert!(ChebyshevFilter::new(0, 0.5, 1.0).is_err());
    }

    #[test]
    fn pauli_example() {
        let h = HermitianMatrix::new(pauli::z::<f64>()).unwrap();
        let s = Symmetry::linear(HermitianMatrix::new(pauli::x()).unwrap(), "x");
        let f = ChebyshevFilter::new(8, 4.0, 4.0).unwrap();
        let est = chebyshev_filter_bound(&h, &s, &f).unwrap();
        assert!((est.lower_bound - 2f64.sqrt()).abs() < 1e-3);

        let in_kernel = Symmetry::linear(HermitianMatrix::new(pauli::z()).unwrap(), "z");
        let est = chebyshev_filter_bound(&h, &in_kernel, &f).unwrap();
        assert_eq!(est.lower_bound, 0.0);
    }

    #[test]
    fn complex_and_real_paths_agree() {
        let hm: ComplexMatrix<f64> = pauli::string(2, &[(0, pauli::Pauli::Z), (1, pauli::Pauli::Z)])
            + pauli::string(2, &[(0, pauli::Pauli::X)]).map(|z| z * 0.4);
        let h = HermitianMatrix::new(hm.clone()).unwrap();
        let s = Symmetry::linear(HermitianMatrix::new(pauli::string(2, &[(1, pauli::Pauli::X)])).unwrap(), "x2");
        let f = ChebyshevFilter::new(30, 0.05, 16.0).unwrap();
        let real = chebyshev_filter_bound(&h, &s, &f).unwrap();
        let rows = SparseRows::from_complex(h.matrix());
        let (filtered, best) = run(&f, rows, complex_buffer(s.matrix.matrix()));
        assert!((filtered - real.filtered_norm).abs() < 1e-12);
        let orth = (s.frobenius_norm().powi(2) - best * best).max(0.0).sqrt();
        assert!((orth - real.orthogonal).abs() < 1e-12);
    }
}
