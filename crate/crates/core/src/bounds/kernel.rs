//! Norm of the part of a symmetry outside the commutant of `H_s`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Symmetry, SymmetryKind};
use crate::matcore::{commutator, iota_capped, kron, ComplexVector, HermitianMatrix};
use crate::perturb::default_gap_tolerance;
use crate::scalar::{abs2, Real};

/// Exact kernel-complement norm together with a near-degeneracy count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelNorm<T: Real> {
    pub value: T,
    pub tolerance: T,
    /// Eigenvalue differences in `(τ, 10τ]`, where the split between kernel
    /// and complement is numerically fragile.
    pub near_degenerate: usize,
}

/// `‖(1 − P_ker ad)S‖_F` by diagonalizing `H_s`.
///
/// For quadratic `S` the basis is `V ⊗ V` and the relevant eigenvalues of
/// `ι(H_s)` are the pairwise sums. Entries whose eigenvalue difference is at
/// most `tau` (default `1e-8 · ‖H_s‖_∞`) count as kernel.
pub fn kernel_complement_norm_exact<T: Real>(
    h_s: &HermitianMatrix<T>,
    s: &Symmetry<T>,
    tau: Option<T>,
) -> Result<KernelNorm<T>> {
    check_dims(h_s, s)?;
    let eig = h_s.eigh();
    let scale = eig.values.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let tau = tau.unwrap_or_else(|| default_gap_tolerance::<T>() * scale);
    let (basis, energies) = match s.kind {
        SymmetryKind::Linear => (eig.vectors.clone(), eig.values.clone()),
        SymmetryKind::Quadratic => {
            let d = eig.values.len();
            let mut sums = Vec::with_capacity(d * d);
            for &a in &eig.values {
                for &b in &eig.values {
                    sums.push(a + b);
                }
            }
            (kron(&eig.vectors, &eig.vectors), sums)
        }
    };
    let rotated = basis.adjoint() * s.matrix.matrix() * &basis;
    let mut total = T::zero();
    let mut near_degenerate = 0;
    let ten = T::lit(10.0);
    let n = energies.len();
    for i in 0..n {
        for j in 0..n {
            let gap = (energies[i] - energies[j]).abs();
            if gap > tau {
                total += abs2(rotated[(i, j)]);
                if gap <= ten * tau && i < j {
                    near_degenerate += 1;
                }
            }
        }
    }
    Ok(KernelNorm {
        value: total.sqrt(),
        tolerance: tau,
        near_degenerate,
    })
}

/// `‖[H_s, S]‖_F / (2‖H_s‖_∞)` for linear `S`, `‖[ι(H_s), S]‖_F / (4‖H_s‖_∞)`
/// for quadratic `S`.
///
/// Only the `‖Av‖²/‖A‖²` branch of [`projection_lemma_bound`] is used: for
/// Hermitian `S` and `A = ad_{H_s}`, `⟨S, [H_s, S]⟩ = 0` by trace cyclicity.
pub fn kernel_complement_norm_commutator<T: Real>(h_s: &HermitianMatrix<T>, s: &Symmetry<T>) -> Result<T> {
    check_dims(h_s, s)?;
    let h_norm = h_s.operator_norm();
    if h_norm == T::zero() {
        return Err(Error::Degenerate("H_s is zero".into()));
    }
    let (c, factor) = match s.kind {
        SymmetryKind::Linear => (commutator(h_s.matrix(), s.matrix.matrix())?, T::lit(2.0)),
        SymmetryKind::Quadratic => (
            commutator(iota_capped(h_s, usize::MAX)?.matrix(), s.matrix.matrix())?,
            T::lit(4.0),
        ),
    };
    Ok(c.norm() / (factor * h_norm))
}

/// `max{⟨v, Av⟩/‖A‖_∞, ‖Av‖²/‖A‖_∞²}`, a lower bound on
/// `‖(1 − P_ker A)v‖²` for Hermitian `A`.
pub fn projection_lemma_bound<T: Real>(a: &HermitianMatrix<T>, v: &ComplexVector<T>) -> Result<T> {
    if a.dim() != v.len() {
        return Err(Error::Dimension(format!(
            "operator dimension {} does not match vector length {}",
            a.dim(),
            v.len()
        )));
    }
    let norm = a.operator_norm();
    if norm == T::zero() {
        return Ok(T::zero());
    }
    let av = a.matrix() * v;
    let quadratic = v.dotc(&av).re / norm;
    let squared = av.norm_squared() / (norm * norm);
    Ok(quadratic.max(squared))
}

fn check_dims<T: Real>(h_s: &HermitianMatrix<T>, s: &Symmetry<T>) -> Result<()> {
    if h_s.dim() != s.system_dim() {
        return Err(Error::Dimension(format!(
            "Hamiltonian dimension {} does not match symmetry system dimension {}",
            h_s.dim(),
            s.system_dim()
        )));
    }
    Ok(())
}
