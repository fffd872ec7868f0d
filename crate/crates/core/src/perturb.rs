//! Drift perturbations that restore a symmetry.
//!
//! For a linear symmetry `S` the minimal-norm perturbation is
//! `ΔH = −ad_S⁺ ad_S(H_d)`, evaluated in the eigenbasis of `S`. For a
//! quadratic symmetry the map `X ↦ [S, ι(X)]` is materialized on a real
//! orthonormal basis of Hermitian matrices and solved by pseudoinverse.

use nalgebra::{DMatrix, DVector, SVD};

use crate::error::{Error, Result};
use crate::lie::{default_rank_tolerance, Symmetry, SymmetryKind};
use crate::matcore::{check_entry_cap, commutator, iota_capped, ComplexMatrix, HermitianMatrix, DEFAULT_ENTRY_CAP};
use crate::scalar::{c, cr, czero, unit_floor, Real};

/// Default eigenvalue clustering scale, relative to the operator norm.
pub fn default_gap_tolerance<T: Real>() -> T {
    T::base_tolerance() * T::lit(100.0)
}

/// Smallest gap between distinct eigenvalues of `s`.
///
/// Eigenvalues closer than `1e-8 · ‖S‖_∞` are treated as equal.
pub fn spectral_gap_min<T: Real>(s: &HermitianMatrix<T>) -> Result<T> {
    let values = s.eigh().values;
    let scale = values.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let tau = default_gap_tolerance::<T>() * scale;
    values
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|&g| g > tau)
        .reduce(|a, b| a.min(b))
        .ok_or(Error::NoGap)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbationOrigin {
    /// Minimal-Frobenius-norm solution from the pseudoinverse.
    Pseudoinverse,
    /// Feasible perturbation supplied by the caller.
    Supplied,
}

/// A Hermitian `ΔH` such that `H_d + ΔH` respects `symmetry`.
#[derive(Debug, Clone)]
pub struct Perturbation<T: Real> {
    pub delta: HermitianMatrix<T>,
    pub op_norm: T,
    pub frob_norm: T,
    /// `‖[S, H_d + ΔH]‖_F`, lifted through `ι` for quadratic symmetries.
    pub residual: T,
    pub symmetry: Symmetry<T>,
    /// Smallest nonzero singular value of the restoration map, when known.
    pub map_sigma_min: Option<T>,
    pub origin: PerturbationOrigin,
}

impl<T: Real> Perturbation<T> {
    /// Wraps a caller-supplied perturbation after checking that it restores
    /// the symmetry.
    pub fn from_matrix(symmetry: &Symmetry<T>, drift: &HermitianMatrix<T>, delta: HermitianMatrix<T>) -> Result<Self> {
        check_drift(symmetry, drift)?;
        if delta.dim() != drift.dim() {
            return Err(Error::Dimension(format!(
                "perturbation dimension {} does not match drift dimension {}",
                delta.dim(),
                drift.dim()
            )));
        }
        let residual = restoration_residual(symmetry, drift, &delta)?;
        check_residual(symmetry, drift, residual, default_rank_tolerance())?;
        Ok(Self {
            op_norm: delta.operator_norm(),
            frob_norm: delta.frobenius_norm(),
            delta,
            residual,
            symmetry: symmetry.clone(),
            map_sigma_min: None,
            origin: PerturbationOrigin::Supplied,
        })
    }

    /// `‖[S, ·]‖_F / σ_min` of the restoration map, an upper bound on
    /// `‖ΔH‖_F` for pseudoinverse solutions.
    pub fn norm_bound(&self, drift: &HermitianMatrix<T>) -> Result<T> {
        let sigma = self.map_sigma_min.ok_or(Error::NoGap)?;
        Ok(breaking_of_drift(&self.symmetry, drift)? / sigma)
    }
}

fn check_drift<T: Real>(s: &Symmetry<T>, drift: &HermitianMatrix<T>) -> Result<()> {
    if drift.dim() != s.system_dim() {
        return Err(Error::Dimension(format!(
            "drift dimension {} does not match symmetry system dimension {}",
            drift.dim(),
            s.system_dim()
        )));
    }
    Ok(())
}

/// `‖[S, H]‖_F` or `‖[S, ι(H)]‖_F`.
fn breaking_of_drift<T: Real>(s: &Symmetry<T>, h: &HermitianMatrix<T>) -> Result<T> {
    let m = match s.kind {
        SymmetryKind::Linear => commutator(s.matrix.matrix(), h.matrix())?,
        SymmetryKind::Quadratic => commutator(s.matrix.matrix(), iota_capped(h, usize::MAX)?.matrix())?,
    };
    Ok(m.norm())
}

fn restoration_residual<T: Real>(s: &Symmetry<T>, drift: &HermitianMatrix<T>, delta: &HermitianMatrix<T>) -> Result<T> {
    breaking_of_drift(s, &drift.try_add(delta)?)
}

fn check_residual<T: Real>(s: &Symmetry<T>, drift: &HermitianMatrix<T>, residual: T, tol: T) -> Result<()> {
    let limit = tol * unit_floor(s.frobenius_norm() * drift.frobenius_norm());
    if residual > limit {
        return Err(Error::Conditioning {
            residual: residual.as_f64(),
            tolerance: limit.as_f64(),
        });
    }
    Ok(())
}

/// Minimal-Frobenius-norm Hermitian `ΔH` restoring `s` to `drift`.
pub fn restore_symmetry<T: Real>(s: &Symmetry<T>, drift: &HermitianMatrix<T>) -> Result<Perturbation<T>> {
    restore_symmetry_capped(s, drift, DEFAULT_ENTRY_CAP)
}

pub fn restore_symmetry_capped<T: Real>(
    s: &Symmetry<T>,
    drift: &HermitianMatrix<T>,
    entry_cap: usize,
) -> Result<Perturbation<T>> {
    check_drift(s, drift)?;
    let (delta, map_sigma_min) = match s.kind {
        SymmetryKind::Linear => (restore_linear(s, drift), s.sigma_min),
        SymmetryKind::Quadratic => restore_quadratic(s, drift, entry_cap)?,
    };
    let residual = restoration_residual(s, drift, &delta)?;
    check_residual(s, drift, residual, default_rank_tolerance())?;
    Ok(Perturbation {
        op_norm: delta.operator_norm(),
        frob_norm: delta.frobenius_norm(),
        delta,
        residual,
        symmetry: s.clone(),
        map_sigma_min,
        origin: PerturbationOrigin::Pseudoinverse,
    })
}

fn restore_linear<T: Real>(s: &Symmetry<T>, drift: &HermitianMatrix<T>) -> HermitianMatrix<T> {
    let eig = s.matrix.eigh();
    let scale = eig.values.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let tau = default_gap_tolerance::<T>() * scale;
    let v = &eig.vectors;
    let mut rotated = v.adjoint() * drift.matrix() * v;
    let d = rotated.nrows();
    for i in 0..d {
        for j in 0..d {
            rotated[(i, j)] = if (eig.values[i] - eig.values[j]).abs() > tau {
                -rotated[(i, j)]
            } else {
                czero()
            };
        }
    }
    let back = v * rotated * v.adjoint();
    hermitian_part(back)
}

fn hermitian_part<T: Real>(m: ComplexMatrix<T>) -> HermitianMatrix<T> {
    let sym = (&m + m.adjoint()).map(|z| z * T::lit(0.5));
    HermitianMatrix::new(sym).expect("symmetrized matrix is Hermitian")
}

/// Real orthonormal basis of the `d × d` Hermitian matrices under
/// `Re Tr(A† B)`.
pub(crate) fn hermitian_basis<T: Real>(d: usize) -> Vec<ComplexMatrix<T>> {
    let inv_sqrt2 = T::lit(std::f64::consts::FRAC_1_SQRT_2);
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        let mut e = ComplexMatrix::zeros(d, d);
        e[(i, i)] = cr(T::one());
        out.push(e);
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let mut re = ComplexMatrix::zeros(d, d);
            re[(i, j)] = cr(inv_sqrt2);
            re[(j, i)] = cr(inv_sqrt2);
            out.push(re);
            let mut im = ComplexMatrix::zeros(d, d);
            im[(i, j)] = c(T::zero(), -inv_sqrt2);
            im[(j, i)] = c(T::zero(), inv_sqrt2);
            out.push(im);
        }
    }
    out
}

fn push_split<T: Real>(dst: &mut [T], m: &ComplexMatrix<T>) {
    let n = m.nrows();
    let half = dst.len() / 2;
    for r in 0..n {
        for col in 0..n {
            let z = m[(r, col)];
            dst[r * n + col] = z.re;
            dst[half + r * n + col] = z.im;
        }
    }
}

fn restore_quadratic<T: Real>(
    s: &Symmetry<T>,
    drift: &HermitianMatrix<T>,
    entry_cap: usize,
) -> Result<(HermitianMatrix<T>, Option<T>)> {
    let d = drift.dim();
    let n = d * d;
    check_entry_cap(n * n, d * d, entry_cap)?;
    let basis = hermitian_basis::<T>(d);
    let rows = 2 * n * n;
    let mut a = DMatrix::<T>::zeros(rows, basis.len());
    for (k, e) in basis.iter().enumerate() {
        let lifted = iota_capped(&HermitianMatrix::new(e.clone())?, usize::MAX)?;
        let col = commutator(s.matrix.matrix(), lifted.matrix())?;
        push_split(a.column_mut(k).as_mut_slice(), &col);
    }
    let rhs_m = commutator(s.matrix.matrix(), iota_capped(drift, usize::MAX)?.matrix())?;
    let mut rhs = DVector::<T>::zeros(rows);
    push_split(rhs.as_mut_slice(), &rhs_m);

    let svd = SVD::new(a, true, true);
    let u = svd.u.as_ref().ok_or_else(|| Error::Numerical("SVD without left vectors".into()))?;
    let v_t = svd.v_t.as_ref().ok_or_else(|| Error::Numerical("SVD without right vectors".into()))?;
    let sigma_max = svd.singular_values.iter().fold(T::zero(), |m, &x| m.max(x));
    let threshold = default_rank_tolerance::<T>() * sigma_max;

    let mut coeffs = DVector::<T>::zeros(basis.len());
    let mut sigma_min: Option<T> = None;
    for (r, &sv) in svd.singular_values.iter().enumerate() {
        if sv > threshold {
            sigma_min = Some(sigma_min.map_or(sv, |m: T| m.min(sv)));
            let proj = u.column(r).dot(&rhs) / sv;
            coeffs -= v_t.row(r).transpose() * proj;
        }
    }
    let mut delta = ComplexMatrix::<T>::zeros(d, d);
    for (e, &x) in basis.iter().zip(coeffs.iter()) {
        delta += e.map(|z| z * x);
    }
    Ok((hermitian_part(delta), sigma_min))
}

/// `‖[S, H_d]‖_F / σ_min(S)`, an upper bound on `‖ΔH‖_F` (hence on
/// `‖ΔH‖_∞`) for linear symmetries.
pub fn perturbation_norm_bound<T: Real>(s: &Symmetry<T>, drift: &HermitianMatrix<T>) -> Result<T> {
    if s.kind != SymmetryKind::Linear {
        return Err(Error::InvalidArgument(
            "perturbation_norm_bound applies to linear symmetries only".into(),
        ));
    }
    check_drift(s, drift)?;
    let sigma = s.sigma_min.ok_or(Error::NoGap)?;
    Ok(commutator(s.matrix.matrix(), drift.matrix())?.norm() / sigma)
}
