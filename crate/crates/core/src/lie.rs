//! Dynamical Lie algebras and the symmetries of control Hamiltonians.
//!
//! Lie algebras are stored as real spans of antihermitian matrices `iH`,
//! orthonormal under `⟨A, B⟩ = Re Tr(A† B)`. Symmetries are Hermitian
//! matrices: linear ones act on `H` and commute with every control, quadratic
//! ones act on `H ⊗ H` and commute with every `ι(H_j) = H_j ⊗ 1 + 1 ⊗ H_j`.

use std::fmt;

use nalgebra::SVD;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{
    adjoint_superoperator_capped, check_entry_cap, commutator, devectorize, hs_inner,
    iota_capped, times_i, ComplexMatrix, HermitianMatrix, UnitaryMatrix, DEFAULT_ENTRY_CAP,
};
use crate::perturb::spectral_gap_min;
use crate::scalar::{ci, cr, unit_floor, Real};

/// Default numerical rank tolerance (`1e-9` in double precision).
pub fn default_rank_tolerance<T: Real>() -> T {
    T::base_tolerance() * T::lit(10.0)
}

/// Orthonormal basis of a real Lie algebra of antihermitian matrices.
#[derive(Debug, Clone)]
pub struct OperatorBasis<T: Real> {
    dim: usize,
    elements: Vec<ComplexMatrix<T>>,
    generators: Vec<HermitianMatrix<T>>,
    closed: bool,
    tol: T,
}

/// Failure of [`lie_closure`].
#[derive(Debug, Clone)]
pub enum ClosureError<T: Real> {
    /// `max_dim` was reached while new directions were still appearing.
    Truncated(OperatorBasis<T>),
    Invalid(Error),
}

impl<T: Real> fmt::Display for ClosureError<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureError::Truncated(partial) => write!(
                f,
                "closure truncated at dimension {} before reaching a fixed point",
                partial.len()
            ),
            ClosureError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl<T: Real> std::error::Error for ClosureError<T> {}

impl<T: Real> From<Error> for ClosureError<T> {
    fn from(e: Error) -> Self {
        ClosureError::Invalid(e)
    }
}

fn re_inner<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> T {
    hs_inner(a, b).re
}

/// Gram–Schmidt step (two passes) of `v` against an orthonormal list.
fn orthogonalize<T: Real>(basis: &[ComplexMatrix<T>], mut v: ComplexMatrix<T>) -> ComplexMatrix<T> {
    for _ in 0..2 {
        for b in basis {
            let coeff = re_inner(b, &v);
            if coeff != T::zero() {
                v -= b.map(|z| z * coeff);
            }
        }
    }
    v
}

/// Normalizes `candidate`, orthogonalizes it and returns the new unit
/// direction when the residual exceeds `tol`.
fn new_direction<T: Real>(
    basis: &[ComplexMatrix<T>],
    candidate: ComplexMatrix<T>,
    tol: T,
) -> Option<ComplexMatrix<T>> {
    let n = candidate.norm();
    if n <= tol {
        return None;
    }
    let residual = orthogonalize(basis, candidate.map(|z| z / cr(n)));
    let r = residual.norm();
    if r > tol {
        Some(residual.map(|z| z / cr(r)))
    } else {
        None
    }
}

fn common_dimension<T: Real>(ops: &[HermitianMatrix<T>]) -> Result<usize> {
    let first = ops
        .first()
        .ok_or_else(|| Error::InvalidArgument("operator list must be nonempty".into()))?;
    let d = first.dim();
    if let Some(bad) = ops.iter().find(|h| h.dim() != d) {
        return Err(Error::Dimension(format!(
            "operators have dimensions {d} and {}",
            bad.dim()
        )));
    }
    Ok(d)
}

/// Real Lie algebra generated by `{iH : H ∈ generators}`.
///
/// Pairs are commutated breadth-first in insertion order, so the output is
/// reproducible. The search stops at `min(max_dim, d²)` directions.
pub fn lie_closure<T: Real>(
    generators: &[HermitianMatrix<T>],
    max_dim: usize,
    tol: T,
) -> Result<OperatorBasis<T>, ClosureError<T>> {
    let d = common_dimension(generators)?;
    if max_dim == 0 {
        return Err(Error::InvalidArgument("max_dim must be at least 1".into()).into());
    }
    let full = d * d;
    let limit = max_dim.min(full);
    let mut elements: Vec<ComplexMatrix<T>> = Vec::new();
    let make = |elements: Vec<ComplexMatrix<T>>, closed| OperatorBasis {
        dim: d,
        elements,
        generators: generators.to_vec(),
        closed,
        tol,
    };

    for g in generators {
        if let Some(dir) = new_direction(&elements, times_i(g.matrix()), tol) {
            if elements.len() == limit {
                return Err(ClosureError::Truncated(make(elements, false)));
            }
            elements.push(dir);
        }
    }

    let mut i = 1;
    while i < elements.len() {
        if elements.len() == full {
            break;
        }
        for j in 0..i {
            let c = commutator(&elements[i], &elements[j])?;
            if let Some(dir) = new_direction(&elements, c, tol) {
                if elements.len() == limit {
                    return Err(ClosureError::Truncated(make(elements, false)));
                }
                elements.push(dir);
            }
        }
        i += 1;
    }
    Ok(make(elements, true))
}

/// Result of projecting a Hermitian operator onto a Lie algebra.
#[derive(Debug, Clone)]
pub struct SpanProjection<T: Real> {
    pub coefficients: Vec<T>,
    pub residual: T,
    pub member: bool,
}

/// Projects `iX` onto the span of `basis`.
pub fn project_onto_span<T: Real>(
    x: &HermitianMatrix<T>,
    basis: &OperatorBasis<T>,
) -> Result<SpanProjection<T>> {
    if x.dim() != basis.dim {
        return Err(Error::Dimension(format!(
            "operator dimension {} does not match basis dimension {}",
            x.dim(),
            basis.dim
        )));
    }
    let target = times_i(x.matrix());
    let coefficients: Vec<T> = basis.elements.iter().map(|b| re_inner(b, &target)).collect();
    let mut rest = target;
    for (b, &c) in basis.elements.iter().zip(&coefficients) {
        rest -= b.map(|z| z * c);
    }
    let residual = rest.norm();
    Ok(SpanProjection {
        member: residual <= basis.tol * unit_floor(x.frobenius_norm()),
        coefficients,
        residual,
    })
}

impl<T: Real> OperatorBasis<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Antihermitian basis elements.
    pub fn elements(&self) -> &[ComplexMatrix<T>] {
        &self.elements
    }

    pub fn generators(&self) -> &[HermitianMatrix<T>] {
        &self.generators
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn tolerance(&self) -> T {
        self.tol
    }

    pub fn contains(&self, x: &HermitianMatrix<T>) -> Result<bool> {
        Ok(project_onto_span(x, self)?.member)
    }

    /// Dimension of the center, `dim(g ∩ g')`, with `g'` the commutant.
    ///
    /// The center is reported only; it is not split off from the algebra.
    pub fn center_dimension(&self) -> Result<usize> {
        let opts = SymmetrySearch {
            tol: self.tol,
            ..SymmetrySearch::default()
        };
        let commutant = hermitian_nullspace(self.generators.iter().map(|g| g.matrix()), self.dim, &opts)?;
        let mut joint = self.elements.clone();
        let mut added = 0;
        for s in &commutant {
            if let Some(dir) = new_direction(&joint, times_i(s.matrix()), T::lit(1e-6)) {
                joint.push(dir);
                added += 1;
            }
        }
        Ok(commutant.len() - added)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryKind {
    Linear,
    Quadratic,
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryKind::Linear => "linear",
            SymmetryKind::Quadratic => "quadratic",
        })
    }
}

/// A Hermitian symmetry of the controls.
#[derive(Debug, Clone)]
pub struct Symmetry<T: Real> {
    pub kind: SymmetryKind,
    pub matrix: HermitianMatrix<T>,
    /// Smallest nonzero gap between distinct eigenvalues; `None` for
    /// multiples of the identity.
    pub sigma_min: Option<T>,
    pub note: String,
}

impl<T: Real> Symmetry<T> {
    pub fn new(kind: SymmetryKind, matrix: HermitianMatrix<T>, note: impl Into<String>) -> Result<Self> {
        if kind == SymmetryKind::Quadratic {
            let n = matrix.dim();
            let d = (n as f64).sqrt().round() as usize;
            if d * d != n {
                return Err(Error::Dimension(format!(
                    "quadratic symmetry dimension {n} is not a perfect square"
                )));
            }
        }
        let sigma_min = spectral_gap_min(&matrix).ok();
        Ok(Self {
            kind,
            matrix,
            sigma_min,
            note: note.into(),
        })
    }

    pub fn linear(matrix: HermitianMatrix<T>, note: impl Into<String>) -> Self {
        Self::new(SymmetryKind::Linear, matrix, note).expect("linear symmetries have no shape constraint")
    }

    pub fn quadratic(matrix: HermitianMatrix<T>, note: impl Into<String>) -> Result<Self> {
        Self::new(SymmetryKind::Quadratic, matrix, note)
    }

    /// Dimension of the underlying system Hilbert space.
    pub fn system_dim(&self) -> usize {
        match self.kind {
            SymmetryKind::Linear => self.matrix.dim(),
            SymmetryKind::Quadratic => (self.matrix.dim() as f64).sqrt().round() as usize,
        }
    }

    pub fn frobenius_norm(&self) -> T {
        self.matrix.frobenius_norm()
    }

    /// Same kind and note with a different matrix.
    pub fn with_matrix(&self, matrix: HermitianMatrix<T>) -> Self {
        Self {
            kind: self.kind,
            sigma_min: spectral_gap_min(&matrix).ok(),
            matrix,
            note: self.note.clone(),
        }
    }

    pub fn traceless(&self) -> Self {
        self.with_matrix(self.matrix.traceless())
    }

    /// Largest `‖[S, X]‖_F / (‖S‖_F ‖X‖_F)` over the given operators, with
    /// `X` lifted through `ι` for quadratic symmetries.
    pub fn max_relative_residual(&self, ops: &[HermitianMatrix<T>]) -> Result<T> {
        let mut worst = T::zero();
        for op in ops {
            let lifted;
            let x = match self.kind {
                SymmetryKind::Linear => op.matrix(),
                SymmetryKind::Quadratic => {
                    lifted = iota_capped(op, usize::MAX)?;
                    lifted.matrix()
                }
            };
            let r = commutator(self.matrix.matrix(), x)?.norm();
            let scale = self.frobenius_norm() * x.norm();
            if scale > T::zero() && r / scale > worst {
                worst = r / scale;
            }
        }
        Ok(worst)
    }
}

/// Options for symmetry discovery.
#[derive(Debug, Clone, Copy)]
pub struct SymmetrySearch<T: Real> {
    /// Singular values below `tol · σ_max` count as zero.
    pub tol: T,
    /// Drop the identity direction from the returned basis.
    pub traceless: bool,
    /// Cap on dense entries of each materialized superoperator.
    pub entry_cap: usize,
}

impl<T: Real> Default for SymmetrySearch<T> {
    fn default() -> Self {
        Self {
            tol: default_rank_tolerance(),
            traceless: false,
            entry_cap: DEFAULT_ENTRY_CAP,
        }
    }
}

/// Orthonormal Hermitian basis of `{S : [S, X] = 0 for all X in ops}`.
///
/// The nullspace is computed over all complex matrices by SVD of the stacked
/// adjoint superoperators, then intersected with the Hermitian subspace and
/// re-verified. The identity is always the first element unless the search
/// is traceless.
fn hermitian_nullspace<'a, T: Real>(
    ops: impl Iterator<Item = &'a ComplexMatrix<T>>,
    n: usize,
    opts: &SymmetrySearch<T>,
) -> Result<Vec<HermitianMatrix<T>>> {
    let ops: Vec<&ComplexMatrix<T>> = ops.collect();
    let n2 = n * n;
    check_entry_cap(n2, n2, opts.entry_cap)?;
    let mut stacked = ComplexMatrix::<T>::zeros(ops.len() * n2, n2);
    for (k, op) in ops.iter().enumerate() {
        let h = HermitianMatrix::new((*op).clone())?;
        let ad = adjoint_superoperator_capped(&h, opts.entry_cap)?;
        stacked.view_mut((k * n2, 0), (n2, n2)).copy_from(ad.matrix());
    }

    let svd = SVD::new(stacked, false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Numerical("SVD did not return right singular vectors".into()))?;
    let sigma_max = svd
        .singular_values
        .iter()
        .fold(T::zero(), |acc, &s| if s > acc { s } else { acc });
    let threshold = opts.tol * sigma_max;

    let mut candidates: Vec<ComplexMatrix<T>> = Vec::new();
    for (r, &s) in svd.singular_values.iter().enumerate() {
        if s <= threshold {
            let v = v_t.row(r).adjoint();
            let m = devectorize(&v)?;
            let half = T::lit(0.5);
            let adj = m.adjoint();
            candidates.push((&m + &adj).map(|z| z * half));
            candidates.push((&m - &adj).map(|z| z * half * -ci::<T>()));
        }
    }

    let identity = ComplexMatrix::<T>::identity(n, n).map(|z| z / cr(T::from_usize_lossy(n).sqrt()));
    let mut basis = vec![identity];
    for cand in candidates {
        if let Some(dir) = new_direction(&basis, cand, T::lit(1e-6)) {
            basis.push(dir);
        }
    }

    let scale_tol = opts.tol * T::lit(10.0);
    let mut out = Vec::with_capacity(basis.len());
    for (idx, b) in basis.into_iter().enumerate() {
        if opts.traceless && idx == 0 {
            continue;
        }
        let h = HermitianMatrix::new(b)?;
        for op in &ops {
            let r = commutator(h.matrix(), op)?.norm();
            if r > scale_tol * unit_floor(op.norm()) {
                return Err(Error::Numerical(format!(
                    "nullspace element fails re-verification (commutator norm {:.3e})",
                    r.as_f64()
                )));
            }
        }
        out.push(h);
    }
    Ok(out)
}

/// Linear symmetries: orthonormal Hermitian basis of the commutant of `ops`.
pub fn commutant_basis<T: Real>(
    ops: &[HermitianMatrix<T>],
    opts: &SymmetrySearch<T>,
) -> Result<Vec<Symmetry<T>>> {
    let d = common_dimension(ops)?;
    let basis = hermitian_nullspace(ops.iter().map(|h| h.matrix()), d, opts)?;
    Ok(basis
        .into_iter()
        .enumerate()
        .map(|(k, m)| Symmetry::linear(m, format!("commutant element {k}")))
        .collect())
}

/// Quadratic symmetries: Hermitian basis of operators on `H ⊗ H` commuting
/// with `ι(X)` for every `X` in `ops`.
pub fn quadratic_symmetry_basis<T: Real>(
    ops: &[HermitianMatrix<T>],
    opts: &SymmetrySearch<T>,
) -> Result<Vec<Symmetry<T>>> {
    let d = common_dimension(ops)?;
    let n = d * d;
    check_entry_cap(n * n, n * n, opts.entry_cap)?;
    let lifted = ops
        .iter()
        .map(|h| iota_capped(h, opts.entry_cap).map(HermitianMatrix::into_matrix))
        .collect::<Result<Vec<_>>>()?;
    let basis = hermitian_nullspace(lifted.iter(), n, opts)?;
    basis
        .into_iter()
        .enumerate()
        .map(|(k, m)| Symmetry::quadratic(m, format!("quadratic symmetry {k}")))
        .collect()
}

/// `‖[U, S]‖_F` for linear `S`, `‖[U ⊗ U, S]‖_F` for quadratic `S`.
pub fn symmetry_breaking_norm<T: Real>(s: &Symmetry<T>, target: &UnitaryMatrix<T>) -> Result<T> {
    if target.dim() != s.system_dim() {
        return Err(Error::Dimension(format!(
            "target dimension {} does not match symmetry system dimension {}",
            target.dim(),
            s.system_dim()
        )));
    }
    let c = match s.kind {
        SymmetryKind::Linear => commutator(target.matrix(), s.matrix.matrix())?,
        SymmetryKind::Quadratic => commutator(target.doubled().matrix(), s.matrix.matrix())?,
    };
    Ok(c.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{permutation_operator, transposition_operator, UnitaryMatrix};
    use crate::pauli::{self, Pauli};

    fn herm(m: ComplexMatrix<f64>) -> HermitianMatrix<f64> {
        HermitianMatrix::new(m).unwrap()
    }

    fn local_controls() -> Vec<HermitianMatrix<f64>> {
        [(0, Pauli::X), (0, Pauli::Z), (1, Pauli::X), (1, Pauli::Z)]
            .iter()
            .map(|&f| herm(pauli::string(2, &[f])))
            .collect()
    }

    fn concurrence_symmetry() -> ComplexMatrix<f64> {
        let dims = [2, 2, 2, 2];
        let m13 = transposition_operator::<f64>(0, 2, &dims).unwrap();
        let m24 = transposition_operator::<f64>(1, 3, &dims).unwrap();
        let both = permutation_operator::<f64>(&[2, 3, 0, 1], &dims).unwrap();
        ComplexMatrix::identity(16, 16) - m13.matrix() - m24.matrix() + both.matrix()
    }

    #[test]
    fn closure_dimensions() {
        let tol = default_rank_tolerance::<f64>();
        let x = herm(pauli::x());
        assert_eq!(lie_closure(std::slice::from_ref(&x), 10, tol).unwrap().len(), 1);
        let su2 = lie_closure(&[x, herm(pauli::z())], 10, tol).unwrap();
        assert_eq!(su2.len(), 3);
        assert!(su2.is_closed());

        let mut gens = vec![herm(pauli::string(2, &[(0, Pauli::Z), (1, Pauli::Z)]))];
        gens.extend(local_controls());
        assert_eq!(lie_closure(&gens, 64, tol).unwrap().len(), 15);
        assert_eq!(lie_closure(&local_controls(), 64, tol).unwrap().len(), 6);
    }

    #[test]
    fn closure_truncation_carries_partial_basis() {
        let gens = [herm(pauli::x()), herm(pauli::z())];
        match lie_closure(&gens, 2, 1e-9) {
            Err(ClosureError::Truncated(partial)) => {
                assert_eq!(partial.len(), 2);
                assert!(!partial.is_closed());
            }
            other => panic!("expected truncation, got {other:?}"),
        }
    }

    #[test]
    fn closure_is_closed_under_commutators() {
        let mut gens = vec![herm(pauli::string(2, &[(0, Pauli::Z), (1, Pauli::Z)]))];
        gens.push(herm(pauli::string(2, &[(0, Pauli::X)])));
        let basis = lie_closure(&gens, 64, 1e-9).unwrap();
        for a in basis.elements() {
            for b in basis.elements() {
                let c = commutator(a, b).unwrap();
                let h = herm(c.map(|z| z * -ci::<f64>()));
                assert!(project_onto_span(&h, &basis).unwrap().residual <= 1e-8);
            }
        }
    }

    #[test]
    fn projection_examples() {
        let su2 = lie_closure(&[herm(pauli::x()), herm(pauli::z())], 10, 1e-9).unwrap();
        let p = project_onto_span(&herm(pauli::x()), &su2).unwrap();
        assert!(p.residual < 1e-12 && p.member);

        let local = lie_closure(&local_controls(), 64, 1e-9).unwrap();
        let zz = herm(pauli::string(2, &[(0, Pauli::Z), (1, Pauli::Z)]));
        let p = project_onto_span(&zz, &local).unwrap();
        assert!((p.residual - 2.0).abs() < 1e-12);
        assert!(!p.member);

        let p = project_onto_span(&HermitianMatrix::zeros(4), &local).unwrap();
        assert_eq!(p.residual, 0.0);
        assert!(project_onto_span(&herm(pauli::x()), &local).is_err());
    }

    #[test]
    fn commutant_examples() {
        let opts = SymmetrySearch::default();
        let z_comm = commutant_basis(&[herm(pauli::z())], &opts).unwrap();
        assert_eq!(z_comm.len(), 2);
        for s in &z_comm {
            assert!(s.matrix.matrix()[(0, 1)].norm() < 1e-12);
        }

        let local = commutant_basis(&local_controls(), &opts).unwrap();
        assert_eq!(local.len(), 1);

        let n = 3;
        let globals = [herm(pauli::global(n, Pauli::X)), herm(pauli::global(n, Pauli::Z))];
        let comm = commutant_basis(&globals, &opts).unwrap();
        let closure = lie_closure(&globals, 64, 1e-9).unwrap();
        let dims = [2, 2, 2];
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let m = herm(transposition_operator::<f64>(i, j, &dims).unwrap().into_matrix());
            let mut rest = m.matrix().clone();
            for s in &comm {
                let c = hs_inner(s.matrix.matrix(), m.matrix()).re;
                rest -= s.matrix.matrix().map(|z| z * c);
            }
            assert!(rest.norm() < 1e-9, "swap ({i} {j}) not in commutant");
        }
        // Commutant of the generators equals the commutant of their closure.
        let herm_closure: Vec<_> = closure
            .elements()
            .iter()
            .map(|e| herm(e.map(|z| z * -ci::<f64>())))
            .collect();
        assert_eq!(commutant_basis(&herm_closure, &opts).unwrap().len(), comm.len());
    }

    #[test]
    fn traceless_search_drops_identity() {
        let opts = SymmetrySearch {
            traceless: true,
            ..SymmetrySearch::default()
        };
        let basis = commutant_basis(&[herm(pauli::z())], &opts).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0].matrix.trace().abs() < 1e-12);
    }

    #[test]
    fn quadratic_basis_contains_concurrence_symmetry() {
        let opts = SymmetrySearch::default();
        let basis = quadratic_symmetry_basis(&local_controls(), &opts).unwrap();
        let target = concurrence_symmetry();
        let mut rest = target.clone();
        for s in &basis {
            let c = hs_inner(s.matrix.matrix(), &target).re;
            rest -= s.matrix.matrix().map(|z| z * c);
        }
        assert!(rest.norm() <= 1e-8 * target.norm());
        for s in &basis {
            assert!(s.max_relative_residual(&local_controls()).unwrap() < 1e-9);
        }
    }

    #[test]
    fn schur_weyl_quadratic_commutant() {
        for d in [2usize, 3] {
            let mut su: Vec<HermitianMatrix<f64>> = Vec::new();
            for i in 0..d {
                for j in (i + 1)..d {
                    let mut a = ComplexMatrix::zeros(d, d);
                    a[(i, j)] = cr(1.0);
                    a[(j, i)] = cr(1.0);
                    su.push(herm(a.clone()));
                    let mut b = ComplexMatrix::zeros(d, d);
                    b[(i, j)] = -ci::<f64>();
                    b[(j, i)] = ci();
                    su.push(herm(b));
                }
                if i + 1 < d {
                    let mut h = ComplexMatrix::zeros(d, d);
                    h[(i, i)] = cr(1.0);
                    h[(i + 1, i + 1)] = cr(-1.0);
                    su.push(herm(h));
                }
            }
            let basis = quadratic_symmetry_basis(&su, &SymmetrySearch::default()).unwrap();
            assert_eq!(basis.len(), 2, "d = {d}");
        }
        assert!(quadratic_symmetry_basis::<f64>(&[], &SymmetrySearch::default()).is_err());
    }

    #[test]
    fn lifted_linear_symmetries_are_quadratic() {
        let ops = [herm(pauli::z())];
        let linear = commutant_basis(&ops, &SymmetrySearch::default()).unwrap();
        let quad = quadratic_symmetry_basis(&ops, &SymmetrySearch::default()).unwrap();
        for s in &linear {
            let lifted = iota_capped(&s.matrix, usize::MAX).unwrap();
            let mut rest = lifted.matrix().clone();
            for q in &quad {
                let c = hs_inner(q.matrix.matrix(), lifted.matrix()).re;
                rest -= q.matrix.matrix().map(|z| z * c);
            }
            assert!(rest.norm() < 1e-9);
        }
    }

    #[test]
    fn breaking_norm_examples() {
        let cnot = UnitaryMatrix::new(
            nalgebra::DMatrix::<f64>::from_row_slice(
                4,
                4,
                &[1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0],
            )
            .map(cr),
        )
        .unwrap();
        let id = Symmetry::linear(HermitianMatrix::identity(4), "identity");
        assert_eq!(symmetry_breaking_norm(&id, &cnot).unwrap(), 0.0);

        let s = Symmetry::quadratic(herm(concurrence_symmetry()), "concurrence").unwrap();
        let breaking = symmetry_breaking_norm(&s, &cnot).unwrap();
        // √2 · ‖S‖_F reproduces the √2/(4g) bound through the unitary theorem.
        assert!((breaking / s.frobenius_norm() - 2f64.sqrt()).abs() < 1e-12);
        assert!(s.sigma_min.is_some());
    }

    #[test]
    fn center_of_abelian_algebra() {
        let basis = lie_closure(&[herm(pauli::z())], 4, 1e-9).unwrap();
        assert_eq!(basis.center_dimension().unwrap(), 1);
        let su2 = lie_closure(&[herm(pauli::x()), herm(pauli::z())], 4, 1e-9).unwrap();
        assert_eq!(su2.center_dimension().unwrap(), 0);
    }
}
