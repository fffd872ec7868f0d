//! Speed-limit theorems for unitary and Hamiltonian targets.
//!
//! Every evaluator returns a [`BoundReport`] carrying the bound together with
//! the intermediate norms that produced it.

mod chebyshev;
mod kernel;
mod lemmas;
mod optimize;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use chebyshev::{chebyshev_filter_bound, sigma_max_estimate, ChebyshevEstimate, ChebyshevFilter};
pub use kernel::{kernel_complement_norm_commutator, kernel_complement_norm_exact, projection_lemma_bound, KernelNorm};
pub use lemmas::{kernel_complement_vector_norm, orbit_excursion, rotation_deviation};
pub use optimize::{optimize_symmetry, OptimizedSymmetry};

use crate::error::{Error, Result};
use crate::lie::{symmetry_breaking_norm, Symmetry, SymmetryKind};
use crate::matcore::{commutator, HermitianMatrix, UnitaryMatrix};
use crate::perturb::{perturbation_norm_bound, restore_symmetry, spectral_gap_min, Perturbation};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    T1a,
    T1b,
    T2a,
    T2b,
    #[serde(rename = "uniform")]
    Uniform,
    #[serde(rename = "single_control")]
    SingleControl,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T1a => "T1a",
            Theorem::T1b => "T1b",
            Theorem::T2a => "T2a",
            Theorem::T2b => "T2b",
            Theorem::Uniform => "uniform",
            Theorem::SingleControl => "single_control",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjectionMethod {
    Exact,
    Commutator,
    Chebyshev,
    NotApplicable,
}

impl fmt::Display for ProjectionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProjectionMethod::Exact => "exact",
            ProjectionMethod::Commutator => "commutator",
            ProjectionMethod::Chebyshev => "chebyshev",
            ProjectionMethod::NotApplicable => "not_applicable",
        })
    }
}

/// A lower bound on control time and how it was obtained.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T: Real> {
    pub bound_time: T,
    pub theorem: Theorem,
    pub projection_method: ProjectionMethod,
    pub intermediates: BTreeMap<String, T>,
    pub symmetry_kind: Option<SymmetryKind>,
    pub symmetry_note: Option<String>,
    pub warnings: Vec<String>,
}

impl<T: Real> BoundReport<T> {
    fn new(theorem: Theorem, method: ProjectionMethod) -> Self {
        Self {
            bound_time: T::zero(),
            theorem,
            projection_method: method,
            intermediates: BTreeMap::new(),
            symmetry_kind: None,
            symmetry_note: None,
            warnings: Vec::new(),
        }
    }

    fn with_symmetry(mut self, s: &Symmetry<T>) -> Self {
        self.symmetry_kind = Some(s.kind);
        self.symmetry_note = Some(s.note.clone());
        self.record("symmetry_frobenius_norm", s.frobenius_norm());
        if let Some(sigma) = s.sigma_min {
            self.record("sigma_min", sigma);
        }
        self
    }

    fn record(&mut self, key: &str, value: T) {
        self.intermediates.insert(key.to_string(), value);
    }

    pub fn intermediate(&self, key: &str) -> Option<T> {
        self.intermediates.get(key).copied()
    }
}

/// Where the perturbation size `‖ΔH‖_∞` comes from.
#[derive(Debug, Clone, Copy)]
pub enum DeltaSource<'a, T: Real> {
    Perturbation(&'a Perturbation<T>),
    /// A known value or over-estimate of `‖ΔH‖_∞`.
    OperatorNorm(T),
    /// Restore the symmetry to this drift with the pseudoinverse. For linear
    /// symmetries the analytic `‖[S, H_d]‖_F / σ_min` variant is reported too.
    Drift(&'a HermitianMatrix<T>),
}

struct ResolvedDelta<T: Real> {
    op_norm: T,
    analytic: Option<T>,
    drift_breaking: Option<T>,
}

fn resolve_delta<T: Real>(s: &Symmetry<T>, delta: DeltaSource<'_, T>) -> Result<ResolvedDelta<T>> {
    let resolved = match delta {
        DeltaSource::Perturbation(p) => ResolvedDelta {
            op_norm: p.op_norm,
            analytic: None,
            drift_breaking: None,
        },
        DeltaSource::OperatorNorm(n) => ResolvedDelta {
            op_norm: n,
            analytic: None,
            drift_breaking: None,
        },
        DeltaSource::Drift(h_d) => {
            let p = restore_symmetry(s, h_d)?;
            let (analytic, drift_breaking) = if s.kind == SymmetryKind::Linear && s.sigma_min.is_some() {
                let breaking = commutator(s.matrix.matrix(), h_d.matrix())?.norm();
                (Some(perturbation_norm_bound(s, h_d)?), Some(breaking))
            } else {
                (None, None)
            };
            ResolvedDelta {
                op_norm: p.op_norm,
                analytic,
                drift_breaking,
            }
        }
    };
    if !(resolved.op_norm > T::zero()) {
        return Err(Error::Degenerate("zero perturbation".into()));
    }
    Ok(resolved)
}

fn check_symmetry<T: Real>(s: &Symmetry<T>) -> Result<T> {
    let norm = s.frobenius_norm();
    if norm == T::zero() {
        return Err(Error::Degenerate("zero symmetry".into()));
    }
    Ok(norm)
}

/// `1 / (4‖ΔH‖_∞)`.
pub fn uniform_speed_limit<T: Real>(delta: &Perturbation<T>) -> Result<T> {
    uniform_speed_limit_from_norm(delta.op_norm)
}

pub fn uniform_speed_limit_from_norm<T: Real>(op_norm: T) -> Result<T> {
    if !(op_norm > T::zero()) {
        return Err(Error::Degenerate("zero perturbation".into()));
    }
    Ok(T::one() / (T::lit(4.0) * op_norm))
}

/// Report form of [`uniform_speed_limit`].
pub fn uniform_speed_limit_report<T: Real>(delta: &Perturbation<T>) -> Result<BoundReport<T>> {
    let mut report = BoundReport::new(Theorem::Uniform, ProjectionMethod::NotApplicable).with_symmetry(&delta.symmetry);
    report.bound_time = uniform_speed_limit(delta)?;
    report.record("perturbation_operator_norm", delta.op_norm);
    Ok(report)
}

/// Time needed to reach `target`.
///
/// Quadratic `S`: `‖[U ⊗ U, S]‖_F / (4‖S‖_F‖ΔH‖_∞)`. Linear `S`:
/// `‖[U, S]‖_F / (2‖S‖_F‖ΔH‖_∞)`.
pub fn unitary_speed_limit<T: Real>(
    target: &UnitaryMatrix<T>,
    s: &Symmetry<T>,
    delta: DeltaSource<'_, T>,
) -> Result<BoundReport<T>> {
    let s_norm = check_symmetry(s)?;
    let resolved = resolve_delta(s, delta)?;
    let breaking = symmetry_breaking_norm(s, target)?;
    let (theorem, factor) = match s.kind {
        SymmetryKind::Quadratic => (Theorem::T1a, T::lit(4.0)),
        SymmetryKind::Linear => (Theorem::T1b, T::lit(2.0)),
    };
    let mut report = BoundReport::new(theorem, ProjectionMethod::NotApplicable).with_symmetry(s);
    report.bound_time = breaking / (factor * s_norm * resolved.op_norm);
    report.record("breaking_norm", breaking);
    report.record("perturbation_operator_norm", resolved.op_norm);
    if let (Some(analytic), Some(drift_breaking)) = (resolved.analytic, resolved.drift_breaking) {
        report.record("drift_breaking_norm", drift_breaking);
        if analytic > T::zero() {
            report.record("bound_analytic", breaking / (factor * s_norm * analytic));
        }
    }
    Ok(report)
}

/// How the kernel-complement norm `‖(1 − P_ker)S‖_F` is evaluated.
#[derive(Debug, Clone, Copy)]
pub enum Projection<T: Real> {
    /// Diagonalize `H_s`; `tau` overrides the degeneracy tolerance.
    Exact { tau: Option<T> },
    Commutator,
    Chebyshev(ChebyshevFilter<T>),
}

impl<T: Real> Projection<T> {
    pub fn method(&self) -> ProjectionMethod {
        match self {
            Projection::Exact { .. } => ProjectionMethod::Exact,
            Projection::Commutator => ProjectionMethod::Commutator,
            Projection::Chebyshev(_) => ProjectionMethod::Chebyshev,
        }
    }
}

/// Numerator of the Hamiltonian bound, recorded into `report`.
fn kernel_numerator<T: Real>(
    h_s: &HermitianMatrix<T>,
    s: &Symmetry<T>,
    projection: &Projection<T>,
    report: &mut BoundReport<T>,
) -> Result<T> {
    let value = match projection {
        Projection::Exact { tau } => {
            let k = kernel_complement_norm_exact(h_s, s, *tau)?;
            report.record("degeneracy_tolerance", k.tolerance);
            if k.near_degenerate > 0 {
                report.warnings.push(format!(
                    "{} eigenvalue differences of H_s lie within 10x the degeneracy tolerance",
                    k.near_degenerate
                ));
            }
            k.value
        }
        Projection::Commutator => kernel_complement_norm_commutator(h_s, s)?,
        Projection::Chebyshev(filter) => {
            let est = chebyshev_filter_bound(h_s, s, filter)?;
            report.record("epsilon", est.epsilon);
            report.record("chebyshev_degree", T::from_usize_lossy(filter.degree()));
            report.record("chebyshev_sigma_min", filter.sigma_min());
            report.record("chebyshev_sigma_max", filter.sigma_max());
            report.record("filtered_norm", est.filtered_norm);
            report.record("kernel_complement_reverse_triangle", est.reverse_triangle);
            report.record("kernel_complement_orthogonal", est.orthogonal);
            est.lower_bound
        }
    };
    report.record("kernel_complement_norm", value);
    Ok(value)
}

/// Time after which the orbit of `e^{-iH_s t}` can no longer be followed.
///
/// Quadratic `S`: `‖(1 − P)S‖_F / (2√2‖S‖_F‖ΔH‖_∞)`. Linear `S`:
/// `‖(1 − P)S‖_F / (√2‖S‖_F‖ΔH‖_∞)`. The numerator comes from `projection`.
/// The commutator weakening `‖[H_s, S]‖_F / (2‖H_s‖_∞)` and, for linear `S`
/// with a drift, the `σ_min / ‖[S, H_d]‖_F` tail are reported alongside.
pub fn hamiltonian_speed_limit<T: Real>(
    h_s: &HermitianMatrix<T>,
    s: &Symmetry<T>,
    delta: DeltaSource<'_, T>,
    projection: &Projection<T>,
) -> Result<BoundReport<T>> {
    let s_norm = check_symmetry(s)?;
    let resolved = resolve_delta(s, delta)?;
    let (theorem, factor) = match s.kind {
        SymmetryKind::Quadratic => (Theorem::T2a, T::lit(2.0) * T::lit(2.0).sqrt()),
        SymmetryKind::Linear => (Theorem::T2b, T::lit(2.0).sqrt()),
    };
    let mut report = BoundReport::new(theorem, projection.method()).with_symmetry(s);
    let numerator = kernel_numerator(h_s, s, projection, &mut report)?;
    report.bound_time = numerator / (factor * s_norm * resolved.op_norm);
    report.record("perturbation_operator_norm", resolved.op_norm);
    report.record("hamiltonian_operator_norm", h_s.operator_norm());
    if let (Some(analytic), Some(drift_breaking)) = (resolved.analytic, resolved.drift_breaking) {
        report.record("drift_breaking_norm", drift_breaking);
        if analytic > T::zero() {
            report.record("bound_analytic", numerator / (factor * s_norm * analytic));
        }
    }
    Ok(report)
}

/// `‖[U, H_c]‖_F σ_min / (2‖H_c‖_F‖[H_c, H_d]‖_F)` for a single control.
pub fn single_control_bound<T: Real>(
    drift: &HermitianMatrix<T>,
    control: &HermitianMatrix<T>,
    target: &UnitaryMatrix<T>,
) -> Result<BoundReport<T>> {
    let drift_breaking = commutator(control.matrix(), drift.matrix())?.norm();
    let scale = control.frobenius_norm() * drift.frobenius_norm();
    if drift_breaking <= T::base_tolerance() * scale || drift_breaking == T::zero() {
        return Err(Error::Degenerate(
            "control commutes with drift (division by zero)".into(),
        ));
    }
    let sigma = spectral_gap_min(control)?;
    let breaking = commutator(target.matrix(), control.matrix())?.norm();
    let mut report = BoundReport::new(Theorem::SingleControl, ProjectionMethod::NotApplicable)
        .with_symmetry(&Symmetry::linear(control.clone(), "single control"));
    report.bound_time = breaking * sigma / (T::lit(2.0) * control.frobenius_norm() * drift_breaking);
    report.record("breaking_norm", breaking);
    report.record("drift_breaking_norm", drift_breaking);
    Ok(report)
}
