use std::collections::BTreeMap;

use super::{ControlSystem, ModelBundle, RecommendedPerturbation, Target};
use crate::error::{Error, Result};
use crate::lie::Symmetry;
use crate::matcore::{ComplexMatrix, ComplexVector, HermitianMatrix, UnitaryMatrix};
use crate::perturb::Perturbation;
use crate::scalar::{cr, Real};

fn check_sites(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("hopping chain needs N >= 3 sites, got {n}")));
    }
    Ok(())
}

/// Eigenstate `|α_k⟩` of the uniform hopping chain, `k = 1..N`.
pub fn hopping_chain_state<T: Real>(n: usize, k: usize) -> ComplexVector<T> {
    let np1 = T::from_usize_lossy(n + 1);
    let norm = (T::lit(2.0) / np1).sqrt();
    ComplexVector::from_fn(n, |m, _| {
        let arg = T::pi() * T::from_usize_lossy(k * (m + 1)) / np1;
        cr(norm * arg.sin())
    })
}

/// `|α⟩ ∝ |α₂⟩ − (sin(2π/(N+1)) / sin(π/(N+1))) |α₁⟩`, orthogonal to site 1.
pub fn hopping_chain_symmetry_state<T: Real>(n: usize) -> ComplexVector<T> {
    let np1 = T::from_usize_lossy(n + 1);
    let ratio = (T::lit(2.0) * T::pi() / np1).sin() / (T::pi() / np1).sin();
    let v = hopping_chain_state::<T>(n, 2) - hopping_chain_state::<T>(n, 1).map(|z| z * ratio);
    let norm = v.norm();
    v.map(|z| z / cr(norm))
}

fn energy<T: Real>(n: usize, j: T, k: usize) -> T {
    T::lit(2.0) * j * (T::pi() * T::from_usize_lossy(k) / T::from_usize_lossy(n + 1)).cos()
}

/// `T_SWAP ≥ 2N² / (3π²J √(3 + 2cos(2π/(N+1)))) · √(2/(N+1)) · |sin(2πN/(N+1))|`.
pub fn hopping_chain_closed_form<T: Real>(n: usize, j: T) -> T {
    let nn = T::from_usize_lossy(n);
    let np1 = T::from_usize_lossy(n + 1);
    let pi = T::pi();
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let root = (three + two * (two * pi / np1).cos()).sqrt();
    two * nn * nn / (three * pi * pi * j * root) * (two / np1).sqrt() * (two * pi * nn / np1).sin().abs()
}

/// Uniform hopping chain with a single control on site 1 and a SWAP of the
/// end sites as target.
pub fn hopping_chain_model<T: Real>(n: usize, j: T) -> Result<ModelBundle<T>> {
    check_sites(n)?;
    if !(j > T::zero()) {
        return Err(Error::InvalidArgument(format!("hopping J must be positive, got {j}")));
    }
    let drift = HermitianMatrix::new(ComplexMatrix::from_fn(n, n, |a, b| {
        if a.abs_diff(b) == 1 {
            cr(j)
        } else {
            cr(T::zero())
        }
    }))?;
    let mut control = ComplexMatrix::zeros(n, n);
    control[(0, 0)] = cr(T::one());
    let system = ControlSystem::new(drift.clone(), vec![HermitianMatrix::new(control)?], "hopping chain")?;

    let mut swap = ComplexMatrix::<T>::identity(n, n);
    swap[(0, 0)] = cr(T::zero());
    swap[(n - 1, n - 1)] = cr(T::zero());
    swap[(0, n - 1)] = cr(T::one());
    swap[(n - 1, 0)] = cr(T::one());

    let alpha = hopping_chain_symmetry_state::<T>(n);
    let symmetry = Symmetry::linear(HermitianMatrix::projector(&alpha), "|alpha><alpha|");

    let gap = energy(n, j, 1) - energy(n, j, 2);
    let delta = HermitianMatrix::projector(&hopping_chain_state::<T>(n, 2)).scaled(gap);
    let perturbation = Perturbation::from_matrix(&symmetry, &drift, delta)?;

    let overlap = alpha[n - 1].re.abs();
    let pi = T::pi();
    let nn = T::from_usize_lossy(n);
    let mut references = BTreeMap::new();
    references.insert("gap_exact".to_string(), gap.abs());
    references.insert("gap_bound".to_string(), T::lit(3.0) * pi * pi * j / (nn * nn));
    references.insert("overlap_last_site".to_string(), overlap);
    references.insert("breaking_norm_printed".to_string(), T::lit(2.0) * overlap);
    references.insert("closed_form".to_string(), hopping_chain_closed_form(n, j));

    Ok(ModelBundle {
        name: "swap".into(),
        system,
        target: Target::Unitary(UnitaryMatrix::from_raw(swap)),
        symmetry,
        perturbation: RecommendedPerturbation::Matrix(perturbation),
        references,
        spectral_estimates: None,
    })
}
