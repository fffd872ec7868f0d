use std::collections::BTreeMap;

use super::{ControlSystem, ModelBundle, RecommendedPerturbation, Target};
use crate::error::{Error, Result};
use crate::lie::Symmetry;
use crate::matcore::{check_entry_cap, transposition_operator, HermitianMatrix, DEFAULT_ENTRY_CAP};
use crate::pauli::{self, Pauli};
use crate::perturb::Perturbation;
use crate::scalar::{cr, Real};

/// Largest chain for which `σ_min` of `ad²_{H_s}` is computed exactly.
const EXACT_GAP_MAX_ATOMS: usize = 6;

/// `σ_min` estimate used beyond [`EXACT_GAP_MAX_ATOMS`] when none is given.
const DEFAULT_SIGMA_MIN_ESTIMATE: f64 = 4e-6;

/// Parameters of a linear Rydberg array and its Ising target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RydbergParams<T> {
    /// van der Waals coefficient.
    pub c: T,
    /// Lattice spacing.
    pub a: T,
    pub j: T,
    pub g: T,
    pub h: T,
    /// Overrides the `σ_min` estimate for the Chebyshev filter.
    pub sigma_min_estimate: Option<T>,
}

impl<T: Real> Default for RydbergParams<T> {
    fn default() -> Self {
        Self {
            c: T::one(),
            a: T::one(),
            j: T::one(),
            g: T::lit(0.5),
            h: T::lit(0.5),
            sigma_min_estimate: None,
        }
    }
}

fn check<T: Real>(n: usize, p: &RydbergParams<T>) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("Rydberg chain needs N >= 3 atoms, got {n}")));
    }
    if n >= usize::BITS as usize / 2 {
        return Err(Error::DimensionCap { entries: usize::MAX, cap: DEFAULT_ENTRY_CAP });
    }
    check_entry_cap(1 << n, 1 << n, DEFAULT_ENTRY_CAP)?;
    if !(p.c > T::zero() && p.a > T::zero()) {
        return Err(Error::InvalidArgument("C and a must be positive".into()));
    }
    Ok(())
}

fn excited(state: usize, n: usize, atom: usize) -> bool {
    (state >> (n - atom)) & 1 == 1
}

fn inv6<T: Real>(k: usize) -> T {
    T::one() / T::from_usize_lossy(k).powi(6)
}

fn diagonal<T: Real>(n: usize, f: impl Fn(usize) -> T) -> HermitianMatrix<T> {
    let diag: Vec<T> = (0..1usize << n).map(f).collect();
    HermitianMatrix::from_real_diagonal(&diag)
}

/// `H_d = Σ_{i<j} C/(a⁶|i−j|⁶) n_i n_j` with `n = |1⟩⟨1|`.
pub fn rydberg_drift<T: Real>(n: usize, p: &RydbergParams<T>) -> Result<HermitianMatrix<T>> {
    check(n, p)?;
    let scale = p.c / p.a.powi(6);
    Ok(diagonal(n, |s| {
        let mut e = T::zero();
        for i in 1..=n {
            for j in i + 1..=n {
                if excited(s, n, i) && excited(s, n, j) {
                    e += scale * inv6::<T>(j - i);
                }
            }
        }
        e
    }))
}

/// Replaces the couplings of atoms 1 and 2 to every other atom by their
/// average, which restores the swap symmetry of the first two atoms.
pub fn rydberg_perturbation<T: Real>(n: usize, p: &RydbergParams<T>) -> Result<HermitianMatrix<T>> {
    check(n, p)?;
    let half = p.c / (T::lit(2.0) * p.a.powi(6));
    Ok(diagonal(n, |s| {
        let (n1, n2) = (excited(s, n, 1), excited(s, n, 2));
        let mut e = T::zero();
        for j in 3..=n {
            if !excited(s, n, j) {
                continue;
            }
            let diff = inv6::<T>(j - 2) - inv6::<T>(j - 1);
            if n1 {
                e += half * diff;
            }
            if n2 {
                e -= half * diff;
            }
        }
        e
    }))
}

/// `‖ΔH‖_∞ = C/(2a⁶) (1 − 1/(N−1)⁶)`.
pub fn rydberg_perturbation_norm<T: Real>(n: usize, p: &RydbergParams<T>) -> T {
    p.c / (T::lit(2.0) * p.a.powi(6)) * (T::one() - inv6::<T>(n - 1))
}

/// `H_s = J Σ Z_i Z_{i+1} + g Σ X_i + h Σ Z_i`.
pub fn rydberg_simulated_hamiltonian<T: Real>(n: usize, p: &RydbergParams<T>) -> Result<HermitianMatrix<T>> {
    check(n, p)?;
    let mut m = pauli::global::<T>(n, Pauli::X).map(|z| z * p.g) + pauli::global::<T>(n, Pauli::Z).map(|z| z * p.h);
    for q in 0..n - 1 {
        pauli::add_string(&mut m, n, cr(p.j), &[(q, Pauli::Z), (q + 1, Pauli::Z)]);
    }
    HermitianMatrix::new(m)
}

fn min_squared_gap<T: Real>(h: &HermitianMatrix<T>) -> Option<T> {
    let values = h.eigh().values;
    let floor = T::lit(1e-9) * h.operator_norm().max(T::one());
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    sorted
        .windows(2)
        .map(|w| w[1] - w[0])
        .filter(|&d| d > floor)
        .fold(None, |acc: Option<T>, d| Some(acc.map_or(d, |a| a.min(d))))
        .map(|d| d * d)
}

/// Linear Rydberg array with global `Σ X` and `Σ Z` controls, an Ising
/// target, and the (traceless) swap of the first two atoms as symmetry.
pub fn rydberg_chain_model<T: Real>(n: usize, p: &RydbergParams<T>) -> Result<ModelBundle<T>> {
    let drift = rydberg_drift(n, p)?;
    let controls = vec![
        HermitianMatrix::new(pauli::global(n, Pauli::X))?,
        HermitianMatrix::new(pauli::global(n, Pauli::Z))?,
    ];
    let system = ControlSystem::new(drift.clone(), controls, format!("rydberg chain N={n}"))?;
    let h_s = rydberg_simulated_hamiltonian(n, p)?;

    let swap = transposition_operator::<T>(0, 1, &vec![2; n])?;
    let symmetry = Symmetry::linear(HermitianMatrix::new(swap.into_matrix())?.traceless(), "swap(1,2) - tr/d");
    let delta = rydberg_perturbation(n, p)?;
    let perturbation = Perturbation::from_matrix(&symmetry, &drift, delta)?;

    let nn = T::from_usize_lossy(n);
    let term_norms = p.j.abs() * (nn - T::one()) + (p.g.abs() + p.h.abs()) * nn;
    let sigma_max = (T::lit(2.0) * term_norms).powi(2);
    let sigma_min = match p.sigma_min_estimate {
        Some(s) => s,
        None if n <= EXACT_GAP_MAX_ATOMS => min_squared_gap(&h_s).unwrap_or(sigma_max),
        None => T::lit(DEFAULT_SIGMA_MIN_ESTIMATE),
    };

    let mut references = BTreeMap::new();
    references.insert("perturbation_operator_norm".to_string(), rydberg_perturbation_norm(n, p));
    references.insert("asymptote".to_string(), T::lit(2.0).sqrt() * p.a.powi(6) / p.c);
    references.insert("hamiltonian_norm_bound".to_string(), term_norms);

    Ok(ModelBundle {
        name: "rydberg".into(),
        system,
        target: Target::Hamiltonian(h_s),
        symmetry,
        perturbation: RecommendedPerturbation::Matrix(perturbation),
        references,
        spectral_estimates: Some((sigma_min.min(sigma_max), sigma_max)),
    })
}
