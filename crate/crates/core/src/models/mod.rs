//! Built-in control systems with their recommended symmetries and reference
//! values, and a piecewise-constant propagator.
//!
//! Qubit 0 is the leftmost tensor factor and `|0⟩` is the `Z = +1` state.
//! Chain sites `1..N` map to basis vectors `0..N-1`.

mod chain;
mod coupled;
mod pulse;
mod rydberg;
mod syk;

use std::collections::BTreeMap;

pub use chain::{hopping_chain_closed_form, hopping_chain_model, hopping_chain_state, hopping_chain_symmetry_state};
pub use coupled::{cnot, coupled_qubit_model, swap_gate};
pub use pulse::{duhamel_check, propagate_piecewise, DuhamelCheck, PulseSchedule};
pub use rydberg::{
    rydberg_chain_model, rydberg_drift, rydberg_perturbation, rydberg_perturbation_norm, rydberg_simulated_hamiltonian,
    RydbergParams,
};
pub use syk::{majorana_operators, syk_control_system, syk_couplings, syk_model, SykCouplings};

use crate::bounds::{hamiltonian_speed_limit, unitary_speed_limit, BoundReport, DeltaSource, Projection};
use crate::error::{Error, Result};
use crate::lie::Symmetry;
use crate::matcore::{HermitianMatrix, UnitaryMatrix};
use crate::perturb::Perturbation;
use crate::scalar::Real;

/// `H(t) = H_d + Σ f_j(t) H_j`.
#[derive(Debug, Clone)]
pub struct ControlSystem<T: Real> {
    pub drift: HermitianMatrix<T>,
    pub controls: Vec<HermitianMatrix<T>>,
    pub label: String,
}

impl<T: Real> ControlSystem<T> {
    pub fn new(drift: HermitianMatrix<T>, controls: Vec<HermitianMatrix<T>>, label: impl Into<String>) -> Result<Self> {
        let d = drift.dim();
        if let Some(bad) = controls.iter().find(|h| h.dim() != d) {
            return Err(Error::Dimension(format!(
                "control dimension {} does not match drift dimension {d}",
                bad.dim()
            )));
        }
        Ok(Self {
            drift,
            controls,
            label: label.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.drift.dim()
    }

    /// Drift followed by the controls.
    pub fn generators(&self) -> Vec<HermitianMatrix<T>> {
        std::iter::once(self.drift.clone()).chain(self.controls.iter().cloned()).collect()
    }
}

#[derive(Debug, Clone)]
pub enum Target<T: Real> {
    Unitary(UnitaryMatrix<T>),
    Hamiltonian(HermitianMatrix<T>),
}

/// Perturbation attached to a model: an explicit matrix or only its norm.
#[derive(Debug, Clone)]
pub enum RecommendedPerturbation<T: Real> {
    Matrix(Perturbation<T>),
    Norm(T),
}

impl<T: Real> RecommendedPerturbation<T> {
    pub fn op_norm(&self) -> T {
        match self {
            RecommendedPerturbation::Matrix(p) => p.op_norm,
            RecommendedPerturbation::Norm(n) => *n,
        }
    }

    pub fn delta_source(&self) -> DeltaSource<'_, T> {
        match self {
            RecommendedPerturbation::Matrix(p) => DeltaSource::Perturbation(p),
            RecommendedPerturbation::Norm(n) => DeltaSource::OperatorNorm(*n),
        }
    }
}

/// A packaged example: system, target, symmetry, perturbation and
/// closed-form reference values.
#[derive(Debug, Clone)]
pub struct ModelBundle<T: Real> {
    pub name: String,
    pub system: ControlSystem<T>,
    pub target: Target<T>,
    pub symmetry: Symmetry<T>,
    pub perturbation: RecommendedPerturbation<T>,
    pub references: BTreeMap<String, T>,
    /// `(σ_min, σ_max)` estimates for the spectrum of `ad²_{H_s}`.
    pub spectral_estimates: Option<(T, T)>,
}

impl<T: Real> ModelBundle<T> {
    pub fn reference(&self, key: &str) -> Option<T> {
        self.references.get(key).copied()
    }

    /// Evaluates the matching theorem with the recommended symmetry and
    /// perturbation. `projection` is ignored for unitary targets.
    pub fn evaluate(&self, projection: &Projection<T>) -> Result<BoundReport<T>> {
        let delta = self.perturbation.delta_source();
        match &self.target {
            Target::Unitary(u) => unitary_speed_limit(u, &self.symmetry, delta),
            Target::Hamiltonian(h) => hamiltonian_speed_limit(h, &self.symmetry, delta, projection),
        }
    }
}
