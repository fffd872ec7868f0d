//! Lower bounds on control time for bilinear quantum control systems, built
//! from symmetries of the control Hamiltonians.
//!
//! The crate is generic over the real scalar ([`Real`], implemented for `f32`
//! and `f64`). The aliases at the crate root fix the scalar to `f64`; the
//! [`single`] module carries the `f32` variants.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod lie;
pub mod matcore;
pub mod models;
pub mod pauli;
pub mod perturb;
pub mod scalar;
mod sparse;

pub use error::{Error, Result};
pub use scalar::Real;

pub type ComplexMatrix = matcore::ComplexMatrix<f64>;
pub type ComplexVector = matcore::ComplexVector<f64>;
pub type HermitianMatrix = matcore::HermitianMatrix<f64>;
pub type UnitaryMatrix = matcore::UnitaryMatrix<f64>;
pub type StateVector = matcore::StateVector<f64>;
pub type OperatorBasis = lie::OperatorBasis<f64>;
pub type Symmetry = lie::Symmetry<f64>;
pub type Perturbation = perturb::Perturbation<f64>;
pub type BoundReport = bounds::BoundReport<f64>;
pub type ChebyshevFilter = bounds::ChebyshevFilter<f64>;
pub type ControlSystem = models::ControlSystem<f64>;
pub type ModelBundle = models::ModelBundle<f64>;
pub type PulseSchedule = models::PulseSchedule<f64>;

/// Single-precision aliases.
pub mod single {
    pub type ComplexMatrix = crate::matcore::ComplexMatrix<f32>;
    pub type HermitianMatrix = crate::matcore::HermitianMatrix<f32>;
    pub type UnitaryMatrix = crate::matcore::UnitaryMatrix<f32>;
    pub type StateVector = crate::matcore::StateVector<f32>;
    pub type OperatorBasis = crate::lie::OperatorBasis<f32>;
    pub type Symmetry = crate::lie::Symmetry<f32>;
    pub type Perturbation = crate::perturb::Perturbation<f32>;
    pub type BoundReport = crate::bounds::BoundReport<f32>;
}
