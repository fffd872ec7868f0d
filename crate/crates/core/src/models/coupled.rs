use std::collections::BTreeMap;

use nalgebra::DMatrix;

use super::{ControlSystem, ModelBundle, RecommendedPerturbation, Target};
use crate::error::{Error, Result};
use crate::lie::Symmetry;
use crate::matcore::{permutation_operator, transposition_operator, ComplexMatrix, HermitianMatrix, UnitaryMatrix};
use crate::pauli::{self, Pauli};
use crate::perturb::Perturbation;
use crate::scalar::{cr, Real};

/// CNOT on two qubits, qubit 0 controlling qubit 1, basis `|q₀q₁⟩`.
pub fn cnot<T: Real>() -> UnitaryMatrix<T> {
    let m = DMatrix::<f64>::from_row_slice(
        4,
        4,
        &[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            0.0, 0.0, 1.0, 0.0,
        ],
    );
    UnitaryMatrix::from_raw(m.map(|v| cr(T::lit(v))))
}

/// SWAP of two `levels`-dimensional subsystems.
pub fn swap_gate<T: Real>(levels: usize) -> Result<UnitaryMatrix<T>> {
    permutation_operator(&[1, 0], &[levels, levels])
}

/// Two qubits with `H_d = g Z₁Z₂`, local controls and a CNOT target.
pub fn coupled_qubit_model<T: Real>(g: T) -> Result<ModelBundle<T>> {
    if !(g > T::zero()) {
        return Err(Error::InvalidArgument(format!("coupling g must be positive, got {g}")));
    }
    let zz = pauli::string::<T>(2, &[(0, Pauli::Z), (1, Pauli::Z)]);
    let drift = HermitianMatrix::new(zz.map(|z| z * g))?;
    let controls = [(0, Pauli::X), (0, Pauli::Z), (1, Pauli::X), (1, Pauli::Z)]
        .iter()
        .map(|&f| HermitianMatrix::new(pauli::string(2, &[f])))
        .collect::<Result<Vec<_>>>()?;
    let system = ControlSystem::new(drift.clone(), controls, "coupled qubits")?;

    let dims = [2, 2, 2, 2];
    let m13 = transposition_operator::<T>(0, 2, &dims)?;
    let m24 = transposition_operator::<T>(1, 3, &dims)?;
    let both = permutation_operator::<T>(&[2, 3, 0, 1], &dims)?;
    let s: ComplexMatrix<T> = ComplexMatrix::identity(16, 16) - m13.matrix() - m24.matrix() + both.matrix();
    let symmetry = Symmetry::quadratic(HermitianMatrix::new(s)?, "1 - M(1,3) - M(2,4) + M(1,3)(2,4)")?;
    let perturbation = Perturbation::from_matrix(&symmetry, &drift, drift.scaled(-T::one()))?;

    let sqrt2 = T::lit(2.0).sqrt();
    let pi = T::pi();
    let four = T::lit(4.0);
    let mut references = BTreeMap::new();
    references.insert("bound".to_string(), sqrt2 / (four * g));
    references.insert("literature_time".to_string(), pi / (four * g));
    references.insert("literature_ratio".to_string(), pi / sqrt2);
    references.insert("perturbation_operator_norm".to_string(), g);

    Ok(ModelBundle {
        name: "cnot".into(),
        system,
        target: Target::Unitary(cnot()),
        symmetry,
        perturbation: RecommendedPerturbation::Matrix(perturbation),
        references,
        spectral_estimates: None,
    })
}
