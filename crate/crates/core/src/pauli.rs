//! Pauli matrices and dense Pauli strings.
//!
//! Qubit 0 is the leftmost tensor factor (most significant bit of the basis
//! index) and `|0⟩` is the `+1` eigenstate of `Z`.

use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::matcore::ComplexMatrix;
use crate::scalar::{c, ci, cone, cr, czero, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_char(ch: char) -> Option<Self> {
        match ch {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    pub fn matrix<T: Real>(self) -> ComplexMatrix<T> {
        match self {
            Pauli::I => ComplexMatrix::identity(2, 2),
            Pauli::X => x(),
            Pauli::Y => y(),
            Pauli::Z => z(),
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pauli::I => "I",
            Pauli::X => "X",
            Pauli::Y => "Y",
            Pauli::Z => "Z",
        };
        f.write_str(s)
    }
}

pub fn x<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_row_slice(2, 2, &[czero(), cone(), cone(), czero()])
}

pub fn y<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_row_slice(2, 2, &[czero(), -ci::<T>(), ci(), czero()])
}

pub fn z<T: Real>() -> ComplexMatrix<T> {
    ComplexMatrix::from_row_slice(2, 2, &[cone(), czero(), czero(), -cone::<T>()])
}

/// Dense matrix of a tensor product of Paulis on `n_qubits` qubits.
///
/// Factors not listed act as the identity. Repeated qubits multiply in the
/// order given.
pub fn string<T: Real>(n_qubits: usize, factors: &[(usize, Pauli)]) -> ComplexMatrix<T> {
    let mut out = ComplexMatrix::zeros(1 << n_qubits, 1 << n_qubits);
    add_string(&mut out, n_qubits, cone(), factors);
    out
}

/// Accumulates `coeff · P` into `acc`, where `P` is a Pauli string.
///
/// A Pauli string is a phased permutation, so this costs `O(2^n)`.
pub fn add_string<T: Real>(
    acc: &mut ComplexMatrix<T>,
    n_qubits: usize,
    coeff: Complex<T>,
    factors: &[(usize, Pauli)],
) {
    let dim = 1usize << n_qubits;
    debug_assert_eq!(acc.nrows(), dim);
    for col in 0..dim {
        let mut row = col;
        let mut phase = coeff;
        for &(q, p) in factors {
            debug_assert!(q < n_qubits);
            let bit = n_qubits - 1 - q;
            let set = (row >> bit) & 1 == 1;
            match p {
                Pauli::I => {}
                Pauli::X => row ^= 1 << bit,
                Pauli::Y => {
                    // Y|0⟩ = i|1⟩, Y|1⟩ = −i|0⟩
                    phase *= if set { -ci::<T>() } else { ci() };
                    row ^= 1 << bit;
                }
                Pauli::Z => {
                    if set {
                        phase = -phase;
                    }
                }
            }
        }
        acc[(row, col)] += phase;
    }
}

/// `Σ_i P_i` over all qubits.
pub fn global<T: Real>(n_qubits: usize, p: Pauli) -> ComplexMatrix<T> {
    let mut out = ComplexMatrix::zeros(1 << n_qubits, 1 << n_qubits);
    for q in 0..n_qubits {
        add_string(&mut out, n_qubits, cone(), &[(q, p)]);
    }
    out
}

/// Projector `|1⟩⟨1|` on qubit `q`, i.e. `(1 − Z_q)/2`.
pub fn excited_projector<T: Real>(n_qubits: usize, q: usize) -> ComplexMatrix<T> {
    let dim = 1usize << n_qubits;
    let bit = n_qubits - 1 - q;
    ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i == j && (i >> bit) & 1 == 1 {
            cr(T::one())
        } else {
            c(T::zero(), T::zero())
        }
    })
}
