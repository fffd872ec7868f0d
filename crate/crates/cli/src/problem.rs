//! Problem files: a control system, a target and evaluation options.

use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};
use symqsl::lie::SymmetryKind;
use symqsl::matcore::{check_entry_cap, ComplexMatrix, HermitianMatrix, UnitaryMatrix, DEFAULT_ENTRY_CAP};
use symqsl::models::{cnot, ControlSystem, Target};

use crate::expr::{parse_pauli_expression, ParseError};
use crate::InputError;

/// Dense matrix as rows of `[re, im]` pairs.
pub type DenseMatrix = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum HamSpec {
    Pauli(String),
    Matrix(DenseMatrix),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedGate {
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "SWAP")]
    Swap,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitarySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<NamedGate>,
    /// Qubits a named gate acts on; defaults to `[0, 1]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qubits: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<DenseMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum TargetSpec {
    Unitary(UnitarySpec),
    Hamiltonian(HamSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Commutator,
    Chebyshev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Linear,
    Quadratic,
}

impl From<Kind> for SymmetryKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Linear => SymmetryKind::Linear,
            Kind::Quadratic => SymmetryKind::Quadratic,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_max: Option<f64>,
    /// Random starts for the symmetry optimizer; absent means no optimization.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimize_symmetry: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Rank tolerance for symmetry discovery.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl Options {
    /// Fields set in `other` replace those in `self`.
    pub fn overridden_by(&self, other: &Options) -> Options {
        Options {
            kind: other.kind.or(self.kind),
            method: other.method.or(self.method),
            degree: other.degree.or(self.degree),
            sigma_min: other.sigma_min.or(self.sigma_min),
            sigma_max: other.sigma_max.or(self.sigma_max),
            optimize_symmetry: other.optimize_symmetry.or(self.optimize_symmetry),
            seed: other.seed.or(self.seed),
            tol: other.tol.or(self.tol),
        }
    }
}

/// Problem file as written on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qubits: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    pub drift: HamSpec,
    pub controls: Vec<HamSpec>,
    pub target: TargetSpec,
    /// Feasible `ΔH`; when absent the symmetry is restored by pseudoinverse.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perturbation: Option<HamSpec>,
    #[serde(default)]
    pub options: Options,
}

/// Validated matrices of a [`ProblemSpec`].
#[derive(Debug, Clone)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub dim: usize,
    pub system: ControlSystem<f64>,
    pub target: Target<f64>,
    pub perturbation: Option<HermitianMatrix<f64>>,
}

const MAX_QUBITS: usize = 10;

fn dense(rows: &DenseMatrix, dim: usize, what: &str) -> Result<ComplexMatrix<f64>, InputError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(InputError::Dimension(format!("{what} must be a {dim}x{dim} matrix")));
    }
    if rows.iter().flatten().flatten().any(|v| !v.is_finite()) {
        return Err(InputError::Schema(format!("{what} has non-finite entries")));
    }
    Ok(ComplexMatrix::from_fn(dim, dim, |i, j| Complex::new(rows[i][j][0], rows[i][j][1])))
}

fn hamiltonian(spec: &HamSpec, qubits: Option<usize>, dim: usize, what: &str) -> Result<HermitianMatrix<f64>, InputError> {
    match spec {
        HamSpec::Pauli(text) => {
            let n = qubits.ok_or_else(|| InputError::Schema(format!("{what}: Pauli expressions need `qubits`")))?;
            parse_pauli_expression(text, n).map_err(|e: ParseError| InputError::Expression {
                what: what.to_string(),
                source: e,
            })
        }
        HamSpec::Matrix(rows) => HermitianMatrix::new(dense(rows, dim, what)?)
            .map_err(|e| InputError::Schema(format!("{what}: {e}"))),
    }
}

fn named_unitary(gate: NamedGate, qubits: Option<usize>, on: [usize; 2]) -> Result<UnitaryMatrix<f64>, InputError> {
    let n = qubits.ok_or_else(|| InputError::Schema("named gates need `qubits`".into()))?;
    let [a, b] = on;
    if a == b || a >= n || b >= n {
        return Err(InputError::Dimension(format!("gate qubits {on:?} invalid for {n} qubits")));
    }
    let d = 1usize << n;
    let bit = |state: usize, q: usize| (state >> (n - 1 - q)) & 1;
    let flip = |state: usize, q: usize| state ^ (1 << (n - 1 - q));
    let image = |s: usize| match gate {
        NamedGate::Cnot if bit(s, a) == 1 => flip(s, b),
        NamedGate::Cnot => s,
        NamedGate::Swap if bit(s, a) != bit(s, b) => flip(flip(s, a), b),
        NamedGate::Swap => s,
    };
    let mut m = ComplexMatrix::<f64>::zeros(d, d);
    for s in 0..d {
        m[(image(s), s)] = Complex::new(1.0, 0.0);
    }
    if n == 2 && on == [0, 1] && gate == NamedGate::Cnot {
        return Ok(cnot());
    }
    UnitaryMatrix::new(m).map_err(|e| InputError::Schema(e.to_string()))
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem specs serialize")
    }

    fn dimension(&self) -> Result<usize, InputError> {
        let from_qubits = match self.qubits {
            Some(0) => return Err(InputError::Dimension("`qubits` must be positive".into())),
            Some(n) if n > MAX_QUBITS => {
                return Err(InputError::Dimension(format!("at most {MAX_QUBITS} qubits are supported")))
            }
            Some(n) => Some(1usize << n),
            None => None,
        };
        match (from_qubits, self.dimension) {
            (Some(a), Some(b)) if a != b => Err(InputError::Dimension(format!(
                "`dimension` {b} disagrees with 2^qubits = {a}"
            ))),
            (Some(a), _) => Ok(a),
            (None, Some(0)) => Err(InputError::Dimension("`dimension` must be positive".into())),
            (None, Some(b)) => {
                check_entry_cap(b, b, DEFAULT_ENTRY_CAP).map_err(|e| InputError::Dimension(e.to_string()))?;
                Ok(b)
            }
            (None, None) => Err(InputError::Schema("one of `qubits` or `dimension` is required".into())),
        }
    }

    /// Builds and checks every matrix.
    pub fn build(self) -> Result<Problem, InputError> {
        let dim = self.dimension()?;
        let q = self.qubits;
        let drift = hamiltonian(&self.drift, q, dim, "drift")?;
        let controls = self
            .controls
            .iter()
            .enumerate()
            .map(|(k, c)| hamiltonian(c, q, dim, &format!("control {k}")))
            .collect::<Result<Vec<_>, _>>()?;
        if controls.is_empty() {
            return Err(InputError::Schema("at least one control is required".into()));
        }
        let system = ControlSystem::new(drift, controls, "problem file").map_err(|e| InputError::Dimension(e.to_string()))?;
        let target = match &self.target {
            TargetSpec::Hamiltonian(h) => Target::Hamiltonian(hamiltonian(h, q, dim, "target")?),
            TargetSpec::Unitary(u) => Target::Unitary(match (&u.named, &u.matrix) {
                (Some(g), None) => named_unitary(*g, q, u.qubits.unwrap_or([0, 1]))?,
                (None, Some(m)) => {
                    if u.qubits.is_some() {
                        return Err(InputError::Schema("`qubits` only applies to named gates".into()));
                    }
                    UnitaryMatrix::new(dense(m, dim, "target")?).map_err(|e| InputError::Schema(format!("target: {e}")))?
                }
                _ => return Err(InputError::Schema("unitary target needs exactly one of `named` or `matrix`".into())),
            }),
        };
        let perturbation = self
            .perturbation
            .as_ref()
            .map(|p| hamiltonian(p, q, dim, "perturbation"))
            .transpose()?;
        if let Some(d) = self.options.degree {
            if d == 0 {
                return Err(InputError::Schema("`degree` must be positive".into()));
            }
        }
        Ok(Problem {
            spec: self,
            dim,
            system,
            target,
            perturbation,
        })
    }
}

pub fn load_problem(path: &Path) -> Result<Problem, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    ProblemSpec::from_json(&text)?.build()
}
