use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::ControlSystem;
use crate::error::{Error, Result};
use crate::matcore::{check_entry_cap, hermitize, ComplexMatrix, HermitianMatrix, DEFAULT_ENTRY_CAP};
use crate::pauli::{self, Pauli};
use crate::scalar::{cr, Real};

fn qubits_for(n_majorana: usize) -> Result<usize> {
    if n_majorana < 4 || !n_majorana.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "Majorana count must be even and >= 4, got {n_majorana}"
        )));
    }
    let q = n_majorana / 2;
    if q >= usize::BITS as usize / 2 {
        return Err(Error::DimensionCap { entries: usize::MAX, cap: DEFAULT_ENTRY_CAP });
    }
    check_entry_cap(1 << q, 1 << q, DEFAULT_ENTRY_CAP)?;
    Ok(q)
}

/// Jordan–Wigner Majoranas on `n_majorana / 2` qubits:
/// `χ_{2q} = X_0⋯X_{q−1} Z_q / √2`, `χ_{2q+1} = X_0⋯X_{q−1} Y_q / √2`.
///
/// With this normalization `{χ_i, χ_j} = δ_ij`.
pub fn majorana_operators<T: Real>(n_majorana: usize) -> Result<Vec<HermitianMatrix<T>>> {
    let nq = qubits_for(n_majorana)?;
    let scale = cr(T::one() / T::lit(2.0).sqrt());
    let mut out = Vec::with_capacity(n_majorana);
    for q in 0..nq {
        for last in [Pauli::Z, Pauli::Y] {
            let mut factors: Vec<(usize, Pauli)> = (0..q).map(|p| (p, Pauli::X)).collect();
            factors.push((q, last));
            let mut m = ComplexMatrix::zeros(1 << nq, 1 << nq);
            pauli::add_string(&mut m, nq, scale, &factors);
            out.push(HermitianMatrix::new(m)?);
        }
    }
    Ok(out)
}

/// Independent entries of the antisymmetric SYK tensors.
#[derive(Debug, Clone, PartialEq)]
pub struct SykCouplings<T> {
    pub n_majorana: usize,
    /// `J_ijkl` for `i < j < k < l`, in lexicographic order.
    pub quartic: Vec<([usize; 4], T)>,
    /// `C_ij` for `i < j`, in lexicographic order.
    pub quadratic: Vec<([usize; 2], T)>,
}

impl<T: Real> SykCouplings<T> {
    /// Standard normal entries; all quartic entries are drawn before the
    /// quadratic ones.
    pub fn sample(n_majorana: usize, seed: u64) -> Result<Self> {
        qubits_for(n_majorana)?;
        let n = n_majorana;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || T::lit(rng.sample::<f64, _>(StandardNormal));
        let mut quartic = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        quartic.push(([i, j, k, l], draw()));
                    }
                }
            }
        }
        let mut quadratic = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                quadratic.push(([i, j], draw()));
            }
        }
        Ok(Self {
            n_majorana,
            quartic,
            quadratic,
        })
    }

    /// All-zero couplings.
    pub fn zeros(n_majorana: usize) -> Result<Self> {
        let mut s = Self::sample(n_majorana, 0)?;
        s.quartic.iter_mut().for_each(|e| e.1 = T::zero());
        s.quadratic.iter_mut().for_each(|e| e.1 = T::zero());
        Ok(s)
    }

    /// `(J_ijkl/4!) χ_i χ_j χ_k χ_l + (μ/4) C_ij C_kl χ_i χ_j χ_k χ_l`,
    /// summed over all index tuples with the tensors antisymmetrized.
    ///
    /// Antisymmetry turns the full sums into `Σ_{i<j<k<l} J_ijkl χ_iχ_jχ_kχ_l`
    /// and `(μ/4) A²` with `A = 2 Σ_{i<j} C_ij χ_iχ_j`.
    pub fn hamiltonian(&self, mu: T) -> Result<HermitianMatrix<T>> {
        let chi = majorana_operators::<T>(self.n_majorana)?;
        let d = chi[0].dim();
        let mut h = ComplexMatrix::<T>::zeros(d, d);
        for &([i, j, k, l], v) in &self.quartic {
            if v != T::zero() {
                h += (chi[i].matrix() * chi[j].matrix() * chi[k].matrix() * chi[l].matrix()).map(|z| z * v);
            }
        }
        if mu != T::zero() {
            let mut a = ComplexMatrix::<T>::zeros(d, d);
            for &([i, j], v) in &self.quadratic {
                a += (chi[i].matrix() * chi[j].matrix()).map(|z| z * (T::lit(2.0) * v));
            }
            h += (&a * &a).map(|z| z * (mu / T::lit(4.0)));
        }
        hermitize(&h)
    }
}

pub fn syk_couplings<T: Real>(n_majorana: usize, seed: u64) -> Result<SykCouplings<T>> {
    SykCouplings::sample(n_majorana, seed)
}

/// SYK Hamiltonian with couplings drawn from `seed`.
pub fn syk_model<T: Real>(n_majorana: usize, seed: u64, mu: T) -> Result<HermitianMatrix<T>> {
    SykCouplings::sample(n_majorana, seed)?.hamiltonian(mu)
}

/// NMR-like register for simulating SYK dynamics: global `Σ X` and `Σ Z`
/// controls over `H_d = Σ ω_q Z_q/2 + Σ_{p<q} J_pq Z_pZ_q/4` with fixed
/// `ω_q = 1 + 0.37 q` and `J_pq = 0.2/(q − p)`.
pub fn syk_control_system<T: Real>(n_qubits: usize) -> Result<ControlSystem<T>> {
    if n_qubits == 0 {
        return Err(Error::InvalidArgument("need at least one qubit".into()));
    }
    qubits_for(2 * n_qubits.max(2))?;
    let d = 1usize << n_qubits;
    let mut drift = ComplexMatrix::<T>::zeros(d, d);
    for q in 0..n_qubits {
        let omega = T::one() + T::lit(0.37) * T::from_usize_lossy(q);
        pauli::add_string(&mut drift, n_qubits, cr(omega / T::lit(2.0)), &[(q, Pauli::Z)]);
        for p in 0..q {
            let j = T::lit(0.2) / T::from_usize_lossy(q - p);
            pauli::add_string(&mut drift, n_qubits, cr(j / T::lit(4.0)), &[(p, Pauli::Z), (q, Pauli::Z)]);
        }
    }
    ControlSystem::new(
        HermitianMatrix::new(drift)?,
        vec![
            HermitianMatrix::new(pauli::global(n_qubits, Pauli::X))?,
            HermitianMatrix::new(pauli::global(n_qubits, Pauli::Z))?,
        ],
        format!("nmr register n={n_qubits}"),
    )
}
