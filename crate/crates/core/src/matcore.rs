//! Dense complex matrix kernel.
//!
//! Matrices are `nalgebra` dynamic matrices over `Complex<T>`. Two validated
//! wrappers, [`HermitianMatrix`] and [`UnitaryMatrix`], carry the invariants
//! the rest of the crate relies on. Vectorization is row-major (rows are
//! stacked), and the Kronecker convention is
//! `(A⊗B)[(i·dB + k), (j·dB + l)] = A[i,j]·B[k,l]`, so that
//! `vec(A Y B) = (A ⊗ Bᵀ) vec(Y)` holds with the same index layout.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{abs2, ci, cone, cr, czero, unit_floor, Real};

pub type ComplexMatrix<T> = DMatrix<Complex<T>>;
pub type ComplexVector<T> = DVector<Complex<T>>;

/// Largest number of dense entries any routine will materialize by default.
pub const DEFAULT_ENTRY_CAP: usize = 1 << 20;

pub fn check_entry_cap(rows: usize, cols: usize, cap: usize) -> Result<()> {
    match rows.checked_mul(cols) {
        Some(entries) if entries <= cap => Ok(()),
        Some(entries) => Err(Error::DimensionCap { entries, cap }),
        None => Err(Error::DimensionCap { entries: usize::MAX, cap }),
    }
}

fn require_square<T: Real>(m: &ComplexMatrix<T>, what: &str) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "{what} must be square, got {}x{}",
            m.nrows(),
            m.ncols()
        )))
    }
}

fn require_same_square<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<()> {
    require_square(a, "left operand")?;
    require_square(b, "right operand")?;
    if a.nrows() != b.nrows() {
        return Err(Error::Dimension(format!(
            "operands have dimensions {} and {}",
            a.nrows(),
            b.nrows()
        )));
    }
    Ok(())
}

/// `‖M − M†‖_F`.
pub fn hermiticity_deviation<T: Real>(m: &ComplexMatrix<T>) -> T {
    (m - m.adjoint()).norm()
}

/// Hilbert–Schmidt inner product `Tr(A† B)`.
pub fn hs_inner<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Complex<T> {
    a.iter().zip(b.iter()).fold(czero(), |acc, (x, y)| acc + x.conj() * y)
}

/// Hermitian matrix, validated at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T: Real> {
    m: ComplexMatrix<T>,
}

/// Eigendecomposition of a Hermitian matrix with ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct Eigh<T: Real> {
    pub values: Vec<T>,
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: ComplexMatrix<T>,
}

impl<T: Real> HermitianMatrix<T> {
    pub fn new(m: ComplexMatrix<T>) -> Result<Self> {
        Self::with_tolerance(m, T::base_tolerance())
    }

    /// Accepts `m` when `‖M − M†‖_F ≤ tol · max(1, ‖M‖_F)`; the stored
    /// matrix is the exact symmetrization.
    pub fn with_tolerance(m: ComplexMatrix<T>, tol: T) -> Result<Self> {
        require_square(&m, "Hermitian matrix")?;
        let deviation = hermiticity_deviation(&m);
        let allowed = tol * unit_floor(m.norm());
        if deviation > allowed {
            return Err(Error::NotHermitian {
                deviation: deviation.as_f64(),
                tolerance: allowed.as_f64(),
            });
        }
        Ok(Self::symmetrized(m))
    }

    fn symmetrized(m: ComplexMatrix<T>) -> Self {
        let half = T::lit(0.5);
        let sym = (&m + m.adjoint()).map(|z| z * half);
        Self { m: sym }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            m: ComplexMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            m: ComplexMatrix::zeros(dim, dim),
        }
    }

    pub fn from_real_diagonal(diag: &[T]) -> Self {
        let d = diag.len();
        let mut m = ComplexMatrix::zeros(d, d);
        for (k, &x) in diag.iter().enumerate() {
            m[(k, k)] = cr(x);
        }
        Self { m }
    }

    /// `|v⟩⟨v|`.
    pub fn projector(v: &ComplexVector<T>) -> Self {
        Self {
            m: v * v.adjoint(),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.m
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.m
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            m: self.m.map(|z| z * s),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        require_same_square(&self.m, &other.m)?;
        Ok(Self {
            m: &self.m + &other.m,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        require_same_square(&self.m, &other.m)?;
        Ok(Self {
            m: &self.m - &other.m,
        })
    }

    /// Adds `shift · 1`.
    pub fn shifted(&self, shift: T) -> Self {
        let mut m = self.m.clone();
        for k in 0..m.nrows() {
            m[(k, k)] += cr(shift);
        }
        Self { m }
    }

    /// Removes the identity component, `M − Tr(M)/d · 1`.
    pub fn traceless(&self) -> Self {
        let d = T::from_usize_lossy(self.dim());
        self.shifted(-self.trace() / d)
    }

    pub fn trace(&self) -> T {
        (0..self.dim()).fold(T::zero(), |acc, k| acc + self.m[(k, k)].re)
    }

    pub fn eigh(&self) -> Eigh<T> {
        let eig = SymmetricEigen::new(self.m.clone());
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| {
            eig.eigenvalues[a]
                .partial_cmp(&eig.eigenvalues[b])
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let vectors = ComplexMatrix::from_fn(self.dim(), self.dim(), |i, j| {
            eig.eigenvectors[(i, order[j])]
        });
        Eigh { values, vectors }
    }

    /// Largest eigenvalue modulus.
    pub fn operator_norm(&self) -> T {
        if self.dim() == 0 {
            return T::zero();
        }
        self.eigh()
            .values
            .iter()
            .fold(T::zero(), |acc, &v| if v.abs() > acc { v.abs() } else { acc })
    }

    pub fn frobenius_norm(&self) -> T {
        self.m.norm()
    }

    /// True when the matrix equals `c·1` within `tol · max(1, ‖M‖_F)`.
    pub fn is_multiple_of_identity(&self, tol: T) -> bool {
        let traceless = self.traceless();
        traceless.frobenius_norm() <= tol * unit_floor(self.frobenius_norm())
    }
}

/// Unitary matrix, validated at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix<T: Real> {
    m: ComplexMatrix<T>,
}

impl<T: Real> UnitaryMatrix<T> {
    pub fn new(m: ComplexMatrix<T>) -> Result<Self> {
        Self::with_tolerance(m, T::base_tolerance())
    }

    /// Accepts `m` when `‖M†M − 1‖_F ≤ tol · √d`.
    pub fn with_tolerance(m: ComplexMatrix<T>, tol: T) -> Result<Self> {
        require_square(&m, "unitary matrix")?;
        let d = m.nrows();
        let deviation = (m.adjoint() * &m - ComplexMatrix::identity(d, d)).norm();
        let allowed = tol * T::from_usize_lossy(d).sqrt();
        if deviation > allowed {
            return Err(Error::NotUnitary {
                deviation: deviation.as_f64(),
                tolerance: allowed.as_f64(),
            });
        }
        Ok(Self { m })
    }

    pub(crate) fn from_raw(m: ComplexMatrix<T>) -> Self {
        Self { m }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            m: ComplexMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.m
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.m
    }

    pub fn adjoint(&self) -> Self {
        Self {
            m: self.m.adjoint(),
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        require_same_square(&self.m, &other.m)?;
        Ok(Self {
            m: &self.m * &other.m,
        })
    }

    /// `U ⊗ U`.
    pub fn doubled(&self) -> Self {
        Self {
            m: kron(&self.m, &self.m),
        }
    }
}

/// State vector, optionally flagged as normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Real> {
    data: ComplexVector<T>,
    unit: bool,
}

impl<T: Real> StateVector<T> {
    pub fn new(data: ComplexVector<T>) -> Self {
        Self { data, unit: false }
    }

    /// Normalizes `data` and sets the unit flag.
    pub fn normalized(data: ComplexVector<T>) -> Result<Self> {
        let n = data.norm();
        if n <= T::zero() {
            return Err(Error::InvalidArgument("cannot normalize the zero vector".into()));
        }
        Ok(Self {
            data: data.map(|z| z / cr(n)),
            unit: true,
        })
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn norm(&self) -> T {
        self.data.norm()
    }

    pub fn data(&self) -> &ComplexVector<T> {
        &self.data
    }

    pub fn into_data(self) -> ComplexVector<T> {
        self.data
    }
}

/// `(M + M†)/2`.
pub fn hermitize<T: Real>(m: &ComplexMatrix<T>) -> Result<HermitianMatrix<T>> {
    require_square(m, "hermitize input")?;
    Ok(HermitianMatrix::symmetrized(m.clone()))
}

/// `AB − BA`.
pub fn commutator<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    require_same_square(a, b)?;
    Ok(a * b - b * a)
}

pub fn frobenius_norm<T: Real>(m: &ComplexMatrix<T>) -> T {
    m.iter().fold(T::zero(), |acc, z| acc + abs2(*z)).sqrt()
}

/// Largest singular value.
pub fn operator_norm<T: Real>(m: &ComplexMatrix<T>) -> T {
    if m.is_empty() {
        return T::zero();
    }
    m.clone()
        .singular_values()
        .iter()
        .fold(T::zero(), |acc, &s| if s > acc { s } else { acc })
}

/// `exp(−iHt)` through the eigendecomposition of `H`.
pub fn matrix_exponential<T: Real>(h: &HermitianMatrix<T>, t: T) -> Result<UnitaryMatrix<T>> {
    let eig = h.eigh();
    let phases: Vec<Complex<T>> = eig
        .values
        .iter()
        .map(|&lambda| {
            let theta = -lambda * t;
            Complex::new(theta.cos(), theta.sin())
        })
        .collect();
    let v = &eig.vectors;
    let scaled = ComplexMatrix::from_fn(v.nrows(), v.ncols(), |i, j| v[(i, j)] * phases[j]);
    let u = scaled * v.adjoint();
    if u.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::Numerical("non-finite entries in matrix exponential".into()));
    }
    Ok(UnitaryMatrix::from_raw(u))
}

/// Kronecker product `A ⊗ B`.
pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = ComplexMatrix::zeros(ar * br, ac * bc);
    for j in 0..ac {
        for i in 0..ar {
            let aij = a[(i, j)];
            if aij == czero() {
                continue;
            }
            for l in 0..bc {
                for k in 0..br {
                    out[(i * br + k, j * bc + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Stacks the rows of `m` into one vector.
pub fn row_vectorize<T: Real>(m: &ComplexMatrix<T>) -> StateVector<T> {
    let (rows, cols) = m.shape();
    StateVector::new(ComplexVector::from_fn(rows * cols, |k, _| m[(k / cols, k % cols)]))
}

/// Inverse of [`row_vectorize`] for square matrices.
pub fn devectorize<T: Real>(v: &ComplexVector<T>) -> Result<ComplexMatrix<T>> {
    let n = v.len();
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n {
        return Err(Error::Dimension(format!(
            "vector length {n} is not a perfect square"
        )));
    }
    Ok(ComplexMatrix::from_fn(d, d, |i, j| v[i * d + j]))
}

/// `H ⊗ 1 − 1 ⊗ Hᵀ`, the matrix of `Y ↦ [H, Y]` on row-vectorized `Y`.
pub fn adjoint_superoperator<T: Real>(h: &HermitianMatrix<T>) -> Result<HermitianMatrix<T>> {
    adjoint_superoperator_capped(h, DEFAULT_ENTRY_CAP)
}

pub fn adjoint_superoperator_capped<T: Real>(
    h: &HermitianMatrix<T>,
    cap: usize,
) -> Result<HermitianMatrix<T>> {
    let d = h.dim();
    check_entry_cap(d * d, d * d, cap)?;
    let id = ComplexMatrix::<T>::identity(d, d);
    let m = kron(h.matrix(), &id) - kron(&id, &h.matrix().transpose());
    Ok(HermitianMatrix { m })
}

/// `ι(H) = H ⊗ 1 + 1 ⊗ H`.
pub fn iota<T: Real>(h: &HermitianMatrix<T>) -> Result<HermitianMatrix<T>> {
    iota_capped(h, DEFAULT_ENTRY_CAP)
}

pub fn iota_capped<T: Real>(h: &HermitianMatrix<T>, cap: usize) -> Result<HermitianMatrix<T>> {
    let d = h.dim();
    check_entry_cap(d * d, d * d, cap)?;
    let id = ComplexMatrix::<T>::identity(d, d);
    let m = kron(h.matrix(), &id) + kron(&id, h.matrix());
    Ok(HermitianMatrix { m })
}

/// Operator that moves tensor factor `k` to slot `perm[k]`.
///
/// `local_dims[k]` is the dimension of factor `k` in the input ordering.
pub fn permutation_operator<T: Real>(
    perm: &[usize],
    local_dims: &[usize],
) -> Result<UnitaryMatrix<T>> {
    permutation_operator_capped(perm, local_dims, DEFAULT_ENTRY_CAP)
}

pub fn permutation_operator_capped<T: Real>(
    perm: &[usize],
    local_dims: &[usize],
    cap: usize,
) -> Result<UnitaryMatrix<T>> {
    let k = perm.len();
    if local_dims.len() != k {
        return Err(Error::InvalidArgument(format!(
            "permutation has {k} slots but {} local dimensions were given",
            local_dims.len()
        )));
    }
    let mut seen = vec![false; k];
    for &p in perm {
        if p >= k || seen[p] {
            return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    if local_dims.contains(&0) {
        return Err(Error::InvalidArgument("local dimensions must be positive".into()));
    }
    let dim = local_dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or(Error::DimensionCap { entries: usize::MAX, cap })?;
    check_entry_cap(dim, dim, cap)?;

    let mut out_dims = vec![0; k];
    for (slot, &target) in perm.iter().enumerate() {
        out_dims[target] = local_dims[slot];
    }
    let mut m = ComplexMatrix::zeros(dim, dim);
    let mut digits = vec![0usize; k];
    let mut out_digits = vec![0usize; k];
    for col in 0..dim {
        let mut rest = col;
        for slot in (0..k).rev() {
            digits[slot] = rest % local_dims[slot];
            rest /= local_dims[slot];
        }
        for slot in 0..k {
            out_digits[perm[slot]] = digits[slot];
        }
        let row = out_digits
            .iter()
            .zip(&out_dims)
            .fold(0usize, |acc, (&x, &d)| acc * d + x);
        m[(row, col)] = cone();
    }
    Ok(UnitaryMatrix::from_raw(m))
}

/// Exchange of tensor factors `i` and `j`.
pub fn transposition_operator<T: Real>(
    i: usize,
    j: usize,
    local_dims: &[usize],
) -> Result<UnitaryMatrix<T>> {
    let mut perm: Vec<usize> = (0..local_dims.len()).collect();
    if i >= perm.len() || j >= perm.len() {
        return Err(Error::InvalidArgument(format!(
            "transposition ({i} {j}) out of range for {} factors",
            perm.len()
        )));
    }
    perm.swap(i, j);
    permutation_operator(&perm, local_dims)
}

/// `i·H`, used wherever the Lie algebra needs antihermitian representatives.
pub(crate) fn times_i<T: Real>(m: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    m.map(|z| z * ci())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli;
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    fn close(a: &ComplexMatrix<f64>, b: &ComplexMatrix<f64>, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn hermitize_examples() {
        let x = pauli::x::<f64>();
        assert_eq!(hermitize(&x).unwrap().matrix(), &x);

        let mut nil = ComplexMatrix::<f64>::zeros(2, 2);
        nil[(0, 1)] = cone();
        let h = hermitize(&nil).unwrap();
        assert!(close(
            h.matrix(),
            &ComplexMatrix::from_row_slice(2, 2, &[czero(), cr(0.5), cr(0.5), czero()]),
            1e-15
        ));

        let ix = times_i(&x);
        assert!(hermitize(&ix).unwrap().frobenius_norm() < 1e-15);

        let rect = ComplexMatrix::<f64>::zeros(2, 3);
        assert!(matches!(hermitize(&rect), Err(Error::Dimension(_))));
    }

    #[test]
    fn commutator_examples() {
        let (x, y, z) = (pauli::x::<f64>(), pauli::y::<f64>(), pauli::z::<f64>());
        let zx = commutator(&z, &x).unwrap();
        assert!(close(&zx, &y.map(|v| v * Complex::new(0.0, 2.0)), 1e-15));
        assert!(commutator(&x, &x).unwrap().norm() < 1e-15);

        let z1z2 = pauli::string::<f64>(2, &[(0, pauli::Pauli::Z), (1, pauli::Pauli::Z)]);
        let x1 = pauli::string::<f64>(2, &[(0, pauli::Pauli::X)]);
        let y1z2 = pauli::string::<f64>(2, &[(0, pauli::Pauli::Y), (1, pauli::Pauli::Z)]);
        let got = commutator(&z1z2, &x1).unwrap();
        assert!(close(&got, &y1z2.map(|v| v * Complex::new(0.0, 2.0)), 1e-14));

        assert!(commutator(&x, &ComplexMatrix::<f64>::identity(4, 4)).is_err());
    }

    #[test]
    fn norms() {
        let id = ComplexMatrix::<f64>::identity(5, 5);
        assert!((frobenius_norm(&id) - 5f64.sqrt()).abs() < 1e-15);
        assert!((frobenius_norm(&pauli::z::<f64>()) - SQRT_2).abs() < 1e-15);
        assert!((operator_norm(&pauli::z::<f64>()) - 1.0).abs() < 1e-14);

        let zz = pauli::string::<f64>(2, &[(0, pauli::Pauli::Z), (1, pauli::Pauli::Z)]).map(|v| v * 0.7);
        assert!((operator_norm(&zz) - 0.7).abs() < 1e-14);
        let h = HermitianMatrix::new(zz).unwrap();
        assert!((h.operator_norm() - 0.7).abs() < 1e-14);
    }

    #[test]
    fn exponential_examples() {
        let z = HermitianMatrix::new(pauli::z::<f64>()).unwrap();
        let u = matrix_exponential(&z, PI).unwrap();
        assert!(close(u.matrix(), &ComplexMatrix::identity(2, 2).map(|v: Complex<f64>| -v), 1e-14));

        let zero_t = matrix_exponential(&z, 0.0).unwrap();
        assert!(close(zero_t.matrix(), &ComplexMatrix::identity(2, 2), 1e-15));

        let x = HermitianMatrix::new(pauli::x::<f64>()).unwrap();
        let u = matrix_exponential(&x, FRAC_PI_2).unwrap();
        assert!(close(u.matrix(), &times_i(x.matrix()).map(|v| -v), 1e-14));
    }

    #[test]
    fn kron_examples() {
        let id2 = ComplexMatrix::<f64>::identity(2, 2);
        assert_eq!(kron(&id2, &id2), ComplexMatrix::identity(4, 4));

        let zi = kron(&pauli::z::<f64>(), &id2);
        let diag: Vec<f64> = (0..4).map(|k| zi[(k, k)].re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);

        let xx = kron(&pauli::x::<f64>(), &pauli::x::<f64>());
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(xx[(i, j)], cr(expect));
            }
        }
    }

    #[test]
    fn vectorization_examples() {
        let m = ComplexMatrix::<f64>::from_row_slice(2, 2, &[cr(1.0), cr(2.0), cr(3.0), cr(4.0)]);
        let v = row_vectorize(&m);
        let entries: Vec<f64> = v.data().iter().map(|z| z.re).collect();
        assert_eq!(entries, vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(devectorize(v.data()).unwrap(), m);
        assert!((row_vectorize(&pauli::z::<f64>()).norm() - SQRT_2).abs() < 1e-15);
        assert!(devectorize(&ComplexVector::<f64>::zeros(3)).is_err());
    }

    #[test]
    fn superoperator_examples() {
        let z = HermitianMatrix::new(pauli::z::<f64>()).unwrap();
        let ad = adjoint_superoperator(&z).unwrap();
        let diag: Vec<f64> = (0..4).map(|k| ad.matrix()[(k, k)].re).collect();
        assert_eq!(diag, vec![0.0, 2.0, -2.0, 0.0]);
        assert!(adjoint_superoperator(&HermitianMatrix::<f64>::identity(3))
            .unwrap()
            .frobenius_norm()
            == 0.0);

        let io = iota(&z).unwrap();
        let diag: Vec<f64> = (0..4).map(|k| io.matrix()[(k, k)].re).collect();
        assert_eq!(diag, vec![2.0, 0.0, 0.0, -2.0]);
        let io_id = iota(&HermitianMatrix::<f64>::identity(2)).unwrap();
        assert_eq!(io_id.matrix(), &ComplexMatrix::identity(4, 4).map(|v: Complex<f64>| v * 2.0));
    }

    #[test]
    fn permutation_examples() {
        let swap = permutation_operator::<f64>(&[1, 0], &[2, 2]).unwrap();
        let expect = nalgebra::DMatrix::<f64>::from_row_slice(
            4,
            4,
            &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        )
        .map(cr);
        assert_eq!(swap.matrix(), &expect);

        let id = permutation_operator::<f64>(&[0, 1, 2], &[2, 3, 2]).unwrap();
        assert_eq!(id.matrix(), &ComplexMatrix::identity(12, 12));

        let dims = [2, 2, 2, 2];
        let m13 = transposition_operator::<f64>(0, 2, &dims).unwrap();
        let m24 = transposition_operator::<f64>(1, 3, &dims).unwrap();
        let both = permutation_operator::<f64>(&[2, 3, 0, 1], &dims).unwrap();
        assert_eq!(m13.compose(&m24).unwrap().matrix(), both.matrix());
        assert_eq!(m13.compose(&m13).unwrap().matrix(), &ComplexMatrix::identity(16, 16));

        assert!(permutation_operator::<f64>(&[0, 0], &[2, 2]).is_err());
        assert!(matches!(
            permutation_operator_capped::<f64>(&[0, 1], &[64, 64], 1 << 20),
            Err(Error::DimensionCap { .. })
        ));
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        let y = times_i(&pauli::y::<f64>());
        assert!(matches!(HermitianMatrix::new(y), Err(Error::NotHermitian { .. })));
        let two = ComplexMatrix::<f64>::identity(2, 2).map(|v| v * 2.0);
        assert!(matches!(UnitaryMatrix::new(two), Err(Error::NotUnitary { .. })));
        let unit = StateVector::normalized(ComplexVector::from_element(4, cr(3.0f64))).unwrap();
        assert!((unit.norm() - 1.0).abs() < 1e-12 && unit.is_unit());
    }

    #[test]
    fn single_precision_kernel() {
        let z = HermitianMatrix::<f32>::new(pauli::z::<f32>()).unwrap();
        let u = matrix_exponential(&z, std::f32::consts::PI).unwrap();
        assert!((u.matrix()[(0, 0)].re + 1.0).abs() < 1e-5);
        assert!(UnitaryMatrix::new(u.into_matrix()).is_ok());
    }
}
