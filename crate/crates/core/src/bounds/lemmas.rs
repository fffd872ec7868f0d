use crate::error::{Error, Result};
use crate::matcore::{matrix_exponential, operator_norm, ComplexVector, HermitianMatrix, UnitaryMatrix};
use crate::scalar::{abs2, unit_floor, Real};

fn check_len<T: Real>(a: &HermitianMatrix<T>, v: &ComplexVector<T>) -> Result<()> {
    if a.dim() != v.len() {
        return Err(Error::Dimension(format!(
            "operator dimension {} does not match vector length {}",
            a.dim(),
            v.len()
        )));
    }
    Ok(())
}

/// `‖(1 − P_ker A) v‖₂`, with eigenvalues below `tau · max(1, ‖A‖_∞)` treated
/// as zero.
pub fn kernel_complement_vector_norm<T: Real>(a: &HermitianMatrix<T>, v: &ComplexVector<T>, tau: T) -> Result<T> {
    check_len(a, v)?;
    let eig = a.eigh();
    let scale = unit_floor(eig.values.iter().fold(T::zero(), |m, x| m.max(x.abs())));
    let coeffs = eig.vectors.adjoint() * v;
    let total = eig
        .values
        .iter()
        .zip(coeffs.iter())
        .filter(|(l, _)| l.abs() > tau * scale)
        .fold(T::zero(), |acc, (_, &c)| acc + abs2(c));
    Ok(total.sqrt())
}

/// `max_k ‖(e^{−i t_k A} − 1) v‖₂²` on `samples` evenly spaced times in
/// `[0, t_max]`.
pub fn orbit_excursion<T: Real>(a: &HermitianMatrix<T>, v: &ComplexVector<T>, t_max: T, samples: usize) -> Result<T> {
    check_len(a, v)?;
    if samples < 2 || !(t_max > T::zero()) {
        return Err(Error::InvalidArgument("need t_max > 0 and at least two samples".into()));
    }
    let eig = a.eigh();
    let weights: Vec<T> = (eig.vectors.adjoint() * v).iter().map(|&c| abs2(c)).collect();
    let step = t_max / T::from_usize_lossy(samples - 1);
    let mut best = T::zero();
    for k in 0..samples {
        let t = step * T::from_usize_lossy(k);
        // |e^{−iλt} − 1|² = 2 − 2cos(λt)
        let value = eig
            .values
            .iter()
            .zip(&weights)
            .fold(T::zero(), |acc, (&l, &w)| acc + w * T::lit(2.0) * (T::one() - (l * t).cos()));
        best = best.max(value);
    }
    Ok(best)
}

/// `‖e^{−i U X U† t} − e^{−i X t}‖_∞`.
pub fn rotation_deviation<T: Real>(u: &UnitaryMatrix<T>, x: &HermitianMatrix<T>, t: T) -> Result<T> {
    if u.dim() != x.dim() {
        return Err(Error::Dimension(format!("dimensions {} and {} differ", u.dim(), x.dim())));
    }
    let rotated = HermitianMatrix::new(u.matrix() * x.matrix() * u.matrix().adjoint())?;
    let a = matrix_exponential(&rotated, t)?;
    let b = matrix_exponential(x, t)?;
    Ok(operator_norm(&(a.matrix() - b.matrix())))
}
