use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ControlSystem;
use crate::error::{Error, Result};
use crate::matcore::{matrix_exponential, operator_norm, HermitianMatrix, UnitaryMatrix};
use crate::scalar::{cr, Real};

/// Piecewise-constant controls: `amplitudes[j][k]` is `f_j` on segment `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PulseSchedule<T: Real> {
    dt: T,
    amplitudes: Vec<Vec<T>>,
}

impl<T: Real> PulseSchedule<T> {
    pub fn new(dt: T, amplitudes: Vec<Vec<T>>) -> Result<Self> {
        if !(dt > T::zero()) || !dt.is_finite() {
            return Err(Error::InvalidArgument(format!("segment duration must be positive, got {dt}")));
        }
        if let Some(first) = amplitudes.first() {
            if amplitudes.iter().any(|row| row.len() != first.len()) {
                return Err(Error::InvalidArgument("amplitude rows have different lengths".into()));
            }
        }
        if amplitudes.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("amplitudes must be finite".into()));
        }
        Ok(Self { dt, amplitudes })
    }

    /// `segments` segments of all-zero amplitudes for `controls` controls.
    pub fn zeros(dt: T, controls: usize, segments: usize) -> Result<Self> {
        Self::new(dt, vec![vec![T::zero(); segments]; controls])
    }

    /// Amplitudes drawn uniformly from `[-amplitude, amplitude]`.
    pub fn random(dt: T, controls: usize, segments: usize, amplitude: T, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = amplitude.as_f64();
        let rows = (0..controls)
            .map(|_| (0..segments).map(|_| T::lit(rng.random_range(-1.0..=1.0) * a)).collect())
            .collect();
        Self::new(dt, rows)
    }

    pub fn dt(&self) -> T {
        self.dt
    }

    pub fn amplitudes(&self) -> &[Vec<T>] {
        &self.amplitudes
    }

    pub fn controls(&self) -> usize {
        self.amplitudes.len()
    }

    /// Number of segments; zero when there are no control rows.
    pub fn segments(&self) -> usize {
        self.amplitudes.first().map_or(0, Vec::len)
    }

    /// Total duration. Without control rows the schedule has no segments.
    pub fn total_time(&self) -> T {
        self.dt * T::from_usize_lossy(self.segments())
    }
}

fn check_schedule<T: Real>(system: &ControlSystem<T>, pulses: &PulseSchedule<T>) -> Result<()> {
    if pulses.controls() != system.controls.len() {
        return Err(Error::Dimension(format!(
            "schedule has {} rows for {} controls",
            pulses.controls(),
            system.controls.len()
        )));
    }
    Ok(())
}

fn propagate_segments<T: Real>(system: &ControlSystem<T>, pulses: &PulseSchedule<T>, segments: usize) -> Result<UnitaryMatrix<T>> {
    let mut u = UnitaryMatrix::identity(system.dim());
    for k in 0..segments {
        let mut h = system.drift.matrix().clone();
        for (hj, row) in system.controls.iter().zip(pulses.amplitudes()) {
            if row[k] != T::zero() {
                h += hj.matrix().map(|z| z * cr(row[k]));
            }
        }
        let step = matrix_exponential(&HermitianMatrix::new(h)?, pulses.dt())?;
        u = step.compose(&u)?;
    }
    Ok(u)
}

/// `U(T) = Π_k exp(−i(H_d + Σ_j f_j(t_k) H_j) dt)`, later segments on the left.
///
/// A schedule with zero controls is treated as a single drift segment of
/// length `dt`.
pub fn propagate_piecewise<T: Real>(system: &ControlSystem<T>, pulses: &PulseSchedule<T>) -> Result<UnitaryMatrix<T>> {
    check_schedule(system, pulses)?;
    if system.controls.is_empty() {
        return matrix_exponential(&system.drift, pulses.dt());
    }
    if pulses.segments() == 0 {
        return Err(Error::InvalidArgument("pulse schedule is empty".into()));
    }
    propagate_segments(system, pulses, pulses.segments())
}

/// Both sides of `‖U₁(T) − U₂(T)‖_∞ ≤ T ‖ΔH‖_∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DuhamelCheck<T> {
    pub deviation: T,
    pub bound: T,
    pub total_time: T,
    pub perturbation_norm: T,
}

impl<T: Real> DuhamelCheck<T> {
    pub fn holds(&self, slack: T) -> bool {
        self.deviation <= self.bound + slack
    }
}

/// Propagates `system` and the system with drift `H_d + ΔH` under the same
/// schedule and compares the final unitaries.
pub fn duhamel_check<T: Real>(
    system: &ControlSystem<T>,
    delta: &HermitianMatrix<T>,
    pulses: &PulseSchedule<T>,
) -> Result<DuhamelCheck<T>> {
    let perturbed = ControlSystem::new(system.drift.try_add(delta)?, system.controls.clone(), system.label.clone())?;
    let u1 = propagate_piecewise(system, pulses)?;
    let u2 = propagate_piecewise(&perturbed, pulses)?;
    let total_time = if system.controls.is_empty() {
        pulses.dt()
    } else {
        pulses.total_time()
    };
    let perturbation_norm = delta.operator_norm();
    Ok(DuhamelCheck {
        deviation: operator_norm(&(u1.matrix() - u2.matrix())),
        bound: total_time * perturbation_norm,
        total_time,
        perturbation_norm,
    })
}
