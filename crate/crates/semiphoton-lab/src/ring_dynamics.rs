//! Displacement currents of a wave guided on a circular trajectory, and the
//! net-charge quadrature that separates charged from neutral ring waves.
//!
//! A field vector riding a circle of radius `r_p` at angular frequency `ω_p`
//! picks up two displacement-current components: a normal one proportional to
//! the field's rate of change, `j_n = (1/4π)·∂E/∂t`, and a tangential one
//! proportional to the field itself, `j_τ = (ω_p/4π)·E`, sourced by the
//! rotation of the normal unit vector (`dn̂/dt = −(v_p/r_p)·τ̂`).
//!
//! Integrating the in-plane projection of the tangential current over the
//! wave's extent gives its net charge. A plane-polarized half-period arc has a
//! one-signed projection and integrates to a finite charge; a circularly
//! polarized wave's projection alternates over one full period and integrates
//! to zero. [`net_ring_charge`] evaluates both with composite Simpson
//! quadrature.

use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;

use crate::numeric::{central_diff, simpson};
use crate::{Error, Result};

/// Polarization class of the spun wave.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarization {
    Plane,
    Circular,
}

/// Ring-wave configuration. Valid records satisfy `ω_p·r_p = c` (the wave
/// moves at light speed on the ring) and `m_p = ħ·ω_p/c²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingWaveConfig {
    /// Ring radius (m).
    pub r_p: f64,
    /// Field amplitude.
    pub e0: f64,
    /// Angular frequency (rad/s).
    pub omega_p: f64,
    pub polarization: Polarization,
    /// Wave mass, `ħ·ω_p/c²` (kg).
    pub m_p: f64,
    /// Ring cross-section area (m²).
    pub cross_section: f64,
}

impl RingWaveConfig {
    /// Derive a valid configuration from the radius: `ω_p = c/r_p` and
    /// `m_p = ħ·ω_p/c²`, so both invariants hold by construction.
    pub fn new(
        r_p: f64,
        e0: f64,
        cross_section: f64,
        polarization: Polarization,
        hbar: f64,
        c: f64,
    ) -> Result<Self> {
        if !(r_p.is_finite() && r_p > 0.0) {
            return Err(Error::InvalidInput(format!("ring radius must be positive, got {r_p}")));
        }
        if !(e0.is_finite() && cross_section.is_finite() && cross_section >= 0.0) {
            return Err(Error::InvalidInput(
                "amplitude and cross-section must be finite (cross-section non-negative)"
                    .to_string(),
            ));
        }
        let omega_p = c / r_p;
        Self::from_parts(
            r_p,
            e0,
            omega_p,
            polarization,
            hbar * omega_p / (c * c),
            cross_section,
            hbar,
            c,
        )
    }

    /// Validate an explicitly assembled configuration against the two record
    /// invariants (relative tolerance 1e-12).
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        r_p: f64,
        e0: f64,
        omega_p: f64,
        polarization: Polarization,
        m_p: f64,
        cross_section: f64,
        hbar: f64,
        c: f64,
    ) -> Result<Self> {
        let light = (omega_p * r_p / c - 1.0).abs();
        if light > 1e-12 {
            return Err(Error::InvalidInput(format!(
                "omega_p*r_p must equal c (relative residual {light:.3e})"
            )));
        }
        let mass = (m_p * c * c / (hbar * omega_p) - 1.0).abs();
        if !mass.is_finite() || mass > 1e-12 {
            return Err(Error::InvalidInput(format!(
                "m_p must equal hbar*omega_p/c^2 (relative residual {mass:.3e})"
            )));
        }
        Ok(Self {
            r_p,
            e0,
            omega_p,
            polarization,
            m_p,
            cross_section,
        })
    }

    /// Wave speed on the ring, `ω_p·r_p`; equals `c` for a valid record.
    pub fn light_speed(&self) -> f64 {
        self.omega_p * self.r_p
    }

    /// Wavenumber `ω_p/c = 1/r_p`.
    pub fn wavenumber(&self) -> f64 {
        self.omega_p / self.light_speed()
    }

    /// Wavelength `2π/k`, equal to the ring circumference.
    pub fn wavelength(&self) -> f64 {
        TAU / self.wavenumber()
    }
}

/// Displacement-current components at one ring phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentSample {
    /// Normal component, `(1/4π)·dE/dt`.
    pub j_n: f64,
    /// Tangential component, `(ω_p/4π)·E`.
    pub j_tau: f64,
    /// Ring phase (rad).
    pub phase: f64,
}

/// Phase step for differentiating a caller-supplied field profile.
const FIELD_PHASE_STEP: f64 = 1e-6;

/// Split the displacement current of a field profile `E(φ)` on the ring into
/// its normal and tangential components at `phase`. The time derivative is
/// taken through the chain rule `dE/dt = ω_p·dE/dφ`.
pub fn displacement_current(
    config: &RingWaveConfig,
    e_magnitude: impl Fn(f64) -> f64,
    phase: f64,
) -> CurrentSample {
    let de_dphi = central_diff(&e_magnitude, phase, FIELD_PHASE_STEP);
    let w = config.omega_p;
    CurrentSample {
        j_n: w / (4.0 * PI) * de_dphi,
        j_tau: w / (4.0 * PI) * e_magnitude(phase),
        phase,
    }
}

/// Compare the finite-difference derivative of the inward normal unit vector
/// with its closed form `−(v_p/r_p)·τ̂` at `n_samples` points around the ring,
/// using time step `dt`. Returns the largest deviation norm.
pub fn normal_vector_derivative_check(
    config: &RingWaveConfig,
    n_samples: usize,
    dt: f64,
) -> Result<f64> {
    if n_samples < 8 {
        return Err(Error::InvalidInput(format!(
            "need at least 8 samples, got {n_samples}"
        )));
    }
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidInput(format!("dt must be positive, got {dt}")));
    }
    let w = config.omega_p;
    let v_p = config.light_speed();
    // Inward normal and motion tangent of a point circling at ω_p.
    let normal = |t: f64| {
        let (sin, cos) = (w * t).sin_cos();
        Vector3::new(-cos, -sin, 0.0)
    };
    let tangent = |t: f64| {
        let (sin, cos) = (w * t).sin_cos();
        Vector3::new(-sin, cos, 0.0)
    };
    let period = TAU / w;
    let mut worst: f64 = 0.0;
    for j in 0..n_samples {
        let t = j as f64 * period / n_samples as f64;
        let fd = (normal(t + dt) - normal(t - dt)) / (2.0 * dt);
        let analytic = tangent(t) * (-v_p / config.r_p);
        worst = worst.max((fd - analytic).norm());
    }
    Ok(worst)
}

/// Net charge of the ring wave from composite Simpson quadrature of the
/// in-plane tangential-current projection, `n_steps` subintervals (odd counts
/// are rounded up; fewer than 100 is an error).
///
/// Plane polarization integrates the one-signed half-period lobe
/// `E₀·cos(k_s·l)` over `l ∈ [−λ_s/4, λ_s/4]` (evaluated as twice the
/// integral over `[0, λ_s/4]`). Circular polarization integrates the
/// alternating projection over the full period `[0, λ_s]`, which cancels.
pub fn net_ring_charge(config: &RingWaveConfig, n_steps: usize) -> Result<f64> {
    if n_steps < 100 {
        return Err(Error::InvalidInput(format!(
            "quadrature needs at least 100 steps, got {n_steps}"
        )));
    }
    let n = n_steps + n_steps % 2;
    let c = config.light_speed();
    let k_s = config.omega_p / c;
    let lambda = TAU / k_s;
    let prefactor = config.omega_p / c * config.e0 * config.cross_section / PI;
    let integral = match config.polarization {
        Polarization::Plane => 2.0 * simpson(|l| (k_s * l).cos(), 0.0, lambda / 4.0, n),
        Polarization::Circular => simpson(|l| (k_s * l).cos(), 0.0, lambda, n),
    };
    Ok(prefactor * integral)
}

/// Closed form of the plane-polarized charge: the lobe integral evaluates to
/// `2·sin(k_s·λ_s/4)/k_s`, so the charge is `(2/π)·E₀·S` for any valid ring.
pub fn plane_charge_closed_form(config: &RingWaveConfig) -> f64 {
    let c = config.light_speed();
    let k_s = config.omega_p / c;
    let lambda = TAU / k_s;
    let integral = 2.0 * (k_s * lambda / 4.0).sin() / k_s;
    config.omega_p / c * config.e0 * config.cross_section / PI * integral
}

/// One row of the plot-ready current trace.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CurrentTraceRow {
    pub phase: f64,
    pub j_n: f64,
    pub j_tau: f64,
    pub in_plane_projection: f64,
}

/// Sample the current decomposition and the in-plane projection across the
/// wave's extent: the half-period lobe `[−π/2, π/2]` for plane polarization,
/// the full period `[0, 2π]` for circular. `n` is the number of subintervals
/// (n+1 rows).
pub fn current_samples(config: &RingWaveConfig, n: usize) -> Vec<CurrentTraceRow> {
    let (lo, hi) = match config.polarization {
        Polarization::Plane => (-PI / 2.0, PI / 2.0),
        Polarization::Circular => (0.0, TAU),
    };
    let e0 = config.e0;
    // Plane: the field itself is the one-signed lobe. Circular: the field
    // magnitude is constant and only its in-plane projection alternates.
    let magnitude: Box<dyn Fn(f64) -> f64> = match config.polarization {
        Polarization::Plane => Box::new(move |phi: f64| e0 * phi.cos()),
        Polarization::Circular => Box::new(move |_phi: f64| e0),
    };
    (0..=n)
        .map(|i| {
            let phase = lo + (hi - lo) * i as f64 / n as f64;
            let sample = displacement_current(config, &magnitude, phase);
            CurrentTraceRow {
                phase,
                j_n: sample.j_n,
                j_tau: sample.j_tau,
                in_plane_projection: e0 * phase.cos(),
            }
        })
        .collect()
}

/// Potential of two opposite point charges `±q` separated by `d`, observed at
/// distance `r` and angle `theta`: `(q/eps0)·(1/r − 1/(r + d·cosθ))`.
///
/// Vanishes as `d → 0` and tends to the single-charge potential `q/(eps0·r)`
/// as `d → ∞`.
pub fn dipole_potential(q: f64, d: f64, r: f64, theta: f64, eps0: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidInput(format!("r must be positive, got {r}")));
    }
    if !(q.is_finite() && d.is_finite() && theta.is_finite() && eps0.is_finite() && eps0 != 0.0) {
        return Err(Error::InvalidInput("dipole arguments must be finite, eps0 nonzero".to_string()));
    }
    let far = r + d * theta.cos();
    if far.abs() <= 1e-15 * r {
        return Err(Error::Singular(format!(
            "observation point lies on the second charge (r + d*cos(theta) = {far:e})"
        )));
    }
    Ok(q / eps0 * (1.0 / r - 1.0 / far))
}
