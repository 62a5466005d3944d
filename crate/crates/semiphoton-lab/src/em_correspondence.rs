//! Electromagnetic form of the lepton wave equations for a wave moving along
//! the `y` axis.
//!
//! Two sign systems exist, [`System::Prime`] and [`System::DoublePrime`]; each
//! couples the transverse components `(E_x, E_z, H_x, H_z)` through four
//! complex equations whose real parts carry the field derivatives and whose
//! imaginary parts carry the mass term `i·(mc/ħ)·F`. With the mass and current
//! terms set to zero both systems admit the transverse trigonometric solutions
//! sampled by [`sample_trig_solution`]; the two solutions carry opposite
//! Poynting directions and opposite rotation sense relative to their motion,
//! which is the model's particle/antiparticle distinction for neutral waves.
//!
//! Fields are treated in a convention where `E` and `H` share one unit and the
//! Poynting vector is the bare cross product `E⃗ × H⃗` (no `c/4π` prefactor).
//! Everything here is a pure function of immutable values.

use nalgebra::Vector3;

use crate::{Error, Result};

/// Sign system selector for the eight scalar equations and their solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum System {
    Prime,
    DoublePrime,
}

/// Real field sample at a spacetime point on the propagation axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldState {
    /// Electric field vector.
    pub e: Vector3<f64>,
    /// Magnetic field vector (same unit as `e`).
    pub h: Vector3<f64>,
    /// Time (s).
    pub t: f64,
    /// Position along the propagation axis (m).
    pub y: f64,
}

/// Parameters of the homogeneous trigonometric solutions: amplitude, angular
/// frequency, wavenumber and the sign system. Construction enforces the
/// light-speed relation `ω = c·k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigSolutionParams {
    pub a0: f64,
    pub omega: f64,
    pub k: f64,
    pub system: System,
}

impl TrigSolutionParams {
    pub fn new(a0: f64, omega: f64, k: f64, system: System, c: f64) -> Result<Self> {
        if !(a0.is_finite() && a0 >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "amplitude must be finite and non-negative, got {a0}"
            )));
        }
        if !(omega.is_finite() && omega > 0.0 && k.is_finite() && k > 0.0) {
            return Err(Error::InvalidInput(format!(
                "omega and k must be finite and positive, got omega={omega}, k={k}"
            )));
        }
        let residual = (omega - c * k).abs() / omega.max(c * k);
        if residual > 1e-12 {
            return Err(Error::InvalidInput(format!(
                "homogeneous solutions require omega = c*k (relative residual {residual:.3e})"
            )));
        }
        Ok(Self { a0, omega, k, system })
    }

    /// Wave period `2π/ω`.
    pub fn period(&self) -> f64 {
        std::f64::consts::TAU / self.omega
    }
}

/// Sample the trigonometric solution of the selected system at `(t, y)`.
///
/// Both systems share `E = A₀(cos θ, 0, −sin θ)` with `θ = ωt − ky`; they
/// differ in the sign pattern of `H`.
pub fn sample_trig_solution(params: &TrigSolutionParams, t: f64, y: f64) -> FieldState {
    let theta = params.omega * t - params.k * y;
    let (sin, cos) = theta.sin_cos();
    let a0 = params.a0;
    let e = Vector3::new(a0 * cos, 0.0, -a0 * sin);
    let h = match params.system {
        System::Prime => Vector3::new(-a0 * sin, 0.0, -a0 * cos),
        System::DoublePrime => Vector3::new(a0 * sin, 0.0, a0 * cos),
    };
    FieldState { e, h, t, y }
}

/// Energy-flow direction: the bare cross product `E⃗ × H⃗`.
pub fn poynting(state: &FieldState) -> Vector3<f64> {
    state.e.cross(&state.h)
}

/// The pseudoscalar field invariant `E⃗·H⃗`. Zero at every phase for both
/// trigonometric solutions.
pub fn pseudoscalar(state: &FieldState) -> f64 {
    state.e.dot(&state.h)
}

/// Default finite-difference steps for [`scalar_equation_residuals`] at a
/// dimensionless phase scale (1e-4 is the standard choice).
///
/// The y step is `scale/k`. The time step runs at half the phase step: with
/// equal phase steps the second-order truncation terms of the time and space
/// derivatives carry identical sinc factors and cancel to all orders on the
/// traveling-wave solutions, leaving only roundoff — which defeats any
/// convergence-order measurement.
pub fn default_fd_steps(omega: f64, k: f64, scale: f64) -> (f64, f64) {
    (scale / (2.0 * omega), scale / k)
}

/// Residuals of the four complex field equations of one system, evaluated
/// with central finite differences (`dt` in time, `dy` along the axis).
///
/// Each complex equation contributes two real scalar equations: its real part
/// (the field derivatives) and its imaginary part (the mass term with
/// coefficient `mc/ħ`). The result interleaves them as
/// `[re₁, im₁, re₂, im₂, re₃, im₃, re₄, im₄]` for the equations ordered
/// `(E_x, E_z, H_x, H_z)`.
#[allow(clippy::too_many_arguments)]
pub fn scalar_equation_residuals(
    sample: impl Fn(f64, f64) -> FieldState,
    system: System,
    mass: f64,
    t: f64,
    y: f64,
    dt: f64,
    dy: f64,
    c: f64,
    hbar: f64,
) -> [f64; 8] {
    let tp = sample(t + dt, y);
    let tm = sample(t - dt, y);
    let yp = sample(t, y + dy);
    let ym = sample(t, y - dy);
    let mid = sample(t, y);

    let ddt = |f: fn(&FieldState) -> f64| (f(&tp) - f(&tm)) / (2.0 * dt);
    let ddy = |f: fn(&FieldState) -> f64| (f(&yp) - f(&ym)) / (2.0 * dy);
    let ex = |s: &FieldState| s.e.x;
    let ez = |s: &FieldState| s.e.z;
    let hx = |s: &FieldState| s.h.x;
    let hz = |s: &FieldState| s.h.z;

    let km = mass * c / hbar;
    // Per-system sign of the space-derivative term and of the mass coupling.
    let (space, mass_sign) = match system {
        System::Prime => (-1.0, [1.0, 1.0, -1.0, -1.0]),
        System::DoublePrime => (1.0, [-1.0, -1.0, 1.0, 1.0]),
    };

    // Real parts: (1/c)∂t F ± ∂y G; imaginary parts: −(±)·(mc/ħ)·F.
    let lhs = [
        ddt(ex) / c + space * ddy(hz),
        ddt(ez) / c - space * ddy(hx),
        ddt(hx) / c - space * ddy(ez),
        ddt(hz) / c + space * ddy(ex),
    ];
    let fields = [ex(&mid), ez(&mid), hx(&mid), hz(&mid)];
    let mut out = [0.0; 8];
    for i in 0..4 {
        out[2 * i] = lhs[i];
        out[2 * i + 1] = -mass_sign[i] * km * fields[i];
    }
    out
}

/// Chirality of the field rotation seen along the direction of motion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Left,
    Right,
}

/// Orientation of the rotation axis relative to the energy flow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotionAlignment {
    Aligned,
    AntiAligned,
}

/// Rotation analysis of the electric vector at `y = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationSense {
    pub chirality: Chirality,
    pub relative_to_motion: MotionAlignment,
    /// Angular-velocity vector of `E⃗(t)`, i.e. `E⃗ × dE⃗/dt / |E⃗|²`.
    pub angular_velocity: Vector3<f64>,
}

/// Angular-velocity vector of the rotating `E⃗(t)` at `y = 0`, from the
/// analytic derivative of the trigonometric solution.
pub fn angular_velocity(params: &TrigSolutionParams, t: f64) -> Vector3<f64> {
    let theta = params.omega * t;
    let (sin, cos) = theta.sin_cos();
    let a0 = params.a0;
    let e = Vector3::new(a0 * cos, 0.0, -a0 * sin);
    let dedt = Vector3::new(-a0 * params.omega * sin, 0.0, -a0 * params.omega * cos);
    e.cross(&dedt) / e.norm_squared()
}

/// Classify the rotation of `E⃗(t)` against the Poynting direction. The two
/// systems give opposite alignments; the amplitude must be positive for the
/// rotation to be defined.
pub fn rotation_sense(params: &TrigSolutionParams) -> Result<RotationSense> {
    if params.a0 == 0.0 {
        return Err(Error::InvalidInput(
            "rotation sense undefined for zero amplitude".to_string(),
        ));
    }
    let w = angular_velocity(params, 0.0);
    let s = poynting(&sample_trig_solution(params, 0.0, 0.0));
    let along = w.dot(&s);
    let (chirality, relative) = if along > 0.0 {
        (Chirality::Right, MotionAlignment::Aligned)
    } else {
        (Chirality::Left, MotionAlignment::AntiAligned)
    };
    Ok(RotationSense {
        chirality,
        relative_to_motion: relative,
        angular_velocity: w,
    })
}

/// Sign of the projection of the field-rotation axis on the energy flow:
/// `+1` when aligned, `-1` when opposed. A pure function of the system.
pub fn inner_helicity_sign(params: &TrigSolutionParams) -> Result<i32> {
    let sense = rotation_sense(params)?;
    Ok(match sense.relative_to_motion {
        MotionAlignment::Aligned => 1,
        MotionAlignment::AntiAligned => -1,
    })
}
