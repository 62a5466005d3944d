//! Wave-operator algebra on 4×4 complex matrices.
//!
//! The working representation is the standard Dirac–Pauli one: `alpha0` is
//! the identity, the three `alpha` matrices carry the Pauli blocks off the
//! diagonal, `beta = diag(1, 1, -1, -1)`, and `alpha5 = α₀α₁α₂α₃`. The spin
//! matrices stored in the basis are defined through the identity
//! `σᵢ = i·α₅·β·αᵢ`, which in this representation makes them block diagonal
//! with opposite signs in the upper and lower blocks. Every identity is
//! re-checked numerically by [`DiracBasis::invariant_residuals`], so a change
//! of representation only has to keep those residuals at zero.
//!
//! Momentum-space operators are assembled from `(ω, k⃗, m)` with `ħ` and `c`
//! passed explicitly; handing in a natural-units record keeps every entry at
//! order one, which is the scale the `1e-14` entry tolerances assume.
//!
//! All types are immutable and all functions pure.

use nalgebra::{Complex, Matrix2, Matrix4, Vector3, Vector4};

use crate::{Error, Result};

pub type Complex64 = Complex<f64>;
/// 4×4 complex matrix, the carrier for every assembled wave operator.
pub type ComplexMatrix4 = Matrix4<Complex64>;
/// Four-component complex amplitude.
pub type Spinor = Vector4<Complex64>;

/// Default per-entry absolute tolerance for operator comparisons (after
/// normalization by the largest entry magnitude).
pub const ENTRY_ABS_TOL: f64 = 1e-14;

fn re(x: f64) -> Complex64 {
    Complex::new(x, 0.0)
}

/// The imaginary unit as a concrete `Complex64`.
const I: Complex64 = Complex::new(0.0, 1.0);

/// Largest entry magnitude; the scale used to normalize operators before
/// comparison.
pub fn max_entry_abs(m: &ComplexMatrix4) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest per-entry difference magnitude between two matrices.
pub fn max_entry_diff(a: &ComplexMatrix4, b: &ComplexMatrix4) -> f64 {
    max_entry_abs(&(a - b))
}

/// Per-entry equality within `tol` (absolute).
pub fn approx_eq(a: &ComplexMatrix4, b: &ComplexMatrix4, tol: f64) -> bool {
    max_entry_diff(a, b) <= tol
}

/// `|det| / scale⁴` with `scale` the largest entry magnitude; zero matrix
/// maps to zero.
pub fn normalized_det(m: &ComplexMatrix4) -> f64 {
    let scale = max_entry_abs(m);
    if scale == 0.0 {
        0.0
    } else {
        m.determinant().norm() / scale.powi(4)
    }
}

fn embed_off_diagonal(s: &Matrix2<Complex64>) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(s);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(s);
    m
}

fn embed_diagonal(a: &Matrix2<Complex64>, d: &Matrix2<Complex64>) -> ComplexMatrix4 {
    let mut m = ComplexMatrix4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(d);
    m
}

/// The full matrix set: `alpha0`, the three `alphas`, `beta`, `alpha5`, and
/// the three block-diagonal spin matrices `sigmas`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracBasis {
    pub alpha0: ComplexMatrix4,
    pub alphas: [ComplexMatrix4; 3],
    pub beta: ComplexMatrix4,
    pub alpha5: ComplexMatrix4,
    pub sigmas: [ComplexMatrix4; 3],
}

impl DiracBasis {
    /// Build the basis in the Dirac–Pauli representation. All entries are
    /// exactly 0, ±1 or ±i, so the algebraic identities hold with zero
    /// residual.
    pub fn standard() -> Self {
        let i = I;
        let pauli = [
            Matrix2::new(re(0.0), re(1.0), re(1.0), re(0.0)),
            Matrix2::new(re(0.0), -i, i, re(0.0)),
            Matrix2::new(re(1.0), re(0.0), re(0.0), re(-1.0)),
        ];
        let alpha0 = ComplexMatrix4::identity();
        let alphas = [
            embed_off_diagonal(&pauli[0]),
            embed_off_diagonal(&pauli[1]),
            embed_off_diagonal(&pauli[2]),
        ];
        let beta = embed_diagonal(&Matrix2::identity(), &(-Matrix2::<Complex64>::identity()));
        let alpha5 = alpha0 * alphas[0] * alphas[1] * alphas[2];
        let sigmas = [
            alpha5 * beta * alphas[0] * i,
            alpha5 * beta * alphas[1] * i,
            alpha5 * beta * alphas[2] * i,
        ];
        Self {
            alpha0,
            alphas,
            beta,
            alpha5,
            sigmas,
        }
    }

    /// Evaluate every basis identity and return `(name, residual)` pairs:
    /// the pairwise anticommutators, `β² = I`, the `α₅` product definition,
    /// and `σᵢ = i·α₅·β·αᵢ`.
    pub fn invariant_residuals(&self) -> Vec<(String, f64)> {
        let id = ComplexMatrix4::identity();
        let zero = ComplexMatrix4::zeros();
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let anti = self.alphas[i] * self.alphas[j] + self.alphas[j] * self.alphas[i];
                let expected = if i == j { id * re(2.0) } else { zero };
                out.push((
                    format!("alpha{}*alpha{} anticommutator", i + 1, j + 1),
                    max_entry_diff(&anti, &expected),
                ));
            }
        }
        out.push(("beta^2 = I".to_string(), max_entry_diff(&(self.beta * self.beta), &id)));
        for i in 0..3 {
            let anti = self.alphas[i] * self.beta + self.beta * self.alphas[i];
            out.push((format!("alpha{}*beta anticommutator", i + 1), max_entry_abs(&anti)));
        }
        let product = self.alpha0 * self.alphas[0] * self.alphas[1] * self.alphas[2];
        out.push(("alpha5 product definition".to_string(), max_entry_diff(&self.alpha5, &product)));
        for i in 0..3 {
            let rhs = self.alpha5 * self.beta * self.alphas[i] * I;
            out.push((
                format!("sigma{} = i*alpha5*beta*alpha{}", i + 1, i + 1),
                max_entry_diff(&self.sigmas[i], &rhs),
            ));
        }
        out
    }

    /// Largest residual over all basis identities.
    pub fn max_invariant_residual(&self) -> f64 {
        self.invariant_residuals()
            .into_iter()
            .map(|(_, r)| r)
            .fold(0.0, f64::max)
    }
}

impl Default for DiracBasis {
    fn default() -> Self {
        Self::standard()
    }
}

/// Particle / antiparticle sign convention for the assembled operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Electron,
    Positron,
}

impl Branch {
    /// `+1` for the electron form, `-1` for the positron form.
    pub fn sign(self) -> f64 {
        match self {
            Branch::Electron => 1.0,
            Branch::Positron => -1.0,
        }
    }
}

/// Plane-wave data: angular frequency, wave vector, mass, and the
/// four-component amplitude the operators act on.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWaveParams {
    /// Angular frequency (rad/s), non-negative.
    pub omega: f64,
    /// Wave vector (rad/m).
    pub wavevector: Vector3<f64>,
    /// Mass (kg), non-negative.
    pub mass: f64,
    /// Amplitude spinor (dimensionless).
    pub amplitude: Spinor,
}

impl PlaneWaveParams {
    pub fn new(omega: f64, wavevector: Vector3<f64>, mass: f64, amplitude: Spinor) -> Result<Self> {
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "omega must be finite and non-negative, got {omega}"
            )));
        }
        if !(mass.is_finite() && mass >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "mass must be finite and non-negative, got {mass}"
            )));
        }
        if !wavevector.iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidInput("wavevector must be finite".to_string()));
        }
        Ok(Self {
            omega,
            wavevector,
            mass,
            amplitude,
        })
    }
}

/// External 4-potential and the coupling charge, in the convention where the
/// energy shift is `e·φ` and the momentum shift is `(e/c)·A⃗`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExternalPotentials {
    /// Scalar potential.
    pub phi: f64,
    /// Vector potential.
    pub a: Vector3<f64>,
    /// Coupling charge.
    pub charge: f64,
}

impl ExternalPotentials {
    pub fn new(phi: f64, a: Vector3<f64>, charge: f64) -> Result<Self> {
        if !phi.is_finite() || !charge.is_finite() || !a.iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidInput(
                "external potentials must be finite".to_string(),
            ));
        }
        Ok(Self { phi, a, charge })
    }
}

/// A plain energy-momentum pair `(ε, p⃗)`, used as the operator increment in
/// the mass substitution check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyMomentum {
    pub energy: f64,
    pub momentum: Vector3<f64>,
}

fn momentum_term(basis: &DiracBasis, p: &Vector3<f64>, scale: f64) -> ComplexMatrix4 {
    basis.alphas[0] * re(scale * p.x)
        + basis.alphas[1] * re(scale * p.y)
        + basis.alphas[2] * re(scale * p.z)
}

fn kinetic_term(basis: &DiracBasis, params: &PlaneWaveParams, hbar: f64, c: f64, sign: f64) -> ComplexMatrix4 {
    basis.alpha0 * re(hbar * params.omega) + momentum_term(basis, &params.wavevector, sign * c * hbar)
}

/// Free operator `α₀·(ħω) ± c·α⃗·(ħk⃗) ± β·mc²`, signs set by the branch.
///
/// Its determinant is `((ħω)² − (cħ|k⃗|)² − (mc²)²)²`, so it vanishes exactly
/// on the dispersion shell.
pub fn assemble_free_operator(
    basis: &DiracBasis,
    params: &PlaneWaveParams,
    branch: Branch,
    hbar: f64,
    c: f64,
) -> ComplexMatrix4 {
    let s = branch.sign();
    kinetic_term(basis, params, hbar, c, s) + basis.beta * re(s * params.mass * c * c)
}

/// Operator with an external 4-potential folded in:
/// `α₀·(ħω − eφ) + c·α⃗·(ħk⃗ − (e/c)A⃗) + β·mc²`.
pub fn assemble_external_operator(
    basis: &DiracBasis,
    params: &PlaneWaveParams,
    pot: &ExternalPotentials,
    hbar: f64,
    c: f64,
) -> ComplexMatrix4 {
    let energy = hbar * params.omega - pot.charge * pot.phi;
    let mut m = basis.alpha0 * re(energy);
    for i in 0..3 {
        let p = hbar * params.wavevector[i] - pot.charge / c * pot.a[i];
        m += basis.alphas[i] * re(c * p);
    }
    m + basis.beta * re(params.mass * c * c)
}

/// Operator carrying twice the mass term: `α₀·(ħω) + c·α⃗·(ħk⃗) + 2β·mc²`.
pub fn assemble_double_mass_operator(
    basis: &DiracBasis,
    params: &PlaneWaveParams,
    hbar: f64,
    c: f64,
) -> ComplexMatrix4 {
    kinetic_term(basis, params, hbar, c, 1.0) + basis.beta * re(2.0 * params.mass * c * c)
}

fn normalized_difference(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    let scale = max_entry_abs(a).max(max_entry_abs(b));
    if scale == 0.0 {
        a - b
    } else {
        let inv = re(1.0 / scale);
        a * inv - b * inv
    }
}

/// Exchange one mass term of the doubled operator for the external-coupling
/// term `−(eφ·α₀ + e·α⃗·A⃗)`, subtract the directly assembled external-field
/// operator, and return the (normalized) difference. The exchange is an
/// exact structural identity, so the result is the zero matrix up to
/// floating-point association.
pub fn external_field_equivalence(
    basis: &DiracBasis,
    params: &PlaneWaveParams,
    pot: &ExternalPotentials,
    hbar: f64,
    c: f64,
) -> ComplexMatrix4 {
    let mc2 = params.mass * c * c;
    let doubled = assemble_double_mass_operator(basis, params, hbar, c);
    let coupling =
        basis.alpha0 * re(pot.charge * pot.phi) + momentum_term(basis, &pot.a, pot.charge);
    let substituted = doubled - basis.beta * re(mc2) - coupling;
    let direct = assemble_external_operator(basis, params, pot, hbar, c);
    normalized_difference(&substituted, &direct)
}

/// Add the increment term `α₀·ε + c·α⃗·p⃗` to the massless kinetic operator,
/// replace it by `−β·mc²` (the energy-balance reading of the increment), and
/// subtract the operator assembled directly with that mass term. Returns the
/// normalized difference, the zero matrix by construction.
pub fn increment_to_mass_check(
    basis: &DiracBasis,
    params: &PlaneWaveParams,
    increment: &EnergyMomentum,
    hbar: f64,
    c: f64,
) -> ComplexMatrix4 {
    let mc2 = params.mass * c * c;
    let increment_term =
        basis.alpha0 * re(increment.energy) + momentum_term(basis, &increment.momentum, c);
    let incremented = kinetic_term(basis, params, hbar, c, 1.0) + increment_term;
    let substituted = incremented - increment_term - basis.beta * re(mc2);
    let reference = kinetic_term(basis, params, hbar, c, 1.0) - basis.beta * re(mc2);
    normalized_difference(&substituted, &reference)
}

/// The free operator multiplied on the left by `i·α₅·β`, assembled directly
/// from the stored basis matrices: the energy term keeps the coefficient
/// `i·α₅·β`, the momentum term becomes `± c·σ⃗·(ħk⃗)` through the
/// `σᵢ = i·α₅·β·αᵢ` identity, and the mass term becomes `± i·mc²·α₅`.
/// Equal, entry for entry, to the explicit matrix product
/// `i·α₅·β · assemble_free_operator(..)`.
pub fn helicity_form_operator(
    basis: &DiracBasis,
    params: &PlaneWaveParams,
    branch: Branch,
    hbar: f64,
    c: f64,
) -> ComplexMatrix4 {
    let s = branch.sign();
    let energy_coeff = basis.alpha5 * basis.beta * I;
    let mut m = energy_coeff * re(hbar * params.omega);
    for i in 0..3 {
        m += basis.sigmas[i] * re(s * c * hbar * params.wavevector[i]);
    }
    m + basis.alpha5 * (I * re(s * params.mass * c * c))
}

/// Spin projection along `khat`: `⟨ψ|σ⃗·k̂|ψ⟩ / ⟨ψ|ψ⟩ ∈ [-1, 1]`.
///
/// Invariant under global phase and positive rescaling of the amplitude.
pub fn helicity_of_state(basis: &DiracBasis, amplitude: &Spinor, khat: &Vector3<f64>) -> Result<f64> {
    if (khat.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidInput(format!(
            "khat must be a unit vector, |khat| = {}",
            khat.norm()
        )));
    }
    let norm2 = amplitude.dotc(amplitude).re;
    if !(norm2.is_finite() && norm2 > 0.0) {
        return Err(Error::InvalidInput(
            "amplitude must have positive norm".to_string(),
        ));
    }
    let op = basis.sigmas[0] * re(khat.x) + basis.sigmas[1] * re(khat.y) + basis.sigmas[2] * re(khat.z);
    Ok(amplitude.dotc(&(op * amplitude)).re / norm2)
}

/// Positive root of the dispersion relation `(ħω)² = (cħ|k⃗|)² + (mc²)²`.
pub fn on_shell_omega(wavevector: &Vector3<f64>, mass: f64, hbar: f64, c: f64) -> f64 {
    let ck = c * wavevector.norm();
    let mc2_over_hbar = mass * c * c / hbar;
    (ck * ck + mc2_over_hbar * mc2_over_hbar).sqrt()
}

/// `(ħω)² − (cħ|k⃗|)² − (mc²)²`; zero exactly on shell, and the quantity whose
/// square the free-operator determinant is.
pub fn dispersion_residual(omega: f64, wavevector: &Vector3<f64>, mass: f64, hbar: f64, c: f64) -> f64 {
    let e = hbar * omega;
    let p = c * hbar * wavevector.norm();
    let m = mass * c * c;
    e * e - p * p - m * m
}
