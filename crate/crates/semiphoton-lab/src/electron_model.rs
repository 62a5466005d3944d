//! Torus model of the electron and the audit of its formula chain.
//!
//! The model represents the electron as a torus traced by a ring wave: ring
//! radius `r_s = ħ/(2·mₑ·c)` (half the reduced Compton wavelength), parent
//! wave frequency `ω_p = 2·mₑ·c²/ħ`, cross-section radius `r_c = ζ·r_s`. The
//! chain of charge, mass, and coupling formulas then fixes `ζ = √(πα/2)`
//! (≈ 0.107) from the fine-structure constant, interprets `ζ²` as a vacuum
//! dielectric constant, and ends at the ring flux quantum `h/4e` — half the
//! superconducting value.
//!
//! Charge and field quantities follow the Gaussian-style convention in which
//! `α = q²/(ħc)`; the model charge is therefore `q = √(α·ħ·c)`. Only the flux
//! quantum mixes in SI values, and it is checked against `h/(4e)` computed
//! purely from SI `h` and `e`.
//!
//! Every formula is implemented exactly as the chain states it, never
//! corrected. Where the chain disagrees with itself the discrepancy surfaces
//! in [`audit_consistency`] as a `discrepant` entry carrying the stated
//! factor; the three known ones are the lobe-integral factor 2 in `A.1`, the
//! `ζ²` slip between `A.5` and `A.6`, and the coefficient 2 between `A.6` and
//! `A.7`. Everything else must agree to [`CONSISTENT_REL_TOL`].

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::ring_dynamics::{net_ring_charge, Polarization, RingWaveConfig};
use crate::{Error, Result};

/// Relative tolerance below which an audited pair counts as consistent.
pub const CONSISTENT_REL_TOL: f64 = 1e-10;

/// Quadrature resolution used by the audit's charge integral.
pub const AUDIT_QUADRATURE_STEPS: usize = 10_000;

/// Ring geometry derived from a constants record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RingGeometry {
    /// Parent-wave wavelength `π·ħ/(mₑ·c)` (m).
    pub lambda_p: f64,
    /// Torus ring radius `ħ/(2·mₑ·c)` (m).
    pub r_s: f64,
    /// Parent-wave angular frequency `2·mₑ·c²/ħ` (rad/s).
    pub omega_p: f64,
    /// Ring-wave angular frequency `c/r_s` (rad/s); equals `omega_p`.
    pub omega_s: f64,
}

/// Geometry of the torus from pair-production kinematics: the parent wave
/// carries energy `2·mₑ·c²`, and `λ_p = 2π·r_s` holds identically.
pub fn geometry_from_constants(k: &PhysicalConstants) -> RingGeometry {
    let r_s = k.hbar / (2.0 * k.m_e * k.c);
    RingGeometry {
        lambda_p: PI * k.hbar / (k.m_e * k.c),
        r_s,
        omega_p: 2.0 * k.m_e * k.c * k.c / k.hbar,
        omega_s: k.c / r_s,
    }
}

/// Model charge from amplitude and cross-section radius: `q = E₀·r_c²`.
pub fn charge_formula(e0: f64, r_c: f64) -> f64 {
    e0 * r_c * r_c
}

/// Field amplitude back from the charge: `E₀ = q/r_c²`, the model's
/// Coulomb-law form (with `ζ²` playing the vacuum-constant role).
pub fn coulomb_field(q: f64, r_c: f64) -> f64 {
    q / (r_c * r_c)
}

/// Model mass `m_s = π·ζ²·E₀²·r_s² / (4·ω_s·c)`, verbatim.
pub fn mass_formula(zeta: f64, e0: f64, r_s: f64, omega_s: f64, c: f64) -> f64 {
    PI * zeta * zeta * e0 * e0 * r_s * r_s / (4.0 * omega_s * c)
}

/// Cross-section ratio from the fine-structure constant: `ζ = √(π·α/2)`.
///
/// Only defined for `0 < α < 2/π`; outside that range the ratio would reach
/// 1 and the cross-section would swallow the ring.
pub fn zeta_from_alpha(alpha: f64) -> Result<f64> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha < 2.0 / PI) {
        return Err(Error::InvalidInput(format!(
            "alpha must lie in (0, 2/pi) for a valid cross-section ratio, got {alpha}"
        )));
    }
    Ok((PI * alpha / 2.0).sqrt())
}

/// Coupling constant from the cross-section ratio: `α_q = (2/π)·ζ²`.
/// Exact inverse of [`zeta_from_alpha`] on `(0, 2/π)`.
pub fn coupling_from_zeta(zeta: f64) -> f64 {
    2.0 / PI * zeta * zeta
}

/// Magnetic field holding the ring in cyclotron-like equilibrium,
/// `H = mₑ·c/(e·r_s)`, from the force balance `e·c·H = mₑ·c²/r_s`.
pub fn equilibrium_field(k: &PhysicalConstants, r_s: f64) -> f64 {
    k.m_e * k.c / (k.e * r_s)
}

/// Ring flux quantum, evaluated two ways.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluxQuantum {
    /// Chain value `π·r_s²·H` with `H` from the equilibrium field and `r_s`
    /// from the geometry (Wb).
    pub chain: f64,
    /// Closed form `h/(4e)` from SI constants alone (Wb).
    pub closed_form: f64,
    /// The chain reduces algebraically to `π·ħ/(2e) = h/(4e)`, so its ratio
    /// to `h/e` is exactly 1/4 — half the superconducting quantum `h/2e`.
    pub ratio_to_h_over_e: f64,
}

/// Magnetic flux through the ring: `π·r_s²·H` collapses to `h/(4e)`.
pub fn flux_quantum(k: &PhysicalConstants) -> FluxQuantum {
    let geometry = geometry_from_constants(k);
    let field = equilibrium_field(k, geometry.r_s);
    FluxQuantum {
        chain: PI * geometry.r_s * geometry.r_s * field,
        closed_form: k.h / (4.0 * k.e),
        ratio_to_h_over_e: 0.25,
    }
}

/// The full set of derived torus-model quantities at the calibrated point
/// (model charge equal to the elementary charge in the Gaussian convention).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElectronModelParams {
    /// Parent-wave wavelength (m).
    pub lambda_p: f64,
    /// Ring radius (m).
    pub r_s: f64,
    /// Cross-section radius `ζ·r_s` (m).
    pub r_c: f64,
    /// Cross-section ratio `r_c/r_s`.
    pub zeta: f64,
    /// Parent-wave angular frequency (rad/s).
    pub omega_p: f64,
    /// Ring-wave angular frequency (rad/s).
    pub omega_s: f64,
    /// Field amplitude `q/r_c²` (Gaussian convention).
    pub e0: f64,
    /// Model charge `√(α·ħ·c)` (Gaussian convention).
    pub q: f64,
    /// Model mass from the mass formula (kg); closes on `mₑ`.
    pub m_s: f64,
    /// Model coupling `(2/π)·ζ²`; closes on `α`.
    pub alpha_q: f64,
}

impl ElectronModelParams {
    pub fn from_constants(k: &PhysicalConstants) -> Result<Self> {
        let geometry = geometry_from_constants(k);
        let zeta = zeta_from_alpha(k.alpha)?;
        let r_c = zeta * geometry.r_s;
        let q = (k.alpha * k.hbar * k.c).sqrt();
        let e0 = coulomb_field(q, r_c);
        let m_s = mass_formula(zeta, e0, geometry.r_s, geometry.omega_s, k.c);
        Ok(Self {
            lambda_p: geometry.lambda_p,
            r_s: geometry.r_s,
            r_c,
            zeta,
            omega_p: geometry.omega_p,
            omega_s: geometry.omega_s,
            e0,
            q,
            m_s,
            alpha_q: coupling_from_zeta(zeta),
        })
    }
}

/// Audit verdict for one identity of the model chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditStatus {
    Consistent,
    DiscrepantWithStatedFactor,
}

/// One audited identity: the two independently evaluated sides, the relative
/// residual after accounting for the stated factor (1 for consistent
/// entries), and the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct AuditEntry {
    pub id: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub status: AuditStatus,
    /// Stated discrepancy factor `lhs/rhs`; absent for consistent entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<f64>,
    #[serde(skip_serializing_if = "str::is_empty")]
    pub note: &'static str,
}

impl AuditEntry {
    fn consistent(id: &'static str, lhs: f64, rhs: f64, note: &'static str) -> Self {
        Self {
            id,
            lhs,
            rhs,
            residual: (lhs / rhs - 1.0).abs(),
            status: AuditStatus::Consistent,
            factor: None,
            note,
        }
    }

    fn discrepant(id: &'static str, lhs: f64, rhs: f64, factor: f64, note: &'static str) -> Self {
        Self {
            id,
            lhs,
            rhs,
            residual: (lhs / (rhs * factor) - 1.0).abs(),
            status: AuditStatus::DiscrepantWithStatedFactor,
            factor: Some(factor),
            note,
        }
    }

    /// True when the entry behaves as documented: residual below tolerance,
    /// whether the identity is consistent or carries its stated factor.
    pub fn as_documented(&self) -> bool {
        self.residual.is_finite() && self.residual < CONSISTENT_REL_TOL
    }
}

/// Ids of the audited identities, in report order.
pub const AUDIT_IDS: [&str; 11] = [
    "A.1", "A.2", "A.3", "A.5", "A.6", "A.7", "A.8", "A.10", "A.12", "A.17", "A.19",
];

/// Ids expected to carry a stated discrepancy factor.
pub const EXPECTED_DISCREPANT_IDS: [&str; 3] = ["A.1", "A.6", "A.7"];

/// Per-identity residual report for the whole model chain.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    /// True when every entry matches its documented status: consistent
    /// entries agree to tolerance and discrepant ones show exactly their
    /// stated factor.
    pub fn as_documented(&self) -> bool {
        self.entries.iter().all(AuditEntry::as_documented)
    }

    pub fn entry(&self, id: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn discrepant_ids(&self) -> Vec<&'static str> {
        self.entries
            .iter()
            .filter(|e| e.status == AuditStatus::DiscrepantWithStatedFactor)
            .map(|e| e.id)
            .collect()
    }
}

/// Evaluate every identity of the model chain at the calibrated point and
/// report per-identity residuals. Known discrepancies are labeled with their
/// stated factors; all other pairs must agree to [`CONSISTENT_REL_TOL`].
pub fn audit_consistency(k: &PhysicalConstants) -> Result<AuditReport> {
    let model = ElectronModelParams::from_constants(k)?;
    let cross_section = PI * model.r_c * model.r_c;
    let mut entries = Vec::with_capacity(AUDIT_IDS.len());

    // A.1 — charge of the half-period lobe: direct quadrature of the current
    // integral vs the chain's stated simplification (1/π)·E₀·S. The integral
    // evaluates to (2/π)·E₀·S, a factor 2 above the stated value.
    let ring = RingWaveConfig::new(
        model.r_s,
        model.e0,
        cross_section,
        Polarization::Plane,
        k.hbar,
        k.c,
    )?;
    let quadrature = net_ring_charge(&ring, AUDIT_QUADRATURE_STEPS)?;
    let stated_a1 = model.e0 * cross_section / PI;
    entries.push(AuditEntry::discrepant(
        "A.1",
        quadrature,
        stated_a1,
        2.0,
        "lobe quadrature carries factor 2 over the stated simplification",
    ));

    // A.2 — the stated A.1 value with S = π·r_c² reduces to q = E₀·r_c².
    entries.push(AuditEntry::consistent(
        "A.2",
        stated_a1,
        charge_formula(model.e0, model.r_c),
        "",
    ));

    // A.3 — Coulomb-law inversion of A.2: E₀ = q/r_c² = q/(ζ²·r_s²).
    entries.push(AuditEntry::consistent(
        "A.3",
        coulomb_field(model.q, model.r_c),
        model.q / (model.zeta * model.zeta * model.r_s * model.r_s),
        "",
    ));

    // A.5 — mass formula at the calibrated point closes on the electron mass.
    entries.push(AuditEntry::consistent("A.5", model.m_s, k.m_e, ""));

    // A.6 — stated q-form of the mass vs the A.2+A.5 derivation: off by ζ².
    let stated_a6 = PI * model.q * model.q / (4.0 * model.omega_s * k.c * model.r_s * model.r_s);
    entries.push(AuditEntry::discrepant(
        "A.6",
        stated_a6,
        model.m_s,
        model.zeta * model.zeta,
        "stated q-form misses a 1/zeta^2 from substituting the charge formula",
    ));

    // A.7 — radius from the stated A.6 with ω_s·r_s = c: the stated
    // coefficient is π/2 where the derivation gives π/4.
    let stated_a7 = PI * model.q * model.q / (2.0 * model.m_s * k.c * k.c);
    let derived_a7 = PI * model.q * model.q / (4.0 * model.m_s * k.c * k.c);
    entries.push(AuditEntry::discrepant(
        "A.7",
        stated_a7,
        derived_a7,
        2.0,
        "stated coefficient pi/2 vs pi/4 from the preceding mass form",
    ));

    // A.8 — coupling: q²/(ħc) equals (2/π)·ζ² through the consistent chain.
    entries.push(AuditEntry::consistent(
        "A.8",
        model.q * model.q / (k.hbar * k.c),
        coupling_from_zeta(model.zeta),
        "",
    ));

    // A.10 — the defining relation ζ² = (π/2)·α round-trips exactly.
    entries.push(AuditEntry::consistent(
        "A.10",
        model.zeta * model.zeta,
        PI / 2.0 * k.alpha,
        "",
    ));

    // A.12 — vacuum-constant form E₀ = q/(α·r_s²); equals the A.3 form times
    // the declared dropped coefficient π/2.
    entries.push(AuditEntry::consistent(
        "A.12",
        model.q / (k.alpha * model.r_s * model.r_s),
        PI / 2.0 * coulomb_field(model.q, model.r_c),
        "declared dropped geometric coefficient pi/2",
    ));

    // A.17 — force balance e·c·H = mₑ·c²/r_s with the equilibrium field.
    let field = equilibrium_field(k, model.r_s);
    entries.push(AuditEntry::consistent(
        "A.17",
        k.e * k.c * field,
        k.m_e * k.c * k.c / model.r_s,
        "",
    ));

    // A.19 — flux chain π·r_s²·H against h/(4e) from SI constants alone.
    let flux = flux_quantum(k);
    entries.push(AuditEntry::consistent(
        "A.19",
        flux.chain,
        flux.closed_form,
        "half the superconducting flux quantum h/2e",
    ));

    Ok(AuditReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn codata() -> PhysicalConstants {
        PhysicalConstants::codata2018()
    }

    #[test]
    fn geometry_matches_frozen_codata_values() {
        // Oracles: r_s = half the reduced Compton wavelength, and the direct
        // evaluation of 2·mₑ·c²/ħ; both frozen from independent evaluation.
        let g = geometry_from_constants(&codata());
        assert!((g.r_s / 1.9307963398044529e-13 - 1.0).abs() < 1e-12, "r_s {}", g.r_s);
        assert!((g.omega_p / 1.55268814125866e21 - 1.0).abs() < 1e-12, "omega_p {}", g.omega_p);
        let k = codata();
        let half_compton = k.hbar / (k.m_e * k.c) / 2.0;
        assert!((g.r_s / half_compton - 1.0).abs() < 1e-10);
    }

    #[test]
    fn wavelength_is_circumference_for_any_constants() {
        for k in [codata(), PhysicalConstants::natural()] {
            let g = geometry_from_constants(&k);
            assert!((g.lambda_p / (2.0 * PI * g.r_s) - 1.0).abs() < 1e-14);
            assert!((g.omega_p * g.r_s / k.c - 1.0).abs() < 1e-14);
            assert!((g.omega_s / g.omega_p - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn charge_and_field_formulas_invert() {
        assert_eq!(charge_formula(0.0, 2.0), 0.0);
        assert_eq!(charge_formula(1.0, 1.0), 1.0);
        assert_eq!(coulomb_field(1.0, 1.0), 1.0);
        let (e0, r_c) = (3.7, 0.11);
        let q = charge_formula(e0, r_c);
        assert!((coulomb_field(q, r_c) - e0).abs() < 1e-12 * e0);
        // ζ = 0.107 cross-section: q = ζ²·E₀·r_s².
        let (zeta, r_s) = (0.107f64, 2.0f64);
        let q = charge_formula(e0, zeta * r_s);
        assert!((q - 0.011449 * e0 * r_s * r_s).abs() < 1e-12 * q);
    }

    #[test]
    fn mass_formula_scalings() {
        assert_eq!(mass_formula(0.107, 0.0, 1.0, 1.0, 1.0), 0.0);
        let single = mass_formula(0.107, 1.5, 1.0, 1.0, 1.0);
        let doubled = mass_formula(0.107, 3.0, 1.0, 1.0, 1.0);
        assert!((doubled / single - 4.0).abs() < 1e-12);
    }

    #[test]
    fn zeta_golden_value() {
        let zeta = zeta_from_alpha(1.0 / 137.036).unwrap();
        assert!((zeta - 0.107).abs() < 5e-4, "zeta {zeta}");
        let zeta = zeta_from_alpha(codata().alpha).unwrap();
        assert!((zeta - 0.107).abs() < 5e-4, "zeta {zeta}");
        // Frozen from independent evaluation of sqrt(pi*alpha/2).
        assert!((zeta / 0.10706378758097315 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zeta_domain_is_enforced() {
        assert!(zeta_from_alpha(0.0).is_err());
        assert!(zeta_from_alpha(2.0 / PI + 1e-6).is_err());
        // Just inside the boundary the ratio approaches 1.
        let z = zeta_from_alpha(2.0 / PI - 1e-12).unwrap();
        assert!((z - 1.0).abs() < 1e-9);
    }

    #[test]
    fn coupling_coefficient_matches_two_over_pi() {
        let c1 = coupling_from_zeta(1.0);
        assert!((c1 - 2.0 / PI).abs() < 1e-15);
        assert!((c1 - 0.637).abs() < 1e-3);
        assert!((coupling_from_zeta(0.107) - 7.289e-3).abs() < 1e-6);
        assert_eq!(coupling_from_zeta(0.0), 0.0);
    }

    #[test]
    fn zeta_and_coupling_are_inverse() {
        for alpha in [1e-4, 7.2973525693e-3, 0.1, 0.5] {
            let zeta = zeta_from_alpha(alpha).unwrap();
            assert!((coupling_from_zeta(zeta) / alpha - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn equilibrium_field_value_and_scaling() {
        let k = codata();
        let g = geometry_from_constants(&k);
        let h_field = equilibrium_field(&k, g.r_s);
        // Oracle: the algebraic reduction 2·mₑ²·c²/(e·ħ), evaluated
        // independently and frozen.
        let reduced = 2.0 * k.m_e * k.m_e * k.c * k.c / (k.e * k.hbar);
        assert!((h_field / reduced - 1.0).abs() < 1e-12);
        assert!((h_field / 8.828010437389744e9 - 1.0).abs() < 1e-12, "H {h_field}");
        assert!((equilibrium_field(&k, 2.0 * g.r_s) / h_field - 0.5).abs() < 1e-15);
    }

    #[test]
    fn flux_quantum_closes_on_quarter_ratio() {
        let k = codata();
        let flux = flux_quantum(&k);
        assert!((flux.chain / flux.closed_form - 1.0).abs() < 1e-12);
        assert_eq!(flux.ratio_to_h_over_e, 0.25);
        // Frozen CODATA value of h/(4e), and the superconducting ratio.
        assert!((flux.closed_form / 1.0339169242309648e-15 - 1.0).abs() < 1e-12);
        assert!((flux.closed_form / (k.h / (2.0 * k.e)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn model_point_closes_on_electron_mass_and_alpha() {
        let k = codata();
        let m = ElectronModelParams::from_constants(&k).unwrap();
        assert!((m.m_s / k.m_e - 1.0).abs() < 1e-12, "m_s {}", m.m_s);
        assert!((m.alpha_q / k.alpha - 1.0).abs() < 1e-14);
        assert!((m.q * m.q / (k.hbar * k.c) / k.alpha - 1.0).abs() < 1e-14);
        assert!(m.zeta > 0.0 && m.zeta < 1.0);
        assert!((m.r_c / (m.zeta * m.r_s) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn audit_reports_exactly_the_documented_discrepancies() {
        let report = audit_consistency(&codata()).unwrap();
        let ids: Vec<_> = report.entries.iter().map(|e| e.id).collect();
        assert_eq!(ids, AUDIT_IDS);
        assert_eq!(report.discrepant_ids(), EXPECTED_DISCREPANT_IDS);
        assert!(report.as_documented(), "{report:?}");

        let a1 = report.entry("A.1").unwrap();
        assert!((a1.lhs / a1.rhs - 2.0).abs() < 1e-8, "A.1 ratio {}", a1.lhs / a1.rhs);
        let a6 = report.entry("A.6").unwrap();
        let zeta2 = PI / 2.0 * codata().alpha;
        assert!((a6.lhs / a6.rhs / zeta2 - 1.0).abs() < 1e-10);
        let a7 = report.entry("A.7").unwrap();
        assert!((a7.lhs / a7.rhs - 2.0).abs() < 1e-12);
        let a19 = report.entry("A.19").unwrap();
        assert!(a19.residual < 1e-12);
    }

    #[test]
    fn audit_composition_recovers_alpha_exactly() {
        let k = codata();
        let zeta = zeta_from_alpha(k.alpha).unwrap();
        assert!((coupling_from_zeta(zeta) / k.alpha - 1.0).abs() < 1e-14);
    }

    proptest! {
        /// The flux ratio is an algebraic cancellation, independent of the
        /// constants record, as long as h = 2πħ.
        #[test]
        fn flux_ratio_is_record_independent(
            hbar in 1e-40f64..1.0, m_e in 1e-35f64..1.0, c in 1.0f64..1e9, e in 1e-25f64..1.0,
        ) {
            let k = PhysicalConstants {
                c,
                hbar,
                h: std::f64::consts::TAU * hbar,
                e,
                m_e,
                epsilon_0: 1.0,
                alpha: 1.0, // unused by the flux chain
            };
            let flux = flux_quantum(&k);
            prop_assert!((flux.chain / (k.h / k.e) / 0.25 - 1.0).abs() < 1e-12);
            prop_assert_eq!(flux.ratio_to_h_over_e, 0.25);
        }
    }
}
