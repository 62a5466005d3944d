//! Named invariant suites behind the `verify` CLI command.
//!
//! Each check evaluates one library invariant and reports the observed value
//! against its bound. Operator-level suites run in natural units so every
//! energy scale is order one; the model suite runs on the loaded constants
//! record. Randomized draws use a fixed seed, so output is byte-stable.

use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::dirac_algebra::{
    assemble_free_operator, external_field_equivalence, helicity_form_operator,
    increment_to_mass_check, max_entry_abs, max_entry_diff, normalized_det, on_shell_omega,
    Branch, DiracBasis, EnergyMomentum, ExternalPotentials, PlaneWaveParams, Spinor,
};
use nalgebra::Complex;
use crate::electron_model::{
    audit_consistency, coupling_from_zeta, flux_quantum, geometry_from_constants, zeta_from_alpha,
    ElectronModelParams, EXPECTED_DISCREPANT_IDS,
};
use crate::em_correspondence::{
    angular_velocity, default_fd_steps, inner_helicity_sign, poynting, pseudoscalar,
    rotation_sense, sample_trig_solution, scalar_equation_residuals, MotionAlignment, System,
    TrigSolutionParams,
};
use crate::ring_dynamics::{
    dipole_potential, displacement_current, net_ring_charge, normal_vector_derivative_check,
    plane_charge_closed_form, Polarization, RingWaveConfig,
};

/// Which invariant suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Algebra,
    Fields,
    Ring,
    Model,
}

/// Pass/fail direction of a check bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", content = "value", tag = "kind")]
pub enum Bound {
    AtMost(f64),
    AtLeast(f64),
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::AtMost(v) => write!(f, "<= {v:.3e}"),
            Bound::AtLeast(v) => write!(f, ">= {v:.3e}"),
        }
    }
}

/// One evaluated invariant.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub observed: f64,
    pub bound: Bound,
    pub passed: bool,
}

impl Check {
    fn new(suite: &'static str, name: &'static str, observed: f64, bound: Bound) -> Self {
        let passed = observed.is_finite()
            && match bound {
                Bound::AtMost(v) => observed <= v,
                Bound::AtLeast(v) => observed >= v,
            };
        Self {
            suite,
            name,
            observed,
            bound,
            passed,
        }
    }
}

/// Run a suite against a constants record.
pub fn run(suite: Suite, k: &PhysicalConstants) -> Vec<Check> {
    match suite {
        Suite::All => {
            let mut out = algebra_suite();
            out.extend(fields_suite());
            out.extend(ring_suite());
            out.extend(model_suite(k));
            out
        }
        Suite::Algebra => algebra_suite(),
        Suite::Fields => fields_suite(),
        Suite::Ring => ring_suite(),
        Suite::Model => model_suite(k),
    }
}

fn random_params(rng: &mut ChaCha8Rng) -> PlaneWaveParams {
    PlaneWaveParams::new(
        rng.random_range(0.0..3.0),
        Vector3::new(
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        ),
        rng.random_range(0.0..2.0),
        Spinor::zeros(),
    )
    .expect("valid random params")
}

fn algebra_suite() -> Vec<Check> {
    const SUITE: &str = "algebra";
    let b = DiracBasis::standard();
    let mut out = Vec::new();

    out.push(Check::new(
        SUITE,
        "basis identity residuals",
        b.max_invariant_residual(),
        Bound::AtMost(1e-14),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(0xA1);
    let mut on_shell_worst: f64 = 0.0;
    let mut off_shell_worst = f64::INFINITY;
    for _ in 0..100 {
        let kvec = Vector3::new(
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        );
        let mass = rng.random_range(0.0..2.0);
        let omega = on_shell_omega(&kvec, mass, 1.0, 1.0);
        let p = PlaneWaveParams::new(omega, kvec, mass, Spinor::zeros()).unwrap();
        let op = assemble_free_operator(&b, &p, Branch::Electron, 1.0, 1.0);
        on_shell_worst = on_shell_worst.max(normalized_det(&op));

        let p_off = PlaneWaveParams::new(1.2 * omega, kvec, mass, Spinor::zeros()).unwrap();
        let op_off = assemble_free_operator(&b, &p_off, Branch::Electron, 1.0, 1.0);
        off_shell_worst = off_shell_worst.min(normalized_det(&op_off));
    }
    out.push(Check::new(
        SUITE,
        "on-shell determinant vanishes (100 random draws)",
        on_shell_worst,
        Bound::AtMost(1e-10),
    ));
    out.push(Check::new(
        SUITE,
        "off-shell determinant stays large (100 random draws)",
        off_shell_worst,
        Bound::AtLeast(1e-3),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(0xA2);
    let mut substitution_worst: f64 = 0.0;
    for _ in 0..100 {
        let p = random_params(&mut rng);
        let pot = ExternalPotentials::new(
            rng.random_range(-2.0..2.0),
            Vector3::new(
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            ),
            rng.random_range(-1.0..1.0),
        )
        .unwrap();
        let inc = EnergyMomentum {
            energy: rng.random_range(-2.0..2.0),
            momentum: Vector3::new(
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            ),
        };
        substitution_worst =
            substitution_worst.max(max_entry_abs(&external_field_equivalence(&b, &p, &pot, 1.0, 1.0)));
        substitution_worst =
            substitution_worst.max(max_entry_abs(&increment_to_mass_check(&b, &p, &inc, 1.0, 1.0)));
    }
    out.push(Check::new(
        SUITE,
        "structural substitutions return zero (100 random draws)",
        substitution_worst,
        Bound::AtMost(1e-13),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(0xA3);
    let left = b.alpha5 * b.beta * Complex::new(0.0, 1.0);
    let mut helicity_worst: f64 = 0.0;
    for _ in 0..100 {
        let p = random_params(&mut rng);
        for branch in [Branch::Electron, Branch::Positron] {
            let simplified = helicity_form_operator(&b, &p, branch, 1.0, 1.0);
            let product = left * assemble_free_operator(&b, &p, branch, 1.0, 1.0);
            helicity_worst = helicity_worst.max(max_entry_diff(&simplified, &product));
        }
    }
    out.push(Check::new(
        SUITE,
        "helicity form equals left-multiplied product (100 random draws)",
        helicity_worst,
        Bound::AtMost(1e-14),
    ));

    let massless = PlaneWaveParams::new(1.3, Vector3::new(0.4, -0.8, 0.3), 0.0, Spinor::zeros()).unwrap();
    let op = assemble_free_operator(&b, &massless, Branch::Electron, 1.0, 1.0);
    let commutator = b.alpha5 * op - op * b.alpha5;
    out.push(Check::new(
        SUITE,
        "alpha5 commutes with the massless operator",
        max_entry_abs(&commutator),
        Bound::AtMost(1e-14),
    ));

    out
}

fn fields_suite() -> Vec<Check> {
    const SUITE: &str = "fields";
    let mut out = Vec::new();
    let a0 = 1.0;
    let prime = TrigSolutionParams::new(a0, 1.0, 1.0, System::Prime, 1.0).unwrap();
    let dprime = TrigSolutionParams::new(a0, 1.0, 1.0, System::DoublePrime, 1.0).unwrap();

    let mut magnitude_worst: f64 = 0.0;
    let mut orthogonality_worst: f64 = 0.0;
    let mut transversality_worst: f64 = 0.0;
    let mut poynting_worst: f64 = 0.0;
    let mut poynting_sum_worst: f64 = 0.0;
    for i in 0..16 {
        let t = i as f64 * std::f64::consts::TAU / 16.0;
        for params in [&prime, &dprime] {
            let s = sample_trig_solution(params, t, 0.3);
            magnitude_worst = magnitude_worst
                .max((s.e.norm() - a0).abs())
                .max((s.h.norm() - a0).abs());
            orthogonality_worst = orthogonality_worst.max(pseudoscalar(&s).abs());
            transversality_worst = transversality_worst.max(s.e.y.abs()).max(s.h.y.abs());
        }
        let sp = poynting(&sample_trig_solution(&prime, t, 0.0));
        let sd = poynting(&sample_trig_solution(&dprime, t, 0.0));
        poynting_worst = poynting_worst
            .max((sp - Vector3::new(0.0, a0 * a0, 0.0)).norm())
            .max((sd - Vector3::new(0.0, -a0 * a0, 0.0)).norm());
        poynting_sum_worst = poynting_sum_worst.max((sp + sd).norm());
    }
    out.push(Check::new(
        SUITE,
        "field magnitudes stay at the amplitude",
        magnitude_worst,
        Bound::AtMost(1e-12 * a0),
    ));
    out.push(Check::new(
        SUITE,
        "pseudoscalar E.H vanishes on both solutions",
        orthogonality_worst,
        Bound::AtMost(1e-12 * a0 * a0),
    ));
    out.push(Check::new(
        SUITE,
        "transversality: no field component along motion",
        transversality_worst,
        Bound::AtMost(0.0),
    ));
    out.push(Check::new(
        SUITE,
        "Poynting vectors are +/- A0^2 along the axis (16 phases)",
        poynting_worst,
        Bound::AtMost(1e-12 * a0 * a0),
    ));
    out.push(Check::new(
        SUITE,
        "opposite-system Poynting vectors cancel",
        poynting_sum_worst,
        Bound::AtMost(1e-12 * a0 * a0),
    ));

    let residual_max = |params: &TrigSolutionParams, system: System, scale: f64| {
        let (dt, dy) = default_fd_steps(params.omega, params.k, scale);
        let mut worst: f64 = 0.0;
        for i in 0..5 {
            for j in 0..5 {
                let r = scalar_equation_residuals(
                    |t, y| sample_trig_solution(params, t, y),
                    system,
                    0.0,
                    0.2 + i as f64,
                    0.1 + j as f64,
                    dt,
                    dy,
                    1.0,
                    1.0,
                );
                worst = worst.max(r.iter().fold(0.0f64, |m, v| m.max(v.abs())));
            }
        }
        worst
    };
    let coarse = residual_max(&prime, System::Prime, 1e-4);
    let fine = residual_max(&prime, System::Prime, 5e-5);
    out.push(Check::new(
        SUITE,
        "homogeneous equations hold on the matching solution (5x5 grid)",
        coarse,
        Bound::AtMost(1e-8 * a0 * prime.k),
    ));
    let ratio = coarse / fine;
    out.push(Check::new(
        SUITE,
        "finite-difference residual converges at second order",
        ratio,
        Bound::AtLeast(3.5),
    ));
    out.push(Check::new(
        SUITE,
        "second-order convergence ratio stays below 4.5",
        ratio,
        Bound::AtMost(4.5),
    ));
    out.push(Check::new(
        SUITE,
        "cross-system evaluation detects the mismatch",
        residual_max(&prime, System::DoublePrime, 1e-4),
        Bound::AtLeast(0.1 * a0 * prime.k),
    ));

    let sp = rotation_sense(&prime).unwrap();
    let sd = rotation_sense(&dprime).unwrap();
    let opposed = (sp.relative_to_motion == MotionAlignment::Aligned
        && sd.relative_to_motion == MotionAlignment::AntiAligned) as i32 as f64;
    out.push(Check::new(
        SUITE,
        "rotation sense: prime aligned and double-prime anti-aligned",
        opposed,
        Bound::AtLeast(1.0),
    ));

    let mut sign_spread: f64 = 0.0;
    let base = inner_helicity_sign(&prime).unwrap() as f64;
    for i in 0..16 {
        let w = angular_velocity(&prime, i as f64 * 0.37);
        sign_spread = sign_spread.max((w.y.signum() - base).abs());
    }
    out.push(Check::new(
        SUITE,
        "inner helicity sign is phase independent",
        sign_spread,
        Bound::AtMost(0.0),
    ));

    out
}

fn ring_suite() -> Vec<Check> {
    const SUITE: &str = "ring";
    let mut out = Vec::new();
    let plane = RingWaveConfig::new(1.0, 2.0, 3.0, Polarization::Plane, 1.0, 1.0).unwrap();
    let circular = RingWaveConfig::new(1.0, 2.0, 3.0, Polarization::Circular, 1.0, 1.0).unwrap();

    out.push(Check::new(
        SUITE,
        "normal-vector rate matches -(v_p/r_p) tau (64 samples)",
        normal_vector_derivative_check(&plane, 64, 1e-6).unwrap(),
        Bound::AtMost(1e-6 * plane.light_speed() / plane.r_p),
    ));
    // Convergence is measured at steps where truncation still dominates
    // roundoff.
    let coarse = normal_vector_derivative_check(&plane, 64, 1e-3).unwrap();
    let fine = normal_vector_derivative_check(&plane, 64, 5e-4).unwrap();
    out.push(Check::new(
        SUITE,
        "normal-vector finite difference converges at second order",
        coarse / fine,
        Bound::AtLeast(3.5),
    ));

    let e0 = plane.e0;
    let mut jn_worst: f64 = 0.0;
    for i in 1..8 {
        let phase = i as f64 * 0.7;
        let s = displacement_current(&plane, |p: f64| e0 * p.cos(), phase);
        let closed = -plane.omega_p / (4.0 * std::f64::consts::PI) * e0 * phase.sin();
        jn_worst = jn_worst.max((s.j_n - closed).abs() / closed.abs().max(1e-3));
    }
    out.push(Check::new(
        SUITE,
        "normal current matches the closed-form derivative",
        jn_worst,
        Bound::AtMost(1e-6),
    ));

    let s1 = displacement_current(&plane, |p: f64| e0 * p.cos(), 0.4);
    let s2 = displacement_current(&plane, |p: f64| 2.0 * e0 * p.cos(), 0.4);
    out.push(Check::new(
        SUITE,
        "tangential current is linear in the field",
        (s2.j_tau - 2.0 * s1.j_tau).abs(),
        Bound::AtMost(1e-12 * s1.j_tau.abs()),
    ));

    let q_plane = net_ring_charge(&plane, 10_000).unwrap();
    let q_circ = net_ring_charge(&circular, 10_000).unwrap();
    out.push(Check::new(
        SUITE,
        "circularly polarized ring carries no net charge",
        (q_circ / q_plane).abs(),
        Bound::AtMost(1e-9),
    ));
    out.push(Check::new(
        SUITE,
        "plane-polarized quadrature matches the antiderivative",
        (q_plane / plane_charge_closed_form(&plane) - 1.0).abs(),
        Bound::AtMost(1e-8),
    ));

    let other = RingWaveConfig::new(7.5, 2.0, 3.0, Polarization::Plane, 1.0, 1.0).unwrap();
    out.push(Check::new(
        SUITE,
        "plane charge is independent of the ring frequency",
        (net_ring_charge(&other, 10_000).unwrap() / q_plane - 1.0).abs(),
        Bound::AtMost(1e-10),
    ));

    let (q, r, eps0) = (1.3, 2.0, 0.9);
    let scale = q / eps0 / r;
    let near = dipole_potential(q, 1e-9 * r, r, 0.0, eps0).unwrap();
    let far = dipole_potential(q, 1e9 * r, r, 0.0, eps0).unwrap();
    out.push(Check::new(
        SUITE,
        "dipole potential vanishes at small separation",
        (near / scale).abs(),
        Bound::AtMost(1e-6),
    ));
    out.push(Check::new(
        SUITE,
        "dipole potential reaches the single-charge limit",
        (far / scale - 1.0).abs(),
        Bound::AtMost(1e-6),
    ));

    let mut monotone = f64::INFINITY;
    let mut prev = dipole_potential(q, 0.0, r, 0.0, eps0).unwrap();
    for i in 1..32 {
        let v = dipole_potential(q, i as f64 * 0.25, r, 0.0, eps0).unwrap();
        monotone = monotone.min(v - prev);
        prev = v;
    }
    out.push(Check::new(
        SUITE,
        "dipole potential grows with separation on axis",
        monotone,
        Bound::AtLeast(0.0),
    ));

    out
}

fn model_suite(k: &PhysicalConstants) -> Vec<Check> {
    const SUITE: &str = "model";
    let mut out = Vec::new();

    match zeta_from_alpha(k.alpha) {
        Ok(zeta) => {
            out.push(Check::new(
                SUITE,
                "cross-section ratio zeta matches 0.107",
                (zeta - 0.107).abs(),
                Bound::AtMost(5e-4),
            ));
            out.push(Check::new(
                SUITE,
                "zeta/coupling round trip recovers alpha",
                (coupling_from_zeta(zeta) / k.alpha - 1.0).abs(),
                Bound::AtMost(1e-14),
            ));
        }
        Err(_) => out.push(Check::new(
            SUITE,
            "cross-section ratio zeta matches 0.107",
            f64::NAN,
            Bound::AtMost(5e-4),
        )),
    }

    out.push(Check::new(
        SUITE,
        "coupling coefficient at zeta=1 is 2/pi (0.637)",
        (coupling_from_zeta(1.0) - 0.637).abs(),
        Bound::AtMost(1e-3),
    ));

    let g = geometry_from_constants(k);
    out.push(Check::new(
        SUITE,
        "wavelength equals the ring circumference",
        (g.lambda_p / (2.0 * std::f64::consts::PI * g.r_s) - 1.0).abs(),
        Bound::AtMost(1e-14),
    ));
    out.push(Check::new(
        SUITE,
        "ring radius is half the reduced Compton wavelength",
        (g.r_s / (k.hbar / (k.m_e * k.c) / 2.0) - 1.0).abs(),
        Bound::AtMost(1e-10),
    ));
    out.push(Check::new(
        SUITE,
        "ring frequency satisfies omega_p * r_s = c",
        (g.omega_p * g.r_s / k.c - 1.0).abs(),
        Bound::AtMost(1e-12),
    ));

    let flux = flux_quantum(k);
    out.push(Check::new(
        SUITE,
        "flux chain equals h/(4e)",
        (flux.chain / flux.closed_form - 1.0).abs(),
        Bound::AtMost(1e-12),
    ));
    out.push(Check::new(
        SUITE,
        "flux ratio to h/e is exactly 1/4",
        (flux.ratio_to_h_over_e - 0.25).abs(),
        Bound::AtMost(0.0),
    ));

    match ElectronModelParams::from_constants(k) {
        Ok(model) => out.push(Check::new(
            SUITE,
            "mass formula closes on the electron mass",
            (model.m_s / k.m_e - 1.0).abs(),
            Bound::AtMost(1e-12),
        )),
        Err(_) => out.push(Check::new(
            SUITE,
            "mass formula closes on the electron mass",
            f64::NAN,
            Bound::AtMost(1e-12),
        )),
    }

    match audit_consistency(k) {
        Ok(report) => {
            let worst = report
                .entries
                .iter()
                .map(|e| e.residual)
                .fold(0.0f64, f64::max);
            out.push(Check::new(
                SUITE,
                "audit entries match their documented status",
                worst,
                Bound::AtMost(1e-10),
            ));
            let expected_flags = (report.discrepant_ids() == EXPECTED_DISCREPANT_IDS) as i32 as f64;
            out.push(Check::new(
                SUITE,
                "audit flags exactly the three known discrepancies",
                expected_flags,
                Bound::AtLeast(1.0),
            ));
        }
        Err(_) => out.push(Check::new(
            SUITE,
            "audit entries match their documented status",
            f64::NAN,
            Bound::AtMost(1e-10),
        )),
    }

    out
}
