//! Verification toolkit for an electromagnetic ring-wave model of leptons.
//!
//! The library covers four layers of the model and cross-checks each one
//! numerically:
//!
//! * [`dirac_algebra`] — the 4×4 wave-operator algebra: anticommutation
//!   relations, free / external-field / mass-doubled operators, the
//!   dispersion determinant, and the helicity (chirality) form.
//! * [`em_correspondence`] — the electromagnetic form of the wave equations
//!   for a wave moving along `y`: the eight scalar field equations, their
//!   trigonometric solutions, Poynting direction, rotation sense, and the
//!   pseudoscalar invariant `E·H`.
//! * [`ring_dynamics`] — displacement currents of a wave guided on a circular
//!   trajectory, the net-charge quadrature that separates plane-polarized
//!   (charged) from circularly polarized (neutral) ring waves, and the
//!   two-charge dipole potential.
//! * [`electron_model`] — the torus model of the electron: geometry from
//!   physical constants, charge/mass/coupling formulas, the cross-section
//!   ratio ζ = √(πα/2), the ring flux quantum h/4e, and a consistency audit
//!   of the whole formula chain that flags the known internal discrepancies.
//!
//! [`constants`] supplies validated CODATA 2018 values (or a user JSON file)
//! and a natural-units record for desk-scale work; [`verify`] packages the
//! module invariants into named check suites consumed by the CLI.
//!
//! ```
//! use semiphoton_lab::constants::PhysicalConstants;
//! use semiphoton_lab::electron_model;
//!
//! let k = PhysicalConstants::codata2018();
//! let zeta = electron_model::zeta_from_alpha(k.alpha).unwrap();
//! assert!((zeta - 0.107).abs() < 5e-4);
//! ```

pub mod cli;
pub mod constants;
pub mod dirac_algebra;
pub mod electron_model;
pub mod em_correspondence;
pub mod numeric;
pub mod ring_dynamics;
pub mod verify;

mod error;
pub use error::{Error, Result};
