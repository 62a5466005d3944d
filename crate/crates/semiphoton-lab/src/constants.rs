//! Physical constants and the unit conventions shared by every module.
//!
//! A [`PhysicalConstants`] record loads either from built-in CODATA 2018
//! defaults or from a flat JSON file (keys `c`, `hbar`, `h`, `e`, `m_e`,
//! `epsilon_0`, `alpha`, each a decimal number in SI units). Every load path
//! re-validates the record invariants: all entries strictly positive,
//! `h = 2π·ħ`, and `α = e²/(4π·ε₀·ħ·c)`.
//!
//! Records are immutable after construction and safe to share across threads.

use std::f64::consts::{PI, TAU};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Relative tolerance for the `h = 2π·ħ` invariant.
pub const PLANCK_REL_TOL: f64 = 1e-9;
/// Relative tolerance for the fine-structure identity `α = e²/(4π·ε₀·ħ·c)`.
pub const ALPHA_REL_TOL: f64 = 1e-6;

/// Validated set of physical constants, SI units throughout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// Speed of light in vacuum (m/s).
    pub c: f64,
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Planck constant (J·s).
    pub h: f64,
    /// Elementary charge (C).
    pub e: f64,
    /// Electron mass (kg).
    pub m_e: f64,
    /// Vacuum permittivity (F/m).
    pub epsilon_0: f64,
    /// Fine-structure constant (dimensionless).
    pub alpha: f64,
}

/// Mirror of the JSON schema with optional fields, so a missing key can be
/// reported by name instead of as a generic parse failure.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstants {
    c: Option<f64>,
    hbar: Option<f64>,
    h: Option<f64>,
    e: Option<f64>,
    m_e: Option<f64>,
    epsilon_0: Option<f64>,
    alpha: Option<f64>,
}

impl PhysicalConstants {
    /// CODATA 2018 recommended values.
    ///
    /// `h` and `e` are exact SI defining constants. `hbar` is stored as
    /// `h/2π` evaluated in full f64 precision rather than the 10-digit
    /// display value: the shortened form misses `h = 2π·ħ` by ~6e-10, which
    /// is enough to pollute chains that mix `h` and `ħ` (the ring flux
    /// quantum is checked to 1e-12).
    pub const fn codata2018() -> Self {
        Self {
            c: 299_792_458.0,
            hbar: 6.626_070_15e-34 / TAU,
            h: 6.626_070_15e-34,
            e: 1.602_176_634e-19,
            m_e: 9.109_383_7015e-31,
            epsilon_0: 8.854_187_8128e-12,
            alpha: 7.297_352_5693e-3,
        }
    }

    /// Natural-units record: `c = ħ = m_e = 1`, `ε₀ = 1/4π`, `e = √α`.
    ///
    /// Satisfies the same invariants as the SI record and keeps every energy
    /// scale at order one, which is what the operator-level tests want.
    pub fn natural() -> Self {
        let alpha = Self::codata2018().alpha;
        Self {
            c: 1.0,
            hbar: 1.0,
            h: TAU,
            e: alpha.sqrt(),
            m_e: 1.0,
            epsilon_0: 1.0 / (4.0 * PI),
            alpha,
        }
    }

    /// Fine-structure constant recomputed from `e`, `ε₀`, `ħ`, `c`.
    pub fn derived_alpha(&self) -> f64 {
        self.e * self.e / (4.0 * PI * self.epsilon_0 * self.hbar * self.c)
    }

    /// Check every record invariant, naming the offending field on failure.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("c", self.c),
            ("hbar", self.hbar),
            ("h", self.h),
            ("e", self.e),
            ("m_e", self.m_e),
            ("epsilon_0", self.epsilon_0),
            ("alpha", self.alpha),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(Error::Constants(format!(
                    "field `{name}` must be finite, got {value}"
                )));
            }
            if value <= 0.0 {
                return Err(Error::Constants(format!(
                    "field `{name}` must be strictly positive, got {value}"
                )));
            }
        }
        let planck_residual = (self.h / (TAU * self.hbar) - 1.0).abs();
        if planck_residual > PLANCK_REL_TOL {
            return Err(Error::Constants(format!(
                "field `h` violates h = 2*pi*hbar (relative residual {planck_residual:.3e}, \
                 tolerance {PLANCK_REL_TOL:.0e})"
            )));
        }
        let alpha_residual = (self.derived_alpha() / self.alpha - 1.0).abs();
        if alpha_residual > ALPHA_REL_TOL {
            return Err(Error::Constants(format!(
                "field `alpha` inconsistent with e, epsilon_0, hbar, c \
                 (relative residual {alpha_residual:.3e}, tolerance {ALPHA_REL_TOL:.0e})"
            )));
        }
        Ok(())
    }

    /// Parse and validate a record from JSON text.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawConstants = serde_json::from_str(text)
            .map_err(|e| Error::Constants(format!("parse error: {e}")))?;
        let get = |name: &str, v: Option<f64>| {
            v.ok_or_else(|| Error::Constants(format!("missing field `{name}`")))
        };
        let k = Self {
            c: get("c", raw.c)?,
            hbar: get("hbar", raw.hbar)?,
            h: get("h", raw.h)?,
            e: get("e", raw.e)?,
            m_e: get("m_e", raw.m_e)?,
            epsilon_0: get("epsilon_0", raw.epsilon_0)?,
            alpha: get("alpha", raw.alpha)?,
        };
        k.validate()?;
        Ok(k)
    }

    /// Serialize to the JSON schema accepted by [`load_constants`].
    pub fn to_json_string(&self) -> String {
        // Serialization of a validated record cannot fail.
        serde_json::to_string_pretty(self).expect("constants serialize")
    }
}

/// Load constants from `source`, or fall back to the CODATA 2018 defaults.
///
/// Invariants are checked on every load, defaults included.
pub fn load_constants(source: Option<&Path>) -> Result<PhysicalConstants> {
    match source {
        None => {
            let k = PhysicalConstants::codata2018();
            k.validate()?;
            Ok(k)
        }
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Error::Constants(format!("cannot read {}: {e}", path.display()))
            })?;
            PhysicalConstants::from_json_str(&text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_pass_validation() {
        let k = load_constants(None).unwrap();
        assert_eq!(k.c, 299_792_458.0);
        assert!((k.h / (TAU * k.hbar) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn default_alpha_matches_derived_value() {
        // Oracle: recompute alpha from the defining combination.
        let k = PhysicalConstants::codata2018();
        let derived = k.e * k.e / (4.0 * PI * k.epsilon_0 * k.hbar * k.c);
        assert!((derived / k.alpha - 1.0).abs() < 1e-6);
        assert!((k.alpha - 7.297_352_5693e-3).abs() < 1e-12);
    }

    #[test]
    fn natural_units_pass_validation() {
        let k = PhysicalConstants::natural();
        k.validate().unwrap();
        assert_eq!(k.c, 1.0);
        assert_eq!(k.hbar, 1.0);
    }

    #[test]
    fn inconsistent_alpha_is_rejected() {
        let mut k = PhysicalConstants::codata2018();
        k.alpha *= 1.0 + 2e-6;
        let err = k.validate().unwrap_err();
        assert!(err.to_string().contains("alpha"), "{err}");
    }

    #[test]
    fn non_positive_field_is_rejected_by_name() {
        let mut k = PhysicalConstants::codata2018();
        k.m_e = 0.0;
        let err = k.validate().unwrap_err();
        assert!(err.to_string().contains("`m_e`"), "{err}");
    }

    #[test]
    fn missing_field_is_reported_by_name() {
        let err = PhysicalConstants::from_json_str(r#"{"c": 1.0}"#).unwrap_err();
        assert!(err.to_string().contains("missing field"), "{err}");
    }

    #[test]
    fn unknown_field_is_rejected() {
        let text = r#"{"c":1,"hbar":1,"h":6.2831853,"e":0.08,"m_e":1,
                       "epsilon_0":0.0795774715,"alpha":0.0072973525693,"zz":1}"#;
        assert!(PhysicalConstants::from_json_str(text).is_err());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let k = PhysicalConstants::codata2018();
        let back = PhysicalConstants::from_json_str(&k.to_json_string()).unwrap();
        assert_eq!(k.c.to_bits(), back.c.to_bits());
        assert_eq!(k.hbar.to_bits(), back.hbar.to_bits());
        assert_eq!(k.h.to_bits(), back.h.to_bits());
        assert_eq!(k.e.to_bits(), back.e.to_bits());
        assert_eq!(k.m_e.to_bits(), back.m_e.to_bits());
        assert_eq!(k.epsilon_0.to_bits(), back.epsilon_0.to_bits());
        assert_eq!(k.alpha.to_bits(), back.alpha.to_bits());
    }

    #[test]
    fn file_load_reads_and_validates() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k.json");
        std::fs::write(&path, PhysicalConstants::natural().to_json_string()).unwrap();
        let k = load_constants(Some(&path)).unwrap();
        assert_eq!(k.c, 1.0);

        std::fs::write(&path, "{\"c\": -1}").unwrap();
        assert!(load_constants(Some(&path)).is_err());
    }
}
