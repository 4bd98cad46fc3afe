//! Curvature of a model surface and the generalized trigonometric
//! functions that let one formula serve both the sphere and the plane.
//!
//! With `σ = √κ`:
//!
//! * `S_κ(x) = sin(σx)/σ`, which is `x` at `κ = 0`;
//! * `C_κ(x) = cos(σx)`, which is `1` at `κ = 0`;
//! * `atan_κ(y, x) = atan2(σy, x)/σ`, which is `y/x` at `κ = 0`.
//!
//! Each switches to a short Taylor series once the scaled argument drops
//! below [`SERIES_CUTOFF`], so nothing divides by a tiny `σ`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Scaled arguments below this use the series branch.
pub const SERIES_CUTOFF: f64 = 1e-4;

/// Gaussian curvature `κ ≥ 0` of a model surface: the plane at `κ = 0`,
/// otherwise the sphere of radius `1/√κ`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Curvature(f64);

impl Curvature {
    pub const PLANE: Curvature = Curvature(0.0);
    pub const UNIT_SPHERE: Curvature = Curvature(1.0);

    pub fn new(kappa: f64) -> Result<Self> {
        if !kappa.is_finite() || kappa < 0.0 {
            return Err(GeomError::domain(format!(
                "curvature must be finite and non-negative, got {kappa}"
            )));
        }
        Ok(Curvature(kappa))
    }

    /// Curvature of the sphere with the given radius.
    pub fn from_radius(radius: f64) -> Result<Self> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(GeomError::domain(format!(
                "radius must be finite and positive, got {radius}"
            )));
        }
        Curvature::new(1.0 / (radius * radius))
    }

    #[inline]
    pub fn kappa(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_plane(self) -> bool {
        self.0 == 0.0
    }

    #[inline]
    pub fn sqrt_kappa(self) -> f64 {
        self.0.sqrt()
    }

    /// Sphere radius, `None` for the plane.
    pub fn radius(self) -> Option<f64> {
        (!self.is_plane()).then(|| 1.0 / self.sqrt_kappa())
    }

    /// Length of a half great circle, `π/√κ`; infinite on the plane.
    pub fn half_circumference(self) -> f64 {
        if self.is_plane() {
            f64::INFINITY
        } else {
            PI / self.sqrt_kappa()
        }
    }

    /// `S_κ(x)`.
    pub fn sin(self, x: f64) -> f64 {
        x * sinc(self.sqrt_kappa() * x)
    }

    /// `C_κ(x)`.
    pub fn cos(self, x: f64) -> f64 {
        (self.sqrt_kappa() * x).cos()
    }

    /// `atan2(σy, x)/σ`, the inverse of `x ↦ S_κ(x)/C_κ(x)` extended to all
    /// quadrants.
    pub fn atan2(self, y: f64, x: f64) -> f64 {
        let sigma = self.sqrt_kappa();
        if x > 0.0 {
            let u = sigma * y / x;
            if u.abs() < SERIES_CUTOFF {
                let u2 = u * u;
                return (y / x) * (1.0 - u2 / 3.0 + u2 * u2 / 5.0);
            }
        }
        if sigma == 0.0 {
            // x <= 0 on the plane has no finite arc.
            return if x == 0.0 && y == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
        }
        (sigma * y).atan2(x) / sigma
    }

    /// Both curvatures must agree exactly.
    pub fn ensure_same(self, other: Curvature) -> Result<()> {
        if self.0 == other.0 {
            Ok(())
        } else {
            Err(GeomError::CurvatureMismatch {
                left: self.0,
                right: other.0,
            })
        }
    }
}

impl Default for Curvature {
    fn default() -> Self {
        Curvature::PLANE
    }
}

impl fmt::Display for Curvature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "κ={}", self.0)
    }
}

impl TryFrom<f64> for Curvature {
    type Error = GeomError;
    fn try_from(kappa: f64) -> Result<Self> {
        Curvature::new(kappa)
    }
}

impl From<Curvature> for f64 {
    fn from(c: Curvature) -> f64 {
        c.0
    }
}

/// `sin(t)/t`, exact 1 at 0.
pub(crate) fn sinc(t: f64) -> f64 {
    if t.abs() < SERIES_CUTOFF {
        let t2 = t * t;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        t.sin() / t
    }
}
