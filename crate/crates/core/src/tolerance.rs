use crate::error::{GeomError, Result};

/// Default relative margin for strict inequalities.
pub const DEFAULT_STRICT: f64 = 1e-9;

/// Margin that a "strictly greater" comparison must clear: `strict ·
/// max(1, scale)`, where `scale` is the perimeter of the object checked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    strict: f64,
}

impl Tolerance {
    pub fn new(strict: f64) -> Result<Self> {
        if !(strict >= 1e-12) || !strict.is_finite() {
            return Err(GeomError::domain(format!(
                "tolerance must be a finite value >= 1e-12, got {strict}"
            )));
        }
        Ok(Tolerance { strict })
    }

    pub fn strict(&self) -> f64 {
        self.strict
    }

    pub fn margin(&self, scale: f64) -> f64 {
        self.strict * scale.max(1.0)
    }

    /// `lhs > rhs` by more than the scaled margin.
    pub fn exceeds(&self, lhs: f64, rhs: f64, scale: f64) -> bool {
        lhs - rhs > self.margin(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            strict: DEFAULT_STRICT,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn margin_scales_above_one() {
        let t = Tolerance::default();
        assert_eq!(t.margin(0.01), 1e-9);
        assert_eq!(t.margin(5.0), 5e-9);
        assert!(t.exceeds(1.0 + 2e-9, 1.0, 0.5));
        assert!(!t.exceeds(1.0 + 2e-9, 1.0, 3.0));
    }

    #[test]
    fn override_floor() {
        assert!(Tolerance::new(1e-13).is_err());
        assert!(Tolerance::new(1e-12).is_ok());
        assert!(Tolerance::new(f64::NAN).is_err());
    }
}
