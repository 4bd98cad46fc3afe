use std::fmt;
use std::str::FromStr;

use crate::error::GeomError;

/// Which comparison statement a report checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    CauchyArm,
    SphereToPlane,
    GrowingSphere,
    ThinTriangle,
    AllAngles,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::CauchyArm,
        TheoremId::SphereToPlane,
        TheoremId::GrowingSphere,
        TheoremId::ThinTriangle,
        TheoremId::AllAngles,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::CauchyArm => "cauchy_arm",
            TheoremId::SphereToPlane => "sphere_to_plane",
            TheoremId::GrowingSphere => "growing_sphere",
            TheoremId::ThinTriangle => "thin_triangle",
            TheoremId::AllAngles => "all_angles",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| GeomError::Domain(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Outcome of one checked instance.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub instance_seed: u64,
    /// Named before/after quantities, in insertion order.
    pub quantities: Vec<(String, f64)>,
    pub verdict: Verdict,
    pub margin: f64,
}

impl TheoremReport {
    /// Passes only when every stage held and `margin` clears `required`.
    pub fn new(
        theorem_id: TheoremId,
        instance_seed: u64,
        quantities: Vec<(String, f64)>,
        stages_ok: bool,
        margin: f64,
        required: f64,
    ) -> Self {
        let verdict = if stages_ok && margin > required {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        TheoremReport {
            theorem_id,
            instance_seed,
            quantities,
            verdict,
            margin,
        }
    }

    pub fn quantity(&self, name: &str) -> Option<f64> {
        self.quantities
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    /// Column header for [`TheoremReport::to_line`].
    pub const HEADER: &'static str = "theorem_id,seed,margin,verdict";

    /// `theorem_id,seed,margin,verdict` with the margin in `{:.12e}`.
    pub fn to_line(&self) -> String {
        format!(
            "{},{},{:.12e},{}",
            self.theorem_id, self.instance_seed, self.margin, self.verdict
        )
    }
}

/// Quantity list builder.
pub(crate) fn q(name: &str, value: f64) -> (String, f64) {
    (name.to_string(), value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_needs_margin_above_tolerance() {
        let r = TheoremReport::new(TheoremId::CauchyArm, 3, vec![], true, 1e-10, 1e-9);
        assert_eq!(r.verdict, Verdict::Fail);
        let r = TheoremReport::new(TheoremId::CauchyArm, 3, vec![], false, 1.0, 1e-9);
        assert_eq!(r.verdict, Verdict::Fail);
        let r = TheoremReport::new(TheoremId::CauchyArm, 3, vec![q("d", 1.0)], true, 0.25, 1e-9);
        assert_eq!(r.to_line(), "cauchy_arm,3,2.500000000000e-1,pass");
        assert_eq!(r.quantity("d"), Some(1.0));
    }

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }
}
