//! Seeded batches of checks, run in parallel with results kept in instance
//! order.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use super::checks::{
    check_all_angles, check_cauchy_arm, check_growing_sphere, check_sphere_to_plane,
    replay_thin_triangle,
};
use super::generate::{
    instance_seed, random_convex_chain_on, random_convex_chain_with, random_increments,
    random_thin_triangle, random_triangle, rng_for, GeneratorConfig,
};
use super::report::TheoremReport;
use crate::error::{GeomError, Result};
use crate::kernel::Curvature;
use crate::tolerance::Tolerance;

/// Named batches of randomized checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Cauchy,
    SphereToPlane,
    GrowingSphere,
    ThinTriangle,
    AllAngles,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Cauchy,
        Suite::SphereToPlane,
        Suite::GrowingSphere,
        Suite::ThinTriangle,
        Suite::AllAngles,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Cauchy => "cauchy",
            Suite::SphereToPlane => "sphere-to-plane",
            Suite::GrowingSphere => "growing-sphere",
            Suite::ThinTriangle => "thin-triangle",
            Suite::AllAngles => "all-angles",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| GeomError::Domain(format!("unknown suite {s:?}")))
    }
}

/// Flatter targets cycled through by the growing-sphere suite.
const SPHERE_TARGETS: [f64; 3] = [0.5, 0.25, 0.1];
/// Flatter curvatures cycled through by the all-angles suite.
const ANGLE_TARGETS: [f64; 2] = [0.25, 0.0];

/// Thin-triangle suite parameters.
pub const THIN_EPSILON: f64 = 0.15;
pub const THIN_ELL: f64 = 0.05;
/// Base pieces in the all-angles suite.
pub const FAN_PIECES: usize = 8;

/// Build and check instance `index` of `suite`.
pub fn run_instance(
    suite: Suite,
    base_seed: u64,
    index: u64,
    tol: &Tolerance,
) -> Result<TheoremReport> {
    let seed = instance_seed(base_seed, index);
    let mut rng = rng_for(seed);
    let k1 = Curvature::UNIT_SPHERE;
    let pick = |grid: &[f64]| Curvature::new(grid[(index % grid.len() as u64) as usize]);
    let cfg = GeneratorConfig::standard(seed);
    match suite {
        Suite::Cauchy => {
            let curv = if index.is_multiple_of(2) {
                k1
            } else {
                Curvature::PLANE
            };
            let chain = random_convex_chain_on(&cfg, curv, &mut rng)?;
            let inc = random_increments(&chain, &mut rng);
            check_cauchy_arm(&chain, curv, &inc, seed, tol)
        }
        Suite::SphereToPlane => {
            let chain = random_convex_chain_with(&cfg, &mut rng)?;
            check_sphere_to_plane(&chain, k1, seed, tol)
        }
        Suite::GrowingSphere => {
            let chain = random_convex_chain_with(&cfg, &mut rng)?;
            check_growing_sphere(&chain, k1, pick(&SPHERE_TARGETS)?, seed, tol)
        }
        Suite::ThinTriangle => {
            let tri = random_thin_triangle(&mut rng, k1)?;
            let to = Curvature::new(rng.random_range(0.0..0.9))?;
            Ok(replay_thin_triangle(&tri, THIN_EPSILON, to, THIN_ELL, seed, tol)?.report)
        }
        Suite::AllAngles => {
            let tri = random_triangle(&mut rng, k1, (0.2, 1.5))?;
            check_all_angles(
                tri.sides(),
                k1,
                pick(&ANGLE_TARGETS)?,
                FAN_PIECES,
                seed,
                tol,
            )
        }
    }
}

/// Run `count` instances in parallel. Errors are returned per instance, in
/// order.
pub fn run_suite(
    suite: Suite,
    base_seed: u64,
    count: u64,
    tol: &Tolerance,
) -> Vec<Result<TheoremReport>> {
    (0..count)
        .into_par_iter()
        .map(|i| run_instance(suite, base_seed, i, tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_a_small_batch() {
        let tol = Tolerance::default();
        for suite in Suite::ALL {
            for (i, r) in run_suite(suite, 11, 40, &tol).into_iter().enumerate() {
                let r = r.unwrap_or_else(|e| panic!("{suite} #{i}: {e}"));
                assert!(r.verdict.is_pass(), "{suite} #{i}: {r:?}");
            }
        }
    }

    #[test]
    fn runs_are_reproducible() {
        let tol = Tolerance::default();
        let a: Vec<String> = run_suite(Suite::GrowingSphere, 5, 16, &tol)
            .into_iter()
            .map(|r| r.unwrap().to_line())
            .collect();
        let b: Vec<String> = run_suite(Suite::GrowingSphere, 5, 16, &tol)
            .into_iter()
            .map(|r| r.unwrap().to_line())
            .collect();
        assert_eq!(a, b);
    }
}
