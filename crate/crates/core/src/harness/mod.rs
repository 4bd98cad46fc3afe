//! Seeded instance generators, end-to-end comparison checks and parallel
//! suite runners.

mod checks;
mod generate;
mod report;
mod suite;
mod sweep;

pub use checks::{
    check_all_angles, check_cauchy_arm, check_growing_sphere, check_sphere_to_plane,
    redraw_pipeline, replay_thin_triangle, RedrawPipeline, ThinTriangleReplay, ROUTE_TOLERANCE,
    SWEEP_POINTS,
};
pub use generate::{
    instance_seed, random_convex_chain, random_convex_chain_on, random_increments,
    random_thin_triangle, random_triangle, rng_for, GeneratorConfig, MAX_ATTEMPTS, MIN_ANGLE,
};
pub use report::{TheoremId, TheoremReport, Verdict};
pub use suite::{run_instance, run_suite, Suite, FAN_PIECES, THIN_ELL, THIN_EPSILON};
pub use sweep::{strictly_decreasing_in_kappa, sweep_radius, SweepPoint};
