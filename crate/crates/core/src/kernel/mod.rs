//! Constant-curvature trigonometry valid uniformly for κ > 0 and κ = 0.

mod curvature;
mod point;
mod triangle;

pub use curvature::{Curvature, SERIES_CUTOFF};
pub use point::{geodesic_distance, turn, walk, Heading, SurfacePoint, Vec3};
pub use triangle::{solve_sas, solve_sss, spherical_excess, Triangle, TriangleAngles};

pub(crate) use point::left_angle;
#[allow(unused_imports)]
pub(crate) use triangle::sas_unchecked;
