//! Direct numerical versions of the triangle-level comparison statements:
//! midchords, iterated bisection, the Legendre split of the excess, and
//! angle comparisons between two surfaces.

mod comparison;
mod legendre;
mod midchord;
mod series;

pub use comparison::{
    apex_comparison, compare_angles_two_spheres, thin_triangle_check, AngleComparison,
    ThinTriangleReport,
};
pub use legendre::{
    geometric_grid, legendre_order_fit, legendre_planar_angles, LegendreApprox, OrderFit,
    ScaleMode, NOISE_FLOOR, ORDER_WINDOW,
};
pub use midchord::{iterated_midchord, midchord_length, MidchordSequence, MidchordStep};
