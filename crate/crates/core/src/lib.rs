//! Geometry on the constant-curvature model surfaces `κ ≥ 0` (spheres of
//! radius `1/√κ` and the plane), with the machinery needed to redraw convex
//! chains and triangles from one surface to another while keeping lengths
//! and angles, and to check the resulting comparison inequalities.
//!
//! * [`kernel`]: generalized trigonometry, points, headings, triangle solvers.
//! * [`chain`]: convex chains, embedding, convexity, arm opening.
//! * [`triangulate`]: fan and Steiner triangulations, redraw, boundary chains.
//! * [`lemma_lab`]: midchords, iterated bisection, Legendre residuals, angle
//!   comparisons between surfaces.
//! * [`harness`]: seeded generators and end-to-end comparison checks.
//! * [`chain_spec`]: the flat key-value chain record shared with the CLI.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chain;
pub mod chain_spec;
pub mod error;
pub mod harness;
pub mod kernel;
pub mod lemma_lab;
pub mod tolerance;
pub mod triangulate;

pub use chain::{embed, endpoint_distance, is_convex, open_arm, ConvexChain, EmbeddedChain};
pub use chain_spec::{AngleUnit, ChainSpec};
pub use error::{GeomError, Result};
pub use kernel::{
    geodesic_distance, solve_sas, solve_sss, spherical_excess, turn, walk, Curvature, Heading,
    SurfacePoint, Triangle, TriangleAngles,
};
pub use tolerance::Tolerance;
