use crate::error::{GeomError, Result};
use crate::kernel::{solve_sss, spherical_excess, Curvature, Triangle};
use crate::tolerance::Tolerance;

/// Angles of one side triple on a more curved and a less curved surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleComparison {
    pub source_angles: [f64; 3],
    pub target_angles: [f64; 3],
    /// `source − target` per angle.
    pub deltas: [f64; 3],
    /// Excess on the source and target surfaces.
    pub excess_pair: (f64, f64),
    pub perimeter: f64,
}

impl AngleComparison {
    pub fn min_delta(&self) -> f64 {
        self.deltas.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Every angle shrinks by more than the strict margin.
    pub fn all_decrease(&self, tol: &Tolerance) -> bool {
        self.min_delta() > tol.margin(self.perimeter)
            && self.excess_pair.0 > self.excess_pair.1
            && self.excess_pair.1 >= 0.0
    }
}

/// Compare the triangle with sides `sides` drawn on `kappa_hi` and on the
/// flatter `kappa_lo`.
pub fn compare_angles_two_spheres(
    sides: [f64; 3],
    kappa_hi: Curvature,
    kappa_lo: Curvature,
) -> Result<AngleComparison> {
    if !(kappa_hi.kappa() > kappa_lo.kappa()) {
        return Err(GeomError::domain(format!(
            "need κ_hi > κ_lo, got {} and {}",
            kappa_hi.kappa(),
            kappa_lo.kappa()
        )));
    }
    let hi = Triangle::from_sides(sides, kappa_hi)?;
    let lo = Triangle::from_sides(sides, kappa_lo)?;
    let source_angles = solve_sss(&hi).as_array();
    let target_angles = solve_sss(&lo).as_array();
    Ok(AngleComparison {
        source_angles,
        target_angles,
        deltas: std::array::from_fn(|i| source_angles[i] - target_angles[i]),
        excess_pair: (spherical_excess(&hi), spherical_excess(&lo)),
        perimeter: hi.perimeter(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThinTriangleReport {
    /// Index of the smallest angle (0 = `a`).
    pub apex_index: usize,
    pub apex_hi: f64,
    pub apex_lo: f64,
    /// `apex_hi − apex_lo`.
    pub margin: f64,
    pub shrinks: bool,
}

/// For a triangle whose smallest angle is below `epsilon`, check that this
/// angle is strictly smaller once the triangle is drawn on `kappa_lo`.
pub fn thin_triangle_check(
    epsilon: f64,
    tri: &Triangle,
    kappa_lo: Curvature,
    tol: &Tolerance,
) -> Result<ThinTriangleReport> {
    if !(kappa_lo.kappa() < tri.curvature().kappa()) {
        return Err(GeomError::domain(format!(
            "κ_lo = {} must be below the triangle's κ = {}",
            kappa_lo.kappa(),
            tri.curvature().kappa()
        )));
    }
    let report = apex_comparison(tri, kappa_lo, tol)?;
    if !(report.apex_hi < epsilon) {
        return Err(GeomError::domain(format!(
            "apex angle {} is not below ε = {epsilon}",
            report.apex_hi
        )));
    }
    Ok(report)
}

/// The comparison behind [`thin_triangle_check`] with no preconditions on
/// `ε` or the order of the curvatures.
pub fn apex_comparison(
    tri: &Triangle,
    kappa_lo: Curvature,
    tol: &Tolerance,
) -> Result<ThinTriangleReport> {
    let hi = solve_sss(tri).as_array();
    let apex_index = (0..3)
        .min_by(|&i, &j| hi[i].total_cmp(&hi[j]))
        .expect("three angles");
    let lo = solve_sss(&tri.with_curvature(kappa_lo)?).as_array();
    let margin = hi[apex_index] - lo[apex_index];
    Ok(ThinTriangleReport {
        apex_index,
        apex_hi: hi[apex_index],
        apex_lo: lo[apex_index],
        margin,
        shrinks: margin > tol.margin(tri.perimeter()),
    })
}
