use crate::error::{GeomError, Result};
use crate::kernel::{geodesic_distance, solve_sss, Triangle};
use crate::triangulate::{layout, Face, Triangulation};

use super::series::{planar_third_side, sas_deficit};

/// Length of the geodesic joining the midpoints of sides `ab` and `ac`.
pub fn midchord_length(tri: &Triangle) -> Result<f64> {
    let single = Triangulation::from_faces(
        tri.curvature(),
        vec![Face {
            corners: [0, 1, 2],
            triangle: *tri,
        }],
        (2, 1),
    )?;
    let p = layout(&single)?.positions;
    let mid_ab = p[0].midpoint(&p[1])?;
    let mid_ac = p[0].midpoint(&p[2])?;
    geodesic_distance(&mid_ab, &mid_ac, tri.curvature())
}

/// One bisection step: the triangle with apex `a` and sides `B/2^i`, `C/2^i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MidchordStep {
    pub index: u32,
    /// Midchord `s_i`.
    pub length: f64,
    /// `s_i · 2^i`.
    pub scaled: f64,
    /// `limit − s_i · 2^i`, evaluated without cancellation.
    pub deficit: f64,
    /// `arccos[½(B_i/C_i + C_i/B_i − s_i²/(B_i C_i))]`.
    pub angle_estimate: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MidchordSequence {
    pub steps: Vec<MidchordStep>,
    /// Angle at `a` of the input triangle on its own surface.
    pub apex_angle: f64,
    /// Planar third side for sides `B`, `C` and the apex angle; the value
    /// `s_i · 2^i` tends to.
    pub limit: f64,
    /// Set when the requested iteration count would underflow the sides.
    pub truncated: bool,
}

impl MidchordSequence {
    /// `s_i · 2^i` strictly increasing, judged on the deficits.
    pub fn is_strictly_increasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[1].deficit < w[0].deficit)
            && self.steps.iter().all(|s| s.deficit > 0.0)
    }

    pub fn final_estimate(&self) -> Option<f64> {
        self.steps.last().map(|s| s.angle_estimate)
    }
}

/// Repeatedly cut the triangle at its midchord, keeping the part at apex
/// `a`. Step `i` is similar to a triangle with sides `B`, `C` on curvature
/// `κ/4^i`, which is how the midchords are evaluated.
pub fn iterated_midchord(tri: &Triangle, iters: u32) -> Result<MidchordSequence> {
    if iters == 0 {
        return Err(GeomError::domain("at least one iteration is required"));
    }
    let [_, b, c] = tri.sides();
    let apex_angle = solve_sss(tri).alpha;
    let limit = planar_third_side(b, c, apex_angle);
    let max_iters = (b.min(c) / 1e-300).log2().floor() as u32;
    let truncated = iters > max_iters;
    let k = tri.curvature();

    let mut steps = Vec::with_capacity(iters.min(max_iters) as usize);
    let mut kappa_i = k.kappa();
    for i in 1..=iters.min(max_iters) {
        kappa_i /= 4.0;
        let ki = crate::kernel::Curvature::new(kappa_i)?;
        let deficit = sas_deficit(b, c, apex_angle, ki);
        let scaled = limit - deficit;
        let pow = 2f64.powi(i as i32);
        // sin²(est/2) = (scaled² − (B − C)²)/(4BC)
        let half = ((scaled - (b - c)) * (scaled + (b - c)) / (4.0 * b * c)).clamp(0.0, 1.0);
        steps.push(MidchordStep {
            index: i,
            length: scaled / pow,
            scaled,
            deficit,
            angle_estimate: 2.0 * half.sqrt().asin(),
        });
    }
    Ok(MidchordSequence {
        steps,
        apex_angle,
        limit,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{solve_sas, Curvature};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    const K1: Curvature = Curvature::UNIT_SPHERE;

    #[test]
    fn planar_midsegment_is_half() {
        let t = Triangle::new(5.0, 4.0, 3.0, Curvature::PLANE).unwrap();
        assert!((midchord_length(&t).unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn octant_midchord_is_third_of_pi() {
        let t = Triangle::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, K1).unwrap();
        let m = midchord_length(&t).unwrap();
        assert!((m - FRAC_PI_3).abs() < 1e-14);
        // independent route: SAS with half sides and the apex angle
        assert!((solve_sas(FRAC_PI_4, FRAC_PI_4, FRAC_PI_2, K1).unwrap() - m).abs() < 1e-14);
        assert!(2.0 * m > FRAC_PI_2);
    }

    #[test]
    fn nearly_flat_midchord() {
        let t = Triangle::new(1.0, 1.0, 1.0, Curvature::new(1e-10).unwrap()).unwrap();
        assert!((midchord_length(&t).unwrap() - 0.5).abs() < 1e-6);
    }

    #[test]
    fn first_step_matches_geometric_midchord() {
        let t = Triangle::new(0.9, 1.1, 0.7, K1).unwrap();
        let seq = iterated_midchord(&t, 3).unwrap();
        let m = midchord_length(&t).unwrap();
        assert!((seq.steps[0].length - m).abs() < 1e-14);
        // second step: midchord of the upper triangle
        let upper = Triangle::new(m, 0.55, 0.35, K1).unwrap();
        assert!((seq.steps[1].length - midchord_length(&upper).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn converges_to_spherical_angle() {
        let t = Triangle::new(1.0, 1.0, 1.0, K1).unwrap();
        let seq = iterated_midchord(&t, 20).unwrap();
        let est = seq.final_estimate().unwrap();
        assert!((est - 1.212_395_849_774_586).abs() < 1e-6);
        assert!(seq.is_strictly_increasing());
        assert!(!seq.truncated);
    }

    #[test]
    fn planar_estimates_are_constant() {
        let t = Triangle::new(0.8, 1.0, 0.6, Curvature::PLANE).unwrap();
        let seq = iterated_midchord(&t, 12).unwrap();
        let planar = solve_sss(&t).alpha;
        for (i, s) in seq.steps.iter().enumerate() {
            assert_eq!(s.deficit, 0.0);
            assert!((s.angle_estimate - planar).abs() < 1e-12);
            assert!((s.length - 0.8 / 2f64.powi(i as i32 + 1)).abs() < 1e-15);
        }
    }

    #[test]
    fn huge_iteration_counts_truncate() {
        let t = Triangle::new(0.5, 0.5, 0.5, K1).unwrap();
        let seq = iterated_midchord(&t, 5000).unwrap();
        assert!(seq.truncated);
        assert!(seq.steps.len() < 1000);
        assert!(iterated_midchord(&t, 0).is_err());
    }
}
