//! Side-side-side and side-angle-side solvers on a model surface.
//!
//! Both solvers are written with half-angle forms so they stay well
//! conditioned for needle-thin and nearly flat triangles:
//!
//! ```text
//! tan(α/2)   = sqrt( S(s−b)·S(s−c) / (S(s)·S(s−a)) )
//! S(a/2)²    = S((b−c)/2)² + S(b)·S(c)·sin²(α/2)
//! C(a/2)²    = C((b+c)/2)² + κ·S(b)·S(c)·cos²(α/2)
//! ```
//!
//! where `S`, `C` are the generalized sine and cosine of [`Curvature`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::curvature::Curvature;
use crate::error::{GeomError, Result};

/// Three side lengths bound to a curvature. Side `a` is opposite vertex `a`
/// and so on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    sides: [f64; 3],
    curvature: Curvature,
}

/// Angles opposite sides `a`, `b`, `c`, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl TriangleAngles {
    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma
    }
}

impl Triangle {
    pub fn new(a: f64, b: f64, c: f64, curvature: Curvature) -> Result<Self> {
        Triangle::from_sides([a, b, c], curvature)
    }

    pub fn from_sides(sides: [f64; 3], curvature: Curvature) -> Result<Self> {
        for (name, &len) in ["a", "b", "c"].iter().zip(&sides) {
            if !(len > 0.0) || !len.is_finite() {
                return Err(GeomError::domain(format!(
                    "side {name} must be positive and finite, got {len}"
                )));
            }
        }
        let [a, b, c] = sides;
        if !(a < b + c && b < a + c && c < a + b) {
            return Err(GeomError::domain(format!(
                "sides ({a}, {b}, {c}) violate the strict triangle inequality"
            )));
        }
        if !curvature.is_plane() {
            let half = curvature.half_circumference();
            if let Some(long) = sides.iter().find(|&&s| s >= half) {
                return Err(GeomError::embed(format!(
                    "side {long} is not shorter than π/√κ = {half} on {curvature}"
                )));
            }
            if a + b + c >= 2.0 * half {
                return Err(GeomError::embed(format!(
                    "perimeter {} is not shorter than 2π/√κ = {} on {curvature}",
                    a + b + c,
                    2.0 * half
                )));
            }
        }
        Ok(Triangle { sides, curvature })
    }

    #[inline]
    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    #[inline]
    pub fn curvature(&self) -> Curvature {
        self.curvature
    }

    pub fn perimeter(&self) -> f64 {
        self.sides.iter().sum()
    }

    pub fn max_side(&self) -> f64 {
        self.sides.iter().copied().fold(0.0, f64::max)
    }

    /// Same sides on another surface, revalidated.
    pub fn with_curvature(&self, curvature: Curvature) -> Result<Self> {
        Triangle::from_sides(self.sides, curvature)
    }

    /// Sides multiplied by `factor`, same curvature.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Triangle::from_sides(self.sides.map(|s| s * factor), self.curvature)
    }

    /// Cyclic relabelling so that `vertex` becomes vertex `a`.
    pub fn rotated(&self, vertex: usize) -> Triangle {
        let s = self.sides;
        Triangle {
            sides: [s[vertex % 3], s[(vertex + 1) % 3], s[(vertex + 2) % 3]],
            curvature: self.curvature,
        }
    }
}

/// Angle at vertex `a` from the half-angle tangent formula.
fn angle_opposite(a: f64, b: f64, c: f64, k: Curvature) -> f64 {
    let s = 0.5 * (a + b + c);
    let sa = 0.5 * (b + c - a);
    let sb = 0.5 * (a + c - b);
    let sc = 0.5 * (a + b - c);
    let num = (k.sin(sb) * k.sin(sc)).sqrt();
    let den = (k.sin(s) * k.sin(sa)).sqrt();
    2.0 * num.atan2(den)
}

/// Angles of the unique triangle with the given sides.
pub fn solve_sss(tri: &Triangle) -> TriangleAngles {
    let [a, b, c] = tri.sides;
    let k = tri.curvature;
    TriangleAngles {
        alpha: angle_opposite(a, b, c, k),
        beta: angle_opposite(b, c, a, k),
        gamma: angle_opposite(c, a, b, k),
    }
}

/// Side opposite the included angle `alpha` between sides `b` and `c`.
pub fn solve_sas(b: f64, c: f64, alpha: f64, curv: Curvature) -> Result<f64> {
    if !(b > 0.0 && c > 0.0) || !b.is_finite() || !c.is_finite() {
        return Err(GeomError::domain(format!(
            "SAS sides must be positive, got ({b}, {c})"
        )));
    }
    if !(alpha > 0.0 && alpha < PI) {
        return Err(GeomError::domain(format!(
            "SAS angle must lie in (0, π), got {alpha}"
        )));
    }
    let half = curv.half_circumference();
    if b >= half || c >= half {
        return Err(GeomError::embed(format!(
            "SAS sides ({b}, {c}) must be shorter than π/√κ = {half}"
        )));
    }
    Ok(sas_unchecked(b, c, alpha, curv))
}

/// [`solve_sas`] without validation; also accepts `alpha = π`.
pub(crate) fn sas_unchecked(b: f64, c: f64, alpha: f64, k: Curvature) -> f64 {
    let (sh, ch) = (0.5 * alpha).sin_cos();
    let sbc = k.sin(b) * k.sin(c);
    let half_diff = k.sin(0.5 * (b - c));
    let sin_part = (half_diff * half_diff + sbc * sh * sh).sqrt();
    let cos_sum = k.cos(0.5 * (b + c));
    let cos_part = (cos_sum * cos_sum + k.kappa() * sbc * ch * ch).sqrt();
    2.0 * k.atan2(sin_part, cos_part)
}

/// Angle sum minus π; identically zero on the plane.
pub fn spherical_excess(tri: &Triangle) -> f64 {
    if tri.curvature.is_plane() {
        return 0.0;
    }
    solve_sss(tri).sum() - PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    const K1: Curvature = Curvature::UNIT_SPHERE;
    const K0: Curvature = Curvature::PLANE;

    /// Textbook spherical law of cosines, used only as a cross-check.
    fn naive_sas(b: f64, c: f64, alpha: f64) -> f64 {
        (b.cos() * c.cos() + b.sin() * c.sin() * alpha.cos()).acos()
    }

    /// Bisection on the monotone map α ↦ third side.
    fn bisect_angle(a: f64, b: f64, c: f64) -> f64 {
        let (mut lo, mut hi) = (0.0_f64, PI);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if naive_sas(b, c, mid) < a {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn octant_is_all_right_angles() {
        let t = Triangle::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, K1).unwrap();
        for a in solve_sss(&t).as_array() {
            assert_abs_diff_eq!(a, FRAC_PI_2, epsilon = 1e-14);
        }
        assert_abs_diff_eq!(spherical_excess(&t), FRAC_PI_2, epsilon = 1e-14);
    }

    #[test]
    fn planar_equilateral() {
        let t = Triangle::new(1.0, 1.0, 1.0, K0).unwrap();
        for a in solve_sss(&t).as_array() {
            assert_abs_diff_eq!(a, FRAC_PI_3, epsilon = 1e-15);
        }
        assert_eq!(spherical_excess(&t), 0.0);
    }

    #[test]
    fn unit_equilateral_on_unit_sphere() {
        let t = Triangle::new(1.0, 1.0, 1.0, K1).unwrap();
        let closed = (1f64.cos() / (1.0 + 1f64.cos())).acos();
        let oracle = bisect_angle(1.0, 1.0, 1.0);
        assert_abs_diff_eq!(closed, oracle, epsilon = 1e-12);
        // 40-digit reference: 1.2123958497745859963871670987
        assert_abs_diff_eq!(closed, 1.212_395_849_774_586, epsilon = 1e-15);
        for a in solve_sss(&t).as_array() {
            assert_abs_diff_eq!(a, closed, epsilon = 1e-14);
        }
    }

    #[test]
    fn small_equilateral_excess() {
        let t = Triangle::new(0.1, 0.1, 0.1, K1).unwrap();
        let closed = 3.0 * (0.1f64.cos() / (1.0 + 0.1f64.cos())).acos() - PI;
        assert_abs_diff_eq!(spherical_excess(&t), closed, epsilon = 1e-14);
        // 40-digit reference (L'Huilier agrees): 4.3355469050256093971e-3
        assert_abs_diff_eq!(
            spherical_excess(&t),
            4.335_546_905_025_609e-3,
            epsilon = 1e-15
        );
    }

    #[test]
    fn planar_path_matches_arccos_form() {
        let (a, b, c) = (2.0, 3.0, 4.0);
        let t = Triangle::new(a, b, c, K0).unwrap();
        let arccos = (0.5 * (b / c + c / b - a * a / (b * c))).acos();
        assert_abs_diff_eq!(solve_sss(&t).alpha, arccos, epsilon = 1e-15);
    }

    #[test]
    fn sas_examples() {
        assert_abs_diff_eq!(
            solve_sas(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2, K1).unwrap(),
            FRAC_PI_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            solve_sas(3.0, 4.0, FRAC_PI_2, K0).unwrap(),
            5.0,
            epsilon = 1e-14
        );
        let alpha = (1f64.cos() / (1.0 + 1f64.cos())).acos();
        assert_abs_diff_eq!(
            solve_sas(1.0, 1.0, alpha, K1).unwrap(),
            1.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            solve_sas(1.0, 1.0, 1.212_395_849_774_586, K1).unwrap(),
            1.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn sas_agrees_with_law_of_cosines() {
        for &(b, c, al) in &[(0.3, 1.1, 0.4), (2.0, 0.5, 2.9), (1.4, 1.4, 1.0)] {
            assert_abs_diff_eq!(
                solve_sas(b, c, al, K1).unwrap(),
                naive_sas(b, c, al),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn sas_rejects_bad_inputs() {
        assert!(solve_sas(0.0, 1.0, 1.0, K1).is_err());
        assert!(solve_sas(1.0, 1.0, 0.0, K1).is_err());
        assert!(solve_sas(1.0, 1.0, PI, K1).is_err());
        assert!(matches!(
            solve_sas(PI, 1.0, 1.0, K1),
            Err(GeomError::Embeddability(_))
        ));
    }

    #[test]
    fn construction_names_violations() {
        let e = Triangle::new(1.0, 1.0, 2.0, K0).unwrap_err();
        assert!(e.to_string().contains("triangle inequality"));
        let e = Triangle::new(-1.0, 1.0, 1.0, K0).unwrap_err();
        assert!(e.to_string().contains("side a"));
        // a side of exactly π is not feasible
        assert!(Triangle::new(PI, 2.0, 2.0, K1).is_err());
        // perimeter 2π
        assert!(Triangle::new(2.2, 2.1, 2.0 * PI - 4.3, K1).is_err());
    }

    #[test]
    fn rotation_relabels_vertices() {
        let t = Triangle::new(0.5, 0.7, 0.9, K1).unwrap();
        let r = t.rotated(1);
        assert_eq!(r.sides(), [0.7, 0.9, 0.5]);
        assert_abs_diff_eq!(solve_sss(&r).alpha, solve_sss(&t).beta, epsilon = 1e-15);
    }
}
