//! Embedded points and tangent headings on a model surface.
//!
//! Sphere points are unit vectors; arc lengths are scaled by `1/√κ` at the
//! API boundary so callers only ever see intrinsic lengths. Plane points
//! live in the `z = 0` slice of R³ so both cases share one vector type.

use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;

use super::curvature::Curvature;
use crate::error::{GeomError, Result};

const UNIT_TOL: f64 = 1e-12;
const TANGENT_TOL: f64 = 1e-9;

pub type Vec3 = Vector3<f64>;

/// A point on the surface selected by its curvature tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    coords: Vec3,
    curvature: Curvature,
}

impl SurfacePoint {
    pub fn new(coords: Vec3, curvature: Curvature) -> Result<Self> {
        if curvature.is_plane() {
            if coords.z != 0.0 || !coords.iter().all(|c| c.is_finite()) {
                return Err(GeomError::domain("plane points must be finite with z = 0"));
            }
        } else if (coords.norm() - 1.0).abs() > UNIT_TOL {
            return Err(GeomError::domain(format!(
                "sphere points must be unit vectors, |p| = {}",
                coords.norm()
            )));
        }
        Ok(SurfacePoint { coords, curvature })
    }

    /// Sphere point from any non-zero vector, normalized.
    pub fn on_sphere(direction: Vec3, curvature: Curvature) -> Result<Self> {
        let n = direction.norm();
        if curvature.is_plane() || !(n > 0.0) {
            return Err(GeomError::domain(
                "on_sphere needs κ > 0 and a non-zero vector",
            ));
        }
        Ok(SurfacePoint {
            coords: direction / n,
            curvature,
        })
    }

    pub fn planar(x: f64, y: f64) -> Result<Self> {
        SurfacePoint::new(Vec3::new(x, y, 0.0), Curvature::PLANE)
    }

    /// Canonical origin: `(0,0)` on the plane, `(1,0,0)` on a sphere.
    pub fn origin(curvature: Curvature) -> Self {
        let coords = if curvature.is_plane() {
            Vec3::zeros()
        } else {
            Vec3::x()
        };
        SurfacePoint { coords, curvature }
    }

    #[inline]
    pub fn coords(&self) -> &Vec3 {
        &self.coords
    }

    #[inline]
    pub fn curvature(&self) -> Curvature {
        self.curvature
    }

    /// Outward unit normal of the surface at this point.
    pub fn normal(&self) -> Vec3 {
        if self.curvature.is_plane() {
            Vec3::z()
        } else {
            self.coords
        }
    }

    /// Unnormalized tangent at `self` pointing along the geodesic to `to`.
    pub(crate) fn tangent_towards(&self, to: &SurfacePoint) -> Vec3 {
        if self.curvature.is_plane() {
            to.coords - self.coords
        } else {
            to.coords - self.coords * self.coords.dot(&to.coords)
        }
    }

    /// Geodesic midpoint: coordinate average on the plane, normalized vector
    /// sum on the sphere.
    pub fn midpoint(&self, other: &SurfacePoint) -> Result<SurfacePoint> {
        self.curvature.ensure_same(other.curvature)?;
        let sum = self.coords + other.coords;
        if self.curvature.is_plane() {
            return Ok(SurfacePoint {
                coords: sum * 0.5,
                curvature: self.curvature,
            });
        }
        if sum.norm() < 1e-12 {
            return Err(GeomError::domain(
                "midpoint of antipodal points is undefined",
            ));
        }
        SurfacePoint::on_sphere(sum, self.curvature)
    }
}

/// Unit tangent direction at a point, together with the surface normal there
/// so it can be rotated without the base point at hand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Heading {
    dir: Vec3,
    normal: Vec3,
}

impl Heading {
    pub fn new(at: &SurfacePoint, dir: Vec3) -> Result<Self> {
        let normal = at.normal();
        if (dir.norm() - 1.0).abs() > UNIT_TOL {
            return Err(GeomError::domain("heading must be a unit vector"));
        }
        if dir.dot(&normal).abs() > UNIT_TOL {
            return Err(GeomError::domain("heading must be tangent to the surface"));
        }
        Ok(Heading { dir, normal })
    }

    /// Canonical heading at [`SurfacePoint::origin`]: along +x on the plane,
    /// along +y on the sphere.
    pub fn canonical(curvature: Curvature) -> Self {
        if curvature.is_plane() {
            Heading {
                dir: Vec3::x(),
                normal: Vec3::z(),
            }
        } else {
            Heading {
                dir: Vec3::y(),
                normal: Vec3::x(),
            }
        }
    }

    /// Direction of the minimal geodesic from `from` to `to`.
    pub fn towards(from: &SurfacePoint, to: &SurfacePoint) -> Result<Self> {
        from.curvature.ensure_same(to.curvature)?;
        let t = from.tangent_towards(to);
        let n = t.norm();
        if !(n > 1e-15) {
            return Err(GeomError::domain(
                "heading towards a coincident or antipodal point is undefined",
            ));
        }
        Ok(Heading {
            dir: t / n,
            normal: from.normal(),
        })
    }

    #[inline]
    pub fn dir(&self) -> &Vec3 {
        &self.dir
    }

    #[inline]
    pub fn normal(&self) -> &Vec3 {
        &self.normal
    }

    /// Counterclockwise rotation (seen from outside the surface) by a signed
    /// angle.
    pub fn rotate(&self, angle: f64) -> Heading {
        let side = self.normal.cross(&self.dir);
        let dir = (self.dir * angle.cos() + side * angle.sin()).normalize();
        Heading {
            dir,
            normal: self.normal,
        }
    }

    pub fn reversed(&self) -> Heading {
        Heading {
            dir: -self.dir,
            normal: self.normal,
        }
    }
}

/// Length of the minimal geodesic between two points.
pub fn geodesic_distance(p: &SurfacePoint, q: &SurfacePoint, curv: Curvature) -> Result<f64> {
    curv.ensure_same(p.curvature)?;
    curv.ensure_same(q.curvature)?;
    if curv.is_plane() {
        return Ok((p.coords - q.coords).norm());
    }
    let angle = p
        .coords
        .cross(&q.coords)
        .norm()
        .atan2(p.coords.dot(&q.coords));
    Ok(angle / curv.sqrt_kappa())
}

/// Follow the geodesic leaving `p` along `h` for `dist`; returns the landing
/// point and the parallel-transported heading.
pub fn walk(
    p: &SurfacePoint,
    h: &Heading,
    dist: f64,
    curv: Curvature,
) -> Result<(SurfacePoint, Heading)> {
    curv.ensure_same(p.curvature)?;
    if !(dist >= 0.0) || !dist.is_finite() {
        return Err(GeomError::domain(format!(
            "walk distance must be >= 0, got {dist}"
        )));
    }
    if h.dir.dot(&p.normal()).abs() > TANGENT_TOL || (h.normal - p.normal()).norm() > TANGENT_TOL {
        return Err(GeomError::domain("heading is not based at the walk origin"));
    }
    if curv.is_plane() {
        let coords = p.coords + h.dir * dist;
        return Ok((
            SurfacePoint {
                coords,
                curvature: curv,
            },
            *h,
        ));
    }
    let t = curv.sqrt_kappa() * dist;
    if t >= TAU {
        return Err(GeomError::domain(format!(
            "walk distance {dist} reaches a full great circle ({})",
            TAU / curv.sqrt_kappa()
        )));
    }
    let (s, c) = t.sin_cos();
    let coords = (p.coords * c + h.dir * s).normalize();
    // Re-orthogonalize the transported heading against the new base point.
    let raw = h.dir * c - p.coords * s;
    let dir = (raw - coords * coords.dot(&raw)).normalize();
    Ok((
        SurfacePoint {
            coords,
            curvature: curv,
        },
        Heading {
            dir,
            normal: coords,
        },
    ))
}

/// Turn a heading at a chain vertex so the interior angle on the left is
/// `interior_angle`, i.e. rotate left by `π − interior_angle`.
///
/// Accepts the closed range `(0, π]`; `π` is a straight vertex.
pub fn turn(h: &Heading, interior_angle: f64) -> Result<Heading> {
    if !(interior_angle > 0.0 && interior_angle <= PI) {
        return Err(GeomError::domain(format!(
            "interior angle must lie in (0, π], got {interior_angle}"
        )));
    }
    Ok(h.rotate(PI - interior_angle))
}

/// Signed angle from `a` to `b` about `normal`, in `(-π, π]`.
pub(crate) fn signed_angle(a: &Vec3, b: &Vec3, normal: &Vec3) -> f64 {
    a.cross(b).dot(normal).atan2(a.dot(b))
}

/// Angle at `v` on the left-hand side of the path `prev → v → next`, in
/// `[0, 2π)`.
pub(crate) fn left_angle(prev: &SurfacePoint, v: &SurfacePoint, next: &SurfacePoint) -> f64 {
    let to_next = v.tangent_towards(next);
    let to_prev = v.tangent_towards(prev);
    let a = signed_angle(&to_next, &to_prev, &v.normal());
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_2;

    fn sphere() -> Curvature {
        Curvature::UNIT_SPHERE
    }

    #[test]
    fn distance_examples() {
        let k = sphere();
        let p = SurfacePoint::origin(k);
        assert_eq!(geodesic_distance(&p, &p, k).unwrap(), 0.0);
        let q = SurfacePoint::new(-Vec3::x(), k).unwrap();
        assert_abs_diff_eq!(geodesic_distance(&p, &q, k).unwrap(), PI, epsilon = 1e-15);
        let r = SurfacePoint::new(Vec3::y(), k).unwrap();
        assert_abs_diff_eq!(
            geodesic_distance(&p, &r, k).unwrap(),
            FRAC_PI_2,
            epsilon = 1e-15
        );
    }

    #[test]
    fn distance_scales_with_radius() {
        let k = Curvature::new(0.25).unwrap();
        let p = SurfacePoint::origin(k);
        let q = SurfacePoint::new(Vec3::y(), k).unwrap();
        assert_abs_diff_eq!(geodesic_distance(&p, &q, k).unwrap(), PI, epsilon = 1e-14);
    }

    #[test]
    fn mismatched_tags_rejected() {
        let p = SurfacePoint::origin(sphere());
        let q = SurfacePoint::origin(Curvature::PLANE);
        assert!(matches!(
            geodesic_distance(&p, &q, sphere()),
            Err(GeomError::CurvatureMismatch { .. })
        ));
    }

    #[test]
    fn walk_zero_is_identity() {
        let k = sphere();
        let p = SurfacePoint::origin(k);
        let h = Heading::canonical(k);
        let (q, h2) = walk(&p, &h, 0.0, k).unwrap();
        assert_abs_diff_eq!((q.coords - p.coords).norm(), 0.0);
        assert_abs_diff_eq!((h2.dir - h.dir).norm(), 0.0);
    }

    #[test]
    fn walk_quarter_circle_lands_on_y() {
        let k = sphere();
        let p = SurfacePoint::origin(k);
        let (q, h) = walk(&p, &Heading::canonical(k), FRAC_PI_2, k).unwrap();
        assert_abs_diff_eq!((q.coords - Vec3::y()).norm(), 0.0, epsilon = 1e-15);
        // transported heading points away from the start
        assert_abs_diff_eq!((h.dir + Vec3::x()).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn plane_walk_back_returns() {
        let k = Curvature::PLANE;
        let p = SurfacePoint::planar(0.3, -1.2).unwrap();
        let h = Heading::canonical(k).rotate(0.7);
        let (q, hq) = walk(&p, &h, 2.5, k).unwrap();
        let (back, _) = walk(&q, &hq.reversed(), 2.5, k).unwrap();
        assert!((back.coords - p.coords).norm() < 1e-12);
    }

    #[test]
    fn walk_beyond_half_circle_folds_distance() {
        let k = sphere();
        let p = SurfacePoint::origin(k);
        let (q, _) = walk(&p, &Heading::canonical(k), 4.0, k).unwrap();
        assert_abs_diff_eq!(
            geodesic_distance(&p, &q, k).unwrap(),
            TAU - 4.0,
            epsilon = 1e-12
        );
        assert!(walk(&p, &Heading::canonical(k), TAU, k).is_err());
    }

    #[test]
    fn turn_examples() {
        let h = Heading::canonical(Curvature::PLANE);
        let straight = turn(&h, PI).unwrap();
        assert_abs_diff_eq!((straight.dir - h.dir).norm(), 0.0, epsilon = 1e-15);
        let right_angle = turn(&h, FRAC_PI_2).unwrap();
        assert_abs_diff_eq!((right_angle.dir - Vec3::y()).norm(), 0.0, epsilon = 1e-15);
        assert!(turn(&h, 0.0).is_err());
        assert!(turn(&h, PI + 1e-9).is_err());
    }

    #[test]
    fn complementary_rotations_cancel() {
        let h = Heading::canonical(Curvature::PLANE);
        let theta = 1.1;
        // exterior turns π−θ and π−(2π−θ) = θ−π
        let back = h.rotate(PI - theta).rotate(theta - PI);
        assert!((back.dir - h.dir).norm() < 1e-15);
    }

    #[test]
    fn left_angle_of_square_corner() {
        let u = SurfacePoint::planar(0.0, 0.0).unwrap();
        let v = SurfacePoint::planar(1.0, 0.0).unwrap();
        let w = SurfacePoint::planar(1.0, 1.0).unwrap();
        assert_abs_diff_eq!(left_angle(&u, &v, &w), FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(left_angle(&w, &v, &u), 3.0 * FRAC_PI_2, epsilon = 1e-15);
    }
}
