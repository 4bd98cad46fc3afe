//! Intrinsic convex chains: edge lengths plus the interior angles between
//! consecutive edges, embedded on demand by walking geodesics and turning
//! left at each vertex.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::kernel::{geodesic_distance, left_angle, turn, walk, Curvature, Heading, SurfacePoint};

/// Slack allowed when an opened angle is compared against the cap `π`.
const CAP_SLACK: f64 = 1e-12;
/// Closing corners closer than this to `0` or `π` are not convex.
const CORNER_EPS: f64 = 1e-12;

/// A chain of `n ≥ 1` edges with `n − 1` interior angles in `(0, π)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexChain {
    edge_lengths: Vec<f64>,
    interior_angles: Vec<f64>,
}

impl ConvexChain {
    pub fn new(edge_lengths: Vec<f64>, interior_angles: Vec<f64>) -> Result<Self> {
        if edge_lengths.is_empty() {
            return Err(GeomError::domain("a chain needs at least one edge"));
        }
        if interior_angles.len() + 1 != edge_lengths.len() {
            return Err(GeomError::domain(format!(
                "{} edges need {} interior angles, got {}",
                edge_lengths.len(),
                edge_lengths.len() - 1,
                interior_angles.len()
            )));
        }
        if let Some((i, len)) = edge_lengths
            .iter()
            .enumerate()
            .find(|(_, l)| !(**l > 0.0 && l.is_finite()))
        {
            return Err(GeomError::domain(format!(
                "edge {} has invalid length {len}",
                i + 1
            )));
        }
        if let Some((i, th)) = interior_angles
            .iter()
            .enumerate()
            .find(|(_, t)| !(**t > 0.0 && **t < PI))
        {
            return Err(GeomError::domain(format!(
                "interior angle θ{} = {th} is outside (0, π)",
                i + 1
            )));
        }
        Ok(ConvexChain {
            edge_lengths,
            interior_angles,
        })
    }

    pub fn edge_lengths(&self) -> &[f64] {
        &self.edge_lengths
    }

    pub fn interior_angles(&self) -> &[f64] {
        &self.interior_angles
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edge_lengths.len()
    }

    pub fn total_length(&self) -> f64 {
        self.edge_lengths.iter().sum()
    }

    /// Length budget `π/√κ` that keeps the closing geodesic unique.
    pub fn check_budget(&self, curv: Curvature) -> Result<()> {
        let budget = curv.half_circumference();
        let total = self.total_length();
        if total > budget {
            return Err(GeomError::embed(format!(
                "chain length {total} exceeds π/√κ = {budget} on {curv}"
            )));
        }
        Ok(())
    }
}

/// A chain laid out on a concrete surface.
#[derive(Debug, Clone)]
pub struct EmbeddedChain {
    vertices: Vec<SurfacePoint>,
    curvature: Curvature,
    source: ConvexChain,
}

impl EmbeddedChain {
    pub fn vertices(&self) -> &[SurfacePoint] {
        &self.vertices
    }

    pub fn curvature(&self) -> Curvature {
        self.curvature
    }

    pub fn source(&self) -> &ConvexChain {
        &self.source
    }

    pub fn endpoint_distance(&self) -> f64 {
        let (first, last) = (&self.vertices[0], &self.vertices[self.vertices.len() - 1]);
        geodesic_distance(first, last, self.curvature).expect("vertices share the chain curvature")
    }

    /// Geodesic distances between consecutive vertices.
    pub fn measured_lengths(&self) -> Vec<f64> {
        self.vertices
            .windows(2)
            .map(|w| geodesic_distance(&w[0], &w[1], self.curvature).expect("same surface"))
            .collect()
    }

    /// Left-hand angles at the inner vertices.
    pub fn measured_angles(&self) -> Vec<f64> {
        self.vertices
            .windows(3)
            .map(|w| left_angle(&w[0], &w[1], &w[2]))
            .collect()
    }

    /// Left-hand angles of the closed polygon `v0 … vn v0`, starting at `v0`.
    pub fn closed_polygon_angles(&self) -> Vec<f64> {
        let v = &self.vertices;
        let m = v.len();
        (0..m)
            .map(|i| left_angle(&v[(i + m - 1) % m], &v[i], &v[(i + 1) % m]))
            .collect()
    }
}

/// Lay `chain` out from the canonical origin and heading of `curv`.
pub fn embed(chain: &ConvexChain, curv: Curvature) -> Result<EmbeddedChain> {
    embed_from(
        chain,
        curv,
        SurfacePoint::origin(curv),
        Heading::canonical(curv),
    )
}

/// Lay `chain` out from an arbitrary start point and initial heading.
pub fn embed_from(
    chain: &ConvexChain,
    curv: Curvature,
    start: SurfacePoint,
    heading: Heading,
) -> Result<EmbeddedChain> {
    chain.check_budget(curv)?;
    let mut vertices = Vec::with_capacity(chain.edge_count() + 1);
    vertices.push(start);
    let mut here = start;
    let mut h = heading;
    for (i, &len) in chain.edge_lengths.iter().enumerate() {
        if i > 0 {
            h = turn(&h, chain.interior_angles[i - 1])?;
        }
        let (next, next_h) = walk(&here, &h, len, curv)?;
        vertices.push(next);
        here = next;
        h = next_h;
    }
    Ok(EmbeddedChain {
        vertices,
        curvature: curv,
        source: chain.clone(),
    })
}

/// Distance between the first and last vertex once embedded on `curv`.
pub fn endpoint_distance(chain: &ConvexChain, curv: Curvature) -> Result<f64> {
    Ok(embed(chain, curv)?.endpoint_distance())
}

/// Whether closing the chain with the geodesic `vn → v0` gives a convex
/// polygon: every corner in `(0, π)`, all turning to the left, and total
/// turning at most one revolution.
pub fn is_convex(chain: &ConvexChain, curv: Curvature) -> Result<bool> {
    if chain.edge_count() < 2 {
        return Ok(false);
    }
    let emb = embed(chain, curv)?;
    if emb.endpoint_distance() <= 0.0 {
        return Ok(false);
    }
    let corners = emb.closed_polygon_angles();
    let last = corners.len() - 1;
    let corners_ok = [corners[0], corners[last]]
        .iter()
        .all(|&a| a > CORNER_EPS && a < PI - CORNER_EPS);
    let turning: f64 = corners.iter().map(|a| PI - a).sum();
    Ok(corners_ok && turning <= TAU + 1e-9)
}

/// Increase a nonempty subset of the interior angles with lengths fixed.
///
/// Angles may be opened all the way to `π`; such straight vertices are
/// removed by merging their two edges, so the result is again a chain with
/// angles in `(0, π)`.
pub fn open_arm(chain: &ConvexChain, increments: &[f64]) -> Result<ConvexChain> {
    let angles = chain.interior_angles();
    if increments.len() != angles.len() {
        return Err(GeomError::domain(format!(
            "expected {} increments, got {}",
            angles.len(),
            increments.len()
        )));
    }
    if let Some(bad) = increments.iter().find(|d| !(**d >= 0.0 && d.is_finite())) {
        return Err(GeomError::domain(format!(
            "increment {bad} is not a finite value >= 0"
        )));
    }
    if !increments.iter().any(|&d| d > 0.0) {
        return Err(GeomError::domain("at least one increment must be positive"));
    }
    let mut lengths = vec![chain.edge_lengths[0]];
    let mut opened = Vec::with_capacity(angles.len());
    for (i, (&th, &d)) in angles.iter().zip(increments).enumerate() {
        let next = th + d;
        if next > PI + CAP_SLACK {
            return Err(GeomError::domain(format!(
                "θ{} + increment = {next} exceeds π",
                i + 1
            )));
        }
        let edge = chain.edge_lengths[i + 1];
        if next >= PI {
            *lengths.last_mut().expect("non-empty") += edge;
        } else {
            opened.push(next);
            lengths.push(edge);
        }
    }
    ConvexChain::new(lengths, opened)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{solve_sas, Vec3};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, FRAC_PI_8};

    const K1: Curvature = Curvature::UNIT_SPHERE;
    const K0: Curvature = Curvature::PLANE;

    fn octant() -> ConvexChain {
        ConvexChain::new(vec![FRAC_PI_2, FRAC_PI_2], vec![FRAC_PI_2]).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(ConvexChain::new(vec![], vec![]).is_err());
        assert!(ConvexChain::new(vec![1.0, 1.0], vec![]).is_err());
        assert!(ConvexChain::new(vec![1.0, 0.0], vec![1.0]).is_err());
        assert!(ConvexChain::new(vec![1.0, 1.0], vec![PI]).is_err());
        assert!(ConvexChain::new(vec![1.0, 1.0], vec![0.0]).is_err());
        assert!(ConvexChain::new(vec![1.0], vec![]).is_ok());
    }

    #[test]
    fn single_edge_distance() {
        let c = ConvexChain::new(vec![2.5], vec![]).unwrap();
        assert_abs_diff_eq!(endpoint_distance(&c, K0).unwrap(), 2.5, epsilon = 1e-15);
    }

    #[test]
    fn octant_chain_distances() {
        assert_abs_diff_eq!(
            endpoint_distance(&octant(), K1).unwrap(),
            FRAC_PI_2,
            epsilon = 1e-14
        );
        let planar = FRAC_PI_2 * 2f64.sqrt();
        assert_abs_diff_eq!(
            endpoint_distance(&octant(), K0).unwrap(),
            planar,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(planar, 2.22144, epsilon = 1e-5);
    }

    #[test]
    fn budget_enforced() {
        let c = ConvexChain::new(vec![2.0, 1.2], vec![2.0]).unwrap();
        assert!(matches!(embed(&c, K1), Err(GeomError::Embeddability(_))));
        assert!(embed(&c, Curvature::new(0.5).unwrap()).is_ok());
    }

    #[test]
    fn embedding_reproduces_intrinsic_data() {
        let c = ConvexChain::new(vec![0.4, 0.7, 0.3, 0.5], vec![2.1, 2.6, 1.9]).unwrap();
        for k in [K1, K0, Curvature::new(1.5).unwrap()] {
            let e = embed(&c, k).unwrap();
            for (m, l) in e.measured_lengths().iter().zip(c.edge_lengths()) {
                assert_abs_diff_eq!(m, l, epsilon = 1e-12);
            }
            for (m, t) in e.measured_angles().iter().zip(c.interior_angles()) {
                assert_abs_diff_eq!(m, t, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn two_chain_matches_sas() {
        let c = ConvexChain::new(vec![0.8, 1.3], vec![1.9]).unwrap();
        for k in [K1, K0, Curvature::new(0.3).unwrap()] {
            assert_abs_diff_eq!(
                endpoint_distance(&c, k).unwrap(),
                solve_sas(0.8, 1.3, 1.9, k).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn distance_independent_of_start() {
        let c = ConvexChain::new(vec![0.5, 0.6, 0.4], vec![2.0, 2.4]).unwrap();
        let base = endpoint_distance(&c, K1).unwrap();
        let start = SurfacePoint::on_sphere(Vec3::new(0.3, -0.5, 0.8), K1).unwrap();
        let dir = Vec3::new(0.0, 0.8, 0.5);
        let t = (dir - start.coords() * start.coords().dot(&dir)).normalize();
        let h = Heading::new(&start, t).unwrap();
        let moved = embed_from(&c, K1, start, h).unwrap().endpoint_distance();
        assert_abs_diff_eq!(base, moved, epsilon = 1e-12);
    }

    #[test]
    fn convexity_examples() {
        let right = ConvexChain::new(vec![1.0, 1.0], vec![FRAC_PI_2]).unwrap();
        assert!(is_convex(&right, K0).unwrap());
        assert!(is_convex(&octant(), K1).unwrap());
        let hook = ConvexChain::new(vec![1.0, 1.0, 1.0], vec![FRAC_PI_6, FRAC_PI_6]).unwrap();
        assert!(!is_convex(&hook, K0).unwrap());
        let single = ConvexChain::new(vec![1.0], vec![]).unwrap();
        assert!(!is_convex(&single, K0).unwrap());
    }

    #[test]
    fn hook_closing_corner_is_reflex() {
        // v3 = (1 + cos150°, sin150°) + (cos300°, sin300°); closing turn is to the right.
        let hook = ConvexChain::new(vec![1.0, 1.0, 1.0], vec![FRAC_PI_6, FRAC_PI_6]).unwrap();
        let e = embed(&hook, K0).unwrap();
        let v3 = e.vertices()[3].coords();
        let expect = Vec3::new(1.0 - 0.75f64.sqrt() + 0.5, 0.5 - 0.75f64.sqrt(), 0.0);
        assert!((v3 - expect).norm() < 1e-14);
        let corners = e.closed_polygon_angles();
        assert!(corners[3] > PI);
    }

    #[test]
    fn open_arm_examples() {
        let c = ConvexChain::new(vec![1.0, 1.0], vec![FRAC_PI_2]).unwrap();
        assert!(open_arm(&c, &[0.0]).is_err());
        let opened = open_arm(&c, &[PI / 4.0]).unwrap();
        assert_abs_diff_eq!(
            endpoint_distance(&c, K0).unwrap(),
            2f64.sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            endpoint_distance(&opened, K0).unwrap(),
            2.0 * FRAC_PI_8.cos(),
            epsilon = 1e-12
        );
        let before = endpoint_distance(&octant(), K1).unwrap();
        let after = endpoint_distance(&open_arm(&octant(), &[PI / 4.0]).unwrap(), K1).unwrap();
        assert!(after > before + 1e-9);
        assert_abs_diff_eq!(
            after,
            solve_sas(FRAC_PI_2, FRAC_PI_2, 3.0 * PI / 4.0, K1).unwrap(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn open_arm_to_straight_merges_edges() {
        let c = ConvexChain::new(vec![0.3, 0.4, 0.5], vec![2.0, 2.5]).unwrap();
        let opened = open_arm(&c, &[PI - 2.0, 0.1]).unwrap();
        assert_eq!(opened.edge_lengths(), &[0.7, 0.5]);
        assert_eq!(opened.interior_angles(), &[2.6]);
        assert!(open_arm(&c, &[PI - 2.0 + 1e-6, 0.0]).is_err());
        assert!(open_arm(&c, &[0.1]).is_err());
        assert!(open_arm(&c, &[-0.1, 0.2]).is_err());
    }
}
