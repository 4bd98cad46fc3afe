use super::{layout, Face, Triangulation};
use crate::chain::{embed, is_convex, ConvexChain};
use crate::error::{GeomError, Result};
use crate::kernel::{geodesic_distance, walk, Curvature, Heading, Triangle};

/// Triangulate the convex polygon closed by `chain` with diagonals from
/// `v0`. Vertex `i` of the result is chain vertex `vi`; face `i − 1` is
/// `(v0, vi, vi+1)`. The designated boundary chain runs `v0 → vn`.
pub fn fan_triangulate(chain: &ConvexChain, curv: Curvature) -> Result<Triangulation> {
    if chain.edge_count() < 2 {
        return Err(GeomError::domain(
            "fan triangulation needs at least two edges",
        ));
    }
    if !is_convex(chain, curv)? {
        return Err(GeomError::domain("chain is not convex on this surface"));
    }
    let emb = embed(chain, curv)?;
    let v = emb.vertices();
    let n = chain.edge_count();
    let lengths = chain.edge_lengths();

    // spoke[i] = |v0 vi|; the first spoke is the first edge itself.
    let mut spoke = vec![0.0; n + 1];
    spoke[1] = lengths[0];
    for i in 2..=n {
        spoke[i] = geodesic_distance(&v[0], &v[i], curv)?;
    }
    let faces = (1..n)
        .map(|i| {
            Ok(Face {
                corners: [0, i, i + 1],
                triangle: Triangle::new(lengths[i], spoke[i + 1], spoke[i], curv)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Triangulation::from_faces(curv, faces, (0, n))
}

/// Fan from vertex `a` of `tri` over its opposite side, cut into `pieces`
/// equal subsegments. Vertex 0 is `a`, vertices `1 ..= pieces + 1` run along
/// the base from `b` to `c`; the designated boundary chain is the base.
pub fn fan_over_base(tri: &Triangle, pieces: usize) -> Result<Triangulation> {
    if pieces == 0 {
        return Err(GeomError::domain("the base needs at least one piece"));
    }
    let k = tri.curvature();
    let [base, side_b, side_c] = tri.sides();
    let single = Triangulation::from_faces(
        k,
        vec![Face {
            corners: [0, 1, 2],
            triangle: *tri,
        }],
        (1, 2),
    )?;
    let pos = layout(&single)?.positions;
    let (apex, b, c) = (pos[0], pos[1], pos[2]);
    let step = base / pieces as f64;
    let h = Heading::towards(&b, &c)?;

    // spoke[j] = |a pj| with p0 = b and p_pieces = c.
    let mut spoke = Vec::with_capacity(pieces + 1);
    spoke.push(side_c);
    for j in 1..pieces {
        let p = walk(&b, &h, step * j as f64, k)?.0;
        spoke.push(geodesic_distance(&apex, &p, k)?);
    }
    spoke.push(side_b);

    let faces = (0..pieces)
        .map(|j| {
            Ok(Face {
                corners: [0, j + 1, j + 2],
                triangle: Triangle::new(step, spoke[j + 1], spoke[j], k)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Triangulation::from_faces(k, faces, (1, pieces + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::solve_sss;
    use crate::triangulate::{boundary_chain, boundary_chain_raw, redraw};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn two_chain_is_one_triangle() {
        let c = ConvexChain::new(vec![0.7, 0.9], vec![1.3]).unwrap();
        let t = fan_triangulate(&c, Curvature::UNIT_SPHERE).unwrap();
        assert_eq!(t.faces().len(), 1);
        let d = crate::chain::endpoint_distance(&c, Curvature::UNIT_SPHERE).unwrap();
        assert_eq!(t.faces()[0].triangle.sides(), [0.9, d, 0.7]);
    }

    #[test]
    fn planar_square_fan() {
        let c = ConvexChain::new(vec![1.0; 3], vec![FRAC_PI_2; 2]).unwrap();
        let t = fan_triangulate(&c, Curvature::PLANE).unwrap();
        assert_eq!(t.faces().len(), 2);
        for f in t.faces() {
            let hyp = f.triangle.max_side();
            assert!((hyp - 2f64.sqrt()).abs() < 1e-14);
        }
        let back = boundary_chain(&t).unwrap();
        for a in back.interior_angles() {
            assert!((a - FRAC_PI_2).abs() < 1e-9);
        }
    }

    #[test]
    fn spherical_three_chain_has_excess() {
        let c = ConvexChain::new(vec![FRAC_PI_4; 3], vec![FRAC_PI_2; 2]).unwrap();
        let t = fan_triangulate(&c, Curvature::UNIT_SPHERE).unwrap();
        assert_eq!(t.faces().len(), 2);
        for f in t.faces() {
            assert!(solve_sss(&f.triangle).sum() > PI + 1e-3);
        }
    }

    #[test]
    fn rejects_non_convex() {
        let hook = ConvexChain::new(vec![1.0; 3], vec![PI / 6.0; 2]).unwrap();
        assert!(fan_triangulate(&hook, Curvature::PLANE).is_err());
    }

    #[test]
    fn base_fan_keeps_the_base_straight() {
        let tri = Triangle::new(0.8, 0.7, 0.6, Curvature::new(0.25).unwrap()).unwrap();
        let t = fan_over_base(&tri, 5).unwrap();
        assert_eq!(t.faces().len(), 5);
        let raw = boundary_chain_raw(&t);
        assert_eq!(raw.edge_lengths.len(), 5);
        for a in &raw.interior_angles {
            assert!((a - PI).abs() < 1e-12);
        }
        // drawn on the more curved sphere the base bends outward
        let bent = boundary_chain_raw(&redraw(&t, Curvature::UNIT_SPHERE).unwrap());
        assert!(!bent.is_convex());
        for a in &bent.interior_angles {
            assert!(*a > PI && 2.0 * PI - a < PI);
        }
    }
}
