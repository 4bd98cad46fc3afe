use std::collections::BTreeMap;

use super::{key, layout, Face, Triangulation};
use crate::error::{GeomError, Result};
use crate::kernel::{geodesic_distance, SurfacePoint, Triangle};

const MAX_SPLITS: usize = 200_000;

/// Refine `tri` by conforming longest-edge bisection until every edge is at
/// most `2·ell`. New vertices are geodesic midpoints, so split edges keep
/// exact half lengths and boundary pieces add up to the original sides.
///
/// Corners `a, b, c` of `tri` are vertices `0, 1, 2`; the designated
/// boundary chain is `c → a → b`, the two sides meeting at `a`.
pub fn steiner_subdivide(tri: &Triangle, ell: f64) -> Result<Triangulation> {
    if !(ell > 0.0) || !ell.is_finite() {
        return Err(GeomError::domain(format!(
            "ell must be positive, got {ell}"
        )));
    }
    let k = tri.curvature();
    let seed = Triangulation::from_faces(
        k,
        vec![Face {
            corners: [0, 1, 2],
            triangle: *tri,
        }],
        (2, 1),
    )?;
    let limit = 2.0 * ell;
    if tri.max_side() <= limit {
        return Ok(seed);
    }

    let mut positions: Vec<SurfacePoint> = layout(&seed)?.positions;
    let [a, b, c] = tri.sides();
    let mut lengths: BTreeMap<(usize, usize), f64> =
        BTreeMap::from([(key(1, 2), a), (key(0, 2), b), (key(0, 1), c)]);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];

    for _ in 0..MAX_SPLITS {
        let Some((&(u, v), &len)) = lengths
            .iter()
            .filter(|(_, &l)| l > limit)
            .max_by(|x, y| x.1.total_cmp(y.1))
        else {
            return assemble(tri, faces, &lengths);
        };
        let m = positions.len();
        positions.push(positions[u].midpoint(&positions[v])?);
        lengths.remove(&(u, v));
        lengths.insert(key(u, m), 0.5 * len);
        lengths.insert(key(m, v), 0.5 * len);

        let mut split = Vec::new();
        for face in faces.iter_mut() {
            let Some(r) = (0..3).find(|&r| key(face[r], face[(r + 1) % 3]) == (u, v)) else {
                continue;
            };
            let (p, q, w) = (face[r], face[(r + 1) % 3], face[(r + 2) % 3]);
            *face = [p, m, w];
            split.push([m, q, w]);
            let d = geodesic_distance(&positions[m], &positions[w], tri.curvature())?;
            lengths.insert(key(m, w), d);
        }
        faces.extend(split);
    }
    Err(GeomError::domain(format!(
        "subdivision did not reach edge length {limit} within {MAX_SPLITS} splits"
    )))
}

fn assemble(
    tri: &Triangle,
    faces: Vec<[usize; 3]>,
    lengths: &BTreeMap<(usize, usize), f64>,
) -> Result<Triangulation> {
    let k = tri.curvature();
    let faces = faces
        .into_iter()
        .map(|corners| {
            let side = |i: usize| lengths[&key(corners[(i + 1) % 3], corners[(i + 2) % 3])];
            Ok(Face {
                corners,
                triangle: Triangle::new(side(0), side(1), side(2), k)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Triangulation::from_faces(k, faces, (2, 1))
}
