//! Triangulations carried between surfaces: combinatorics plus side lengths,
//! never coordinates. Coordinates are recovered on demand by [`layout`],
//! which walks the dual spanning tree and glues triangles edge to edge.

mod fan;
mod steiner;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::chain::ConvexChain;
use crate::error::{GeomError, Result};
use crate::kernel::{
    geodesic_distance, solve_sss, walk, Curvature, Heading, SurfacePoint, Triangle,
};

pub use fan::{fan_over_base, fan_triangulate};
pub use steiner::steiner_subdivide;

/// One triangle of a triangulation. Corners are listed counterclockwise and
/// side `i` of `triangle` is opposite `corners[i]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Face {
    pub corners: [usize; 3],
    pub triangle: Triangle,
}

impl Face {
    fn local_index(&self, vertex: usize) -> Option<usize> {
        self.corners.iter().position(|&c| c == vertex)
    }

    /// Length of the side joining two of this face's corners.
    fn side_between(&self, u: usize, v: usize) -> Option<f64> {
        let (i, j) = (self.local_index(u)?, self.local_index(v)?);
        Some(self.triangle.sides()[3 - i - j])
    }
}

/// Adjacency between two faces across the edge `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualEdge {
    pub faces: [usize; 2],
    pub edge: [usize; 2],
}

/// Triangles with shared-edge identity, a dual spanning tree, and the outer
/// boundary cycle. `chain_ends` picks the stretch of boundary read back as a
/// chain by [`boundary_chain`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Triangulation {
    curvature: Curvature,
    vertex_count: usize,
    faces: Vec<Face>,
    dual_tree: Vec<DualEdge>,
    /// Shared edges outside the spanning tree; only present when there are
    /// interior vertices.
    extra_adjacency: Vec<DualEdge>,
    boundary: Vec<usize>,
    chain_ends: (usize, usize),
}

impl Triangulation {
    /// Build and validate from counterclockwise faces.
    pub fn from_faces(
        curvature: Curvature,
        faces: Vec<Face>,
        chain_ends: (usize, usize),
    ) -> Result<Self> {
        if faces.is_empty() {
            return Err(GeomError::domain("a triangulation needs at least one face"));
        }
        let vertex_count = faces
            .iter()
            .flat_map(|f| f.corners)
            .max()
            .map_or(0, |m| m + 1);
        for (i, f) in faces.iter().enumerate() {
            curvature.ensure_same(f.triangle.curvature())?;
            let [a, b, c] = f.corners;
            if a == b || b == c || a == c {
                return Err(GeomError::domain(format!("face {i} repeats a corner")));
            }
        }

        // Undirected edge → incident (face, directed edge as it appears in the face).
        let mut incidence: BTreeMap<(usize, usize), Vec<(usize, f64)>> = BTreeMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for k in 0..3 {
                let (u, v) = (f.corners[k], f.corners[(k + 1) % 3]);
                let len = f.triangle.sides()[(k + 2) % 3];
                incidence.entry(key(u, v)).or_default().push((fi, len));
            }
        }
        let mut adjacency = Vec::new();
        for (&(u, v), inc) in &incidence {
            match inc.as_slice() {
                [_] => {}
                [(f1, l1), (f2, l2)] => {
                    if (l1 - l2).abs() > 1e-12 * l1.max(1.0) {
                        return Err(GeomError::domain(format!(
                            "edge ({u}, {v}) has lengths {l1} and {l2} in faces {f1}, {f2}"
                        )));
                    }
                    adjacency.push(DualEdge {
                        faces: [*f1, *f2],
                        edge: [u, v],
                    });
                }
                _ => {
                    return Err(GeomError::domain(format!(
                        "edge ({u}, {v}) is shared by more than two faces"
                    )))
                }
            }
        }

        let boundary = boundary_cycle(&faces, &incidence)?;
        for end in [chain_ends.0, chain_ends.1] {
            if !boundary.contains(&end) {
                return Err(GeomError::domain(format!(
                    "chain end {end} is not on the boundary"
                )));
            }
        }
        let (dual_tree, extra_adjacency) = spanning_tree(faces.len(), adjacency)?;
        Ok(Triangulation {
            curvature,
            vertex_count,
            faces,
            dual_tree,
            extra_adjacency,
            boundary,
            chain_ends,
        })
    }

    pub fn curvature(&self) -> Curvature {
        self.curvature
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn triangles(&self) -> impl Iterator<Item = &Triangle> {
        self.faces.iter().map(|f| &f.triangle)
    }

    pub fn dual_tree(&self) -> &[DualEdge] {
        &self.dual_tree
    }

    pub fn extra_adjacency(&self) -> &[DualEdge] {
        &self.extra_adjacency
    }

    /// True when the full dual graph is a tree (no interior vertices).
    pub fn dual_is_tree(&self) -> bool {
        self.extra_adjacency.is_empty()
    }

    /// Boundary vertices in counterclockwise order.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn chain_ends(&self) -> (usize, usize) {
        self.chain_ends
    }

    /// Same triangulation reading a different stretch of boundary as the chain.
    pub fn with_chain_ends(mut self, start: usize, end: usize) -> Result<Self> {
        for v in [start, end] {
            if !self.boundary.contains(&v) {
                return Err(GeomError::domain(format!(
                    "vertex {v} is not on the boundary"
                )));
            }
        }
        self.chain_ends = (start, end);
        Ok(self)
    }

    /// Sum of face angles at every vertex.
    pub fn vertex_angle_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.vertex_count];
        for f in &self.faces {
            let angles = solve_sss(&f.triangle).as_array();
            for (c, a) in f.corners.iter().zip(angles) {
                sums[*c] += a;
            }
        }
        sums
    }

    fn boundary_edge_length(&self, u: usize, v: usize) -> f64 {
        self.faces
            .iter()
            .find_map(|f| f.side_between(u, v))
            .expect("boundary edge belongs to a face")
    }

    /// Boundary vertices from `chain_ends.0` to `chain_ends.1`, counterclockwise.
    fn chain_path(&self) -> Vec<usize> {
        let m = self.boundary.len();
        let start = self
            .boundary
            .iter()
            .position(|&v| v == self.chain_ends.0)
            .expect("validated");
        let mut path = vec![self.boundary[start]];
        let mut i = start;
        loop {
            i = (i + 1) % m;
            path.push(self.boundary[i]);
            if self.boundary[i] == self.chain_ends.1 {
                break;
            }
        }
        path
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn boundary_cycle(
    faces: &[Face],
    incidence: &BTreeMap<(usize, usize), Vec<(usize, f64)>>,
) -> Result<Vec<usize>> {
    let mut next: BTreeMap<usize, usize> = BTreeMap::new();
    for f in faces {
        for k in 0..3 {
            let (u, v) = (f.corners[k], f.corners[(k + 1) % 3]);
            if incidence[&key(u, v)].len() == 1 && next.insert(u, v).is_some() {
                return Err(GeomError::domain(format!(
                    "boundary is not a single cycle: vertex {u} has two outgoing edges"
                )));
            }
        }
    }
    let (&first, _) = next
        .iter()
        .next()
        .ok_or_else(|| GeomError::domain("triangulation has no boundary"))?;
    let mut cycle = vec![first];
    let mut v = next[&first];
    while v != first {
        cycle.push(v);
        v = *next
            .get(&v)
            .ok_or_else(|| GeomError::domain("boundary cycle is not closed"))?;
        if cycle.len() > next.len() {
            return Err(GeomError::domain(
                "boundary cycle does not return to its start",
            ));
        }
    }
    if cycle.len() != next.len() {
        return Err(GeomError::domain(
            "boundary consists of more than one cycle",
        ));
    }
    Ok(cycle)
}

fn spanning_tree(
    face_count: usize,
    adjacency: Vec<DualEdge>,
) -> Result<(Vec<DualEdge>, Vec<DualEdge>)> {
    let mut neighbours = vec![Vec::new(); face_count];
    for (i, e) in adjacency.iter().enumerate() {
        neighbours[e.faces[0]].push(i);
        neighbours[e.faces[1]].push(i);
    }
    let mut seen = vec![false; face_count];
    let mut used = vec![false; adjacency.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut tree = Vec::with_capacity(face_count.saturating_sub(1));
    while let Some(f) = queue.pop_front() {
        for &ei in &neighbours[f] {
            let e = adjacency[ei];
            let other = if e.faces[0] == f {
                e.faces[1]
            } else {
                e.faces[0]
            };
            if !seen[other] {
                seen[other] = true;
                used[ei] = true;
                tree.push(DualEdge {
                    faces: [f, other],
                    edge: e.edge,
                });
                queue.push_back(other);
            }
        }
    }
    if let Some(lost) = seen.iter().position(|s| !s) {
        return Err(GeomError::domain(format!(
            "face {lost} is not connected to face 0"
        )));
    }
    let extra = adjacency
        .into_iter()
        .zip(used)
        .filter_map(|(e, u)| (!u).then_some(e))
        .collect();
    Ok((tree, extra))
}

/// Re-tag every triangle with `target`, keeping side lengths and adjacency.
pub fn redraw(tri_set: &Triangulation, target: Curvature) -> Result<Triangulation> {
    let faces = tri_set
        .faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let triangle = f.triangle.with_curvature(target).map_err(|e| {
                let why = match e {
                    GeomError::Domain(m) | GeomError::Embeddability(m) => m,
                    other => other.to_string(),
                };
                GeomError::embed(format!(
                    "triangle {i} with sides {:?} cannot be drawn on {target}: {why}",
                    f.triangle.sides()
                ))
            })?;
            Ok(Face {
                corners: f.corners,
                triangle,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangulation {
        curvature: target,
        faces,
        ..tri_set.clone()
    })
}

/// Vertex positions produced by gluing faces along the dual tree.
#[derive(Debug, Clone)]
pub struct Layout {
    pub positions: Vec<SurfacePoint>,
    /// Largest disagreement for a vertex reached along two tree branches.
    /// Zero up to rounding when the triangulation closes up flat.
    pub misclosure: f64,
}

/// Place face 0 at the canonical origin, then every child across its tree
/// edge, on the left of the shared edge as seen from the child.
pub fn layout(tri_set: &Triangulation) -> Result<Layout> {
    let k = tri_set.curvature;
    let mut placed: Vec<Option<SurfacePoint>> = vec![None; tri_set.vertex_count];
    let mut misclosure: f64 = 0.0;

    let root = &tri_set.faces[0];
    let [x, y, w] = root.corners;
    let sides = root.triangle.sides();
    let angles = solve_sss(&root.triangle);
    let origin = SurfacePoint::origin(k);
    let h = Heading::canonical(k);
    placed[x] = Some(origin);
    placed[y] = Some(walk(&origin, &h, sides[2], k)?.0);
    placed[w] = Some(walk(&origin, &h.rotate(angles.alpha), sides[1], k)?.0);

    for edge in &tri_set.dual_tree {
        let face = &tri_set.faces[edge.faces[1]];
        let angles = solve_sss(&face.triangle).as_array();
        let sides = face.triangle.sides();
        for r in 0..3 {
            let (p, q, w) = (
                face.corners[r],
                face.corners[(r + 1) % 3],
                face.corners[(r + 2) % 3],
            );
            let (Some(pp), Some(pq)) = (placed[p], placed[q]) else {
                continue;
            };
            if !(key(p, q) == key(edge.edge[0], edge.edge[1])) {
                continue;
            }
            let h = Heading::towards(&pp, &pq)?.rotate(angles[r]);
            let pw = walk(&pp, &h, sides[(r + 1) % 3], k)?.0;
            match placed[w] {
                Some(existing) => {
                    misclosure = misclosure.max(geodesic_distance(&existing, &pw, k)?);
                }
                None => placed[w] = Some(pw),
            }
        }
    }
    let positions = placed
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| GeomError::domain(format!("vertex {i} was never placed"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Layout {
        positions,
        misclosure,
    })
}

/// Boundary stretch read back as a chain, without requiring convexity.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryChain {
    pub vertices: Vec<usize>,
    pub edge_lengths: Vec<f64>,
    /// Sum of incident face angles at each inner vertex of the stretch.
    pub interior_angles: Vec<f64>,
}

impl BoundaryChain {
    /// Every accumulated angle lies in `(0, π)`.
    pub fn is_convex(&self) -> bool {
        self.interior_angles
            .iter()
            .all(|&a| a > 0.0 && a < std::f64::consts::PI)
    }

    pub fn to_chain(&self) -> Result<ConvexChain> {
        if !self.is_convex() {
            return Err(GeomError::domain(format!(
                "boundary chain is not convex: angles {:?}",
                self.interior_angles
            )));
        }
        ConvexChain::new(self.edge_lengths.clone(), self.interior_angles.clone())
    }
}

/// Raw extraction of the designated boundary stretch; flags rather than
/// rejects accumulated angles at or beyond `π`.
pub fn boundary_chain_raw(tri_set: &Triangulation) -> BoundaryChain {
    let path = tri_set.chain_path();
    let sums = tri_set.vertex_angle_sums();
    let edge_lengths = path
        .windows(2)
        .map(|w| tri_set.boundary_edge_length(w[0], w[1]))
        .collect();
    let interior_angles = path[1..path.len() - 1].iter().map(|&v| sums[v]).collect();
    BoundaryChain {
        vertices: path,
        edge_lengths,
        interior_angles,
    }
}

/// The designated boundary stretch as a convex chain.
pub fn boundary_chain(tri_set: &Triangulation) -> Result<ConvexChain> {
    boundary_chain_raw(tri_set).to_chain()
}
