//! Regions enclosed by closed walks, and enumeration of short contractible
//! walks.
//!
//! A region is a triple of vertex/edge/face subsets closed under incidence:
//! a region vertex brings all its edges, a region edge brings both its
//! faces.  The interior of a null-homologous walk is flood-filled over
//! faces starting from every right-side angular sector of the walk, never
//! crossing the walk's own edges; it is accepted when its Euler
//! characteristic is 1 (an open disk).  Blocking is per edge, not per
//! vertex, so walks that touch themselves tangentially are supported.

use std::collections::BTreeSet;

use crate::error::{MapError, Result};
use crate::homology::{is_closed_walk, HomologyLabeling};
use crate::map::{CombMap, Dart, EdgeId, FaceId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
    pub faces: BTreeSet<FaceId>,
    pub boundary_walk: Vec<Dart>,
}

impl Region {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn is_single_face(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty() && self.faces.len() == 1
    }

    /// Number of face/edge incidences with the face inside and the edge outside.
    pub fn boundary_length(&self, m: &CombMap) -> usize {
        let mut len = 0;
        for &f in &self.faces {
            for d in m.face_darts(f) {
                if !self.edges.contains(&m.edge_of(d)) {
                    len += 1;
                }
            }
        }
        len
    }

    pub fn union(&self, other: &Region) -> Region {
        Region {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
            faces: self.faces.union(&other.faces).copied().collect(),
            boundary_walk: Vec::new(),
        }
    }

    pub fn intersection(&self, other: &Region) -> Region {
        Region {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
            faces: self.faces.intersection(&other.faces).copied().collect(),
            boundary_walk: Vec::new(),
        }
    }

    pub fn contains_region(&self, other: &Region) -> bool {
        other.vertices.is_subset(&self.vertices)
            && other.edges.is_subset(&self.edges)
            && other.faces.is_subset(&self.faces)
    }
}

/// Faces swept on the right side of the walk at each vertex passage: at the
/// transition into `next` after `prev`, the sectors counterclockwise from
/// the reversed incoming dart up to the outgoing dart.
fn right_side_faces(m: &CombMap, walk: &[Dart], seeds: &mut BTreeSet<FaceId>) {
    let k = walk.len();
    for i in 0..k {
        let prev = walk[i];
        let next = walk[(i + 1) % k];
        let mut x = m.alpha(prev);
        loop {
            x = m.sigma(x);
            seeds.insert(m.face_of(x));
            if x == next {
                break;
            }
        }
    }
}

/// The disk-region on the right of a null-homologous closed walk, if the
/// right side is an open disk; `None` otherwise.
pub fn enclosed_region(
    m: &CombMap,
    hom: &HomologyLabeling,
    walk: &[Dart],
) -> Result<Option<Region>> {
    if !is_closed_walk(m, walk) {
        return Err(MapError::NotAWalk);
    }
    if !hom.is_null(walk) {
        return Err(MapError::NotNullHomologous);
    }
    let mut blocked = vec![false; m.n_edges()];
    for &d in walk {
        blocked[m.edge_of(d)] = true;
    }
    let mut seeds = BTreeSet::new();
    right_side_faces(m, walk, &mut seeds);

    let mut in_faces = vec![false; m.n_faces()];
    let mut stack: Vec<FaceId> = seeds.iter().copied().collect();
    for &f in &stack {
        in_faces[f] = true;
    }
    while let Some(f) = stack.pop() {
        for d in m.face_darts(f) {
            if blocked[m.edge_of(d)] {
                continue;
            }
            let g = m.face_of(m.alpha(d));
            if !in_faces[g] {
                in_faces[g] = true;
                stack.push(g);
            }
        }
    }

    let faces: BTreeSet<FaceId> = (0..m.n_faces()).filter(|&f| in_faces[f]).collect();
    let mut edges = BTreeSet::new();
    for e in 0..m.n_edges() {
        if blocked[e] {
            continue;
        }
        let (d, a) = m.edge_darts(e);
        if in_faces[m.face_of(d)] && in_faces[m.face_of(a)] {
            edges.insert(e);
        }
    }
    let mut vertices = BTreeSet::new();
    for v in 0..m.n_vertices() {
        if m.vertex_darts(v).iter().all(|&d| edges.contains(&m.edge_of(d))) {
            vertices.insert(v);
        }
    }
    let region = Region {
        vertices,
        edges,
        faces,
        boundary_walk: walk.to_vec(),
    };
    if region.euler_characteristic() != 1 {
        return Ok(None);
    }
    // the walk must be the boundary read of the region with the region on
    // its right: after each dart, the next boundary side is the first
    // counterclockwise successor of the reversed arrival dart whose edge is
    // not interior.  This rejects reversed contours and other walks whose
    // flood happens to close up.
    let k = walk.len();
    for i in 0..k {
        let mut z = m.alpha(walk[i]);
        loop {
            z = m.sigma(z);
            if !region.edges.contains(&m.edge_of(z)) {
                break;
            }
        }
        if z != walk[(i + 1) % k] {
            return Ok(None);
        }
    }
    Ok(Some(region))
}

fn canonical_rotation(walk: &[Dart]) -> Vec<Dart> {
    let k = walk.len();
    (0..k)
        .map(|s| {
            let mut r = Vec::with_capacity(k);
            r.extend_from_slice(&walk[s..]);
            r.extend_from_slice(&walk[..s]);
            r
        })
        .min()
        .unwrap()
}

/// All closed walks of length at most `max_len` whose right side encloses a
/// disk-region, paired with that region.  Walks are directed and
/// deduplicated up to rotation only.
pub fn short_contractible_walks(
    m: &CombMap,
    hom: &HomologyLabeling,
    max_len: usize,
) -> Vec<(Vec<Dart>, Region)> {
    let mut found: BTreeSet<Vec<Dart>> = BTreeSet::new();
    let mut walk: Vec<Dart> = Vec::new();

    fn extend(
        m: &CombMap,
        hom: &HomologyLabeling,
        max_len: usize,
        start: Dart,
        walk: &mut Vec<Dart>,
        found: &mut BTreeSet<Vec<Dart>>,
    ) {
        let end = m.vertex_of(m.alpha(*walk.last().unwrap()));
        if end == m.vertex_of(start) && hom.is_null(walk) {
            found.insert(canonical_rotation(walk));
        }
        if walk.len() == max_len {
            return;
        }
        let mut x = m.vertex_rep(end);
        loop {
            walk.push(x);
            extend(m, hom, max_len, start, walk, found);
            walk.pop();
            x = m.sigma(x);
            if x == m.vertex_rep(end) {
                break;
            }
        }
    }

    for start in m.darts() {
        walk.push(start);
        extend(m, hom, max_len, start, &mut walk, &mut found);
        walk.pop();
    }

    let mut out = Vec::new();
    for w in found {
        if let Ok(Some(region)) = enclosed_region(m, hom, &w) {
            out.push((w, region));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn face_contour_encloses_single_face() {
        let m = fixtures::square_torus();
        let hom = HomologyLabeling::new(&m).unwrap();
        for f in 0..m.n_faces() {
            let region = enclosed_region(&m, &hom, &m.face_darts(f)).unwrap().unwrap();
            assert!(region.is_single_face());
            assert!(region.faces.contains(&f));
        }
    }

    #[test]
    fn theta_hexagon_contour() {
        let m = fixtures::theta();
        let hom = HomologyLabeling::new(&m).unwrap();
        let region = enclosed_region(&m, &hom, &m.face_darts(0)).unwrap().unwrap();
        assert!(region.is_single_face());
        assert_eq!(region.boundary_length(&m), 6);
    }

    #[test]
    fn noncontractible_walk_rejected() {
        let m = fixtures::theta();
        let hom = HomologyLabeling::new(&m).unwrap();
        let err = enclosed_region(&m, &hom, &[Dart(0), Dart(4)]).unwrap_err();
        assert_eq!(err, MapError::NotNullHomologous);
    }

    #[test]
    fn forth_and_back_not_a_disk() {
        let m = fixtures::theta();
        let hom = HomologyLabeling::new(&m).unwrap();
        let walk = [Dart(0), m.alpha(Dart(0))];
        assert!(enclosed_region(&m, &hom, &walk).unwrap().is_none());
    }

    #[test]
    fn theta_short_walks() {
        // the only contractible walk of length at most 6 enclosing a disk
        // is the facial hexagon
        let m = fixtures::theta();
        let hom = HomologyLabeling::new(&m).unwrap();
        let walks = short_contractible_walks(&m, &hom, 6);
        assert_eq!(walks.len(), 1);
        let (w, region) = &walks[0];
        assert_eq!(w.len(), 6);
        assert!(region.is_single_face());
        assert_eq!(canonical_rotation(w), canonical_rotation(&m.face_darts(0)));
    }

    #[test]
    fn square_torus_short_walks_are_facial() {
        let m = fixtures::square_torus();
        let hom = HomologyLabeling::new(&m).unwrap();
        let walks = short_contractible_walks(&m, &hom, 4);
        assert_eq!(walks.len(), 1);
        assert!(walks[0].1.is_single_face());
    }

    #[test]
    fn boundary_length_modularity() {
        // l(R1) + l(R2) = l(union) + l(intersection) on sampled regions
        let m = fixtures::theta().angular_map();
        let hom = HomologyLabeling::new(&m).unwrap();
        let walks = short_contractible_walks(&m, &hom, 6);
        assert!(!walks.is_empty());
        for (_, r1) in &walks {
            for (_, r2) in &walks {
                let u = r1.union(r2);
                let i = r1.intersection(r2);
                assert_eq!(
                    r1.boundary_length(&m) + r2.boundary_length(&m),
                    u.boundary_length(&m) + i.boundary_length(&m)
                );
            }
        }
    }
}
