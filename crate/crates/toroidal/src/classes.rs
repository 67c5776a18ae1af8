//! Membership predicates for the map families handled by the crate.
//!
//! All predicates work on genus-1 maps and are phrased through short
//! contractible walks: a toroidal map is essentially irreducible for
//! minimum face degree `d` when every closed walk enclosing a disk-region
//! on its right has length at least `d`, with equality only for facial
//! contours.

use std::fmt;

use crate::error::MapError;
use crate::homology::HomologyLabeling;
use crate::map::{Color, CombMap, FaceId};
use crate::region::short_contractible_walks;

/// Reason a map fails a family membership check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongGenus,
    NotBipartite,
    BadFaceProfile(String),
    ShortContractibleWalk(usize),
    NonFacialShortWalk(usize),
    ExtraRootEnclosingWalk(usize),
    NotEssentially3Connected,
    NoRoot,
    BlackDegree(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Violation::WrongGenus => write!(f, "WrongGenus"),
            Violation::NotBipartite => write!(f, "NotBipartite"),
            Violation::BadFaceProfile(s) => write!(f, "BadFaceProfile: {s}"),
            Violation::ShortContractibleWalk(l) => {
                write!(f, "ShortContractibleWalk: length {l} below the face degree")
            }
            Violation::NonFacialShortWalk(l) => {
                write!(f, "NonFacialShortWalk: length-{l} disk walk that is not a face contour")
            }
            Violation::ExtraRootEnclosingWalk(l) => write!(
                f,
                "ExtraRootEnclosingWalk: non-root length-{l} walk enclosing the root face"
            ),
            Violation::NotEssentially3Connected => write!(f, "NotEssentially3Connected"),
            Violation::NoRoot => write!(f, "NoRoot"),
            Violation::BlackDegree(d) => write!(f, "BlackDegree: black vertex of degree {d}"),
        }
    }
}

impl From<Violation> for MapError {
    fn from(v: Violation) -> MapError {
        match v {
            Violation::WrongGenus => MapError::WrongGenus,
            Violation::NotBipartite => MapError::NotBipartite,
            _ => MapError::NotInH,
        }
    }
}

pub type Check = std::result::Result<(), Violation>;

/// Essential irreducibility for minimum face degree `d`.
pub fn check_essentially_irreducible(q: &CombMap, d: usize) -> Check {
    if q.genus() != 1 {
        return Err(Violation::WrongGenus);
    }
    let hom = HomologyLabeling::new(q).expect("genus checked");
    for (w, region) in short_contractible_walks(q, &hom, d) {
        if w.len() < d {
            return Err(Violation::ShortContractibleWalk(w.len()));
        }
        if !region.is_single_face() {
            return Err(Violation::NonFacialShortWalk(w.len()));
        }
    }
    Ok(())
}

pub fn is_essentially_irreducible(q: &CombMap, d: usize) -> bool {
    check_essentially_irreducible(q, d).is_ok()
}

/// Toroidal bipartite essentially irreducible quadrangulations.
pub fn check_in_q(q: &CombMap) -> Check {
    if q.genus() != 1 {
        return Err(Violation::WrongGenus);
    }
    if q.colors().is_none() {
        return Err(Violation::NotBipartite);
    }
    for f in 0..q.n_faces() {
        if q.face_degree(f) != 4 {
            return Err(Violation::BadFaceProfile(format!(
                "face of degree {} in a quadrangulation",
                q.face_degree(f)
            )));
        }
    }
    check_essentially_irreducible(q, 4)
}

pub fn is_in_q(q: &CombMap) -> bool {
    check_in_q(q).is_ok()
}

/// The unique face of degree 6 of a 6-quadrangular map.
pub fn hexagonal_face(h: &CombMap) -> Option<FaceId> {
    let mut hex = None;
    for f in 0..h.n_faces() {
        match h.face_degree(f) {
            4 => {}
            6 if hex.is_none() => hex = Some(f),
            _ => return None,
        }
    }
    hex
}

/// Toroidal bipartite 6-quadrangular maps, essentially irreducible, with no
/// closed walk of length 6 other than the root-face contour enclosing a
/// disk-region containing the root face.
pub fn check_in_h(h: &CombMap) -> Check {
    if h.genus() != 1 {
        return Err(Violation::WrongGenus);
    }
    if h.colors().is_none() {
        return Err(Violation::NotBipartite);
    }
    let Some(hex) = hexagonal_face(h) else {
        return Err(Violation::BadFaceProfile(
            "expected one hexagonal face and quadrangular faces elsewhere".to_string(),
        ));
    };
    check_essentially_irreducible(h, 4)?;
    let hom = HomologyLabeling::new(h).expect("genus checked");
    for (w, region) in short_contractible_walks(h, &hom, 6) {
        if w.len() == 6 && region.faces.contains(&hex) && !region.is_single_face() {
            return Err(Violation::ExtraRootEnclosingWalk(6));
        }
    }
    Ok(())
}

pub fn is_in_h(h: &CombMap) -> bool {
    check_in_h(h).is_ok()
}

/// Essential 3-connectivity of a toroidal map: its angular map is an
/// essentially irreducible quadrangulation.
pub fn check_essentially_3connected(m: &CombMap) -> Check {
    if m.genus() != 1 {
        return Err(Violation::WrongGenus);
    }
    check_essentially_irreducible(&m.angular_map(), 4)
        .map_err(|_| Violation::NotEssentially3Connected)
}

pub fn is_essentially_3connected(m: &CombMap) -> bool {
    check_essentially_3connected(m).is_ok()
}

pub fn check_in_t(m: &CombMap) -> Check {
    check_essentially_3connected(m)
}

pub fn is_in_t(m: &CombMap) -> bool {
    check_in_t(m).is_ok()
}

/// Face-rooted essentially simple toroidal triangulations with no closed
/// walk of length 3 other than the root-face contour enclosing a
/// disk-region containing the root face.
pub fn check_in_t3(t: &CombMap) -> Check {
    if t.genus() != 1 {
        return Err(Violation::WrongGenus);
    }
    let Some(root) = t.root() else {
        return Err(Violation::NoRoot);
    };
    for f in 0..t.n_faces() {
        if t.face_degree(f) != 3 {
            return Err(Violation::BadFaceProfile(format!(
                "face of degree {} in a triangulation",
                t.face_degree(f)
            )));
        }
    }
    check_essentially_3connected(t)?;
    let root_face = t.face_of(root);
    let hom = HomologyLabeling::new(t).expect("genus checked");
    for (w, region) in short_contractible_walks(t, &hom, 3) {
        if region.faces.contains(&root_face) && !region.is_single_face() {
            return Err(Violation::ExtraRootEnclosingWalk(w.len()));
        }
    }
    Ok(())
}

pub fn is_in_t3(t: &CombMap) -> bool {
    check_in_t3(t).is_ok()
}

/// 6-quadrangular family members with every black vertex of degree 3
/// (images of the triangulation specialization).
pub fn check_in_h3(h: &CombMap) -> Check {
    check_in_h(h)?;
    let colors = h.colors().unwrap();
    for v in 0..h.n_vertices() {
        if colors[v] == Color::Black && h.degree(v) != 3 {
            return Err(Violation::BlackDegree(h.degree(v)));
        }
    }
    Ok(())
}

pub fn is_in_h3(h: &CombMap) -> bool {
    check_in_h3(h).is_ok()
}

/// Planar bipartite irreducible 6-quadrangular maps: girth 4 and every
/// 4-cycle facial, with at least one edge not incident to the hexagonal
/// face.  Used for the planar factor of the hexagon decomposition.
pub fn check_in_d(d: &CombMap) -> Check {
    if d.genus() != 0 {
        return Err(Violation::WrongGenus);
    }
    if d.colors().is_none() {
        return Err(Violation::NotBipartite);
    }
    let Some(hex) = hexagonal_face(d) else {
        return Err(Violation::BadFaceProfile(
            "expected one hexagonal face and quadrangular faces elsewhere".to_string(),
        ));
    };
    // no 2-cycles (parallel edges)
    for e1 in 0..d.n_edges() {
        let (a, b) = d.edge_darts(e1);
        for e2 in e1 + 1..d.n_edges() {
            let (c, dd) = d.edge_darts(e2);
            let ends1 = (d.vertex_of(a), d.vertex_of(b));
            let ends2 = (d.vertex_of(c), d.vertex_of(dd));
            if ends1 == ends2 || ends1 == (ends2.1, ends2.0) {
                return Err(Violation::ShortContractibleWalk(2));
            }
        }
    }
    // every 4-cycle must be a face contour
    let facial: std::collections::BTreeSet<Vec<usize>> = (0..d.n_faces())
        .filter(|&f| d.face_degree(f) == 4)
        .map(|f| {
            let mut vs: Vec<usize> = d.face_darts(f).iter().map(|&x| d.vertex_of(x)).collect();
            canonical_cycle(&mut vs);
            vs
        })
        .collect();
    for c in four_cycles(d) {
        let mut vs = c.clone();
        canonical_cycle(&mut vs);
        if !facial.contains(&vs) {
            return Err(Violation::NonFacialShortWalk(4));
        }
    }
    // at least one edge away from the hexagonal face
    let hex_edges: std::collections::BTreeSet<usize> =
        d.face_darts(hex).iter().map(|&x| d.edge_of(x)).collect();
    if (0..d.n_edges()).all(|e| hex_edges.contains(&e)) {
        return Err(Violation::BadFaceProfile(
            "every edge is incident to the hexagonal face".to_string(),
        ));
    }
    Ok(())
}

pub fn is_in_d(d: &CombMap) -> bool {
    check_in_d(d).is_ok()
}

/// Canonical form of an undirected vertex cycle: minimal rotation over both
/// directions.
fn canonical_cycle(vs: &mut Vec<usize>) {
    let k = vs.len();
    let mut best: Option<Vec<usize>> = None;
    for rev in [false, true] {
        let seq: Vec<usize> = if rev { vs.iter().rev().copied().collect() } else { vs.clone() };
        for s in 0..k {
            let mut r: Vec<usize> = Vec::with_capacity(k);
            r.extend_from_slice(&seq[s..]);
            r.extend_from_slice(&seq[..s]);
            if best.as_ref().map(|b| r < *b).unwrap_or(true) {
                best = Some(r);
            }
        }
    }
    *vs = best.unwrap();
}

/// All 4-cycles (vertex-simple) as vertex sequences.
fn four_cycles(m: &CombMap) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for d0 in m.darts() {
        let v0 = m.vertex_of(d0);
        let v1 = m.vertex_of(m.alpha(d0));
        for d1 in m.vertex_darts(v1) {
            let v2 = m.vertex_of(m.alpha(d1));
            if v2 == v0 || v2 == v1 {
                continue;
            }
            for d2 in m.vertex_darts(v2) {
                let v3 = m.vertex_of(m.alpha(d2));
                if v3 == v0 || v3 == v1 || v3 == v2 {
                    continue;
                }
                for d3 in m.vertex_darts(v3) {
                    if m.vertex_of(m.alpha(d3)) == v0 {
                        let mut key = vec![v0, v1, v2, v3];
                        canonical_cycle(&mut key);
                        if seen.insert(key) {
                            out.push(vec![v0, v1, v2, v3]);
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::map::{Dart, MapBuilder};

    #[test]
    fn theta_is_in_h() {
        assert!(is_in_h(&fixtures::theta()));
        assert!(check_in_h(&fixtures::single_edge()).is_err());
    }

    #[test]
    fn square_torus_is_essentially_3connected() {
        assert!(is_essentially_3connected(&fixtures::square_torus()));
        assert!(is_in_t(&fixtures::theta()));
        assert!(is_in_t(&fixtures::theta().dual()));
    }

    #[test]
    fn angular_maps_are_in_q() {
        for m in [fixtures::square_torus(), fixtures::theta(), fixtures::theta().dual()] {
            assert!(is_in_q(&m.angular_map()));
        }
    }

    #[test]
    fn split_face_breaks_irreducibility() {
        // splitting a quadrangular face with a length-2 path creates a
        // doubled contour: a non-facial 4-walk enclosing a disk
        let q = fixtures::square_torus().angular_map();
        let mut b = MapBuilder::from_map(&q);
        // a quad face and its two white corners
        let darts = q.face_darts(0);
        assert_eq!(darts.len(), 4);
        let w1 = darts
            .iter()
            .copied()
            .find(|&d| q.color_of_dart(d) == Some(crate::map::Color::White))
            .unwrap();
        let w2 = q.phi(q.phi(w1));
        // hang a path white corner -- new black vertex -- other white corner
        let nb1 = b.new_dart(Some(crate::map::Color::White));
        let nb2 = b.new_dart(Some(crate::map::Color::Black));
        let nb3 = b.new_dart(Some(crate::map::Color::Black));
        let nb4 = b.new_dart(Some(crate::map::Color::White));
        b.set_alpha(nb1, nb2);
        b.set_alpha(nb3, nb4);
        b.insert_after(q.sigma_inv(w1), nb1);
        b.insert_after(q.sigma_inv(w2), nb4);
        b.insert_after(nb2, nb3);
        let (q2, _) = b.build(Some(Dart(0))).unwrap();
        assert!(q2.genus() == 1);
        for f in 0..q2.n_faces() {
            assert_eq!(q2.face_degree(f), 4);
        }
        assert!(matches!(
            check_in_q(&q2).unwrap_err(),
            Violation::NonFacialShortWalk(4)
        ));
    }

    #[test]
    fn one_vertex_triangulation_in_t3() {
        let t = fixtures::one_vertex_triangulation();
        assert!(is_in_t3(&t));
    }

    #[test]
    fn planar_maps_rejected() {
        assert_eq!(check_in_q(&fixtures::planar_loop()).unwrap_err(), Violation::WrongGenus);
        assert_eq!(check_in_h(&fixtures::single_edge()).unwrap_err(), Violation::WrongGenus);
    }

    #[test]
    fn hexagon_with_diagonal_is_in_d() {
        let d = fixtures::hexagon_with_diagonal();
        let mut degs: Vec<usize> = (0..d.n_faces()).map(|f| d.face_degree(f)).collect();
        degs.sort();
        assert_eq!(d.genus(), 0);
        assert_eq!(degs, vec![4, 4, 6]);
        assert!(is_in_d(&d));
    }
}
