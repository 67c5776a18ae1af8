//! Small reference maps used across the test suites.

use crate::map::{Color, CombMap};

/// One edge, two vertices: the smallest planar map.
pub fn single_edge() -> CombMap {
    CombMap::from_cycles(2, &[], &[(0, 1)], Some(0), Some(&[(0, Color::Black), (1, Color::White)]))
        .unwrap()
}

/// One vertex with a loop: planar, two faces.
pub fn planar_loop() -> CombMap {
    CombMap::from_cycles(2, &[&[0, 1]], &[(0, 1)], Some(0), None).unwrap()
}

/// Two vertices joined by three parallel edges embedded with one face:
/// the smallest toroidal unicellular precubic map.
pub fn theta() -> CombMap {
    CombMap::from_cycles(
        6,
        &[&[0, 1, 2], &[3, 4, 5]],
        &[(0, 3), (1, 4), (2, 5)],
        Some(0),
        Some(&[(0, Color::Black), (3, Color::White)]),
    )
    .unwrap()
}

/// One vertex with two loops crossing on the torus: one face, genus 1.
/// This is the unique essentially 3-connected toroidal map with two edges.
pub fn square_torus() -> CombMap {
    CombMap::from_cycles(4, &[&[0, 1, 2, 3]], &[(0, 2), (1, 3)], Some(0), None).unwrap()
}

/// One vertex, three loops: the 1-vertex toroidal triangulation
/// (dual of the theta map).
pub fn one_vertex_triangulation() -> CombMap {
    theta().dual().with_root(Some(crate::map::Dart(0)))
}

/// A hexagon with one diagonal splitting it into two quadrangular faces:
/// the smallest planar bipartite irreducible 6-quadrangular map with an
/// edge away from the hexagonal face.  Vertices v0..v5 counterclockwise,
/// hexagon edge i carries darts (2i, 2i+1), the diagonal v0-v3 carries
/// darts (12, 13).  Rooted at the diagonal.
pub fn hexagon_with_diagonal() -> CombMap {
    CombMap::from_cycles(
        14,
        &[
            &[0, 12, 11],
            &[1, 2],
            &[3, 4],
            &[13, 5, 6],
            &[7, 8],
            &[9, 10],
        ],
        &[(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13)],
        Some(12),
        Some(&[
            (0, Color::White),
            (1, Color::Black),
            (3, Color::White),
            (5, Color::Black),
            (7, Color::White),
            (9, Color::Black),
        ]),
    )
    .unwrap()
}
