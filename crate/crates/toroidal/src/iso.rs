//! Canonical relabeling and isomorphism of rooted and unrooted maps.
//!
//! A connected map has no nontrivial automorphism fixing a dart, so the
//! breadth-first relabeling from a root dart is a complete rooted invariant.

use crate::map::{CombMap, Dart};

/// Canonical encoding of the map rooted at `root`.  Darts are relabeled in
/// discovery order of the traversal that explores `sigma` then `alpha` from
/// each dart; the encoding lists the relabeled images plus one label per
/// dart's vertex (color or caller-supplied).
pub fn canonical_encoding(m: &CombMap, root: Dart, labels: Option<&[u16]>) -> Vec<u32> {
    let n = m.n_darts();
    let mut pos = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    pos[root.0] = 0;
    order.push(root.0);
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for y in [m.sigma(Dart(x)).0, m.alpha(Dart(x)).0] {
            if pos[y] == u32::MAX {
                pos[y] = order.len() as u32;
                order.push(y);
            }
        }
        i += 1;
    }
    debug_assert_eq!(order.len(), n);
    let mut enc = Vec::with_capacity(3 * n + 1);
    enc.push(n as u32);
    for &x in &order {
        enc.push(pos[m.sigma(Dart(x)).0]);
        enc.push(pos[m.alpha(Dart(x)).0]);
    }
    for &x in &order {
        let l = match labels {
            Some(ls) => ls[m.vertex_of(Dart(x))] as u32 + 1,
            None => match m.color_of_dart(Dart(x)) {
                None => 0,
                Some(crate::map::Color::Black) => 1,
                Some(crate::map::Color::White) => 2,
            },
        };
        enc.push(l);
    }
    enc
}

/// Canonical key of the unrooted map: minimum encoding over all root choices.
pub fn canonical_key_unrooted(m: &CombMap, labels: Option<&[u16]>) -> Vec<u32> {
    m.darts()
        .map(|d| canonical_encoding(m, d, labels))
        .min()
        .expect("maps have at least one dart")
}

/// Canonical key of the rooted map (root must be set).
pub fn canonical_key_rooted(m: &CombMap, labels: Option<&[u16]>) -> Vec<u32> {
    canonical_encoding(m, m.root().expect("rooted key requires a root"), labels)
}

/// Isomorphism test.  Rooted isomorphism relabels from the root darts;
/// unrooted isomorphism minimizes over root choices.  Colors take part in
/// the comparison whenever either map carries them.
pub fn iso(m1: &CombMap, m2: &CombMap, rooted: bool) -> bool {
    if m1.n_darts() != m2.n_darts() {
        return false;
    }
    if rooted {
        let (Some(r1), Some(r2)) = (m1.root(), m2.root()) else {
            panic!("rooted isomorphism requires both maps to carry roots");
        };
        canonical_encoding(m1, r1, None) == canonical_encoding(m2, r2, None)
    } else {
        canonical_key_unrooted(m1, None) == canonical_key_unrooted(m2, None)
    }
}

/// Number of inequivalent ways to mark one dart of `marks` on `m`, i.e. the
/// number of orbits of `marks` under the automorphism group.
pub fn distinct_markings(m: &CombMap, marks: &[Dart], labels: Option<&[u16]>) -> usize {
    let mut keys: Vec<Vec<u32>> = marks.iter().map(|&d| canonical_encoding(m, d, labels)).collect();
    keys.sort();
    keys.dedup();
    keys.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::map::{Color, CombMap};

    #[test]
    fn map_iso_to_itself() {
        for m in [fixtures::theta(), fixtures::square_torus(), fixtures::single_edge()] {
            assert!(iso(&m, &m, true));
            assert!(iso(&m, &m, false));
        }
    }

    #[test]
    fn theta_iso_to_conjugate() {
        // relabel the theta map by an arbitrary dart permutation conjugation
        let m = fixtures::theta();
        let perm = [3usize, 5, 1, 0, 2, 4]; // old dart -> new dart
        let n = m.n_darts();
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        let mut colors = vec![Color::Black; n];
        for d in 0..n {
            sigma[perm[d]] = perm[m.sigma(Dart(d)).0];
            alpha[perm[d]] = perm[m.alpha(Dart(d)).0];
            colors[perm[d]] = m.color_of_dart(Dart(d)).unwrap();
        }
        let m2 = CombMap::new(sigma, alpha, Some(Dart(perm[0])), Some(colors)).unwrap();
        assert!(iso(&m, &m2, true));
        assert!(iso(&m, &m2, false));
    }

    #[test]
    fn different_maps_not_iso() {
        assert!(!iso(&fixtures::single_edge(), &fixtures::planar_loop(), false));
        assert!(!iso(&fixtures::theta(), &fixtures::theta().dual().with_colors(None).unwrap(), false));
    }

    #[test]
    fn theta_color_swap_is_isomorphic_unrooted() {
        // exchanging the two vertices is an automorphism carrying the
        // coloring to its swap
        let m = fixtures::theta();
        let swapped = CombMap::from_cycles(
            6,
            &[&[0, 1, 2], &[3, 4, 5]],
            &[(0, 3), (1, 4), (2, 5)],
            Some(0),
            Some(&[(0, Color::White), (3, Color::Black)]),
        )
        .unwrap();
        assert!(iso(&m, &swapped, false));
    }

    #[test]
    fn theta_kernel_markings() {
        // color-preserving automorphisms of the theta map are the three
        // rotations, so the six darts fall into two marking classes
        let m = fixtures::theta();
        let all: Vec<Dart> = m.darts().collect();
        assert_eq!(distinct_markings(&m, &all, None), 2);
    }
}
