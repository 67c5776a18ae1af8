//! Integer homology labels for genus-1 maps via a tree–cotree decomposition.
//!
//! A spanning tree of the vertices and a spanning tree of the dual leave
//! exactly two edges; each induces a dual cycle crossing the map, and the
//! label of a dart records its signed crossings with the two dual cycles.
//! Labels are antisymmetric under `alpha` and sum to zero around every
//! face, so the label sum of a closed walk depends only on its homology
//! class; on the torus a closed walk is contractible iff its sum is zero.

use crate::error::{MapError, Result};
use crate::map::{CombMap, Dart};

#[derive(Debug, Clone)]
pub struct HomologyLabeling {
    label: Vec<[i64; 2]>,
}

impl HomologyLabeling {
    pub fn new(m: &CombMap) -> Result<HomologyLabeling> {
        if m.genus() != 1 {
            return Err(MapError::WrongGenus);
        }
        let n = m.n_darts();

        // spanning tree of the vertices
        let mut tree_edge = vec![false; m.n_edges()];
        let mut v_seen = vec![false; m.n_vertices()];
        v_seen[m.vertex_of(Dart(0))] = true;
        let mut queue = vec![Dart(0)];
        let mut head = 0;
        while head < queue.len() {
            let v = m.vertex_of(queue[head]);
            head += 1;
            for d in m.vertex_darts(v) {
                let w = m.vertex_of(m.alpha(d));
                if !v_seen[w] {
                    v_seen[w] = true;
                    tree_edge[m.edge_of(d)] = true;
                    queue.push(m.alpha(d));
                }
            }
        }

        // spanning tree of the dual among the remaining edges; record each
        // face's parent edge for the leaves-to-root sweep
        let mut cotree_edge = vec![false; m.n_edges()];
        let mut f_seen = vec![false; m.n_faces()];
        let root_face = m.face_of(Dart(0));
        f_seen[root_face] = true;
        let mut forder = vec![root_face];
        let mut parent_dart: Vec<Option<Dart>> = vec![None; m.n_faces()];
        head = 0;
        while head < forder.len() {
            let f = forder[head];
            head += 1;
            for d in m.face_darts(f) {
                if tree_edge[m.edge_of(d)] {
                    continue;
                }
                let g = m.face_of(m.alpha(d));
                if !f_seen[g] {
                    f_seen[g] = true;
                    cotree_edge[m.edge_of(d)] = true;
                    // alpha(d) lies on g's boundary
                    parent_dart[g] = Some(m.alpha(d));
                    forder.push(g);
                }
            }
        }

        let leftover: Vec<usize> = (0..m.n_edges())
            .filter(|&e| !tree_edge[e] && !cotree_edge[e])
            .collect();
        debug_assert_eq!(leftover.len(), 2);

        let mut label = vec![[0i64; 2]; n];
        for (i, &e) in leftover.iter().enumerate() {
            let (d, a) = m.edge_darts(e);
            label[d.0][i] = 1;
            label[a.0][i] = -1;
        }
        // fix each non-root face's sum through its parent cotree edge,
        // children before parents
        for &f in forder.iter().skip(1).rev() {
            let p = parent_dart[f].unwrap();
            for i in 0..2 {
                let s: i64 = m.face_darts(f).iter().map(|d| label[d.0][i]).sum();
                label[p.0][i] -= s;
                label[m.alpha(p).0][i] += s;
            }
        }
        if cfg!(debug_assertions) {
            for f in 0..m.n_faces() {
                for i in 0..2 {
                    let s: i64 = m.face_darts(f).iter().map(|d| label[d.0][i]).sum();
                    debug_assert_eq!(s, 0, "facial sum must vanish");
                }
            }
        }
        Ok(HomologyLabeling { label })
    }

    pub fn label(&self, d: Dart) -> [i64; 2] {
        self.label[d.0]
    }

    /// Homology class of a dart sequence.
    pub fn class_of(&self, walk: &[Dart]) -> [i64; 2] {
        let mut s = [0i64; 2];
        for &d in walk {
            s[0] += self.label[d.0][0];
            s[1] += self.label[d.0][1];
        }
        s
    }

    pub fn is_null(&self, walk: &[Dart]) -> bool {
        self.class_of(walk) == [0, 0]
    }
}

pub use crate::walks::is_closed_walk;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn facial_walks_are_null() {
        for m in [fixtures::theta(), fixtures::square_torus()] {
            let h = HomologyLabeling::new(&m).unwrap();
            for f in 0..m.n_faces() {
                assert!(h.is_null(&m.face_darts(f)));
            }
        }
    }

    #[test]
    fn forth_and_back_is_null() {
        let m = fixtures::theta();
        let h = HomologyLabeling::new(&m).unwrap();
        let walk = [Dart(0), m.alpha(Dart(0))];
        assert!(h.is_null(&walk));
    }

    #[test]
    fn theta_two_cycles_are_noncontractible() {
        let m = fixtures::theta();
        let h = HomologyLabeling::new(&m).unwrap();
        // the three 2-cycles use edge pairs {0,1}, {0,2}, {1,2}
        let cycles = [
            vec![Dart(0), Dart(4)],
            vec![Dart(0), Dart(5)],
            vec![Dart(1), Dart(5)],
        ];
        for c in &cycles {
            assert!(is_closed_walk(&m, c));
            assert!(!h.is_null(c));
        }
    }

    #[test]
    fn wrong_genus_rejected() {
        assert_eq!(
            HomologyLabeling::new(&fixtures::planar_loop()).unwrap_err(),
            MapError::WrongGenus
        );
    }

    #[test]
    fn antisymmetry() {
        let m = fixtures::square_torus();
        let h = HomologyLabeling::new(&m).unwrap();
        for d in m.darts() {
            let l = h.label(d);
            let la = h.label(m.alpha(d));
            assert_eq!([l[0] + la[0], l[1] + la[1]], [0, 0]);
        }
    }

    #[test]
    fn basis_classes_span() {
        // the two loops of the square torus have independent classes
        let m = fixtures::square_torus();
        let h = HomologyLabeling::new(&m).unwrap();
        let a = h.class_of(&[Dart(0)]);
        let b = h.class_of(&[Dart(1)]);
        assert_ne!(a[0] * b[1] - a[1] * b[0], 0);
    }
}
