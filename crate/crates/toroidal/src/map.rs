//! Dart-based combinatorial maps.
//!
//! A map is encoded by a fixed-point-free involution `alpha` pairing the two
//! darts of each edge, and a permutation `sigma` giving the counterclockwise
//! order of darts around each vertex.  Faces are the orbits of
//! `phi = sigma . alpha`; with this convention a face orbit traverses its
//! boundary with the face on the right of every dart.  All left/right
//! language in the crate resolves against this single convention.

use std::fmt;

use crate::error::{MapError, Result};

/// An oriented edge-end.  Darts are consecutive indices starting at 0; the
/// text format uses 1-based ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub usize);

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Role of a vertex in a derived map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Primal,
    Dual,
    EdgeVertex,
}

/// A validated combinatorial map.  Immutable after construction; vertex,
/// edge and face ids are per-map (orbits ordered by smallest dart).
#[derive(Debug, Clone)]
pub struct CombMap {
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    alpha: Vec<usize>,
    root: Option<Dart>,
    colors: Option<Vec<Color>>, // per vertex
    vertex_of: Vec<usize>,
    face_of: Vec<usize>,
    edge_of: Vec<usize>,
    vertex_rep: Vec<usize>,
    face_rep: Vec<usize>,
    edge_rep: Vec<usize>,
    genus: usize,
}

fn orbits(perm: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = perm.len();
    let mut of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for d in 0..n {
        if of[d] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(d);
        let mut x = d;
        loop {
            of[x] = id;
            x = perm[x];
            if x == d {
                break;
            }
        }
    }
    (of, reps)
}

impl CombMap {
    /// Builds and validates a map from `sigma` and `alpha` given as images.
    /// `dart_colors`, when present, gives the color of each dart's vertex.
    pub fn new(
        sigma: Vec<usize>,
        alpha: Vec<usize>,
        root: Option<Dart>,
        dart_colors: Option<Vec<Color>>,
    ) -> Result<CombMap> {
        let n = sigma.len();
        if n == 0 || n % 2 != 0 || alpha.len() != n {
            return Err(MapError::NotInvolution);
        }
        for d in 0..n {
            if alpha[d] >= n || alpha[d] == d || alpha[alpha[d]] != d {
                return Err(MapError::NotInvolution);
            }
        }
        let mut seen = vec![false; n];
        for d in 0..n {
            if sigma[d] >= n || seen[sigma[d]] {
                return Err(MapError::NotPermutation);
            }
            seen[sigma[d]] = true;
        }
        // connectivity under <sigma, alpha>
        let mut reach = vec![false; n];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(x) = stack.pop() {
            for y in [sigma[x], alpha[x]] {
                if !reach[y] {
                    reach[y] = true;
                    stack.push(y);
                }
            }
        }
        if reach.iter().any(|&r| !r) {
            return Err(MapError::NotConnected);
        }
        if let Some(r) = root {
            if r.0 >= n {
                return Err(MapError::NotPermutation);
            }
        }

        let mut sigma_inv = vec![0usize; n];
        for d in 0..n {
            sigma_inv[sigma[d]] = d;
        }
        let phi: Vec<usize> = (0..n).map(|d| sigma[alpha[d]]).collect();
        let (vertex_of, vertex_rep) = orbits(&sigma);
        let (face_of, face_rep) = orbits(&phi);
        let mut edge_of = vec![usize::MAX; n];
        let mut edge_rep = Vec::new();
        for d in 0..n {
            if edge_of[d] == usize::MAX {
                let id = edge_rep.len();
                edge_rep.push(d);
                edge_of[d] = id;
                edge_of[alpha[d]] = id;
            }
        }

        let v = vertex_rep.len() as i64;
        let e = edge_rep.len() as i64;
        let f = face_rep.len() as i64;
        let euler = v - e + f;
        if (2 - euler) % 2 != 0 || euler > 2 {
            return Err(MapError::NotPermutation); // unreachable for valid permutations
        }
        let genus = ((2 - euler) / 2) as usize;

        let colors = match dart_colors {
            None => None,
            Some(dc) => {
                if dc.len() != n {
                    return Err(MapError::BadColoring);
                }
                let mut per_vertex = vec![None; vertex_rep.len()];
                for d in 0..n {
                    let v = vertex_of[d];
                    match per_vertex[v] {
                        None => per_vertex[v] = Some(dc[d]),
                        Some(c) if c == dc[d] => {}
                        _ => return Err(MapError::BadColoring),
                    }
                }
                let per_vertex: Vec<Color> = per_vertex.into_iter().map(|c| c.unwrap()).collect();
                for d in 0..n {
                    if per_vertex[vertex_of[d]] == per_vertex[vertex_of[alpha[d]]] {
                        return Err(MapError::BadColoring);
                    }
                }
                Some(per_vertex)
            }
        };

        Ok(CombMap {
            sigma,
            sigma_inv,
            alpha,
            root,
            colors,
            vertex_of,
            face_of,
            edge_of,
            vertex_rep,
            face_rep,
            edge_rep,
            genus,
        })
    }

    /// Convenience constructor from explicit cycles and pairs (0-based darts).
    pub fn from_cycles(
        n_darts: usize,
        sigma_cycles: &[&[usize]],
        alpha_pairs: &[(usize, usize)],
        root: Option<usize>,
        colors: Option<&[(usize, Color)]>,
    ) -> Result<CombMap> {
        let mut sigma: Vec<usize> = (0..n_darts).collect();
        for cyc in sigma_cycles {
            for i in 0..cyc.len() {
                sigma[cyc[i]] = cyc[(i + 1) % cyc.len()];
            }
        }
        let mut alpha: Vec<usize> = (0..n_darts).collect();
        for &(a, b) in alpha_pairs {
            alpha[a] = b;
            alpha[b] = a;
        }
        let dart_colors = colors.map(|list| {
            // propagate each seed color over its sigma-orbit
            let mut dc = vec![None; n_darts];
            for &(d, c) in list {
                let mut x = d;
                loop {
                    dc[x] = Some(c);
                    x = sigma[x];
                    if x == d {
                        break;
                    }
                }
            }
            dc.into_iter().map(|c| c.expect("color seeds must cover all vertices")).collect()
        });
        CombMap::new(sigma, alpha, root.map(Dart), dart_colors)
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }
    pub fn n_vertices(&self) -> usize {
        self.vertex_rep.len()
    }
    pub fn n_edges(&self) -> usize {
        self.edge_rep.len()
    }
    pub fn n_faces(&self) -> usize {
        self.face_rep.len()
    }
    pub fn genus(&self) -> usize {
        self.genus
    }
    pub fn root(&self) -> Option<Dart> {
        self.root
    }
    pub fn with_root(mut self, root: Option<Dart>) -> CombMap {
        self.root = root;
        self
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.n_darts()).map(Dart)
    }
    pub fn sigma(&self, d: Dart) -> Dart {
        Dart(self.sigma[d.0])
    }
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        Dart(self.sigma_inv[d.0])
    }
    pub fn alpha(&self, d: Dart) -> Dart {
        Dart(self.alpha[d.0])
    }
    pub fn phi(&self, d: Dart) -> Dart {
        Dart(self.sigma[self.alpha[d.0]])
    }
    pub fn phi_inv(&self, d: Dart) -> Dart {
        Dart(self.alpha[self.sigma_inv[d.0]])
    }

    pub fn vertex_of(&self, d: Dart) -> VertexId {
        self.vertex_of[d.0]
    }
    pub fn face_of(&self, d: Dart) -> FaceId {
        self.face_of[d.0]
    }
    pub fn edge_of(&self, d: Dart) -> EdgeId {
        self.edge_of[d.0]
    }
    pub fn vertex_rep(&self, v: VertexId) -> Dart {
        Dart(self.vertex_rep[v])
    }
    pub fn face_rep(&self, f: FaceId) -> Dart {
        Dart(self.face_rep[f])
    }
    pub fn edge_rep(&self, e: EdgeId) -> Dart {
        Dart(self.edge_rep[e])
    }
    pub fn edge_darts(&self, e: EdgeId) -> (Dart, Dart) {
        let d = Dart(self.edge_rep[e]);
        (d, self.alpha(d))
    }

    /// Darts at a vertex in counterclockwise order, starting at the representative.
    pub fn vertex_darts(&self, v: VertexId) -> Vec<Dart> {
        let mut out = Vec::new();
        let start = self.vertex_rep[v];
        let mut x = start;
        loop {
            out.push(Dart(x));
            x = self.sigma[x];
            if x == start {
                break;
            }
        }
        out
    }

    /// Darts of a face in boundary order (face on the right of each dart).
    pub fn face_darts(&self, f: FaceId) -> Vec<Dart> {
        let mut out = Vec::new();
        let start = self.face_rep[f];
        let mut x = start;
        loop {
            out.push(Dart(x));
            x = self.sigma[self.alpha[x]];
            if x == start {
                break;
            }
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex_darts(v).len()
    }
    pub fn face_degree(&self, f: FaceId) -> usize {
        self.face_darts(f).len()
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.colors.as_deref()
    }
    pub fn color(&self, v: VertexId) -> Option<Color> {
        self.colors.as_ref().map(|c| c[v])
    }
    pub fn color_of_dart(&self, d: Dart) -> Option<Color> {
        self.color(self.vertex_of(d))
    }
    pub fn with_colors(mut self, colors: Option<Vec<Color>>) -> Result<CombMap> {
        if let Some(ref c) = colors {
            if c.len() != self.n_vertices() {
                return Err(MapError::BadColoring);
            }
            for d in 0..self.n_darts() {
                if c[self.vertex_of[d]] == c[self.vertex_of[self.alpha[d]]] {
                    return Err(MapError::BadColoring);
                }
            }
        }
        self.colors = colors;
        Ok(self)
    }

    /// 2-colors the vertices if possible.  `None` when an odd closed walk exists.
    pub fn bipartition(&self) -> Option<Vec<Color>> {
        let mut col = vec![None; self.n_vertices()];
        col[self.vertex_of[0]] = Some(Color::Black);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            let cv = col[self.vertex_of[x]].unwrap();
            for (y, c) in [(self.sigma[x], cv), (self.alpha[x], cv.other())] {
                let vy = self.vertex_of[y];
                match col[vy] {
                    None => {
                        col[vy] = Some(c);
                        stack.push(y);
                    }
                    Some(prev) if prev == c => {}
                    _ => return None,
                }
            }
        }
        Some(col.into_iter().map(|c| c.unwrap()).collect())
    }

    /// The dual map: same darts, rotation given by the face permutation.
    pub fn dual(&self) -> CombMap {
        let phi: Vec<usize> = (0..self.n_darts()).map(|d| self.sigma[self.alpha[d]]).collect();
        CombMap::new(phi, self.alpha.clone(), self.root, None).expect("dual of a valid map")
    }

    /// The angular map: a white vertex per vertex, a black vertex per face,
    /// one edge per corner.  Dart `2d` sits at the (white) vertex of `d`,
    /// dart `2d+1` at the (black) vertex of the face containing the corner
    /// between `d` and `sigma(d)`.
    pub fn angular_map(&self) -> CombMap {
        let n = self.n_darts();
        let mut sigma = vec![0usize; 2 * n];
        let mut alpha = vec![0usize; 2 * n];
        let mut colors = vec![Color::Black; 2 * n];
        for d in 0..n {
            sigma[2 * d] = 2 * self.sigma[d];
            sigma[2 * d + 1] = 2 * self.sigma_inv[self.alpha[d]] + 1;
            alpha[2 * d] = 2 * d + 1;
            alpha[2 * d + 1] = 2 * d;
            colors[2 * d] = Color::White;
        }
        let root = self.root.map(|r| Dart(2 * r.0));
        CombMap::new(sigma, alpha, root, Some(colors)).expect("angular map of a valid map")
    }

    /// Inverse of `angular_map` on bipartite quadrangulations with a
    /// designated white class.  Returns the primal map together with the
    /// white dart of `q` carrying each primal dart.
    pub fn primal_from_angular(q: &CombMap) -> Result<PrimalFromAngular> {
        let colors = q.colors.as_ref().ok_or(MapError::NotBipartite)?;
        for f in 0..q.n_faces() {
            if q.face_degree(f) != 4 {
                return Err(MapError::NotQuadrangulation);
            }
        }
        let mut white_darts = Vec::new();
        let mut index = vec![usize::MAX; q.n_darts()];
        for d in 0..q.n_darts() {
            if colors[q.vertex_of[d]] == Color::White {
                index[d] = white_darts.len();
                white_darts.push(d);
            }
        }
        let m = white_darts.len();
        let mut sigma = vec![0usize; m];
        let mut alpha = vec![0usize; m];
        for (i, &w) in white_darts.iter().enumerate() {
            sigma[i] = index[q.sigma[w]];
            let opposite = q.phi(q.phi(Dart(w))).0;
            alpha[i] = index[opposite];
            debug_assert_ne!(alpha[i], usize::MAX);
        }
        let root = q.root.map(|r| {
            let w = if colors[q.vertex_of[r.0]] == Color::White { r.0 } else { q.alpha[r.0] };
            Dart(index[w])
        });
        let map = CombMap::new(sigma, alpha, root, None)?;
        Ok(PrimalFromAngular {
            map,
            dart_to_q: white_darts.into_iter().map(Dart).collect(),
        })
    }

    /// The derived map: superimposition with the dual.  Per primal dart `d`
    /// the cells are `4d` (at the primal vertex, toward the edge-vertex),
    /// `4d+1` (its opposite), `4d+2` (at the dual vertex of the face right
    /// of `d`, toward the edge-vertex) and `4d+3` (its opposite).
    pub fn derived_map(&self) -> DerivedMap {
        let n = self.n_darts();
        let mut sigma = vec![0usize; 4 * n];
        let mut alpha = vec![0usize; 4 * n];
        for d in 0..n {
            let p = 4 * d;
            let q = 4 * d + 1;
            let r = 4 * d + 2;
            let s = 4 * d + 3;
            sigma[p] = 4 * self.sigma[d];
            sigma[q] = s;
            sigma[s] = 4 * self.alpha[d] + 1;
            sigma[r] = 4 * self.phi_inv(Dart(d)).0 + 2;
            alpha[p] = q;
            alpha[q] = p;
            alpha[r] = s;
            alpha[s] = r;
        }
        let root = self.root.map(|r| Dart(4 * r.0));
        let map = CombMap::new(sigma, alpha, root, None).expect("derived map of a valid map");
        let mut role = vec![Role::EdgeVertex; map.n_vertices()];
        for d in 0..n {
            role[map.vertex_of[4 * d]] = Role::Primal;
            role[map.vertex_of[4 * d + 2]] = Role::Dual;
        }
        DerivedMap { map, role }
    }

    /// Rebuilds the same map structure with a different root.
    pub fn rerooted(&self, root: Option<Dart>) -> CombMap {
        let mut m = self.clone();
        m.root = root;
        m
    }

    /// Removes the darts flagged in `kill` (which must be closed under
    /// `alpha`), splicing rotations around them.  Returns the new map and
    /// the dart renumbering.
    pub fn delete_darts(&self, kill: &[bool]) -> Result<(CombMap, Vec<Option<Dart>>)> {
        assert_eq!(kill.len(), self.n_darts());
        for d in 0..self.n_darts() {
            if kill[d] != kill[self.alpha[d]] {
                return Err(MapError::NotInvolution);
            }
        }
        let mut builder = MapBuilder::from_map(self);
        for d in 0..self.n_darts() {
            if kill[d] {
                builder.remove_from_rotation(Dart(d));
            }
        }
        for d in 0..self.n_darts() {
            if kill[d] {
                builder.delete_dart(Dart(d));
            }
        }
        let root = self.root.filter(|r| !kill[r.0]);
        let (map, renum) = builder.build(root)?;
        Ok((map, renum))
    }
}

/// Result of `primal_from_angular`: the primal map plus, for each primal
/// dart, the white dart of the quadrangulation it came from.
pub struct PrimalFromAngular {
    pub map: CombMap,
    pub dart_to_q: Vec<Dart>,
}

impl PrimalFromAngular {
    /// Black vertex of the quadrangulation corresponding to the face of the
    /// primal map containing dart `d`.
    pub fn face_to_q_black(&self, q: &CombMap, d: Dart) -> VertexId {
        let w = self.dart_to_q[d.0];
        q.vertex_of(q.alpha(q.sigma_inv(w)))
    }
}

/// A derived map together with the role of each of its vertices.
pub struct DerivedMap {
    pub map: CombMap,
    pub role: Vec<Role>,
}

impl DerivedMap {
    /// Face of the derived map corresponding to the corner-edge of the
    /// underlying quadrangulation carried by primal dart `d`.
    pub fn face_of_primal_dart(&self, d: Dart) -> FaceId {
        self.map.face_of(Dart(4 * d.0))
    }

    /// Collapses roles to colors: primal and dual vertices white, edge-vertices
    /// black (the coloring that matches the angular map of the angular map).
    pub fn role_colors(&self) -> Vec<Color> {
        self.role
            .iter()
            .map(|r| match r {
                Role::EdgeVertex => Color::Black,
                _ => Color::White,
            })
            .collect()
    }
}

/// Mutable dart-level surgery; validated into a `CombMap` by `build`.
pub struct MapBuilder {
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    alpha: Vec<usize>,
    color: Vec<Option<Color>>,
    alive: Vec<bool>,
}

impl MapBuilder {
    pub fn from_map(m: &CombMap) -> MapBuilder {
        let n = m.n_darts();
        MapBuilder {
            sigma: m.sigma.clone(),
            sigma_inv: m.sigma_inv.clone(),
            alpha: m.alpha.clone(),
            color: (0..n).map(|d| m.color_of_dart(Dart(d))).collect(),
            alive: vec![true; n],
        }
    }

    pub fn empty() -> MapBuilder {
        MapBuilder {
            sigma: Vec::new(),
            sigma_inv: Vec::new(),
            alpha: Vec::new(),
            color: Vec::new(),
            alive: Vec::new(),
        }
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        Dart(self.sigma[d.0])
    }
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        Dart(self.sigma_inv[d.0])
    }
    pub fn alpha(&self, d: Dart) -> Dart {
        Dart(self.alpha[d.0])
    }

    /// Creates a new dart forming its own one-dart vertex; its alpha partner
    /// must be set before building.
    pub fn new_dart(&mut self, color: Option<Color>) -> Dart {
        let d = self.sigma.len();
        self.sigma.push(d);
        self.sigma_inv.push(d);
        self.alpha.push(d);
        self.color.push(color);
        self.alive.push(true);
        Dart(d)
    }

    pub fn set_alpha(&mut self, a: Dart, b: Dart) {
        self.alpha[a.0] = b.0;
        self.alpha[b.0] = a.0;
    }

    pub fn set_color(&mut self, d: Dart, c: Color) {
        self.color[d.0] = Some(c);
    }

    /// Inserts `d` (currently isolated in its rotation) right after `a` in
    /// counterclockwise order around `a`'s vertex.
    pub fn insert_after(&mut self, a: Dart, d: Dart) {
        debug_assert_eq!(self.sigma[d.0], d.0);
        let next = self.sigma[a.0];
        self.sigma[a.0] = d.0;
        self.sigma_inv[d.0] = a.0;
        self.sigma[d.0] = next;
        self.sigma_inv[next] = d.0;
    }

    /// Splices `d` out of its rotation, leaving it as a one-dart vertex.
    pub fn remove_from_rotation(&mut self, d: Dart) {
        let prev = self.sigma_inv[d.0];
        let next = self.sigma[d.0];
        if prev == d.0 {
            return;
        }
        self.sigma[prev] = next;
        self.sigma_inv[next] = prev;
        self.sigma[d.0] = d.0;
        self.sigma_inv[d.0] = d.0;
    }

    /// Marks a dart dead; it must already be isolated or removed along with
    /// its whole vertex, and its alpha partner must die too.
    pub fn delete_dart(&mut self, d: Dart) {
        self.alive[d.0] = false;
    }

    /// Compacts live darts and validates.  Returns the map and the old-dart
    /// renumbering.
    pub fn build(&self, root: Option<Dart>) -> Result<(CombMap, Vec<Option<Dart>>)> {
        let n = self.sigma.len();
        let mut renum: Vec<Option<Dart>> = vec![None; n];
        let mut live = Vec::new();
        for d in 0..n {
            if self.alive[d] {
                renum[d] = Some(Dart(live.len()));
                live.push(d);
            }
        }
        let mut sigma = vec![0usize; live.len()];
        let mut alpha = vec![0usize; live.len()];
        let mut any_color = false;
        let mut colors = vec![Color::Black; live.len()];
        for (i, &d) in live.iter().enumerate() {
            sigma[i] = renum[self.sigma[d]].ok_or(MapError::NotPermutation)?.0;
            alpha[i] = renum[self.alpha[d]].ok_or(MapError::NotInvolution)?.0;
            if let Some(c) = self.color[d] {
                any_color = true;
                colors[i] = c;
            }
        }
        let root = root.and_then(|r| renum[r.0]);
        let map = CombMap::new(sigma, alpha, root, if any_color { Some(colors) } else { None })?;
        Ok((map, renum))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_edge_counts() {
        let m = fixtures::single_edge();
        assert_eq!((m.n_vertices(), m.n_edges(), m.n_faces(), m.genus()), (2, 1, 1, 0));
    }

    #[test]
    fn planar_loop_counts() {
        let m = fixtures::planar_loop();
        assert_eq!((m.n_vertices(), m.n_edges(), m.n_faces(), m.genus()), (1, 1, 2, 0));
        // orientation self-test: with faces as orbits of sigma.alpha, each
        // face orbit of the loop has length 1
        for f in 0..m.n_faces() {
            assert_eq!(m.face_degree(f), 1);
        }
    }

    #[test]
    fn theta_counts_and_face_orbit() {
        let m = fixtures::theta();
        assert_eq!((m.n_vertices(), m.n_edges(), m.n_faces(), m.genus()), (2, 3, 1, 1));
        // single face orbit of length 6 traced by hand: 0 -> 4 -> 2 -> 3 -> 1 -> 5
        let orbit = m.face_darts(0);
        assert_eq!(orbit.len(), 6);
        let mut d = Dart(0);
        let expect = [0usize, 4, 2, 3, 1, 5];
        for &x in &expect {
            assert_eq!(d.0, x);
            d = m.phi(d);
        }
    }

    #[test]
    fn square_torus_counts() {
        let m = fixtures::square_torus();
        assert_eq!((m.n_vertices(), m.n_edges(), m.n_faces(), m.genus()), (1, 2, 1, 1));
    }

    #[test]
    fn involution_validation() {
        assert_eq!(
            CombMap::new(vec![0, 1], vec![0, 1], None, None).unwrap_err(),
            MapError::NotInvolution
        );
        // disconnected: two separate edges
        assert_eq!(
            CombMap::new(vec![0, 1, 2, 3], vec![1, 0, 3, 2], None, None).unwrap_err(),
            MapError::NotConnected
        );
    }

    #[test]
    fn coloring_validation() {
        // loop cannot be colored
        let bad = CombMap::new(vec![1, 0], vec![1, 0], None, Some(vec![Color::Black, Color::Black]));
        assert_eq!(bad.unwrap_err(), MapError::BadColoring);
        let ok = fixtures::theta();
        assert_eq!(ok.color(ok.vertex_of(Dart(0))), Some(Color::Black));
        assert_eq!(ok.color(ok.vertex_of(Dart(3))), Some(Color::White));
    }

    #[test]
    fn dual_of_planar_loop_is_single_edge() {
        let d = fixtures::planar_loop().dual();
        assert_eq!((d.n_vertices(), d.n_edges(), d.n_faces(), d.genus()), (2, 1, 1, 0));
    }

    #[test]
    fn dual_of_theta() {
        let d = fixtures::theta().dual();
        assert_eq!((d.n_vertices(), d.n_edges(), d.n_faces(), d.genus()), (1, 3, 2, 1));
    }

    #[test]
    fn angular_map_of_planar_loop() {
        let q = fixtures::planar_loop().angular_map();
        assert_eq!((q.n_vertices(), q.n_edges(), q.n_faces(), q.genus()), (3, 2, 1, 0));
        let whites = q
            .colors()
            .unwrap()
            .iter()
            .filter(|&&c| c == Color::White)
            .count();
        assert_eq!(whites, 1);
    }

    #[test]
    fn angular_map_counts_match() {
        for m in [fixtures::theta(), fixtures::square_torus(), fixtures::single_edge()] {
            let q = m.angular_map();
            assert_eq!(q.genus(), m.genus());
            assert_eq!(q.n_edges(), m.n_darts());
            let whites = q.colors().unwrap().iter().filter(|&&c| c == Color::White).count();
            assert_eq!(whites, m.n_vertices());
            assert_eq!(q.n_vertices() - whites, m.n_faces());
            for f in 0..q.n_faces() {
                assert_eq!(q.face_degree(f), 4);
            }
        }
    }

    #[test]
    fn primal_from_angular_round_trip_exact() {
        for m in [fixtures::theta(), fixtures::square_torus(), fixtures::planar_loop()] {
            let q = m.angular_map();
            let p = CombMap::primal_from_angular(&q).unwrap();
            assert_eq!(p.map.n_darts(), m.n_darts());
            for d in 0..m.n_darts() {
                assert_eq!(p.map.sigma[d], m.sigma[d]);
                assert_eq!(p.map.alpha[d], m.alpha[d]);
            }
        }
    }

    #[test]
    fn derived_map_structure() {
        let m = fixtures::single_edge();
        let der = m.derived_map();
        // 2 primal, 1 dual, 1 edge-vertex; still genus 0
        assert_eq!(der.map.genus(), 0);
        let primal = der.role.iter().filter(|r| **r == Role::Primal).count();
        let dual = der.role.iter().filter(|r| **r == Role::Dual).count();
        let edgev = der.role.iter().filter(|r| **r == Role::EdgeVertex).count();
        assert_eq!((primal, dual, edgev), (2, 1, 1));
        for f in 0..der.map.n_faces() {
            assert_eq!(der.map.face_degree(f), 4);
        }
        for m in [fixtures::theta(), fixtures::square_torus()] {
            let der = m.derived_map();
            let edgev = der.role.iter().filter(|r| **r == Role::EdgeVertex).count();
            assert_eq!(edgev, m.n_edges());
            for v in 0..der.map.n_vertices() {
                if der.role[v] == Role::EdgeVertex {
                    assert_eq!(der.map.degree(v), 4);
                }
            }
        }
    }

    #[test]
    fn bipartition_cases() {
        assert!(fixtures::single_edge().bipartition().is_some());
        assert!(fixtures::planar_loop().bipartition().is_none());
        assert!(fixtures::theta().bipartition().is_some());
        assert!(fixtures::square_torus().bipartition().is_none());
    }
}
