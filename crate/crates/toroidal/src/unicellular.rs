//! Balanced precubic bipartite unicellular toroidal maps: structure,
//! balance, kernel decomposition, exhaustive generation and sampling.
//!
//! Every member has a core obtained by iterated leaf deletion whose kernel
//! is two vertices joined by three parallel edges; the three kernel cycles
//! are the only cycles of the map, and balance asks that each has as many
//! incident edge-sides on both sides.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{MapError, Result};
use crate::iso::canonical_key_unrooted;
use crate::map::{Color, CombMap, Dart, MapBuilder, VertexId};
use crate::walks::cycle_sides;

#[derive(Debug, Clone)]
pub struct UnicellularMap {
    pub map: CombMap,
    pub leaves: Vec<VertexId>,
    pub nodes: Vec<VertexId>,
}

impl UnicellularMap {
    pub fn n_leaves(&self) -> usize {
        self.leaves.len()
    }

    /// Black/white node counts (leaves not included).
    pub fn node_colors(&self) -> (usize, usize) {
        let colors = self.map.colors().expect("members are colored");
        let b = self.nodes.iter().filter(|&&v| colors[v] == Color::Black).count();
        (b, self.nodes.len() - b)
    }

    /// Darts of pending edges pointing into their leaf.
    pub fn pending_darts(&self) -> Vec<Dart> {
        self.map
            .darts()
            .filter(|&d| self.map.degree(self.map.vertex_of(self.map.alpha(d))) == 1)
            .collect()
    }
}

/// Validates a map as a precubic bipartite unicellular toroidal map.
/// Uncolored maps are colored by their unique bipartition when one exists.
pub fn classify(m: &CombMap) -> Result<UnicellularMap> {
    if m.n_faces() != 1 {
        return Err(MapError::NotUnicellular);
    }
    if m.genus() != 1 {
        return Err(MapError::WrongGenus);
    }
    let mut leaves = Vec::new();
    let mut nodes = Vec::new();
    for v in 0..m.n_vertices() {
        match m.degree(v) {
            1 => leaves.push(v),
            3 => nodes.push(v),
            _ => return Err(MapError::NotPrecubic),
        }
    }
    let map = if m.colors().is_some() {
        m.clone()
    } else {
        let colors = m.bipartition().ok_or(MapError::NotBipartite)?;
        m.clone().with_colors(Some(colors))?
    };
    Ok(UnicellularMap { map, leaves, nodes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A pendant plane binary subtree: a leaf, or a node with two ordered
/// children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlantedTree {
    Leaf,
    Node(Box<PlantedTree>, Box<PlantedTree>),
}

impl PlantedTree {
    pub fn n_leaves(&self) -> usize {
        match self {
            PlantedTree::Leaf => 1,
            PlantedTree::Node(a, b) => a.n_leaves() + b.n_leaves(),
        }
    }
}

/// All pendant plane binary trees with the given number of leaves.
pub fn planted_trees(leaves: usize) -> Vec<PlantedTree> {
    assert!(leaves >= 1);
    if leaves == 1 {
        return vec![PlantedTree::Leaf];
    }
    let mut out = Vec::new();
    for l in 1..leaves {
        for a in planted_trees(l) {
            for b in planted_trees(leaves - l) {
                out.push(PlantedTree::Node(Box::new(a.clone()), Box::new(b)));
            }
        }
    }
    out
}

/// One maximal chain of the core, directed from the first kernel vertex to
/// the second, with the pendant subtree and its side at every interior
/// vertex.
#[derive(Debug, Clone)]
pub struct Chain {
    pub darts: Vec<Dart>,
    pub interiors: Vec<(VertexId, Side, PlantedTree)>,
}

#[derive(Debug, Clone)]
pub struct KernelDecomposition {
    pub kernel: (VertexId, VertexId),
    pub chains: [Chain; 3],
}

impl KernelDecomposition {
    /// The three kernel cycles: chain i forward, chain j backward.
    pub fn kernel_cycles(&self, m: &CombMap) -> [Vec<Dart>; 3] {
        let rev = |c: &Chain| -> Vec<Dart> {
            c.darts.iter().rev().map(|&d| m.alpha(d)).collect()
        };
        let mk = |i: usize, j: usize| -> Vec<Dart> {
            let mut w = self.chains[i].darts.clone();
            w.extend(rev(&self.chains[j]));
            w
        };
        [mk(0, 1), mk(0, 2), mk(1, 2)]
    }

    /// Caterpillar side lists (one entry per interior vertex of each chain).
    pub fn caterpillars(&self) -> [Caterpillar; 3] {
        let mk = |c: &Chain| Caterpillar {
            sides: c.interiors.iter().map(|&(_, s, _)| s).collect(),
        };
        [mk(&self.chains[0]), mk(&self.chains[1]), mk(&self.chains[2])]
    }

    /// The six kernel half-edges as darts: the chain-end darts at both
    /// kernel vertices.
    pub fn kernel_half_edges(&self, m: &CombMap) -> Vec<Dart> {
        let mut out = Vec::new();
        for c in &self.chains {
            out.push(c.darts[0]);
            out.push(m.alpha(*c.darts.last().unwrap()));
        }
        out
    }
}

/// A bi-rooted caterpillar reduced to the sides of its non-root leaves
/// along the spine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caterpillar {
    pub sides: Vec<Side>,
}

impl Caterpillar {
    pub fn gamma(&self) -> i64 {
        self.sides
            .iter()
            .map(|s| if *s == Side::Right { 1 } else { -1 })
            .sum()
    }

    pub fn mirrored(&self) -> Caterpillar {
        Caterpillar {
            sides: self
                .sides
                .iter()
                .map(|s| if *s == Side::Right { Side::Left } else { Side::Right })
                .collect(),
        }
    }
}

fn extract_tree(m: &CombMap, t: Dart) -> PlantedTree {
    let w = m.vertex_of(m.alpha(t));
    if m.degree(w) == 1 {
        return PlantedTree::Leaf;
    }
    let arr = m.alpha(t);
    let c1 = m.sigma(arr);
    let c2 = m.sigma(c1);
    PlantedTree::Node(Box::new(extract_tree(m, c1)), Box::new(extract_tree(m, c2)))
}

/// Computes the core by iterated leaf deletion and decomposes it into the
/// kernel and its three chains.
pub fn core_kernel(u: &UnicellularMap) -> KernelDecomposition {
    let m = &u.map;
    // peel leaves on the graph level
    let mut deg: Vec<usize> = (0..m.n_vertices()).map(|v| m.degree(v)).collect();
    let mut edge_alive = vec![true; m.n_edges()];
    let mut stack: Vec<VertexId> = (0..m.n_vertices()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if deg[v] != 1 {
            continue;
        }
        let d = m
            .vertex_darts(v)
            .into_iter()
            .find(|&d| edge_alive[m.edge_of(d)])
            .expect("degree-1 vertex has a live edge");
        edge_alive[m.edge_of(d)] = false;
        deg[v] = 0;
        let w = m.vertex_of(m.alpha(d));
        deg[w] -= 1;
        if deg[w] == 1 {
            stack.push(w);
        }
    }
    let kernel_vs: Vec<VertexId> = (0..m.n_vertices()).filter(|&v| deg[v] == 3).collect();
    assert_eq!(kernel_vs.len(), 2, "the kernel of a precubic unicellular toroidal map is the triple edge");
    let a = kernel_vs[0];
    let b = kernel_vs[1];

    let chain_starts: Vec<Dart> = m
        .vertex_darts(a)
        .into_iter()
        .filter(|&d| edge_alive[m.edge_of(d)])
        .collect();
    assert_eq!(chain_starts.len(), 3);
    let chains: Vec<Chain> = chain_starts
        .iter()
        .map(|&start| {
            let mut darts = vec![start];
            let mut interiors = Vec::new();
            loop {
                let arr = m.alpha(*darts.last().unwrap());
                let v = m.vertex_of(arr);
                if v == b {
                    break;
                }
                assert_ne!(v, a, "chains join the two kernel vertices");
                // degree-3 interior vertex: one core continuation, one tree
                let c1 = m.sigma(arr);
                let c2 = m.sigma(c1);
                let (depart, tree_dart, side) = if edge_alive[m.edge_of(c1)] {
                    debug_assert!(!edge_alive[m.edge_of(c2)]);
                    (c1, c2, Side::Left)
                } else {
                    (c2, c1, Side::Right)
                };
                interiors.push((v, side, extract_tree(m, tree_dart)));
                darts.push(depart);
            }
            Chain { darts, interiors }
        })
        .collect();
    KernelDecomposition {
        kernel: (a, b),
        chains: chains.try_into().expect("exactly three chains"),
    }
}

/// Edge-side counts on the two sides of a kernel cycle.
pub fn side_counts(m: &CombMap, cycle: &[Dart]) -> Result<(usize, usize)> {
    let sides = cycle_sides(m, cycle)?;
    Ok((sides.left.len(), sides.right.len()))
}

/// A member is balanced when each of its three kernel cycles has as many
/// incident edge-sides on both sides.
pub fn is_balanced(u: &UnicellularMap) -> bool {
    let dec = core_kernel(u);
    dec.kernel_cycles(&u.map).iter().all(|c| {
        let (l, r) = side_counts(&u.map, c).expect("kernel cycles are cycles");
        l == r
    })
}

/// Replaces every pendant subtree by a single leaf on the same side.
pub fn skeleton(u: &UnicellularMap) -> UnicellularMap {
    let dec = core_kernel(u);
    let chains: Vec<Vec<(Side, PlantedTree)>> = dec
        .chains
        .iter()
        .map(|c| c.interiors.iter().map(|&(_, s, _)| (s, PlantedTree::Leaf)).collect())
        .collect();
    let a_color = u.map.color(dec.kernel.0).unwrap();
    assemble(&chains[0], &chains[1], &chains[2], a_color).expect("skeleton assembles")
}

fn build_tree(b: &mut MapBuilder, at: Dart, tree: &PlantedTree, color: Color) {
    // `at` is a fresh dart already placed in its vertex rotation; create the
    // subtree hanging from it
    let root = b.new_dart(Some(color));
    b.set_alpha(at, root);
    if let PlantedTree::Node(l, r) = tree {
        let c1 = b.new_dart(Some(color));
        let c2 = b.new_dart(Some(color));
        b.insert_after(root, c1);
        b.insert_after(c1, c2);
        build_tree(b, c1, l, color.other());
        build_tree(b, c2, r, color.other());
    }
}

/// Assembles a member from the kernel embedding and three chain contents.
/// Interior counts must share a parity for the coloring to close up.
pub fn assemble(
    c1: &[(Side, PlantedTree)],
    c2: &[(Side, PlantedTree)],
    c3: &[(Side, PlantedTree)],
    a_color: Color,
) -> Result<UnicellularMap> {
    let chains = [c1, c2, c3];
    let mut b = MapBuilder::empty();
    let a_darts: Vec<Dart> = (0..3).map(|_| b.new_dart(Some(a_color))).collect();
    b.insert_after(a_darts[0], a_darts[1]);
    b.insert_after(a_darts[1], a_darts[2]);
    let b_color = if chains[0].len() % 2 == 0 { a_color.other() } else { a_color };
    let b_darts: Vec<Dart> = (0..3).map(|_| b.new_dart(Some(b_color))).collect();
    b.insert_after(b_darts[0], b_darts[1]);
    b.insert_after(b_darts[1], b_darts[2]);
    for (i, chain) in chains.iter().enumerate() {
        let mut prev = a_darts[i];
        let mut color = a_color.other();
        for &(side, ref tree) in chain.iter() {
            let arr = b.new_dart(Some(color));
            b.set_alpha(prev, arr);
            let dep = b.new_dart(Some(color));
            let t = b.new_dart(Some(color));
            match side {
                Side::Right => {
                    b.insert_after(arr, t);
                    b.insert_after(t, dep);
                }
                Side::Left => {
                    b.insert_after(arr, dep);
                    b.insert_after(dep, t);
                }
            }
            build_tree(&mut b, t, tree, color.other());
            prev = dep;
            color = color.other();
        }
        b.set_alpha(prev, b_darts[i]);
    }
    let (map, _) = b.build(Some(Dart(0)))?;
    classify(&map)
}

/// All balanced members with at most `max_leaves` leaves, pairwise
/// non-isomorphic as unrooted colored maps.
pub fn enumerate_ubal(max_leaves: usize) -> Vec<UnicellularMap> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for m in 0..=max_leaves {
        for u in enumerate_u_exact(m) {
            if !is_balanced(&u) {
                continue;
            }
            let key = canonical_key_unrooted(&u.map, None);
            if seen.insert(key) {
                out.push(u);
            }
        }
    }
    out
}

/// All members (balanced or not) with exactly `m` leaves, with duplicates.
pub fn enumerate_u_exact(m: usize) -> Vec<UnicellularMap> {
    let mut out = Vec::new();
    let kmax = m.max(1);
    for k1 in 0..=kmax {
        for k2 in 0..=kmax {
            for k3 in 0..=kmax {
                if k1 % 2 != k2 % 2 || k2 % 2 != k3 % 2 {
                    continue;
                }
                let total = k1 + k2 + k3;
                if (m == 0) != (total == 0) || total > m {
                    continue;
                }
                for dist in compositions(m, total) {
                    let mut choices: Vec<Vec<(Side, PlantedTree)>> = vec![vec![]];
                    for &leaves in &dist {
                        let mut next = Vec::new();
                        for partial in &choices {
                            for tree in planted_trees(leaves) {
                                for side in [Side::Left, Side::Right] {
                                    let mut p = partial.clone();
                                    p.push((side, tree.clone()));
                                    next.push(p);
                                }
                            }
                        }
                        choices = next;
                    }
                    for assignment in choices {
                        let (a1, rest) = assignment.split_at(k1);
                        let (a2, a3) = rest.split_at(k2);
                        for a_color in [Color::Black, Color::White] {
                            if let Ok(u) = assemble(a1, a2, a3, a_color) {
                                out.push(u);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Compositions of `m` into `parts` parts, each at least 1.
fn compositions(m: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=m.saturating_sub(parts - 1) {
        for mut rest in compositions(m - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Random balanced member with the requested number of leaves.  The
/// distribution is not uniform: a random equal-score caterpillar triple is
/// drawn by rejection and random pendant trees are attached.  Returns
/// `None` for leaf counts no member realizes (exactly one leaf: the three
/// chain parities must agree, so interior counts cannot sum to 1).
pub fn sample_ubal(leaves: usize, seed: u64) -> Option<UnicellularMap> {
    if leaves == 1 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        // interior counts with a common parity
        let parity = if leaves == 0 { 0 } else { rng.gen_range(0..2usize) };
        let pick = |rng: &mut ChaCha8Rng| -> usize {
            let hi = leaves / 2;
            let k = 2 * rng.gen_range(0..=hi) + parity;
            k
        };
        let (k1, k2, k3) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let total = k1 + k2 + k3;
        if total > leaves || (leaves > 0 && total == 0) {
            continue;
        }
        let sides: Vec<Side> = (0..total)
            .map(|_| if rng.gen_bool(0.5) { Side::Right } else { Side::Left })
            .collect();
        let gamma = |range: std::ops::Range<usize>| -> i64 {
            sides[range]
                .iter()
                .map(|s| if *s == Side::Right { 1 } else { -1 })
                .sum()
        };
        let g1 = gamma(0..k1);
        let g2 = gamma(k1..k1 + k2);
        let g3 = gamma(k1 + k2..total);
        if g1 != g2 || g2 != g3 {
            continue;
        }
        // distribute leaves over the interiors
        let mut counts = vec![1usize; total];
        for _ in 0..leaves - total {
            let i = rng.gen_range(0..total);
            counts[i] += 1;
        }
        let mut chains: Vec<Vec<(Side, PlantedTree)>> = Vec::new();
        let mut idx = 0;
        for k in [k1, k2, k3] {
            let mut chain = Vec::new();
            for _ in 0..k {
                chain.push((sides[idx], random_tree(counts[idx], &mut rng)));
                idx += 1;
            }
            chains.push(chain);
        }
        let a_color = if rng.gen_bool(0.5) { Color::Black } else { Color::White };
        let Ok(u) = assemble(&chains[0], &chains[1], &chains[2], a_color) else {
            continue;
        };
        if u.n_leaves() == leaves && is_balanced(&u) {
            return Some(u);
        }
    }
}

fn random_tree(leaves: usize, rng: &mut ChaCha8Rng) -> PlantedTree {
    if leaves == 1 {
        PlantedTree::Leaf
    } else {
        let l = rng.gen_range(1..leaves);
        PlantedTree::Node(
            Box::new(random_tree(l, rng)),
            Box::new(random_tree(leaves - l, rng)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso;

    #[test]
    fn theta_classifies() {
        let u = classify(&fixtures::theta()).unwrap();
        assert_eq!(u.n_leaves(), 0);
        assert_eq!(u.nodes.len(), 2);
    }

    #[test]
    fn planar_tree_rejected() {
        let tree = CombMap::from_cycles(2, &[], &[(0, 1)], None, None).unwrap();
        assert_eq!(classify(&tree).unwrap_err(), MapError::WrongGenus);
        let sq = fixtures::square_torus();
        assert_eq!(classify(&sq).unwrap_err(), MapError::NotPrecubic);
        let loop_map = fixtures::planar_loop();
        assert_eq!(classify(&loop_map).unwrap_err(), MapError::NotUnicellular);
    }

    #[test]
    fn theta_kernel_is_itself() {
        let u = classify(&fixtures::theta()).unwrap();
        let dec = core_kernel(&u);
        for c in &dec.chains {
            assert_eq!(c.darts.len(), 1);
            assert!(c.interiors.is_empty());
        }
        assert_eq!(dec.kernel_half_edges(&u.map).len(), 6);
    }

    #[test]
    fn theta_side_counts_and_balance() {
        let u = classify(&fixtures::theta()).unwrap();
        let dec = core_kernel(&u);
        for c in dec.kernel_cycles(&u.map) {
            assert_eq!(side_counts(&u.map, &c).unwrap(), (1, 1));
        }
        assert!(is_balanced(&u));
    }

    #[test]
    fn bookkeeping_invariants() {
        for u in enumerate_ubal(3) {
            assert_eq!(u.nodes.len(), u.n_leaves() + 2);
            let plain = u.map.n_edges() - u.n_leaves();
            assert_eq!(plain, u.n_leaves() + 3);
        }
    }

    #[test]
    fn caterpillar_gamma_basics() {
        assert_eq!(Caterpillar { sides: vec![] }.gamma(), 0);
        let c = Caterpillar { sides: vec![Side::Right, Side::Right, Side::Left] };
        assert_eq!(c.gamma(), 1);
        assert_eq!(c.mirrored().gamma(), -1);
    }

    #[test]
    fn balance_iff_equal_caterpillar_scores() {
        // skeletons with up to two leaves per caterpillar
        let side_lists = |k: usize| -> Vec<Vec<Side>> {
            let mut out = vec![vec![]];
            for _ in 0..k {
                let mut next = Vec::new();
                for p in &out {
                    for s in [Side::Left, Side::Right] {
                        let mut q = p.clone();
                        q.push(s);
                        next.push(q);
                    }
                }
                out = next;
            }
            out
        };
        for k1 in 0..=2usize {
            for k2 in 0..=2usize {
                for k3 in 0..=2usize {
                    if k1 % 2 != k2 % 2 || k2 % 2 != k3 % 2 {
                        continue;
                    }
                    for s1 in side_lists(k1) {
                        for s2 in side_lists(k2) {
                            for s3 in side_lists(k3) {
                                let mk = |ss: &Vec<Side>| -> Vec<(Side, PlantedTree)> {
                                    ss.iter().map(|&s| (s, PlantedTree::Leaf)).collect()
                                };
                                let u = assemble(&mk(&s1), &mk(&s2), &mk(&s3), Color::Black)
                                    .unwrap();
                                let g = |ss: &Vec<Side>| Caterpillar { sides: ss.clone() }.gamma();
                                let equal = g(&s1) == g(&s2) && g(&s2) == g(&s3);
                                assert_eq!(is_balanced(&u), equal);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn balance_equals_skeleton_balance() {
        for m in 0..=3usize {
            for u in enumerate_u_exact(m) {
                let sk = skeleton(&u);
                assert_eq!(is_balanced(&u), is_balanced(&sk));
            }
        }
    }

    #[test]
    fn reassembly_round_trip() {
        for u in enumerate_ubal(3) {
            let dec = core_kernel(&u);
            let chains: Vec<Vec<(Side, PlantedTree)>> = dec
                .chains
                .iter()
                .map(|c| c.interiors.iter().map(|(_, s, t)| (*s, t.clone())).collect())
                .collect();
            let a_color = u.map.color(dec.kernel.0).unwrap();
            let re = assemble(&chains[0], &chains[1], &chains[2], a_color).unwrap();
            assert!(iso::iso(&u.map, &re.map, false));
        }
    }

    #[test]
    fn smallest_members() {
        // the only balanced member with no leaf is the theta map (its two
        // colorings coincide up to isomorphism)
        let all = enumerate_ubal(0);
        assert_eq!(all.len(), 1);
        assert!(iso::iso(&all[0].map, &fixtures::theta(), false));
    }

    #[test]
    fn unbalanced_members_exist() {
        let any_unbalanced = (0..=2usize)
            .flat_map(enumerate_u_exact)
            .any(|u| !is_balanced(&u));
        assert!(any_unbalanced);
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        for leaves in [0usize, 2, 3, 4] {
            let u1 = sample_ubal(leaves, 7).unwrap();
            let u2 = sample_ubal(leaves, 7).unwrap();
            assert!(iso::iso(&u1.map, &u2.map, false));
            assert_eq!(u1.n_leaves(), leaves);
            assert!(is_balanced(&u1));
        }
        assert!(sample_ubal(1, 7).is_none());
    }
}
