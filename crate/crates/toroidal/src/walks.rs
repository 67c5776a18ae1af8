//! Closed walks and side classification along cycles.

use crate::error::{MapError, Result};
use crate::map::{CombMap, Dart};

/// Checks that consecutive darts chain head-to-tail and the walk closes.
pub fn is_closed_walk(m: &CombMap, walk: &[Dart]) -> bool {
    if walk.is_empty() {
        return false;
    }
    for i in 0..walk.len() {
        let next = walk[(i + 1) % walk.len()];
        if m.vertex_of(next) != m.vertex_of(m.alpha(walk[i])) {
            return false;
        }
    }
    true
}

/// A closed walk visiting each of its vertices once, with distinct edges.
pub fn is_simple_cycle(m: &CombMap, walk: &[Dart]) -> bool {
    if !is_closed_walk(m, walk) {
        return false;
    }
    let mut vs: Vec<_> = walk.iter().map(|&d| m.vertex_of(d)).collect();
    vs.sort();
    vs.dedup();
    let mut es: Vec<_> = walk.iter().map(|&d| m.edge_of(d)).collect();
    es.sort();
    es.dedup();
    vs.len() == walk.len() && es.len() == walk.len()
}

/// Non-cycle darts at the vertices of a directed cycle, split by side.
/// At each cycle vertex the darts strictly between the reversed incoming
/// dart and the outgoing dart in counterclockwise order lie on the right;
/// the remaining darts lie on the left.
pub struct CycleSides {
    pub right: Vec<Dart>,
    pub left: Vec<Dart>,
}

pub fn cycle_sides(m: &CombMap, cycle: &[Dart]) -> Result<CycleSides> {
    if !is_simple_cycle(m, cycle) {
        return Err(MapError::NotACycle);
    }
    let k = cycle.len();
    let mut right = Vec::new();
    let mut left = Vec::new();
    for i in 0..k {
        let arrive = m.alpha(cycle[i]);
        let depart = cycle[(i + 1) % k];
        let mut x = m.sigma(arrive);
        let mut on_right = true;
        while x != arrive {
            if x == depart {
                on_right = false;
            } else if on_right {
                right.push(x);
            } else {
                left.push(x);
            }
            x = m.sigma(x);
        }
    }
    Ok(CycleSides { right, left })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn theta_cycle_sides() {
        let m = fixtures::theta();
        // cycle through edges 0 and 1: darts 0 (down) then 4 (back up)
        let sides = cycle_sides(&m, &[Dart(0), Dart(4)]).unwrap();
        assert_eq!(sides.right.len() + sides.left.len(), 2);
        // reversing the direction swaps the sides
        let rev = cycle_sides(&m, &[Dart(1), Dart(3)]).unwrap();
        assert_eq!(rev.right.len(), sides.left.len());
        assert_eq!(rev.left.len(), sides.right.len());
    }

    #[test]
    fn non_cycles_rejected() {
        let m = fixtures::theta();
        assert!(cycle_sides(&m, &[Dart(0), Dart(1)]).is_err());
        // forth-and-back uses one edge twice: not a cycle
        assert!(cycle_sides(&m, &[Dart(0), Dart(3)]).is_err());
    }
}
