//! Definitional tests: the weakly induced subgraph, w.c.d.s. membership and
//! ordinary domination.
//!
//! These work on any [`Graph`] through its edge list and are the reference
//! the bitmask engine in [`crate::oracle`] is checked against.

use alloc::vec;

use crate::unionfind::UnionFind;
use crate::{Error, Graph, Result, VertexSet};

/// Spanning subgraph keeping exactly the edges with an endpoint in `s`.
pub fn weakly_induced(g: &Graph, s: &VertexSet) -> Result<Graph> {
    s.check_within(g.order())?;
    Graph::new(
        g.order(),
        g.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| s.contains(u) || s.contains(v)),
    )
}

/// `true` iff `s` is non-empty and its weakly induced subgraph is connected
/// on all of `V(g)`.
pub fn is_wcds(g: &Graph, s: &VertexSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    s.check_within(g.order())?;
    let mut uf = UnionFind::new(g.order());
    for &(u, v) in g.edges() {
        if s.contains(u) || s.contains(v) {
            uf.union(u - 1, v - 1);
        }
    }
    Ok(uf.components() == 1)
}

/// `true` iff every vertex outside `s` has a neighbour in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.check_within(g.order())?;
    let mut covered = vec![false; g.order() + 1];
    for &v in s.members() {
        covered[v] = true;
    }
    for &(u, v) in g.edges() {
        if s.contains(u) {
            covered[v] = true;
        }
        if s.contains(v) {
            covered[u] = true;
        }
    }
    Ok(covered[1..].iter().all(|&c| c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Family;

    fn fam(f: Family, n: usize) -> Graph {
        Graph::family(f, n).unwrap()
    }

    #[test]
    fn weakly_induced_examples() {
        let c4 = fam(Family::Cycle, 4);
        let w = weakly_induced(&c4, &VertexSet::new([1])).unwrap();
        assert_eq!(w.order(), 4);
        assert_eq!(w.edges(), &[(1, 2), (1, 4)]);
        let k4 = fam(Family::Complete, 4);
        assert_eq!(weakly_induced(&k4, &VertexSet::new(1..=4)).unwrap(), k4);
        let p3 = fam(Family::Path, 3);
        assert_eq!(weakly_induced(&p3, &VertexSet::new([2])).unwrap(), p3);
        assert!(weakly_induced(&p3, &VertexSet::new([4])).is_err());
    }

    #[test]
    fn is_wcds_examples() {
        let p3 = fam(Family::Path, 3);
        assert!(is_wcds(&p3, &VertexSet::new([2])).unwrap());
        assert!(!is_wcds(&p3, &VertexSet::new([1])).unwrap());
        let c4 = fam(Family::Cycle, 4);
        assert!(!is_wcds(&c4, &VertexSet::new([1])).unwrap());
        let c5 = fam(Family::Cycle, 5);
        assert!(is_wcds(&c5, &VertexSet::new([1, 3])).unwrap());
        assert!(!is_wcds(&c5, &VertexSet::new([1, 2])).unwrap());
        assert_eq!(is_wcds(&c5, &VertexSet::empty()), Err(Error::EmptySet));
        assert!(is_wcds(&Graph::k1(), &VertexSet::new([1])).unwrap());
    }

    #[test]
    fn c5_pairs_are_exactly_distance_two() {
        let c5 = fam(Family::Cycle, 5);
        let mut hits = alloc::vec::Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                if is_wcds(&c5, &VertexSet::new([a, b])).unwrap() {
                    hits.push((a, b));
                }
            }
        }
        assert_eq!(hits, [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]);
    }

    #[test]
    fn is_dominating_examples() {
        let star = fam(Family::Star, 3);
        assert!(is_dominating(&star, &VertexSet::new([1])).unwrap());
        let c4 = fam(Family::Cycle, 4);
        assert!(!is_dominating(&c4, &VertexSet::new([1])).unwrap());
        assert!(is_dominating(&c4, &VertexSet::new([1, 3])).unwrap());
    }

    #[test]
    fn disconnected_graph_has_no_wcds() {
        let g = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        for mask in 1u64..16 {
            assert!(!is_wcds(&g, &VertexSet::from_mask(mask)).unwrap());
        }
    }
}
