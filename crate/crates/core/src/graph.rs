//! Finite simple graphs on labels `1..=order`.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Named graph families with consecutive labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `P_n`, edges `{k, k+1}`.
    Path,
    /// `C_n`, the path plus `{n, 1}`; `C_1 = K_1` and `C_2 = K_2`.
    Cycle,
    /// `K_n`.
    Complete,
    /// `K_{1,n}`: centre `1`, leaves `2..=n+1`.
    Star,
    /// `W_n = C_{n-1} + K_1`, hub labelled `n`; needs `n >= 4`.
    Wheel,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Wheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Wheel => "wheel",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Short symbol used in table row labels, e.g. `P` for paths.
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Path => "P",
            Family::Cycle => "C",
            Family::Complete => "K",
            Family::Star => "K_{1,",
            Family::Wheel => "W",
        }
    }

    /// Order of the graph built for parameter `n`.
    pub fn order_for(self, n: usize) -> usize {
        match self {
            Family::Star => n + 1,
            _ => n,
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Family::Wheel => 4,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Construction provenance of a graph produced by [`Graph::family`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyTag {
    pub family: Family,
    pub n: usize,
}

/// A finite simple graph.
///
/// Edges are stored as sorted, deduplicated `(u, v)` pairs with `u < v`.
/// Equality compares order and edges only; the family tag is provenance.
#[derive(Debug, Clone)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    tag: Option<FamilyTag>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, collapsing duplicate edges.
    pub fn new<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut out = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            out.push(if u < v { (u, v) } else { (v, u) });
        }
        out.sort_unstable();
        out.dedup();
        Ok(Graph {
            order,
            edges: out,
            tag: None,
        })
    }

    // Callers guarantee normalized, in-range edges.
    fn from_raw(order: usize, mut edges: Vec<(usize, usize)>, tag: Option<FamilyTag>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        Graph { order, edges, tag }
    }

    /// The edgeless graph on one vertex.
    pub fn k1() -> Graph {
        Graph::from_raw(1, Vec::new(), None)
    }

    /// Builds a member of a named family.
    pub fn family(family: Family, n: usize) -> Result<Graph> {
        if n < family.min_n() {
            return Err(Error::InvalidFamilySize { family, n });
        }
        let tag = Some(FamilyTag { family, n });
        let mut edges = Vec::new();
        let order = family.order_for(n);
        match family {
            Family::Path => edges.extend((1..n).map(|k| (k, k + 1))),
            Family::Cycle => {
                edges.extend((1..n).map(|k| (k, k + 1)));
                if n >= 3 {
                    edges.push((1, n));
                }
            }
            Family::Complete => {
                for u in 1..=n {
                    edges.extend((u + 1..=n).map(|v| (u, v)));
                }
            }
            Family::Star => edges.extend((2..=n + 1).map(|leaf| (1, leaf))),
            Family::Wheel => {
                let rim = Graph::family(Family::Cycle, n - 1)?;
                let mut wheel = rim.join(&Graph::k1());
                wheel.tag = tag;
                return Ok(wheel);
            }
        }
        Ok(Graph::from_raw(order, edges, tag))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn family_tag(&self) -> Option<FamilyTag> {
        self.tag
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Adjacency lists indexed by label; index 0 is unused.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = alloc::vec![Vec::new(); self.order + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg.sort_unstable();
        deg
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = crate::unionfind::UnionFind::new(self.order);
        for &(u, v) in &self.edges {
            uf.union(u - 1, v - 1);
        }
        uf.components() == 1
    }

    /// `G + H`: `h` is relabelled to `order(g)+1..` and every cross pair is joined.
    pub fn join(&self, h: &Graph) -> Graph {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(h.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        for u in 1..=shift {
            edges.extend((1..=h.order).map(|w| (u, w + shift)));
        }
        Graph::from_raw(self.order + h.order, edges, None)
    }

    /// `G ∘ H`: copy `i` of `h` occupies labels
    /// `order(g) + (i-1)·order(h) + 1 ..= order(g) + i·order(h)` and is joined to vertex `i`.
    pub fn corona(&self, h: &Graph) -> Graph {
        let (n, k) = (self.order, h.order);
        let mut edges = self.edges.clone();
        for i in 1..=n {
            let base = n + (i - 1) * k;
            edges.extend(h.edges.iter().map(|&(u, v)| (u + base, v + base)));
            edges.extend((1..=k).map(|w| (i, w + base)));
        }
        Graph::from_raw(n * (1 + k), edges, None)
    }

    /// Disjoint union with `h` relabelled after `self`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(h.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_raw(self.order + h.order, edges, None)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let key = if u < v { (u, v) } else { (v, u) };
        let pos = self
            .edges
            .binary_search(&key)
            .map_err(|_| Error::MissingEdge { u, v })?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Graph::from_raw(self.order, edges, None))
    }

    /// Applies a relabelling `perm[old - 1] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Graph::new(
            self.order,
            self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }
}

/// A graph with a marked root and the length of the pendant path attached there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    base: Graph,
    root: usize,
    extension_length: usize,
}

impl RootedGraph {
    pub fn new(base: Graph, root: usize, extension_length: usize) -> Result<RootedGraph> {
        if root == 0 || root > base.order() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                order: base.order(),
            });
        }
        Ok(RootedGraph {
            base,
            root,
            extension_length,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn extension_length(&self) -> usize {
        self.extension_length
    }

    /// Same base and root with a different path length.
    pub fn with_length(&self, m: usize) -> RootedGraph {
        RootedGraph {
            base: self.base.clone(),
            root: self.root,
            extension_length: m,
        }
    }

    /// Label of path vertex `y_k`; `y_0` is the root.
    pub fn path_vertex(&self, k: usize) -> usize {
        if k == 0 {
            self.root
        } else {
            self.base.order() + k
        }
    }

    pub fn realized_order(&self) -> usize {
        self.base.order() + self.extension_length
    }

    /// `G(m)`: the base plus the path `y_0 y_1 … y_m`.
    pub fn realize(&self) -> Graph {
        if self.extension_length == 0 {
            return self.base.clone();
        }
        let mut edges = self.base.edges.clone();
        edges.extend(
            (1..=self.extension_length).map(|k| (self.path_vertex(k - 1), self.path_vertex(k))),
        );
        let edges = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        Graph::from_raw(self.realized_order(), edges, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn make_graph_examples() {
        let p3 = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3, Graph::family(Family::Path, 3).unwrap());
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        let dup = Graph::new(3, [(1, 2), (2, 1), (2, 3)]).unwrap();
        assert_eq!(dup, p3);
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
        assert_eq!(
            Graph::new(3, [(1, 4)]),
            Err(Error::VertexOutOfRange {
                vertex: 4,
                order: 3
            })
        );
        assert_eq!(
            Graph::new(3, [(0, 1)]),
            Err(Error::VertexOutOfRange {
                vertex: 0,
                order: 3
            })
        );
        assert_eq!(Graph::new(3, [(2, 2)]), Err(Error::SelfLoop { vertex: 2 }));
    }

    #[test]
    fn family_examples() {
        let p4 = Graph::family(Family::Path, 4).unwrap();
        assert_eq!(p4.edges(), &[(1, 2), (2, 3), (3, 4)]);
        let w4 = Graph::family(Family::Wheel, 4).unwrap();
        assert_eq!(w4, Graph::family(Family::Complete, 4).unwrap());
        assert_eq!(w4.edge_count(), 6);
        let c2 = Graph::family(Family::Cycle, 2).unwrap();
        assert_eq!(c2, Graph::family(Family::Complete, 2).unwrap());
        assert_eq!(Graph::family(Family::Cycle, 1).unwrap(), Graph::k1());
        let star = Graph::family(Family::Star, 3).unwrap();
        assert_eq!(star.order(), 4);
        assert_eq!(star.degree(1), 3);
    }

    #[test]
    fn family_domain_errors() {
        assert!(matches!(
            Graph::family(Family::Wheel, 3),
            Err(Error::InvalidFamilySize { .. })
        ));
        for f in Family::ALL {
            assert!(Graph::family(f, 0).is_err());
        }
    }

    #[test]
    fn join_examples() {
        let p2 = Graph::family(Family::Path, 2).unwrap();
        assert_eq!(
            p2.join(&Graph::k1()),
            Graph::family(Family::Complete, 3).unwrap()
        );
        let w5 = Graph::family(Family::Cycle, 4).unwrap().join(&Graph::k1());
        assert_eq!((w5.order(), w5.edge_count()), (5, 8));
        assert_eq!(Graph::k1().join(&Graph::k1()), p2);
    }

    #[test]
    fn corona_examples() {
        let p2 = Graph::family(Family::Path, 2).unwrap();
        assert_eq!(Graph::k1().corona(&Graph::k1()), p2);
        let c3 = Graph::family(Family::Cycle, 3).unwrap();
        let c = c3.corona(&Graph::k1());
        assert_eq!((c.order(), c.edge_count()), (6, 6));
        let c = p2.corona(&p2);
        assert_eq!((c.order(), c.edge_count()), (6, 7));
        assert!(c.has_edge(1, 3) && c.has_edge(1, 4) && c.has_edge(3, 4));
        assert!(c.has_edge(2, 5) && c.has_edge(2, 6) && c.has_edge(5, 6));
    }

    #[test]
    fn extension_examples() {
        for n in 1..8 {
            let rg = RootedGraph::new(Graph::k1(), 1, n - 1).unwrap();
            assert_eq!(rg.realize(), Graph::family(Family::Path, n).unwrap());
        }
        let c3 = Graph::family(Family::Cycle, 3).unwrap();
        let rg = RootedGraph::new(c3.clone(), 1, 0).unwrap();
        assert_eq!(rg.realize(), c3);
        let g = rg.with_length(2).realize();
        assert_eq!((g.order(), g.edge_count()), (5, 5));
        assert!(g.has_edge(1, 4) && g.has_edge(4, 5));
        assert!(RootedGraph::new(c3, 4, 1).is_err());
    }

    #[test]
    fn delete_edge_examples() {
        let c4 = Graph::family(Family::Cycle, 4).unwrap();
        assert_eq!(
            c4.delete_edge(4, 1).unwrap(),
            Graph::family(Family::Path, 4).unwrap()
        );
        let k3 = Graph::family(Family::Complete, 3).unwrap();
        let g = k3.delete_edge(1, 2).unwrap();
        assert_eq!(g.edges(), &[(1, 3), (2, 3)]);
        let p3 = Graph::family(Family::Path, 3).unwrap();
        let g = p3.delete_edge(1, 2).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.degree(1), 0);
        assert_eq!(p3.delete_edge(1, 3), Err(Error::MissingEdge { u: 1, v: 3 }));
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::k1().is_connected());
        assert!(Graph::family(Family::Path, 5).unwrap().is_connected());
        assert!(!Graph::new(4, [(1, 2), (3, 4)]).unwrap().is_connected());
    }

    #[test]
    fn family_invariants() {
        for n in 3..20 {
            let c = Graph::family(Family::Cycle, n).unwrap();
            assert_eq!(c.edge_count(), n);
            assert_eq!(c.degree_sequence(), vec![2; n]);
        }
        for n in 1..20 {
            assert_eq!(Graph::family(Family::Path, n).unwrap().edge_count(), n - 1);
        }
        for n in 4..20 {
            let w = Graph::family(Family::Wheel, n).unwrap();
            let j = Graph::family(Family::Cycle, n - 1)
                .unwrap()
                .join(&Graph::k1());
            assert_eq!(w.edges(), j.edges());
            assert_eq!(w.order(), j.order());
        }
    }
}
