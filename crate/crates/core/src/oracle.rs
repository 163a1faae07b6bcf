//! Exhaustive ground truth.
//!
//! Every subset of `V(G)` is encoded as a `u64` mask (bit `k` is label
//! `k + 1`) and tested with a frontier search over precomputed adjacency
//! masks. Sweeps can be split into contiguous mask ranges keyed by the
//! high-order bits; summing the per-range tables reproduces the sequential
//! result exactly, which is what the parallel driver in the `wcds` crate
//! relies on.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::{Error, Graph, Result, VertexSet};

/// Upper bound on the order of graphs the oracle will sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCap(usize);

impl OracleCap {
    pub const DEFAULT: usize = 24;
    pub const MAX_OVERRIDE: usize = 30;

    /// A cap no larger than [`OracleCap::DEFAULT`].
    pub fn new(cap: usize) -> Result<OracleCap> {
        if cap > Self::DEFAULT {
            return Err(Error::InvalidCap {
                requested: cap,
                max: Self::DEFAULT,
            });
        }
        Ok(OracleCap(cap))
    }

    /// A cap up to [`OracleCap::MAX_OVERRIDE`], for explicitly forced runs.
    pub fn with_override(cap: usize) -> Result<OracleCap> {
        if cap > Self::MAX_OVERRIDE {
            return Err(Error::InvalidCap {
                requested: cap,
                max: Self::MAX_OVERRIDE,
            });
        }
        Ok(OracleCap(cap))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, g: &Graph) -> Result<()> {
        if g.order() > self.0 {
            return Err(Error::Capacity {
                order: g.order(),
                cap: self.0,
            });
        }
        Ok(())
    }
}

impl Default for OracleCap {
    fn default() -> Self {
        OracleCap(Self::DEFAULT)
    }
}

/// `d_w(G, i)` for `i = 1..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    order: usize,
    counts: Vec<u64>,
    disconnected: bool,
}

impl CountTable {
    /// Wraps `counts[i - 1] = d_w(G, i)`; missing trailing entries are zero.
    pub fn from_counts(order: usize, mut counts: Vec<u64>) -> CountTable {
        counts.resize(order, 0);
        CountTable {
            order,
            counts,
            disconnected: false,
        }
    }

    fn zeros_disconnected(order: usize) -> CountTable {
        CountTable {
            order,
            counts: vec![0; order],
            disconnected: true,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `d_w(G, i)`, zero outside `1..=order`.
    pub fn get(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.counts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Set when the table came from a disconnected graph (all zeros).
    pub fn disconnected(&self) -> bool {
        self.disconnected
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest cardinality with a non-zero count.
    pub fn min_cardinality(&self) -> Option<usize> {
        self.counts.iter().position(|&c| c > 0).map(|k| k + 1)
    }
}

/// Adjacency of a graph as bitmasks, for sweeping subsets.
#[derive(Debug, Clone)]
pub struct MaskGraph {
    order: usize,
    adj: Vec<u64>,
    full: u64,
}

impl MaskGraph {
    /// Graphs above 63 vertices cannot be encoded.
    pub fn new(g: &Graph) -> Result<MaskGraph> {
        let order = g.order();
        if order > 63 {
            return Err(Error::Capacity { order, cap: 63 });
        }
        let mut adj = vec![0u64; order];
        for &(u, v) in g.edges() {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        Ok(MaskGraph {
            order,
            adj,
            full: (1u64 << order) - 1,
        })
    }

    /// Builds from raw adjacency masks; `adj[k]` lists the neighbours of label `k + 1`.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<MaskGraph> {
        let order = adj.len();
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > 63 {
            return Err(Error::Capacity { order, cap: 63 });
        }
        Ok(MaskGraph {
            order,
            adj,
            full: (1u64 << order) - 1,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn full(&self) -> u64 {
        self.full
    }

    /// Connectivity of the weakly induced subgraph of `s`; `s = 0` is rejected.
    #[inline]
    pub fn is_wcds(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let mut reach = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let kept = if s >> v & 1 == 1 {
                self.adj[v]
            } else {
                self.adj[v] & s
            };
            let fresh = kept & !reach;
            reach |= fresh;
            frontier |= fresh;
        }
        reach == self.full
    }

    /// Smallest w.c.d.s. size, or `None` when the graph is disconnected.
    pub fn gamma_w(&self) -> Option<usize> {
        if !self.is_wcds(self.full) {
            return None;
        }
        (1..=self.order).find(|&i| Combinations::new(self.order, i).any(|s| self.is_wcds(s)))
    }

    #[inline]
    pub fn is_dominating(&self, s: u64) -> bool {
        let mut covered = s;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= self.adj[v];
        }
        covered == self.full
    }
}

/// A partitionable sweep over all non-empty subsets of a graph.
#[derive(Debug, Clone)]
pub struct Sweep {
    masks: MaskGraph,
    connected: bool,
}

impl Sweep {
    pub fn new(g: &Graph, cap: OracleCap) -> Result<Sweep> {
        cap.check(g)?;
        Ok(Sweep {
            masks: MaskGraph::new(g)?,
            connected: g.is_connected(),
        })
    }

    pub fn order(&self) -> usize {
        self.masks.order
    }

    pub fn connected(&self) -> bool {
        self.connected
    }

    /// Splits `0..2^order` into `2^bits` equal ranges by high-order bits.
    pub fn partitions(&self, bits: u32) -> Vec<Range<u64>> {
        let n = self.masks.order as u32;
        let bits = bits.min(n);
        let width = 1u64 << (n - bits);
        (0..1u64 << bits)
            .map(|p| p * width..(p + 1) * width)
            .collect()
    }

    /// Per-cardinality w.c.d.s. counts over masks in `range`.
    pub fn count_range(&self, range: Range<u64>) -> Vec<u64> {
        let mut counts = vec![0u64; self.masks.order];
        if !self.connected {
            return counts;
        }
        for s in range.start.max(1)..range.end.min(self.masks.full + 1) {
            if self.masks.is_wcds(s) {
                counts[s.count_ones() as usize - 1] += 1;
            }
        }
        counts
    }

    /// Per-cardinality dominating-set counts over masks in `range`.
    pub fn count_dominating_range(&self, range: Range<u64>) -> Vec<u64> {
        let mut counts = vec![0u64; self.masks.order];
        for s in range.start.max(1)..range.end.min(self.masks.full + 1) {
            if self.masks.is_dominating(s) {
                counts[s.count_ones() as usize - 1] += 1;
            }
        }
        counts
    }

    /// Sums partial tables, failing on overflow.
    pub fn merge<I>(&self, parts: I) -> Result<CountTable>
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        if !self.connected {
            return Ok(CountTable::zeros_disconnected(self.masks.order));
        }
        let mut total = vec![0u64; self.masks.order];
        for part in parts {
            for (t, p) in total.iter_mut().zip(part) {
                *t = t.checked_add(p).ok_or(Error::Overflow)?;
            }
        }
        Ok(CountTable::from_counts(self.masks.order, total))
    }

    pub fn table(&self) -> Result<CountTable> {
        self.merge([self.count_range(0..self.masks.full + 1)])
    }
}

/// Exact `d_w(G, i)` for every `i`. Disconnected graphs give an all-zero
/// table with [`CountTable::disconnected`] set.
pub fn count_table(g: &Graph, cap: OracleCap) -> Result<CountTable> {
    Sweep::new(g, cap)?.table()
}

/// Number of dominating sets of each cardinality `1..=order`.
pub fn dominating_counts(g: &Graph, cap: OracleCap) -> Result<CountTable> {
    let sweep = Sweep::new(g, cap)?;
    let counts = sweep.count_dominating_range(0..sweep.masks.full + 1);
    Ok(CountTable::from_counts(g.order(), counts))
}

/// All `k`-subsets of `0..n` as masks, in lexicographic order of their
/// sorted member lists.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &v| m | 1 << v);
        let k = self.idx.len();
        // advance the rightmost index that still has room
        let mut p = k;
        loop {
            if p == 0 {
                self.done = true;
                break;
            }
            p -= 1;
            if self.idx[p] < self.n - k + p {
                self.idx[p] += 1;
                for q in p + 1..k {
                    self.idx[q] = self.idx[q - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

/// `D_w(G, i)` in lexicographic order.
pub fn enumerate_wcds(g: &Graph, i: usize, cap: OracleCap) -> Result<Vec<VertexSet>> {
    if i == 0 || i > g.order() {
        return Err(Error::CardinalityOutOfRange {
            i,
            order: g.order(),
        });
    }
    let sweep = Sweep::new(g, cap)?;
    if !sweep.connected {
        return Ok(Vec::new());
    }
    Ok(Combinations::new(g.order(), i)
        .filter(|&s| sweep.masks.is_wcds(s))
        .map(VertexSet::from_mask)
        .collect())
}

fn first_size(g: &Graph, cap: OracleCap, test: impl Fn(&MaskGraph, u64) -> bool) -> Result<usize> {
    cap.check(g)?;
    let masks = MaskGraph::new(g)?;
    (1..=g.order())
        .find(|&i| Combinations::new(g.order(), i).any(|s| test(&masks, s)))
        .ok_or(Error::Disconnected)
}

/// `γ_w(G)`, the minimum w.c.d.s. cardinality.
pub fn gamma_w(g: &Graph, cap: OracleCap) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    first_size(g, cap, MaskGraph::is_wcds)
}

/// `γ(G)`, the ordinary domination number.
pub fn gamma(g: &Graph, cap: OracleCap) -> Result<usize> {
    first_size(g, cap, MaskGraph::is_dominating)
}

/// Every w.c.d.s. of size `γ_w(G)`.
pub fn minimum_wcds(g: &Graph, cap: OracleCap) -> Result<Vec<VertexSet>> {
    let k = gamma_w(g, cap)?;
    enumerate_wcds(g, k, cap)
}

/// Every dominating set of size `γ(G)`.
pub fn minimum_dominating(g: &Graph, cap: OracleCap) -> Result<Vec<VertexSet>> {
    let k = gamma(g, cap)?;
    let masks = MaskGraph::new(g)?;
    Ok(Combinations::new(g.order(), k)
        .filter(|&s| masks.is_dominating(s))
        .map(VertexSet::from_mask)
        .collect())
}
