//! Graphs `G(m)` that carry a pendant path `y_0 y_1 … y_m` at a root `y_0`.
//!
//! Every path edge is a bridge, so a w.c.d.s. of `G(m)` has to cover each of
//! them; stripping `y_m` (when present) or `y_{m-1}` (when `y_m` is absent)
//! maps `D_w(G(m), i)` onto `D_w(G(m-1), i-1)` and `D_w(G(m-2), i-1)`.
//! Both the counting recurrence and the constructive families below follow
//! that split, with the first two levels taken from the oracle.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::oracle::{self, CountTable, OracleCap};
use crate::{Error, Result, RootedGraph, VertexSet};

/// Count tables of `G(0)`, `G(1)` from the oracle, and `G(2)..=G(m)` from the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTables {
    pub base0: CountTable,
    pub base1: CountTable,
    pub rows: Vec<CountTable>,
}

impl ExtensionTables {
    /// Table of `G(level)`.
    pub fn row(&self, level: usize) -> Option<&CountTable> {
        match level {
            0 => Some(&self.base0),
            1 => Some(&self.base1),
            k => self.rows.get(k - 2),
        }
    }

    pub fn levels(&self) -> usize {
        self.rows.len() + 2
    }
}

/// Recurrence `d_w(G(m), i) = d_w(G(m-1), i-1) + d_w(G(m-2), i-1)`.
///
/// The `i = 1` column is zero from level 2 on when the base has at least two
/// vertices. A single-vertex base makes `G(m)` the path `P_{m+1}`, whose only
/// singleton w.c.d.s. beyond level 1 is the middle of `P_3`.
pub fn count_extension_table(rg: &RootedGraph, cap: OracleCap) -> Result<ExtensionTables> {
    let base0 = oracle::count_table(&rg.with_length(0).realize(), cap)?;
    let base1 = oracle::count_table(&rg.with_length(1).realize(), cap)?;
    let n0 = rg.base().order();
    let mut rows: Vec<CountTable> = Vec::new();
    for level in 2..=rg.extension_length() {
        let order = n0 + level;
        let (prev1, prev2) = match level {
            2 => (&base1, &base0),
            3 => (&rows[0], &base1),
            _ => (&rows[level - 3], &rows[level - 4]),
        };
        let mut counts = alloc::vec![0u64; order];
        counts[0] = u64::from(n0 == 1 && level == 2);
        for i in 2..=order {
            counts[i - 1] = prev1
                .get(i - 1)
                .checked_add(prev2.get(i - 1))
                .ok_or(Error::Overflow)?;
        }
        let row = CountTable::from_counts(order, counts);
        rows.push(row);
    }
    Ok(ExtensionTables { base0, base1, rows })
}

/// Which combination of sub-families fed a constructed family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionCase {
    /// Both sub-families empty.
    Empty,
    /// Only `D_w(G(m-2), i-1)` non-empty: `{X ∪ {y_{m-1}}}`.
    SecondOnly,
    /// Both non-empty: `{X_1 ∪ {y_m}} ∪ {X_2 ∪ {y_{m-1}}}`.
    Both,
    /// Only `D_w(G(m-1), i-1)` non-empty: `{X_1 ∪ {y_m}}`. Happens exactly at
    /// `i = |V(G(m))|`, where `G(m-2)` is too small to hold `i - 1` vertices.
    FirstOnly,
}

/// A constructed `D_w(G(m), i)` plus the levels where [`ConstructionCase::FirstOnly`] was used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionFamily {
    pub sets: Vec<VertexSet>,
    pub case: ConstructionCase,
    pub first_only_levels: Vec<usize>,
}

struct Builder<'a> {
    rg: &'a RootedGraph,
    cap: OracleCap,
    memo: BTreeMap<(usize, usize), (Vec<VertexSet>, ConstructionCase)>,
    first_only: Vec<usize>,
}

impl Builder<'_> {
    fn family(&mut self, level: usize, card: usize) -> Result<(Vec<VertexSet>, ConstructionCase)> {
        if let Some(hit) = self.memo.get(&(level, card)) {
            return Ok(hit.clone());
        }
        let order = self.rg.base().order() + level;
        let out = if card == 0 {
            // The empty set seeds the lone-vertex base, mirroring the path recurrence.
            let seed = level == 0 && self.rg.base().order() == 1;
            let sets = if seed {
                alloc::vec![VertexSet::empty()]
            } else {
                Vec::new()
            };
            (sets, ConstructionCase::Empty)
        } else if card > order {
            (Vec::new(), ConstructionCase::Empty)
        } else if level <= 1 {
            let g = self.rg.with_length(level).realize();
            (
                oracle::enumerate_wcds(&g, card, self.cap)?,
                ConstructionCase::Empty,
            )
        } else {
            let (first, _) = self.family(level - 1, card - 1)?;
            let (second, _) = self.family(level - 2, card - 1)?;
            let y_m = self.rg.path_vertex(level);
            let y_prev = self.rg.path_vertex(level - 1);
            let case = match (first.is_empty(), second.is_empty()) {
                (true, true) => ConstructionCase::Empty,
                (true, false) => ConstructionCase::SecondOnly,
                (false, false) => ConstructionCase::Both,
                (false, true) => {
                    self.first_only.push(level);
                    ConstructionCase::FirstOnly
                }
            };
            let mut sets: Vec<VertexSet> = first
                .iter()
                .map(|x| x.with(y_m))
                .chain(second.iter().map(|x| x.with(y_prev)))
                .collect();
            sets.sort_unstable();
            (sets, case)
        };
        self.memo.insert((level, card), out.clone());
        Ok(out)
    }
}

/// Builds `D_w(G(m), i)` from the families of `G(m-1)` and `G(m-2)` at `i - 1`,
/// bottoming out at oracle enumeration of `G(0)` and `G(1)`. Sets come back
/// in lexicographic order.
pub fn build_extension_wcds(rg: &RootedGraph, i: usize, cap: OracleCap) -> Result<ExtensionFamily> {
    let order = rg.realized_order();
    if i == 0 || i > order {
        return Err(Error::CardinalityOutOfRange { i, order });
    }
    let mut b = Builder {
        rg,
        cap,
        memo: BTreeMap::new(),
        first_only: Vec::new(),
    };
    let (sets, case) = b.family(rg.extension_length(), i)?;
    let mut first_only_levels = b.first_only;
    first_only_levels.sort_unstable();
    first_only_levels.dedup();
    Ok(ExtensionFamily {
        sets,
        case,
        first_only_levels,
    })
}

/// Whether some minimum w.c.d.s. of the base contains the root.
pub fn root_in_minimum_wcds(rg: &RootedGraph, cap: OracleCap) -> Result<bool> {
    let sets = oracle::minimum_wcds(rg.base(), cap)?;
    Ok(sets.iter().any(|s| s.contains(rg.root())))
}

/// Whether some minimum dominating set of the base contains the root.
pub fn root_in_minimum_dominating(rg: &RootedGraph, cap: OracleCap) -> Result<bool> {
    let sets = oracle::minimum_dominating(rg.base(), cap)?;
    Ok(sets.iter().any(|s| s.contains(rg.root())))
}
