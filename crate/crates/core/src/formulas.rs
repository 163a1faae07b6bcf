//! Closed forms and recurrences for `d_w` and `γ_w` on specific families.
//!
//! Nothing here runs the oracle; callers that need a count table (joins,
//! wheels) pass it in.

use alloc::vec;
use alloc::vec::Vec;

use crate::binomial::{binomial, choose};
use crate::oracle::{Combinations, CountTable};
use crate::{Error, Graph, Result};

/// Which rule produced a [`GammaWResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMethod {
    PathFloor,
    CycleFloor,
    Corona,
    Join,
    Extension,
}

/// A weakly connected domination number together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaWResult {
    pub value: usize,
    pub method: GammaMethod,
}

/// `d_w(K_n, i) = C(n, i)`.
pub fn count_complete(n: usize, i: usize) -> Result<u64> {
    if i == 0 || i > n {
        return Ok(0);
    }
    choose(n, i)
}

/// `d_w(K_{1,n}, i)`: `C(n, i-1)` below `n`, `n + 1` at `i = n`, `1` at `i = n + 1`.
pub fn count_star(n: usize, i: usize) -> Result<u64> {
    match i {
        0 => Ok(0),
        i if i < n => choose(n, i - 1),
        i if i == n => Ok(n as u64 + 1),
        i if i == n + 1 => Ok(1),
        _ => Ok(0),
    }
}

/// `d_w(P_n, j) = C(j + 1, n - j)`.
pub fn count_path_closed(n: usize, j: usize) -> Result<u64> {
    if j == 0 || j > n {
        return Ok(0);
    }
    binomial(j as i64 + 1, (n - j) as i64)
}

/// Path table from `d_w(P_n, i) = d_w(P_{n-1}, i-1) + d_w(P_{n-2}, i-1)`.
///
/// Rows carry an extra cardinality-0 column that is 1 only for `P_1`; it
/// stands for the lone middle vertex of `P_3` and is zero everywhere else,
/// so the recurrence needs no special case at `i = 1`.
pub fn count_path_recurrence(n: usize) -> Result<CountTable> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut prev2: Vec<u64> = vec![1, 1];
    if n == 1 {
        return Ok(CountTable::from_counts(1, prev2[1..].to_vec()));
    }
    let mut prev1: Vec<u64> = vec![0, 2, 1];
    for order in 3..=n {
        let mut row = vec![0u64; order + 1];
        for (i, cell) in row.iter_mut().enumerate().skip(1) {
            let a = prev1.get(i - 1).copied().unwrap_or(0);
            let b = prev2.get(i - 1).copied().unwrap_or(0);
            *cell = a.checked_add(b).ok_or(Error::Overflow)?;
        }
        prev2 = core::mem::replace(&mut prev1, row);
    }
    Ok(CountTable::from_counts(n, prev1[1..].to_vec()))
}

/// `d_w(C_n, i)` for the top of the table: `C(n, i)` when `n >= 4` and
/// `i >= n - 2`, and `(n+1)·n·(n-4)/6` at `i = n - 3` when `n >= 6`.
pub fn count_cycle_top(n: usize, i: usize) -> Result<u64> {
    if n >= 4 && i + 2 >= n && i <= n {
        return choose(n, i);
    }
    if n >= 6 && i + 3 == n {
        let n = n as u64;
        let num = (n + 1)
            .checked_mul(n)
            .and_then(|x| x.checked_mul(n - 4))
            .ok_or(Error::Overflow)?;
        return Ok(num / 6);
    }
    Err(Error::OutOfDomain { n, i })
}

/// `d_w(G_1 + G_2, i) = d_w(G_1, i) + d_w(G_2, i) + Σ_{i_1 + i_2 = i} C(n_1, i_1)·C(n_2, i_2)`
/// with `i_1, i_2 >= 1`.
pub fn count_join(table_g: &CountTable, table_h: &CountTable, i: usize) -> Result<u64> {
    let (n1, n2) = (table_g.order(), table_h.order());
    let mut total = table_g
        .get(i)
        .checked_add(table_h.get(i))
        .ok_or(Error::Overflow)?;
    for i1 in 1..i {
        let term = choose(n1, i1)?
            .checked_mul(choose(n2, i - i1)?)
            .ok_or(Error::Overflow)?;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// `d_w(W_n, i)`: 1 at `i = 1`, otherwise `d_w(C_{n-1}, i) + C(n-1, i-1)`.
pub fn count_wheel(n: usize, i: usize, cycle_table: &CountTable) -> Result<u64> {
    if n < 4 {
        return Err(Error::InvalidFamilySize {
            family: crate::Family::Wheel,
            n,
        });
    }
    if cycle_table.order() != n - 1 {
        return Err(Error::TableMismatch {
            expected: n - 1,
            found: cycle_table.order(),
        });
    }
    match i {
        0 => Ok(0),
        1 => Ok(1),
        _ => cycle_table
            .get(i)
            .checked_add(choose(n - 1, i - 1)?)
            .ok_or(Error::Overflow),
    }
}

/// `⌊n/2⌋`, raised to 1 for `n = 1` since a w.c.d.s. is non-empty.
pub fn gamma_w_path(n: usize) -> GammaWResult {
    GammaWResult {
        value: (n / 2).max(1),
        method: GammaMethod::PathFloor,
    }
}

/// Same value as [`gamma_w_path`], under `C_1 = K_1`, `C_2 = K_2`.
pub fn gamma_w_cycle(n: usize) -> GammaWResult {
    GammaWResult {
        value: (n / 2).max(1),
        method: GammaMethod::CycleFloor,
    }
}

/// `γ_w(G ∘ H) = |V(G)|` for connected `G` of order at least 2.
pub fn gamma_w_corona(g: &Graph) -> Result<GammaWResult> {
    if g.order() < 2 {
        return Err(Error::Hypothesis(
            "corona base must have at least 2 vertices",
        ));
    }
    if !g.is_connected() {
        return Err(Error::Hypothesis("corona base must be connected"));
    }
    Ok(GammaWResult {
        value: g.order(),
        method: GammaMethod::Corona,
    })
}

/// `γ_w(G + H)` from the domination numbers of the parts.
pub fn gamma_w_join(gamma_g: usize, gamma_h: usize) -> GammaWResult {
    GammaWResult {
        value: if gamma_g == 1 || gamma_h == 1 { 1 } else { 2 },
        method: GammaMethod::Join,
    }
}

/// `γ_w(G(m))` from `γ_w(G)`: adds `⌊(m-1)/2⌋` when some minimum w.c.d.s.
/// of `G` contains the root, `⌊m/2⌋` otherwise.
pub fn gamma_w_extension(gw_base: usize, root_in_some_gw_set: bool, m: usize) -> GammaWResult {
    let extra = match (m, root_in_some_gw_set) {
        (0, _) => 0,
        (m, true) => (m - 1) / 2,
        (m, false) => m / 2,
    };
    GammaWResult {
        value: gw_base + extra,
        method: GammaMethod::Extension,
    }
}

/// Ways to place `j` objects in `n` boxes in a row, at most one per box,
/// with no two adjacent boxes empty: `C(j + 1, n - j)`.
pub fn boxes_count(n: usize, j: usize) -> Result<u64> {
    binomial(j as i64 + 1, n as i64 - j as i64)
}

/// Brute-force companion of [`boxes_count`]: binary strings of length `n`
/// with `j` ones and no `00` factor. Needs `n <= 63`.
pub fn boxes_brute(n: usize, j: usize) -> u64 {
    assert!(n <= 63, "boxes_brute supports at most 63 boxes");
    let full = (1u64 << n) - 1;
    Combinations::new(n, j)
        .filter(|&ones| {
            let zeros = !ones & full;
            zeros & (zeros >> 1) == 0
        })
        .count() as u64
}
