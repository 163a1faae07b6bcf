//! Multi-threaded oracle sweeps.
//!
//! The subset space is cut into `2^bits` ranges by high-order mask bits and
//! counted on the rayon pool; per-range tables are merged in range order, so
//! the result is identical to the sequential sweep for any thread count.

use rayon::prelude::*;
use wcds_core::oracle::Sweep;
use wcds_core::{CountTable, Graph, OracleCap};

/// Below this order the sweep runs on the calling thread.
const PARALLEL_MIN_ORDER: usize = 16;

pub fn count_table(g: &Graph, cap: OracleCap) -> wcds_core::Result<CountTable> {
    let sweep = Sweep::new(g, cap)?;
    if g.order() < PARALLEL_MIN_ORDER {
        return sweep.table();
    }
    count_partitioned(&sweep, 8)
}

pub fn count_partitioned(sweep: &Sweep, bits: u32) -> wcds_core::Result<CountTable> {
    let parts: Vec<Vec<u64>> = sweep
        .partitions(bits)
        .into_par_iter()
        .map(|r| sweep.count_range(r))
        .collect();
    sweep.merge(parts)
}
