//! Exact counting, enumeration and verification primitives for weakly
//! connected dominating sets (w.c.d.s.).
//!
//! A non-empty vertex set `S` of a graph `G` is weakly connected dominating
//! when the spanning subgraph that keeps only the edges with at least one
//! endpoint in `S` is connected. This crate holds the allocation-only core:
//!
//! * [`graph`]: simple graphs, named families and the join / corona /
//!   pendant-path operations,
//! * [`wcds`]: the definitional membership and domination tests,
//! * [`oracle`]: exhaustive bitmask sweeps giving exact count tables,
//!   enumerations and the `γ_w` / `γ` minima,
//! * [`formulas`]: closed forms and recurrences for specific families,
//! * [`extension`]: counting and constructing w.c.d.s. of graphs with a
//!   pendant path attached to a root vertex.
//!
//! Vertex labels are 1-based throughout the public API.
#![no_std]

extern crate alloc;

pub mod binomial;
pub mod error;
pub mod extension;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod set;
pub mod unionfind;
pub mod wcds;

pub use error::Error;
pub use graph::{Family, Graph, RootedGraph};
pub use oracle::{CountTable, OracleCap};
pub use set::VertexSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;
