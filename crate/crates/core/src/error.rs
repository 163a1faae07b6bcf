use core::fmt;

use crate::graph::Family;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Graph order was zero.
    EmptyGraph,
    /// An edge or set member referenced a label outside `1..=order`.
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    MissingEdge {
        u: usize,
        v: usize,
    },
    /// A family parameter outside the family's domain.
    InvalidFamilySize {
        family: Family,
        n: usize,
    },
    /// The empty set is never a w.c.d.s.
    EmptySet,
    /// Graph order exceeds the configured brute-force cap.
    Capacity {
        order: usize,
        cap: usize,
    },
    /// Requested cap above the hard limit or above the default without override.
    InvalidCap {
        requested: usize,
        max: usize,
    },
    /// `γ_w` has no value on a disconnected graph.
    Disconnected,
    CardinalityOutOfRange {
        i: usize,
        order: usize,
    },
    /// A closed form was asked for a parameter pair outside its proved range.
    OutOfDomain {
        n: usize,
        i: usize,
    },
    /// A count table describes a graph of the wrong order.
    TableMismatch {
        expected: usize,
        found: usize,
    },
    /// Input outside the hypothesis of a closed form.
    Hypothesis(&'static str),
    /// Exact integer arithmetic overflowed `u64`.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGraph => write!(f, "graph order must be at least 1"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} is outside 1..={order}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::MissingEdge { u, v } => write!(f, "edge {{{u},{v}}} is not in the graph"),
            Error::InvalidFamilySize { family, n } => {
                write!(f, "{} is not defined for n = {n}", family.name())
            }
            Error::EmptySet => write!(
                f,
                "the empty set is never a weakly connected dominating set"
            ),
            Error::Capacity { order, cap } => {
                write!(f, "graph order {order} exceeds the brute-force cap {cap}")
            }
            Error::InvalidCap { requested, max } => {
                write!(
                    f,
                    "oracle cap {requested} exceeds the allowed maximum {max}"
                )
            }
            Error::Disconnected => write!(f, "γ_w undefined: graph is disconnected"),
            Error::CardinalityOutOfRange { i, order } => {
                write!(f, "cardinality {i} is outside 1..={order}")
            }
            Error::OutOfDomain { n, i } => {
                write!(f, "closed form not established for (n, i) = ({n}, {i})")
            }
            Error::TableMismatch { expected, found } => {
                write!(f, "count table has order {found}, expected {expected}")
            }
            Error::Hypothesis(what) => write!(f, "formula hypothesis not met: {what}"),
            Error::Overflow => write!(f, "exact count overflowed 64-bit arithmetic"),
        }
    }
}

impl core::error::Error for Error {}
