//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 5
//! 1 2
//! 2 3
//! ```
//!
//! The `n <order>` header is optional and, when present, must be the first
//! non-comment line; without it the order is the largest label seen. Labels
//! that do not fit `1..=order` (a `0`, or a label above the header order) are
//! renumbered: the distinct labels are sorted and mapped to `1..=k`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use wcds_core::Graph;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// `(original, assigned)` pairs when labels were renumbered.
    pub mapping: Option<Vec<(u64, usize)>>,
}

pub fn parse(text: &str) -> Result<ParsedGraph> {
    let mut header: Option<usize> = None;
    let mut raw: Vec<(u64, u64)> = Vec::new();
    let mut seen_data = false;
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse {
            line: lineno,
            message,
        };
        if fields[0] == "n" {
            if seen_data || header.is_some() {
                return Err(err("the `n <order>` header must come first".into()));
            }
            let [_, order] = fields[..] else {
                return Err(err("expected `n <order>`".into()));
            };
            let order: usize = order
                .parse()
                .map_err(|_| err(format!("invalid order `{order}`")))?;
            if order == 0 {
                return Err(err("order must be at least 1".into()));
            }
            header = Some(order);
            seen_data = true;
            continue;
        }
        seen_data = true;
        let [u, v] = fields[..] else {
            return Err(err(format!("expected two labels, found `{line}`")));
        };
        let label = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| err(format!("invalid label `{s}`")))
        };
        let (u, v) = (label(u)?, label(v)?);
        if u == v {
            return Err(err(format!("self-loop at {u}")));
        }
        raw.push((u, v));
    }

    let labels: BTreeSet<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    let max = labels.last().copied().unwrap_or(0);
    let order = header.unwrap_or(max as usize);
    let direct = !labels.contains(&0) && max as usize <= order;
    if direct {
        if order == 0 {
            return Err(Error::Parse {
                line: 0,
                message: "empty edge list needs an `n <order>` header".into(),
            });
        }
        let edges = raw.iter().map(|&(u, v)| (u as usize, v as usize));
        return Ok(ParsedGraph {
            graph: Graph::new(order, edges)?,
            mapping: None,
        });
    }
    let mapping: Vec<(u64, usize)> = labels
        .iter()
        .enumerate()
        .map(|(k, &l)| (l, k + 1))
        .collect();
    let order = match header {
        Some(n) if n < mapping.len() => {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "{} distinct labels exceed the declared order {n}",
                    mapping.len()
                ),
            })
        }
        Some(n) => n,
        None => mapping.len(),
    };
    let index = |l: u64| mapping[mapping.binary_search_by_key(&l, |&(o, _)| o).unwrap()].1;
    let edges = raw.iter().map(|&(u, v)| (index(u), index(v)));
    Ok(ParsedGraph {
        graph: Graph::new(order, edges)?,
        mapping: Some(mapping),
    })
}

pub fn read(path: &Path) -> Result<ParsedGraph> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

/// Header line followed by one edge per line.
pub fn emit(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
