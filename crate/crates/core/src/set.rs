use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A set of 1-based vertex labels, kept sorted and deduplicated.
///
/// Ordering is lexicographic on the sorted label lists.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(labels: I) -> VertexSet {
        let mut members: Vec<usize> = labels.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> VertexSet {
        VertexSet::default()
    }

    /// Bit `k` of `mask` stands for label `k + 1`.
    pub fn from_mask(mask: u64) -> VertexSet {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            members.push(rest.trailing_zeros() as usize + 1);
            rest &= rest - 1;
        }
        VertexSet { members }
    }

    /// Inverse of [`VertexSet::from_mask`]; `None` if a label exceeds 64.
    pub fn to_mask(&self) -> Option<u64> {
        self.members.iter().try_fold(0u64, |acc, &v| {
            (1..=64).contains(&v).then(|| acc | 1 << (v - 1))
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut out = self.clone();
        if let Err(pos) = out.members.binary_search(&v) {
            out.members.insert(pos, v);
        }
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Rejects labels outside `1..=order`.
    pub fn check_within(&self, order: usize) -> Result<()> {
        match self.members.iter().find(|&&v| v == 0 || v > order) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, order }),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Space-separated labels, as printed by the enumerator.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
