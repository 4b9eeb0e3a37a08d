//! Integer partitions and the dominance order.
//!
//! A [`Partition`] is stored canonically: weakly decreasing, no zero parts.
//! The empty partition is the unique partition of 0.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Unsorted input is rejected rather than sorted.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition { parts, reason: "parts must be positive" });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts, reason: "parts must be weakly decreasing" });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn single_column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The total `n` being partitioned.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn has_odd_part(&self) -> bool {
        self.parts.iter().any(|p| p % 2 == 1)
    }

    /// True when every even part occurs an even number of times.
    pub fn even_parts_have_even_multiplicity(&self) -> bool {
        multiplicities(self)
            .iter()
            .all(|(&value, &count)| value % 2 == 1 || count % 2 == 0)
    }

    /// Prefix sums `λ₁, λ₁+λ₂, …`.
    fn prefix_sums(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, largest first in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn extend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            extend(remaining - part, part, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// The conjugate partition: column lengths of the Young diagram.
pub fn transpose(lambda: &Partition) -> Partition {
    let width = lambda.parts.first().copied().unwrap_or(0);
    let parts = (1..=width)
        .map(|col| lambda.parts.iter().take_while(|&&p| p >= col).count())
        .collect();
    Partition { parts }
}

/// `λ ⊵ μ`: every prefix sum of `λ` is at least the matching prefix sum of `μ`.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let (left, right) = (lambda.total(), mu.total());
    if left != right {
        return Err(Error::UnequalTotals { left, right });
    }
    // Past the end of λ its prefix sum is already n, which bounds μ's.
    Ok(lambda.prefix_sums().zip(mu.prefix_sums()).all(|(a, b)| a >= b))
}

/// Count of each part value.
pub fn multiplicities(lambda: &Partition) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for &p in &lambda.parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts
}
