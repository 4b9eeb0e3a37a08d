//! Signed Young diagrams.
//!
//! Signs alternate along each row, so a row is determined by its length and
//! the sign of its leftmost box. Only those start signs are stored. Rows are
//! kept in canonical order (length descending, `+` before `-` among rows of
//! equal length), which makes derived equality and hashing agree with
//! multiset equality of rows.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '\u{2212}' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Counts of `+` and `-` boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
}

impl Signature {
    pub fn new(plus: usize, minus: usize) -> Self {
        Signature { plus, minus }
    }

    pub fn total(&self) -> usize {
        self.plus + self.minus
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.plus, self.minus)
    }
}

/// `(+ count, - count)` of a single row.
pub fn row_counts(length: usize, start: Sign) -> (usize, usize) {
    let first = length.div_ceil(2);
    let second = length / 2;
    match start {
        Sign::Plus => (first, second),
        Sign::Minus => (second, first),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedYoungDiagram {
    shape: Partition,
    starts: Vec<Sign>,
}

impl SignedYoungDiagram {
    /// One start sign per row of `shape`; rows of equal length may be given in
    /// any order.
    pub fn new(shape: Partition, mut starts: Vec<Sign>) -> Result<Self> {
        if starts.len() != shape.len() {
            return Err(Error::InvalidDiagram(format!(
                "{} start signs for {} rows",
                starts.len(),
                shape.len()
            )));
        }
        let parts = shape.parts();
        let mut i = 0;
        while i < parts.len() {
            let j = i + parts[i..].iter().take_while(|&&l| l == parts[i]).count();
            starts[i..j].sort();
            i = j;
        }
        Ok(SignedYoungDiagram { shape, starts })
    }

    /// Builds a diagram from `(row length, start sign)` pairs in any order.
    pub fn from_rows(mut rows: Vec<(usize, Sign)>) -> Result<Self> {
        rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let shape = Partition::new(rows.iter().map(|r| r.0).collect())?;
        let starts = rows.into_iter().map(|r| r.1).collect();
        Ok(SignedYoungDiagram { shape, starts })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn start_signs(&self) -> &[Sign] {
        &self.starts
    }

    /// `(length, start sign)` per row, canonical order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.shape.parts().iter().copied().zip(self.starts.iter().copied())
    }

    /// Fully expanded rows, e.g. `"+-+"`.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows()
            .map(|(len, start)| {
                let mut sign = start;
                (0..len)
                    .map(|_| {
                        let c = sign.as_char();
                        sign = sign.flip();
                        c
                    })
                    .collect()
            })
            .collect()
    }

    /// Parses expanded rows; each row must alternate and match the shape.
    pub fn from_row_strings(shape: Partition, rows: &[String]) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::InvalidDiagram(format!(
                "{} rows given for shape {shape}",
                rows.len()
            )));
        }
        let mut starts = Vec::with_capacity(rows.len());
        for (row, &len) in rows.iter().zip(shape.parts()) {
            let signs = row
                .chars()
                .map(|c| Sign::from_char(c).ok_or_else(|| Error::InvalidDiagram(format!("bad box `{c}` in row `{row}`"))))
                .collect::<Result<Vec<_>>>()?;
            if signs.len() != len {
                return Err(Error::InvalidDiagram(format!("row `{row}` should have length {len}")));
            }
            if signs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDiagram(format!("row `{row}` does not alternate")));
            }
            starts.push(signs[0]);
        }
        SignedYoungDiagram::new(shape, starts)
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.row_strings().join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    shape: Partition,
    rows: Vec<String>,
}

impl Serialize for SignedYoungDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { shape: self.shape.clone(), rows: self.row_strings() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedYoungDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        SignedYoungDiagram::from_row_strings(raw.shape, &raw.rows).map_err(serde::de::Error::custom)
    }
}

pub fn signature_of(diagram: &SignedYoungDiagram) -> Signature {
    diagram.rows().fold(Signature::new(0, 0), |acc, (len, start)| {
        let (plus, minus) = row_counts(len, start);
        Signature::new(acc.plus + plus, acc.minus + minus)
    })
}

pub fn row_sign_counts(diagram: &SignedYoungDiagram) -> Vec<(usize, usize)> {
    diagram.rows().map(|(len, start)| row_counts(len, start)).collect()
}

/// Maximal runs of equal row lengths: `(length, multiplicity)`.
pub(crate) fn row_groups(shape: &Partition) -> Vec<(usize, usize)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &len in shape.parts() {
        match groups.last_mut() {
            Some((l, m)) if *l == len => *m += 1,
            _ => groups.push((len, 1)),
        }
    }
    groups
}

/// Every diagram of shape `lambda` up to row permutation, regardless of signature.
///
/// Each group of `m` equal rows contributes a counter `0..=m` giving how many
/// of its rows start with `-`; counters advance like an odometer with the
/// last group fastest.
pub fn enumerate_all_fillings(lambda: &Partition) -> Vec<SignedYoungDiagram> {
    let groups = row_groups(lambda);
    let mut counters = vec![0usize; groups.len()];
    let mut out = Vec::new();
    loop {
        let starts = groups
            .iter()
            .zip(&counters)
            .flat_map(|(&(_, m), &minus)| {
                std::iter::repeat_n(Sign::Plus, m - minus).chain(std::iter::repeat_n(Sign::Minus, minus))
            })
            .collect();
        out.push(SignedYoungDiagram { shape: lambda.clone(), starts });

        let mut k = groups.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if counters[k] < groups[k].1 {
                counters[k] += 1;
                break;
            }
            counters[k] = 0;
        }
    }
}

/// Diagrams of shape `lambda` with the given signature.
pub fn enumerate_signed_fillings(lambda: &Partition, sig: Signature) -> Vec<SignedYoungDiagram> {
    if sig.total() != lambda.total() {
        return Vec::new();
    }
    enumerate_all_fillings(lambda)
        .into_iter()
        .filter(|d| signature_of(d) == sig)
        .collect()
}
