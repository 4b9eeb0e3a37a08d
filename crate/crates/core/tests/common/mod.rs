//! Brute-force reference implementations, written without the library's
//! enumerators. Shared by the integration tests and the acceptance runner.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nilorbits::{OrbitBase, OrbitIndex, SimpleAlgebra, SimpleOrbit};

/// An orbit index in plain data: parts, optional sorted row strings, tag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Raw {
    pub parts: Vec<usize>,
    pub rows: Option<Vec<String>>,
    pub tag: Option<String>,
}

impl Raw {
    pub fn partition(parts: &[usize], tag: Option<&str>) -> Self {
        Raw { parts: parts.to_vec(), rows: None, tag: tag.map(str::to_string) }
    }

    pub fn diagram(rows: &[&str], tag: Option<&str>) -> Self {
        let mut rows: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
        sort_rows(&mut rows);
        let parts = rows.iter().map(String::len).collect();
        Raw { parts, rows: Some(rows), tag: tag.map(str::to_string) }
    }
}

/// Longest rows first; among equal lengths, rows starting with `+` first.
pub fn sort_rows(rows: &mut [String]) {
    rows.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
}

pub fn raw_of(o: &SimpleOrbit) -> Raw {
    let (parts, rows) = match &o.base {
        OrbitBase::Partition(p) => (p.parts().to_vec(), None),
        OrbitBase::Diagram(d) => {
            let mut rows = d.row_strings();
            sort_rows(&mut rows);
            (d.shape().parts().to_vec(), Some(rows))
        }
    };
    Raw { parts, rows, tag: o.decoration.tag().map(str::to_string) }
}

pub fn raw_index(o: &OrbitIndex) -> Vec<Raw> {
    o.components().iter().map(raw_of).collect()
}

/// Partitions of `n` with parts at most `max`, by recursion on the first part.
fn partitions_bounded(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut tail in partitions_bounded(n - first, first) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    partitions_bounded(n, n)
}

pub fn prefix_dominates(a: &[usize], b: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let top = parts.first().copied().unwrap_or(0);
    (1..=top).map(|k| parts.iter().filter(|&&p| p >= k).count()).collect()
}

fn multiplicity(parts: &[usize], value: usize) -> usize {
    parts.iter().filter(|&&p| p == value).count()
}

fn alternating(len: usize, plus_first: bool) -> String {
    (0..len)
        .map(|i| if (i % 2 == 0) == plus_first { '+' } else { '-' })
        .collect()
}

/// Every signed diagram of the given shape with `p` plus and `q` minus boxes,
/// by running over all `2^rows` start-sign vectors and deduplicating.
pub fn fillings(parts: &[usize], p: usize, q: usize) -> BTreeSet<Vec<String>> {
    let k = parts.len();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << k) {
        let mut rows: Vec<String> = parts
            .iter()
            .enumerate()
            .map(|(i, &len)| alternating(len, mask & (1 << i) == 0))
            .collect();
        let plus: usize = rows.iter().map(|r| r.matches('+').count()).sum();
        let minus: usize = rows.iter().map(|r| r.matches('-').count()).sum();
        if plus == p && minus == q {
            sort_rows(&mut rows);
            out.insert(rows);
        }
    }
    out
}

fn tagged(parts: &[usize], rows: Option<Vec<String>>, tags: &[&str]) -> Vec<Raw> {
    if tags.is_empty() {
        return vec![Raw { parts: parts.to_vec(), rows, tag: None }];
    }
    tags.iter()
        .map(|t| Raw { parts: parts.to_vec(), rows: rows.clone(), tag: Some(t.to_string()) })
        .collect()
}

const PAIR: [&str; 2] = ["+", "-"];
const FOUR: [&str; 4] = ["++", "+-", "-+", "--"];

/// The index set of a simple member, by applying the family rules literally.
pub fn orbits(member: SimpleAlgebra) -> BTreeSet<Raw> {
    let mut out = BTreeSet::new();
    match member {
        SimpleAlgebra::SlComplex(n) => {
            for lam in partitions(n) {
                out.extend(tagged(&lam, None, &[]));
            }
        }
        SimpleAlgebra::SlReal(n) => {
            for lam in partitions(n) {
                let tags: &[&str] = if lam.iter().all(|x| x % 2 == 0) { &PAIR } else { &[] };
                out.extend(tagged(&lam, None, tags));
            }
        }
        SimpleAlgebra::Su(p, q) => {
            for lam in partitions(p + q) {
                for rows in fillings(&lam, p, q) {
                    out.extend(tagged(&lam, Some(rows), &[]));
                }
            }
        }
        SimpleAlgebra::SoComplex(m) => {
            for lam in partitions(m) {
                if lam.iter().any(|&x| x % 2 == 0 && multiplicity(&lam, x) % 2 == 1) {
                    continue;
                }
                let tags: &[&str] = if lam.iter().all(|x| x % 2 == 0) { &PAIR } else { &[] };
                out.extend(tagged(&lam, None, tags));
            }
        }
        SimpleAlgebra::SoReal(p, q) => {
            for lam in partitions(p + q) {
                for rows in fillings(&lam, p, q) {
                    let even_ok = rows
                        .iter()
                        .filter(|r| r.len() % 2 == 0)
                        .all(|r| multiplicity(&lam, r.len()).is_multiple_of(2) && r.starts_with('+'));
                    if !even_ok {
                        continue;
                    }
                    let odd: Vec<&String> = rows.iter().filter(|r| r.len() % 2 == 1).collect();
                    let tags: &[&str] = if odd.is_empty() {
                        &FOUR
                    } else if odd.iter().all(|r| r.matches('+').count() % 2 == 0)
                        || odd.iter().all(|r| r.matches('-').count() % 2 == 0)
                    {
                        &PAIR
                    } else {
                        &[]
                    };
                    out.extend(tagged(&lam, Some(rows), tags));
                }
            }
        }
    }
    out
}

pub fn complex_form(member: SimpleAlgebra) -> SimpleAlgebra {
    match member {
        SimpleAlgebra::SlReal(n) | SimpleAlgebra::SlComplex(n) => SimpleAlgebra::SlComplex(n),
        SimpleAlgebra::Su(p, q) => SimpleAlgebra::SlComplex(p + q),
        SimpleAlgebra::SoReal(p, q) => SimpleAlgebra::SoComplex(p + q),
        SimpleAlgebra::SoComplex(m) => SimpleAlgebra::SoComplex(m),
    }
}

/// Same partition; for all-even partitions of an orthogonal target the first
/// sign of the source tag is kept.
pub fn complexify(member: SimpleAlgebra, o: &Raw) -> Raw {
    let orthogonal = matches!(complex_form(member), SimpleAlgebra::SoComplex(_));
    let tag = if orthogonal && o.parts.iter().all(|x| x % 2 == 0) {
        let t = o.tag.as_deref().expect("very even source orbits are decorated");
        Some(t[..1].to_string())
    } else {
        None
    };
    Raw { parts: o.parts.clone(), rows: None, tag }
}

pub fn image(member: SimpleAlgebra) -> BTreeSet<Raw> {
    orbits(member).iter().map(|o| complexify(member, o)).collect()
}

pub fn missed(member: SimpleAlgebra) -> BTreeSet<Raw> {
    let hit = image(member);
    orbits(complex_form(member)).into_iter().filter(|t| !hit.contains(t)).collect()
}

/// The unique index whose partition dominates every other valid partition.
pub fn regular(target: SimpleAlgebra) -> Raw {
    let all = orbits(target);
    let top: Vec<&Raw> = all
        .iter()
        .filter(|o| all.iter().all(|other| prefix_dominates(&o.parts, &other.parts)))
        .collect();
    assert_eq!(top.len(), 1, "regular orbit of {target} is not unique");
    top[0].clone()
}

pub fn quasi_split(member: SimpleAlgebra) -> bool {
    match member {
        SimpleAlgebra::SlReal(_) => true,
        SimpleAlgebra::Su(p, q) => p.abs_diff(q) <= 1,
        SimpleAlgebra::SoReal(p, q) => p.abs_diff(q) <= 2,
        SimpleAlgebra::SlComplex(_) | SimpleAlgebra::SoComplex(_) => true,
    }
}

/// Quasi-split with no summand `so(2n+1, 2n-1)`.
pub fn surjectivity_criterion(summands: &[SimpleAlgebra]) -> bool {
    summands.iter().all(|&m| quasi_split(m))
        && !summands.iter().any(|&m| match m {
            SimpleAlgebra::SoReal(p, q) => {
                let (hi, lo) = (p.max(q), p.min(q));
                (1..=hi).any(|n| hi == 2 * n + 1 && lo == 2 * n - 1)
            }
            _ => false,
        })
}

/// Real simple members of the three families with every parameter at most `bound`.
pub fn real_members(bound: usize) -> Vec<SimpleAlgebra> {
    let mut out: Vec<SimpleAlgebra> = (2..=bound).map(SimpleAlgebra::SlReal).collect();
    for p in 1..=bound {
        for q in 1..=p {
            out.push(SimpleAlgebra::Su(p, q));
            if p + q >= 3 {
                out.push(SimpleAlgebra::SoReal(p, q));
            }
        }
    }
    out
}

/// Unordered pairs of members with parameters at most `bound`.
pub fn member_pairs(bound: usize) -> Vec<(SimpleAlgebra, SimpleAlgebra)> {
    let members = real_members(bound);
    let mut out = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            out.push((a, b));
        }
    }
    out
}

/// `n² − Σ (λᵀ_i)²`.
pub fn sl_orbit_dim(parts: &[usize]) -> usize {
    let n: usize = parts.iter().sum();
    n * n - conjugate(parts).iter().map(|c| c * c).sum::<usize>()
}

/// `m(m−1)/2 − ½(Σ (λᵀ_i)² − #{odd parts})`.
pub fn so_orbit_dim(parts: &[usize]) -> usize {
    let m: usize = parts.iter().sum();
    let squares: usize = conjugate(parts).iter().map(|c| c * c).sum();
    let odd = parts.iter().filter(|p| *p % 2 == 1).count();
    m * (m - 1) / 2 - (squares - odd) / 2
}
