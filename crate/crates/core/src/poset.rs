//! Finite posets, Hasse diagrams and the closure order on `sl(n,C)`.
//!
//! The closure order on nilpotent orbits of `sl(n,C)` is the dominance order
//! on partitions. For `so(m,C)` only the dominance projection is offered
//! ([`dominance_projection_so`]); it is not claimed to be the closure order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit_index::{enumerate_simple_orbits, OrbitIndex, SimpleAlgebra};
use crate::partitions::{dominates, enumerate_partitions, Partition};

/// Label placed on every export of [`dominance_projection_so`].
pub const DOMINANCE_PROJECTION_NOTE: &str = "dominance projection, not asserted to be the closure order";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    leq: Vec<Vec<bool>>,
}

impl<T> FinitePoset<T> {
    /// Validates reflexivity, antisymmetry and transitivity of `leq`.
    pub fn new(elements: Vec<T>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = elements.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::NotAPartialOrder(format!("relation matrix is not {n}x{n}")));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::NotAPartialOrder(format!("not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::NotAPartialOrder(format!("not antisymmetric at ({i},{j})")));
                }
                if !leq[i][j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j][k] && !leq[i][k] {
                        return Err(Error::NotAPartialOrder(format!("not transitive at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(FinitePoset { elements, leq })
    }

    /// Builds the relation from a comparison `leq(a, b)`.
    pub fn from_relation(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        let matrix = elements
            .iter()
            .map(|a| elements.iter().map(|b| leq(a, b)).collect())
            .collect();
        FinitePoset::new(elements, matrix)
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq[i][j] || self.leq[j][i]
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Covering relations as `(upper, lower)` index pairs, sorted.
    ///
    /// `(a, b)` is present iff `b < a` with nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut covers = Vec::new();
        for upper in 0..n {
            for lower in 0..n {
                if !self.lt(lower, upper) {
                    continue;
                }
                let between = (0..n).any(|c| self.lt(lower, c) && self.lt(c, upper));
                if !between {
                    covers.push((upper, lower));
                }
            }
        }
        covers
    }

    /// Indices ordered so that every element precedes everything below it;
    /// ties broken by index.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .find(|&i| !placed[i] && (0..n).all(|j| placed[j] || !self.lt(i, j)))
                .expect("a finite poset always has a maximal unplaced element");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    pub fn position(&self, element: &T) -> Option<usize>
    where
        T: PartialEq,
    {
        self.elements.iter().position(|e| e == element)
    }
}

impl<T: PartialEq + Serialize> FinitePoset<T> {
    /// No two distinct members of `subset` are comparable.
    pub fn is_antichain(&self, subset: &[T]) -> Result<bool> {
        let indices = subset
            .iter()
            .map(|s| {
                self.position(s)
                    .ok_or_else(|| Error::UnknownElement(serde_json::to_string(s).unwrap_or_default()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(indices
            .iter()
            .enumerate()
            .all(|(a, &i)| indices[a + 1..].iter().all(|&j| i == j || !self.comparable(i, j))))
    }
}

impl<T: Serialize> FinitePoset<T> {
    /// Graphviz text. Nodes and edges appear in topological order; node labels
    /// are the JSON serialization of each element.
    pub fn export_dot(&self, comment: Option<&str>) -> String {
        let order = self.topological_order();
        let mut rank = vec![0; self.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut out = String::from("digraph poset {\n");
        if let Some(c) = comment {
            writeln!(out, "  // {c}").unwrap();
        }
        for &i in &order {
            let label = serde_json::to_string(&self.elements[i]).expect("poset elements serialize");
            writeln!(out, "  n{i} [label=\"{}\"];", label.replace('\\', "\\\\").replace('"', "\\\"")).unwrap();
        }
        let mut edges = self.hasse();
        edges.sort_by_key(|&(u, l)| (rank[u], rank[l]));
        for (u, l) in edges {
            writeln!(out, "  n{u} -> n{l};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `{"elements":[...],"covers":[[upper,lower],...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct PosetJson<'a, T> {
            elements: &'a [T],
            covers: Vec<(usize, usize)>,
        }
        serde_json::to_string(&PosetJson { elements: &self.elements, covers: self.hasse() })
            .expect("poset elements serialize")
    }
}

/// Closure order on `I(sl(n,C))`: dominance on partitions of `n`.
pub fn closure_order_sl(n: usize) -> Result<FinitePoset<Partition>> {
    if n < 2 {
        return Err(Error::UnsupportedAlgebra(format!("sl({n},C)")));
    }
    FinitePoset::from_relation(enumerate_partitions(n), |a, b| dominates(b, a).expect("same total"))
}

/// Dominance on underlying partitions of `I(so(m,C))`, with the two members
/// of a decorated pair incomparable.
pub fn dominance_projection_so(m: usize) -> Result<FinitePoset<OrbitIndex>> {
    let elements: Vec<OrbitIndex> = enumerate_simple_orbits(SimpleAlgebra::so_complex(m)?)?
        .into_iter()
        .map(OrbitIndex::Simple)
        .collect();
    FinitePoset::from_relation(elements, |a, b| {
        let (a, b) = (a.as_simple().unwrap(), b.as_simple().unwrap());
        let (pa, pb) = (a.underlying_partition(), b.underlying_partition());
        a == b || (pa != pb && dominates(pb, pa).expect("same total"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chain(k: usize) -> FinitePoset<usize> {
        FinitePoset::from_relation((0..k).collect(), |a, b| a >= b).unwrap()
    }

    #[test]
    fn rejects_non_orders() {
        assert!(FinitePoset::new(vec![0, 1], vec![vec![true, true], vec![true, true]]).is_err());
        assert!(FinitePoset::new(vec![0], vec![vec![false]]).is_err());
        let not_transitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(FinitePoset::new(vec![0, 1, 2], not_transitive).is_err());
    }

    #[test]
    fn sl3_is_a_chain() {
        let poset = closure_order_sl(3).unwrap();
        assert_eq!(poset.elements(), &[p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(poset.hasse(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn sl4_is_a_five_chain() {
        let poset = closure_order_sl(4).unwrap();
        assert_eq!(poset.len(), 5);
        assert_eq!(poset.hasse(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn sl6_incomparable_pair() {
        let poset = closure_order_sl(6).unwrap();
        assert_eq!(poset.len(), 11);
        assert!(poset.is_antichain(&[p(&[4, 1, 1]), p(&[3, 3])]).unwrap());
    }

    #[test]
    fn hasse_of_chain_and_antichain() {
        assert_eq!(chain(3).hasse().len(), 2);
        let antichain = FinitePoset::from_relation((0..4).collect::<Vec<usize>>(), |a, b| a == b).unwrap();
        assert!(antichain.hasse().is_empty());
    }

    #[test]
    fn antichain_examples() {
        let sl3 = closure_order_sl(3).unwrap();
        assert!(!sl3.is_antichain(&[p(&[3]), p(&[1, 1, 1])]).unwrap());
        assert!(sl3.is_antichain(&[p(&[2, 1])]).unwrap());
        assert!(matches!(sl3.is_antichain(&[p(&[4])]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn dot_export() {
        let empty: FinitePoset<usize> = FinitePoset::new(vec![], vec![]).unwrap();
        assert_eq!(empty.export_dot(None), "digraph poset {\n}\n");
        let two = chain(2).export_dot(None);
        assert_eq!(two.matches("->").count(), 1);
        let sl4 = closure_order_sl(4).unwrap().export_dot(None);
        assert_eq!(sl4.matches("[label=").count(), 5);
        assert_eq!(sl4.matches("->").count(), 4);
        assert!(sl4.contains("n0 [label=\"[4]\"];"));
    }

    #[test]
    fn json_export_sl3() {
        let json = closure_order_sl(3).unwrap().to_json();
        assert_eq!(json, r#"{"elements":[[3],[2,1],[1,1,1]],"covers":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn so4_projection_keeps_pair_incomparable() {
        let poset = dominance_projection_so(4).unwrap();
        assert_eq!(poset.len(), 4);
        // (3,1) > (2,2)+, (2,2)- > (1^4)
        assert_eq!(poset.hasse().len(), 4);
        let pair = &poset.elements()[1..3];
        assert!(poset.is_antichain(pair).unwrap());
    }
}
