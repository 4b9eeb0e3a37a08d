//! Index sets of nilpotent orbits.
//!
//! Each supported family has its own indexing rule:
//!
//! | family     | index                                                            |
//! |------------|------------------------------------------------------------------|
//! | `sl(n,C)`  | partitions of `n`                                                |
//! | `sl(n,R)`  | partitions of `n`; all-even ones split into `λ+`, `λ-`           |
//! | `su(p,q)`  | signed Young diagrams of signature `(p,q)`                       |
//! | `so(m,C)`  | partitions of `m`, even parts of even multiplicity; all-even ones split into `λ+`, `λ-` |
//! | `so(p,q)`  | signed diagrams of signature `(p,q)`, even rows of even multiplicity starting with `+`; decorated as described in [`so_decoration_class`] |
//!
//! Direct sums are indexed by tuples of summand indices. Small-rank
//! isomorphisms between presentations (for example `so(2,2)` and
//! `sl(2,R)+sl(2,R)`) are not identified.

mod algebra;

pub use algebra::{AlgebraSpec, SimpleAlgebra};

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::{enumerate_signed_fillings, row_sign_counts, signature_of, Sign, Signature, SignedYoungDiagram};
use crate::error::{Error, Result};
use crate::par;
use crate::partitions::{dominates, enumerate_partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Decoration {
    #[default]
    None,
    Plus,
    Minus,
    PlusPlus,
    PlusMinus,
    MinusPlus,
    MinusMinus,
}

impl Decoration {
    pub const PAIR: [Decoration; 2] = [Decoration::Plus, Decoration::Minus];
    pub const FOUR: [Decoration; 4] =
        [Decoration::PlusPlus, Decoration::PlusMinus, Decoration::MinusPlus, Decoration::MinusMinus];

    /// Tag text, `None` for an undecorated index.
    pub fn tag(self) -> Option<&'static str> {
        match self {
            Decoration::None => None,
            Decoration::Plus => Some("+"),
            Decoration::Minus => Some("-"),
            Decoration::PlusPlus => Some("++"),
            Decoration::PlusMinus => Some("+-"),
            Decoration::MinusPlus => Some("-+"),
            Decoration::MinusMinus => Some("--"),
        }
    }

    pub fn from_tag(tag: Option<&str>) -> Result<Self> {
        let all = [Decoration::None, Decoration::Plus, Decoration::Minus]
            .into_iter()
            .chain(Decoration::FOUR);
        for d in all {
            if d.tag() == tag {
                return Ok(d);
            }
        }
        Err(Error::Parse { token: tag.unwrap_or("null").to_string(), reason: "unknown decoration".into() })
    }

    /// First sign of the tag.
    pub fn leading_sign(self) -> Option<Sign> {
        match self {
            Decoration::None => None,
            Decoration::Plus | Decoration::PlusPlus | Decoration::PlusMinus => Some(Sign::Plus),
            Decoration::Minus | Decoration::MinusPlus | Decoration::MinusMinus => Some(Sign::Minus),
        }
    }
}

impl Serialize for Decoration {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.tag() {
            None => serializer.serialize_none(),
            Some(t) => serializer.serialize_str(t),
        }
    }
}

impl<'de> Deserialize<'de> for Decoration {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let tag = Option::<String>::deserialize(deserializer)?;
        Decoration::from_tag(tag.as_deref()).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitBase {
    Partition(Partition),
    Diagram(SignedYoungDiagram),
}

impl OrbitBase {
    pub fn partition(&self) -> &Partition {
        match self {
            OrbitBase::Partition(p) => p,
            OrbitBase::Diagram(d) => d.shape(),
        }
    }
}

/// An orbit index of a simple algebra: a partition or signed diagram plus a decoration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleOrbit {
    pub base: OrbitBase,
    pub decoration: Decoration,
}

impl SimpleOrbit {
    pub fn partition(partition: Partition, decoration: Decoration) -> Self {
        SimpleOrbit { base: OrbitBase::Partition(partition), decoration }
    }

    pub fn diagram(diagram: SignedYoungDiagram, decoration: Decoration) -> Self {
        SimpleOrbit { base: OrbitBase::Diagram(diagram), decoration }
    }

    pub fn underlying_partition(&self) -> &Partition {
        self.base.partition()
    }
}

impl fmt::Display for SimpleOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            OrbitBase::Partition(p) => write!(f, "{p}")?,
            OrbitBase::Diagram(d) => write!(f, "{d}")?,
        }
        if let Some(t) = self.decoration.tag() {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SimpleOrbitJson {
    Partition {
        partition: Partition,
        #[serde(default)]
        decoration: Decoration,
    },
    Diagram {
        shape: Partition,
        rows: Vec<String>,
        #[serde(default)]
        decoration: Decoration,
    },
}

impl Serialize for SimpleOrbit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = match &self.base {
            OrbitBase::Partition(p) => SimpleOrbitJson::Partition { partition: p.clone(), decoration: self.decoration },
            OrbitBase::Diagram(d) => SimpleOrbitJson::Diagram {
                shape: d.shape().clone(),
                rows: d.row_strings(),
                decoration: self.decoration,
            },
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimpleOrbit {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(match SimpleOrbitJson::deserialize(deserializer)? {
            SimpleOrbitJson::Partition { partition, decoration } => SimpleOrbit::partition(partition, decoration),
            SimpleOrbitJson::Diagram { shape, rows, decoration } => {
                let d = SignedYoungDiagram::from_row_strings(shape, &rows).map_err(serde::de::Error::custom)?;
                SimpleOrbit::diagram(d, decoration)
            }
        })
    }
}

/// An element of `I(g)`. Sums carry one component per summand, in summand order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrbitIndex {
    Simple(SimpleOrbit),
    Sum(Vec<SimpleOrbit>),
}

impl OrbitIndex {
    /// Per-summand components; a simple index is a one-element slice.
    pub fn components(&self) -> &[SimpleOrbit] {
        match self {
            OrbitIndex::Simple(o) => std::slice::from_ref(o),
            OrbitIndex::Sum(parts) => parts,
        }
    }

    /// Rebuilds an index for an algebra with `components.len()` summands.
    pub fn from_components(mut components: Vec<SimpleOrbit>) -> Self {
        if components.len() == 1 {
            OrbitIndex::Simple(components.pop().unwrap())
        } else {
            OrbitIndex::Sum(components)
        }
    }

    pub fn as_simple(&self) -> Option<&SimpleOrbit> {
        match self {
            OrbitIndex::Simple(o) => Some(o),
            OrbitIndex::Sum(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("orbit indices always serialize")
    }
}

impl From<SimpleOrbit> for OrbitIndex {
    fn from(o: SimpleOrbit) -> Self {
        OrbitIndex::Simple(o)
    }
}

impl fmt::Display for OrbitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitIndex::Simple(o) => write!(f, "{o}"),
            OrbitIndex::Sum(parts) => {
                write!(f, "<")?;
                for (i, o) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{o}")?;
                }
                write!(f, ">")
            }
        }
    }
}

/// How an admissible `so(p,q)` diagram is decorated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecorationClass {
    Undecorated,
    /// Split into `Y+` and `Y-`.
    Pair,
    /// Split into `Y++`, `Y+-`, `Y-+`, `Y--`.
    Four,
}

impl DecorationClass {
    pub fn decorations(self) -> &'static [Decoration] {
        match self {
            DecorationClass::Undecorated => &[Decoration::None],
            DecorationClass::Pair => &Decoration::PAIR,
            DecorationClass::Four => &Decoration::FOUR,
        }
    }
}

/// Whether `diagram` is admissible before decoration in `so(p,q)`: every
/// even-length row has even multiplicity and starts with `+`.
fn so_admissible(diagram: &SignedYoungDiagram) -> bool {
    diagram.shape().even_parts_have_even_multiplicity()
        && diagram.rows().all(|(len, start)| len % 2 == 1 || start == Sign::Plus)
}

/// Decoration rule for an admissible `so(p,q)` diagram.
///
/// Only even rows: four decorations. At least one odd row, and every odd row
/// has an even number of `+` boxes (or every odd row has an even number of
/// `-` boxes): a `±` pair. Otherwise undecorated.
pub fn so_decoration_class(diagram: &SignedYoungDiagram) -> DecorationClass {
    let odd_rows: Vec<(usize, usize)> = diagram
        .rows()
        .zip(row_sign_counts(diagram))
        .filter(|((len, _), _)| len % 2 == 1)
        .map(|(_, counts)| counts)
        .collect();
    if odd_rows.is_empty() {
        return DecorationClass::Four;
    }
    let all_plus_even = odd_rows.iter().all(|&(plus, _)| plus % 2 == 0);
    let all_minus_even = odd_rows.iter().all(|&(_, minus)| minus % 2 == 0);
    if all_plus_even || all_minus_even {
        DecorationClass::Pair
    } else {
        DecorationClass::Undecorated
    }
}

fn partition_decorations(partition: &Partition) -> &'static [Decoration] {
    if partition.all_even() && !partition.is_empty() {
        &Decoration::PAIR
    } else {
        &[Decoration::None]
    }
}

fn orbits_over_partition(member: SimpleAlgebra, lambda: &Partition) -> Vec<SimpleOrbit> {
    let decorated = |d: &[Decoration]| -> Vec<SimpleOrbit> {
        d.iter().map(|&dec| SimpleOrbit::partition(lambda.clone(), dec)).collect()
    };
    match member {
        SimpleAlgebra::SlComplex(_) => decorated(&[Decoration::None]),
        SimpleAlgebra::SlReal(_) => decorated(partition_decorations(lambda)),
        SimpleAlgebra::SoComplex(_) => {
            if lambda.even_parts_have_even_multiplicity() {
                decorated(partition_decorations(lambda))
            } else {
                Vec::new()
            }
        }
        SimpleAlgebra::Su(p, q) => enumerate_signed_fillings(lambda, Signature::new(p, q))
            .into_iter()
            .map(|d| SimpleOrbit::diagram(d, Decoration::None))
            .collect(),
        SimpleAlgebra::SoReal(p, q) => {
            if !lambda.even_parts_have_even_multiplicity() {
                return Vec::new();
            }
            enumerate_signed_fillings(lambda, Signature::new(p, q))
                .into_iter()
                .filter(so_admissible)
                .flat_map(|d| {
                    so_decoration_class(&d)
                        .decorations()
                        .iter()
                        .map(|&dec| SimpleOrbit::diagram(d.clone(), dec))
                        .collect::<Vec<_>>()
                })
                .collect()
        }
    }
}

/// `I(g)` for one simple member, grouped by partition in enumeration order.
pub fn enumerate_simple_orbits(member: SimpleAlgebra) -> Result<Vec<SimpleOrbit>> {
    let member = SimpleAlgebra::checked_member(member)?;
    let partitions = enumerate_partitions(member.vector_dim());
    let per_partition = par::map(&partitions, |lambda| orbits_over_partition(member, lambda));
    Ok(per_partition.into_iter().flatten().collect())
}

/// `I(g)`; for sums, the cartesian product of summand index sets with the
/// last summand varying fastest.
pub fn enumerate_orbits(g: &AlgebraSpec) -> Result<Vec<OrbitIndex>> {
    let factors = g
        .summands()
        .iter()
        .map(|&m| enumerate_simple_orbits(m))
        .collect::<Result<Vec<_>>>()?;
    if let [only] = factors.as_slice() {
        return Ok(only.iter().cloned().map(OrbitIndex::Simple).collect());
    }
    Ok(cartesian_product(&factors).into_iter().map(OrbitIndex::Sum).collect())
}

pub(crate) fn cartesian_product<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    factors.iter().fold(vec![Vec::new()], |acc, factor| {
        acc.iter()
            .flat_map(|prefix| {
                factor.iter().map(move |item| {
                    let mut next = prefix.clone();
                    next.push(item.clone());
                    next
                })
            })
            .collect()
    })
}

pub fn underlying_partition(o: &OrbitIndex) -> Result<Partition> {
    match o {
        OrbitIndex::Simple(s) => Ok(s.underlying_partition().clone()),
        OrbitIndex::Sum(_) => Err(Error::NotSimple(o.to_string())),
    }
}

/// Membership in `I(member)`, decided by the family rule.
pub fn validate_simple_orbit(member: SimpleAlgebra, o: &SimpleOrbit) -> bool {
    if SimpleAlgebra::checked_member(member).is_err() {
        return false;
    }
    let lambda = o.underlying_partition();
    if lambda.total() != member.vector_dim() {
        return false;
    }
    match (member, &o.base) {
        (SimpleAlgebra::SlComplex(_), OrbitBase::Partition(_)) => o.decoration == Decoration::None,
        (SimpleAlgebra::SlReal(_), OrbitBase::Partition(p)) => partition_decorations(p).contains(&o.decoration),
        (SimpleAlgebra::SoComplex(_), OrbitBase::Partition(p)) => {
            p.even_parts_have_even_multiplicity() && partition_decorations(p).contains(&o.decoration)
        }
        (SimpleAlgebra::Su(p, q), OrbitBase::Diagram(d)) => {
            signature_of(d) == Signature::new(p, q) && o.decoration == Decoration::None
        }
        (SimpleAlgebra::SoReal(p, q), OrbitBase::Diagram(d)) => {
            signature_of(d) == Signature::new(p, q)
                && so_admissible(d)
                && so_decoration_class(d).decorations().contains(&o.decoration)
        }
        _ => false,
    }
}

/// True iff `o` belongs to `I(g)`.
pub fn validate_orbit(g: &AlgebraSpec, o: &OrbitIndex) -> bool {
    let components = o.components();
    let shape_ok = match o {
        OrbitIndex::Simple(_) => g.summands().len() == 1,
        OrbitIndex::Sum(parts) => parts.len() == g.summands().len() && parts.len() >= 2,
    };
    shape_ok
        && g.summands()
            .iter()
            .zip(components)
            .all(|(&m, c)| validate_simple_orbit(m, c))
}

pub(crate) fn ensure_valid(g: &AlgebraSpec, o: &OrbitIndex) -> Result<()> {
    if validate_orbit(g, o) {
        Ok(())
    } else {
        Err(Error::InvalidOrbit { algebra: g.to_string(), orbit: o.to_json() })
    }
}

/// The regular (dominance-maximal) orbit of `sl(n,C)` or `so(m,C)`.
pub fn regular_orbit(member: SimpleAlgebra) -> Result<OrbitIndex> {
    if !member.is_complex() {
        return Err(Error::NotComplex(member.to_string()));
    }
    let member = SimpleAlgebra::checked_member(member)?;
    let valid: Vec<Partition> = enumerate_partitions(member.vector_dim())
        .into_iter()
        .filter(|p| !orbits_over_partition(member, p).is_empty())
        .collect();
    let maximal: Vec<&Partition> = valid
        .iter()
        .filter(|lam| {
            !valid
                .iter()
                .any(|mu| mu != *lam && dominates(mu, lam).expect("same total"))
        })
        .collect();
    let [top] = maximal.as_slice() else {
        return Err(Error::NonUniqueMaximum(member.to_string()));
    };
    if !valid.iter().all(|mu| dominates(top, mu).expect("same total")) {
        return Err(Error::NonUniqueMaximum(member.to_string()));
    }
    match orbits_over_partition(member, top).as_slice() {
        [only] => Ok(OrbitIndex::Simple(only.clone())),
        _ => Err(Error::NonUniqueMaximum(member.to_string())),
    }
}

/// All indices of `I(member)` over a given partition.
pub fn orbits_with_partition(member: SimpleAlgebra, lambda: &Partition) -> Vec<SimpleOrbit> {
    if lambda.total() != member.vector_dim() {
        return Vec::new();
    }
    orbits_over_partition(member, lambda)
}

impl SimpleAlgebra {
    fn checked_member(member: SimpleAlgebra) -> Result<SimpleAlgebra> {
        AlgebraSpec::new(vec![member]).map(|_| member)
    }
}
