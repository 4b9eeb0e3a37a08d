//! Orbit complexification `φ_g : I(g) -> I(g_C)`.
//!
//! A real orbit complexifies to the complex orbit with the same underlying
//! partition. The only freedom is for all-even partitions of `so(2m,C)`,
//! which carry a `±` decoration; there a decorated `so(p,q)` diagram is sent
//! by its first tag sign (`++`, `+-` to `λ+` and `-+`, `--` to `λ-`). That
//! pairing is a labelling convention: image sizes, fibre sizes and
//! surjectivity do not depend on it.

use std::collections::HashSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::orbit_index::{
    enumerate_orbits, ensure_valid, orbits_with_partition, regular_orbit, AlgebraSpec, Decoration, OrbitIndex,
    SimpleAlgebra, SimpleOrbit,
};

pub fn complexify_member(member: SimpleAlgebra) -> SimpleAlgebra {
    match member {
        SimpleAlgebra::SlReal(n) | SimpleAlgebra::SlComplex(n) => SimpleAlgebra::SlComplex(n),
        SimpleAlgebra::Su(p, q) => SimpleAlgebra::SlComplex(p + q),
        SimpleAlgebra::SoReal(p, q) => SimpleAlgebra::SoComplex(p + q),
        SimpleAlgebra::SoComplex(m) => SimpleAlgebra::SoComplex(m),
    }
}

/// `g_C`, summand by summand. Complex members map to themselves.
pub fn complexify_algebra(g: &AlgebraSpec) -> AlgebraSpec {
    AlgebraSpec::new(g.summands().iter().map(|&m| complexify_member(m)).collect())
        .expect("complexification stays in range")
}

/// Image of a valid index of `member` in `I(member_C)`.
fn complexify_simple(member: SimpleAlgebra, o: &SimpleOrbit) -> SimpleOrbit {
    if member.is_complex() {
        return o.clone();
    }
    let lambda = o.underlying_partition().clone();
    let target = complexify_member(member);
    let decoration = match orbits_with_partition(target, &lambda).len() {
        1 => Decoration::None,
        _ => match o.decoration.leading_sign() {
            Some(crate::diagrams::Sign::Plus) => Decoration::Plus,
            Some(crate::diagrams::Sign::Minus) => Decoration::Minus,
            // Undecorated real index over a decorated complex pair cannot
            // arise from the indexing rules.
            None => unreachable!("undecorated {o} over a decorated partition of {target}"),
        },
    };
    SimpleOrbit::partition(lambda, decoration)
}

pub fn complexify_orbit(g: &AlgebraSpec, o: &OrbitIndex) -> Result<OrbitIndex> {
    ensure_valid(g, o)?;
    Ok(complexify_unchecked(g, o))
}

fn complexify_unchecked(g: &AlgebraSpec, o: &OrbitIndex) -> OrbitIndex {
    let components = g
        .summands()
        .iter()
        .zip(o.components())
        .map(|(&m, c)| complexify_simple(m, c))
        .collect();
    OrbitIndex::from_components(components)
}

/// Every real index paired with its complexification, in `I(g)` order.
pub fn complexification_table(g: &AlgebraSpec) -> Result<Vec<(OrbitIndex, OrbitIndex)>> {
    Ok(enumerate_orbits(g)?
        .into_iter()
        .map(|o| {
            let image = complexify_unchecked(g, &o);
            (o, image)
        })
        .collect())
}

/// `φ_g(I(g))`, listed in `I(g_C)` order.
pub fn image(g: &AlgebraSpec) -> Result<Vec<OrbitIndex>> {
    let hit: HashSet<OrbitIndex> = enumerate_orbits(g)?
        .iter()
        .map(|o| complexify_unchecked(g, o))
        .collect();
    Ok(enumerate_orbits(&complexify_algebra(g))?
        .into_iter()
        .filter(|theta| hit.contains(theta))
        .collect())
}

/// `φ_g⁻¹(Θ)`, in `I(g)` order.
pub fn fibre(g: &AlgebraSpec, theta: &OrbitIndex) -> Result<Vec<OrbitIndex>> {
    ensure_valid(&complexify_algebra(g), theta)?;
    Ok(enumerate_orbits(g)?
        .into_iter()
        .filter(|o| &complexify_unchecked(g, o) == theta)
        .collect())
}

pub fn is_split_member(member: SimpleAlgebra) -> bool {
    match member {
        SimpleAlgebra::SlReal(_) => true,
        SimpleAlgebra::SoReal(p, q) => p - q <= 1,
        SimpleAlgebra::Su(..) | SimpleAlgebra::SlComplex(_) | SimpleAlgebra::SoComplex(_) => false,
    }
}

pub fn is_quasi_split_member(member: SimpleAlgebra) -> bool {
    match member {
        SimpleAlgebra::SlReal(_) | SimpleAlgebra::SlComplex(_) | SimpleAlgebra::SoComplex(_) => true,
        SimpleAlgebra::Su(p, q) => p - q <= 1,
        SimpleAlgebra::SoReal(p, q) => p - q <= 2,
    }
}

/// A sum is split iff every summand is.
pub fn is_split(g: &AlgebraSpec) -> bool {
    g.summands().iter().all(|&m| is_split_member(m))
}

/// A sum is quasi-split iff every summand is.
pub fn is_quasi_split(g: &AlgebraSpec) -> bool {
    g.summands().iter().all(|&m| is_quasi_split_member(m))
}

/// `so(2n+1, 2n-1)` for some `n ≥ 1`.
pub fn is_obstructed_member(member: SimpleAlgebra) -> bool {
    matches!(member, SimpleAlgebra::SoReal(p, q) if p == q + 2 && q % 2 == 1)
}

/// Quasi-split with no simple summand of the form `so(2n+1, 2n-1)`.
///
/// Computed from the family tables only; [`is_surjective`] decides the same
/// question by enumeration.
pub fn theorem1_predicate(g: &AlgebraSpec) -> bool {
    is_quasi_split(g) && !g.summands().iter().any(|&m| is_obstructed_member(m))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurjectivityReport {
    pub algebra: AlgebraSpec,
    pub surjective: bool,
    pub missed: Vec<OrbitIndex>,
    pub theorem_predicate: bool,
    pub agree: bool,
}

/// Surjectivity of `φ_g`, by comparing the image against all of `I(g_C)`.
pub fn is_surjective(g: &AlgebraSpec) -> Result<SurjectivityReport> {
    let hit: HashSet<OrbitIndex> = image(g)?.into_iter().collect();
    let missed: Vec<OrbitIndex> = enumerate_orbits(&complexify_algebra(g))?
        .into_iter()
        .filter(|theta| !hit.contains(theta))
        .collect();
    let surjective = missed.is_empty();
    let theorem_predicate = theorem1_predicate(g);
    Ok(SurjectivityReport {
        algebra: g.clone(),
        surjective,
        missed,
        theorem_predicate,
        agree: surjective == theorem_predicate,
    })
}

fn require_simple(g: &AlgebraSpec) -> Result<SimpleAlgebra> {
    g.as_simple().ok_or_else(|| Error::NotSimple(g.to_string()))
}

/// Whether the regular orbit of `g_C` is hit by `φ_g`.
pub fn regular_in_image(g: &AlgebraSpec) -> Result<bool> {
    let member = require_simple(g)?;
    let regular = regular_orbit(complexify_member(member))?;
    Ok(image(g)?.contains(&regular))
}

/// Action of complex conjugation relative to `g` on a complex orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaStatus {
    Fixed,
    NotFixed,
    Unknown,
}

impl SigmaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SigmaStatus::Fixed => "fixed",
            SigmaStatus::NotFixed => "not_fixed",
            SigmaStatus::Unknown => "unknown",
        }
    }
}

impl Serialize for SigmaStatus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Whether `σ_g(Θ) = Θ`, as far as it is determined at the orbit level.
///
/// Conjugation preserves partitions, so an orbit alone over its partition is
/// fixed. Every orbit meeting `g` is fixed. For quasi-split `g` the converse
/// also holds, so a decorated orbit outside the image is moved. Otherwise the
/// status of a decorated orbit outside the image is left `Unknown`.
pub fn sigma_fixed(g: &AlgebraSpec, theta: &OrbitIndex) -> Result<SigmaStatus> {
    let member = require_simple(g)?;
    let target = complexify_member(member);
    ensure_valid(&AlgebraSpec::simple(target), theta)?;
    let lambda = theta.as_simple().expect("simple target").underlying_partition();

    if orbits_with_partition(target, lambda).len() == 1 {
        return Ok(SigmaStatus::Fixed);
    }
    if image(g)?.contains(theta) {
        return Ok(SigmaStatus::Fixed);
    }
    Ok(if is_quasi_split_member(member) { SigmaStatus::NotFixed } else { SigmaStatus::Unknown })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{Sign, SignedYoungDiagram};
    use crate::partitions::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn alg(s: &str) -> AlgebraSpec {
        s.parse().unwrap()
    }

    fn part(parts: &[usize], d: Decoration) -> OrbitIndex {
        SimpleOrbit::partition(p(parts), d).into()
    }

    #[test]
    fn complexify_algebra_examples() {
        assert_eq!(complexify_algebra(&alg("su(2,2)")), alg("sl(4,C)"));
        assert_eq!(complexify_algebra(&alg("so(3,1)")), alg("so(4,C)"));
        assert_eq!(complexify_algebra(&alg("sl(2,R)+so(3,1)")), alg("sl(2,C)+so(4,C)"));
    }

    #[test]
    fn complexify_orbit_examples() {
        assert_eq!(
            complexify_orbit(&alg("sl(2,R)"), &part(&[2], Decoration::Plus)).unwrap(),
            part(&[2], Decoration::None)
        );
        let row = SignedYoungDiagram::new(p(&[3]), vec![Sign::Plus]).unwrap();
        assert_eq!(
            complexify_orbit(&alg("su(2,1)"), &SimpleOrbit::diagram(row, Decoration::None).into()).unwrap(),
            part(&[3], Decoration::None)
        );
        let two_two = SignedYoungDiagram::new(p(&[2, 2]), vec![Sign::Plus, Sign::Plus]).unwrap();
        assert_eq!(
            complexify_orbit(&alg("so(2,2)"), &SimpleOrbit::diagram(two_two, Decoration::MinusPlus).into())
                .unwrap(),
            part(&[2, 2], Decoration::Minus)
        );
    }

    #[test]
    fn complexify_rejects_invalid_source() {
        assert!(matches!(
            complexify_orbit(&alg("sl(2,R)"), &part(&[2], Decoration::None)),
            Err(Error::InvalidOrbit { .. })
        ));
    }

    #[test]
    fn image_examples() {
        assert_eq!(image(&alg("so(3,1)")).unwrap(), vec![part(&[3, 1], Decoration::None), part(&[1, 1, 1, 1], Decoration::None)]);
        assert_eq!(image(&alg("sl(3,R)")).unwrap().len(), 3);
        assert_eq!(image(&alg("su(2,2)")).unwrap().len(), 5);
    }

    #[test]
    fn fibre_examples() {
        let sl2 = alg("sl(2,R)");
        assert_eq!(
            fibre(&sl2, &part(&[2], Decoration::None)).unwrap(),
            vec![part(&[2], Decoration::Plus), part(&[2], Decoration::Minus)]
        );
        assert_eq!(fibre(&sl2, &part(&[1, 1], Decoration::None)).unwrap(), vec![part(&[1, 1], Decoration::None)]);
        assert!(fibre(&alg("so(3,1)"), &part(&[2, 2], Decoration::Plus)).unwrap().is_empty());
        assert!(fibre(&sl2, &part(&[2], Decoration::Plus)).is_err());
    }

    #[test]
    fn split_tables() {
        assert!(is_quasi_split(&alg("so(4,2)")) && !is_split(&alg("so(4,2)")));
        assert!(!is_quasi_split(&alg("su(3,1)")));
        assert!(is_split(&alg("sl(5,R)")));
        assert!(is_split(&alg("sl(2,R)+so(3,2)")));
        assert!(!is_quasi_split(&alg("sl(2,R)+su(3,1)")));
    }

    #[test]
    fn surjectivity_examples() {
        let r = is_surjective(&alg("so(3,1)")).unwrap();
        assert!(!r.surjective && r.agree);
        assert_eq!(r.missed, vec![part(&[2, 2], Decoration::Plus), part(&[2, 2], Decoration::Minus)]);
        assert!(is_surjective(&alg("su(2,2)")).unwrap().surjective);
        assert!(is_surjective(&alg("so(4,2)")).unwrap().surjective);
    }

    #[test]
    fn surjectivity_report_json() {
        let json = serde_json::to_string(&is_surjective(&alg("so(3,1)")).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"algebra":"so(3,1)","surjective":false,"missed":[{"partition":[2,2],"decoration":"+"},{"partition":[2,2],"decoration":"-"}],"theorem_predicate":false,"agree":true}"#
        );
    }

    #[test]
    fn regular_in_image_examples() {
        assert!(regular_in_image(&alg("sl(3,R)")).unwrap());
        assert!(!regular_in_image(&alg("su(3,1)")).unwrap());
        assert!(regular_in_image(&alg("so(3,1)")).unwrap());
        assert!(regular_in_image(&alg("sl(2,R)+sl(2,R)")).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_fixed(&alg("so(3,1)"), &part(&[3, 1], Decoration::None)).unwrap(), SigmaStatus::Fixed);
        assert_eq!(sigma_fixed(&alg("so(3,1)"), &part(&[2, 2], Decoration::Plus)).unwrap(), SigmaStatus::NotFixed);
        assert_eq!(sigma_fixed(&alg("so(2,2)"), &part(&[2, 2], Decoration::Minus)).unwrap(), SigmaStatus::Fixed);
        assert_eq!(sigma_fixed(&alg("so(6,2)"), &part(&[4, 4], Decoration::Plus)).unwrap(), SigmaStatus::Unknown);
        assert!(sigma_fixed(&alg("so(3,1)"), &part(&[2, 2], Decoration::None)).is_err());
    }
}
