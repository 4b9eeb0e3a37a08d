//! Exact-arithmetic dimension oracle.
//!
//! The centralizer of a nilpotent `ξ` is the solution space of `[η, ξ] = 0`
//! with `η` ranging over the algebra. Writing `η` in a basis turns this into
//! a rational linear system whose nullity is the centralizer dimension; the
//! orbit dimension is `dim g − dim g_ξ`. No floating point is involved.

mod matrix;
mod representatives;

pub use matrix::RationalMatrix;
pub use representatives::{
    antidiagonal_form, expected_rank_sequence, jordan_from_blocks, jordan_representative, orthogonal_representative,
    preserves_form, rank_sequence,
};

use std::collections::HashMap;
use std::sync::Mutex;

use num::{BigRational, One, Zero};
use serde::Serialize;

use crate::complexify::{complexify_member, complexify_orbit, fibre};
use crate::error::{Error, Result};
use crate::orbit_index::{ensure_valid, AlgebraSpec, OrbitIndex, SimpleAlgebra};
use crate::partitions::Partition;

/// Matrix algebra in which a centralizer is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixFamily {
    /// Trace-zero `n x n` matrices.
    SpecialLinear(usize),
    /// `m x m` matrices with `Xᵀ J + J X = 0`, `J` anti-diagonal.
    Orthogonal(usize),
}

impl MatrixFamily {
    pub fn size(&self) -> usize {
        match *self {
            MatrixFamily::SpecialLinear(n) | MatrixFamily::Orthogonal(n) => n,
        }
    }

    pub fn dimension(&self) -> usize {
        match *self {
            MatrixFamily::SpecialLinear(n) => n * n - 1,
            MatrixFamily::Orthogonal(m) => m * (m - 1) / 2,
        }
    }

    /// `E_ij (i≠j)`, `E_ii − E_nn` for `sl`; `J(E_ij − E_ji)` for `so`.
    pub fn basis(&self) -> Vec<RationalMatrix> {
        match *self {
            MatrixFamily::SpecialLinear(n) => {
                let mut basis = Vec::with_capacity(self.dimension());
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            basis.push(RationalMatrix::unit(n, i, j));
                        }
                    }
                }
                for i in 0..n.saturating_sub(1) {
                    let mut h = RationalMatrix::unit(n, i, i);
                    h.set(n - 1, n - 1, -BigRational::one());
                    basis.push(h);
                }
                basis
            }
            MatrixFamily::Orthogonal(m) => {
                // J(E_ij − E_ji) has +1 at (m-1-i, j) and -1 at (m-1-j, i).
                let mut basis = Vec::with_capacity(self.dimension());
                for i in 0..m {
                    for j in i + 1..m {
                        let mut x = RationalMatrix::zeros(m, m);
                        x.set(m - 1 - i, j, BigRational::one());
                        x.set(m - 1 - j, i, -BigRational::one());
                        basis.push(x);
                    }
                }
                basis
            }
        }
    }

    pub fn contains(&self, x: &RationalMatrix) -> bool {
        if !x.is_square() || x.rows() != self.size() {
            return false;
        }
        match *self {
            MatrixFamily::SpecialLinear(_) => x.trace().is_zero(),
            MatrixFamily::Orthogonal(m) => preserves_form(x, &antidiagonal_form(m)),
        }
    }

    fn name(&self) -> String {
        match *self {
            MatrixFamily::SpecialLinear(n) => format!("sl({n})"),
            MatrixFamily::Orthogonal(m) => format!("so({m})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CentralizerReport {
    pub algebra_dim: usize,
    pub centralizer_dim: usize,
    pub orbit_dim: usize,
}

impl CentralizerReport {
    pub fn orbit_dim_is_even(&self) -> bool {
        self.orbit_dim.is_multiple_of(2)
    }
}

/// Nullity of `η ↦ [η, ξ]` on the algebra.
pub fn centralizer_dimension(xi: &RationalMatrix, family: MatrixFamily) -> Result<CentralizerReport> {
    if !family.contains(xi) {
        return Err(Error::NotInAlgebra(family.name()));
    }
    let basis = family.basis();
    let n = family.size();
    // Column k of the system is vec([B_k, ξ]).
    let mut system = RationalMatrix::zeros(n * n, basis.len());
    for (k, b) in basis.iter().enumerate() {
        let bracket = b.commutator(xi);
        for (idx, value) in bracket.entries().iter().enumerate() {
            if !value.is_zero() {
                system.set(idx, k, value.clone());
            }
        }
    }
    let algebra_dim = basis.len();
    let centralizer_dim = system.nullity();
    Ok(CentralizerReport { algebra_dim, centralizer_dim, orbit_dim: algebra_dim - centralizer_dim })
}

/// Matrix family and representative for a complex orbit of `member` with
/// underlying partition `lambda`.
pub fn complex_representative(member: SimpleAlgebra, lambda: &Partition) -> Result<(MatrixFamily, RationalMatrix)> {
    match member {
        SimpleAlgebra::SlComplex(n) => Ok((MatrixFamily::SpecialLinear(n), jordan_representative(lambda))),
        SimpleAlgebra::SoComplex(m) => Ok((MatrixFamily::Orthogonal(m), orthogonal_representative(lambda, m)?)),
        other => Err(Error::NotComplex(other.to_string())),
    }
}

/// Per-fibre dimension summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibreDimensionReport {
    pub fibre_size: usize,
    pub dimensions: Vec<usize>,
    /// Shared dimension, `None` for an empty fibre.
    pub common_dim: Option<usize>,
    pub equidimensional: bool,
}

/// Dimension queries with a thread-safe memo keyed by complex algebra and
/// partition. Decorated pairs `λ±` share the entry for `λ`.
#[derive(Debug, Default)]
pub struct DimensionOracle {
    cache: Mutex<HashMap<(SimpleAlgebra, Partition), CentralizerReport>>,
}

impl DimensionOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn complex_report(&self, member: SimpleAlgebra, lambda: &Partition) -> Result<CentralizerReport> {
        let key = (member, lambda.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(*hit);
        }
        let (family, xi) = complex_representative(member, lambda)?;
        let report = centralizer_dimension(&xi, family)?;
        self.cache.lock().unwrap().insert(key, report);
        Ok(report)
    }

    /// Complex dimension of a complex orbit.
    pub fn orbit_dimension(&self, member: SimpleAlgebra, theta: &OrbitIndex) -> Result<usize> {
        if !member.is_complex() {
            return Err(Error::NotComplex(member.to_string()));
        }
        ensure_valid(&AlgebraSpec::simple(member), theta)?;
        let lambda = theta.as_simple().expect("validated simple").underlying_partition();
        Ok(self.complex_report(member, lambda)?.orbit_dim)
    }

    /// Real dimension of a real orbit, via its complexification.
    ///
    /// For `sl(n,R)` the centralizer is also solved directly on the real
    /// basis with the real Jordan representative, and the two must agree.
    pub fn real_orbit_dimension(&self, member: SimpleAlgebra, o: &OrbitIndex) -> Result<usize> {
        if member.is_complex() {
            return Err(Error::UnsupportedAlgebra(format!("{member} is not a real form")));
        }
        let g = AlgebraSpec::simple(member);
        let target = complexify_member(member);
        let theta = complexify_orbit(&g, o)?;
        let dim = self.orbit_dimension(target, &theta)?;
        if let SimpleAlgebra::SlReal(n) = member {
            let lambda = o.as_simple().expect("validated simple").underlying_partition();
            let direct = centralizer_dimension(&jordan_representative(lambda), MatrixFamily::SpecialLinear(n))?;
            if direct.orbit_dim != dim {
                return Err(Error::Consistency(format!(
                    "real and complex centralizers of {lambda} in {member} disagree"
                )));
            }
        }
        Ok(dim)
    }

    pub fn verify_fibre_equidimensional(&self, member: SimpleAlgebra, theta: &OrbitIndex) -> Result<FibreDimensionReport> {
        let g = AlgebraSpec::simple(member);
        let dimensions = fibre(&g, theta)?
            .iter()
            .map(|o| self.real_orbit_dimension(member, o))
            .collect::<Result<Vec<_>>>()?;
        let common_dim = dimensions.first().copied();
        let equidimensional = dimensions.iter().all(|&d| Some(d) == common_dim);
        Ok(FibreDimensionReport {
            fibre_size: dimensions.len(),
            dimensions,
            common_dim: if equidimensional { common_dim } else { None },
            equidimensional,
        })
    }
}

pub fn orbit_dimension(member: SimpleAlgebra, theta: &OrbitIndex) -> Result<usize> {
    DimensionOracle::new().orbit_dimension(member, theta)
}

pub fn real_orbit_dimension(member: SimpleAlgebra, o: &OrbitIndex) -> Result<usize> {
    DimensionOracle::new().real_orbit_dimension(member, o)
}

pub fn verify_fibre_equidimensional(member: SimpleAlgebra, theta: &OrbitIndex) -> Result<FibreDimensionReport> {
    DimensionOracle::new().verify_fibre_equidimensional(member, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit_index::{Decoration, SimpleOrbit};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn part(parts: &[usize], d: Decoration) -> OrbitIndex {
        SimpleOrbit::partition(p(parts), d).into()
    }

    #[test]
    fn basis_sizes_match_dimensions() {
        for family in [MatrixFamily::SpecialLinear(3), MatrixFamily::Orthogonal(5), MatrixFamily::Orthogonal(4)] {
            let basis = family.basis();
            assert_eq!(basis.len(), family.dimension());
            assert!(basis.iter().all(|b| family.contains(b)));
        }
    }

    #[test]
    fn centralizer_examples() {
        let r = centralizer_dimension(&jordan_representative(&p(&[2])), MatrixFamily::SpecialLinear(2)).unwrap();
        assert_eq!((r.centralizer_dim, r.orbit_dim), (1, 2));
        let r = centralizer_dimension(&jordan_representative(&p(&[3])), MatrixFamily::SpecialLinear(3)).unwrap();
        assert_eq!((r.centralizer_dim, r.orbit_dim), (2, 6));
        let x = orthogonal_representative(&p(&[3, 1]), 4).unwrap();
        let r = centralizer_dimension(&x, MatrixFamily::Orthogonal(4)).unwrap();
        assert_eq!((r.algebra_dim, r.centralizer_dim, r.orbit_dim), (6, 2, 4));
    }

    #[test]
    fn centralizer_rejects_foreign_matrices() {
        let not_traceless = RationalMatrix::identity(2);
        assert!(matches!(
            centralizer_dimension(&not_traceless, MatrixFamily::SpecialLinear(2)),
            Err(Error::NotInAlgebra(_))
        ));
        let jordan = jordan_representative(&p(&[2, 1, 1]));
        assert!(centralizer_dimension(&jordan, MatrixFamily::Orthogonal(4)).is_err());
    }

    #[test]
    fn orbit_dimension_examples() {
        assert_eq!(orbit_dimension(SimpleAlgebra::SlComplex(4), &part(&[2, 1, 1], Decoration::None)).unwrap(), 6);
        assert_eq!(orbit_dimension(SimpleAlgebra::SoComplex(4), &part(&[2, 2], Decoration::Plus)).unwrap(), 2);
        assert_eq!(orbit_dimension(SimpleAlgebra::SoComplex(5), &part(&[1; 5], Decoration::None)).unwrap(), 0);
        assert!(orbit_dimension(SimpleAlgebra::SlReal(2), &part(&[2], Decoration::Plus)).is_err());
    }

    #[test]
    fn real_orbit_dimension_examples() {
        let sl2 = SimpleAlgebra::SlReal(2);
        assert_eq!(real_orbit_dimension(sl2, &part(&[2], Decoration::Plus)).unwrap(), 2);
        assert_eq!(real_orbit_dimension(sl2, &part(&[2], Decoration::Minus)).unwrap(), 2);
        let so31 = SimpleAlgebra::SoReal(3, 1);
        let regular = crate::orbit_index::enumerate_orbits(&AlgebraSpec::simple(so31)).unwrap()[0].clone();
        assert_eq!(real_orbit_dimension(so31, &regular).unwrap(), 4);
    }

    #[test]
    fn fibre_examples() {
        let r = verify_fibre_equidimensional(SimpleAlgebra::SlReal(2), &part(&[2], Decoration::None)).unwrap();
        assert_eq!((r.fibre_size, r.common_dim), (2, Some(2)));
        let r = verify_fibre_equidimensional(SimpleAlgebra::Su(2, 2), &part(&[2, 2], Decoration::None)).unwrap();
        assert_eq!(r.fibre_size, 3);
        // 15 - (2^2 + 2^2)
        assert_eq!(r.common_dim, Some(8));
        let r = verify_fibre_equidimensional(SimpleAlgebra::SoReal(3, 1), &part(&[2, 2], Decoration::Plus)).unwrap();
        assert_eq!((r.fibre_size, r.common_dim, r.equidimensional), (0, None, true));
    }
}
