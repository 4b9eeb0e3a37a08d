//! Nilpotent orbits of classical real and complex Lie algebras.
//!
//! Orbits are indexed combinatorially by (decorated) partitions and signed
//! Young diagrams. On top of the index sets the crate provides the orbit
//! complexification map `I(g) -> I(g_C)` with its image and fibres, the
//! dominance order that governs closure on `sl(n,C)`, and an exact rational
//! matrix oracle computing centralizer and orbit dimensions.
//!
//! ```
//! use nilorbits::{complexify, AlgebraSpec};
//!
//! let g: AlgebraSpec = "so(3,1)".parse().unwrap();
//! let report = complexify::is_surjective(&g).unwrap();
//! assert!(!report.surjective);
//! assert_eq!(report.missed.len(), 2);
//! ```

pub mod cli;
pub mod complexify;
pub mod diagrams;
pub mod error;
pub mod oracle;
pub mod orbit_index;
pub mod par;
pub mod partitions;
pub mod poset;
pub mod verify;

pub use diagrams::{Sign, Signature, SignedYoungDiagram};
pub use error::{Error, Result};
pub use orbit_index::{AlgebraSpec, Decoration, OrbitBase, OrbitIndex, SimpleAlgebra, SimpleOrbit};
pub use partitions::Partition;
