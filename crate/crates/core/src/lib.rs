//! Schubert polynomials, key polynomials and dual characters of flagged
//! Weyl modules, together with the polytopes that govern their supports.
//!
//! The supports of these polynomials are the lattice points of
//! generalized permutahedra: the Schubitope of the underlying diagram,
//! which is also the Minkowski sum of the Schubert matroid polytopes of its
//! columns. Every object here is exact; there is no floating point.
//!
//! Conventions: variables, rows and columns are 1-based; diagram cell
//! `(i, j)` is row `i`, column `j` with row 1 on top.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod matroid;
pub mod polytope;
pub mod subset;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use algebra::{key, schubert, Composition, Permutation, Polynomial};
pub use diagram::{rothe, skyline, Diagram};
pub use error::{Error, Result};
pub use matroid::SchubertMatroid;
pub use polytope::{schubitope, GeneralizedPermutahedron, LatticePointSet};
pub use subset::Subset;
pub use weight::WeightVector;
