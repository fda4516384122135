//! Exact polynomial arithmetic and the operators that build Schubert and
//! key polynomials.

mod operators;
mod permutation;
mod polynomial;

pub use operators::{
    demazure, divide_by_adjacent_difference, divided_difference, key, key_with, schubert,
    schubert_with, staircase, ChoicePolicy,
};
pub use permutation::{Composition, Permutation};
pub use polynomial::{Polynomial, PolynomialJson, TermJson};
