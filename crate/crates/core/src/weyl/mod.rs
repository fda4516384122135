//! Dual characters of flagged Weyl modules.
//!
//! The module of a diagram `D` is spanned by the determinant products
//! indexed by diagrams `C <= D`. Each product is a torus eigenvector whose
//! dual weight is `xi^C`, so the dual character is the sum over weights of
//! `dim(span of the products of that weight) * x^weight`.

mod det;
pub mod linalg;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

pub use det::{det_product, DetProduct, YPolynomial};

use crate::algebra::Polynomial;
use crate::diagram::{set_dominance_leq, Diagram};
use crate::error::{Error, Result};
use crate::polytope::LatticePointSet;
use crate::subset::Subset;
use crate::weight::WeightVector;

/// Caps for the spanning-set computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterLimits {
    /// Maximum number of diagrams `C <= D` enumerated.
    pub diagram_cap: usize,
    /// Maximum `rows * columns` of one weight-space coefficient matrix.
    pub matrix_cap: usize,
}

impl Default for CharacterLimits {
    fn default() -> Self {
        CharacterLimits { diagram_cap: 1_000_000, matrix_cap: 50_000_000 }
    }
}

/// Subsets of `[n]` of the same size as `column` and dominated by it.
fn dominated_sets(n: usize, column: Subset) -> Vec<Subset> {
    Subset::of_size(n, column.len())
        .filter(|&s| set_dominance_leq(s, column))
        .collect()
}

/// Number of diagrams `C <= D`, saturating.
pub fn dominated_count(d: &Diagram) -> u64 {
    d.columns()
        .iter()
        .map(|&c| dominated_sets(d.n(), c).len() as u64)
        .fold(1u64, u64::saturating_mul)
}

/// Calls `visit` on every diagram `C <= D` in lexicographic order of the
/// column choices.
pub fn for_each_dominated(
    d: &Diagram,
    cap: usize,
    mut visit: impl FnMut(&[Subset]) -> Result<()>,
) -> Result<()> {
    if dominated_count(d) > cap as u64 {
        return Err(Error::CapExceeded { what: "dominated diagram count", cap: cap as u64 });
    }
    let choices: Vec<Vec<Subset>> = d.columns().iter().map(|&c| dominated_sets(d.n(), c)).collect();
    let mut current = Vec::with_capacity(d.n());
    walk(&choices, &mut current, &mut visit)
}

fn walk(
    choices: &[Vec<Subset>],
    current: &mut Vec<Subset>,
    visit: &mut impl FnMut(&[Subset]) -> Result<()>,
) -> Result<()> {
    let k = current.len();
    if k == choices.len() {
        return visit(current);
    }
    for &s in &choices[k] {
        current.push(s);
        walk(choices, current, visit)?;
        current.pop();
    }
    Ok(())
}

fn weight_of_columns(n: usize, columns: &[Subset]) -> WeightVector {
    WeightVector::new(
        (1..=n)
            .map(|i| columns.iter().filter(|c| c.contains(i)).count() as u32)
            .collect(),
    )
}

pub fn chi_support(d: &Diagram) -> Result<LatticePointSet> {
    chi_support_with(d, &CharacterLimits::default())
}

/// `{xi^C : C <= D}`, by enumerating the diagrams `C` directly.
pub fn chi_support_with(d: &Diagram, limits: &CharacterLimits) -> Result<LatticePointSet> {
    let mut points = BTreeSet::new();
    for_each_dominated(d, limits.diagram_cap, |cols| {
        points.insert(weight_of_columns(d.n(), cols));
        Ok(())
    })?;
    LatticePointSet::new(d.n(), points)
}

pub fn chi_character(d: &Diagram) -> Result<Polynomial> {
    chi_character_with(d, &CharacterLimits::default())
}

/// The dual character `chi_D` with multiplicities.
///
/// Determinant products are grouped by weight; the coefficient of
/// `x^weight` is the rank of the matrix whose rows are the coefficient
/// vectors of that weight's products.
pub fn chi_character_with(d: &Diagram, limits: &CharacterLimits) -> Result<Polynomial> {
    let n = d.n();
    let mut by_weight: BTreeMap<WeightVector, Vec<Diagram>> = BTreeMap::new();
    for_each_dominated(d, limits.diagram_cap, |cols| {
        let c = Diagram::from_columns(cols.to_vec())?;
        by_weight.entry(weight_of_columns(n, cols)).or_default().push(c);
        Ok(())
    })?;

    let ranks: Vec<(WeightVector, usize)> = by_weight
        .into_par_iter()
        .map(|(weight, cs)| {
            let products = cs
                .iter()
                .map(|c| det_product(d, c).map(|p| p.expansion))
                .collect::<Result<Vec<_>>>()?;
            let r = weight_space_dimension(&products, limits.matrix_cap)?;
            if r == 0 {
                return Err(Error::Internal(format!("weight space {weight} has dimension 0")));
            }
            Ok((weight, r))
        })
        .collect::<Result<Vec<_>>>()?;

    Polynomial::from_terms(n, ranks.into_iter().map(|(w, r)| (w, BigInt::from(r))))
}

/// Dimension of the span of `products`.
pub fn weight_space_dimension(products: &[YPolynomial], matrix_cap: usize) -> Result<usize> {
    let unique: BTreeSet<Vec<(Vec<u8>, BigInt)>> = products
        .iter()
        .map(|p| p.terms().map(|(e, c)| (e.clone(), c.clone())).collect())
        .collect();
    if unique.len() == 1 {
        return Ok(1);
    }
    let monomials: BTreeMap<&Vec<u8>, usize> = {
        let set: BTreeSet<&Vec<u8>> = unique.iter().flat_map(|p| p.iter().map(|(e, _)| e)).collect();
        set.into_iter().enumerate().map(|(k, e)| (e, k)).collect()
    };
    let (rows, cols) = (unique.len(), monomials.len());
    if rows.saturating_mul(cols) > matrix_cap {
        return Err(Error::CapExceeded { what: "weight-space matrix size", cap: matrix_cap as u64 });
    }
    let matrix = unique
        .iter()
        .map(|p| {
            let mut row = vec![BigInt::default(); cols];
            for (e, c) in p {
                row[monomials[e]] = c.clone();
            }
            row
        })
        .collect();
    Ok(linalg::rank(matrix))
}
