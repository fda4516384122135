use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index};

use serde::{Deserialize, Serialize};

use crate::subset::Subset;

/// A length-`n` vector of nonnegative integers: an exponent vector of a
/// monomial, a lattice point, or the weight of a diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(entries: Vec<u32>) -> Self {
        WeightVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    /// The 0/1 indicator vector of `set` inside `[n]`.
    pub fn indicator(n: usize, set: Subset) -> Self {
        WeightVector((1..=n).map(|i| u32::from(set.contains(i))).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// Sum of the entries (the degree of the monomial).
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Sum of the entries indexed by `set` (1-based).
    pub fn sum_over(&self, set: Subset) -> u64 {
        set.iter().map(|i| u64::from(self.0[i - 1])).sum()
    }

    /// Graded lexicographic comparison: total degree first, then
    /// lexicographic with `x1 > x2 > ... > xn`.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Index<usize> for WeightVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.len(), rhs.len(), "weight vectors of different lengths");
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for WeightVector {
    fn from(v: Vec<u32>) -> Self {
        WeightVector(v)
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
