//! Products of minors of the generic upper-triangular matrix.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{diagram_dominance_leq, Diagram};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::weight::WeightVector;

/// Position of `y_{ij}`, `i <= j`, in row-major order of the upper triangle.
pub(crate) fn triangle_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j <= n);
    (i - 1) * (n + 1) - (i - 1) * i / 2 + (j - i)
}

/// A polynomial in the indeterminates `y_{ij}`, `1 <= i <= j <= n`.
/// Monomials are exponent vectors over the upper triangle in row-major
/// order.
#[derive(Clone, PartialEq, Eq)]
pub struct YPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl YPolynomial {
    pub fn one(n: usize) -> Self {
        YPolynomial { n, terms: BTreeMap::from([(vec![0; n * (n + 1) / 2], BigInt::one())]) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &BigInt)> {
        self.terms.iter()
    }

    /// Total degree of every monomial, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&d| d as usize).sum::<usize>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Coefficient of `prod y_{ij}^{e_ij}` given as `(i, j, e)` triples.
    pub fn coeff_of(&self, factors: &[(usize, usize, u8)]) -> BigInt {
        let mut e = vec![0u8; self.n * (self.n + 1) / 2];
        for &(i, j, p) in factors {
            e[triangle_index(self.n, i, j)] += p;
        }
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    fn mul(&self, other: &YPolynomial) -> YPolynomial {
        let mut terms: BTreeMap<Vec<u8>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u8> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        YPolynomial { n: self.n, terms }
    }

    fn label(&self, idx: usize) -> (usize, usize) {
        let mut k = idx;
        for i in 1..=self.n {
            let len = self.n - i + 1;
            if k < len {
                return (i, i + k);
            }
            k -= len;
        }
        unreachable!("index outside the upper triangle")
    }
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &BigInt::zero();
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mag = if neg { -c } else { c.clone() };
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(idx, &p)| {
                    let (i, j) = self.label(idx);
                    if p == 1 { format!("y{i}{j}") } else { format!("y{i}{j}^{p}") }
                })
                .collect();
            match (factors.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPolynomial({self})")
    }
}

/// `prod_j det(Y restricted to rows C_j and columns D_j)` together with the
/// diagram `C` that indexes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetProduct {
    pub rows: Diagram,
    pub expansion: YPolynomial,
}

impl DetProduct {
    /// The torus weight `xi^C`: entry `i` counts the columns of `C`
    /// containing row `i`.
    pub fn weight(&self) -> WeightVector {
        weight_of(&self.rows)
    }
}

pub(crate) fn weight_of(c: &Diagram) -> WeightVector {
    let n = c.n();
    WeightVector::new(
        (1..=n)
            .map(|i| c.columns().iter().filter(|col| col.contains(i)).count() as u32)
            .collect(),
    )
}

/// Minor of the upper-triangular generic matrix with the given rows and
/// columns, expanded over permutations with `y_{ij} = 0` for `i > j`
/// pruned during the search.
pub(crate) fn upper_minor(n: usize, rows: Subset, cols: Subset) -> YPolynomial {
    let rows = rows.to_vec();
    let cols = cols.to_vec();
    debug_assert_eq!(rows.len(), cols.len());
    let mut terms = BTreeMap::new();
    let mut exp = vec![0u8; n * (n + 1) / 2];
    let mut assigned = Vec::with_capacity(rows.len());
    expand_minor(n, &rows, &cols, 0, &mut assigned, &mut exp, &mut terms);
    terms.retain(|_, c: &mut BigInt| !c.is_zero());
    YPolynomial { n, terms }
}

fn expand_minor(
    n: usize,
    rows: &[usize],
    cols: &[usize],
    k: usize,
    assigned: &mut Vec<usize>,
    exp: &mut Vec<u8>,
    terms: &mut BTreeMap<Vec<u8>, BigInt>,
) {
    if k == rows.len() {
        let inversions: usize = (0..assigned.len())
            .map(|a| (a + 1..assigned.len()).filter(|&b| assigned[a] > assigned[b]).count())
            .sum();
        let sign = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        *terms.entry(exp.clone()).or_default() += sign;
        return;
    }
    for (c, &col) in cols.iter().enumerate() {
        if rows[k] > col || assigned.contains(&c) {
            continue;
        }
        let idx = triangle_index(n, rows[k], col);
        assigned.push(c);
        exp[idx] += 1;
        expand_minor(n, rows, cols, k + 1, assigned, exp, terms);
        exp[idx] -= 1;
        assigned.pop();
    }
}

/// Expands `prod_j det(Y_{D_j}^{C_j})`. Requires `C <= D`.
pub fn det_product(d: &Diagram, c: &Diagram) -> Result<DetProduct> {
    if c.n() != d.n() {
        return Err(Error::malformed("diagrams in grids of different sizes"));
    }
    if !diagram_dominance_leq(c, d) {
        return Err(Error::malformed(format!("{c:?} is not dominated by {d:?}")));
    }
    let n = d.n();
    let mut expansion = YPolynomial::one(n);
    for (&cj, &dj) in c.columns().iter().zip(d.columns()) {
        if dj.is_empty() {
            continue;
        }
        expansion = expansion.mul(&upper_minor(n, cj, dj));
    }
    if expansion.is_zero() {
        return Err(Error::Internal(format!("determinant product for {c:?} vanished")));
    }
    Ok(DetProduct { rows: c.clone(), expansion })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    fn one_col(n: usize, col: &[usize], j: usize) -> Diagram {
        let mut cs = vec![Subset::EMPTY; n];
        cs[j - 1] = set(col);
        Diagram::from_columns(cs).unwrap()
    }

    #[test]
    fn triangle_indices_are_dense() {
        let n = 4;
        let mut seen = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                seen.push(triangle_index(n, i, j));
            }
        }
        assert_eq!(seen, (0..n * (n + 1) / 2).collect::<Vec<_>>());
    }

    #[test]
    fn single_box() {
        let d = one_col(2, &[1], 1);
        let p = det_product(&d, &d).unwrap();
        assert_eq!(p.expansion.to_string(), "y11");
    }

    #[test]
    fn row_above_column() {
        let d = one_col(2, &[2], 1);
        let c = one_col(2, &[1], 1);
        assert_eq!(det_product(&d, &c).unwrap().expansion.to_string(), "y12");
        assert_eq!(det_product(&d, &c).unwrap().weight().entries(), &[1, 0]);
    }

    #[test]
    fn two_by_two_drops_lower_entry() {
        let d = one_col(2, &[1, 2], 1);
        let p = det_product(&d, &d).unwrap();
        assert_eq!(p.expansion.to_string(), "y11*y22");
    }

    #[test]
    fn full_minor_has_signs() {
        // rows {1,2}, cols {2,3}: y12*y23 - y13*y22
        let m = upper_minor(3, set(&[1, 2]), set(&[2, 3]));
        assert_eq!(m.coeff_of(&[(1, 2, 1), (2, 3, 1)]), BigInt::one());
        assert_eq!(m.coeff_of(&[(1, 3, 1), (2, 2, 1)]), -BigInt::one());
        assert_eq!(m.terms().count(), 2);
    }

    #[test]
    fn rejects_undominated() {
        let d = one_col(2, &[1], 1);
        let c = one_col(2, &[2], 1);
        assert!(matches!(det_product(&d, &c), Err(Error::Malformed(_))));
    }

    #[test]
    fn products_are_homogeneous_of_box_degree() {
        let d = Diagram::from_columns(vec![set(&[2, 3]), set(&[3]), Subset::EMPTY]).unwrap();
        let c = Diagram::from_columns(vec![set(&[1, 2]), set(&[1]), Subset::EMPTY]).unwrap();
        let p = det_product(&d, &c).unwrap();
        assert_eq!(p.expansion.homogeneous_degree(), Some(3));
        assert_eq!(p.weight().entries(), &[2, 1, 0]);
    }
}
