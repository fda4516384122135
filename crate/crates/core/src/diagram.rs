//! Diagrams in the `n x n` grid, stored column by column.
//!
//! Cells use matrix indexing: `(i, j)` is row `i`, column `j`, both
//! 1-based, with row 1 at the top. Column `j` of a diagram is the set of
//! rows `i` for which `(i, j)` is a cell.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND_SET};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    columns: Vec<Subset>,
}

impl Diagram {
    /// The diagram with the given columns in an `n x n` grid where
    /// `n = columns.len()`.
    pub fn from_columns(columns: Vec<Subset>) -> Result<Self> {
        let n = columns.len();
        if n > MAX_GROUND_SET {
            return Err(Error::malformed(format!(
                "grid size {n} exceeds the supported maximum {MAX_GROUND_SET}"
            )));
        }
        let full = Subset::full(n);
        if let Some(j) = columns.iter().position(|c| !c.is_subset_of(full)) {
            return Err(Error::malformed(format!(
                "column {} has rows outside [1, {n}]",
                j + 1
            )));
        }
        Ok(Diagram { n, columns })
    }

    pub fn empty(n: usize) -> Self {
        Diagram { n, columns: vec![Subset::EMPTY; n] }
    }

    /// Builds a diagram from `(row, column)` cells.
    pub fn from_cells<I: IntoIterator<Item = (usize, usize)>>(n: usize, cells: I) -> Result<Self> {
        let mut columns = vec![Subset::EMPTY; n];
        for (i, j) in cells {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(Error::malformed(format!("cell ({i},{j}) is outside the {n}x{n} grid")));
            }
            columns[j - 1] = columns[j - 1].with(i);
        }
        Diagram::from_columns(columns)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Subset] {
        &self.columns
    }

    /// Column `j`, 1-based.
    pub fn column(&self, j: usize) -> Subset {
        self.columns[j - 1]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.n && self.columns[j - 1].contains(i)
    }

    /// Number of cells.
    pub fn box_count(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    /// Cells in column-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |i| (i, j + 1)))
            .collect()
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            n: self.n,
            columns: Some(self.columns.iter().map(|c| c.to_vec()).collect()),
            cells: None,
        }
    }

    /// Accepts either the column form or a `"cells": [[i, j], ...]` list.
    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        match (&json.columns, &json.cells) {
            (Some(cols), None) => {
                if cols.len() != json.n {
                    return Err(Error::malformed(format!(
                        "expected {} columns, found {}",
                        json.n,
                        cols.len()
                    )));
                }
                let cols = cols
                    .iter()
                    .map(|c| Subset::from_elements(json.n, c.iter().copied()))
                    .collect::<Result<Vec<_>>>()?;
                Diagram::from_columns(cols)
            }
            (None, Some(cells)) => Diagram::from_cells(json.n, cells.iter().map(|&[i, j]| (i, j))),
            _ => Err(Error::malformed("a diagram needs exactly one of \"columns\" or \"cells\"")),
        }
    }
}

/// Wire form: `{"n": int, "columns": [[rows], ...]}`; `"cells"` is
/// accepted on input in place of `"columns"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub columns: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<Vec<[usize; 2]>>,
}

/// The Rothe diagram `{(i, j) : w(i) > j, w^{-1}(j) > i}`.
pub fn rothe(w: &Permutation) -> Result<Diagram> {
    let n = w.len();
    let inv = w.inverse();
    let cells = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| w.apply(i) > j && inv.apply(j) > i);
    Diagram::from_cells(n, cells)
}

/// The skyline diagram: the first `alpha_i` cells of each row `i`, in a grid
/// of size `alpha.grid_size()`. The zero composition gives the empty
/// diagram on a 0 x 0 grid.
pub fn skyline(alpha: &Composition) -> Result<Diagram> {
    let n = alpha.grid_size();
    let columns = (1..=n)
        .map(|j| (1..=n).filter(|&i| alpha.part(i) as usize >= j).collect())
        .collect();
    Diagram::from_columns(columns)
}

/// `R <= S`: equal size and the `k`th smallest element of `R` is at most
/// the `k`th smallest element of `S` for every `k`.
pub fn set_dominance_leq(r: Subset, s: Subset) -> bool {
    r.len() == s.len() && r.iter().zip(s.iter()).all(|(a, b)| a <= b)
}

/// Columnwise [`set_dominance_leq`].
pub fn diagram_dominance_leq(c: &Diagram, d: &Diagram) -> bool {
    c.n == d.n
        && c
            .columns
            .iter()
            .zip(&d.columns)
            .all(|(&cj, &dj)| set_dominance_leq(cj, dj))
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(")?;
        for (k, c) in self.columns.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Grid picture, `#` for a cell and `.` otherwise, row 1 first.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: String = (1..=self.n)
                .map(|j| if self.contains(i, j) { '#' } else { '.' })
                .collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    fn cols(cs: &[&[usize]]) -> Diagram {
        Diagram::from_columns(cs.iter().map(|c| set(c)).collect()).unwrap()
    }

    #[test]
    fn rothe_of_41532() {
        let d = rothe(&"41532".parse().unwrap()).unwrap();
        assert_eq!(d, cols(&[&[1], &[1, 3, 4], &[1, 3], &[], &[]]));
        assert_eq!(d.box_count(), 6);
    }

    #[test]
    fn rothe_small_cases() {
        assert_eq!(rothe(&Permutation::identity(4)).unwrap(), Diagram::empty(4));
        assert_eq!(rothe(&"132".parse().unwrap()).unwrap(), cols(&[&[], &[2], &[]]));
    }

    #[test]
    fn rothe_box_count_is_inversion_count() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                assert_eq!(rothe(&w).unwrap().box_count(), w.inversions(), "w = {w}");
            }
        }
    }

    #[test]
    fn skyline_examples() {
        let d = skyline(&"3,2,1,0,1".parse().unwrap()).unwrap();
        assert_eq!(d, cols(&[&[1, 2, 3, 5], &[1, 2], &[1], &[], &[]]));
        assert_eq!(skyline(&"0".parse().unwrap()).unwrap(), Diagram::empty(0));
        assert_eq!(skyline(&"1,1".parse().unwrap()).unwrap(), cols(&[&[1, 2], &[]]));
    }

    #[test]
    fn skyline_box_count_is_size() {
        for a in Composition::all_bounded(3, 4) {
            assert_eq!(skyline(&a).unwrap().box_count() as u64, a.size());
        }
    }

    #[test]
    fn set_dominance_examples() {
        assert!(set_dominance_leq(set(&[1, 3]), set(&[2, 3])));
        assert!(!set_dominance_leq(set(&[2]), set(&[1])));
        assert!(!set_dominance_leq(set(&[1]), set(&[1, 2])));
        assert!(set_dominance_leq(Subset::EMPTY, Subset::EMPTY));
    }

    #[test]
    fn diagram_dominance_examples() {
        let d = cols(&[&[], &[2], &[]]);
        assert!(diagram_dominance_leq(&d, &d));
        assert!(diagram_dominance_leq(&cols(&[&[], &[1], &[]]), &d));
        assert!(!diagram_dominance_leq(&d, &cols(&[&[], &[1], &[]])));
    }

    #[test]
    fn json_forms() {
        let d = cols(&[&[1], &[1, 3], &[]]);
        let s = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(s, r#"{"n":3,"columns":[[1],[1,3],[]]}"#);
        assert_eq!(Diagram::from_json(&serde_json::from_str(&s).unwrap()).unwrap(), d);
        let by_cells: DiagramJson =
            serde_json::from_str(r#"{"n":3,"cells":[[1,1],[1,2],[3,2]]}"#).unwrap();
        assert_eq!(Diagram::from_json(&by_cells).unwrap(), d);
        let bad: DiagramJson = serde_json::from_str(r#"{"n":2,"columns":[[3],[]]}"#).unwrap();
        assert!(Diagram::from_json(&bad).is_err());
        let short: DiagramJson = serde_json::from_str(r#"{"n":3,"columns":[[1]]}"#).unwrap();
        assert!(Diagram::from_json(&short).is_err());
    }

    /// Random diagrams whose column sizes are fixed to `sizes`.
    fn arb_with_sizes(n: usize, sizes: Vec<usize>) -> impl Strategy<Value = Diagram> {
        let per_col: Vec<_> = sizes
            .into_iter()
            .map(|k| prop::sample::select(Subset::of_size(n, k).collect::<Vec<_>>()))
            .collect();
        per_col.prop_map(|cs| Diagram::from_columns(cs).unwrap())
    }

    proptest! {
        #[test]
        fn dominance_is_a_partial_order(
            (a, b, c) in (prop::collection::vec(0usize..=4, 4))
                .prop_flat_map(|sz| (
                    arb_with_sizes(4, sz.clone()),
                    arb_with_sizes(4, sz.clone()),
                    arb_with_sizes(4, sz),
                ))
        ) {
            prop_assert!(diagram_dominance_leq(&a, &a));
            if diagram_dominance_leq(&a, &b) && diagram_dominance_leq(&b, &a) {
                prop_assert_eq!(&a, &b);
            }
            if diagram_dominance_leq(&a, &b) && diagram_dominance_leq(&b, &c) {
                prop_assert!(diagram_dominance_leq(&a, &c));
            }
        }
    }
}
