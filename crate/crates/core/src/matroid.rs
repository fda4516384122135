//! Schubert matroids and the column-word statistic that computes their rank.

use std::fmt;

use crate::diagram::{set_dominance_leq, Diagram};
use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND_SET};

/// Default cap on the number of bases enumerated in one call.
pub const DEFAULT_BASIS_CAP: usize = 10_000_000;

/// `SM_n(s_1, ..., s_r)`: ground set `[n]`, bases are the `r`-sets
/// `{a_1 < ... < a_r}` with `a_k <= s_k` for every `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchubertMatroid {
    n: usize,
    defining: Subset,
}

impl SchubertMatroid {
    pub fn new(n: usize, defining: Subset) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::malformed(format!(
                "ground set size {n} exceeds the supported maximum {MAX_GROUND_SET}"
            )));
        }
        if !defining.is_subset_of(Subset::full(n)) {
            return Err(Error::malformed(format!("defining set {defining} is not inside [1, {n}]")));
        }
        Ok(SchubertMatroid { n, defining })
    }

    /// The matroid of column `j` of `d`.
    pub fn of_column(d: &Diagram, j: usize) -> Self {
        SchubertMatroid { n: d.n(), defining: d.column(j) }
    }

    /// One matroid per column of `d`.
    pub fn columns_of(d: &Diagram) -> Vec<SchubertMatroid> {
        (1..=d.n()).map(|j| SchubertMatroid::of_column(d, j)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn defining_set(&self) -> Subset {
        self.defining
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        self.defining.len()
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        set_dominance_leq(b, self.defining)
    }

    pub fn bases(&self) -> Result<Vec<Subset>> {
        self.bases_with_cap(DEFAULT_BASIS_CAP)
    }

    /// All bases, in lexicographic order of their sorted element lists.
    pub fn bases_with_cap(&self, cap: usize) -> Result<Vec<Subset>> {
        let bounds = self.defining.to_vec();
        let mut out = Vec::new();
        extend_bases(&bounds, 0, 1, Subset::EMPTY, cap, &mut out)?;
        Ok(out)
    }

    /// `max |S ∩ B|` over all bases `B`, by enumeration.
    pub fn rank_bruteforce(&self, s: Subset) -> Result<usize> {
        Ok(self
            .bases()?
            .into_iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0))
    }

    /// Rank of `s` read off the column word of the defining set.
    pub fn theta_rank(&self, s: Subset) -> usize {
        theta_of_column(self.n, self.defining, s)
    }
}

fn extend_bases(
    bounds: &[usize],
    k: usize,
    next_min: usize,
    acc: Subset,
    cap: usize,
    out: &mut Vec<Subset>,
) -> Result<()> {
    if k == bounds.len() {
        if out.len() >= cap {
            return Err(Error::CapExceeded { what: "basis count", cap: cap as u64 });
        }
        out.push(acc);
        return Ok(());
    }
    for a in next_min..=bounds[k] {
        extend_bases(bounds, k + 1, a + 1, acc.with(a), cap, out)?;
    }
    Ok(())
}

impl fmt::Debug for SchubertMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.defining.iter().map(|e| e.to_string()).collect();
        write!(f, "SM_{}({})", self.n, s.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Open,
    Close,
    Star,
}

impl Symbol {
    fn as_char(self) -> char {
        match self {
            Symbol::Open => '(',
            Symbol::Close => ')',
            Symbol::Star => '★',
        }
    }
}

/// The word of one column with respect to a row set, with the row each
/// symbol came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnWord {
    pub symbols: Vec<(usize, Symbol)>,
}

impl ColumnWord {
    pub fn star_count(&self) -> usize {
        self.symbols.iter().filter(|(_, s)| *s == Symbol::Star).count()
    }

    /// The matched `(`/`)` pairs as `(open_row, close_row)`. Stars are
    /// transparent to the matching.
    pub fn matched_pairs(&self) -> Vec<(usize, usize)> {
        let mut open = Vec::new();
        let mut pairs = Vec::new();
        for &(row, sym) in &self.symbols {
            match sym {
                Symbol::Open => open.push(row),
                Symbol::Close => {
                    if let Some(o) = open.pop() {
                        pairs.push((o, row));
                    }
                }
                Symbol::Star => {}
            }
        }
        pairs
    }

    /// Matched pairs plus stars.
    pub fn theta(&self) -> usize {
        // counting form of matched_pairs
        let (mut open, mut pairs, mut stars) = (0usize, 0usize, 0usize);
        for &(_, sym) in &self.symbols {
            match sym {
                Symbol::Open => open += 1,
                Symbol::Close if open > 0 => {
                    open -= 1;
                    pairs += 1;
                }
                Symbol::Close => {}
                Symbol::Star => stars += 1,
            }
        }
        pairs + stars
    }
}

impl fmt::Display for ColumnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|(_, s)| write!(f, "{}", s.as_char()))
    }
}

/// The word of a column `column ⊆ [n]` with respect to `rows`, read top to
/// bottom: `(` for a non-cell in `rows`, `)` for a cell outside `rows`,
/// `★` for a cell in `rows`.
pub fn word_of_column(n: usize, column: Subset, rows: Subset) -> ColumnWord {
    let symbols = (1..=n)
        .filter_map(|i| match (column.contains(i), rows.contains(i)) {
            (false, true) => Some((i, Symbol::Open)),
            (true, false) => Some((i, Symbol::Close)),
            (true, true) => Some((i, Symbol::Star)),
            (false, false) => None,
        })
        .collect();
    ColumnWord { symbols }
}

fn theta_of_column(n: usize, column: Subset, rows: Subset) -> usize {
    word_of_column(n, column, rows).theta()
}

/// The word of column `j` of `d` with respect to `rows`.
pub fn column_word(d: &Diagram, j: usize, rows: Subset) -> ColumnWord {
    word_of_column(d.n(), d.column(j), rows)
}

pub fn theta_column(d: &Diagram, j: usize, rows: Subset) -> usize {
    theta_of_column(d.n(), d.column(j), rows)
}

/// Sum of [`theta_column`] over all columns.
pub fn theta(d: &Diagram, rows: Subset) -> usize {
    d.columns().iter().map(|&c| theta_of_column(d.n(), c, rows)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Permutation;
    use crate::diagram::rothe;

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    fn sm(n: usize, s: &[usize]) -> SchubertMatroid {
        SchubertMatroid::new(n, set(s)).unwrap()
    }

    fn d010() -> Diagram {
        Diagram::from_columns(vec![Subset::EMPTY, set(&[2]), Subset::EMPTY]).unwrap()
    }

    #[test]
    fn bases_examples() {
        assert_eq!(sm(3, &[1, 3]).bases().unwrap(), vec![set(&[1, 2]), set(&[1, 3])]);
        assert_eq!(sm(4, &[]).bases().unwrap(), vec![Subset::EMPTY]);
        assert_eq!(sm(3, &[3]).bases().unwrap(), vec![set(&[1]), set(&[2]), set(&[3])]);
    }

    #[test]
    fn bases_match_dominance_filter() {
        for n in 0..=6 {
            for s in Subset::all(n) {
                let m = SchubertMatroid::new(n, s).unwrap();
                let filtered: Vec<_> = Subset::of_size(n, s.len())
                    .filter(|&b| set_dominance_leq(b, s))
                    .collect();
                let mut got = m.bases().unwrap();
                got.sort();
                assert_eq!(got, filtered, "{m:?}");
            }
        }
    }

    #[test]
    fn basis_cap_is_enforced() {
        let m = sm(6, &[4, 5, 6]);
        assert!(m.bases_with_cap(20).is_ok());
        assert_eq!(
            m.bases_with_cap(19),
            Err(Error::CapExceeded { what: "basis count", cap: 19 })
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(sm(3, &[2]).rank_bruteforce(set(&[1])).unwrap(), 1);
        assert_eq!(sm(3, &[2]).rank_bruteforce(Subset::EMPTY).unwrap(), 0);
        assert_eq!(sm(3, &[2]).rank_bruteforce(set(&[3])).unwrap(), 0);
    }

    #[test]
    fn rejects_bad_matroids() {
        assert!(SchubertMatroid::new(3, set(&[4])).is_err());
        assert!(SchubertMatroid::new(21, Subset::EMPTY).is_err());
    }

    #[test]
    fn column_word_examples() {
        let d = d010();
        assert_eq!(column_word(&d, 2, set(&[1])).to_string(), "()");
        assert_eq!(column_word(&d, 2, set(&[3])).to_string(), ")(");
        assert_eq!(column_word(&d, 2, set(&[2])).to_string(), "★");
        let tall = Diagram::from_columns(vec![set(&[1, 3, 4]), Subset::EMPTY, Subset::EMPTY, Subset::EMPTY]).unwrap();
        assert_eq!(column_word(&tall, 1, Subset::EMPTY).to_string(), ")))");
    }

    #[test]
    fn theta_examples() {
        let d = d010();
        assert_eq!(theta_column(&d, 2, set(&[1])), 1);
        assert_eq!(theta_column(&d, 2, set(&[3])), 0);
        assert_eq!(theta_column(&d, 2, set(&[2])), 1);
        assert_eq!(theta(&d, set(&[1])), 1);
        assert_eq!(theta(&d, Subset::EMPTY), 0);
        let r = rothe(&"41532".parse::<Permutation>().unwrap()).unwrap();
        assert_eq!(theta(&r, Subset::full(5)), 6);
    }

    #[test]
    fn stars_do_not_block_matching() {
        // rows: 1 '(' , 2 '★', 3 ')'
        let w = word_of_column(3, set(&[2, 3]), set(&[1, 2]));
        assert_eq!(w.to_string(), "(★)");
        assert_eq!(w.matched_pairs(), vec![(1, 3)]);
        assert_eq!(w.theta(), 2);
    }

    #[test]
    fn theta_rank_examples() {
        assert_eq!(sm(3, &[1, 3]).theta_rank(set(&[2, 3])), 1);
        assert_eq!(sm(3, &[1, 3]).rank_bruteforce(set(&[2, 3])).unwrap(), 1);
        assert_eq!(sm(5, &[]).theta_rank(set(&[1, 2, 5])), 0);
        assert_eq!(sm(3, &[2]).theta_rank(set(&[1, 2])), 1);
    }

    #[test]
    fn theta_rank_equals_bruteforce_rank_exhaustively() {
        for n in 0..=6 {
            for s in Subset::all(n) {
                let m = SchubertMatroid::new(n, s).unwrap();
                for i in Subset::all(n) {
                    assert_eq!(m.theta_rank(i), m.rank_bruteforce(i).unwrap(), "{m:?}, I = {i}");
                }
            }
        }
    }

    #[test]
    fn matched_pairs_count_agrees_with_theta() {
        for s in Subset::all(5) {
            for i in Subset::all(5) {
                let w = word_of_column(5, s, i);
                assert_eq!(w.theta(), w.matched_pairs().len() + w.star_count());
            }
        }
    }

    #[test]
    fn basis_chain_endpoint_is_maximal() {
        // Exchanging each matched pair (r1 in I, r2 in column \ I) inside the
        // column yields a basis meeting I in exactly pairs + stars elements.
        for n in 1..=6 {
            for s in Subset::all(n) {
                let m = SchubertMatroid::new(n, s).unwrap();
                for i in Subset::all(n) {
                    let w = word_of_column(n, s, i);
                    let mut b = s;
                    for (r1, r2) in w.matched_pairs() {
                        b = b.without(r2).with(r1);
                        assert!(m.is_basis(b), "{m:?}, I = {i}, B = {b}");
                    }
                    assert_eq!(b.intersection(i).len(), w.theta());
                    assert_eq!(w.theta(), m.rank_bruteforce(i).unwrap());
                }
            }
        }
    }
}
