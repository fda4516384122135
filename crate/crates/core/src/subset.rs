//! Subsets of a small ground set `[n] = {1, ..., n}` packed into a machine word.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground-set size accepted anywhere in the crate. Sweeps iterate
/// over all `2^n` subsets, so this is a practical limit rather than a
/// representational one.
pub const MAX_GROUND_SET: usize = 20;

/// A subset of `[n]`; element `i` is stored in bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `[n]` itself.
    pub fn full(n: usize) -> Self {
        debug_assert!(n < 32);
        Subset(((1u64 << n) - 1) as u32)
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || hi == 0 {
            return Subset::EMPTY;
        }
        let lo = lo.max(1);
        Subset(Subset::full(hi).0 & !Subset::full(lo - 1).0)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=32).contains(&i));
        Subset(1 << (i - 1))
    }

    /// Builds a subset of `[n]`, rejecting elements outside the range.
    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elems: I) -> Result<Self> {
        let mut s = Subset::EMPTY;
        for e in elems {
            if e == 0 || e > n {
                return Err(Error::malformed(format!("element {e} is not in [1, {n}]")));
            }
            s = s.with(e);
        }
        Ok(s)
    }

    /// Parses a comma-separated element list such as `"1,3"`; the empty
    /// string is the empty set.
    pub fn parse_in(n: usize, s: &str) -> Result<Self> {
        let elems = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| Error::malformed(format!("bad element {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Subset::from_elements(n, elems)
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 32 && self.0 & (1 << (i - 1)) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1 << (i - 1)))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// `[n] \ self`.
    pub fn complement(self, n: usize) -> Self {
        Subset(Subset::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `2^n` subsets of `[n]` in increasing bit order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..(1u64 << n)).map(|b| Subset(b as u32))
    }

    /// All nonempty subsets of `[n]`.
    pub fn nonempty(n: usize) -> impl Iterator<Item = Subset> {
        (1..(1u64 << n)).map(|b| Subset(b as u32))
    }

    /// All `k`-element subsets of `[n]`.
    pub fn of_size(n: usize, k: usize) -> impl Iterator<Item = Subset> {
        Subset::all(n).filter(move |s| s.len() == k)
    }
}

/// Iterator over the elements of a [`Subset`].
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_ascend() {
        let s: Subset = [5, 1, 3].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.max(), Some(5));
        assert_eq!(Subset::EMPTY.max(), None);
    }

    #[test]
    fn interval_and_complement() {
        assert_eq!(Subset::interval(2, 4).to_vec(), vec![2, 3, 4]);
        assert!(Subset::interval(3, 2).is_empty());
        assert_eq!(Subset::interval(2, 4).complement(5).to_vec(), vec![1, 5]);
        assert_eq!(Subset::full(0), Subset::EMPTY);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Subset::from_elements(3, [0]).is_err());
        assert!(Subset::from_elements(3, [4]).is_err());
        assert_eq!(Subset::from_elements(3, [3, 1]).unwrap().to_vec(), vec![1, 3]);
    }

    #[test]
    fn parses_lists() {
        assert_eq!(Subset::parse_in(3, "1,3").unwrap().to_vec(), vec![1, 3]);
        assert_eq!(Subset::parse_in(3, "").unwrap(), Subset::EMPTY);
        assert!(Subset::parse_in(3, "1,4").is_err());
        assert!(Subset::parse_in(3, "a").is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(Subset::all(4).count(), 16);
        assert_eq!(Subset::nonempty(4).count(), 15);
        assert_eq!(Subset::of_size(5, 2).count(), 10);
    }
}
