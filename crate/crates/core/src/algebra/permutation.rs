//! Permutations in one-line notation and compositions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        if n == 0 {
            return Err(Error::malformed("a permutation needs at least one entry"));
        }
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::malformed(format!(
                    "{one_line:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Number of pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Positions `i` with `w(i) < w(i+1)`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] < self.0[i]).collect()
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    #[must_use]
    pub fn right_mul_transposition(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

/// Parses `"41532"` (digits, only when n <= 9) or `"4,1,5,3,2"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let one_line = if s.contains(',') {
            parse_list(s)?
        } else {
            if s.len() > 9 {
                return Err(Error::malformed(
                    "digit-string permutations are limited to n <= 9; use commas",
                ));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::malformed(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(one_line)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// A finite sequence of nonnegative integers; trailing zeros are allowed
/// and ignored by everything that depends only on the composition itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `alpha_i` (1-based); zero past the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Index of the last nonzero part, 0 if there is none.
    pub fn last_nonzero(&self) -> usize {
        self.0.iter().rposition(|&a| a != 0).map_or(0, |p| p + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.last_nonzero() == 0
    }

    /// The grid size `max{l, alpha_1, ..., alpha_l}` used for key
    /// polynomials and skyline diagrams; 0 for the zero composition.
    pub fn grid_size(&self) -> usize {
        let l = self.last_nonzero();
        self.0[..l].iter().map(|&a| a as usize).fold(l, usize::max)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    /// All compositions of length exactly `len` with every part in
    /// `0..=max_part`, in lexicographic order.
    pub fn all_bounded(max_part: u32, len: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; len];
        loop {
            out.push(Composition(cur.clone()));
            let Some(pos) = (0..len).rev().find(|&p| cur[p] < max_part) else {
                break;
            };
            cur[pos] += 1;
            for c in &mut cur[pos + 1..] {
                *c = 0;
            }
        }
        out
    }
}

/// Parses `"3,2,1,0,1"`; the empty string is the empty composition.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::malformed(format!("bad composition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::malformed(format!("bad integer {p:?}")))
        })
        .collect()
}
