//! Divided difference and Demazure operators, and the Schubert and key
//! polynomials they generate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::permutation::{Composition, Permutation};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::weight::WeightVector;

/// Which index to use when a recursion step has several valid choices.
/// The result never depends on it; the choice exists so that claim can be
/// tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChoicePolicy {
    #[default]
    Smallest,
    Largest,
}

impl ChoicePolicy {
    fn pick(self, candidates: &[usize]) -> Option<usize> {
        match self {
            ChoicePolicy::Smallest => candidates.first().copied(),
            ChoicePolicy::Largest => candidates.last().copied(),
        }
    }
}

fn check_index(f: &Polynomial, i: usize) -> Result<()> {
    if i == 0 || i >= f.num_vars() {
        return Err(Error::malformed(format!(
            "operator index {i} needs 1 <= i < n, polynomial has n = {}",
            f.num_vars()
        )));
    }
    Ok(())
}

/// Exact quotient of `g` by `x_i - x_{i+1}`.
///
/// Synthetic division with `x_i` as the main variable, the remaining
/// variables forming the coefficient ring, and the root `x_i = x_{i+1}`.
/// A nonzero remainder is an [`Error::Internal`].
pub fn divide_by_adjacent_difference(g: &Polynomial, i: usize) -> Result<Polynomial> {
    check_index(g, i)?;
    let n = g.num_vars();
    // coefficient of x_i^k, as a polynomial free of x_i
    let mut by_power: BTreeMap<u32, Polynomial> = BTreeMap::new();
    for (e, c) in g.terms() {
        let k = e[i - 1];
        let mut rest = e.clone();
        rest.entries_mut()[i - 1] = 0;
        by_power
            .entry(k)
            .or_insert_with(|| Polynomial::zero(n))
            .add_term(rest, c.clone());
    }
    let Some(&top) = by_power.keys().next_back() else {
        return Ok(Polynomial::zero(n));
    };

    let mut quotient = Polynomial::zero(n);
    let mut carry = Polynomial::zero(n);
    for k in (1..=top).rev() {
        carry = match by_power.get(&k) {
            Some(ck) => ck + &carry.mul_var(i + 1),
            None => carry.mul_var(i + 1),
        };
        for (e, c) in carry.terms() {
            let mut e = e.clone();
            e.entries_mut()[i - 1] = k - 1;
            quotient.add_term(e, c.clone());
        }
    }
    let shifted = carry.mul_var(i + 1);
    let remainder = match by_power.get(&0) {
        Some(c0) => c0 + &shifted,
        None => shifted,
    };
    if !remainder.is_zero() {
        return Err(Error::Internal(format!(
            "division by x{i} - x{} left remainder {remainder}",
            i + 1
        )));
    }
    Ok(quotient)
}

/// `(f - s_i f) / (x_i - x_{i+1})`.
pub fn divided_difference(f: &Polynomial, i: usize) -> Result<Polynomial> {
    check_index(f, i)?;
    divide_by_adjacent_difference(&(f - &f.swap_vars(i)), i)
}

/// The Demazure operator `f -> divided_difference(x_i f, i)`.
pub fn demazure(f: &Polynomial, i: usize) -> Result<Polynomial> {
    check_index(f, i)?;
    divided_difference(&f.mul_var(i), i)
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`, the Schubert polynomial of `w_0`.
pub fn staircase(n: usize) -> Polynomial {
    let exp = (0..n).map(|k| (n - 1 - k) as u32).collect();
    Polynomial::monomial(WeightVector::new(exp), BigInt::one())
}

/// Schubert polynomial of `w` in `n = w.len()` variables.
pub fn schubert(w: &Permutation) -> Result<Polynomial> {
    schubert_with(w, ChoicePolicy::Smallest)
}

/// Schubert polynomial of `w`, choosing among valid ascents by `policy`.
///
/// Climbs from `w` to `w_0` by right multiplication with `s_i` at ascents,
/// then applies the matching divided differences to the staircase monomial
/// in reverse order.
pub fn schubert_with(w: &Permutation, policy: ChoicePolicy) -> Result<Polynomial> {
    let mut path = Vec::new();
    let mut v = w.clone();
    while let Some(i) = policy.pick(&v.ascents()) {
        path.push(i);
        v = v.right_mul_transposition(i);
    }
    debug_assert_eq!(v, Permutation::longest(w.len()));
    let mut f = staircase(w.len());
    for &i in path.iter().rev() {
        f = divided_difference(&f, i)?;
    }
    Ok(f)
}

/// Key polynomial of `alpha` in `alpha.grid_size()` variables.
pub fn key(alpha: &Composition) -> Result<Polynomial> {
    key_with(alpha, ChoicePolicy::Smallest)
}

/// Key polynomial of `alpha`, choosing among valid ascents by `policy`.
///
/// Sorts `alpha` into a partition by swapping ascents `alpha_i < alpha_{i+1}`,
/// then applies the matching Demazure operators to `x^partition` in reverse
/// order.
pub fn key_with(alpha: &Composition, policy: ChoicePolicy) -> Result<Polynomial> {
    let n = alpha.grid_size();
    let mut parts: Vec<u32> = (1..=n).map(|i| alpha.part(i)).collect();
    let mut path = Vec::new();
    loop {
        let ascents: Vec<usize> = (1..n).filter(|&i| parts[i - 1] < parts[i]).collect();
        let Some(i) = policy.pick(&ascents) else { break };
        path.push(i);
        parts.swap(i - 1, i);
    }
    let mut f = Polynomial::monomial(WeightVector::new(parts), BigInt::one());
    for &i in path.iter().rev() {
        f = demazure(&f, i)?;
    }
    Ok(f)
}
