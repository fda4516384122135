//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::WeightVector;

/// A polynomial in `x_1, ..., x_n` over the integers.
///
/// Terms are kept in a map from exponent vector to coefficient; zero
/// coefficients are never stored and every exponent vector has length `n`.
/// `n = 0` is allowed and describes constants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<WeightVector, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(WeightVector::zeros(n), BigInt::one())
    }

    /// `x_i` for `1 <= i <= n`.
    pub fn variable(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "variable x{i} out of range for n = {n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(WeightVector::new(e), BigInt::one())
    }

    /// `coeff * x^exp`; the number of variables is `exp.len()`.
    pub fn monomial(exp: WeightVector, coeff: BigInt) -> Self {
        let mut p = Polynomial::zero(exp.len());
        if !coeff.is_zero() {
            p.terms.insert(exp, coeff);
        }
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (WeightVector, BigInt)>,
    {
        let mut p = Polynomial::zero(n);
        for (exp, c) in terms {
            if exp.len() != n {
                return Err(Error::malformed(format!(
                    "exponent vector {exp} has length {}, expected {n}",
                    exp.len()
                )));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &WeightVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in decreasing graded-lex order, the canonical output order.
    pub fn terms_grlex(&self) -> Vec<(&WeightVector, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    /// Exponent vectors of the nonzero terms.
    pub fn support(&self) -> BTreeSet<WeightVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(WeightVector::total).max()
    }

    pub(crate) fn add_term(&mut self, exp: WeightVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Polynomial {
        self.check_adjacent(i);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.entries_mut().swap(i - 1, i);
                (e, c.clone())
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// `x_i * f`.
    pub fn mul_var(&self, i: usize) -> Polynomial {
        assert!((1..=self.n).contains(&i), "variable x{i} out of range for n = {}", self.n);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.entries_mut()[i - 1] += 1;
                (e, c.clone())
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    pub(crate) fn check_adjacent(&self, i: usize) {
        assert!(
            i >= 1 && i < self.n,
            "index {i} needs at least {} variables, polynomial has {}",
            i + 1,
            self.n
        );
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            n: self.n,
            terms: self
                .terms_grlex()
                .into_iter()
                .map(|(e, c)| TermJson { exp: e.entries().to_vec(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        let terms = json
            .terms
            .iter()
            .map(|t| {
                let c: BigInt = t
                    .coeff
                    .parse()
                    .map_err(|_| Error::malformed(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((WeightVector::new(t.exp.clone()), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(json.n, terms)
    }
}

/// Wire form: `{"n": int, "terms": [{"exp": [ints], "coeff": "int"}]}` with
/// terms in decreasing graded-lex order and coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = Polynomial::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[n={}]({self})", self.n)
    }
}

/// Human notation, e.g. `x1^2*x2 + x1*x2^2 - 3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms_grlex().into_iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
