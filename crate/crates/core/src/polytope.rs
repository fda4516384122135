//! Generalized permutahedra given by subset bounds, and their lattice points.
//!
//! A [`GeneralizedPermutahedron`] stores one integer `z_I` per nonempty
//! `I ⊆ [n]` in upper-bound form:
//!
//! ```text
//! { t in R^n, t >= 0 : sum_{i in I} t_i <= z_I for I != [n], sum_i t_i = z_[n] }
//! ```
//!
//! The lower-bound parametrization `sum_{i in I} t_i >= w_I` describes the
//! same polytope with `w_I = z_[n] - z_{[n] \ I}`; see
//! [`GeneralizedPermutahedron::lower_bounds`].

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::matroid::{theta, SchubertMatroid, DEFAULT_BASIS_CAP};
use crate::subset::{Subset, MAX_GROUND_SET};
use crate::weight::WeightVector;

/// Default cap on the number of lattice points produced by one enumeration.
pub const DEFAULT_POINT_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedPermutahedron {
    n: usize,
    /// Indexed by subset bits; entry 0 (the empty set) is always 0.
    z: Vec<i64>,
}

impl GeneralizedPermutahedron {
    /// Evaluates `bound` on every nonempty subset of `[n]`.
    pub fn from_fn(n: usize, mut bound: impl FnMut(Subset) -> i64) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::malformed(format!(
                "dimension {n} exceeds the supported maximum {MAX_GROUND_SET}"
            )));
        }
        let mut z = vec![0; 1 << n];
        for s in Subset::nonempty(n) {
            z[s.bits() as usize] = bound(s);
        }
        Ok(GeneralizedPermutahedron { n, z })
    }

    /// The single point `0` in `R^n`.
    pub fn origin(n: usize) -> Self {
        GeneralizedPermutahedron { n, z: vec![0; 1 << n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `z_I`; 0 for the empty set.
    pub fn bound(&self, s: Subset) -> i64 {
        self.z[s.bits() as usize]
    }

    /// `z_[n]`, the common coordinate sum.
    pub fn total(&self) -> i64 {
        self.z[Subset::full(self.n).bits() as usize]
    }

    /// `w_I = z_[n] - z_{[n] \ I}` for every nonempty `I`, the parameters of
    /// the same polytope written with lower bounds `sum_{i in I} t_i >= w_I`.
    pub fn lower_bounds(&self) -> Vec<(Subset, i64)> {
        Subset::nonempty(self.n)
            .map(|s| (s, self.total() - self.bound(s.complement(self.n))))
            .collect()
    }

    pub fn is_monotone(&self) -> bool {
        Subset::all(self.n).all(|s| {
            s.complement(self.n)
                .iter()
                .all(|i| self.bound(s) <= self.bound(s.with(i)))
        })
    }

    /// Checks `z(S+i) + z(S+j) >= z(S+i+j) + z(S)` for all `S` and distinct
    /// `i, j` outside `S`, which is equivalent to submodularity.
    pub fn is_submodular(&self) -> bool {
        Subset::all(self.n).all(|s| {
            let out = s.complement(self.n).to_vec();
            out.iter().enumerate().all(|(a, &i)| {
                out[a + 1..].iter().all(|&j| {
                    self.bound(s.with(i)) + self.bound(s.with(j))
                        >= self.bound(s.with(i).with(j)) + self.bound(s)
                })
            })
        })
    }

    fn check_rank_like(self, what: &str) -> Result<Self> {
        if !self.is_monotone() || !self.is_submodular() {
            return Err(Error::Internal(format!("{what} bounds are not monotone and submodular")));
        }
        Ok(self)
    }

    /// Whether `t` satisfies every defining constraint.
    pub fn contains(&self, t: &WeightVector) -> bool {
        let full = Subset::full(self.n);
        t.len() == self.n
            && t.sum_over(full) as i64 == self.total()
            && Subset::nonempty(self.n).all(|s| s == full || t.sum_over(s) as i64 <= self.bound(s))
    }

    pub fn lattice_points(&self) -> Result<LatticePointSet> {
        self.lattice_points_with_cap(DEFAULT_POINT_CAP)
    }

    /// All integer points, by depth-first search over coordinates `1..n`.
    ///
    /// When coordinate `k` is set, every constraint on a subset of `[k]`
    /// containing `k` is checked against running subset sums, so no
    /// constraint is checked twice. The prefix sum is also kept within
    /// `[z_[n] - z_{[n]\[k]}, z_[n]]`, and the last coordinate is forced by
    /// the equality.
    pub fn lattice_points_with_cap(&self, cap: usize) -> Result<LatticePointSet> {
        let mut points = BTreeSet::new();
        let total = self.total();
        if total < 0 {
            return Ok(LatticePointSet { n: self.n, points });
        }
        if self.n == 0 {
            points.insert(WeightVector::zeros(0));
            return Ok(LatticePointSet { n: 0, points });
        }
        let mut search = PointSearch {
            gp: self,
            total,
            sums: vec![0; 1 << self.n],
            t: vec![0; self.n],
            cap,
            out: &mut points,
        };
        search.descend(1)?;
        Ok(LatticePointSet { n: self.n, points })
    }

    pub fn to_json(&self) -> GpJson {
        let mut subsets: Vec<Subset> = Subset::nonempty(self.n).collect();
        subsets.sort_by_key(|s| (s.len(), s.to_vec()));
        GpJson {
            n: self.n,
            z: subsets
                .into_iter()
                .map(|s| BoundJson { subset: s.to_vec(), z: self.bound(s) })
                .collect(),
        }
    }

    pub fn from_json(json: &GpJson) -> Result<Self> {
        if json.n > MAX_GROUND_SET {
            return Err(Error::malformed(format!("dimension {} is too large", json.n)));
        }
        let mut z = vec![None; 1 << json.n];
        z[0] = Some(0);
        for b in &json.z {
            let s = Subset::from_elements(json.n, b.subset.iter().copied())?;
            if s.is_empty() || z[s.bits() as usize].replace(b.z).is_some() {
                return Err(Error::malformed(format!("bad or repeated subset {s}")));
            }
        }
        let z = z
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::malformed("every nonempty subset needs a bound"))?;
        Ok(GeneralizedPermutahedron { n: json.n, z })
    }
}

struct PointSearch<'a> {
    gp: &'a GeneralizedPermutahedron,
    total: i64,
    sums: Vec<i64>,
    t: Vec<u32>,
    cap: usize,
    out: &'a mut BTreeSet<WeightVector>,
}

impl PointSearch<'_> {
    fn descend(&mut self, k: usize) -> Result<()> {
        let n = self.gp.n;
        let prefix = Subset::full(k - 1);
        let so_far = self.sums[prefix.bits() as usize];
        let (lo, hi) = if k == n {
            let last = self.total - so_far;
            (last, last)
        } else {
            let rest = Subset::interval(k + 1, n);
            let lo = (self.total - self.gp.bound(rest) - so_far).max(0);
            let hi = (self.total - so_far).min(self.gp.bound(Subset::singleton(k)));
            (lo, hi)
        };
        for v in lo..=hi {
            if self.assign(k, v) {
                if k == n {
                    if self.out.len() >= self.cap {
                        return Err(Error::CapExceeded {
                            what: "lattice point count",
                            cap: self.cap as u64,
                        });
                    }
                    self.out.insert(WeightVector::new(self.t.clone()));
                } else {
                    self.descend(k + 1)?;
                }
            }
        }
        Ok(())
    }

    /// Sets `t_k = v`, updates sums of subsets of `[k]` containing `k`, and
    /// reports whether every constraint on those subsets holds.
    fn assign(&mut self, k: usize, v: i64) -> bool {
        if v < 0 {
            return false;
        }
        self.t[k - 1] = v as u32;
        let full = Subset::full(self.gp.n);
        let bit = 1u32 << (k - 1);
        for lower in 0..bit {
            let s = (lower | bit) as usize;
            self.sums[s] = self.sums[lower as usize] + v;
            let subset = Subset::from_bits(s as u32);
            if subset != full && self.sums[s] > self.gp.bound(subset) {
                return false;
            }
        }
        true
    }
}

/// One bound: `{"I": [elements], "z": int}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    #[serde(rename = "I")]
    pub subset: Vec<usize>,
    pub z: i64,
}

/// Wire form: `{"n": int, "z": [...]}` over all nonempty subsets, sorted by
/// size then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GpJson {
    pub n: usize,
    pub z: Vec<BoundJson>,
}

/// A finite set of nonnegative lattice points of a common dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LatticePointSet {
    pub n: usize,
    pub points: BTreeSet<WeightVector>,
}

impl LatticePointSet {
    pub fn new(n: usize, points: BTreeSet<WeightVector>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::malformed(format!("point {p} does not have dimension {n}")));
        }
        Ok(LatticePointSet { n, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &WeightVector) -> bool {
        self.points.contains(p)
    }

    /// `{u + v}` over all pairs.
    pub fn sumset(&self, other: &LatticePointSet) -> LatticePointSet {
        assert_eq!(self.n, other.n, "point sets of different dimensions");
        let points = self
            .points
            .iter()
            .flat_map(|u| other.points.iter().map(move |v| u + v))
            .collect();
        LatticePointSet { n: self.n, points }
    }

    /// Sorted array of vectors.
    pub fn to_json(&self) -> Vec<Vec<u32>> {
        self.points.iter().map(|p| p.entries().to_vec()).collect()
    }
}

/// Bounds `z_I = rank(I)`; the polytope is the convex hull of the basis
/// indicator vectors.
pub fn matroid_polytope(m: &SchubertMatroid) -> Result<GeneralizedPermutahedron> {
    GeneralizedPermutahedron::from_fn(m.n(), |s| m.theta_rank(s) as i64)?.check_rank_like("rank")
}

/// Indicator vectors of the bases of `m`.
pub fn vertices_from_bases(m: &SchubertMatroid) -> Result<LatticePointSet> {
    let points = m
        .bases()?
        .into_iter()
        .map(|b| WeightVector::indicator(m.n(), b))
        .collect();
    Ok(LatticePointSet { n: m.n(), points })
}

/// Adds bounds pointwise.
pub fn minkowski_sum(
    p: &GeneralizedPermutahedron,
    q: &GeneralizedPermutahedron,
) -> Result<GeneralizedPermutahedron> {
    if p.n != q.n {
        return Err(Error::malformed(format!(
            "cannot add polytopes of dimensions {} and {}",
            p.n, q.n
        )));
    }
    Ok(GeneralizedPermutahedron {
        n: p.n,
        z: p.z.iter().zip(&q.z).map(|(a, b)| a + b).collect(),
    })
}

/// The Schubitope of `d`: bounds `z_I = theta_D(I)` and total `#D`.
pub fn schubitope(d: &Diagram) -> Result<GeneralizedPermutahedron> {
    let n = d.n();
    let full = Subset::full(n);
    let boxes = d.box_count() as i64;
    let gp = GeneralizedPermutahedron::from_fn(n, |s| {
        if s == full {
            boxes
        } else {
            theta(d, s) as i64
        }
    })?;
    if n > 0 && theta(d, full) as i64 != boxes {
        return Err(Error::Internal(format!(
            "theta([n]) = {} differs from the box count {boxes}",
            theta(d, full)
        )));
    }
    gp.check_rank_like("theta")
}

pub fn minkowski_lattice_points(ms: &[SchubertMatroid]) -> Result<LatticePointSet> {
    minkowski_lattice_points_with_cap(ms, DEFAULT_POINT_CAP)
}

/// `{sum_j indicator(B_j) : B_j a basis of ms[j]}`.
///
/// The sum is accumulated one matroid at a time with deduplication after
/// each step; `cap` bounds the number of pairs formed in any single step.
/// An empty sequence is the column list of the 0 x 0 diagram and sums to
/// the single point of `R^0`.
pub fn minkowski_lattice_points_with_cap(
    ms: &[SchubertMatroid],
    cap: usize,
) -> Result<LatticePointSet> {
    let n = ms.first().map_or(0, SchubertMatroid::n);
    if ms.iter().any(|m| m.n() != n) {
        return Err(Error::malformed("matroids on different ground sets"));
    }
    let mut acc: HashSet<WeightVector> = HashSet::from([WeightVector::zeros(n)]);
    for m in ms {
        if m.defining_set().is_empty() {
            continue;
        }
        let vertices: Vec<WeightVector> = m
            .bases_with_cap(DEFAULT_BASIS_CAP.min(cap))?
            .into_iter()
            .map(|b| WeightVector::indicator(n, b))
            .collect();
        if acc.len().saturating_mul(vertices.len()) > cap {
            return Err(Error::CapExceeded { what: "Minkowski sum size", cap: cap as u64 });
        }
        acc = acc
            .iter()
            .flat_map(|u| vertices.iter().map(move |v| u + v))
            .collect();
    }
    Ok(LatticePointSet { n, points: acc.into_iter().collect() })
}
