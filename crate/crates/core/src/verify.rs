//! Exhaustive checks that supports, Schubitope lattice points, Minkowski
//! sums of column matroid polytopes, and dual characters all agree.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    divided_difference, key, key_with, schubert, schubert_with, ChoicePolicy, Composition,
    Permutation, Polynomial,
};
use crate::diagram::{rothe, skyline, Diagram};
use crate::error::{Error, Result};
use crate::matroid::{theta_column, SchubertMatroid};
use crate::polytope::{
    matroid_polytope, minkowski_lattice_points_with_cap, schubitope, vertices_from_bases,
    GeneralizedPermutahedron, DEFAULT_POINT_CAP,
};
use crate::subset::Subset;
use crate::weight::WeightVector;
use crate::weyl::{chi_character_with, chi_support_with, CharacterLimits};

/// Outcome of comparing a polynomial with a candidate Newton polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnpReport {
    pub support_in_polytope: bool,
    pub polytope_in_support: bool,
    pub coefficients_positive: bool,
    /// Support points violating the polytope's inequalities.
    pub outside_polytope: Vec<WeightVector>,
    /// Lattice points of the polytope with zero coefficient.
    pub missing_from_support: Vec<WeightVector>,
    /// Exponents whose coefficient is not positive.
    pub nonpositive: Vec<WeightVector>,
}

impl SnpReport {
    pub fn holds(&self) -> bool {
        self.support_in_polytope && self.polytope_in_support && self.coefficients_positive
    }
}

/// Checks that the support of `f` is exactly the lattice point set of `p`
/// and that every coefficient is positive.
pub fn verify_snp(f: &Polynomial, p: &GeneralizedPermutahedron) -> Result<SnpReport> {
    verify_snp_with_cap(f, p, DEFAULT_POINT_CAP)
}

/// [`verify_snp`] with an explicit lattice point cap.
pub fn verify_snp_with_cap(
    f: &Polynomial,
    p: &GeneralizedPermutahedron,
    point_cap: usize,
) -> Result<SnpReport> {
    if f.num_vars() != p.n() {
        return Err(Error::malformed(format!(
            "polynomial in {} variables against a polytope in dimension {}",
            f.num_vars(),
            p.n()
        )));
    }
    let support = f.support();
    let points = p.lattice_points_with_cap(point_cap)?.points;
    let outside_polytope: Vec<_> = support.difference(&points).cloned().collect();
    let missing_from_support: Vec<_> = points.difference(&support).cloned().collect();
    let nonpositive: Vec<_> = f
        .terms()
        .filter(|(_, c)| c.sign() != num_bigint::Sign::Plus)
        .map(|(e, _)| e.clone())
        .collect();
    Ok(SnpReport {
        support_in_polytope: outside_polytope.is_empty(),
        polytope_in_support: missing_from_support.is_empty(),
        coefficients_positive: nonpositive.is_empty(),
        outside_polytope,
        missing_from_support,
        nonpositive,
    })
}

/// Aggregate result of a sweep; the JSON form is the report format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub sweep: String,
    pub total: usize,
    pub passed: usize,
    pub failed: Vec<Value>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty() && self.passed == self.total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// Stop at the first counterexample (in corpus order).
    pub fail_fast: bool,
    /// Seed for random corpora; recorded in every report.
    pub seed: u64,
    pub limits: CharacterLimits,
    /// Cap on lattice points and Minkowski sum sizes.
    pub point_cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: None,
            fail_fast: false,
            seed: DEFAULT_SEED,
            limits: CharacterLimits::default(),
            point_cap: DEFAULT_POINT_CAP,
        }
    }
}

pub const DEFAULT_SEED: u64 = 20180425;

/// Runs `check` over `items` in parallel and merges results in corpus
/// order. `check` returns `Ok(None)` on success and `Ok(Some(witness))` for
/// a counterexample; errors (such as caps) abort the sweep.
pub fn run_sweep<T, F>(name: &str, items: &[T], opts: &SweepOptions, check: F) -> Result<SweepReport>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Value>> + Sync,
{
    let start = Instant::now();
    let stop = AtomicBool::new(false);
    let body = || {
        items
            .par_iter()
            .map(|item| {
                if opts.fail_fast && stop.load(Ordering::Relaxed) {
                    return Ok(None);
                }
                let r = check(item);
                if matches!(r, Ok(Some(_)) | Err(_)) {
                    stop.store(true, Ordering::Relaxed);
                }
                r.map(Some)
            })
            .collect::<Vec<Result<Option<Option<Value>>>>>()
    };
    let outcomes = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(body),
        None => body(),
    };

    let mut total = 0;
    let mut passed = 0;
    let mut failed = Vec::new();
    for outcome in outcomes {
        // None: skipped after a fail-fast stop
        let Some(result) = outcome? else { continue };
        total += 1;
        match result {
            None => passed += 1,
            Some(w) => {
                failed.push(w);
                if opts.fail_fast {
                    break;
                }
            }
        }
    }
    if opts.fail_fast && failed.is_empty() {
        total = items.len();
    }
    Ok(SweepReport {
        sweep: name.to_string(),
        total,
        passed,
        failed,
        seed: opts.seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn points_json(points: &BTreeSet<WeightVector>) -> Value {
    json!(points.iter().map(|p| p.entries().to_vec()).collect::<Vec<_>>())
}

/// The triple equality for one diagram and its expected polynomial.
///
/// Compares `support(f)`, the Schubitope lattice points, the Minkowski sum
/// of column matroid polytopes and `{xi^C}`, and runs [`verify_snp`].
fn check_polynomial_against_diagram(
    input: Value,
    f: &Polynomial,
    d: &Diagram,
    opts: &SweepOptions,
) -> Result<Option<Value>> {
    let support = f.support();
    let gp = schubitope(d)?;
    let lattice = gp.lattice_points_with_cap(opts.point_cap)?.points;
    let minkowski =
        minkowski_lattice_points_with_cap(&SchubertMatroid::columns_of(d), opts.point_cap)?.points;
    let chi = chi_support_with(d, &opts.limits)?.points;
    let snp = verify_snp_with_cap(f, &gp, opts.point_cap)?;
    if support == lattice && support == chi && support == minkowski && snp.holds() {
        return Ok(None);
    }
    Ok(Some(json!({
        "input": input,
        "diagram": d.to_json(),
        "support": points_json(&support),
        "schubitope_lattice_points": points_json(&lattice),
        "minkowski_lattice_points": points_json(&minkowski),
        "chi_support": points_json(&chi),
        "snp": snp,
    })))
}

/// Every `w` in `S_n`: `support(S_w) = lattice points of the Schubitope of
/// D(w) = {xi^C : C <= D(w)}`, with SNP and positivity.
pub fn sweep_schubert(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let perms = Permutation::all(n);
    run_sweep(&format!("schubert-n{n}"), &perms, opts, |w| {
        let f = schubert(w)?;
        check_polynomial_against_diagram(json!(w.to_string()), &f, &rothe(w)?, opts)
    })
}

/// Every composition with parts `<= max_part` and length `<= max_len`: the
/// same triple equality for `key(alpha)` and the skyline diagram.
pub fn sweep_key(max_part: u32, max_len: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let comps = Composition::all_bounded(max_part, max_len);
    run_sweep(&format!("key-p{max_part}-l{max_len}"), &comps, opts, |a| {
        let f = key(a)?;
        check_polynomial_against_diagram(json!(a.parts()), &f, &skyline(a)?, opts)
    })
}

fn character_check(
    input: Value,
    expected: &Polynomial,
    d: &Diagram,
    opts: &SweepOptions,
) -> Result<Option<Value>> {
    let chi = chi_character_with(d, &opts.limits)?;
    let snp = verify_snp_with_cap(&chi, &schubitope(d)?, opts.point_cap)?;
    if &chi == expected && snp.holds() {
        return Ok(None);
    }
    Ok(Some(json!({
        "input": input,
        "expected": expected.to_json(),
        "character": chi.to_json(),
        "snp": snp,
    })))
}

/// `chi_{D(w)} = S_w` coefficientwise for every `w` in `S_n`.
pub fn sweep_schubert_characters(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let perms = Permutation::all(n);
    run_sweep(&format!("schubert-character-n{n}"), &perms, opts, |w| {
        character_check(json!(w.to_string()), &schubert(w)?, &rothe(w)?, opts)
    })
}

/// `chi_{D(alpha)} = key(alpha)` coefficientwise.
pub fn sweep_key_characters(max_part: u32, max_len: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let comps = Composition::all_bounded(max_part, max_len);
    run_sweep(&format!("key-character-p{max_part}-l{max_len}"), &comps, opts, |a| {
        character_check(json!(a.parts()), &key(a)?, &skyline(a)?, opts)
    })
}

/// Checks `theta_column(D, j, I) = rank_j(I)` for every column and every
/// row set, with ranks computed by basis enumeration.
pub fn check_theta_rank(d: &Diagram) -> Result<Option<Value>> {
    let n = d.n();
    for j in 1..=n {
        let bases = SchubertMatroid::of_column(d, j).bases()?;
        for rows in Subset::all(n) {
            let rank = bases.iter().map(|b| b.intersection(rows).len()).max().unwrap_or(0);
            let theta = theta_column(d, j, rows);
            if theta != rank {
                return Ok(Some(json!({
                    "diagram": d.to_json(),
                    "column": j,
                    "I": rows.to_vec(),
                    "theta": theta,
                    "rank": rank,
                    "word": crate::matroid::column_word(d, j, rows).to_string(),
                })));
            }
        }
    }
    Ok(None)
}

pub fn sweep_theta_rank(name: &str, corpus: &[Diagram], opts: &SweepOptions) -> Result<SweepReport> {
    run_sweep(name, corpus, opts, check_theta_rank)
}

/// `lattice_points(P(M)) = vertices_from_bases(M)` for every Schubert
/// matroid on `[n']`, `n' <= max_n`.
pub fn sweep_matroid_polytopes(max_n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let matroids: Vec<SchubertMatroid> = (0..=max_n)
        .flat_map(|n| Subset::all(n).map(move |s| SchubertMatroid::new(n, s)))
        .collect::<Result<_>>()?;
    run_sweep(&format!("matroid-polytope-n{max_n}"), &matroids, opts, |m| {
        let lattice = matroid_polytope(m)?.lattice_points_with_cap(opts.point_cap)?;
        let vertices = vertices_from_bases(m)?;
        Ok((lattice != vertices).then(|| {
            json!({
                "n": m.n(),
                "s": m.defining_set().to_vec(),
                "lattice_points": lattice.to_json(),
                "vertices": vertices.to_json(),
            })
        }))
    })
}

/// `schubert` and `key` with smallest- and largest-index recursion choices
/// agree.
pub fn sweep_choice_independence(n: usize, max_part: u32, max_len: usize, opts: &SweepOptions) -> Result<SweepReport> {
    enum Item {
        Perm(Permutation),
        Comp(Composition),
    }
    let items: Vec<Item> = Permutation::all(n)
        .into_iter()
        .map(Item::Perm)
        .chain(Composition::all_bounded(max_part, max_len).into_iter().map(Item::Comp))
        .collect();
    run_sweep("choice-independence", &items, opts, |item| {
        let (input, a, b) = match item {
            Item::Perm(w) => (
                json!(w.to_string()),
                schubert_with(w, ChoicePolicy::Smallest)?,
                schubert_with(w, ChoicePolicy::Largest)?,
            ),
            Item::Comp(c) => (
                json!(c.parts()),
                key_with(c, ChoicePolicy::Smallest)?,
                key_with(c, ChoicePolicy::Largest)?,
            ),
        };
        Ok((a != b).then(|| json!({"input": input, "smallest": a.to_json(), "largest": b.to_json()})))
    })
}

/// Checks `d_i d_i = 0` and `d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}` on
/// seeded random sparse polynomials.
pub fn sweep_operator_relations(
    count: usize,
    max_vars: usize,
    max_degree: u32,
    opts: &SweepOptions,
) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let polys: Vec<Polynomial> = (0..count)
        .map(|_| random_polynomial(&mut rng, max_vars, max_degree))
        .collect();
    run_sweep("operator-relations", &polys, opts, |f| {
        let n = f.num_vars();
        for i in 1..n {
            let dd = divided_difference(&divided_difference(f, i)?, i)?;
            if !dd.is_zero() {
                return Ok(Some(json!({"poly": f.to_json(), "relation": "square", "i": i})));
            }
            if i + 1 < n {
                let d = |g: &Polynomial, k| divided_difference(g, k);
                let lhs = d(&d(&d(f, i)?, i + 1)?, i)?;
                let rhs = d(&d(&d(f, i + 1)?, i)?, i + 1)?;
                if lhs != rhs {
                    return Ok(Some(json!({"poly": f.to_json(), "relation": "braid", "i": i})));
                }
            }
        }
        Ok(None)
    })
}

fn random_polynomial(rng: &mut ChaCha8Rng, max_vars: usize, max_degree: u32) -> Polynomial {
    let n = rng.gen_range(2..=max_vars.max(2));
    let terms = rng.gen_range(1..=6);
    let mut f = Polynomial::zero(n);
    for _ in 0..terms {
        let mut budget = rng.gen_range(0..=max_degree);
        let mut exp = vec![0u32; n];
        while budget > 0 {
            exp[rng.gen_range(0..n)] += 1;
            budget -= 1;
        }
        let c: i64 = rng.gen_range(-9..=9);
        f.add_term(WeightVector::new(exp), c.into());
    }
    f
}

/// Every diagram with a single nonempty-or-empty first column, for each
/// grid size `1..=max_n`: `2^n` diagrams per size.
pub fn one_column_corpus(max_n: usize) -> Vec<Diagram> {
    (1..=max_n)
        .flat_map(|n| {
            Subset::all(n).map(move |s| {
                let mut cols = vec![Subset::EMPTY; n];
                cols[0] = s;
                Diagram::from_columns(cols).expect("column inside the grid")
            })
        })
        .collect()
}

pub fn rothe_corpus(n: usize) -> Vec<Diagram> {
    Permutation::all(n)
        .iter()
        .map(|w| rothe(w).expect("rothe diagrams fit their grid"))
        .collect()
}

pub fn skyline_corpus(max_part: u32, max_len: usize) -> Vec<Diagram> {
    Composition::all_bounded(max_part, max_len)
        .iter()
        .map(|a| skyline(a).expect("skyline diagrams fit their grid"))
        .collect()
}

/// `per_size` diagrams for each grid size in `sizes`, each cell included
/// independently with probability 1/2.
pub fn random_corpus(seed: u64, sizes: std::ops::RangeInclusive<usize>, per_size: usize) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in sizes {
        for _ in 0..per_size {
            let cells: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            out.push(Diagram::from_cells(n, cells).expect("cells inside the grid"));
        }
    }
    out
}

/// One-column diagrams up to `n`, Rothe diagrams of `S_n`, skyline diagrams
/// with parts and length at most 3, and 100 random diagrams for each size
/// 3 to 6.
pub fn standard_theta_corpus(n: usize, seed: u64) -> Vec<Diagram> {
    let mut corpus = one_column_corpus(n);
    corpus.extend(rothe_corpus(n));
    corpus.extend(skyline_corpus(3, 3));
    corpus.extend(random_corpus(seed, 3..=6, 100));
    corpus
}
