//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use schubitope::algebra::{divided_difference, key, schubert, Composition, Permutation, Polynomial};
use schubitope::diagram::{rothe, skyline, set_dominance_leq};
use schubitope::matroid::SchubertMatroid;
use schubitope::polytope::schubitope as build_schubitope;
use schubitope::subset::Subset;
use schubitope::verify::{self, SweepOptions, SweepReport};
use schubitope::weyl::chi_character;

const SEED: u64 = verify::DEFAULT_SEED;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schubitope"))
}

fn stdout_of(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("run schubitope");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

/// Sweep passes with the expected item count inside the time budget.
fn sweep_ok(r: &SweepReport, expected_total: usize, elapsed: Duration, budget: Duration) -> Outcome {
    let ok = r.all_passed() && r.total == expected_total && elapsed <= budget;
    outcome(
        ok,
        format!(
            "{}: {}/{} passed, {} counterexamples, {:.2?} (budget {:?})",
            r.sweep,
            r.passed,
            r.total,
            r.failed.len(),
            elapsed,
            budget
        ),
    )
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn criterion_1() -> Outcome {
    let (c1, rothe_out) = stdout_of(&["rothe", "--perm", "41532"]);
    let (c2, sky_out) = stdout_of(&["skyline", "--comp", "3,2,1,0,1"]);
    let rothe_ok = c1 == 0 && rothe_out.trim() == r#"{"n":5,"columns":[[1],[1,3,4],[1,3],[],[]]}"#;
    let sky_ok = c2 == 0 && sky_out.trim() == r#"{"n":5,"columns":[[1,2,3,5],[1,2],[1],[],[]]}"#;
    outcome(rothe_ok && sky_ok, format!("rothe: {}, skyline: {}", rothe_out.trim(), sky_out.trim()))
}

fn criterion_2() -> Vec<Outcome> {
    let opts = SweepOptions::default();
    let (r5, t5) = timed(|| verify::sweep_schubert(5, &opts).expect("S_5 sweep"));
    let (r6, t6) = timed(|| verify::sweep_schubert(6, &opts).expect("S_6 sweep"));
    vec![
        sweep_ok(&r5, 120, t5, Duration::from_secs(30)),
        sweep_ok(&r6, 720, t6, Duration::from_secs(120)),
    ]
}

fn criterion_3() -> Vec<Outcome> {
    let opts = SweepOptions::default();
    let (r3, t3) = timed(|| verify::sweep_key(3, 3, &opts).expect("key sweep"));
    let (r4, t4) = timed(|| verify::sweep_key(4, 4, &opts).expect("key stretch sweep"));
    vec![
        sweep_ok(&r3, 64, t3, Duration::from_secs(30)),
        sweep_ok(&r4, 625, t4, Duration::from_secs(30)),
    ]
}

fn criterion_4() -> Outcome {
    let corpus = verify::standard_theta_corpus(5, SEED);
    // 62 one-column + 120 Rothe + 64 skyline + 400 random
    let (r, t) = timed(|| verify::sweep_theta_rank("theta-rank", &corpus, &SweepOptions::default()).expect("theta"));
    sweep_ok(&r, 646, t, Duration::from_secs(60))
}

fn criterion_5() -> Vec<Outcome> {
    let opts = SweepOptions::default();
    let (rs, ts) = timed(|| verify::sweep_schubert_characters(4, &opts).expect("schubert characters"));
    let (rk, tk) = timed(|| verify::sweep_key_characters(3, 3, &opts).expect("key characters"));
    vec![
        sweep_ok(&rs, 24, ts, Duration::from_secs(300)),
        sweep_ok(&rk, 64, tk, Duration::from_secs(300)),
    ]
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut check = |label: String, f: Polynomial, d: schubitope::Diagram| {
        let snp = verify::verify_snp(&f, &build_schubitope(&d).expect("schubitope")).expect("snp");
        checked += 1;
        if !(f.all_coefficients_positive() && snp.holds()) {
            bad.push(label);
        }
    };
    for n in 1..=5 {
        for w in Permutation::all(n) {
            let d = rothe(&w).unwrap();
            check(format!("S_{w}"), schubert(&w).unwrap(), d.clone());
            if n <= 4 {
                check(format!("chi D({w})"), chi_character(&d).unwrap(), d);
            }
        }
    }
    for a in Composition::all_bounded(3, 3) {
        let d = skyline(&a).unwrap();
        check(format!("key {a}"), key(&a).unwrap(), d.clone());
        check(format!("chi D{a}"), chi_character(&d).unwrap(), d);
    }
    outcome(bad.is_empty(), format!("{checked} polynomials checked, failures: {bad:?}"))
}

fn criterion_7() -> Outcome {
    let (r, t) = timed(|| verify::sweep_matroid_polytopes(5, &SweepOptions::default()).expect("matroids"));
    // sum over n = 0..=5 of 2^n defining sets
    sweep_ok(&r, 63, t, Duration::from_secs(30))
}

fn criterion_8() -> Outcome {
    let (r, t) = timed(|| {
        verify::sweep_choice_independence(5, 3, 3, &SweepOptions::default()).expect("choice")
    });
    sweep_ok(&r, 120 + 64, t, Duration::from_secs(60))
}

fn basis_exchange_holds(m: &SchubertMatroid) -> bool {
    let bases = m.bases().unwrap();
    bases.iter().all(|&b1| {
        bases.iter().all(|&b2| {
            b1.difference(b2).iter().all(|x| {
                b2.difference(b1).iter().any(|y| m.is_basis(b1.without(x).with(y)))
            })
        })
    })
}

fn rank_is_submodular_and_monotone(m: &SchubertMatroid) -> bool {
    let n = m.n();
    let ranks: Vec<usize> = Subset::all(n).map(|s| m.rank_bruteforce(s).unwrap()).collect();
    let r = |s: Subset| ranks[s.bits() as usize];
    Subset::all(n).all(|a| {
        Subset::all(n).all(|b| {
            r(a.union(b)) + r(a.intersection(b)) <= r(a) + r(b)
                && (!a.is_subset_of(b) || r(a) <= r(b))
        })
    })
}

fn criterion_9() -> Vec<Outcome> {
    let matroids: Vec<SchubertMatroid> = (0..=6)
        .flat_map(|n| Subset::all(n).map(move |s| SchubertMatroid::new(n, s).unwrap()))
        .collect();
    let exchange_failures: Vec<_> = matroids.iter().filter(|m| !basis_exchange_holds(m)).collect();
    let submod_failures: Vec<_> = matroids.iter().filter(|m| !rank_is_submodular_and_monotone(m)).collect();
    // closure under dominance: anything below a basis is a basis
    let closure_ok = matroids.iter().all(|m| {
        let bases = m.bases().unwrap();
        bases.iter().all(|&b| {
            Subset::of_size(m.n(), b.len()).all(|c| !set_dominance_leq(c, b) || bases.contains(&c))
        })
    });

    let opts = SweepOptions { seed: SEED, ..Default::default() };
    let relations = verify::sweep_operator_relations(1000, 4, 4, &opts).expect("relations");
    // direct spot check on top of the sweep: d_1 applied to the staircase
    let spot = divided_difference(&schubert(&Permutation::longest(4)).unwrap(), 1)
        .map(|f| f == schubert(&"3421".parse().unwrap()).unwrap())
        .unwrap_or(false);

    vec![
        outcome(
            exchange_failures.is_empty() && closure_ok,
            format!(
                "basis exchange over {} Schubert matroids (n <= 6): {} failures; dominance closure: {}",
                matroids.len(),
                exchange_failures.len(),
                closure_ok
            ),
        ),
        outcome(
            submod_failures.is_empty(),
            format!("rank submodularity/monotonicity, all subset pairs, n <= 6: {} failures", submod_failures.len()),
        ),
        outcome(
            relations.all_passed() && relations.total == 1000 && spot,
            format!(
                "d_i^2 = 0 and braid relations on {} seeded polynomials (seed {}): {} failures",
                relations.total,
                relations.seed,
                relations.failed.len()
            ),
        ),
    ]
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Vec<Outcome>>)> = vec![
        ("1 figure fidelity", Box::new(|| vec![criterion_1()])),
        ("2 schubert sweep", Box::new(criterion_2)),
        ("3 key sweep", Box::new(criterion_3)),
        ("4 theta = rank", Box::new(|| vec![criterion_4()])),
        ("5 character theorems", Box::new(criterion_5)),
        ("6 positivity and SNP", Box::new(|| vec![criterion_6()])),
        ("7 matroid lattice points", Box::new(|| vec![criterion_7()])),
        ("8 operator well-definedness", Box::new(|| vec![criterion_8()])),
        ("9 property suite", Box::new(criterion_9)),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        for o in run() {
            println!("[{}] criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
            if !o.ok {
                failures += 1;
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance check(s) failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
