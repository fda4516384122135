//! Cross-module invariants: the Schubitope, the Minkowski sum of column
//! matroid polytopes and the dual character support are one set.

use std::collections::BTreeSet;

use schubitope::algebra::{key, schubert, Composition, Permutation};
use schubitope::diagram::{rothe, skyline, Diagram};
use schubitope::matroid::SchubertMatroid;
use schubitope::polytope::{
    matroid_polytope, minkowski_lattice_points, minkowski_sum, schubitope, vertices_from_bases,
    GeneralizedPermutahedron,
};
use schubitope::subset::Subset;
use schubitope::verify::{random_corpus, DEFAULT_SEED};
use schubitope::weyl::{chi_character, chi_support};
use schubitope::WeightVector;

fn corpus() -> Vec<Diagram> {
    let mut ds: Vec<Diagram> = (1..=4)
        .flat_map(|n| Permutation::all(n))
        .map(|w| rothe(&w).unwrap())
        .collect();
    ds.extend(Composition::all_bounded(3, 3).iter().map(|a| skyline(a).unwrap()));
    ds.extend(random_corpus(DEFAULT_SEED, 3..=5, 30));
    ds
}

#[test]
fn schubitope_points_equal_minkowski_points_and_chi_support() {
    for d in corpus() {
        let lattice = schubitope(&d).unwrap().lattice_points().unwrap();
        let minkowski = minkowski_lattice_points(&SchubertMatroid::columns_of(&d)).unwrap();
        let chi = chi_support(&d).unwrap();
        assert_eq!(lattice, minkowski, "{d:?}");
        assert_eq!(lattice, chi, "{d:?}");
    }
}

#[test]
fn schubitope_bounds_are_sums_of_column_ranks() {
    for d in corpus() {
        let summed = SchubertMatroid::columns_of(&d)
            .iter()
            .map(|m| matroid_polytope(m).unwrap())
            .try_fold(GeneralizedPermutahedron::origin(d.n()), |a, b| minkowski_sum(&a, &b))
            .unwrap();
        assert_eq!(summed, schubitope(&d).unwrap(), "{d:?}");
    }
}

#[test]
fn character_support_matches_enumerated_support_on_random_diagrams() {
    for d in random_corpus(DEFAULT_SEED + 1, 3..=4, 25) {
        let chi = chi_character(&d).unwrap();
        assert!(chi.all_coefficients_positive(), "{d:?}");
        assert_eq!(chi.support(), chi_support(&d).unwrap().points, "{d:?}");
    }
}

#[test]
fn minkowski_sums_of_matroid_polytopes_are_sumsets() {
    let matroids: Vec<SchubertMatroid> = (1..=4)
        .flat_map(|n| Subset::all(n).map(move |s| SchubertMatroid::new(n, s).unwrap()))
        .collect();
    for a in &matroids {
        for b in matroids.iter().filter(|b| b.n() == a.n()) {
            let sum = minkowski_sum(&matroid_polytope(a).unwrap(), &matroid_polytope(b).unwrap()).unwrap();
            let expected = vertices_from_bases(a).unwrap().sumset(&vertices_from_bases(b).unwrap());
            assert_eq!(sum.lattice_points().unwrap(), expected, "{a:?} + {b:?}");
        }
    }
}

#[test]
fn z_additivity_for_n5_pairs() {
    let matroids: Vec<SchubertMatroid> =
        Subset::all(5).map(|s| SchubertMatroid::new(5, s).unwrap()).collect();
    for (k, a) in matroids.iter().enumerate() {
        for b in &matroids[k..] {
            let sum = minkowski_sum(&matroid_polytope(a).unwrap(), &matroid_polytope(b).unwrap()).unwrap();
            let expected = vertices_from_bases(a).unwrap().sumset(&vertices_from_bases(b).unwrap());
            assert_eq!(sum.lattice_points().unwrap(), expected, "{a:?} + {b:?}");
        }
    }
}

#[test]
fn schubitopes_are_submodular() {
    for d in corpus() {
        let gp = schubitope(&d).unwrap();
        assert!(gp.is_submodular() && gp.is_monotone(), "{d:?}");
    }
}

#[test]
fn schubert_and_key_ranges_are_positive() {
    for w in Permutation::all(5) {
        assert!(schubert(&w).unwrap().all_coefficients_positive());
    }
    for a in Composition::all_bounded(3, 4) {
        assert!(key(&a).unwrap().all_coefficients_positive());
    }
}

#[test]
fn dominant_permutation_schubert_is_a_monomial() {
    // 132-avoiding w have 𝔖_w = x^code(w)
    for w in Permutation::all(5) {
        let v = w.one_line();
        let avoids_132 = (0..5).all(|i| {
            (i + 1..5).all(|j| (j + 1..5).all(|k| !(v[i] < v[k] && v[k] < v[j])))
        });
        if avoids_132 {
            let code: Vec<u32> = (0..5)
                .map(|i| (i + 1..5).filter(|&j| v[j] < v[i]).count() as u32)
                .collect();
            let s = schubert(&w).unwrap();
            assert_eq!(s.support(), BTreeSet::from([WeightVector::new(code)]), "w = {w}");
        }
    }
}
