//! End-to-end checks of the decomposition engine: constructor round-trips,
//! pinned tensor decompositions, endomorphism-ring facts, and determinism.

use decomposer::*;
use exact_linalg::Scalar;
use hopf_core::build_algebra;
use rep_modules::*;
use std::sync::Arc;

fn alg(name: &str) -> Arc<hopf_core::HopfAlgebraData> {
    Arc::new(build_algebra(name).unwrap())
}

fn dec(d: &Decomposer, m: &ModuleRep) -> String {
    d.decompose(m).unwrap().display()
}

#[test]
fn identify_round_trips_all_constructors() {
    for name in ["mabar", "DH4", "HH"] {
        let a = alg(name);
        let d = Decomposer::new(Arc::clone(&a), 0);
        let mut labels: Vec<IndecLabel> = Vec::new();
        let signs: &[(i8, i8)] = if name == "DH4" {
            &[(1, 1), (-1, -1)]
        } else {
            &[(1, 1), (1, -1), (-1, 1), (-1, -1)]
        };
        for &(s1, s2) in signs {
            labels.push(IndecLabel::simple(s1, s2));
            for r in 1..=6 {
                for fam in [Family::M, Family::W, Family::N, Family::NPrime] {
                    labels.push(IndecLabel::string(fam, r).with_signs(s1, s2));
                }
                for eta in [
                    Scalar::from_int(1),
                    Scalar::from_int(2),
                    Scalar::from_int(-1),
                    Scalar::fraction(1, 2),
                ] {
                    labels.push(IndecLabel::band(r, eta).with_signs(s1, s2));
                }
            }
        }
        for &(s1, s2) in &[(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
            if name == "DH4" || s1 * s2 == 1 {
                labels.push(IndecLabel::projective(s1, s2));
            }
        }
        for label in labels {
            let m = construct(&a, &label).unwrap();
            let found = d.identify(&m, true).unwrap_or_else(|e| {
                panic!("identify failed for {label} over {name}: {e}")
            });
            // aliased sign twists may identify to a different but
            // isomorphic canonical label
            let back = construct(&a, &found).unwrap();
            assert!(
                iso_check(&m, &back, 0),
                "identify({label}) over {name} returned non-isomorphic {found}"
            );
            assert_eq!(
                found,
                d.canonicalize(&label),
                "identify and canonicalize disagree on {label} over {name}"
            );
        }
    }
}

#[test]
fn pinned_tensor_decompositions_over_the_taft_algebra() {
    let a = alg("mabar");
    let d = Decomposer::new(Arc::clone(&a), 0);
    let m = |l: &str| construct(&a, &l.parse().unwrap()).unwrap();

    assert_eq!(
        dec(&d, &tensor(&m("P(+,+)"), &m("P(+,+)"))),
        "2·P(-,-) + 2·P(+,+)"
    );
    assert_eq!(
        dec(&d, &tensor(&m("M2"), &m("W2"))),
        "S(-,-) + 6·P(+,+)"
    );
    let c12 = construct(&a, &IndecLabel::band(1, Scalar::from_int(2))).unwrap();
    let c13 = construct(&a, &IndecLabel::band(1, Scalar::from_int(3))).unwrap();
    assert_eq!(dec(&d, &tensor(&c12, &c13)), "P(+,+)");
    // M(1)⊗M(1) ≅ P ⊕ M(2) twisted by (−,−)
    assert_eq!(
        dec(&d, &tensor(&m("M1"), &m("M1"))),
        "P(+,+) + M2_--"
    );
}

#[test]
fn endomorphism_ring_dimensions() {
    let a = alg("mabar");
    let s = simple(&a, 1, 1).unwrap();
    assert_eq!(endomorphism_basis(&s).len(), 1);
    // End(P) = e·A·e has basis {e, xye}: identity and the socle projection
    let p = projective(&a, 1, 1).unwrap();
    assert_eq!(endomorphism_basis(&p).len(), 2);
    let m1 = construct(&a, &"M1".parse().unwrap()).unwrap();
    assert_eq!(endomorphism_basis(&direct_sum(&m1, &m1)).len(), 4);
}

#[test]
fn splitting_idempotent_verdicts() {
    let a = alg("mabar");
    let d = Decomposer::new(Arc::clone(&a), 0);
    let m1 = construct(&a, &"M1".parse().unwrap()).unwrap();
    let s = simple(&a, 1, 1).unwrap();
    match d.find_splitting_idempotent(&direct_sum(&m1, &s)).unwrap() {
        SplitVerdict::Idempotent(e) => assert_eq!(&e * &e, e),
        SplitVerdict::LocalRing => panic!("M(1) ⊕ S must split"),
    }
    let c11 = construct(&a, &IndecLabel::band(1, Scalar::from_int(1))).unwrap();
    assert!(matches!(
        d.find_splitting_idempotent(&c11).unwrap(),
        SplitVerdict::LocalRing
    ));
    let p = projective(&a, 1, 1).unwrap();
    assert!(matches!(
        d.find_splitting_idempotent(&tensor(&p, &p)).unwrap(),
        SplitVerdict::Idempotent(_)
    ));
}

#[test]
fn iso_check_separates_the_small_families() {
    let a = alg("mabar");
    let m = |l: &str| construct(&a, &l.parse().unwrap()).unwrap();
    assert!(iso_check(&m("M1"), &m("M1"), 0));
    assert!(!iso_check(&m("N1"), &m("N'1"), 0));
    let c1 = construct(&a, &IndecLabel::band(1, Scalar::from_int(1))).unwrap();
    let cm1 = construct(&a, &IndecLabel::band(1, Scalar::from_int(-1))).unwrap();
    assert!(!iso_check(&c1, &cm1, 0));
}

#[test]
fn canonicalize_reduces_tensor_square_band_signs() {
    let hh = alg("HH");
    let d = Decomposer::new(Arc::clone(&hh), 0);
    let twisted = IndecLabel::band(2, Scalar::from_int(3)).with_signs(-1, -1);
    assert_eq!(
        d.canonicalize(&twisted),
        IndecLabel::band(2, Scalar::from_int(3))
    );
    // (+,−) stays a distinct class
    let pm = IndecLabel::band(2, Scalar::from_int(3)).with_signs(1, -1);
    let canon_pm = d.canonicalize(&pm);
    assert_ne!(canon_pm, IndecLabel::band(2, Scalar::from_int(3)));
}

#[test]
fn decomposition_is_seed_independent() {
    let a = alg("mabar");
    let m = {
        let p = projective(&a, 1, 1).unwrap();
        let w2 = construct(&a, &"W2".parse().unwrap()).unwrap();
        tensor(&p, &w2)
    };
    let mut results = Vec::new();
    for seed in [0u64, 1, 7, 41, 997] {
        let d = Decomposer::new(Arc::clone(&a), seed);
        results.push(d.decompose(&m).unwrap().summands);
    }
    for r in &results[1..] {
        assert_eq!(r, &results[0]);
    }
}

#[test]
fn double_splits_into_blocks() {
    let a = alg("DH4");
    let d = Decomposer::new(Arc::clone(&a), 0);
    let p_plus = projective(&a, 1, -1).unwrap();
    let m1 = construct(&a, &"M1".parse().unwrap()).unwrap();
    // M(1)⊗P₊ lives entirely in the matrix blocks
    let t = tensor(&m1, &p_plus);
    let out = d.decompose(&t).unwrap();
    assert_eq!(out.input_dim, 6);
    assert!(out
        .summands
        .iter()
        .all(|l| l.family == Family::P && l.signs.0 * l.signs.1 == -1));
}
