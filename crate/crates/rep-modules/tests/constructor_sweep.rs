//! Every canonical module of small rank satisfies the module axioms, has
//! the dimension its label predicts, and the pinned diagram weights appear
//! where expected.

use exact_linalg::Scalar;
use hopf_core::build_algebra;
use rep_modules::*;
use std::sync::Arc;

fn algebras() -> Vec<Arc<hopf_core::HopfAlgebraData>> {
    ["mabar", "DH4", "HH"]
        .iter()
        .map(|n| Arc::new(build_algebra(n).unwrap()))
        .collect()
}

fn all_signs() -> [(i8, i8); 4] {
    [(1, 1), (1, -1), (-1, 1), (-1, -1)]
}

fn labels_up_to(rank: usize) -> Vec<IndecLabel> {
    let mut out = Vec::new();
    for (s1, s2) in all_signs() {
        out.push(IndecLabel::simple(s1, s2));
        out.push(IndecLabel::projective(s1, s2));
        for r in 1..=rank {
            for fam in [Family::M, Family::W, Family::N, Family::NPrime] {
                out.push(IndecLabel::string(fam, r).with_signs(s1, s2));
            }
            for eta in [Scalar::from_int(1), Scalar::from_int(-2), Scalar::fraction(1, 3)] {
                out.push(IndecLabel::band(r, eta).with_signs(s1, s2));
            }
        }
    }
    out
}

#[test]
fn sweep_validates_and_matches_dimensions() {
    for alg in algebras() {
        for label in labels_up_to(6) {
            let built = construct(&alg, &label);
            let dh4_missing = alg.name == "DH4" && label.signs.0 * label.signs.1 == -1;
            match built {
                Ok(m) => {
                    assert!(
                        !(dh4_missing && label.family != Family::P),
                        "{label} should not exist over {}",
                        alg.name
                    );
                    assert_eq!(m.dim, label.dim(&alg.name), "dimension of {label} over {}", alg.name);
                    let rep = validate_module(&m);
                    assert!(
                        rep.all_pass(),
                        "{label} over {} fails: {:?}",
                        alg.name,
                        rep.failures
                    );
                }
                Err(_) => {
                    assert!(
                        dh4_missing && label.family != Family::P,
                        "{label} over {} should exist",
                        alg.name
                    );
                }
            }
        }
    }
}

#[test]
fn projectives_are_cyclic_on_their_idempotent() {
    for alg in algebras() {
        for (s1, s2) in all_signs() {
            let p = projective(&alg, s1, s2).unwrap();
            let mut top = vec![Scalar::zero(); p.dim];
            top[0] = Scalar::one();
            assert!(p.generated_by(&top), "P({s1},{s2}) over {}", alg.name);
        }
    }
}

#[test]
fn pinned_diagram_weights() {
    let mabar = Arc::new(build_algebra("mabar").unwrap());
    let dh4 = Arc::new(build_algebra("DH4").unwrap());
    let hh = Arc::new(build_algebra("HH").unwrap());

    // In P(+,+) over the two-generator Taft algebra, with basis
    // (e, xe, ye, xye), y sends xe to −xye while x sends ye to +xye.
    let p = projective(&mabar, 1, 1).unwrap();
    assert_eq!(p.dim, 4);
    assert_eq!(p.action("y")[(3, 1)], Scalar::from_int(-1));
    assert_eq!(p.action("x")[(3, 2)], Scalar::from_int(1));

    // Over the tensor square x and y commute, so both composite edges are +1.
    let p = projective(&hh, 1, 1).unwrap();
    assert_eq!(p.action("y")[(3, 1)], Scalar::from_int(1));
    assert_eq!(p.action("x")[(3, 2)], Scalar::from_int(1));

    // The half-size projective over the double: basis (e, ye) with the
    // weight-2 return edge x·(ye) = 2e.
    let p = projective(&dh4, 1, -1).unwrap();
    assert_eq!(p.dim, 2);
    assert_eq!(p.action("y")[(1, 0)], Scalar::from_int(1));
    assert_eq!(p.action("x")[(0, 1)], Scalar::from_int(2));
    assert_eq!(p.action("x")[(1, 0)], Scalar::zero());

    // Signs alternate along strings over the tensor square.
    let n2 = string_module(&hh, Family::N, 2).unwrap();
    let g: Vec<Scalar> = (0..4).map(|i| n2.action("g")[(i, i)].clone()).collect();
    let h: Vec<Scalar> = (0..4).map(|i| n2.action("h")[(i, i)].clone()).collect();
    let pm = |s: i64| Scalar::from_int(s);
    assert_eq!(g, vec![pm(1), pm(-1), pm(-1), pm(1)]);
    assert_eq!(h, vec![pm(1), pm(-1), pm(1), pm(-1)]);

    // The band over the tensor square starts on a (−,−) vertex.
    let c = band_module(&hh, 1, &Scalar::from_int(2)).unwrap();
    assert_eq!(c.dim, 4);
    assert_eq!(c.action("g")[(0, 0)], pm(-1));
    assert_eq!(c.action("h")[(0, 0)], pm(-1));
}

#[test]
fn tensor_respects_dimension_and_axioms() {
    for alg in algebras() {
        let a = construct(&alg, &"M1".parse().unwrap()).unwrap();
        let b = construct(&alg, &"W2".parse().unwrap()).unwrap();
        let t = tensor(&a, &b);
        assert_eq!(t.dim, a.dim * b.dim);
        assert!(validate_module(&t).all_pass(), "tensor over {}", alg.name);

        // tensoring two copies of the (−,−) character gives the trivial module
        let s = simple(&alg, -1, -1).unwrap();
        let ss = tensor(&s, &s);
        for (n, m) in &ss.actions {
            let expected = match n.as_str() {
                "g" | "h" => Scalar::one(),
                _ => Scalar::zero(),
            };
            assert_eq!(m[(0, 0)], expected);
        }
    }
}

#[test]
fn dot_export_mentions_every_vertex() {
    let mabar = Arc::new(build_algebra("mabar").unwrap());
    let m = construct(&mabar, &"M2".parse().unwrap()).unwrap();
    let dot = to_dot(&m, "M2");
    for i in 0..m.dim {
        assert!(dot.contains(&format!("v{i} ")), "vertex v{i} missing");
    }
    assert!(dot.contains("style=solid"));
    assert!(dot.contains("style=dashed"));
}
