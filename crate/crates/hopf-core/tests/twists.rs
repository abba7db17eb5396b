//! Cross-algebra twist equivalences: the three 16-dimensional algebras are
//! 2-cocycle twists of one another.

use hopf_core::*;

#[test]
fn sigma1_twist_of_mabar_is_hh() {
    let m = build_algebra("mabar").unwrap();
    let s = sigma1(&m).expect("sigma1 must be convolution-invertible");
    assert!(verify_cocycle(&m, &s));
    let tw = cocycle_twist(&m, &s);
    assert!(tw.check_hopf_axioms().all_pass());
    let hh = build_algebra("HH").unwrap();
    let assignment =
        search_isomorphism(&tw, &hh).expect("no Hopf isomorphism found between the twist and HH");
    assert!(hopf_isomorphism_check(&tw, &hh, &assignment));
    for (name, img) in &assignment {
        println!("{name} -> {}", hh.format_elem(img));
    }
}

#[test]
fn sigma2_twist_of_hh_is_the_double() {
    let h4 = build_algebra("H4").unwrap();
    let hh = build_algebra("HH").unwrap();
    let dh4 = build_algebra("DH4").unwrap();
    let p = sweedler_pairing(&h4);
    let s = pairing_to_cocycle(&h4, &h4, &hh, &p).unwrap();
    assert!(verify_cocycle(&hh, &s));
    let tw = cocycle_twist(&hh, &s);
    // x^i g^j y^k h^l ↦ x^i g^j y^k h^l extends to a Hopf isomorphism
    let images: Vec<(String, Element)> = tw
        .generators
        .iter()
        .map(|(n, _)| (n.clone(), dh4.generator(n).unwrap().clone()))
        .collect();
    assert!(hopf_isomorphism_check(&tw, &dh4, &images));
}
