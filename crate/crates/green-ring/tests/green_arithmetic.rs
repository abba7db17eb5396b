//! Green-ring arithmetic: closed form against brute force on small ranks,
//! ring invariants, and the structural suites at reduced rank bounds. The
//! full-rank sweeps live in the acceptance harness.

use exact_linalg::Scalar;
use green_ring::{gens, GreenElement, RelationTable};
use rep_modules::{Family, IndecLabel};

const SEED: u64 = 7;

fn etas() -> Vec<Scalar> {
    vec![Scalar::one(), -Scalar::one()]
}

#[test]
fn closed_form_matches_brute_force_at_rank_one() {
    for algebra in ["mabar", "DH4", "HH"] {
        let report = green_ring::verify_green_relations(algebra, 1, &etas(), SEED);
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.failures().first()
        );
        assert!(report.passed > 50, "{algebra}: sweep too small");
    }
}

#[test]
fn commutativity_probes() {
    for algebra in ["mabar", "DH4", "HH"] {
        let report = green_ring::commutativity_probe(algebra, 2, &etas());
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.failures().first()
        );
    }
}

#[test]
fn projective_class_quotient_dimensions() {
    for (algebra, quotient_dim, basis_len) in [("mabar", 6, 8), ("DH4", 4, 6), ("HH", 5, 8)] {
        let report = green_ring::projective_class_algebra(algebra);
        assert_eq!(report.basis.len(), basis_len, "{algebra} basis");
        assert_eq!(report.quotient_dim, quotient_dim, "{algebra} quotient");
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.idempotent_checks.failures().first()
        );
    }
}

#[test]
fn radical_generators_nilpotent_with_complement_idempotents() {
    for algebra in ["mabar", "DH4", "HH"] {
        let report = green_ring::verify_radical_generators(algebra, 2, &etas());
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.failures().first()
        );
    }
}

#[test]
fn alternating_idempotent_calculus() {
    let report = green_ring::verify_alternating_idempotents(2);
    assert!(report.all_pass(), "{:?}", report.failures().first());
}

#[test]
fn symbolic_and_module_canonicalization_agree() {
    for algebra in ["mabar", "DH4", "HH"] {
        let report = green_ring::verify_alias_table(algebra, 2, &etas(), SEED);
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.failures().first()
        );
    }
}

#[test]
fn unit_and_simple_square_relations() {
    for algebra in ["mabar", "DH4", "HH"] {
        let table = RelationTable::new(algebra).unwrap();
        let one = gens::one(algebra);
        let s = gens::s(algebra);
        let m2 = GreenElement::from_label(algebra, IndecLabel::string(Family::M, 2));
        assert_eq!(table.multiply(&one, &m2).unwrap(), m2);
        assert_eq!(table.multiply(&m2, &one).unwrap(), m2);
        assert_eq!(table.multiply(&s, &s).unwrap(), one);
        if algebra != "DH4" {
            let s_m = gens::s_minus(algebra);
            assert_eq!(table.multiply(&s_m, &s_m).unwrap(), one);
        }
    }
}

#[test]
fn products_of_module_classes_are_effective() {
    let table = RelationTable::new("mabar").unwrap();
    let labels = [
        IndecLabel::projective(1, 1),
        IndecLabel::string(Family::N, 2),
        IndecLabel::band(3, Scalar::from_int(2)),
    ];
    for a in &labels {
        for b in &labels {
            let prod = table.multiply_labels(a, b).unwrap();
            assert!(prod.is_effective(), "[{a}]·[{b}] = {prod}");
        }
    }
    let half = gens::p("mabar").scale(&Scalar::fraction(1, 2));
    assert!(!half.is_effective());
    assert!(!gens::p("mabar").scale(&-Scalar::one()).is_effective());
}

#[test]
fn associativity_probe() {
    let eta = Scalar::one();
    for algebra in ["mabar", "DH4", "HH"] {
        let table = RelationTable::new(algebra).unwrap();
        let triples = [
            (
                IndecLabel::simple(-1, -1),
                IndecLabel::band(2, eta.clone()),
                IndecLabel::string(Family::N, 2),
            ),
            (
                IndecLabel::string(Family::M, 1),
                IndecLabel::string(Family::W, 2),
                IndecLabel::projective(1, 1),
            ),
            (
                IndecLabel::band(1, eta.clone()),
                IndecLabel::band(2, eta.clone()),
                IndecLabel::string(Family::NPrime, 1),
            ),
        ];
        for (a, b, c) in &triples {
            let a = GreenElement::from_label(algebra, a.clone());
            let b = GreenElement::from_label(algebra, b.clone());
            let c = GreenElement::from_label(algebra, c.clone());
            let left = table
                .multiply(&table.multiply(&a, &b).unwrap(), &c)
                .unwrap();
            let right = table
                .multiply(&a, &table.multiply(&b, &c).unwrap())
                .unwrap();
            assert_eq!(left, right, "({a})({b})({c}) over {algebra}");
        }
    }
}

#[test]
fn dimension_is_multiplicative() {
    let table = RelationTable::new("HH").unwrap();
    let a = IndecLabel::string(Family::W, 3);
    let b = IndecLabel::band(2, Scalar::from_int(-1));
    let prod = table.multiply_labels(&a, &b).unwrap();
    let expected = Scalar::from_int((a.dim("HH") * b.dim("HH")) as i64);
    assert_eq!(prod.dimension(), expected);
}

#[test]
fn suite_report_serializes_to_json() {
    let report = green_ring::commutativity_probe("HH", 1, &[Scalar::one()]);
    let json = serde_json::to_string(&report).unwrap();
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["suite"], "commutativity[HH]");
    assert_eq!(value["failed"], 0);
}

#[test]
fn presentation_relations_match_brute_force_at_rank_one() {
    for algebra in ["mabar", "DH4", "HH"] {
        let report = green_ring::verify_presentation_relations(algebra, 1, &etas(), SEED);
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.failures().first()
        );
    }
}

#[test]
fn commutation_isomorphisms_at_rank_two() {
    for algebra in ["mabar", "DH4", "HH"] {
        let report = green_ring::verify_commutation_isos(algebra, 2, &etas(), SEED);
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.failures().first()
        );
    }
}

#[test]
fn stable_quotient_compatibility() {
    for algebra in ["mabar", "DH4", "HH"] {
        let report = green_ring::verify_stable_quotient(algebra, 2, &etas());
        assert!(
            report.all_pass(),
            "{algebra}: {:?}",
            report.failures().first()
        );
    }
}
