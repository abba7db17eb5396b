//! Green-ring arithmetic for the three 16-dimensional algebras: exact
//! closed-form multiplication tables, a brute-force tensor-and-decompose
//! bridge, and verification suites for the ring relations, projective class
//! algebras, radical generators, and stable-quotient idempotent calculus.

pub mod bruteforce;
pub mod closed_form;
pub mod element;
pub mod verify;

pub use bruteforce::BruteForce;
pub use closed_form::RelationTable;
pub use element::GreenElement;
pub use verify::{
    commutativity_probe, gens, multiply_stable, projective_class_algebra,
    radical_generators, reduce_mod_radical, stable_quotient, verify_alias_table,
    verify_alternating_idempotents, verify_commutation_isos, verify_green_relations,
    verify_presentation_relations, verify_radical_generators, verify_stable_quotient,
    CaseResult, ProjClassReport, SuiteReport,
};
