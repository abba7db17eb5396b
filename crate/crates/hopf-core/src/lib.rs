pub mod algebra;
pub mod cocycle;
pub mod iso;
pub mod pairing;
pub mod presentations;
pub mod structure;

pub use algebra::{AxiomReport, Element, HopfAlgebraData};
pub use cocycle::{cocycle_twist, counit_form, sigma1, sigma_alpha, verify_cocycle, TwoCocycle};
pub use iso::{hopf_isomorphism_check, search_isomorphism};
pub use pairing::{pairing_to_cocycle, sweedler_pairing, verify_skew_pairing, SkewPairing};
pub use presentations::{build_algebra, solve_antipode, tensor_hopf, z2_group_algebra, ALGEBRA_NAMES};
pub use structure::{
    canonical_idempotents, center_basis, central_idempotents, ext_quiver, group_block_pair,
    is_primitive_idempotent, primitive_orthogonal_idempotents, radical_basis,
    verify_idempotent_system, IdempotentReport, IdempotentSystem, Quiver,
};
