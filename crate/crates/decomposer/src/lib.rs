//! Krull–Schmidt decomposition of modules over the 16-dimensional
//! algebras: intertwiner spaces, idempotent splitting, summand peeling,
//! identification against the canonical indecomposable list, and
//! isomorphism certification.

pub mod decompose;
pub mod hom;
pub mod ops;

pub use decompose::{Decomposer, Decomposition, SplitVerdict};
pub use hom::{endomorphism_basis, hom_basis, iso_check, sign_multiplicities};
pub use ops::{fingerprint, quotient, radical_series, restrict, socle, Fingerprint};
