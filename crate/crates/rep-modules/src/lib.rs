//! Canonical indecomposable modules over the 16-dimensional algebras:
//! label grammar, matrix representations, constructors, tensor products,
//! validation, and DOT export.

pub mod constructors;
pub mod label;
pub mod module;

pub use constructors::{band_module, construct, projective, sign_twist, simple, string_module};
pub use label::{Family, IndecLabel};
pub use module::{direct_sum, tensor, to_dot, validate_module, ModuleRep, ModuleReport};
