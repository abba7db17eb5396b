//! Exact rational scalars, dense matrices, and the small amount of
//! polynomial machinery (characteristic/minimal polynomials, squarefree and
//! rational-root splitting) that the decomposition engine builds on.

pub mod matrix;
pub mod poly;
pub mod scalar;

pub use matrix::Matrix;
pub use poly::Polynomial;
pub use scalar::Scalar;
