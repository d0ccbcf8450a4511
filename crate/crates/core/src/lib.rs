//! Exact computer algebra over the cyclotomic field `Q(ζ₁₂₀)` for studying
//! cubic surfaces in projective 3-space and their projective symmetries.
//!
//! The linear algebra, forms and group code are generic over [`scalar::Field`];
//! the aliases below fix the scalar to [`CycNum`] or [`BigRational`].

pub mod cyclofield;
pub mod error;
pub mod exactla;
pub mod forms;
pub mod invariants;
pub mod jacobian;
pub mod poly;
pub mod projgroup;
pub mod scalar;
pub mod syntax;
pub mod verifier;

pub use num_rational::BigRational;

pub use cyclofield::{consts, Constant, CycNum};
pub use error::{Error, Result};
pub use scalar::Field;

/// Dense matrix over `Q(ζ₁₂₀)`.
pub type ExactMatrix = exactla::Matrix<CycNum>;
/// Dense matrix over `Q`.
pub type QMatrix = exactla::Matrix<BigRational>;
/// Homogeneous form over `Q(ζ₁₂₀)`.
pub type CycForm = forms::Form<CycNum>;
/// Homogeneous form over `Q`.
pub type QForm = forms::Form<BigRational>;
/// Polynomial over `Q(ζ₁₂₀)`.
pub type CycPoly = poly::Poly<CycNum>;
