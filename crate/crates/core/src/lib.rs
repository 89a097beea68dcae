//! Exact workbench for Artinian local algebras over a field: Gröbner bases
//! for zero-dimensional ideals, multiplication tables, canonical modules,
//! minimal free resolutions, Tor/Ext, Matlis duality, and Betti-sequence
//! growth analysis.
//!
//! The engine is generic over the scalar type through [`scalar::Field`];
//! concrete aliases for the supported ground fields live at the crate root.
//! Every computation is exact; no floating point enters anywhere.

pub mod algebra;
pub mod criteria;
pub mod error;
pub mod groebner;
pub mod growth;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod resolution;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{Budget, Matrix, Subspace};
pub use scalar::{Field, FieldSpec, Fp};

/// Default ground field: a large prime avoids characteristic accidents.
pub type F32003 = Fp<32003>;
/// The rationals, available for exact cross-checks.
pub type Rat = num_rational::BigRational;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;
pub type F101 = Fp<101>;
pub type F65521 = Fp<65521>;
