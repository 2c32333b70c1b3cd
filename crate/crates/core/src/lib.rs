//! Carlitz-module arithmetic over `F_q[T]`, function-field cyclotomic
//! polynomials, Zsigmondy-prime classification and an exhaustive
//! verification harness.

pub mod carlitz;
pub mod cyclotomic;
mod error;
pub mod ffield;
pub mod polyring;
pub mod text;
pub mod verify;
pub mod zsigmondy;

pub use carlitz::{carlitz_coeffs, carlitz_eval, carlitz_eval_mod, CarlitzCoeffs, CarlitzOrbit};
pub use cyclotomic::{cyclotomic_eval, cyclotomic_poly, XPoly};
pub use error::{Error, Result};
pub use ffield::{FieldElement, FieldError, FieldSpec};
pub use polyring::{Factorization, Poly, PolyError};
pub use text::{parse_element, parse_poly, ParseError};
pub use verify::{
    exceptional_set, reproduce_table, verify_bang_zsigmondy, verify_feit, ExceptionReport,
    SearchBounds, SetName, SetReport, Theorem,
};
pub use zsigmondy::{
    carlitz_annihilator, classify, is_zsigmondy, large_zsigmondy_primes, normalize_pair,
    zsigmondy_primes, LargePrime, LargeReason, ZsigmondyReport,
};
