//! Exact evaluation of Wigner 3-j and super 3-j symbols, the five Regge
//! transformations, and the partition of symbols by Regge orbit size.
//!
//! Every value is carried as a sign times the square root of a nonnegative
//! rational, so all comparisons in this crate are exact. The numeric kernels
//! are generic over the integer backend through [`scalar::Scalar`]; the
//! aliases below fix the arbitrary-precision default.

pub mod census;
pub mod error;
pub mod flat;
pub mod half_integer;
pub mod partition;
pub mod regge;
pub mod scalar;
pub mod sqrt_rational;
pub mod super3j;
pub mod symbol;
pub mod wigner3j;

pub use error::{ClassicalViolation, Error, Result, SuperViolation};
pub use half_integer::HalfInt;
pub use sqrt_rational::SqrtRatio;
pub use symbol::{Column, ParityClass, Symbol3j};

/// Default integer backend.
pub type Int = num_bigint::BigInt;
/// Exact rational over the default backend.
pub type Rational = num_rational::Ratio<Int>;
/// Exact signed square root of a rational over the default backend.
pub type SqrtRational = SqrtRatio<Int>;

/// 3-j value over the default backend.
pub fn wigner_3j(s: &Symbol3j) -> Result<SqrtRational> {
    wigner3j::compute_3j(s)
}

/// Super 3-j value over the default backend (product route).
pub fn super_3j(s: &Symbol3j) -> Result<SqrtRational> {
    super3j::compute_super_3j(s)
}
