//! Scalar arithmetic.
//!
//! Every constant matrix entry lives in ℚ(i, √2), so constant identities are
//! decided exactly with [`ExactScalar`]. Momentum-dependent symbols involve
//! ω(q) = √(q² + m²) and are evaluated in double precision ([`FloatScalar`]),
//! with [`Jet`] carrying forward-mode derivatives with respect to q.

mod exact;
mod jet;
mod scalar;
mod surd;

pub use exact::{exact_arithmetic, ArithOp, ArithResult, ExactScalar};
pub use jet::Jet;
pub use scalar::{FloatScalar, Scalar};
pub use surd::RealSurd;

/// Rational numbers with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num / den`. Panics when `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
