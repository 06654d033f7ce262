//! Verification engine for the 64-dimensional extended real Clifford–Dirac
//! algebra: γ-matrices together with the operators `i` and complex
//! conjugation `Ĉ`, acting real-linearly on C⁴.

pub mod error;
pub mod momsym;
pub mod numerics;
pub mod oplib;
pub mod poincare;
pub mod reps;
pub mod structure;
pub mod suite;
pub mod tables;

pub use error::{Error, Result};
pub use numerics::{ExactScalar, FloatScalar, Jet, RealSurd};
pub use oplib::{GeneralOp, Mat4, Operator, RealifiedOp};
