use super::{ExactScalar, Jet};

/// Double-precision complex number used for momentum-dependent entries.
pub type FloatScalar = num_complex::Complex64;

/// Ring operations the small-matrix code is generic over.
///
/// Methods take references so big-rational scalars are not cloned needlessly.
pub trait Scalar: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Scalar for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn i() -> Self {
        ExactScalar::i()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        ExactScalar::conj(self)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}

impl Scalar for FloatScalar {
    fn zero() -> Self {
        FloatScalar::new(0.0, 0.0)
    }
    fn one() -> Self {
        FloatScalar::new(1.0, 0.0)
    }
    fn i() -> Self {
        FloatScalar::new(0.0, 1.0)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        FloatScalar::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl Scalar for Jet {
    fn zero() -> Self {
        Jet::constant(FloatScalar::new(0.0, 0.0))
    }
    fn one() -> Self {
        Jet::constant(FloatScalar::new(1.0, 0.0))
    }
    fn i() -> Self {
        Jet::constant(FloatScalar::new(0.0, 1.0))
    }
    fn add_ref(&self, o: &Self) -> Self {
        *self + *o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        *self - *o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        *self * *o
    }
    fn neg_ref(&self) -> Self {
        -*self
    }
    fn conj(&self) -> Self {
        Jet::conj(self)
    }
    fn is_zero(&self) -> bool {
        Jet::is_zero(self)
    }
}
