use crate::numerics::Scalar;

use super::Mat4;

/// Value of an operator φ ↦ Aφ + Bφ* on C⁴: `linear` is A, `antilinear` is B.
///
/// This is the carrier shared by exact constants and by momentum symbols
/// evaluated at a point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Operator<T> {
    pub linear: Mat4<T>,
    pub antilinear: Mat4<T>,
}

impl<T: Scalar> Operator<T> {
    pub fn new(linear: Mat4<T>, antilinear: Mat4<T>) -> Self {
        Operator { linear, antilinear }
    }

    pub fn zero() -> Self {
        Operator::new(Mat4::zero(), Mat4::zero())
    }

    pub fn identity() -> Self {
        Operator::new(Mat4::identity(), Mat4::zero())
    }

    pub fn from_linear(a: Mat4<T>) -> Self {
        Operator::new(a, Mat4::zero())
    }

    pub fn from_antilinear(b: Mat4<T>) -> Self {
        Operator::new(Mat4::zero(), b)
    }

    pub fn is_zero(&self) -> bool {
        self.linear.is_zero() && self.antilinear.is_zero()
    }

    /// Composition `self ∘ rhs` where `rhs_reflected` is the right factor seen
    /// by the antilinear part. For constants it equals `rhs`; for momentum
    /// symbols it is `rhs` evaluated at −q.
    pub fn compose_reflected(&self, rhs: &Self, rhs_reflected: &Self) -> Self {
        let mut linear = self.linear.mul(&rhs.linear);
        let mut antilinear = self.linear.mul(&rhs.antilinear);
        if !self.antilinear.is_zero() {
            linear = linear.add(&self.antilinear.mul(&rhs_reflected.antilinear.conj()));
            antilinear = antilinear.add(&self.antilinear.mul(&rhs_reflected.linear.conj()));
        }
        Operator::new(linear, antilinear)
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        self.compose_reflected(rhs, rhs)
    }

    pub fn add(&self, o: &Self) -> Self {
        Operator::new(self.linear.add(&o.linear), self.antilinear.add(&o.antilinear))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Operator::new(self.linear.sub(&o.linear), self.antilinear.sub(&o.antilinear))
    }

    pub fn neg(&self) -> Self {
        Operator::new(self.linear.neg(), self.antilinear.neg())
    }

    /// Multiplies both parts by `s`. Only meaningful as a real-algebra
    /// operation when `s` is real; callers enforce that.
    pub fn scale(&self, s: &T) -> Self {
        Operator::new(self.linear.scale(s), self.antilinear.scale(s))
    }

    /// (A, B) ↦ (A†, Bᵀ): the adjoint under ⟨X†φ, ψ⟩ = ⟨φ, Xψ⟩ for linear
    /// parts and ⟨X†φ, ψ⟩ = ⟨Xψ, φ⟩ for antilinear parts.
    pub fn adjoint(&self) -> Self {
        Operator::new(self.linear.adjoint(), self.antilinear.transpose())
    }

    /// Action on a spinor.
    pub fn apply(&self, phi: &[T; 4]) -> [T; 4] {
        let conj: [T; 4] = std::array::from_fn(|k| phi[k].conj());
        let a = self.linear.mul_vec(phi);
        let b = self.antilinear.mul_vec(&conj);
        std::array::from_fn(|k| a[k].add_ref(&b[k]))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Operator<U> {
        Operator::new(
            Mat4::from_fn(|r, c| f(self.linear.get(r, c))),
            Mat4::from_fn(|r, c| f(self.antilinear.get(r, c))),
        )
    }
}
