//! Real-linear operators on C⁴: φ ↦ Aφ + Bφ*.

mod general;
pub mod linalg;
mod matrix;
mod operator;
mod realify;

pub use general::{GeneralOp, Linearity};
pub use linalg::{kernel, rank, Reduction, SpanBasis};
pub use matrix::Mat4;
pub use operator::Operator;
pub use realify::{realify, RealifiedOp};

use crate::numerics::RealSurd;

/// `X∘Y − Y∘X`.
pub fn commutator(x: &GeneralOp, y: &GeneralOp) -> GeneralOp {
    &x.compose(y) - &y.compose(x)
}

/// `X∘Y + Y∘X`.
pub fn anticommutator(x: &GeneralOp, y: &GeneralOp) -> GeneralOp {
    &x.compose(y) + &y.compose(x)
}

/// Real dimension of the span of `ops`.
pub fn span_rank<'a>(ops: impl IntoIterator<Item = &'a GeneralOp>) -> usize {
    let mut basis = SpanBasis::new();
    for op in ops {
        basis.insert(&op.vectorize());
    }
    basis.rank()
}

/// Echelon basis for the real span of `ops`, in insertion order.
pub fn span_basis<'a>(ops: impl IntoIterator<Item = &'a GeneralOp>) -> SpanBasis {
    let mut basis = SpanBasis::new();
    for op in ops {
        basis.insert(&op.vectorize());
    }
    basis
}

/// Basis of `{Q : X∘Q = Q∘X}` inside the 64-dimensional operator space.
pub fn centralizer(x: &GeneralOp) -> Vec<GeneralOp> {
    let rx = x.realified();
    let columns: Vec<Vec<RealSurd>> = (0..64)
        .map(|k| {
            let q = GeneralOp::basis_element(k);
            let rq = q.realified();
            rx.mul(rq).sub(&rq.mul(rx)).entries().to_vec()
        })
        .collect();
    kernel(&columns).iter().map(|v| GeneralOp::from_vector(v)).collect()
}

pub fn centralizer_dimension(x: &GeneralOp) -> usize {
    centralizer(x).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ExactScalar;

    fn gamma1() -> GeneralOp {
        let o = ExactScalar::zero;
        let p = ExactScalar::one;
        let n = || ExactScalar::from_int(-1);
        GeneralOp::linear_op(Mat4::from_rows([
            [o(), o(), o(), p()],
            [o(), o(), p(), o()],
            [o(), n(), o(), o()],
            [n(), o(), o(), o()],
        ]))
    }

    #[test]
    fn conjugation_is_an_involution() {
        let c = GeneralOp::conjugation();
        assert_eq!(&c * &c, GeneralOp::identity());
    }

    #[test]
    fn conjugation_anticommutes_with_i() {
        let c = GeneralOp::conjugation();
        let i = GeneralOp::imaginary_unit();
        assert_eq!(anticommutator(&c, &i), GeneralOp::zero());
    }

    #[test]
    fn commutator_with_identity_vanishes() {
        let x = gamma1();
        assert!(commutator(&GeneralOp::identity(), &x).is_zero());
    }

    #[test]
    fn add_scale_rejects_complex_coefficients() {
        let x = gamma1();
        assert!(x.add_scale(&x, &ExactScalar::i()).is_err());
        let zero = x.add_scale(&x, &ExactScalar::from_int(-1)).unwrap();
        assert!(zero.is_zero());
        assert_eq!(x.add_scale(&x, &ExactScalar::zero()).unwrap(), x);
    }

    #[test]
    fn adjoint_of_conjugation() {
        let c = GeneralOp::conjugation();
        assert_eq!(c.adjoint(), c);
        assert_eq!(gamma1().adjoint(), -gamma1());
    }

    #[test]
    fn realified_identity_and_complex_structure() {
        assert_eq!(realify(&GeneralOp::identity()), RealifiedOp::identity());
        let ri = realify(&GeneralOp::imaginary_unit());
        let sq = ri.mul(&ri);
        assert!(sq.sub(&RealifiedOp::zero().sub(&RealifiedOp::identity())).is_zero());
    }

    #[test]
    fn vectorize_round_trip() {
        let x = &gamma1() * &GeneralOp::conjugation();
        assert_eq!(GeneralOp::from_vector(&x.vectorize()), x);
    }

    #[test]
    fn span_rank_of_duplicates() {
        let id = GeneralOp::identity();
        assert_eq!(span_rank([&id, &id]), 1);
    }

    #[test]
    fn centralizer_of_identity_and_i() {
        assert_eq!(centralizer_dimension(&GeneralOp::identity()), 64);
        assert_eq!(centralizer_dimension(&GeneralOp::imaginary_unit()), 32);
    }
}
