use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{FloatScalar, Rational, RealSurd};
use crate::error::{Error, Result};

/// An element `a + b√2 + i(c + d√2)` of ℚ(i, √2).
///
/// Equality is structural and therefore exact; nothing is ever decided
/// through a floating-point approximation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    pub re: RealSurd,
    pub im: RealSurd,
}

impl ExactScalar {
    pub fn new(re: RealSurd, im: RealSurd) -> Self {
        ExactScalar { re, im }
    }

    pub fn zero() -> Self {
        ExactScalar::new(RealSurd::zero(), RealSurd::zero())
    }

    pub fn one() -> Self {
        ExactScalar::real(RealSurd::one())
    }

    pub fn i() -> Self {
        ExactScalar::new(RealSurd::zero(), RealSurd::one())
    }

    pub fn real(re: RealSurd) -> Self {
        ExactScalar::new(re, RealSurd::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar::real(RealSurd::from_int(n))
    }

    /// Gaussian integer `re + i·im`.
    pub fn gauss(re: i64, im: i64) -> Self {
        ExactScalar::new(RealSurd::from_int(re), RealSurd::from_int(im))
    }

    pub fn from_rational(r: Rational) -> Self {
        ExactScalar::real(RealSurd::new(r, Rational::zero()))
    }

    /// `1/√2 = √2/2`.
    pub fn inv_sqrt2() -> Self {
        ExactScalar::real(RealSurd::from_parts((0, 1), (1, 2)))
    }

    pub fn sqrt2() -> Self {
        ExactScalar::real(RealSurd::sqrt2())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactScalar::new(self.re.clone(), -&self.im)
    }

    /// |x|² as an element of ℚ(√2).
    pub fn norm_sqr(&self) -> RealSurd {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr().inv()?;
        let c = self.conj();
        Ok(ExactScalar::new(&c.re * &n, &c.im * &n))
    }

    pub fn scale_real(&self, r: &RealSurd) -> Self {
        ExactScalar::new(&self.re * r, &self.im * r)
    }

    pub fn to_float(&self) -> FloatScalar {
        FloatScalar::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if self.is_zero() || o.is_zero() {
            return ExactScalar::zero();
        }
        let re = &(&self.re * &o.re) - &(&self.im * &o.im);
        let im = &(&self.re * &o.im) + &(&self.im * &o.re);
        ExactScalar::new(re, im)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.re, -&self.im)
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: ExactScalar) -> ExactScalar {
        &self + &o
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: ExactScalar) -> ExactScalar {
        &self - &o
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: ExactScalar) -> ExactScalar {
        &self * &o
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl From<RealSurd> for ExactScalar {
    fn from(r: RealSurd) -> Self {
        ExactScalar::real(r)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let one = RealSurd::one();
        let imag = if self.im == one {
            "i".to_string()
        } else if self.im == -&one {
            "-i".to_string()
        } else if !self.im.a.is_zero() && !self.im.b.is_zero() {
            format!("({})*i", self.im)
        } else {
            format!("{}*i", self.im)
        };
        if self.re.is_zero() {
            return write!(f, "{imag}");
        }
        match imag.strip_prefix('-') {
            Some(rest) => write!(f, "{} - {}", self.re, rest),
            None => write!(f, "{} + {}", self.re, imag),
        }
    }
}

/// Binary or unary field operation selector for [`exact_arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Conj,
    Inv,
    Eq,
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithResult {
    Scalar(ExactScalar),
    Bool(bool),
}

/// Dispatches a field operation. Unary operations (`Conj`, `Inv`) act on `y`.
pub fn exact_arithmetic(x: &ExactScalar, y: &ExactScalar, op: ArithOp) -> Result<ArithResult> {
    Ok(match op {
        ArithOp::Add => ArithResult::Scalar(x + y),
        ArithOp::Mul => ArithResult::Scalar(x * y),
        ArithOp::Conj => ArithResult::Scalar(y.conj()),
        ArithOp::Inv => ArithResult::Scalar(y.inv()?),
        ArithOp::Eq => ArithResult::Bool(x == y),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> (i64, i64) {
        (n, d)
    }

    #[test]
    fn inv_sqrt2_squared_is_half() {
        let h = ExactScalar::inv_sqrt2();
        assert_eq!(&h * &h, ExactScalar::real(RealSurd::from_ratio(1, 2)));
    }

    #[test]
    fn conj_of_i_over_sqrt2() {
        let x = &ExactScalar::i() * &ExactScalar::inv_sqrt2();
        assert_eq!(x.conj(), -&x);
        assert_eq!(x.conj().to_string(), "-1/2*sqrt2*i");
    }

    #[test]
    fn unit_times_conjugate_unit() {
        let u = ExactScalar::real(RealSurd::from_parts(q(1, 1), q(1, 1)));
        let v = ExactScalar::real(RealSurd::from_parts(q(-1, 1), q(1, 1)));
        assert_eq!(&u * &v, ExactScalar::one());
    }

    #[test]
    fn dispatch_and_division_by_zero() {
        let x = ExactScalar::gauss(1, 2);
        assert_eq!(exact_arithmetic(&x, &x, ArithOp::Eq).unwrap(), ArithResult::Bool(true));
        assert_eq!(
            exact_arithmetic(&x, &ExactScalar::zero(), ArithOp::Inv),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            exact_arithmetic(&x, &x, ArithOp::Conj).unwrap(),
            ArithResult::Scalar(ExactScalar::gauss(1, -2))
        );
    }

    #[test]
    fn float_conversion() {
        let h = ExactScalar::inv_sqrt2().to_float();
        assert!((h.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(ExactScalar::zero().to_float().re, 0.0);
        let u = ExactScalar::real(RealSurd::from_parts(q(1, 1), q(1, 1))).to_float();
        assert!((u.re - 2.414213562373095).abs() < 1e-15);
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExactScalar::gauss(1, -1).to_string(), "1 - i");
        assert_eq!(ExactScalar::i().to_string(), "i");
        let x = ExactScalar::new(
            RealSurd::from_parts(q(0, 1), q(1, 2)),
            RealSurd::from_parts(q(1, 1), q(1, 1)),
        );
        assert_eq!(x.to_string(), "1/2*sqrt2 + (1 + sqrt2)*i");
    }

    pub(crate) fn arb_surd() -> impl Strategy<Value = RealSurd> {
        (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| RealSurd::from_parts((a, b), (c, d)))
    }

    fn arb_exact() -> impl Strategy<Value = ExactScalar> {
        (arb_surd(), arb_surd()).prop_map(|(re, im)| ExactScalar::new(re, im))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_exact(), y in arb_exact(), z in arb_exact()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x - &x, ExactScalar::zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), ExactScalar::one());
            }
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(x in arb_exact(), y in arb_exact()) {
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        }

        #[test]
        fn float_image_is_close(x in arb_exact(), y in arb_exact()) {
            let p = (&x * &y).to_float();
            let q = x.to_float() * y.to_float();
            prop_assert!((p - q).norm() <= 1e-12 * (1.0 + q.norm()));
        }
    }
}
