use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rational, Rational};
use crate::error::{Error, Result};

/// An element `a + b√2` of the real field ℚ(√2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RealSurd {
    pub a: Rational,
    pub b: Rational,
}

impl RealSurd {
    pub fn new(a: Rational, b: Rational) -> Self {
        RealSurd { a, b }
    }

    pub fn zero() -> Self {
        RealSurd::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        RealSurd::new(Rational::one(), Rational::zero())
    }

    pub fn sqrt2() -> Self {
        RealSurd::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        RealSurd::new(Rational::from_integer(n.into()), Rational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        RealSurd::new(rational(num, den), Rational::zero())
    }

    /// `(a_num/a_den) + (b_num/b_den)·√2`.
    pub fn from_parts(a: (i64, i64), b: (i64, i64)) -> Self {
        RealSurd::new(rational(a.0, a.1), rational(b.0, b.1))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√2`.
    pub fn galois(&self) -> Self {
        RealSurd::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 2b²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - rational(2, 1) * &self.b * &self.b
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() || self.is_zero() {
            return RealSurd::zero();
        }
        RealSurd::new(&self.a * r, &self.b * r)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(RealSurd::new(&self.a / &n, -(&self.b / &n)))
    }

    /// Exact sign: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // Opposite signs: compare a² with 2b².
        let n = self.norm();
        match sign_of(&n) {
            0 => 0,
            s if s > 0 => sa,
            _ => sb,
        }
    }

    /// Nearest double. When the two terms cancel, the value is computed as
    /// `(a² − 2b²)/(a − b√2)` so the subtraction happens exactly in ℚ.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        if self.a.is_zero() || self.b.is_zero() || (a > 0.0) == (b > 0.0) {
            return a + b * std::f64::consts::SQRT_2;
        }
        let n = self.norm().to_f64().unwrap_or(f64::NAN);
        n / (a - b * std::f64::consts::SQRT_2)
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl<'a> Add<&'a RealSurd> for &'a RealSurd {
    type Output = RealSurd;
    fn add(self, o: &RealSurd) -> RealSurd {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        RealSurd::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a RealSurd> for &'a RealSurd {
    type Output = RealSurd;
    fn sub(self, o: &RealSurd) -> RealSurd {
        if o.is_zero() {
            return self.clone();
        }
        RealSurd::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a RealSurd> for &'a RealSurd {
    type Output = RealSurd;
    fn mul(self, o: &RealSurd) -> RealSurd {
        if self.is_zero() || o.is_zero() {
            return RealSurd::zero();
        }
        if self.is_rational() && o.is_rational() {
            return RealSurd::new(&self.a * &o.a, Rational::zero());
        }
        let a = &self.a * &o.a + rational(2, 1) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        RealSurd::new(a, b)
    }
}

impl Neg for &RealSurd {
    type Output = RealSurd;
    fn neg(self) -> RealSurd {
        RealSurd::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(RealSurd, Add add, Sub sub, Mul mul);

impl Neg for RealSurd {
    type Output = RealSurd;
    fn neg(self) -> RealSurd {
        -&self
    }
}

/// Renders `a`, `b*sqrt2`, `a + b*sqrt2` with exact rationals, e.g. `1/2*sqrt2`.
impl fmt::Display for RealSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |b: &Rational| {
            if b.is_one() {
                "sqrt2".to_string()
            } else if (-b).is_one() {
                "-sqrt2".to_string()
            } else {
                format!("{b}*sqrt2")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}", surd(&self.b)),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}", self.a, surd(&-self.b.clone()))
                } else {
                    write!(f, "{} + {}", self.a, surd(&self.b))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = RealSurd::sqrt2();
        assert_eq!(&s * &s, RealSurd::from_int(2));
    }

    #[test]
    fn inverse_of_unit() {
        // (1 + √2)(−1 + √2) = 1
        let u = RealSurd::from_parts((1, 1), (1, 1));
        let v = RealSurd::from_parts((-1, 1), (1, 1));
        assert_eq!(&u * &v, RealSurd::one());
        assert_eq!(u.inv().unwrap(), v);
        assert_eq!(RealSurd::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(RealSurd::from_parts((3, 2), (-1, 1)).signum(), 1);
        assert_eq!(RealSurd::from_parts((7, 5), (-1, 1)).signum(), -1);
        assert_eq!(RealSurd::from_parts((0, 1), (-1, 3)).signum(), -1);
        assert_eq!(RealSurd::zero().signum(), 0);
    }

    #[test]
    fn cancelling_terms_stay_accurate() {
        // 99/70 is a close approximant of √2; the difference is tiny.
        let x = RealSurd::from_parts((99, 70), (-1, 1));
        // (99/70)² − 2 = 1/4900, so x = 1 / (4900·(99/70 + √2)).
        let exact = 1.0 / (4900.0 * (99.0 / 70.0 + std::f64::consts::SQRT_2));
        assert!((x.to_f64() - exact).abs() <= 4.0 * f64::EPSILON * exact);
    }

    #[test]
    fn display() {
        assert_eq!(RealSurd::from_parts((0, 1), (1, 2)).to_string(), "1/2*sqrt2");
        assert_eq!(RealSurd::from_parts((-3, 1), (-1, 1)).to_string(), "-3 - sqrt2");
        assert_eq!(RealSurd::zero().to_string(), "0");
    }
}
