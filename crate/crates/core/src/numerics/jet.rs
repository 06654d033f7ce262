use std::ops::{Add, Div, Mul, Neg, Sub};

use super::FloatScalar;

/// Complex-valued dual number in three real directions: a value together
/// with its gradient with respect to the momentum components (q₁, q₂, q₃).
///
/// Arithmetic propagates first derivatives exactly (forward mode). Because
/// q is real, complex conjugation commutes with differentiation and acts
/// componentwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub v: FloatScalar,
    pub d: [FloatScalar; 3],
}

const ZERO: FloatScalar = FloatScalar::new(0.0, 0.0);

impl Jet {
    pub fn new(v: FloatScalar, d: [FloatScalar; 3]) -> Self {
        Jet { v, d }
    }

    pub fn constant(v: FloatScalar) -> Self {
        Jet { v, d: [ZERO; 3] }
    }

    pub fn real(x: f64) -> Self {
        Jet::constant(FloatScalar::new(x, 0.0))
    }

    /// The coordinate function q_axis evaluated at `x`, seeded in its own direction.
    pub fn variable(x: f64, axis: usize) -> Self {
        let mut d = [ZERO; 3];
        d[axis] = FloatScalar::new(1.0, 0.0);
        Jet {
            v: FloatScalar::new(x, 0.0),
            d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.v == ZERO && self.d.iter().all(|x| *x == ZERO)
    }

    pub fn conj(&self) -> Self {
        Jet {
            v: self.v.conj(),
            d: self.d.map(|x| x.conj()),
        }
    }

    pub fn scale(&self, s: FloatScalar) -> Self {
        Jet {
            v: self.v * s,
            d: self.d.map(|x| x * s),
        }
    }

    pub fn recip(&self) -> Self {
        let inv = 1.0 / self.v;
        let f = -inv * inv;
        Jet {
            v: inv,
            d: self.d.map(|x| x * f),
        }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let r = self.v.sqrt();
        let f = 0.5 / r;
        Jet {
            v: r,
            d: self.d.map(|x| x * f),
        }
    }

    /// Replaces the value while keeping the tangent directions.
    pub fn shifted(&self, dv: f64) -> Self {
        Jet {
            v: self.v + dv,
            d: self.d,
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            v: self.v + o.v,
            d: [self.d[0] + o.d[0], self.d[1] + o.d[1], self.d[2] + o.d[2]],
        }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet {
            v: self.v - o.v,
            d: [self.d[0] - o.d[0], self.d[1] - o.d[1], self.d[2] - o.d[2]],
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet {
            v: self.v * o.v,
            d: [
                self.d[0] * o.v + self.v * o.d[0],
                self.d[1] * o.v + self.v * o.d[1],
                self.d[2] * o.v + self.v * o.d[2],
            ],
        }
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Jet) -> Jet {
        self * o.recip()
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            v: -self.v,
            d: self.d.map(|x| -x),
        }
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, s: f64) -> Jet {
        self.scale(FloatScalar::new(s, 0.0))
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, s: f64) -> Jet {
        self.shifted(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega(q: [Jet; 3], m: f64) -> Jet {
        (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + m * m).sqrt()
    }

    #[test]
    fn gradient_of_omega() {
        let q = [0.3, -1.2, 2.0];
        let jets = [Jet::variable(q[0], 0), Jet::variable(q[1], 1), Jet::variable(q[2], 2)];
        let w = omega(jets, 1.0);
        let wv = (q.iter().map(|x| x * x).sum::<f64>() + 1.0).sqrt();
        assert!((w.v.re - wv).abs() < 1e-15);
        for (d, x) in w.d.iter().zip(q) {
            assert!((d.re - x / wv).abs() < 1e-15);
        }
    }

    #[test]
    fn quotient_rule_matches_central_difference() {
        let f = |x: Jet| (x * x + 2.0).recip() * x;
        let x0 = 0.7;
        let exact = f(Jet::variable(x0, 0)).d[0].re;
        let h = 1e-5;
        let fd = (f(Jet::real(x0 + h)).v.re - f(Jet::real(x0 - h)).v.re) / (2.0 * h);
        assert!((exact - fd).abs() < 1e-9);
    }
}
