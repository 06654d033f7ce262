use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::numerics::{ExactScalar, FloatScalar, RealSurd};

use super::realify::realify_parts;
use super::{Mat4, Operator, RealifiedOp};

/// Which parts of an operator are nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Linearity {
    Zero,
    Linear,
    Antilinear,
    Mixed,
}

/// Exact real-linear operator φ ↦ Aφ + Bφ* on C⁴.
///
/// The real algebra structure is enforced at the type level: scaling takes a
/// [`RealSurd`]. Multiplying by i is composition with [`GeneralOp::imaginary_unit`],
/// which is not central (Ĉ∘i = −i∘Ĉ).
///
/// Equality compares the (A, B) pair exactly. The realified form is computed
/// on first use and cached.
#[derive(Clone)]
pub struct GeneralOp {
    op: Operator<ExactScalar>,
    realified: OnceLock<RealifiedOp>,
}

impl GeneralOp {
    pub fn new(linear: Mat4<ExactScalar>, antilinear: Mat4<ExactScalar>) -> Self {
        GeneralOp::from_operator(Operator::new(linear, antilinear))
    }

    pub fn from_operator(op: Operator<ExactScalar>) -> Self {
        GeneralOp {
            op,
            realified: OnceLock::new(),
        }
    }

    pub fn linear_op(a: Mat4<ExactScalar>) -> Self {
        GeneralOp::new(a, Mat4::zero())
    }

    pub fn antilinear_op(b: Mat4<ExactScalar>) -> Self {
        GeneralOp::new(Mat4::zero(), b)
    }

    pub fn zero() -> Self {
        GeneralOp::from_operator(Operator::zero())
    }

    pub fn identity() -> Self {
        GeneralOp::from_operator(Operator::identity())
    }

    /// Multiplication by the imaginary unit, as an operator.
    pub fn imaginary_unit() -> Self {
        GeneralOp::linear_op(Mat4::identity().scale(&ExactScalar::i()))
    }

    /// Complex conjugation Ĉφ = φ*.
    pub fn conjugation() -> Self {
        GeneralOp::antilinear_op(Mat4::identity())
    }

    pub fn linear(&self) -> &Mat4<ExactScalar> {
        &self.op.linear
    }

    pub fn antilinear(&self) -> &Mat4<ExactScalar> {
        &self.op.antilinear
    }

    pub fn as_operator(&self) -> &Operator<ExactScalar> {
        &self.op
    }

    pub fn kind(&self) -> Linearity {
        match (self.op.linear.is_zero(), self.op.antilinear.is_zero()) {
            (true, true) => Linearity::Zero,
            (false, true) => Linearity::Linear,
            (true, false) => Linearity::Antilinear,
            (false, false) => Linearity::Mixed,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.op.is_zero()
    }

    pub fn compose(&self, rhs: &GeneralOp) -> GeneralOp {
        GeneralOp::from_operator(self.op.compose(&rhs.op))
    }

    pub fn scale(&self, r: &RealSurd) -> GeneralOp {
        GeneralOp::from_operator(self.op.scale(&ExactScalar::real(r.clone())))
    }

    pub fn scale_ratio(&self, num: i64, den: i64) -> GeneralOp {
        self.scale(&RealSurd::from_ratio(num, den))
    }

    /// `self + r·y` for a real coefficient `r`; complex `r` is rejected.
    pub fn add_scale(&self, y: &GeneralOp, r: &ExactScalar) -> Result<GeneralOp> {
        if !r.is_real() {
            return Err(Error::NonRealScale(r.to_string()));
        }
        Ok(GeneralOp::from_operator(self.op.add(&y.op.scale(r))))
    }

    pub fn adjoint(&self) -> GeneralOp {
        GeneralOp::from_operator(self.op.adjoint())
    }

    pub fn apply(&self, phi: &[ExactScalar; 4]) -> [ExactScalar; 4] {
        self.op.apply(phi)
    }

    pub fn realified(&self) -> &RealifiedOp {
        self.realified.get_or_init(|| realify_parts(self))
    }

    /// Real coordinates in the fixed order Re A, Im A, Re B, Im B (row-major).
    pub fn vectorize(&self) -> Vec<RealSurd> {
        let mut v = Vec::with_capacity(64);
        for m in [&self.op.linear, &self.op.antilinear] {
            for part in 0..2 {
                for r in 0..4 {
                    for c in 0..4 {
                        let x = m.get(r, c);
                        v.push(if part == 0 { x.re.clone() } else { x.im.clone() });
                    }
                }
            }
        }
        v
    }

    /// Inverse of [`GeneralOp::vectorize`].
    pub fn from_vector(v: &[RealSurd]) -> GeneralOp {
        assert_eq!(v.len(), 64, "operator vectors have 64 real coordinates");
        let mat = |offset: usize| {
            Mat4::from_fn(|r, c| ExactScalar::new(v[offset + r * 4 + c].clone(), v[offset + 16 + r * 4 + c].clone()))
        };
        GeneralOp::new(mat(0), mat(32))
    }

    /// Element `k` of the standard real basis of the 64-dimensional operator space.
    pub fn basis_element(k: usize) -> GeneralOp {
        let mut v = vec![RealSurd::zero(); 64];
        v[k] = RealSurd::one();
        GeneralOp::from_vector(&v)
    }

    pub fn to_float(&self) -> Operator<FloatScalar> {
        self.op.map(ExactScalar::to_float)
    }

    /// True when `self = s·other` for some sign.
    pub fn equals_up_to_sign(&self, other: &GeneralOp) -> Option<i32> {
        if self == other {
            Some(1)
        } else if *self == -other {
            Some(-1)
        } else {
            None
        }
    }
}

impl PartialEq for GeneralOp {
    fn eq(&self, o: &Self) -> bool {
        self.op == o.op
    }
}

impl Eq for GeneralOp {}

impl std::hash::Hash for GeneralOp {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.op.hash(state)
    }
}

impl fmt::Debug for GeneralOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneralOp")
            .field("linear", &self.op.linear.to_string())
            .field("antilinear", &self.op.antilinear.to_string())
            .finish()
    }
}

impl fmt::Display for GeneralOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            Linearity::Zero => write!(f, "0"),
            Linearity::Linear => write!(f, "{}", self.op.linear),
            Linearity::Antilinear => write!(f, "({})·C", self.op.antilinear),
            Linearity::Mixed => write!(f, "{}\n+ ({})·C", self.op.linear, self.op.antilinear),
        }
    }
}

impl<'a> Mul<&'a GeneralOp> for &'a GeneralOp {
    type Output = GeneralOp;
    fn mul(self, rhs: &GeneralOp) -> GeneralOp {
        self.compose(rhs)
    }
}

impl<'a> Add<&'a GeneralOp> for &'a GeneralOp {
    type Output = GeneralOp;
    fn add(self, rhs: &GeneralOp) -> GeneralOp {
        GeneralOp::from_operator(self.op.add(&rhs.op))
    }
}

impl<'a> Sub<&'a GeneralOp> for &'a GeneralOp {
    type Output = GeneralOp;
    fn sub(self, rhs: &GeneralOp) -> GeneralOp {
        GeneralOp::from_operator(self.op.sub(&rhs.op))
    }
}

impl Neg for &GeneralOp {
    type Output = GeneralOp;
    fn neg(self) -> GeneralOp {
        GeneralOp::from_operator(self.op.neg())
    }
}

impl Mul for GeneralOp {
    type Output = GeneralOp;
    fn mul(self, rhs: GeneralOp) -> GeneralOp {
        self.compose(&rhs)
    }
}

impl Add for GeneralOp {
    type Output = GeneralOp;
    fn add(self, rhs: GeneralOp) -> GeneralOp {
        &self + &rhs
    }
}

impl Sub for GeneralOp {
    type Output = GeneralOp;
    fn sub(self, rhs: GeneralOp) -> GeneralOp {
        &self - &rhs
    }
}

impl Neg for GeneralOp {
    type Output = GeneralOp;
    fn neg(self) -> GeneralOp {
        -&self
    }
}
