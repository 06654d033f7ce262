use std::fmt;
use std::sync::Arc;

use crate::numerics::{FloatScalar, Jet};
use crate::oplib::{GeneralOp, Operator};

/// Momentum point with gradient seeds; `[Jet::real(q1), …]` for plain evaluation.
pub type JetPoint = [Jet; 3];

/// Symbol value at a point: A(q), B(q) with first derivatives.
pub type SymbolValue = Operator<Jet>;

type Evaluator = dyn Fn(&JetPoint) -> SymbolValue + Send + Sync;

/// Declared behaviour under q ↦ −q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Unknown,
}

impl Parity {
    pub fn product(self, o: Parity) -> Parity {
        match (self, o) {
            (Parity::Unknown, _) | (_, Parity::Unknown) => Parity::Unknown,
            (a, b) if a == b => Parity::Even,
            _ => Parity::Odd,
        }
    }

    pub fn sum(self, o: Parity) -> Parity {
        if self == o {
            self
        } else {
            Parity::Unknown
        }
    }
}

/// Momentum-space symbol q ↦ (A(q), B(q)) of a translation-invariant operator
/// φ ↦ Aφ + Bφ*.
///
/// Fourier convention: ∂_n ↦ iq_n and (Ĉφ)~(q) = conj(φ̃(−q)), so the
/// antilinear part of a left factor sees the right factor at −q:
///
/// (X∘Y)(q) = (A_X A_Y(q) + B_X conj(B_Y(−q)), A_X B_Y(q) + B_X conj(A_Y(−q))).
#[derive(Clone)]
pub struct MomentumSymbol {
    eval: Arc<Evaluator>,
    parity: Parity,
    constant: Option<GeneralOp>,
    mass: Option<f64>,
}

/// Lifts an exact operator to jet entries.
pub fn jet_operator(op: &GeneralOp) -> SymbolValue {
    op.to_float().map(|z| Jet::constant(*z))
}

/// Plain momentum point (no gradient).
pub fn point(q: [f64; 3]) -> JetPoint {
    q.map(Jet::real)
}

/// Momentum point seeded for first derivatives in all three directions.
pub fn variable_point(q: [f64; 3]) -> JetPoint {
    [Jet::variable(q[0], 0), Jet::variable(q[1], 1), Jet::variable(q[2], 2)]
}

pub fn values(v: &SymbolValue) -> Operator<FloatScalar> {
    v.map(|j| j.v)
}

/// Largest entrywise distance between two operator values.
pub fn distance(x: &Operator<FloatScalar>, y: &Operator<FloatScalar>) -> f64 {
    let mut m = 0.0f64;
    for r in 0..4 {
        for c in 0..4 {
            m = m
                .max((x.linear.get(r, c) - y.linear.get(r, c)).norm())
                .max((x.antilinear.get(r, c) - y.antilinear.get(r, c)).norm());
        }
    }
    m
}

impl MomentumSymbol {
    pub fn new(
        mass: Option<f64>,
        parity: Parity,
        f: impl Fn(&JetPoint) -> SymbolValue + Send + Sync + 'static,
    ) -> Self {
        MomentumSymbol {
            eval: Arc::new(f),
            parity,
            constant: None,
            mass,
        }
    }

    /// Momentum-independent symbol; keeps the exact operator for exact checks.
    pub fn constant(op: &GeneralOp) -> Self {
        let value = jet_operator(op);
        MomentumSymbol {
            eval: Arc::new(move |_| value.clone()),
            parity: Parity::Even,
            constant: Some(op.clone()),
            mass: None,
        }
    }

    /// `f(q)·M` for a complex scalar function `f` and exact matrix operator `M`.
    pub fn scalar_times(
        mass: Option<f64>,
        parity: Parity,
        f: impl Fn(&JetPoint) -> Jet + Send + Sync + 'static,
        op: &GeneralOp,
    ) -> Self {
        let m = jet_operator(op);
        MomentumSymbol::new(mass, parity, move |q| m.scale(&f(q)))
    }

    pub fn zero() -> Self {
        MomentumSymbol::constant(&GeneralOp::zero())
    }

    pub fn identity() -> Self {
        MomentumSymbol::constant(&GeneralOp::identity())
    }

    pub fn eval(&self, q: &JetPoint) -> SymbolValue {
        (self.eval)(q)
    }

    /// Numerical value at a real momentum.
    pub fn at(&self, q: [f64; 3]) -> Operator<FloatScalar> {
        values(&self.eval(&point(q)))
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn mass(&self) -> Option<f64> {
        self.mass
    }

    pub fn constant_op(&self) -> Option<&GeneralOp> {
        self.constant.as_ref()
    }

    fn merged_mass(&self, o: &MomentumSymbol) -> Option<f64> {
        self.mass.or(o.mass)
    }

    /// The symbol at −q (as a function of q).
    pub fn reflect_at(&self, q: &JetPoint) -> SymbolValue {
        match self.parity {
            Parity::Even => self.eval(q),
            Parity::Odd => self.eval(q).neg(),
            Parity::Unknown => self.eval(&q.map(|x| -x)),
        }
    }

    pub fn reflected(&self) -> MomentumSymbol {
        let s = self.clone();
        MomentumSymbol {
            eval: Arc::new(move |q| s.reflect_at(q)),
            parity: self.parity,
            constant: self.constant.clone(),
            mass: self.mass,
        }
    }

    /// Evaluates `self∘rhs` at one point, reflecting only when needed.
    pub fn compose_at(&self, rhs: &MomentumSymbol, q: &JetPoint) -> SymbolValue {
        let x = self.eval(q);
        let y = rhs.eval(q);
        if x.antilinear.is_zero() {
            x.compose_reflected(&y, &y)
        } else {
            let yr = rhs.reflect_at(q);
            x.compose_reflected(&y, &yr)
        }
    }

    pub fn compose(&self, rhs: &MomentumSymbol) -> MomentumSymbol {
        if let (Some(a), Some(b)) = (&self.constant, &rhs.constant) {
            return MomentumSymbol::constant(&a.compose(b)).with_mass(self.merged_mass(rhs));
        }
        let (x, y) = (self.clone(), rhs.clone());
        MomentumSymbol {
            eval: Arc::new(move |q| x.compose_at(&y, q)),
            parity: self.parity.product(rhs.parity),
            constant: None,
            mass: self.merged_mass(rhs),
        }
    }

    fn with_mass(mut self, mass: Option<f64>) -> Self {
        self.mass = mass;
        self
    }

    fn combine(&self, rhs: &MomentumSymbol, sign: f64) -> MomentumSymbol {
        if let (Some(a), Some(b)) = (&self.constant, &rhs.constant) {
            let op = if sign > 0.0 { a + b } else { a - b };
            return MomentumSymbol::constant(&op).with_mass(self.merged_mass(rhs));
        }
        let (x, y) = (self.clone(), rhs.clone());
        let s = Jet::real(sign);
        MomentumSymbol {
            eval: Arc::new(move |q| x.eval(q).add(&y.eval(q).scale(&s))),
            parity: self.parity.sum(rhs.parity),
            constant: None,
            mass: self.merged_mass(rhs),
        }
    }

    pub fn add(&self, rhs: &MomentumSymbol) -> MomentumSymbol {
        self.combine(rhs, 1.0)
    }

    pub fn sub(&self, rhs: &MomentumSymbol) -> MomentumSymbol {
        self.combine(rhs, -1.0)
    }

    /// Multiplies both parts by a real constant.
    pub fn scale(&self, r: f64) -> MomentumSymbol {
        let x = self.clone();
        let s = Jet::real(r);
        MomentumSymbol {
            eval: Arc::new(move |q| x.eval(q).scale(&s)),
            parity: self.parity,
            constant: None,
            mass: self.mass,
        }
    }

    /// Multiplies both parts by a real even scalar function of q.
    pub fn scale_by(&self, parity: Parity, f: impl Fn(&JetPoint) -> Jet + Send + Sync + 'static) -> MomentumSymbol {
        let x = self.clone();
        MomentumSymbol {
            eval: Arc::new(move |q| x.eval(q).scale(&f(q))),
            parity: self.parity.product(parity),
            constant: None,
            mass: self.mass,
        }
    }

    pub fn neg(&self) -> MomentumSymbol {
        self.scale(-1.0)
    }

    pub fn commutator(&self, rhs: &MomentumSymbol) -> MomentumSymbol {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    pub fn anticommutator(&self, rhs: &MomentumSymbol) -> MomentumSymbol {
        self.compose(rhs).add(&rhs.compose(self))
    }

    /// Largest distance to `other` over the sample momenta.
    pub fn max_distance(&self, other: &MomentumSymbol, samples: &[[f64; 3]]) -> f64 {
        samples
            .iter()
            .map(|&q| distance(&self.at(q), &other.at(q)))
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for MomentumSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MomentumSymbol")
            .field("parity", &self.parity)
            .field("constant", &self.constant.is_some())
            .field("mass", &self.mass)
            .finish()
    }
}

/// ω(q) = √(q² + m²).
pub fn omega(q: &JetPoint, m: f64) -> Jet {
    (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + m * m).sqrt()
}

/// Σ_k M_k q_k for three exact matrices.
pub fn dot_matrices(ms: &[Operator<Jet>; 3], q: &JetPoint) -> Operator<Jet> {
    ms[0].scale(&q[0]).add(&ms[1].scale(&q[1])).add(&ms[2].scale(&q[2]))
}
