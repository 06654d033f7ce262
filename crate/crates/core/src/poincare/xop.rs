use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::momsym::{point, values, variable_point, JetPoint, MomentumSymbol, Parity};
use crate::numerics::{FloatScalar, Jet};
use crate::oplib::{GeneralOp, Operator};

/// Exponents of x¹, x², x³ in one monomial.
pub type MultiIndex = [u8; 3];

pub const CONSTANT: MultiIndex = [0, 0, 0];

pub fn unit_index(a: usize) -> MultiIndex {
    let mut m = [0; 3];
    m[a] = 1;
    m
}

/// How q-derivatives of coefficient symbols are computed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum DerivativeEngine {
    /// Forward-mode dual numbers; exact to rounding for first derivatives.
    /// Gradients of a derivative (needed only when reordering a second
    /// position factor) come from central differences of the dual derivative.
    Dual { h: f64 },
    /// Central differences with step `h`.
    CentralDifference { h: f64 },
}

impl Default for DerivativeEngine {
    fn default() -> Self {
        DerivativeEngine::Dual { h: 1e-5 }
    }
}

fn has_gradient(q: &JetPoint) -> bool {
    q.iter().any(|x| x.d.iter().any(|d| d.norm() != 0.0))
}

fn shift_axis(q: &JetPoint, axis: usize, h: f64) -> JetPoint {
    let mut p = *q;
    p[axis] = p[axis].shifted(h);
    p
}

impl DerivativeEngine {
    /// ∂S/∂q_b as a new symbol.
    pub fn derivative(self, s: &MomentumSymbol, b: usize) -> MomentumSymbol {
        let s = s.clone();
        let parity = match s.parity() {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::Unknown => Parity::Unknown,
        };
        match self {
            DerivativeEngine::CentralDifference { h } => MomentumSymbol::new(s.mass(), parity, move |q| {
                let plus = s.eval(&shift_axis(q, b, h));
                let minus = s.eval(&shift_axis(q, b, -h));
                plus.sub(&minus).scale(&Jet::real(0.5 / h))
            }),
            DerivativeEngine::Dual { h } => MomentumSymbol::new(s.mass(), parity, move |q| {
                let qv = q.map(|x| x.v.re);
                let dual = |p: [f64; 3]| -> Operator<FloatScalar> { s.eval(&variable_point(p)).map(|j| j.d[b]) };
                let value = dual(qv);
                if !has_gradient(q) {
                    return value.map(|z| Jet::constant(*z));
                }
                // d/dq_j of the derivative, chained through the seeds of q.
                let grads: Vec<Operator<FloatScalar>> = (0..3)
                    .map(|j| {
                        let mut p = qv;
                        let mut m = qv;
                        p[j] += h;
                        m[j] -= h;
                        dual(p).sub(&dual(m)).scale(&FloatScalar::new(0.5 / h, 0.0))
                    })
                    .collect();
                let entry =
                    |part: fn(&Operator<FloatScalar>) -> &crate::oplib::Mat4<FloatScalar>, r: usize, c: usize| {
                        let mut d = [FloatScalar::new(0.0, 0.0); 3];
                        for (k, dk) in d.iter_mut().enumerate() {
                            for (j, g) in grads.iter().enumerate() {
                                *dk += part(g).get(r, c) * q[j].d[k];
                            }
                        }
                        Jet::new(*part(&value).get(r, c), d)
                    };
                Operator::new(
                    crate::oplib::Mat4::from_fn(|r, c| entry(|o| &o.linear, r, c)),
                    crate::oplib::Mat4::from_fn(|r, c| entry(|o| &o.antilinear, r, c)),
                )
            }),
        }
    }
}

/// Σ_α x^α·S_α(q): a polynomial in the position operators x^a ↦ i∂/∂q_a with
/// momentum-symbol coefficients, all positions standing to the left.
///
/// Moving a coefficient left past a position uses S·x^b = x^b·S − i∂_bS.
/// Positions are real, so they commute with Ĉ.
#[derive(Clone, Debug)]
pub struct XOp {
    mass: f64,
    engine: DerivativeEngine,
    terms: BTreeMap<MultiIndex, MomentumSymbol>,
}

impl XOp {
    pub fn zero(mass: f64) -> Self {
        XOp {
            mass,
            engine: DerivativeEngine::default(),
            terms: BTreeMap::new(),
        }
    }

    pub fn with_engine(mut self, engine: DerivativeEngine) -> Self {
        self.engine = engine;
        self
    }

    pub fn engine(&self) -> DerivativeEngine {
        self.engine
    }

    pub fn from_symbol(mass: f64, s: MomentumSymbol) -> Self {
        XOp::zero(mass).with_term(CONSTANT, s)
    }

    /// The position operator x^a (a = 0, 1, 2 for the three spatial axes).
    pub fn position(mass: f64, a: usize) -> Self {
        XOp::zero(mass).with_term(unit_index(a), MomentumSymbol::identity())
    }

    /// The momentum operator ∂_a with symbol iq_a.
    pub fn momentum(mass: f64, a: usize) -> Self {
        XOp::from_symbol(mass, momentum_symbol(a))
    }

    /// Adds `x^index·s` to the operator.
    pub fn with_term(mut self, index: MultiIndex, s: MomentumSymbol) -> Self {
        self.add_term(index, s);
        self
    }

    fn add_term(&mut self, index: MultiIndex, s: MomentumSymbol) {
        let entry = match self.terms.remove(&index) {
            Some(old) => old.add(&s),
            None => s,
        };
        self.terms.insert(index, entry);
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, MomentumSymbol> {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|k| k.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn check_mass(&self, o: &XOp) -> Result<()> {
        if self.mass != o.mass {
            return Err(Error::MassMismatch(self.mass, o.mass));
        }
        Ok(())
    }

    pub fn add(&self, o: &XOp) -> Result<XOp> {
        self.check_mass(o)?;
        let mut out = self.clone();
        for (k, s) in &o.terms {
            out.add_term(*k, s.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, r: f64) -> XOp {
        XOp {
            mass: self.mass,
            engine: self.engine,
            terms: self.terms.iter().map(|(k, s)| (*k, s.scale(r))).collect(),
        }
    }

    pub fn sub(&self, o: &XOp) -> Result<XOp> {
        self.add(&o.scale(-1.0))
    }

    /// `S·x^β` brought to normal form.
    fn symbol_times_positions(&self, s: &MomentumSymbol, beta: MultiIndex) -> BTreeMap<MultiIndex, MomentumSymbol> {
        let mut out = BTreeMap::new();
        let Some(b) = (0..3).find(|&i| beta[i] > 0) else {
            out.insert(CONSTANT, s.clone());
            return out;
        };
        let mut rest = beta;
        rest[b] -= 1;
        let mut push = |k: MultiIndex, t: MomentumSymbol| {
            let t = match out.remove(&k) {
                Some(old) => old.add(&t),
                None => t,
            };
            out.insert(k, t);
        };
        // S·x^b·x^rest = x^b·S·x^rest − i(∂_bS)·x^rest
        for (k, t) in self.symbol_times_positions(s, rest) {
            let mut k2 = k;
            k2[b] += 1;
            push(k2, t);
        }
        let ds = self.engine.derivative(s, b);
        let minus_i = MomentumSymbol::constant(&GeneralOp::imaginary_unit().scale_ratio(-1, 1));
        for (k, t) in self.symbol_times_positions(&ds, rest) {
            push(k, minus_i.compose(&t));
        }
        out
    }

    /// Product `self∘rhs` in normal form.
    pub fn compose(&self, rhs: &XOp) -> Result<XOp> {
        self.check_mass(rhs)?;
        let mut out = XOp::zero(self.mass).with_engine(self.engine);
        for (a, s) in &self.terms {
            for (b, t) in &rhs.terms {
                for (c, u) in self.symbol_times_positions(s, *b) {
                    let k = [a[0] + c[0], a[1] + c[1], a[2] + c[2]];
                    out.add_term(k, u.compose(t));
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &XOp) -> Result<XOp> {
        self.compose(rhs)?.sub(&rhs.compose(self)?)
    }

    /// Coefficient of `x^index` at momentum q (zero if absent).
    pub fn coefficient_at(&self, index: MultiIndex, q: [f64; 3]) -> Operator<FloatScalar> {
        match self.terms.get(&index) {
            Some(s) => values(&s.eval(&point(q))),
            None => Operator::zero(),
        }
    }

    /// Real coordinates of all coefficients for the given monomials and
    /// momenta: for each q, for each monomial, Re A, Im A, Re B, Im B.
    pub fn sample_vector(&self, indices: &[MultiIndex], samples: &[[f64; 3]]) -> Vec<f64> {
        let mut out = Vec::with_capacity(samples.len() * indices.len() * 64);
        for &q in samples {
            for &k in indices {
                let c = self.coefficient_at(k, q);
                for m in [&c.linear, &c.antilinear] {
                    for r in 0..4 {
                        for col in 0..4 {
                            out.push(m.get(r, col).re);
                        }
                    }
                    for r in 0..4 {
                        for col in 0..4 {
                            out.push(m.get(r, col).im);
                        }
                    }
                }
            }
        }
        out
    }

    /// Largest coefficient entry over the momenta.
    pub fn max_abs(&self, samples: &[[f64; 3]]) -> f64 {
        let keys: Vec<MultiIndex> = self.terms.keys().copied().collect();
        self.sample_vector(&keys, samples)
            .iter()
            .fold(0.0, |m, x| m.max(x.abs()))
    }
}

/// Symbol iq_a of ∂_a.
pub fn momentum_symbol(a: usize) -> MomentumSymbol {
    MomentumSymbol::scalar_times(
        None,
        Parity::Odd,
        move |q| q[a].scale(FloatScalar::new(0.0, 1.0)),
        &GeneralOp::identity(),
    )
}

/// All monomials of total degree ≤ `d`.
pub fn monomials(d: u8) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push([a, b, c]);
            }
        }
    }
    out.sort_by_key(|k| (k.iter().sum::<u8>(), std::cmp::Reverse(*k)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momsym::{omega, sample_momenta};

    const M: f64 = 1.0;

    fn qs() -> Vec<[f64; 3]> {
        sample_momenta(25, 5, 10.0)
    }

    #[test]
    fn canonical_pairs() {
        for n in 0..3 {
            for m in 0..3 {
                let c = XOp::momentum(M, n).commutator(&XOp::position(M, m)).unwrap();
                let expected = if n == m {
                    XOp::from_symbol(M, MomentumSymbol::identity())
                } else {
                    XOp::zero(M)
                };
                assert!(c.sub(&expected).unwrap().max_abs(&qs()) < 1e-14, "[p{n}, x{m}]");
                let pp = XOp::momentum(M, n).commutator(&XOp::momentum(M, m)).unwrap();
                assert!(pp.max_abs(&qs()) == 0.0);
            }
        }
    }

    #[test]
    fn orbital_rotation_acts_on_momenta() {
        // [x^l p_n − x^n p_l, p_k] = δ_nk p_l − δ_lk p_n
        let (l, n) = (0, 1);
        let xl_pn = XOp::position(M, l).compose(&XOp::momentum(M, n)).unwrap();
        let xn_pl = XOp::position(M, n).compose(&XOp::momentum(M, l)).unwrap();
        let ang = xl_pn.sub(&xn_pl).unwrap();
        for k in 0..3 {
            let c = ang.commutator(&XOp::momentum(M, k)).unwrap();
            let mut expected = XOp::zero(M);
            if n == k {
                expected = expected.add(&XOp::momentum(M, l)).unwrap();
            }
            if l == k {
                expected = expected.sub(&XOp::momentum(M, n)).unwrap();
            }
            assert!(c.sub(&expected).unwrap().max_abs(&qs()) < 1e-13, "k = {k}");
        }
    }

    #[test]
    fn mass_mismatch_rejected() {
        assert!(XOp::position(1.0, 0).compose(&XOp::position(2.0, 0)).is_err());
    }

    #[test]
    fn dual_and_difference_derivatives_agree() {
        let w = MomentumSymbol::scalar_times(Some(M), Parity::Even, |q| omega(q, M), &GeneralOp::identity());
        let dual = DerivativeEngine::default();
        let fd = DerivativeEngine::CentralDifference { h: 1e-5 };
        for b in 0..3 {
            let d1 = dual.derivative(&w, b);
            let d2 = fd.derivative(&w, b);
            assert!(d1.max_distance(&d2, &qs()) < 1e-7);
            // ∂ω/∂q_b = q_b/ω
            for q in qs() {
                let exact = q[b] / (q.iter().map(|x| x * x).sum::<f64>() + 1.0).sqrt();
                assert!((d1.at(q).linear.get(0, 0).re - exact).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn second_derivatives_through_jets() {
        // ∂₀∂₀ω = (ω² − q₀²)/ω³
        let w = MomentumSymbol::scalar_times(Some(M), Parity::Even, |q| omega(q, M), &GeneralOp::identity());
        for engine in [
            DerivativeEngine::default(),
            DerivativeEngine::CentralDifference { h: 1e-4 },
        ] {
            let d2 = engine.derivative(&engine.derivative(&w, 0), 0);
            let q = [1.0, 2.0, 2.0];
            let om = 10.0f64.sqrt();
            let exact = (om * om - 1.0) / om.powi(3);
            assert!((d2.at(q).linear.get(0, 0).re - exact).abs() < 1e-6);
        }
    }

    #[test]
    fn monomial_list() {
        assert_eq!(monomials(2).len(), 10);
        assert_eq!(monomials(1), vec![[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    }
}
