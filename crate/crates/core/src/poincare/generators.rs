use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::momsym::{fw_hamiltonian, omega, JetPoint, MomentumSymbol, Parity};
use crate::numerics::FloatScalar;
use crate::oplib::GeneralOp;
use crate::reps::{breve_spin, Basis};

use super::xop::{momentum_symbol, unit_index, XOp, CONSTANT};

/// One Poincaré generator G(t) = `op` + t·`time_slope`, given on the t = 0 slice.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub op: XOp,
    pub time_slope: Option<XOp>,
}

/// Names of the ten generators in their fixed order.
pub const GENERATOR_NAMES: [&str; 10] = ["p0", "p1", "p2", "p3", "j23", "j31", "j12", "j01", "j02", "j03"];

/// Covariant position x_l = −x^l (spatial metric entries are −1).
fn covariant_position_term(l: usize) -> (super::xop::MultiIndex, f64) {
    (unit_index(l), -1.0)
}

/// Spin part s̆_ln from the bosonic triplet: s̆_23 = s¹, s̆_31 = s², s̆_12 = s³.
fn spin_part(l: usize, n: usize) -> GeneralOp {
    let s = breve_spin();
    match (l, n) {
        (1, 2) => s.element(0).op.clone(),
        (2, 0) => s.element(1).op.clone(),
        (0, 1) => s.element(2).op.clone(),
        _ => unreachable!(),
    }
}

/// The ten generators commuting with the FW evolution operator ∂₀ + iγ⁰ω̂:
///
/// p₀ = −iγ⁰ω, p_n = ∂_n, j_ln = x_l p_n − x_n p_l + s̆_ln,
/// j_0k = x₀p_k + iγ⁰{x_kω + ∂_k/2ω + (s̆×∂)_k/(ω+m)},
///
/// with covariant spatial positions x_l and the x₀p_k term carried as a time slope.
pub fn build_poincare_generators(basis: &Basis, m: f64) -> Result<Vec<Generator>> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InvalidMass(m, "operation needs m > 0"));
    }
    let ig0 = basis.i_gamma0();
    let w = move |q: &JetPoint| omega(q, m);
    let p0 = XOp::from_symbol(
        m,
        MomentumSymbol::scalar_times(Some(m), Parity::Even, w, &ig0.scale_ratio(-1, 1)),
    );
    let p: Vec<XOp> = (0..3).map(|n| XOp::momentum(m, n)).collect();

    let mut gens = vec![Generator {
        name: "p0".into(),
        op: p0,
        time_slope: None,
    }];
    for (n, pn) in p.iter().enumerate() {
        gens.push(Generator {
            name: format!("p{}", n + 1),
            op: pn.clone(),
            time_slope: None,
        });
    }
    for (l, n) in [(1, 2), (2, 0), (0, 1)] {
        let (xl, sl) = covariant_position_term(l);
        let (xn, sn) = covariant_position_term(n);
        let op = XOp::zero(m)
            .with_term(xl, momentum_symbol(n).scale(sl))
            .with_term(xn, momentum_symbol(l).scale(-sn))
            .with_term(CONSTANT, MomentumSymbol::constant(&spin_part(l, n)));
        gens.push(Generator {
            name: format!("j{}{}", l + 1, n + 1),
            op,
            time_slope: None,
        });
    }
    let spin = breve_spin();
    for k in 0..3 {
        let (a, b) = ((k + 1) % 3, (k + 2) % 3);
        let (xk, sk) = covariant_position_term(k);
        let orbital = MomentumSymbol::scalar_times(Some(m), Parity::Even, w, &ig0).scale(sk);
        let sa = MomentumSymbol::constant(&spin.element(a).op);
        let sb = MomentumSymbol::constant(&spin.element(b).op);
        let i = FloatScalar::new(0.0, 1.0);
        let boost_tail = MomentumSymbol::scalar_times(
            Some(m),
            Parity::Odd,
            move |q| q[k].scale(i) * (w(q) * 2.0).recip(),
            &GeneralOp::identity(),
        )
        .add(
            &sa.compose(&momentum_symbol(b))
                .sub(&sb.compose(&momentum_symbol(a)))
                .scale_by(Parity::Even, move |q| (w(q) + m).recip()),
        );
        let tail = MomentumSymbol::constant(&ig0).compose(&boost_tail);
        let op = XOp::zero(m).with_term(xk, orbital).with_term(CONSTANT, tail);
        gens.push(Generator {
            name: format!("j0{}", k + 1),
            op,
            time_slope: Some(p[k].clone()),
        });
    }
    Ok(gens)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSymmetry {
    pub name: String,
    pub residual: f64,
    pub is_symmetry: bool,
}

/// Checks ∂_tG + [iH_FW, G] = 0 for each generator at the sample momenta.
pub fn check_generator_symmetries(
    basis: &Basis,
    gens: &[Generator],
    m: f64,
    samples: &[[f64; 3]],
    tol: f64,
) -> Result<Vec<GeneratorSymmetry>> {
    let ih = XOp::from_symbol(m, fw_hamiltonian(basis, m)?.generator());
    gens.iter()
        .map(|g| {
            let ih = ih.clone().with_engine(g.op.engine());
            let mut c = ih.commutator(&g.op)?;
            if let Some(slope) = &g.time_slope {
                c = c.add(slope)?;
            }
            let residual = c.max_abs(samples);
            Ok(GeneratorSymmetry {
                name: g.name.clone(),
                residual,
                is_symmetry: residual < tol,
            })
        })
        .collect()
}

/// Replaces the derivative engine of every generator.
pub fn with_engine(gens: &[Generator], engine: super::DerivativeEngine) -> Vec<Generator> {
    gens.iter()
        .map(|g| Generator {
            name: g.name.clone(),
            op: g.op.clone().with_engine(engine),
            time_slope: g.time_slope.clone().map(|s| s.with_engine(engine)),
        })
        .collect()
}
