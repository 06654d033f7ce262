use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{FloatScalar, Jet};
use crate::oplib::{GeneralOp, Operator};
use crate::reps::Basis;
use crate::structure::max_abs;

use super::symbol::{omega, JetPoint, MomentumSymbol, Parity};

/// Real scalar factor multiplying one matrix term of a Hamiltonian symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarFactor {
    /// The mass m.
    Mass,
    /// ω(q) = √(q² + m²).
    Omega,
    /// The momentum component q_k (k = 0, 1, 2).
    Momentum(usize),
}

impl ScalarFactor {
    pub fn parity(self) -> Parity {
        match self {
            ScalarFactor::Momentum(_) => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn eval(self, q: &JetPoint, m: f64) -> Jet {
        match self {
            ScalarFactor::Mass => Jet::real(m),
            ScalarFactor::Omega => omega(q, m),
            ScalarFactor::Momentum(k) => q[k],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactTerm {
    pub factor: ScalarFactor,
    pub coefficient: GeneralOp,
}

/// Hamiltonian symbol H(q) = Σ f_t(q)·M_t; the evolution operator is ∂₀ + iH.
///
/// The factors f_t are linearly independent functions, so a constant
/// operator is a symmetry iff it commutes with every term separately.
#[derive(Clone, Debug)]
pub struct EquationOperator {
    name: String,
    mass: f64,
    terms: Vec<ExactTerm>,
}

fn check_mass(m: f64) -> Result<()> {
    if !(m.is_finite() && m >= 0.0) {
        return Err(Error::InvalidMass(m, "mass must be finite and nonnegative"));
    }
    Ok(())
}

impl EquationOperator {
    pub fn new(name: impl Into<String>, mass: f64, terms: Vec<ExactTerm>) -> Result<Self> {
        check_mass(mass)?;
        Ok(EquationOperator {
            name: name.into(),
            mass,
            terms,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn terms(&self) -> &[ExactTerm] {
        &self.terms
    }

    /// H(q).
    pub fn hamiltonian(&self) -> MomentumSymbol {
        self.symbol_with(|op| op.clone())
    }

    /// iH(q), the part of the evolution operator that acts on spinors.
    pub fn generator(&self) -> MomentumSymbol {
        let i = GeneralOp::imaginary_unit();
        self.symbol_with(|op| i.compose(op))
    }

    fn symbol_with(&self, f: impl Fn(&GeneralOp) -> GeneralOp) -> MomentumSymbol {
        let m = self.mass;
        let parts: Vec<(ScalarFactor, MomentumSymbol)> = self
            .terms
            .iter()
            .map(|t| (t.factor, MomentumSymbol::constant(&f(&t.coefficient))))
            .collect();
        let parity = parts
            .iter()
            .map(|(f, _)| f.parity())
            .reduce(Parity::sum)
            .unwrap_or(Parity::Even);
        MomentumSymbol::new(Some(m), parity, move |q| {
            let mut acc = Operator::<Jet>::zero();
            for (factor, s) in &parts {
                acc = acc.add(&s.eval(q).scale(&factor.eval(q, m)));
            }
            acc
        })
    }
}

/// H_FW(q) = γ⁰ω(q).
pub fn fw_hamiltonian(basis: &Basis, m: f64) -> Result<EquationOperator> {
    EquationOperator::new(
        "fw",
        m,
        vec![ExactTerm {
            factor: ScalarFactor::Omega,
            coefficient: basis.gamma(0).clone(),
        }],
    )
}

/// H_D(q) = α^k q_k + βm with α^k = γ⁰γ^k, β = γ⁰. The mass term is dropped at m = 0.
pub fn dirac_hamiltonian(basis: &Basis, m: f64) -> Result<EquationOperator> {
    let mut terms: Vec<ExactTerm> = (1..=3)
        .map(|k| ExactTerm {
            factor: ScalarFactor::Momentum(k - 1),
            coefficient: basis.gamma(0).compose(basis.gamma(k)),
        })
        .collect();
    if m != 0.0 {
        terms.push(ExactTerm {
            factor: ScalarFactor::Mass,
            coefficient: basis.gamma(0).clone(),
        });
    }
    EquationOperator::new("dirac", m, terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckPath {
    Exact,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub equation: String,
    pub path: CheckPath,
    pub samples: usize,
    pub residual: f64,
    pub tolerance: f64,
    pub is_symmetry: bool,
}

/// Residuals `X∘(iM_t) − (iM_t)∘X` of a constant operator against every term,
/// where the antilinear part of X sees the term's parity under q ↦ −q.
pub fn exact_symmetry_residuals(x: &GeneralOp, e: &EquationOperator) -> Vec<GeneralOp> {
    let i = GeneralOp::imaginary_unit();
    e.terms
        .iter()
        .map(|t| {
            let g = i.compose(&t.coefficient);
            let reflected = match t.factor.parity() {
                Parity::Odd => -&g,
                _ => g.clone(),
            };
            let lhs = GeneralOp::from_operator(
                x.as_operator()
                    .compose_reflected(g.as_operator(), reflected.as_operator()),
            );
            &lhs - &g.compose(x)
        })
        .collect()
}

/// Decides whether `X` commutes with the evolution operator ∂₀ + iH.
///
/// Constant symbols go through the exact path (zero residual required);
/// momentum-dependent ones are compared at the sample momenta against `tol`.
pub fn check_equation_symmetry(
    x: &MomentumSymbol,
    e: &EquationOperator,
    samples: &[[f64; 3]],
    tol: f64,
) -> SymmetryReport {
    if let Some(op) = x.constant_op() {
        let residuals = exact_symmetry_residuals(op, e);
        let residual = residuals.iter().map(max_abs).fold(0.0, f64::max);
        return SymmetryReport {
            equation: e.name.clone(),
            path: CheckPath::Exact,
            samples: 0,
            residual,
            tolerance: 0.0,
            is_symmetry: residuals.iter().all(GeneralOp::is_zero),
        };
    }
    let ih = e.generator();
    let residual = x.compose(&ih).max_distance(&ih.compose(x), samples);
    SymmetryReport {
        equation: e.name.clone(),
        path: CheckPath::Sampled,
        samples: samples.len(),
        residual,
        tolerance: tol,
        is_symmetry: residual < tol,
    }
}

/// Eigenvalues of the Hermitian matrix H(q) in ascending order.
pub fn hamiltonian_eigenvalues(e: &EquationOperator, q: [f64; 3]) -> Vec<f64> {
    let h = e.hamiltonian().at(q);
    let m = nalgebra::Matrix4::<FloatScalar>::from_fn(|r, c| *h.linear.get(r, c));
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momsym::sample_momenta;
    use crate::momsym::symbol::distance;

    #[test]
    fn hamiltonians_at_rest() {
        let b = Basis::standard();
        let g0 = MomentumSymbol::constant(b.gamma(0)).at([0.0; 3]);
        let fw = fw_hamiltonian(&b, 1.0).unwrap().hamiltonian().at([0.0; 3]);
        let d = dirac_hamiltonian(&b, 1.0).unwrap().hamiltonian().at([0.0; 3]);
        assert!(distance(&fw, &g0) < 1e-15);
        assert!(distance(&d, &g0) < 1e-15);
    }

    #[test]
    fn negative_mass_rejected() {
        assert!(fw_hamiltonian(&Basis::standard(), -1.0).is_err());
        assert!(dirac_hamiltonian(&Basis::standard(), f64::NAN).is_err());
    }

    #[test]
    fn dirac_spectrum_is_plus_minus_omega() {
        let b = Basis::standard();
        let h = dirac_hamiltonian(&b, 1.0).unwrap();
        for q in sample_momenta(20, 3, 10.0) {
            let w = (q.iter().map(|x| x * x).sum::<f64>() + 1.0).sqrt();
            let ev = hamiltonian_eigenvalues(&h, q);
            let expected = [-w, -w, w, w];
            for (a, e) in ev.iter().zip(expected) {
                assert!((a - e).abs() < 1e-12 * w.max(1.0), "{ev:?} vs ±{w}");
            }
        }
    }

    #[test]
    fn gamma1_is_not_an_fw_symmetry() {
        let b = Basis::standard();
        let fw = fw_hamiltonian(&b, 1.0).unwrap();
        let r = check_equation_symmetry(&MomentumSymbol::constant(b.gamma(1)), &fw, &[], 1e-12);
        assert!(!r.is_symmetry);
        assert!(r.residual > 0.5);
    }

    #[test]
    fn exact_and_sampled_paths_agree() {
        let b = Basis::standard();
        let d0 = dirac_hamiltonian(&b, 0.0).unwrap();
        let qs = sample_momenta(30, 1, 10.0);
        for ort in &b.pgi8() {
            let c = MomentumSymbol::constant(&ort.op);
            assert!(
                check_equation_symmetry(&c, &d0, &qs, 1e-12).is_symmetry,
                "{}",
                ort.label
            );
            let sampled = c.scale(1.0);
            let r = check_equation_symmetry(&sampled, &d0, &qs, 1e-12);
            assert_eq!(r.path, CheckPath::Sampled);
            assert!(r.is_symmetry, "{} residual {}", ort.label, r.residual);
        }
    }
}
