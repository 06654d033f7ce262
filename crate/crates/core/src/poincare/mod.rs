//! Operators polynomial in position with momentum-symbol coefficients, and
//! the Poincaré generators of the FW equation built from them.

mod closure;
mod generators;
pub mod oracle;
mod xop;

pub use closure::{casimir_report, poincare_closure_check, CasimirReport, PairFit, PoincareClosureReport};
pub use generators::{
    build_poincare_generators, check_generator_symmetries, with_engine, Generator, GeneratorSymmetry, GENERATOR_NAMES,
};
pub use xop::{momentum_symbol, monomials, unit_index, DerivativeEngine, MultiIndex, XOp, CONSTANT};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momsym::sample_momenta;
    use crate::reps::Basis;

    #[test]
    fn generators_are_symmetries() {
        let b = Basis::standard();
        let gens = build_poincare_generators(&b, 1.0).unwrap();
        let qs = sample_momenta(20, 2, 10.0);
        for s in check_generator_symmetries(&b, &gens, 1.0, &qs, 1e-10).unwrap() {
            assert!(s.is_symmetry, "{} residual {}", s.name, s.residual);
        }
    }

    #[test]
    fn closure_matches_oracle() {
        let b = Basis::standard();
        let gens = build_poincare_generators(&b, 1.0).unwrap();
        let qs = sample_momenta(20, 2, 10.0);
        let r = poincare_closure_check(&gens, &qs, 1e-8).unwrap();
        assert!(r.closed, "max residual {}", r.max_residual);
        assert!(r.oracle_mismatches.is_empty(), "{:?}", r.oracle_mismatches);
    }

    #[test]
    fn p_squared_is_minus_m_squared() {
        let b = Basis::standard();
        let gens = build_poincare_generators(&b, 2.0).unwrap();
        let r = casimir_report(&gens, 2.0, &sample_momenta(30, 4, 10.0)).unwrap();
        assert!((r.p_squared + 4.0).abs() < 1e-10);
        assert!(r.p_squared_variance < 1e-12);
        assert!(r.magnitude_matches && r.spin_squared_matches);
        assert_eq!(r.spin_eigenspaces, (3, 1));
    }

    #[test]
    fn zero_mass_rejected() {
        assert!(build_poincare_generators(&Basis::standard(), 0.0).is_err());
    }
}
