use crate::error::{Error, Result};
use crate::numerics::{ExactScalar, RealSurd};
use crate::oplib::{GeneralOp, Mat4};

use super::{gauss_matrix, s8_from, Basis, OrtSet, PairFamily};

/// Bosonic generators γ̆ together with the intertwiner W and its inverse.
#[derive(Clone, Debug)]
pub struct BosonicRep {
    generators: OrtSet,
    w: GeneralOp,
    w_inv: GeneralOp,
}

fn scaled(m: Mat4<ExactScalar>) -> Mat4<ExactScalar> {
    m.scale(&ExactScalar::inv_sqrt2())
}

/// W: linear part [[1,0,0,0],[0,0,0,0],[0,0,0,1/√2],[0,0,0,−1/√2]],
/// antilinear part [[0,0,0,0],[0,0,i,0],[0,−1/√2,0,0],[0,−1/√2,0,0]].
pub fn w_operator() -> GeneralOp {
    let o = (0, 0);
    let mut a = scaled(gauss_matrix([
        [o, o, o, o],
        [o, o, o, o],
        [o, o, o, (1, 0)],
        [o, o, o, (-1, 0)],
    ]));
    a.set(0, 0, ExactScalar::one());
    let mut b = scaled(gauss_matrix([
        [o, o, o, o],
        [o, o, o, o],
        [o, (-1, 0), o, o],
        [o, (-1, 0), o, o],
    ]));
    b.set(1, 2, ExactScalar::i());
    GeneralOp::new(a, b)
}

/// W⁻¹, carrying the overall 1/√2 that makes W∘W⁻¹ = I.
pub fn w_inverse() -> GeneralOp {
    let o = (0, 0);
    let mut a = scaled(gauss_matrix([
        [o, o, o, o],
        [o, o, o, o],
        [o, o, o, o],
        [o, o, (1, 0), (-1, 0)],
    ]));
    a.set(0, 0, ExactScalar::one());
    let mut b = scaled(gauss_matrix([
        [o, o, o, o],
        [o, o, (-1, 0), (-1, 0)],
        [o, o, o, o],
        [o, o, o, o],
    ]));
    b.set(2, 1, ExactScalar::i());
    GeneralOp::new(a, b)
}

/// W⁻¹ without the overall 1/√2, so that W∘W⁻¹ = √2·I.
pub fn w_inverse_unnormalized() -> GeneralOp {
    w_inverse().scale(&RealSurd::sqrt2())
}

/// Printed bosonic forms: γ̆¹..γ̆⁷, γ̆⁰, ĭ, Ĉ̆ (labels gamma_1..gamma_7, gamma_0, i, C).
fn printed_generators() -> Vec<(&'static str, &'static str, GeneralOp)> {
    let o = (0, 0);
    let p = (1, 0);
    let n = (-1, 0);
    let pi = (0, 1);
    let ni = (0, -1);
    let lin = |rows| GeneralOp::linear_op(scaled(gauss_matrix(rows)));
    let anti = |rows| GeneralOp::antilinear_op(gauss_matrix(rows));
    let g1 = lin([[o, o, p, n], [o, o, pi, pi], [n, pi, o, o], [p, pi, o, o]]);
    let g2 = lin([[o, o, ni, pi], [o, o, n, n], [ni, p, o, o], [pi, p, o, o]]);
    // −diag(σ², iσ²) and diag(iσ², −σ²), both attached to Ĉ
    let g3 = anti([[o, pi, o, o], [ni, o, o, o], [o, o, o, n], [o, o, p, o]]);
    let g4 = anti([[o, p, o, o], [n, o, o, o], [o, o, o, pi], [o, o, ni, o]]);
    let g5 = lin([[o, o, n, n], [o, o, pi, ni], [p, pi, o, o], [p, ni, o, o]]);
    let g6 = lin([[o, o, ni, ni], [o, o, p, n], [ni, n, o, o], [ni, p, o, o]]);
    let g7 = GeneralOp::linear_op(gauss_matrix([
        [pi, o, o, o],
        [o, pi, o, o],
        [o, o, ni, o],
        [o, o, o, ni],
    ]));
    let g0 = GeneralOp::linear_op(gauss_matrix([[p, o, o, o], [o, n, o, o], [o, o, o, p], [o, o, p, o]]));
    let bi = GeneralOp::linear_op(gauss_matrix([
        [pi, o, o, o],
        [o, ni, o, o],
        [o, o, o, ni],
        [o, o, ni, o],
    ]));
    let bc = anti([[p, o, o, o], [o, n, o, o], [o, o, p, o], [o, o, o, p]]);
    vec![
        ("gamma_1", "Wγ^1W⁻¹", g1),
        ("gamma_2", "Wγ^2W⁻¹", g2),
        ("gamma_3", "Wγ^3W⁻¹", g3),
        ("gamma_4", "Wγ^4W⁻¹", g4),
        ("gamma_5", "Wγ^5W⁻¹", g5),
        ("gamma_6", "Wγ^6W⁻¹", g6),
        ("gamma_7", "Wγ^7W⁻¹ = iγ^0", g7),
        ("gamma_0", "Wγ^0W⁻¹", g0),
        ("i", "W i W⁻¹", bi),
        ("C", "W Ĉ W⁻¹", bc),
    ]
}

impl BosonicRep {
    pub(crate) fn from_basis(basis: &Basis) -> Result<BosonicRep> {
        let w = w_operator();
        let w_inv = w_inverse();
        if w.compose(&w_inv) != GeneralOp::identity() || w_inv.compose(&w) != GeneralOp::identity() {
            return Err(Error::Construction("W∘W⁻¹ ≠ I".into()));
        }
        let sources: Vec<GeneralOp> = (1..=7)
            .map(|a| basis.extended(a))
            .chain([
                basis.gamma(0).clone(),
                GeneralOp::imaginary_unit(),
                GeneralOp::conjugation(),
            ])
            .collect();
        let mut generators = OrtSet::new("bosonic");
        for ((label, def, printed), x) in printed_generators().into_iter().zip(&sources) {
            let conjugated = w.compose(x).compose(&w_inv);
            if conjugated != printed {
                return Err(Error::Construction(format!(
                    "W∘X∘W⁻¹ differs from the bosonic form of {label}"
                )));
            }
            generators.push(label, def, printed);
        }
        Ok(BosonicRep { generators, w, w_inv })
    }

    pub fn generators(&self) -> &OrtSet {
        &self.generators
    }

    pub fn w(&self) -> &GeneralOp {
        &self.w
    }

    pub fn w_inv(&self) -> &GeneralOp {
        &self.w_inv
    }

    /// `W∘X∘W⁻¹`.
    pub fn conjugate(&self, x: &GeneralOp) -> GeneralOp {
        self.w.compose(x).compose(&self.w_inv)
    }

    /// γ̆^A for A = 1..7.
    pub fn extended(&self, a: usize) -> GeneralOp {
        self.generators.element(a - 1).op.clone()
    }

    pub fn gamma0(&self) -> &GeneralOp {
        self.generators.get("gamma_0").expect("bosonic gamma_0")
    }

    pub fn imaginary_unit(&self) -> &GeneralOp {
        self.generators.get("i").expect("bosonic i")
    }

    pub fn conjugation(&self) -> &GeneralOp {
        self.generators.get("C").expect("bosonic C")
    }

    /// s̆^{AB} built from the bosonic γ̆^A exactly as s^{AB} from γ^A.
    pub fn so8_family(&self) -> PairFamily {
        PairFamily::build("bosonic_so8", (1..9).collect(), |a, b| {
            s8_from(|k| self.extended(k), a, b)
        })
    }

    pub fn percd29(&self) -> OrtSet {
        let mut set = self.so8_family().to_ort_set("s");
        set.push("I", "I", GeneralOp::identity());
        set.map_ops("bosonic_percd29", GeneralOp::clone)
    }
}

/// The spin-1 triplet commuting with iγ⁰: s¹, s² antilinear, s³ = diag(−i, i, 0, 0).
pub fn breve_spin() -> OrtSet {
    let o = (0, 0);
    let s1 = gauss_matrix([
        [o, o, (0, 1), o],
        [o, o, (-1, 0), o],
        [(0, -1), (1, 0), o, o],
        [o, o, o, o],
    ]);
    let s2 = gauss_matrix([
        [o, o, (1, 0), o],
        [o, o, (0, -1), o],
        [(-1, 0), (0, 1), o, o],
        [o, o, o, o],
    ]);
    let s3 = gauss_matrix([[(0, -1), o, o, o], [o, (0, 1), o, o], [o, o, o, o], [o, o, o, o]]);
    OrtSet::new("breve_spin")
        .with("s_1", "s^1 = s_23", GeneralOp::antilinear_op(scaled(s1)))
        .with("s_2", "s^2 = s_31", GeneralOp::antilinear_op(scaled(s2)))
        .with("s_3", "s^3 = s_12", GeneralOp::linear_op(s3))
}

/// The spin triplet written through bosonic γ̆ compositions:
/// ½(γ̆²γ̆³ − γ̆⁰γ̆²Ĉ̆), ½(γ̆³γ̆¹ + ĭγ̆⁰γ̆²Ĉ̆), ½(γ̆¹γ̆² − ĭ).
pub fn spin_from_breve_gammas(rep: &BosonicRep) -> [GeneralOp; 3] {
    let g = |a| rep.extended(a);
    let g0 = rep.gamma0();
    let bi = rep.imaginary_unit();
    let bc = rep.conjugation();
    let g0g2c = g0.compose(&g(2)).compose(bc);
    [
        (&g(2).compose(&g(3)) - &g0g2c).scale_ratio(1, 2),
        (&g(3).compose(&g(1)) + &bi.compose(&g0g2c)).scale_ratio(1, 2),
        (&g(1).compose(&g(2)) - bi).scale_ratio(1, 2),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oplib::commutator;

    #[test]
    fn w_inverts() {
        assert_eq!(w_operator().compose(&w_inverse()), GeneralOp::identity());
        assert_eq!(w_inverse().compose(&w_operator()), GeneralOp::identity());
    }

    #[test]
    fn standard_basis_conjugates_to_printed_forms() {
        let rep = Basis::standard().bosonic_rep().unwrap();
        let ig0 = Basis::standard().i_gamma0();
        assert_eq!(rep.conjugate(&ig0), ig0);
        assert_eq!(rep.extended(7), ig0);
    }

    #[test]
    fn spin_triplet_matches_gamma_expressions() {
        let rep = Basis::standard().bosonic_rep().unwrap();
        let spin = breve_spin();
        for (k, s) in spin_from_breve_gammas(&rep).iter().enumerate() {
            assert_eq!(s, &spin.element(k).op, "component {}", k + 1);
        }
    }

    #[test]
    fn spin_triplet_closes() {
        let s = breve_spin();
        let op = |k: usize| s.element(k).op.clone();
        assert_eq!(commutator(&op(0), &op(1)), op(2));
        assert_eq!(commutator(&op(1), &op(2)), op(0));
        assert_eq!(commutator(&op(2), &op(0)), op(1));
    }

    #[test]
    fn faulty_basis_fails_loudly() {
        let b = Basis::with_fault(super::super::Fault::new(1, 0, 0).unwrap());
        assert!(b.bosonic_rep().is_err());
    }
}
