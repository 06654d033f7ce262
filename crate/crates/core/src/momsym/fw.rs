use crate::error::{Error, Result};
use crate::numerics::Jet;
use crate::oplib::{GeneralOp, Operator};
use crate::reps::{Basis, OrtSet};

use super::symbol::{dot_matrices, jet_operator, omega, JetPoint, MomentumSymbol, Parity, SymbolValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

fn require_positive_mass(m: f64) -> Result<()> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InvalidMass(m, "operation needs m > 0"));
    }
    Ok(())
}

fn spatial_gammas(basis: &Basis) -> [SymbolValue; 3] {
    [1, 2, 3].map(|k| jet_operator(basis.gamma(k)))
}

/// √(2ω(ω+m)).
fn fw_norm(q: &JetPoint, m: f64) -> Jet {
    let w = omega(q, m);
    (w * (w + m) * 2.0).sqrt()
}

/// V^± = (ω + m ∓ γ·q)/√(2ω(ω+m)), the symbol of (±iγ·∇ + ω̂ + m)/√(2ω̂(ω̂+m)).
pub fn fw_transform(basis: &Basis, m: f64, sign: Sign) -> Result<MomentumSymbol> {
    require_positive_mass(m)?;
    let g = spatial_gammas(basis);
    let s = match sign {
        Sign::Plus => -1.0,
        Sign::Minus => 1.0,
    };
    Ok(MomentumSymbol::new(Some(m), Parity::Unknown, move |q| {
        let w = omega(q, m);
        let n = fw_norm(q, m).recip();
        Operator::<Jet>::identity()
            .scale(&(w + m))
            .add(&dot_matrices(&g, q).scale(&Jet::real(s)))
            .scale(&n)
    }))
}

/// `V⁺∘X∘V⁻`.
pub fn conjugate_by_v(basis: &Basis, m: f64, x: &MomentumSymbol) -> Result<MomentumSymbol> {
    let vp = fw_transform(basis, m, Sign::Plus)?;
    let vm = fw_transform(basis, m, Sign::Minus)?;
    Ok(vp.compose(x).compose(&vm))
}

/// Spin in the FW picture, s_j = ½γ^bγ^a for (a, b) = (2, 3), (3, 1), (1, 2).
pub fn fw_spin(basis: &Basis) -> OrtSet {
    let half = |a: usize, b: usize| basis.gamma(a).compose(basis.gamma(b)).scale_ratio(1, 2);
    OrtSet::new("fw_spin")
        .with("s_1", "½γ^3γ^2", half(3, 2))
        .with("s_2", "½γ^1γ^3", half(1, 3))
        .with("s_3", "½γ^2γ^1", half(2, 1))
}

/// s^PD = s − i[γ×∇]/2ω̂ + ∇×[s×∇]/(ω̂(ω̂+m)) with ∇ ↦ iq, i.e.
/// s_j + (γ×q)_j/2ω + (q(q·s) − q²s)_j/(ω(ω+m)).
pub fn pd_spin(basis: &Basis, m: f64) -> Result<[MomentumSymbol; 3]> {
    require_positive_mass(m)?;
    let g = spatial_gammas(basis);
    let spin = fw_spin(basis);
    let s: [SymbolValue; 3] = [0, 1, 2].map(|k| jet_operator(&spin.element(k).op));
    Ok([0usize, 1, 2].map(|j| {
        let (g, s) = (g.clone(), s.clone());
        MomentumSymbol::new(Some(m), Parity::Even, move |q| {
            let w = omega(q, m);
            let (a, b) = ((j + 1) % 3, (j + 2) % 3);
            let cross = g[a].scale(&q[b]).sub(&g[b].scale(&q[a]));
            let qq = q[0] * q[0] + q[1] * q[1] + q[2] * q[2];
            let qs = dot_matrices(&s, q);
            let tail = qs.scale(&q[j]).sub(&s[j].scale(&qq)).scale(&(w * (w + m)).recip());
            s[j].add(&cross.scale(&(w * 2.0).recip())).add(&tail)
        })
    }))
}

/// Labelled collection of momentum symbols.
#[derive(Clone, Debug)]
pub struct SymbolSet {
    pub name: String,
    pub elements: Vec<(String, MomentumSymbol)>,
}

impl SymbolSet {
    pub fn get(&self, label: &str) -> Option<&MomentumSymbol> {
        self.elements.iter().find(|(l, _)| l == label).map(|(_, s)| s)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Closed form of V⁺ĈV⁻: antilinear part (ω+m−γ·q)(ω+m−γ̄·q)/(2ω(ω+m)), γ̄ = (γ¹, −γ², γ³).
pub fn tilde_conjugation(basis: &Basis, m: f64) -> Result<MomentumSymbol> {
    require_positive_mass(m)?;
    let g = spatial_gammas(basis);
    let gbar = [g[0].clone(), g[1].neg(), g[2].clone()];
    Ok(MomentumSymbol::new(Some(m), Parity::Unknown, move |q| {
        let w = omega(q, m);
        let wm = Operator::<Jet>::identity().scale(&(w + m));
        let left = wm.sub(&dot_matrices(&g, q));
        let right = wm.sub(&dot_matrices(&gbar, q));
        let n2 = (w * (w + m) * 2.0).recip();
        Operator::from_antilinear(left.linear.mul(&right.linear).scale(&n2))
    }))
}

/// The frequently quoted form (I + 2(iγ¹∂₁ + iγ²∂₂)/√(2ω̂(ω̂+m)))Ĉ, i.e.
/// antilinear part I − 2(γ¹q₁ + γ²q₂)/√(2ω(ω+m)).
pub fn quoted_tilde_conjugation(basis: &Basis, m: f64) -> Result<MomentumSymbol> {
    require_positive_mass(m)?;
    let g = spatial_gammas(basis);
    Ok(MomentumSymbol::new(Some(m), Parity::Unknown, move |q| {
        let t = g[0]
            .scale(&q[0])
            .add(&g[1].scale(&q[1]))
            .scale(&(fw_norm(q, m).recip() * -2.0));
        Operator::from_antilinear(Operator::<Jet>::identity().add(&t).linear)
    }))
}

/// Nonlocal generators γ̃^A = V⁺γ^AV⁻ (A = 1..7), γ̃⁰ and C̃ in closed form.
///
/// With p the Hermitian momentum (symbol q):
/// γ̃⁰ = γ⁰(m + γ·q)/ω, γ̃⁴ = γ⁴(m + γ·q)/ω,
/// γ̃^k = γ^k(m + γ·q)/ω + q_k(ω + m + γ·q)/(ω(ω+m)),
/// γ̃⁵ = γ̃¹γ̃³C̃, γ̃⁶ = iγ̃¹γ̃³C̃, γ̃⁷ = iγ̃⁰.
pub fn tilde_gammas(basis: &Basis, m: f64) -> Result<SymbolSet> {
    require_positive_mass(m)?;
    let g = spatial_gammas(basis);
    let mass_shell = {
        let g = g.clone();
        move |q: &JetPoint| {
            Operator::<Jet>::identity()
                .scale(&Jet::real(m))
                .add(&dot_matrices(&g, q))
        }
    };
    let simple = |mu: usize| {
        let gm = jet_operator(basis.gamma(mu));
        let shell = mass_shell.clone();
        MomentumSymbol::new(Some(m), Parity::Unknown, move |q| {
            let shell = shell(q).scale(&omega(q, m).recip());
            gm.compose(&shell)
        })
    };
    let spatial = |k: usize| {
        let gk = jet_operator(basis.gamma(k));
        let g = g.clone();
        let shell = mass_shell.clone();
        MomentumSymbol::new(Some(m), Parity::Unknown, move |q| {
            let w = omega(q, m);
            let first = gk.compose(&shell(q).scale(&w.recip()));
            let second = Operator::<Jet>::identity()
                .scale(&(w + m))
                .add(&dot_matrices(&g, q))
                .scale(&(q[k - 1] * (w * (w + m)).recip()));
            first.add(&second)
        })
    };
    let i = MomentumSymbol::constant(&GeneralOp::imaginary_unit());
    let c = tilde_conjugation(basis, m)?;
    let t1 = spatial(1);
    let t3 = spatial(3);
    let t0 = simple(0);
    let t5 = t1.compose(&t3).compose(&c);
    let t6 = i.compose(&t5);
    let elements = vec![
        ("gamma_1".to_string(), t1),
        ("gamma_2".to_string(), spatial(2)),
        ("gamma_3".to_string(), t3),
        ("gamma_4".to_string(), simple(4)),
        ("gamma_5".to_string(), t5),
        ("gamma_6".to_string(), t6),
        ("gamma_7".to_string(), i.compose(&t0)),
        ("gamma_0".to_string(), t0),
        ("C".to_string(), c),
    ];
    Ok(SymbolSet {
        name: "tilde_gammas".into(),
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::momsym::equations::dirac_hamiltonian;
    use crate::momsym::sample_momenta;
    use crate::oplib::commutator;

    fn qs() -> Vec<[f64; 3]> {
        sample_momenta(40, 11, 10.0)
    }

    #[test]
    fn transforms_are_identity_at_rest_and_inverse() {
        let b = Basis::standard();
        let vp = fw_transform(&b, 1.0, Sign::Plus).unwrap();
        let vm = fw_transform(&b, 1.0, Sign::Minus).unwrap();
        let id = MomentumSymbol::identity();
        assert!(vp.max_distance(&id, &[[0.0; 3]]) < 1e-15);
        assert!(vm.max_distance(&id, &[[0.0; 3]]) < 1e-15);
        assert!(vp.compose(&vm).max_distance(&id, &qs()) < 1e-12);
        assert!(vm.compose(&vp).max_distance(&id, &qs()) < 1e-12);
    }

    #[test]
    fn zero_mass_rejected() {
        let b = Basis::standard();
        assert!(fw_transform(&b, 0.0, Sign::Plus).is_err());
        assert!(pd_spin(&b, 0.0).is_err());
        assert!(tilde_gammas(&b, 0.0).is_err());
    }

    #[test]
    fn fw_hamiltonian_maps_to_dirac() {
        let b = Basis::standard();
        let h = crate::momsym::fw_hamiltonian(&b, 1.0).unwrap().hamiltonian();
        let d = dirac_hamiltonian(&b, 1.0).unwrap().hamiltonian();
        assert!(conjugate_by_v(&b, 1.0, &h).unwrap().max_distance(&d, &qs()) < 1e-12);
    }

    #[test]
    fn pd_spin_commutes_with_dirac_hamiltonian() {
        let b = Basis::standard();
        let d = dirac_hamiltonian(&b, 1.0).unwrap().hamiltonian();
        let spin = pd_spin(&b, 1.0).unwrap();
        let fw = fw_spin(&b);
        for (j, s) in spin.iter().enumerate() {
            assert!(s.commutator(&d).max_distance(&MomentumSymbol::zero(), &qs()) < 1e-12);
            let conj = conjugate_by_v(&b, 1.0, &MomentumSymbol::constant(&fw.element(j).op)).unwrap();
            assert!(s.max_distance(&conj, &qs()) < 1e-12);
            assert!(s.max_distance(&MomentumSymbol::constant(&fw.element(j).op), &[[0.0; 3]]) < 1e-15);
        }
    }

    #[test]
    fn fw_spin_closes_as_rotation_algebra() {
        let s = fw_spin(&Basis::standard());
        assert_eq!(
            commutator(&s.element(0).op, &s.element(1).op),
            s.element(2).op.scale_ratio(-1, 1)
        );
    }

    #[test]
    fn tilde_set_matches_conjugation() {
        let b = Basis::standard();
        let set = tilde_gammas(&b, 1.0).unwrap();
        let labels: Vec<&str> = set.elements.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(
            labels[..7],
            ["gamma_1", "gamma_2", "gamma_3", "gamma_4", "gamma_5", "gamma_6", "gamma_7"]
        );
        let mut sources: Vec<GeneralOp> = (1..=7).map(|a| b.extended(a)).collect();
        sources.push(b.gamma(0).clone());
        sources.push(GeneralOp::conjugation());
        for ((label, t), x) in set.elements.iter().zip(&sources) {
            let c = conjugate_by_v(&b, 1.0, &MomentumSymbol::constant(x)).unwrap();
            let d = t.max_distance(&c, &qs());
            assert!(d < 1e-12, "{label}: {d}");
        }
        let g4 = set.get("gamma_4").unwrap();
        assert!(g4.max_distance(&MomentumSymbol::constant(b.gamma(4)), &[[0.0; 3]]) < 1e-15);
    }

    #[test]
    fn quoted_conjugation_form_differs() {
        let b = Basis::standard();
        let quoted = quoted_tilde_conjugation(&b, 1.0).unwrap();
        let derived = tilde_conjugation(&b, 1.0).unwrap();
        assert!(quoted.max_distance(&derived, &qs()) > 1e-3);
    }
}
