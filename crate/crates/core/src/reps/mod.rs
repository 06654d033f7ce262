//! Generator sets and representations of the extended algebra.
//!
//! Everything derives from the five Pauli–Dirac matrices γ⁰..γ⁴ held by a
//! [`Basis`]. A basis can carry a deliberate single-entry corruption so that
//! the verification suites can be shown to catch it.

mod bosonic;
mod ortset;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numerics::ExactScalar;
use crate::oplib::{commutator, GeneralOp, Mat4};

pub use bosonic::{breve_spin, spin_from_breve_gammas, w_inverse, w_inverse_unnormalized, w_operator, BosonicRep};
pub use ortset::{Ort, OrtRecord, OrtSet, OrtSetRecord, PairFamily};

/// Builds a 4×4 matrix from Gaussian-integer entries `(re, im)`.
pub(crate) fn gauss_matrix(rows: [[(i64, i64); 4]; 4]) -> Mat4<ExactScalar> {
    Mat4::from_fn(|r, c| ExactScalar::gauss(rows[r][c].0, rows[r][c].1))
}

/// Adds 1 to entry (`row`, `col`) of the linear part of γ^`gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Fault {
    pub gamma: usize,
    pub row: usize,
    pub col: usize,
}

impl Fault {
    pub fn new(gamma: usize, row: usize, col: usize) -> Result<Fault> {
        if gamma > 4 || row > 3 || col > 3 {
            return Err(Error::InvalidFault(format!("{gamma}:{row}:{col}")));
        }
        Ok(Fault { gamma, row, col })
    }

    /// All 80 single-entry corruptions of the five γ-matrices.
    pub fn all() -> impl Iterator<Item = Fault> {
        (0..5).flat_map(|gamma| {
            (0..16).map(move |k| Fault {
                gamma,
                row: k / 4,
                col: k % 4,
            })
        })
    }
}

impl FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Fault> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::InvalidFault(s.to_string());
        if parts.len() != 3 {
            return Err(bad());
        }
        let n: Vec<usize> = parts
            .iter()
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        Fault::new(n[0], n[1], n[2])
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.gamma, self.row, self.col)
    }
}

/// The Pauli–Dirac γ⁰..γ⁴ and every set derived from them.
#[derive(Clone, Debug)]
pub struct Basis {
    gammas: [GeneralOp; 5],
    fault: Option<Fault>,
}

impl Default for Basis {
    fn default() -> Self {
        Basis::standard()
    }
}

impl Basis {
    /// γ⁰ = diag(I, −I), γᵏ = [[0, σᵏ], [−σᵏ, 0]], γ⁴ = −i[[0, I], [I, 0]].
    pub fn standard() -> Basis {
        let o = (0, 0);
        let p = (1, 0);
        let n = (-1, 0);
        let pi = (0, 1);
        let ni = (0, -1);
        let g0 = gauss_matrix([[p, o, o, o], [o, p, o, o], [o, o, n, o], [o, o, o, n]]);
        let g1 = gauss_matrix([[o, o, o, p], [o, o, p, o], [o, n, o, o], [n, o, o, o]]);
        let g2 = gauss_matrix([[o, o, o, ni], [o, o, pi, o], [o, pi, o, o], [ni, o, o, o]]);
        let g3 = gauss_matrix([[o, o, p, o], [o, o, o, n], [n, o, o, o], [o, p, o, o]]);
        let g4 = gauss_matrix([[o, o, ni, o], [o, o, o, ni], [ni, o, o, o], [o, ni, o, o]]);
        Basis {
            gammas: [g0, g1, g2, g3, g4].map(GeneralOp::linear_op),
            fault: None,
        }
    }

    pub fn with_fault(fault: Fault) -> Basis {
        let mut basis = Basis::standard();
        let mut a = basis.gammas[fault.gamma].linear().clone();
        let entry = a.get(fault.row, fault.col) + &ExactScalar::one();
        a.set(fault.row, fault.col, entry);
        basis.gammas[fault.gamma] = GeneralOp::linear_op(a);
        basis.fault = Some(fault);
        basis
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    /// γ^μ for μ = 0..4.
    pub fn gamma(&self, mu: usize) -> &GeneralOp {
        &self.gammas[mu]
    }

    pub fn i_gamma0(&self) -> GeneralOp {
        GeneralOp::imaginary_unit().compose(self.gamma(0))
    }

    pub fn pd_gammas(&self) -> OrtSet {
        let mut set = OrtSet::new("pd_gammas");
        for mu in 0..5 {
            set.push(format!("gamma_{mu}"), format!("γ^{mu}"), self.gammas[mu].clone());
        }
        set
    }

    /// Generating γ^A for A = 1..7: γ¹..γ⁴, γ⁵ = γ¹γ³Ĉ, γ⁶ = iγ¹γ³Ĉ, γ⁷ = iγ⁰.
    pub fn extended(&self, a: usize) -> GeneralOp {
        let i = GeneralOp::imaginary_unit();
        let c = GeneralOp::conjugation();
        match a {
            1..=4 => self.gammas[a].clone(),
            5 => self.gammas[1].compose(&self.gammas[3]).compose(&c),
            6 => i.compose(&self.extended(5)),
            7 => self.i_gamma0(),
            _ => panic!("extended gamma index {a} outside 1..=7"),
        }
    }

    pub fn extended_gammas(&self) -> OrtSet {
        let defs = ["γ^1", "γ^2", "γ^3", "γ^4", "γ^1γ^3Ĉ", "iγ^1γ^3Ĉ", "iγ^0"];
        let mut set = OrtSet::new("extended_gammas");
        for a in 1..=7 {
            set.push(format!("gamma_{a}"), defs[a - 1], self.extended(a));
        }
        set
    }

    /// s^{μν} = ¼[γ^μ, γ^ν] and s^{μ5} = ½γ^μ over μ, ν = 0..5.
    pub fn s_pd(&self, m: usize, n: usize) -> GeneralOp {
        match (m, n) {
            _ if m == n => GeneralOp::zero(),
            (_, 5) => self.gammas[m].scale_ratio(1, 2),
            (5, _) => self.gammas[n].scale_ratio(-1, 2),
            _ => commutator(&self.gammas[m], &self.gammas[n]).scale_ratio(1, 4),
        }
    }

    pub fn so15_family(&self) -> PairFamily {
        PairFamily::build("so15", (0..6).collect(), |m, n| self.s_pd(m, n))
    }

    /// s^{AB} = ¼[γ^A, γ^B] and s^{A8} = ½γ^A over A, B = 1..8.
    pub fn s8(&self, a: usize, b: usize) -> GeneralOp {
        s8_from(|k| self.extended(k), a, b)
    }

    pub fn so8_family(&self) -> PairFamily {
        PairFamily::build("so8", (1..9).collect(), |a, b| self.s8(a, b))
    }

    /// {I, α^{μν} = 2s^{μν}}: the 16 Clifford–Dirac orts.
    pub fn cd16(&self) -> OrtSet {
        let mut set = OrtSet::new("cd16").with("I", "I", GeneralOp::identity());
        for m in 0..6 {
            for n in m + 1..6 {
                set.push(
                    format!("alpha_{m}{n}"),
                    format!("2s^{m}{n}"),
                    self.s_pd(m, n).scale_ratio(2, 1),
                );
            }
        }
        set
    }

    /// cd16 ∪ i·cd16 ∪ Ĉ·cd16 ∪ iĈ·cd16.
    pub fn ercd64(&self) -> OrtSet {
        let cd = self.cd16();
        let i = GeneralOp::imaginary_unit();
        let c = GeneralOp::conjugation();
        let prefixes = [
            ("", "", GeneralOp::identity()),
            ("i*", "i", i.clone()),
            ("C*", "Ĉ", c.clone()),
            ("iC*", "iĈ", i.compose(&c)),
        ];
        let mut set = OrtSet::new("ercd64");
        for (label, def, pre) in &prefixes {
            for ort in &cd {
                set.push(
                    format!("{label}{}", ort.label),
                    format!("{def}{}", ort.definition),
                    pre.compose(&ort.op),
                );
            }
        }
        set
    }

    /// The 28 s^{AB} over A < B ≤ 8 plus I.
    pub fn percd29(&self) -> OrtSet {
        let mut set = self.so8_family().to_ort_set("s");
        set = set.map_ops("percd29", GeneralOp::clone);
        set.push("I", "I", GeneralOp::identity());
        set
    }

    /// {I, α^{AB} = 2s^{AB}} over A < B ≤ 6.
    pub fn so6(&self) -> OrtSet {
        let mut set = OrtSet::new("so6").with("I", "I", GeneralOp::identity());
        for a in 1..=6 {
            for b in a + 1..=6 {
                set.push(
                    format!("alpha_{a}{b}"),
                    format!("2s^{a}{b}"),
                    self.s8(a, b).scale_ratio(2, 1),
                );
            }
        }
        set
    }

    /// The 15 nontrivial so6 orts, iγ⁰ times each of them, iγ⁰ and I.
    pub fn a32(&self) -> OrtSet {
        let ig0 = self.i_gamma0();
        let so6 = self.so6();
        let mut set = OrtSet::new("a32");
        for ort in so6.iter().skip(1) {
            set.push(ort.label.clone(), ort.definition.clone(), ort.op.clone());
        }
        for ort in so6.iter().skip(1) {
            set.push(
                format!("ig0*{}", ort.label),
                format!("iγ^0·{}", ort.definition),
                ig0.compose(&ort.op),
            );
        }
        set.push("ig0", "iγ^0", ig0);
        set.push("I", "I", GeneralOp::identity());
        set
    }

    /// {γ²Ĉ, iγ²Ĉ, γ²γ⁴Ĉ, iγ²γ⁴Ĉ, γ⁴, iγ⁴, i, I}.
    pub fn pgi8(&self) -> OrtSet {
        let i = GeneralOp::imaginary_unit();
        let c = GeneralOp::conjugation();
        let g2c = self.gammas[2].compose(&c);
        let g24c = self.gammas[2].compose(&self.gammas[4]).compose(&c);
        OrtSet::new("pgi8")
            .with("g2C", "γ^2Ĉ", g2c.clone())
            .with("ig2C", "iγ^2Ĉ", i.compose(&g2c))
            .with("g2g4C", "γ^2γ^4Ĉ", g24c.clone())
            .with("ig2g4C", "iγ^2γ^4Ĉ", i.compose(&g24c))
            .with("g4", "γ^4", self.gammas[4].clone())
            .with("ig4", "iγ^4", i.compose(&self.gammas[4]))
            .with("i", "i", i)
            .with("I", "I", GeneralOp::identity())
    }

    /// The six Lorentz generators built from the pgi8 orts, indexed over 0..3.
    pub fn pgi_family(&self) -> PairFamily {
        let set = self.pgi8();
        let get = |l: &str| set.get(l).expect("pgi8 label").clone();
        PairFamily::build("pgi_lorentz", (0..4).collect(), |m, n| match (m, n) {
            (0, 1) => get("ig2C").scale_ratio(1, 2),
            (0, 2) => get("g2C").scale_ratio(-1, 2),
            (0, 3) => get("ig4").scale_ratio(-1, 2),
            (2, 3) => get("ig2g4C").scale_ratio(1, 2),
            // s^{13} = −s^{31} = ½γ²γ⁴Ĉ
            (1, 3) => get("g2g4C").scale_ratio(1, 2),
            (1, 2) => get("i").scale_ratio(-1, 2),
            _ => unreachable!(),
        })
    }

    pub fn pgi_lorentz6(&self) -> OrtSet {
        let fam = self.pgi_family();
        let mut set = OrtSet::new("pgi_lorentz6");
        for (m, n, def) in [
            (0, 1, "(i/2)γ^2Ĉ"),
            (0, 2, "-(1/2)γ^2Ĉ"),
            (0, 3, "-(i/2)γ^4"),
            (2, 3, "(i/2)γ^2γ^4Ĉ"),
            (3, 1, "-(1/2)γ^2γ^4Ĉ"),
            (1, 2, "-i/2"),
        ] {
            set.push(format!("s_{m}{n}"), def, fam.get(m, n));
        }
        set
    }

    /// Rotation generators s^{23}, s^{31}, s^{12} of the standard spin-½ triplet.
    pub fn pd_spin_triplet(&self) -> OrtSet {
        OrtSet::new("pd_spin")
            .with("s_23", "s^23", self.s_pd(2, 3))
            .with("s_31", "s^31", self.s_pd(3, 1))
            .with("s_12", "s^12", self.s_pd(1, 2))
    }

    /// Bosonic representation obtained by conjugating with W.
    pub fn bosonic_rep(&self) -> Result<BosonicRep> {
        BosonicRep::from_basis(self)
    }
}

pub(crate) fn s8_from(gamma: impl Fn(usize) -> GeneralOp, a: usize, b: usize) -> GeneralOp {
    match (a, b) {
        _ if a == b => GeneralOp::zero(),
        (_, 8) => gamma(a).scale_ratio(1, 2),
        (8, _) => gamma(b).scale_ratio(-1, 2),
        _ => commutator(&gamma(a), &gamma(b)).scale_ratio(1, 4),
    }
}

pub fn pd_gammas() -> OrtSet {
    Basis::standard().pd_gammas()
}

pub fn extended_gammas() -> OrtSet {
    Basis::standard().extended_gammas()
}

pub fn cd16() -> OrtSet {
    Basis::standard().cd16()
}

pub fn ercd64() -> OrtSet {
    Basis::standard().ercd64()
}

pub fn percd29() -> OrtSet {
    Basis::standard().percd29()
}

pub fn so6() -> OrtSet {
    Basis::standard().so6()
}

pub fn a32() -> OrtSet {
    Basis::standard().a32()
}

pub fn pgi8() -> OrtSet {
    Basis::standard().pgi8()
}

pub fn pgi_lorentz6() -> OrtSet {
    Basis::standard().pgi_lorentz6()
}

/// Bosonic generators, W and W⁻¹. Fails if any conjugation identity breaks.
pub fn bosonic_rep() -> Result<BosonicRep> {
    Basis::standard().bosonic_rep()
}

/// Names accepted by [`ort_set_by_name`].
pub const SET_NAMES: &[&str] = &[
    "pd_gammas",
    "extended_gammas",
    "cd16",
    "ercd64",
    "percd29",
    "so6",
    "a32",
    "pgi8",
    "pgi_lorentz6",
    "bosonic",
    "breve_spin",
];

pub fn ort_set_by_name(basis: &Basis, name: &str) -> Result<OrtSet> {
    Ok(match name {
        "pd_gammas" => basis.pd_gammas(),
        "extended_gammas" => basis.extended_gammas(),
        "cd16" => basis.cd16(),
        "ercd64" => basis.ercd64(),
        "percd29" => basis.percd29(),
        "so6" => basis.so6(),
        "a32" => basis.a32(),
        "pgi8" => basis.pgi8(),
        "pgi_lorentz6" => basis.pgi_lorentz6(),
        "bosonic" => basis.bosonic_rep()?.generators().clone(),
        "breve_spin" => breve_spin(),
        _ => return Err(Error::UnknownSet(name.to_string())),
    })
}
