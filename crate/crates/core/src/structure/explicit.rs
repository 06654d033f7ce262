use crate::oplib::GeneralOp;
use crate::reps::Basis;

use super::{RelationKind, StructureReport};

/// `α^{ab} = sign · (i)? · Π γ^k · (Ĉ)?` written in Pauli–Dirac matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExplicitForm {
    pub a: usize,
    pub b: usize,
    pub sign: i64,
    pub imaginary: bool,
    pub gammas: &'static [usize],
    pub conj: bool,
    /// Sign as usually quoted; differs from `sign` for α^57 and α^67.
    pub quoted_sign: i64,
}

const fn form(a: usize, b: usize, sign: i64, imaginary: bool, gammas: &'static [usize], conj: bool) -> ExplicitForm {
    ExplicitForm {
        a,
        b,
        sign,
        imaginary,
        gammas,
        conj,
        quoted_sign: sign,
    }
}

const fn misquoted(f: ExplicitForm) -> ExplicitForm {
    ExplicitForm {
        quoted_sign: -f.sign,
        ..f
    }
}

/// The orts α^{AB} = 2s^{AB} beyond the standard algebra, in γ^μ terms.
pub const EXPLICIT_FORMS: [ExplicitForm; 22] = [
    form(1, 5, -1, false, &[3], true),
    form(2, 5, -1, false, &[0, 4], true),
    form(3, 5, 1, false, &[1], true),
    form(4, 5, 1, false, &[0, 2], true),
    form(1, 6, -1, true, &[3], true),
    form(2, 6, -1, true, &[0, 4], true),
    form(3, 6, 1, true, &[1], true),
    form(4, 6, 1, true, &[0, 2], true),
    form(5, 6, 1, true, &[], false),
    form(1, 7, -1, true, &[0, 1], false),
    form(2, 7, -1, true, &[0, 2], false),
    form(3, 7, -1, true, &[0, 3], false),
    form(4, 7, -1, true, &[0, 4], false),
    misquoted(form(5, 7, 1, true, &[2, 4], true)),
    misquoted(form(6, 7, -1, false, &[2, 4], true)),
    form(1, 8, 1, false, &[1], false),
    form(2, 8, 1, false, &[2], false),
    form(3, 8, 1, false, &[3], false),
    form(4, 8, 1, false, &[4], false),
    form(5, 8, 1, false, &[1, 3], true),
    form(6, 8, 1, true, &[1, 3], true),
    form(7, 8, 1, true, &[0], false),
];

impl ExplicitForm {
    pub fn label(&self) -> String {
        format!("alpha_{}{}", self.a, self.b)
    }

    fn render(&self, sign: i64) -> String {
        let mut s = String::from(if sign < 0 { "-" } else { "" });
        if self.imaginary {
            s.push('i');
        }
        for k in self.gammas {
            s.push_str(&format!("γ^{k}"));
        }
        if self.conj {
            s.push('Ĉ');
        }
        s
    }

    pub fn expression(&self) -> String {
        self.render(self.sign)
    }

    pub fn quoted_expression(&self) -> String {
        self.render(self.quoted_sign)
    }

    pub fn build(&self, basis: &Basis) -> GeneralOp {
        let mut op = if self.imaginary {
            GeneralOp::imaginary_unit()
        } else {
            GeneralOp::identity()
        };
        for &k in self.gammas {
            op = op.compose(basis.gamma(k));
        }
        if self.conj {
            op = op.compose(&GeneralOp::conjugation());
        }
        op.scale_ratio(self.sign, 1)
    }
}

/// Compares `2s^{ab}` with each explicit form exactly.
pub fn verify_explicit_forms(basis: &Basis) -> StructureReport {
    let mut report = StructureReport::new("explicit_forms", RelationKind::ExplicitForms);
    for f in &EXPLICIT_FORMS {
        let alpha = basis.s8(f.a, f.b).scale_ratio(2, 1);
        report.record(
            || format!("{} = {}", f.label(), f.expression()),
            &(&alpha - &f.build(basis)),
        );
    }
    report
}

/// γ⁰γ¹γ²γ³γ⁴ = −I, γ¹⋯γ⁷ = I and γ⁵γ⁶ = i.
pub fn check_product_identities(basis: &Basis) -> StructureReport {
    let mut report = StructureReport::new("product_identities", RelationKind::Products);
    let pd = (0..5).fold(GeneralOp::identity(), |acc, k| acc.compose(basis.gamma(k)));
    report.record(|| "γ^0γ^1γ^2γ^3γ^4 = -I".into(), &(&pd + &GeneralOp::identity()));
    let ext = (1..=7).fold(GeneralOp::identity(), |acc, k| acc.compose(&basis.extended(k)));
    report.record(|| "γ^1⋯γ^7 = I".into(), &(&ext - &GeneralOp::identity()));
    let g56 = basis.extended(5).compose(&basis.extended(6));
    report.record(|| "γ^5γ^6 = i".into(), &(&g56 - &GeneralOp::imaginary_unit()));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_forms_hold() {
        let r = verify_explicit_forms(&Basis::standard());
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.checked, 22);
    }

    #[test]
    fn quoted_signs_of_57_and_67_fail() {
        let b = Basis::standard();
        let bad: Vec<String> = EXPLICIT_FORMS
            .iter()
            .filter(|f| f.build(&b).scale_ratio(f.quoted_sign * f.sign, 1) != b.s8(f.a, f.b).scale_ratio(2, 1))
            .map(ExplicitForm::label)
            .collect();
        assert_eq!(bad, vec!["alpha_57", "alpha_67"]);
    }

    #[test]
    fn sample_expressions() {
        assert_eq!(EXPLICIT_FORMS[1].expression(), "-γ^0γ^4Ĉ");
        assert_eq!(EXPLICIT_FORMS[8].expression(), "i");
        assert_eq!(EXPLICIT_FORMS[18].expression(), "γ^4");
    }

    #[test]
    fn product_identities_hold() {
        assert!(check_product_identities(&Basis::standard()).passed());
    }
}
