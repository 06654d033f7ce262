use std::time::Instant;

use crate::error::Result;
use crate::momsym::{
    check_equation_symmetry, conjugate_by_v, dirac_hamiltonian, fw_hamiltonian, fw_spin, fw_transform, pd_spin,
    quoted_tilde_conjugation, sample_momenta, tilde_conjugation, tilde_gammas, MomentumSymbol, Sign,
};
use crate::numerics::{ExactScalar, RealSurd};
use crate::oplib::{centralizer, commutator, span_rank, GeneralOp, Mat4};
use crate::poincare::{build_poincare_generators, casimir_report, check_generator_symmetries, poincare_closure_check};
use crate::reps::{breve_spin, spin_from_breve_gammas, w_inverse_unnormalized, Basis, OrtSet, PairFamily};
use crate::structure::{
    casimir_spin_squared, check_anticommutation, check_pair_algebra, check_product_identities, check_so15, check_so8,
    classify_hermiticity, closure_check, product_closure_check, verify_explicit_forms, MetricSignature,
    StructureReport, EXPLICIT_FORMS,
};

use super::{Claim, Status, Suite, SuiteConfig};

/// Collects claims for one suite, timing each from the previous one.
struct Recorder {
    suite: Suite,
    claims: Vec<Claim>,
    last: Instant,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder {
            suite,
            claims: Vec::new(),
            last: Instant::now(),
        }
    }

    fn push(&mut self, name: &str, group: &str, anchor: &str, status: Status, residual: Option<f64>, detail: String) {
        let now = Instant::now();
        self.claims.push(Claim {
            id: format!("{}.{name}", self.suite.name()),
            suite: self.suite.name().to_string(),
            group: group.to_string(),
            anchor: anchor.to_string(),
            status,
            residual,
            detail,
            runtime: now - self.last,
        });
        self.last = now;
    }

    fn flag(&mut self, name: &str, group: &str, anchor: &str, ok: bool, detail: String) {
        self.push(name, group, anchor, Status::from_bool(ok), None, detail);
    }

    fn sampled(&mut self, name: &str, group: &str, anchor: &str, residual: f64, tol: f64, detail: String) {
        let detail = if detail.is_empty() {
            format!("max residual {residual:.3e} (tolerance {tol:.0e})")
        } else {
            format!("{detail}; max residual {residual:.3e} (tolerance {tol:.0e})")
        };
        self.push(
            name,
            group,
            anchor,
            Status::from_bool(residual < tol),
            Some(residual),
            detail,
        );
    }

    fn noted(&mut self, name: &str, group: &str, anchor: &str, residual: Option<f64>, detail: String) {
        self.push(name, group, anchor, Status::Noted, residual, detail);
    }

    fn report(&mut self, name: &str, group: &str, anchor: &str, r: Result<StructureReport>) {
        match r {
            Ok(r) => {
                let detail = match r.first_failure() {
                    None => format!("{} relations exact", r.checked),
                    Some(f) => format!("{} of {} relations fail, first {f}", r.failures.len(), r.checked),
                };
                self.push(
                    name,
                    group,
                    anchor,
                    Status::from_bool(r.passed()),
                    Some(r.worst_deviation),
                    detail,
                );
            }
            Err(e) => self.error(name, group, anchor, e),
        }
    }

    fn error(&mut self, name: &str, group: &str, anchor: &str, e: crate::Error) {
        self.push(
            name,
            group,
            anchor,
            Status::Fail,
            None,
            format!("check could not run: {e}"),
        );
    }

    fn finish(self) -> Vec<Claim> {
        self.claims
    }
}

pub(super) fn run(suite: Suite, cfg: &SuiteConfig, basis: &Basis) -> Vec<Claim> {
    let mut r = Recorder::new(suite);
    match suite {
        Suite::Cd => cd(&mut r, basis),
        Suite::Ercd => ercd(&mut r, basis),
        Suite::Percd => percd(&mut r, basis),
        Suite::So6 => so6(&mut r, basis),
        Suite::A32 => a32(&mut r, basis, cfg),
        Suite::Pgi => pgi(&mut r, basis),
        Suite::Bosonic => bosonic(&mut r, basis),
        Suite::Fw => fw(&mut r, basis, cfg),
        Suite::Poincare => poincare(&mut r, basis, cfg),
    }
    r.finish()
}

fn count_and_rank(r: &mut Recorder, name: &str, group: &str, anchor: &str, set: &OrtSet, expected: usize) {
    let rank = span_rank(set.ops());
    r.flag(
        name,
        group,
        anchor,
        set.len() == expected && rank == expected,
        format!("size={} rank={rank}", set.len()),
    );
}

fn cd(r: &mut Recorder, b: &Basis) {
    r.report(
        "anticommutation",
        "gamma-anticommutation",
        "{γ^μ, γ^ν} = 2g^{μν}·I, g = diag(+1, −1, −1, −1, −1)",
        check_anticommutation(&b.pd_gammas(), &MetricSignature::minkowski(5), 2),
    );
    let so15 = b.so15_family();
    r.report(
        "so15",
        "so15",
        "[s^{mn}, s^{rs}] = −g^{mr}s^{ns} − g^{rn}s^{sm} − g^{ns}s^{mr} − g^{sm}s^{rn}, g = diag(+1, −1, −1, −1, −1, −1)",
        check_so15(&so15),
    );
    let mut mismatched = Vec::new();
    for (&(m, n), op) in so15.pairs() {
        let adj = op.adjoint();
        let expected = if m == 0 { op.clone() } else { -op };
        if adj != expected {
            mismatched.push(format!("s^{m}{n}"));
        }
    }
    r.flag(
        "hermiticity",
        "so15",
        "(s^{0n})† = s^{0n}, (s^{kn})† = −s^{kn} for k, n ≥ 1",
        mismatched.is_empty(),
        if mismatched.is_empty() {
            "hermitian=5/antihermitian=10".into()
        } else {
            format!("wrong adjoint: {}", mismatched.join(", "))
        },
    );
    r.noted(
        "hermiticity-convention",
        "so15",
        "all s^{mn} anti-Hermitian",
        None,
        "holds for the 10 rotation generators only; the 5 boosts s^{0n} are Hermitian under the C^4 inner product"
            .into(),
    );
    count_and_rank(r, "span", "cd-span", "dim_R span{I, s^{mn}} = 16", &b.cd16(), 16);
    let products = product_closure_check(&b.cd16());
    r.report("products", "cd-span", "X∘Y ∈ span_R{I, s^{mn}}", Ok(products));
}

fn ercd(r: &mut Recorder, b: &Basis) {
    let set = b.ercd64();
    let rank = span_rank(set.ops());
    r.flag(
        "span",
        "ercd-span",
        "dim_R span{X, iX, ĈX, iĈX : X ∈ CD} = 64",
        set.len() == 64 && rank == 64,
        format!("size={} rank={rank}", set.len()),
    );
    let (h, a, n) = classify_hermiticity(&set).counts();
    r.flag(
        "hermiticity",
        "ercd-hermiticity",
        "ERCD orts split into 36 Hermitian and 28 anti-Hermitian",
        (h, a, n) == (36, 28, 0),
        format!("hermitian={h}/antihermitian={a}/neither={n}"),
    );
}

fn percd(r: &mut Recorder, b: &Basis) {
    r.report(
        "anticommutation",
        "extended-anticommutation",
        "{γ^A, γ^B} = −2δ^{AB}·I, A, B = 1..7",
        check_anticommutation(&b.extended_gammas(), &MetricSignature::negative(7), 2),
    );
    r.report(
        "so8",
        "so8",
        "[s^{AB}, s^{CD}] = δ^{AC}s^{BD} + δ^{CB}s^{DA} + δ^{BD}s^{AC} + δ^{DA}s^{CB}, A..D = 1..8",
        check_so8(&b.so8_family()),
    );
    count_and_rank(
        r,
        "count",
        "so8",
        "{s^{AB}, I} has 29 independent elements",
        &b.percd29(),
        29,
    );
    r.report(
        "product-identities",
        "product-identities",
        "γ^0γ^1γ^2γ^3γ^4 = −I, γ^1γ^2⋯γ^7 = I, γ^5γ^6 = i",
        Ok(check_product_identities(b)),
    );
    r.report(
        "explicit-forms",
        "explicit-forms",
        "α^{AB} = γ^Aγ^B in terms of γ^μ, i and Ĉ",
        Ok(verify_explicit_forms(b)),
    );
    let flipped: Vec<String> = EXPLICIT_FORMS
        .iter()
        .filter(|f| f.quoted_sign != f.sign)
        .map(|f| {
            format!(
                "{} = {} (commonly quoted as {})",
                f.label(),
                f.expression(),
                f.quoted_expression()
            )
        })
        .collect();
    r.noted(
        "explicit-form-signs",
        "explicit-forms",
        "signs of α^{57} and α^{67}",
        None,
        format!("computed signs differ from the quoted ones: {}", flipped.join("; ")),
    );
}

fn so6(r: &mut Recorder, b: &Basis) {
    let set = b.so6();
    count_and_rank(
        r,
        "count",
        "so6",
        "{I, α^{ab}} has 16 independent elements, a, b = 1..6",
        &set,
        16,
    );
    r.report(
        "closure",
        "so6",
        "[α^{ab}, α^{cd}] ∈ span_R{I, α^{ab}}",
        Ok(closure_check(&set)),
    );
    let family = PairFamily::build("so6", (1..=6).collect(), |x, y| b.s8(x, y));
    r.report(
        "pair-algebra",
        "so6",
        "[s^{ab}, s^{cd}] = δ^{ac}s^{bd} + δ^{cb}s^{da} + δ^{bd}s^{ac} + δ^{da}s^{cb}, a..d = 1..6",
        check_pair_algebra(&family, &MetricSignature::negative(6)),
    );
}

fn a32(r: &mut Recorder, b: &Basis, cfg: &SuiteConfig) {
    let set = b.a32();
    count_and_rank(r, "count", "a32-invariance", "|A32| = 32, independent", &set, 32);
    let cent = centralizer(&b.i_gamma0());
    let joint = span_rank(cent.iter().chain(set.ops()));
    r.flag(
        "maximality",
        "a32-invariance",
        "centralizer(iγ^0) = span_R A32",
        cent.len() == 32 && joint == 32,
        format!("centralizer dimension={} joint rank={joint}", cent.len()),
    );
    match fw_hamiltonian(b, cfg.mass) {
        Ok(h) => {
            let failing: Vec<&str> = set
                .iter()
                .filter(|o| !check_equation_symmetry(&MomentumSymbol::constant(&o.op), &h, &[], 0.0).is_symmetry)
                .map(|o| o.label.as_str())
                .collect();
            r.flag(
                "fw-symmetry",
                "a32-invariance",
                "[X, ∂_0 + iγ^0ω̂] = 0 for every X ∈ A32",
                failing.is_empty(),
                if failing.is_empty() {
                    format!("{} symmetries exact", set.len())
                } else {
                    format!("not symmetries: {}", failing.join(", "))
                },
            );
            let control = check_equation_symmetry(&MomentumSymbol::constant(b.gamma(1)), &h, &[], 0.0);
            r.flag(
                "negative-control",
                "a32-invariance",
                "[γ^1, ∂_0 + iγ^0ω̂] ≠ 0",
                !control.is_symmetry,
                format!("residual {:.3e}", control.residual),
            );
        }
        Err(e) => r.error("fw-symmetry", "a32-invariance", "[X, ∂_0 + iγ^0ω̂] = 0", e),
    }
}

fn pgi(r: &mut Recorder, b: &Basis) {
    let set = b.pgi8();
    count_and_rank(r, "count", "pgi", "|A8| = 8, independent", &set, 8);
    match dirac_hamiltonian(b, 0.0) {
        Ok(h) => {
            let failing: Vec<&str> = set
                .iter()
                .filter(|o| !check_equation_symmetry(&MomentumSymbol::constant(&o.op), &h, &[], 0.0).is_symmetry)
                .map(|o| o.label.as_str())
                .collect();
            r.flag(
                "massless-symmetry",
                "pgi",
                "[X, ∂_0 + iα·p] = 0 for every X ∈ A8",
                failing.is_empty(),
                if failing.is_empty() {
                    "8 symmetries exact".into()
                } else {
                    format!("not symmetries: {}", failing.join(", "))
                },
            );
        }
        Err(e) => r.error("massless-symmetry", "pgi", "[X, ∂_0 + iα·p] = 0", e),
    }
    let family = b.pgi_family();
    let metric = MetricSignature::minkowski(4);
    r.report(
        "lorentz",
        "pgi",
        "PGI sextet closes into so(1,3): [s^{μν}, s^{ρσ}] relations with g = diag(−1, +1, +1, +1)",
        check_pair_algebra(&family, &metric.flipped()),
    );
    if let Ok(quoted) = check_pair_algebra(&family, &metric) {
        r.noted(
            "lorentz-sign",
            "pgi",
            "PGI sextet with g = diag(+1, −1, −1, −1)",
            Some(quoted.worst_deviation),
            format!(
                "{} of {} relations fail with the quoted metric; the negated sextet satisfies them exactly",
                quoted.failures.len(),
                quoted.checked
            ),
        );
    }
}

fn bosonic(r: &mut Recorder, b: &Basis) {
    let w = crate::reps::w_operator();
    let w_inv = crate::reps::w_inverse();
    let id = GeneralOp::identity();
    r.flag(
        "w-inverse",
        "bosonic-transform",
        "W∘W⁻¹ = W⁻¹∘W = I",
        w.compose(&w_inv) == id && w_inv.compose(&w) == id,
        "exact".into(),
    );
    let raw = w.compose(&w_inverse_unnormalized());
    r.noted(
        "w-normalization",
        "bosonic-transform",
        "normalization of W⁻¹",
        None,
        format!(
            "W⁻¹ needs the prefactor 1/sqrt2; without it W∘W⁻¹ = {}",
            if raw == id.scale(&RealSurd::sqrt2()) {
                "sqrt2*I"
            } else {
                "a non-scalar operator"
            }
        ),
    );
    let rep = match b.bosonic_rep() {
        Ok(rep) => {
            r.flag(
                "conjugation",
                "bosonic-transform",
                "W∘X∘W⁻¹ equals the bosonic forms of γ^A, γ^0, i and Ĉ entry for entry",
                true,
                "10 conjugates exact".into(),
            );
            rep
        }
        Err(e) => {
            r.error(
                "conjugation",
                "bosonic-transform",
                "W∘X∘W⁻¹ equals the bosonic forms",
                e,
            );
            return;
        }
    };
    let ig0 = b.i_gamma0();
    r.flag(
        "hamiltonian",
        "bosonic-transform",
        "W∘(iγ^0)∘W⁻¹ = iγ^0",
        rep.conjugate(&ig0) == ig0,
        "exact".into(),
    );
    let mut gammas = OrtSet::new("bosonic_gammas");
    for a in 1..=7 {
        gammas.push(format!("gamma_{a}"), format!("γ̆^{a}"), rep.extended(a));
    }
    r.report(
        "anticommutation",
        "bosonic-transform",
        "{γ̆^A, γ̆^B} = −2δ^{AB}·I, A, B = 1..7",
        check_anticommutation(&gammas, &MetricSignature::negative(7), 2),
    );
    r.report(
        "so8",
        "bosonic-transform",
        "[s̆^{AB}, s̆^{CD}] = δ^{AC}s̆^{BD} + δ^{CB}s̆^{DA} + δ^{BD}s̆^{AC} + δ^{DA}s̆^{CB}",
        check_so8(&rep.so8_family()),
    );
    let spin = breve_spin();
    let op = |k: usize| spin.element(k).op.clone();
    let closes = (0..3).all(|k| commutator(&op(k), &op((k + 1) % 3)) == op((k + 2) % 3));
    r.flag(
        "spin-closure",
        "bosonic-spin",
        "[s̆^j, s̆^k] = ε_{jkl}s̆^l",
        closes,
        "exact".into(),
    );
    let from_gammas = spin_from_breve_gammas(&rep);
    let matches = from_gammas.iter().enumerate().all(|(k, s)| *s == op(k));
    r.flag(
        "spin-from-gammas",
        "bosonic-spin",
        "s̆ built from γ̆ products equals the explicit triplet",
        matches,
        "exact".into(),
    );
    let invariant = (0..3).all(|k| commutator(&op(k), &ig0).is_zero());
    r.flag(
        "spin-invariance",
        "bosonic-spin",
        "[s̆^j, iγ^0] = 0",
        invariant,
        "exact".into(),
    );
    match casimir_spin_squared(&spin) {
        Ok(s2) => {
            let expected = GeneralOp::linear_op(Mat4::diag([-2, -2, -2, 0].map(ExactScalar::from_int)));
            r.flag(
                "spin-casimir",
                "casimirs",
                "s̆·s̆ = −2·diag(1, 1, 1, 0)",
                s2 == expected,
                if s2 == expected {
                    "exact".into()
                } else {
                    "s̆·s̆ differs".into()
                },
            );
        }
        Err(e) => r.error("spin-casimir", "casimirs", "s̆·s̆ = −2·diag(1, 1, 1, 0)", e),
    }
}

fn fw(r: &mut Recorder, b: &Basis, cfg: &SuiteConfig) {
    let m = cfg.mass;
    let tol = cfg.tolerances.fw;
    let qs = sample_momenta(cfg.samples, cfg.seed, cfg.radius);
    let id = MomentumSymbol::identity();
    let zero = MomentumSymbol::zero();
    let run = |r: &mut Recorder| -> Result<()> {
        let vp = fw_transform(b, m, Sign::Plus)?;
        let vm = fw_transform(b, m, Sign::Minus)?;
        let inv = vp
            .compose(&vm)
            .max_distance(&id, &qs)
            .max(vm.compose(&vp).max_distance(&id, &qs));
        r.sampled(
            "transform-inverse",
            "fw-transform",
            "V⁺∘V⁻ = V⁻∘V⁺ = I",
            inv,
            tol,
            String::new(),
        );

        let hfw = fw_hamiltonian(b, m)?.hamiltonian();
        let hd = dirac_hamiltonian(b, m)?.hamiltonian();
        let d = conjugate_by_v(b, m, &hfw)?.max_distance(&hd, &qs);
        r.sampled(
            "hamiltonian",
            "fw-transform",
            "V⁺∘γ^0ω̂∘V⁻ = α·p + βm",
            d,
            tol,
            String::new(),
        );

        let spin = pd_spin(b, m)?;
        let fs = fw_spin(b);
        let mut comm = 0.0f64;
        let mut conj = 0.0f64;
        for (j, s) in spin.iter().enumerate() {
            comm = comm.max(s.commutator(&hd).max_distance(&zero, &qs));
            let v = conjugate_by_v(b, m, &MomentumSymbol::constant(&fs.element(j).op))?;
            conj = conj.max(s.max_distance(&v, &qs));
        }
        r.sampled(
            "pd-spin-invariance",
            "pd-spin",
            "[s⃗^PD, H_D] = 0",
            comm,
            tol,
            String::new(),
        );
        r.sampled(
            "pd-spin-transform",
            "pd-spin",
            "s⃗^PD = V⁺∘s⃗∘V⁻",
            conj,
            tol,
            String::new(),
        );
        r.noted(
            "pd-spin-reading",
            "pd-spin",
            "s⃗ = (½γ^3γ^2, ½γ^1γ^3, ½γ^2γ^1) in the nonlocal spin formula",
            None,
            "the formula equals V⁺∘s⃗∘V⁻ only with this ordering of the γ products".into(),
        );

        let set = tilde_gammas(b, m)?;
        let minus_two = MomentumSymbol::constant(&GeneralOp::identity().scale_ratio(-2, 1));
        let mut anti = 0.0f64;
        for a in 0..7 {
            for c in a..7 {
                let x = &set.elements[a].1;
                let y = &set.elements[c].1;
                let target = if a == c { &minus_two } else { &zero };
                anti = anti.max(x.anticommutator(y).max_distance(target, &qs));
            }
        }
        r.sampled(
            "tilde-anticommutation",
            "tilde-representation",
            "{γ̃^A, γ̃^B} = −2δ^{AB}·I, A, B = 1..7",
            anti,
            tol,
            String::new(),
        );
        let mut sources: Vec<GeneralOp> = (1..=7).map(|a| b.extended(a)).collect();
        sources.push(b.gamma(0).clone());
        sources.push(GeneralOp::conjugation());
        let mut worst = 0.0f64;
        for ((_, t), x) in set.elements.iter().zip(&sources) {
            let c = conjugate_by_v(b, m, &MomentumSymbol::constant(x))?;
            worst = worst.max(t.max_distance(&c, &qs));
        }
        r.sampled(
            "tilde-transform",
            "tilde-representation",
            "γ̃^A = V⁺∘γ^A∘V⁻, γ̃^0 = V⁺∘γ^0∘V⁻, C̃ = V⁺∘Ĉ∘V⁻",
            worst,
            tol,
            format!("{} operators", set.len()),
        );
        let quoted = quoted_tilde_conjugation(b, m)?.max_distance(&tilde_conjugation(b, m)?, &qs);
        r.noted(
            "tilde-conjugation-form",
            "tilde-representation",
            "C̃ = (I + 2(iγ^1∂_1 + iγ^2∂_2)/sqrt(2ω̂(ω̂+m)))Ĉ",
            Some(quoted),
            "the quoted closed form differs from V⁺∘Ĉ∘V⁻; the derived closed form is used".into(),
        );
        Ok(())
    };
    if let Err(e) = run(r) {
        r.error("setup", "fw-transform", "V^± = (ω̂ + m ∓ γ·p)/sqrt(2ω̂(ω̂+m))", e);
    }
}

fn poincare(r: &mut Recorder, b: &Basis, cfg: &SuiteConfig) {
    let m = cfg.mass;
    let qs = sample_momenta(cfg.samples, cfg.seed, cfg.radius);
    let gens = match build_poincare_generators(b, m) {
        Ok(g) => g,
        Err(e) => {
            r.error("generators", "poincare", "p_μ, j_μν of the FW equation", e);
            return;
        }
    };
    match check_generator_symmetries(b, &gens, m, &qs, cfg.tolerances.symmetry) {
        Ok(s) => {
            let worst = s.iter().map(|x| x.residual).fold(0.0, f64::max);
            let failing: Vec<&str> = s.iter().filter(|x| !x.is_symmetry).map(|x| x.name.as_str()).collect();
            let detail = if failing.is_empty() {
                format!("{} generators", s.len())
            } else {
                format!("not symmetries: {}", failing.join(", "))
            };
            r.sampled(
                "symmetry",
                "poincare",
                "∂_tG + [iγ^0ω̂, G] = 0 for G ∈ {p_μ, j_μν}",
                worst,
                cfg.tolerances.symmetry,
                detail,
            );
        }
        Err(e) => r.error("symmetry", "poincare", "∂_tG + [iγ^0ω̂, G] = 0", e),
    }
    match poincare_closure_check(&gens, &qs, cfg.tolerances.closure) {
        Ok(c) => {
            r.sampled(
                "closure",
                "poincare",
                "[G_a, G_b] ∈ span_R{p_μ, j_μν}",
                c.max_residual,
                cfg.tolerances.closure,
                format!("{} commutators, {} samples", c.pairs.len(), c.samples),
            );
            r.flag(
                "structure-constants",
                "poincare",
                "fitted constants equal those of translations and Lorentz rotations on R^4",
                c.oracle_mismatches.is_empty(),
                if c.oracle_mismatches.is_empty() {
                    "45 of 45 match".into()
                } else {
                    c.oracle_mismatches.join("; ")
                },
            );
        }
        Err(e) => r.error("closure", "poincare", "[G_a, G_b] ∈ span_R{p_μ, j_μν}", e),
    }
    match casimir_report(&gens, m, &qs) {
        Ok(c) => {
            let ok = c.p_squared_deviation < cfg.tolerances.casimir && c.p_squared_variance < 1e-12;
            r.push(
                "p-squared",
                "casimirs",
                "p^μp_μ = −m²·I, independent of q",
                Status::from_bool(ok),
                Some(c.p_squared_deviation),
                format!(
                    "mean {:.12} (expected {}), variance {:.3e}",
                    c.p_squared, c.expected_p_squared, c.p_squared_variance
                ),
            );
            r.noted(
                "p-squared-sign",
                "casimirs",
                "p^μp_μ = m²",
                Some((c.p_squared - m * m).abs()),
                format!(
                    "magnitude {} m² but the sign is negative under anti-Hermitian generators",
                    if c.magnitude_matches {
                        "matches"
                    } else {
                        "does not match"
                    }
                ),
            );
        }
        Err(e) => r.error("p-squared", "casimirs", "p^μp_μ = −m²·I", e),
    }
}
