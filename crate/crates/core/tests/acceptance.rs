//! Acceptance criteria: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use ercd_core::momsym::{
    check_equation_symmetry, conjugate_by_v, dirac_hamiltonian, fw_hamiltonian, fw_spin, fw_transform, pd_spin,
    sample_momenta, tilde_gammas, CheckPath, MomentumSymbol, Sign,
};
use ercd_core::numerics::ExactScalar;
use ercd_core::oplib::{centralizer, centralizer_dimension, commutator, span_rank, GeneralOp, Mat4};
use ercd_core::poincare::{
    build_poincare_generators, casimir_report, check_generator_symmetries, poincare_closure_check,
};
use ercd_core::reps::{breve_spin, spin_from_breve_gammas, w_inverse, w_operator, Basis, Fault, OrtSet};
use ercd_core::structure::{
    casimir_spin_squared, check_anticommutation, check_product_identities, check_so15, check_so8, classify_hermiticity,
    verify_explicit_forms, MetricSignature,
};
use ercd_core::suite::{run_suite, Status, Suite, SuiteConfig};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn criterion(n: usize, title: &str, budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if let Some(b) = budget {
        if took > b {
            o.ok = false;
            o.detail = format!("{}; over the {:.0} s budget", o.detail, b.as_secs_f64());
        }
    }
    println!(
        "criterion {n:2} [{}] {title}: {} ({:.2} s)",
        if o.ok { "PASS" } else { "FAIL" },
        o.detail,
        took.as_secs_f64()
    );
    o.ok
}

fn anticommutation() -> Outcome {
    let b = Basis::standard();
    let five = check_anticommutation(&b.pd_gammas(), &MetricSignature::minkowski(5), 2).unwrap();
    let seven = check_anticommutation(&b.extended_gammas(), &MetricSignature::negative(7), 2).unwrap();
    let ok = five.passed() && seven.passed() && five.worst_deviation == 0.0 && seven.worst_deviation == 0.0;
    outcome(
        ok,
        format!("{} + {} relations, zero residual", five.checked, seven.checked),
    )
}

fn lie_tables() -> Outcome {
    let b = Basis::standard();
    let so15 = check_so15(&b.so15_family()).unwrap();
    let so8 = check_so8(&b.so8_family()).unwrap();
    let rep = b.bosonic_rep().unwrap();
    let bos15 = check_so15(&b.so15_family().map("bosonic_so15", |x| rep.conjugate(x))).unwrap();
    let bos8 = check_so8(&rep.so8_family()).unwrap();
    let all = [&so15, &so8, &bos15, &bos8];
    outcome(
        all.iter().all(|r| r.passed()),
        format!(
            "so(1,5) {} + so(8) {} relations, bosonic {} + {}",
            so15.checked, so8.checked, bos15.checked, bos8.checked
        ),
    )
}

fn counting() -> Outcome {
    let b = Basis::standard();
    let ercd = b.ercd64();
    let rank = span_rank(ercd.ops());
    let split = classify_hermiticity(&ercd).counts();
    let percd = b.percd29().len();
    let a32 = b.a32();
    let a32_rank = span_rank(a32.ops());
    outcome(
        rank == 64 && split == (36, 28, 0) && percd == 29 && a32.len() == 32 && a32_rank == 32,
        format!(
            "rank={rank}, hermitian={}/antihermitian={}/neither={}, |percd29|={percd}, |a32|={} rank {a32_rank}",
            split.0,
            split.1,
            split.2,
            a32.len()
        ),
    )
}

fn maximality() -> Outcome {
    let b = Basis::standard();
    let ig0 = b.i_gamma0();
    let dim = centralizer_dimension(&ig0);
    let a32 = b.a32();
    let joint = span_rank(centralizer(&ig0).iter().chain(a32.ops()));
    outcome(
        dim == 32 && joint == 32,
        format!("dim centralizer(iγ0)={dim}, rank of union with a32={joint}"),
    )
}

fn explicit_forms() -> Outcome {
    let b = Basis::standard();
    let forms = verify_explicit_forms(&b);
    let products = check_product_identities(&b);
    outcome(
        forms.passed() && products.passed(),
        format!(
            "{} explicit forms, {} product identities exact",
            forms.checked, products.checked
        ),
    )
}

fn bosonic() -> Outcome {
    let (w, wi) = (w_operator(), w_inverse());
    let id = GeneralOp::identity();
    let inverse = w.compose(&wi) == id && wi.compose(&w) == id;
    let b = Basis::standard();
    let Ok(rep) = b.bosonic_rep() else {
        return outcome(false, "conjugates differ from the bosonic forms");
    };
    let ig0 = b.i_gamma0();
    let hamiltonian = rep.conjugate(&ig0) == ig0;
    outcome(
        inverse && hamiltonian,
        format!("W∘W⁻¹ = I: {inverse}, 10 conjugates match entrywise, W(iγ0)W⁻¹ = iγ0: {hamiltonian}"),
    )
}

fn spin_triplet() -> Outcome {
    let s = breve_spin();
    let op = |k: usize| s.element(k).op.clone();
    let closes = (0..3).all(|k| commutator(&op(k), &op((k + 1) % 3)) == op((k + 2) % 3));
    let rep = Basis::standard().bosonic_rep().unwrap();
    let from_gammas = spin_from_breve_gammas(&rep)
        .iter()
        .enumerate()
        .all(|(k, x)| *x == op(k));
    let s2 = casimir_spin_squared(&s).unwrap();
    let expected = GeneralOp::linear_op(Mat4::diag([-2, -2, -2, 0].map(ExactScalar::from_int)));
    outcome(
        closes && from_gammas && s2 == expected,
        format!(
            "closure {closes}, γ-product form {from_gammas}, s·s = −2·diag(1, 1, 1, 0): {}",
            s2 == expected
        ),
    )
}

fn fw_transform_identities() -> Outcome {
    let b = Basis::standard();
    let m = 1.0;
    let qs = sample_momenta(200, 42, 10.0);
    let id = MomentumSymbol::identity();
    let zero = MomentumSymbol::zero();
    let vp = fw_transform(&b, m, Sign::Plus).unwrap();
    let vm = fw_transform(&b, m, Sign::Minus).unwrap();
    let inverse = vp.compose(&vm).max_distance(&id, &qs);
    let hfw = fw_hamiltonian(&b, m).unwrap().hamiltonian();
    let hd = dirac_hamiltonian(&b, m).unwrap().hamiltonian();
    let ham = conjugate_by_v(&b, m, &hfw).unwrap().max_distance(&hd, &qs);
    let fs = fw_spin(&b);
    let mut spin = 0.0f64;
    for (j, s) in pd_spin(&b, m).unwrap().iter().enumerate() {
        spin = spin.max(s.commutator(&hd).max_distance(&zero, &qs));
        let conj = conjugate_by_v(&b, m, &MomentumSymbol::constant(&fs.element(j).op)).unwrap();
        spin = spin.max(s.max_distance(&conj, &qs));
    }
    let tilde = tilde_gammas(&b, m).unwrap();
    let minus_two = MomentumSymbol::constant(&GeneralOp::identity().scale_ratio(-2, 1));
    let mut tilde_res = 0.0f64;
    for a in 0..7 {
        for c in a..7 {
            let target = if a == c { &minus_two } else { &zero };
            let anti = tilde.elements[a].1.anticommutator(&tilde.elements[c].1);
            tilde_res = tilde_res.max(anti.max_distance(target, &qs));
        }
        let conj = conjugate_by_v(&b, m, &MomentumSymbol::constant(&b.extended(a + 1))).unwrap();
        tilde_res = tilde_res.max(tilde.elements[a].1.max_distance(&conj, &qs));
    }
    let worst = inverse.max(ham).max(spin).max(tilde_res);
    outcome(
        worst < 1e-12,
        format!("200 momenta; V⁺V⁻ {inverse:.1e}, H_D {ham:.1e}, spin {spin:.1e}, tilde set {tilde_res:.1e}"),
    )
}

fn exact_symmetries(set: &OrtSet, h: &ercd_core::momsym::EquationOperator) -> usize {
    set.iter()
        .filter(|o| {
            let r = check_equation_symmetry(&MomentumSymbol::constant(&o.op), h, &[], 0.0);
            r.path == CheckPath::Exact && r.is_symmetry
        })
        .count()
}

fn symmetries() -> Outcome {
    let b = Basis::standard();
    let fw = fw_hamiltonian(&b, 1.0).unwrap();
    let massless = dirac_hamiltonian(&b, 0.0).unwrap();
    let a32 = exact_symmetries(&b.a32(), &fw);
    let pgi = exact_symmetries(&b.pgi8(), &massless);
    let control = check_equation_symmetry(&MomentumSymbol::constant(b.gamma(1)), &fw, &[], 0.0);
    outcome(
        a32 == 32 && pgi == 8 && !control.is_symmetry,
        format!(
            "a32 {a32}/32 FW symmetries, pgi8 {pgi}/8 massless Dirac symmetries, γ1 rejected: {}",
            !control.is_symmetry
        ),
    )
}

fn poincare() -> Outcome {
    let b = Basis::standard();
    let m = 1.0;
    let qs = sample_momenta(200, 42, 10.0);
    let gens = build_poincare_generators(&b, m).unwrap();
    let sym = check_generator_symmetries(&b, &gens, m, &qs, 1e-10).unwrap();
    let sym_res = sym.iter().map(|s| s.residual).fold(0.0, f64::max);
    let closure = poincare_closure_check(&gens, &qs, 1e-8).unwrap();
    let cas = casimir_report(&gens, m, &qs).unwrap();
    let ledger = run_suite(&SuiteConfig {
        samples: 20,
        ..SuiteConfig::for_suites(&[Suite::Poincare])
    })
    .unwrap();
    let flagged = ledger.claim("poincare.p-squared-sign").map(|c| c.status) == Some(Status::Noted);
    let ok = sym.len() == 10
        && sym.iter().all(|s| s.is_symmetry)
        && closure.pairs.len() == 45
        && closure.closed
        && closure.oracle_mismatches.is_empty()
        && (cas.p_squared + m * m).abs() < 1e-10
        && cas.p_squared_deviation < 1e-10
        && cas.p_squared_variance < 1e-12
        && cas.magnitude_matches
        && flagged;
    outcome(
        ok,
        format!(
            "symmetry {sym_res:.1e}, 45-commutator fit {:.1e} ({} oracle mismatches), p² = {:.12} var {:.1e}, sign flagged: {flagged}",
            closure.max_residual,
            closure.oracle_mismatches.len(),
            cas.p_squared,
            cas.p_squared_variance
        ),
    )
}

fn fault_injection() -> Outcome {
    let mut total = 0;
    let mut missed = Vec::new();
    for f in Fault::all() {
        total += 1;
        let b = Basis::with_fault(f);
        let anti = check_anticommutation(&b.pd_gammas(), &MetricSignature::minkowski(5), 2).unwrap();
        let so15 = check_so15(&b.so15_family()).unwrap();
        if anti.passed() && so15.passed() {
            missed.push(f.to_string());
        }
    }
    outcome(
        missed.is_empty(),
        format!(
            "{} of {total} single-entry faults detected{}",
            total - missed.len(),
            if missed.is_empty() {
                String::new()
            } else {
                format!(", missed {}", missed.join(" "))
            }
        ),
    )
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "anticommutation tables", Some(s(1)), anticommutation),
        criterion(2, "so(1,5) and so(8) commutator tables", Some(s(5)), lie_tables),
        criterion(3, "counting claims", None, counting),
        criterion(4, "maximality of a32", None, maximality),
        criterion(5, "explicit forms and product identities", None, explicit_forms),
        criterion(6, "bosonic representation", None, bosonic),
        criterion(7, "spin triplet", None, spin_triplet),
        criterion(8, "FW transform identities", None, fw_transform_identities),
        criterion(9, "symmetry checks", None, symmetries),
        criterion(10, "Poincaré suite", Some(s(30)), poincare),
        criterion(11, "fault injection", None, fault_injection),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
