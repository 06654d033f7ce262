//! Lie-structure checks: anticommutation metrics, commutator tables,
//! Hermiticity, closure and structure constants.

mod explicit;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::RealSurd;
use crate::oplib::{anticommutator, commutator, kernel, span_basis, GeneralOp, RealifiedOp};
use crate::reps::{OrtSet, PairFamily};

pub use explicit::{check_product_identities, verify_explicit_forms, ExplicitForm, EXPLICIT_FORMS};

/// Diagonal metric with ±1 entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricSignature(Vec<i32>);

impl MetricSignature {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::Construction(format!(
                "metric entries must be ±1, got {entries:?}"
            )));
        }
        Ok(MetricSignature(entries))
    }

    /// (+, −, −, …) with `n` entries.
    pub fn minkowski(n: usize) -> Self {
        MetricSignature((0..n).map(|k| if k == 0 { 1 } else { -1 }).collect())
    }

    /// (−, −, …): the metric of a compact rotation algebra in this sign convention.
    pub fn negative(n: usize) -> Self {
        MetricSignature(vec![-1; n])
    }

    pub fn flipped(&self) -> Self {
        MetricSignature(self.0.iter().map(|e| -e).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entry(&self, k: usize) -> i32 {
        self.0[k]
    }

    fn g(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.0[a] as i64
        } else {
            0
        }
    }
}

impl fmt::Display for MetricSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.0 {
            f.write_str(if *e > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    Anticommutation,
    PairAlgebra,
    Closure,
    ProductClosure,
    ExplicitForms,
    Products,
}

/// One failing entry of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub entry: String,
    pub deviation: f64,
}

/// Coefficient `c` in `[X_i, X_j] = Σ_k c_{ij}^k X_k`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    pub set_name: String,
    pub kind: RelationKind,
    pub checked: usize,
    pub failures: Vec<Violation>,
    /// Largest entry of any residual; zero whenever the exact check passes.
    pub worst_deviation: f64,
    pub constants: Vec<StructureConstant>,
}

impl StructureReport {
    fn new(set_name: impl Into<String>, kind: RelationKind) -> Self {
        StructureReport {
            set_name: set_name.into(),
            kind,
            checked: 0,
            failures: Vec::new(),
            worst_deviation: 0.0,
            constants: Vec::new(),
        }
    }

    /// Records one exact comparison whose residual is `diff`.
    fn record(&mut self, entry: impl FnOnce() -> String, diff: &GeneralOp) {
        self.checked += 1;
        if !diff.is_zero() {
            let dev = max_abs(diff);
            self.worst_deviation = self.worst_deviation.max(dev);
            self.failures.push(Violation {
                entry: entry(),
                deviation: dev,
            });
        }
    }

    fn record_flag(&mut self, entry: impl FnOnce() -> String, ok: bool) {
        self.checked += 1;
        if !ok {
            self.worst_deviation = self.worst_deviation.max(1.0);
            self.failures.push(Violation {
                entry: entry(),
                deviation: 1.0,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(|v| v.entry.as_str())
    }
}

/// Largest absolute value among the entries of both parts.
pub fn max_abs(op: &GeneralOp) -> f64 {
    let f = op.to_float();
    let mut m = 0.0f64;
    for r in 0..4 {
        for c in 0..4 {
            m = m.max(f.linear.get(r, c).norm()).max(f.antilinear.get(r, c).norm());
        }
    }
    m
}

/// Checks `{γ^a, γ^b} = scale·g^{ab}·I` for every pair.
pub fn check_anticommutation(gens: &OrtSet, metric: &MetricSignature, scale: i64) -> Result<StructureReport> {
    if gens.len() != metric.len() {
        return Err(Error::DimensionMismatch {
            expected: metric.len(),
            found: gens.len(),
        });
    }
    let mut report = StructureReport::new(gens.name(), RelationKind::Anticommutation);
    for a in 0..gens.len() {
        for b in a..gens.len() {
            let (x, y) = (gens.element(a), gens.element(b));
            let expected = GeneralOp::identity().scale_ratio(scale * metric.g(a, b), 1);
            let diff = &anticommutator(&x.op, &y.op) - &expected;
            report.record(|| format!("{{{}, {}}}", x.label, y.label), &diff);
        }
    }
    Ok(report)
}

/// Checks `[s^{mn}, s^{rs}] = −g^{mr}s^{ns} − g^{rn}s^{sm} − g^{ns}s^{mr} − g^{sm}s^{rn}`
/// over every pair of generators; the metric is indexed by position in
/// `family.indices()`.
pub fn check_pair_algebra(family: &PairFamily, metric: &MetricSignature) -> Result<StructureReport> {
    let idx = family.indices();
    if idx.len() != metric.len() {
        return Err(Error::DimensionMismatch {
            expected: idx.len(),
            found: metric.len(),
        });
    }
    let pos = |a: usize| idx.iter().position(|&x| x == a).expect("index in family");
    let g = |a: usize, b: usize| metric.g(pos(a), pos(b));
    let term = |coef: i64, a: usize, b: usize| {
        if coef == 0 {
            GeneralOp::zero()
        } else {
            family.get(a, b).scale_ratio(-coef, 1)
        }
    };
    let mut report = StructureReport::new(family.name(), RelationKind::PairAlgebra);
    let pairs: Vec<(usize, usize)> = family.pairs().map(|(k, _)| *k).collect();
    for &(m, n) in &pairs {
        for &(r, s) in &pairs {
            let lhs = commutator(&family.get(m, n), &family.get(r, s));
            let rhs = &(&term(g(m, r), n, s) + &term(g(r, n), s, m)) + &(&term(g(n, s), m, r) + &term(g(s, m), r, n));
            report.record(|| format!("[s^{m}{n}, s^{r}{s}]"), &(&lhs - &rhs));
        }
    }
    Ok(report)
}

/// so(1,5) relations with g = diag(+1, −1, −1, −1, −1, −1) on indices 0..5.
pub fn check_so15(family: &PairFamily) -> Result<StructureReport> {
    check_pair_algebra(family, &MetricSignature::minkowski(6))
}

/// so(8) relations `[s^{AB}, s^{CD}] = δ^{AC}s^{BD} + δ^{CB}s^{DA} + δ^{BD}s^{AC} + δ^{DA}s^{CB}`.
pub fn check_so8(family: &PairFamily) -> Result<StructureReport> {
    check_pair_algebra(family, &MetricSignature::negative(family.indices().len()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermiticitySplit {
    pub hermitian: Vec<String>,
    pub antihermitian: Vec<String>,
    pub neither: Vec<String>,
}

impl HermiticitySplit {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.hermitian.len(), self.antihermitian.len(), self.neither.len())
    }
}

/// Partitions `set` by `X† = X` and `X† = −X`.
pub fn classify_hermiticity(set: &OrtSet) -> HermiticitySplit {
    let mut split = HermiticitySplit::default();
    for ort in set {
        let adj = ort.op.adjoint();
        if adj == ort.op {
            split.hermitian.push(ort.label.clone());
        } else if adj == -&ort.op {
            split.antihermitian.push(ort.label.clone());
        } else {
            split.neither.push(ort.label.clone());
        }
    }
    split
}

/// `Σ_j s^j∘s^j` over a triplet.
pub fn casimir_spin_squared(spin: &OrtSet) -> Result<GeneralOp> {
    if spin.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: spin.len(),
        });
    }
    Ok(spin.ops().fold(GeneralOp::zero(), |acc, s| &acc + &s.compose(s)))
}

fn span_check(set: &OrtSet, kind: RelationKind, f: impl Fn(&GeneralOp, &GeneralOp) -> GeneralOp) -> StructureReport {
    let basis = span_basis(set.ops());
    let mut report = StructureReport::new(set.name(), kind);
    let n = set.len();
    let pairs: Vec<(usize, usize)> = match kind {
        RelationKind::Closure => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        _ => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
    };
    for (i, j) in pairs {
        let (x, y) = (set.element(i), set.element(j));
        let red = basis.reduce(&f(&x.op, &y.op).vectorize());
        report.record_flag(|| format!("({}, {})", x.label, y.label), red.in_span());
        if red.in_span() {
            for (k, c) in red.coefficients.iter().enumerate() {
                if !c.is_zero() {
                    report.constants.push(StructureConstant {
                        i,
                        j,
                        k,
                        value: c.to_string(),
                    });
                }
            }
        }
    }
    report
}

/// Every commutator of two elements lies in the real span of the set.
/// Coefficients of in-span commutators are reported as structure constants.
pub fn closure_check(set: &OrtSet) -> StructureReport {
    span_check(set, RelationKind::Closure, commutator)
}

/// Every product of two elements lies in the real span of the set.
pub fn product_closure_check(set: &OrtSet) -> StructureReport {
    span_check(set, RelationKind::ProductClosure, |x, y| x.compose(y))
}

/// Exact structure constants `c_{ij}^k` (i < j) of an independent set.
pub fn structure_constants(set: &OrtSet) -> Result<Vec<StructureConstant>> {
    let basis = span_basis(set.ops());
    if basis.rank() != set.len() {
        return Err(Error::DegenerateBasis {
            rank: basis.rank(),
            len: set.len(),
        });
    }
    let mut out = Vec::new();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            let c = commutator(&set.element(i).op, &set.element(j).op);
            let red = basis.reduce(&c.vectorize());
            if !red.in_span() {
                return Err(Error::NotInSpan(format!(
                    "[{}, {}]",
                    set.element(i).label,
                    set.element(j).label
                )));
            }
            for (k, v) in red.coefficients.iter().enumerate() {
                if !v.is_zero() {
                    out.push(StructureConstant {
                        i,
                        j,
                        k,
                        value: v.to_string(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Complex dimension of the `λ`-eigenspace of a linear operator, from the
/// exact kernel of realify(X) − λ·I₈.
pub fn eigenspace_dimension(op: &GeneralOp, lambda: &RealSurd) -> usize {
    let r = op.realified();
    let mut shift = RealifiedOp::identity().entries().to_vec();
    for x in shift.iter_mut() {
        *x = &*x * lambda;
    }
    let columns: Vec<Vec<RealSurd>> = (0..8)
        .map(|c| (0..8).map(|row| r.get(row, c) - &shift[row * 8 + c]).collect())
        .collect();
    kernel(&columns).len() / 2
}
