//! Named verification suites and the ledger they produce.

mod checks;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reps::{Basis, Fault};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Cd,
    Ercd,
    Percd,
    So6,
    A32,
    Pgi,
    Bosonic,
    Fw,
    Poincare,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Cd,
        Suite::Ercd,
        Suite::Percd,
        Suite::So6,
        Suite::A32,
        Suite::Pgi,
        Suite::Bosonic,
        Suite::Fw,
        Suite::Poincare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cd => "cd",
            Suite::Ercd => "ercd",
            Suite::Percd => "percd",
            Suite::So6 => "so6",
            Suite::A32 => "a32",
            Suite::Pgi => "pgi",
            Suite::Bosonic => "bosonic",
            Suite::Fw => "fw",
            Suite::Poincare => "poincare",
        }
    }

    /// Parses a comma-separated list; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownSuite(s.to_string()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Text => "txt",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Pointwise identities of the FW transform and nonlocal representation.
    pub fw: f64,
    /// Symmetry residual of the Poincaré generators.
    pub symmetry: f64,
    /// Least-squares residual of the Poincaré closure fit.
    pub closure: f64,
    /// Distance of p^μp_μ from −m²·I.
    pub casimir: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            fw: 1e-12,
            symmetry: 1e-10,
            closure: 1e-8,
            casimir: 1e-10,
        }
    }
}

impl Tolerances {
    /// Applies `key=value`, e.g. `closure=1e-6`.
    pub fn apply_override(&mut self, entry: &str) -> Result<()> {
        let bad = || Error::InvalidTolerance(entry.to_string());
        let (key, value) = entry.split_once('=').ok_or_else(bad)?;
        let v: f64 = value.trim().parse().map_err(|_| bad())?;
        if !(v.is_finite() && v > 0.0) {
            return Err(bad());
        }
        match key.trim() {
            "fw" => self.fw = v,
            "symmetry" => self.symmetry = v,
            "closure" => self.closure = v,
            "casimir" => self.casimir = v,
            _ => return Err(bad()),
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub mass: f64,
    pub samples: usize,
    pub seed: u64,
    /// Momenta are drawn from the ball |q| ≤ radius.
    pub radius: f64,
    pub tolerances: Tolerances,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Corrupts one entry of the γ-matrices before any check runs.
    pub fault: Option<Fault>,
    pub parallel: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::ALL.to_vec(),
            mass: 1.0,
            samples: 200,
            seed: 42,
            radius: 10.0,
            tolerances: Tolerances::default(),
            format: OutputFormat::Text,
            out: None,
            fault: None,
            parallel: false,
        }
    }
}

impl SuiteConfig {
    pub fn for_suites(suites: &[Suite]) -> Self {
        SuiteConfig {
            suites: suites.to_vec(),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::UnknownSuite(String::new()));
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::InvalidMass(self.mass, "suites need m > 0"));
        }
        if self.samples == 0 {
            return Err(Error::Construction("sample count must be positive".into()));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(Error::Construction("sampling radius must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational: a computed value that differs from a commonly quoted one.
    Noted,
}

impl Status {
    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Noted => "noted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub suite: String,
    pub group: String,
    /// The relation being checked, written out as a formula.
    pub anchor: String,
    pub status: Status,
    pub residual: Option<f64>,
    pub detail: String,
    /// Wall time; excluded from JSON and CSV so reports are reproducible.
    #[serde(skip)]
    pub runtime: Duration,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub suites: Vec<Suite>,
    pub mass: f64,
    pub samples: usize,
    pub seed: u64,
    pub radius: f64,
    pub tolerances: Tolerances,
    pub fault: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    Checked,
    NotRun,
    OutOfScope,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverageEntry {
    pub group: String,
    pub description: String,
    pub status: Coverage,
    pub claims: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub noted: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationLedger {
    pub schema_version: u32,
    pub passed: bool,
    pub summary: Summary,
    pub config: ConfigRecord,
    pub claims: Vec<Claim>,
    pub coverage: Vec<CoverageEntry>,
}

/// Relation groups every complete run must touch, with the suite that owns them.
/// Groups without a suite are deliberately not implemented.
pub const CATALOGUE: &[(&str, Option<Suite>, &str)] = &[
    (
        "gamma-anticommutation",
        Some(Suite::Cd),
        "γ-matrix conventions and the five-γ Clifford relations",
    ),
    (
        "so15",
        Some(Suite::Cd),
        "so(1,5) generators s^{mn} = ¼[γ^m, γ^n] and their commutators",
    ),
    ("cd-span", Some(Suite::Cd), "the 16 Clifford–Dirac orts"),
    (
        "ercd-span",
        Some(Suite::Ercd),
        "the 64 orts obtained by adjoining i and Ĉ",
    ),
    (
        "ercd-hermiticity",
        Some(Suite::Ercd),
        "Hermitian / anti-Hermitian split of the 64 orts",
    ),
    ("extended-anticommutation", Some(Suite::Percd), "seven generating γ^A"),
    (
        "so8",
        Some(Suite::Percd),
        "so(8) generators s^{AB} and the 29-element subalgebra",
    ),
    (
        "product-identities",
        Some(Suite::Percd),
        "products of the generating γ-matrices",
    ),
    (
        "explicit-forms",
        Some(Suite::Percd),
        "additional orts α^{AB} written through γ^μ, i, Ĉ",
    ),
    ("so6", Some(Suite::So6), "so(6) realization α^{ab}, a, b = 1..6"),
    (
        "a32-invariance",
        Some(Suite::A32),
        "32-element invariance algebra of the FW equation and its maximality",
    ),
    (
        "pgi",
        Some(Suite::Pgi),
        "Pauli–Gürsey–Ibragimov algebra and its so(1,3) sextet",
    ),
    (
        "fw-transform",
        Some(Suite::Fw),
        "FW and Dirac Hamiltonians and the transform V^±",
    ),
    ("pd-spin", Some(Suite::Fw), "nonlocal spin of the Dirac field"),
    (
        "tilde-representation",
        Some(Suite::Fw),
        "nonlocal generators γ̃^A, γ̃^0, C̃",
    ),
    (
        "bosonic-transform",
        Some(Suite::Bosonic),
        "bosonic representation via W",
    ),
    (
        "bosonic-spin",
        Some(Suite::Bosonic),
        "spin-1 triplet commuting with iγ^0",
    ),
    (
        "poincare",
        Some(Suite::Poincare),
        "Poincaré generators p_μ, j_μν of the FW equation",
    ),
    (
        "casimirs",
        Some(Suite::Poincare),
        "Casimir operators p^μp_μ and the spin factor of W^B",
    ),
    (
        "rigged-hilbert-space",
        None,
        "functional-analytic treatment of nonlocal operators",
    ),
    (
        "external-constructions",
        None,
        "Maxwell, hydrogen-atom and fermionic constructions defined elsewhere",
    ),
    ("alternative-so6", None, "other so(6) realizations"),
];

/// Runs every configured suite and collects the ledger; never writes files.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationLedger> {
    cfg.validate()?;
    let basis = match cfg.fault {
        Some(f) => Basis::with_fault(f),
        None => Basis::standard(),
    };
    let per_suite: Vec<Vec<Claim>> = if cfg.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = cfg
                .suites
                .iter()
                .map(|&s| {
                    let basis = &basis;
                    scope.spawn(move || checks::run(s, cfg, basis))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("suite thread panicked"))
                .collect()
        })
    } else {
        cfg.suites.iter().map(|&s| checks::run(s, cfg, &basis)).collect()
    };
    let claims: Vec<Claim> = per_suite.into_iter().flatten().collect();
    let mut summary = Summary::default();
    for c in &claims {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Noted => summary.noted += 1,
        }
    }
    let coverage = CATALOGUE
        .iter()
        .map(|&(group, suite, description)| {
            let n = claims.iter().filter(|c| c.group == group).count();
            let status = match suite {
                None => Coverage::OutOfScope,
                Some(_) if n > 0 => Coverage::Checked,
                Some(_) => Coverage::NotRun,
            };
            CoverageEntry {
                group: group.to_string(),
                description: description.to_string(),
                status,
                claims: n,
            }
        })
        .collect();
    Ok(VerificationLedger {
        schema_version: SCHEMA_VERSION,
        passed: summary.fail == 0,
        summary,
        config: ConfigRecord {
            suites: cfg.suites.clone(),
            mass: cfg.mass,
            samples: cfg.samples,
            seed: cfg.seed,
            radius: cfg.radius,
            tolerances: cfg.tolerances,
            fault: cfg.fault.map(|f| f.to_string()),
        },
        claims,
        coverage,
    })
}

impl VerificationLedger {
    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn total_runtime(&self) -> Duration {
        self.claims.iter().map(|c| c.runtime).sum()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "suite", "group", "status", "residual", "anchor", "detail"])?;
        for c in &self.claims {
            let residual = c.residual.map(|r| format!("{r:e}")).unwrap_or_default();
            w.write_record([
                c.id.as_str(),
                c.suite.as_str(),
                c.group.as_str(),
                c.status.as_str(),
                residual.as_str(),
                c.anchor.as_str(),
                c.detail.as_str(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Serialization(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.claims {
            let tag = match c.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Noted => "NOTED",
            };
            s.push_str(&format!(
                "[{tag}] {:width$}  {}  ({:.1} ms)\n        {}\n",
                c.id,
                c.detail,
                c.runtime.as_secs_f64() * 1e3,
                c.anchor,
            ));
        }
        let unchecked: Vec<&str> = self
            .coverage
            .iter()
            .filter(|c| c.status == Coverage::NotRun)
            .map(|c| c.group.as_str())
            .collect();
        if !unchecked.is_empty() {
            s.push_str(&format!("not run: {}\n", unchecked.join(", ")));
        }
        s.push_str(&format!(
            "{}: {} passed, {} failed, {} noted in {:.2} s\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.summary.pass,
            self.summary.fail,
            self.summary.noted,
            self.total_runtime().as_secs_f64()
        ));
        s
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Text => Ok(self.to_text()),
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }

    pub fn write(&self, format: OutputFormat, path: &Path) -> Result<()> {
        std::fs::write(path, self.render(format)?).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_list("all").unwrap().len(), 9);
        assert_eq!(Suite::parse_list("fw,cd,fw").unwrap(), vec![Suite::Cd, Suite::Fw]);
        assert!(Suite::parse_list("nope").is_err());
        assert!(Suite::parse_list("").is_err());
    }

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.apply_override("closure=1e-6").unwrap();
        assert_eq!(t.closure, 1e-6);
        assert!(t.apply_override("closure").is_err());
        assert!(t.apply_override("bogus=1").is_err());
        assert!(t.apply_override("fw=-1").is_err());
    }

    #[test]
    fn ercd_ledger_reports_counts() {
        let ledger = run_suite(&SuiteConfig::for_suites(&[Suite::Ercd])).unwrap();
        assert!(ledger.passed);
        let text = ledger.to_text();
        assert!(text.contains("rank=64"), "{text}");
        assert!(text.contains("hermitian=36/antihermitian=28"), "{text}");
        assert_eq!(ledger.schema_version, SCHEMA_VERSION);
    }

    #[test]
    fn faulty_cd_names_the_pair() {
        let cfg = SuiteConfig {
            fault: Some(Fault::new(2, 0, 1).unwrap()),
            ..SuiteConfig::for_suites(&[Suite::Cd])
        };
        let ledger = run_suite(&cfg).unwrap();
        assert!(!ledger.passed);
        let c = ledger.claim("cd.anticommutation").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert!(c.detail.contains("gamma_2") || c.detail.contains("γ"), "{}", c.detail);
    }

    #[test]
    fn invalid_config_rejected() {
        let cfg = SuiteConfig {
            mass: 0.0,
            ..Default::default()
        };
        assert!(run_suite(&cfg).is_err());
    }
}
