//! Multiplication, commutator and structure-constant tables of the named ort sets.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::RealSurd;
use crate::oplib::{commutator, span_basis, GeneralOp, SpanBasis};
use crate::reps::{ort_set_by_name, Basis, OrtSet};
use crate::structure::{structure_constants, StructureConstant};
use crate::suite::OutputFormat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    Multiplication,
    Commutator,
    StructureConstants,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Multiplication => "multiplication",
            TableKind::Commutator => "commutator",
            TableKind::StructureConstants => "structure-constants",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "multiplication" => Ok(TableKind::Multiplication),
            "commutator" => Ok(TableKind::Commutator),
            "structure-constants" => Ok(TableKind::StructureConstants),
            _ => Err(Error::UnknownTableKind(s.to_string())),
        }
    }
}

/// `entries[i][j]` is X_i∘X_j or [X_i, X_j], written through the set's labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub set: String,
    pub kind: TableKind,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstantsTable {
    pub set: String,
    pub kind: TableKind,
    pub labels: Vec<String>,
    pub constants: Vec<StructureConstant>,
}

/// Writes operators as `±X`, `±i*X` for an ort X, or as an exact real combination of orts.
struct Expresser<'a> {
    set: &'a OrtSet,
    units: HashMap<Vec<RealSurd>, String>,
    span: Option<SpanBasis>,
}

impl<'a> Expresser<'a> {
    fn new(set: &'a OrtSet) -> Self {
        let i = GeneralOp::imaginary_unit();
        let mut units = HashMap::new();
        for ort in set {
            let l = &ort.label;
            let ix = i.compose(&ort.op);
            for (op, name) in [
                (ort.op.clone(), l.clone()),
                (-&ort.op, format!("-{l}")),
                (ix.clone(), format!("i*{l}")),
                (-&ix, format!("-i*{l}")),
            ] {
                units.entry(op.vectorize()).or_insert(name);
            }
        }
        let basis = span_basis(set.ops());
        let span = (basis.rank() == set.len()).then_some(basis);
        Expresser { set, units, span }
    }

    fn express(&self, op: &GeneralOp) -> String {
        if op.is_zero() {
            return "0".into();
        }
        if let Some(s) = self.units.get(&op.vectorize()) {
            return s.clone();
        }
        if let Some(span) = &self.span {
            let red = span.reduce(&op.vectorize());
            if red.in_span() {
                let mut s = String::new();
                for (k, c) in red.coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let coef = c.to_string();
                    let term = match coef.as_str() {
                        "1" => self.set.element(k).label.clone(),
                        "-1" => format!("-{}", self.set.element(k).label),
                        _ if coef.contains(" ") => format!("({coef})*{}", self.set.element(k).label),
                        _ => format!("{coef}*{}", self.set.element(k).label),
                    };
                    if s.is_empty() {
                        s = term;
                    } else if let Some(rest) = term.strip_prefix('-') {
                        s = format!("{s} - {rest}");
                    } else {
                        s = format!("{s} + {term}");
                    }
                }
                return s;
            }
        }
        "outside-span".into()
    }
}

pub fn operation_table(set: &OrtSet, kind: TableKind) -> Result<Table> {
    let f: fn(&GeneralOp, &GeneralOp) -> GeneralOp = match kind {
        TableKind::Multiplication => |x, y| x.compose(y),
        TableKind::Commutator => commutator,
        TableKind::StructureConstants => return Err(Error::UnknownTableKind(kind.to_string())),
    };
    let ex = Expresser::new(set);
    let entries = set
        .iter()
        .map(|x| set.iter().map(|y| ex.express(&f(&x.op, &y.op))).collect())
        .collect();
    Ok(Table {
        set: set.name().to_string(),
        kind,
        labels: set.labels().iter().map(|s| s.to_string()).collect(),
        entries,
    })
}

pub fn constants_table(set: &OrtSet) -> Result<ConstantsTable> {
    Ok(ConstantsTable {
        set: set.name().to_string(),
        kind: TableKind::StructureConstants,
        labels: set.labels().iter().map(|s| s.to_string()).collect(),
        constants: structure_constants(set)?,
    })
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Serialization(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialization(e.to_string()))
}

fn json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Renders a complete table for a named set. Text output is a tab-separated grid.
pub fn dump_tables(basis: &Basis, set_name: &str, kind: TableKind, format: OutputFormat) -> Result<String> {
    let set = ort_set_by_name(basis, set_name)?;
    match kind {
        TableKind::StructureConstants => {
            let t = constants_table(&set)?;
            match format {
                OutputFormat::Json => json_string(&t),
                OutputFormat::Csv | OutputFormat::Text => {
                    let header = ["i", "j", "k", "label_i", "label_j", "label_k", "value"]
                        .map(String::from)
                        .to_vec();
                    let rows = t.constants.iter().map(|c| {
                        vec![
                            c.i.to_string(),
                            c.j.to_string(),
                            c.k.to_string(),
                            t.labels[c.i].clone(),
                            t.labels[c.j].clone(),
                            t.labels[c.k].clone(),
                            c.value.clone(),
                        ]
                    });
                    let all = std::iter::once(header).chain(rows);
                    if format == OutputFormat::Csv {
                        csv_string(all)
                    } else {
                        Ok(all.map(|r| r.join("\t") + "\n").collect())
                    }
                }
            }
        }
        _ => {
            let t = operation_table(&set, kind)?;
            match format {
                OutputFormat::Json => json_string(&t),
                OutputFormat::Csv | OutputFormat::Text => {
                    let op = if kind == TableKind::Multiplication { "*" } else { "[,]" };
                    let header = std::iter::once(op.to_string())
                        .chain(t.labels.iter().cloned())
                        .collect();
                    let rows = t
                        .labels
                        .iter()
                        .zip(&t.entries)
                        .map(|(l, row)| std::iter::once(l.clone()).chain(row.iter().cloned()).collect());
                    let all = std::iter::once(header).chain(rows);
                    if format == OutputFormat::Csv {
                        csv_string(all)
                    } else {
                        Ok(all.map(|r: Vec<String>| r.join("\t") + "\n").collect())
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cd_products_are_unit_multiples() {
        let t = operation_table(&Basis::standard().cd16(), TableKind::Multiplication).unwrap();
        assert_eq!(t.entries.len(), 16);
        let labels: Vec<&str> = t.labels.iter().map(String::as_str).collect();
        for row in &t.entries {
            for e in row {
                let bare = e.trim_start_matches('-').trim_start_matches("i*");
                assert!(labels.contains(&bare), "{e}");
            }
        }
    }

    #[test]
    fn commutator_table_is_antisymmetric() {
        let t = operation_table(&Basis::standard().so6(), TableKind::Commutator).unwrap();
        let n = t.labels.len();
        for a in 0..n {
            assert_eq!(t.entries[a][a], "0");
            for b in 0..n {
                let (x, y) = (&t.entries[a][b], &t.entries[b][a]);
                if x == "0" {
                    assert_eq!(y, "0");
                } else {
                    assert!(
                        x.strip_prefix('-') == Some(y) || y.strip_prefix('-') == Some(x),
                        "{x} vs {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn unknown_names() {
        let b = Basis::standard();
        assert!(matches!(
            dump_tables(&b, "nope", TableKind::Commutator, OutputFormat::Json),
            Err(Error::UnknownSet(_))
        ));
        assert!("bogus".parse::<TableKind>().is_err());
    }

    #[test]
    fn structure_constants_csv_has_header() {
        let s = dump_tables(
            &Basis::standard(),
            "so6",
            TableKind::StructureConstants,
            OutputFormat::Csv,
        )
        .unwrap();
        assert!(s.starts_with("i,j,k,label_i,label_j,label_k,value\n"));
    }
}
