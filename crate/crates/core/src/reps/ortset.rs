use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oplib::{GeneralOp, Linearity};

/// One labelled element of an [`OrtSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ort {
    pub label: String,
    /// How the element is built from the γ-matrices, `i` and `Ĉ`.
    pub definition: String,
    pub op: GeneralOp,
}

/// Named, ordered collection of operators with unique labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrtSet {
    name: String,
    elements: Vec<Ort>,
}

/// Serializable description of an ort: label, definition and exact entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrtRecord {
    pub label: String,
    pub definition: String,
    pub kind: Linearity,
    pub linear: Vec<Vec<String>>,
    pub antilinear: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrtSetRecord {
    pub name: String,
    pub elements: Vec<OrtRecord>,
}

impl OrtSet {
    pub fn new(name: impl Into<String>) -> Self {
        OrtSet {
            name: name.into(),
            elements: Vec::new(),
        }
    }

    /// Appends an element. Panics on a duplicate label: sets are built by
    /// fixed constructors, so a clash is a programming error.
    pub fn push(&mut self, label: impl Into<String>, definition: impl Into<String>, op: GeneralOp) {
        let label = label.into();
        assert!(self.get(&label).is_none(), "duplicate label {label} in {}", self.name);
        self.elements.push(Ort {
            label,
            definition: definition.into(),
            op,
        });
    }

    pub fn with(mut self, label: impl Into<String>, definition: impl Into<String>, op: GeneralOp) -> Self {
        self.push(label, definition, op);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ort> {
        self.elements.iter()
    }

    pub fn ops(&self) -> impl Iterator<Item = &GeneralOp> {
        self.elements.iter().map(|o| &o.op)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.elements.iter().map(|o| o.label.as_str()).collect()
    }

    pub fn get(&self, label: &str) -> Option<&GeneralOp> {
        self.elements.iter().find(|o| o.label == label).map(|o| &o.op)
    }

    /// Like [`OrtSet::get`] but reports a missing label as an error.
    pub fn require(&self, label: &str) -> Result<&GeneralOp> {
        self.get(label)
            .ok_or_else(|| Error::Construction(format!("{} has no element {label}", self.name)))
    }

    pub fn element(&self, k: usize) -> &Ort {
        &self.elements[k]
    }

    /// Every element is purely linear or purely antilinear.
    pub fn is_pure(&self) -> bool {
        self.elements
            .iter()
            .all(|o| matches!(o.op.kind(), Linearity::Linear | Linearity::Antilinear))
    }

    /// Applies `f` to every operator, keeping labels and definitions.
    pub fn map_ops(&self, name: impl Into<String>, f: impl Fn(&GeneralOp) -> GeneralOp) -> OrtSet {
        OrtSet {
            name: name.into(),
            elements: self
                .elements
                .iter()
                .map(|o| Ort {
                    label: o.label.clone(),
                    definition: o.definition.clone(),
                    op: f(&o.op),
                })
                .collect(),
        }
    }

    pub fn to_record(&self) -> OrtSetRecord {
        let render = |m: &crate::oplib::Mat4<crate::numerics::ExactScalar>| {
            (0..4)
                .map(|r| (0..4).map(|c| m.get(r, c).to_string()).collect())
                .collect()
        };
        OrtSetRecord {
            name: self.name.clone(),
            elements: self
                .elements
                .iter()
                .map(|o| OrtRecord {
                    label: o.label.clone(),
                    definition: o.definition.clone(),
                    kind: o.op.kind(),
                    linear: render(o.op.linear()),
                    antilinear: render(o.op.antilinear()),
                })
                .collect(),
        }
    }
}

impl<'a> IntoIterator for &'a OrtSet {
    type Item = &'a Ort;
    type IntoIter = std::slice::Iter<'a, Ort>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Antisymmetric family `s^{ab}` indexed by pairs drawn from `indices`.
#[derive(Clone, Debug)]
pub struct PairFamily {
    name: String,
    indices: Vec<usize>,
    ops: BTreeMap<(usize, usize), GeneralOp>,
}

impl PairFamily {
    /// Builds the family from `f(a, b)` for every `a < b`.
    pub fn build(name: impl Into<String>, indices: Vec<usize>, f: impl Fn(usize, usize) -> GeneralOp) -> Self {
        let mut ops = BTreeMap::new();
        for (k, &a) in indices.iter().enumerate() {
            for &b in &indices[k + 1..] {
                ops.insert((a, b), f(a, b));
            }
        }
        PairFamily {
            name: name.into(),
            indices,
            ops,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `s^{ab}`, with `s^{ba} = −s^{ab}` and `s^{aa} = 0`.
    pub fn get(&self, a: usize, b: usize) -> GeneralOp {
        if a == b {
            GeneralOp::zero()
        } else if let Some(op) = self.ops.get(&(a, b)) {
            op.clone()
        } else {
            -self.ops.get(&(b, a)).expect("index outside family")
        }
    }

    /// Generators in lexicographic pair order.
    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &GeneralOp)> {
        self.ops.iter()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn map(&self, name: impl Into<String>, f: impl Fn(&GeneralOp) -> GeneralOp) -> PairFamily {
        PairFamily {
            name: name.into(),
            indices: self.indices.clone(),
            ops: self.ops.iter().map(|(k, v)| (*k, f(v))).collect(),
        }
    }

    /// The family as an ort set labelled `"{prefix}_{a}{b}"`.
    pub fn to_ort_set(&self, prefix: &str) -> OrtSet {
        let mut set = OrtSet::new(self.name.clone());
        for (&(a, b), op) in &self.ops {
            set.push(format!("{prefix}_{a}{b}"), format!("{prefix}^{a}{b}"), op.clone());
        }
        set
    }
}
