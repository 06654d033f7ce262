//! Exact linear algebra over ℚ(√2).

use crate::numerics::RealSurd;

/// Incrementally built echelon basis of a subspace of ℚ(√2)ⁿ.
///
/// Every stored row has a pivot normalized to 1 and vanishes at the pivots
/// of all earlier rows. Each row also records which combination of the
/// inserted vectors produced it, so membership tests return coordinates.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    rows: Vec<Row>,
    inserted: usize,
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    values: Vec<RealSurd>,
    /// Coefficients over the inserted vectors (sparse: index, coefficient).
    combo: Vec<(usize, RealSurd)>,
}

/// Result of reducing a vector against a [`SpanBasis`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub residual: Vec<RealSurd>,
    /// `v − residual = Σ coefficients[k]·inserted[k]`.
    pub coefficients: Vec<RealSurd>,
}

impl Reduction {
    pub fn in_span(&self) -> bool {
        self.residual.iter().all(RealSurd::is_zero)
    }
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors passed to [`SpanBasis::insert`] so far.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce_tracked(&self, v: &[RealSurd]) -> (Vec<RealSurd>, Vec<RealSurd>) {
        let mut v = v.to_vec();
        let mut coeffs = vec![RealSurd::zero(); self.inserted];
        for row in &self.rows {
            let f = v[row.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (k, x) in row.values.iter().enumerate() {
                if !x.is_zero() {
                    v[k] = &v[k] - &(&f * x);
                }
            }
            for (k, c) in &row.combo {
                coeffs[*k] = &coeffs[*k] + &(&f * c);
            }
        }
        (v, coeffs)
    }

    pub fn reduce(&self, v: &[RealSurd]) -> Reduction {
        let (residual, coefficients) = self.reduce_tracked(v);
        Reduction { residual, coefficients }
    }

    pub fn contains(&self, v: &[RealSurd]) -> bool {
        self.reduce(v).in_span()
    }

    /// Inserts `v`. Returns `None` if `v` was independent of the previous
    /// vectors, otherwise its coordinates over them.
    pub fn insert(&mut self, v: &[RealSurd]) -> Option<Vec<RealSurd>> {
        let idx = self.inserted;
        let (residual, coeffs) = self.reduce_tracked(v);
        self.inserted += 1;
        let Some(pivot) = residual.iter().position(|x| !x.is_zero()) else {
            return Some(coeffs);
        };
        let inv = residual[pivot].inv().expect("pivot is nonzero");
        let values: Vec<RealSurd> = residual.iter().map(|x| x * &inv).collect();
        // row = (v − Σ coeffs·inserted)·inv
        let mut combo: Vec<(usize, RealSurd)> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, -&(c * &inv)))
            .collect();
        combo.push((idx, inv));
        self.rows.push(Row { pivot, values, combo });
        None
    }
}

/// Rank of a family of vectors.
pub fn rank(vectors: &[Vec<RealSurd>]) -> usize {
    let mut basis = SpanBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Basis of the kernel of the linear map whose `j`-th column is `columns[j]`.
/// Kernel vectors are expressed in the domain's standard basis.
pub fn kernel(columns: &[Vec<RealSurd>]) -> Vec<Vec<RealSurd>> {
    let n = columns.len();
    let mut basis = SpanBasis::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        if let Some(coeffs) = basis.insert(col) {
            // col_j − Σ c_k col_k = 0
            let mut v = vec![RealSurd::zero(); n];
            v[j] = RealSurd::one();
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    v[k] = -c;
                }
            }
            out.push(v);
        }
    }
    out
}
