use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::RealSurd;
use crate::oplib::GeneralOp;
use crate::reps::breve_spin;
use crate::structure::{casimir_spin_squared, eigenspace_dimension};

use super::generators::Generator;
use super::oracle::{oracle_constants, render_combination};
use super::xop::{monomials, CONSTANT};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairFit {
    pub left: String,
    pub right: String,
    pub coefficients: Vec<f64>,
    pub combination: String,
    pub residual: f64,
    pub oracle: String,
    pub matches_oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoincareClosureReport {
    pub samples: usize,
    pub tolerance: f64,
    pub max_residual: f64,
    pub closed: bool,
    pub oracle_mismatches: Vec<String>,
    pub pairs: Vec<PairFit>,
}

/// Fits every commutator [G_a, G_b] to the real span of the ten generators by
/// least squares over all coefficient entries at the sample momenta, and
/// compares the fitted constants with the vector-field oracle.
pub fn poincare_closure_check(gens: &[Generator], samples: &[[f64; 3]], tol: f64) -> Result<PoincareClosureReport> {
    if gens.len() != 10 {
        return Err(Error::DimensionMismatch {
            expected: 10,
            found: gens.len(),
        });
    }
    let keys = monomials(2);
    let columns: Vec<Vec<f64>> = gens.iter().map(|g| g.op.sample_vector(&keys, samples)).collect();
    let rows = columns[0].len();
    let design = DMatrix::from_fn(rows, 10, |r, c| columns[c][r]);
    let svd = design.clone().svd(true, true);
    let oracle = oracle_constants();

    let fits: Vec<Result<PairFit>> = std::thread::scope(|scope| {
        let handles: Vec<_> = oracle
            .iter()
            .map(|((a, b), expected)| {
                let (design, svd) = (&design, &svd);
                let keys = &keys;
                scope.spawn(move || -> Result<PairFit> {
                    let comm = gens[*a].op.commutator(&gens[*b].op)?;
                    let target = DVector::from_vec(comm.sample_vector(keys, samples));
                    let coef = svd
                        .solve(&target, 1e-12)
                        .map_err(|e| Error::Construction(format!("least squares failed: {e}")))?;
                    let residual = (design * &coef - &target).amax();
                    let coefficients: Vec<f64> = coef.iter().copied().collect();
                    let matches_oracle = coefficients
                        .iter()
                        .zip(expected.iter())
                        .all(|(c, e)| (c - *e as f64).abs() < 1e-6);
                    Ok(PairFit {
                        left: gens[*a].name.clone(),
                        right: gens[*b].name.clone(),
                        combination: render_combination(&coefficients),
                        coefficients,
                        residual,
                        oracle: render_combination(&expected.map(|x| x as f64)),
                        matches_oracle,
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fit thread panicked"))
            .collect()
    });
    let pairs = fits.into_iter().collect::<Result<Vec<_>>>()?;
    let max_residual = pairs.iter().map(|p| p.residual).fold(0.0, f64::max);
    let oracle_mismatches = pairs
        .iter()
        .filter(|p| !p.matches_oracle)
        .map(|p| format!("[{}, {}] = {} (oracle {})", p.left, p.right, p.combination, p.oracle))
        .collect();
    Ok(PoincareClosureReport {
        samples: samples.len(),
        tolerance: tol,
        closed: max_residual < tol,
        max_residual,
        oracle_mismatches,
        pairs,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CasimirReport {
    pub mass: f64,
    /// Mean of the diagonal of p^μp_μ over the samples.
    pub p_squared: f64,
    pub expected_p_squared: f64,
    /// Largest distance of p^μp_μ(q) from −m²·I.
    pub p_squared_deviation: f64,
    /// Largest per-entry variance of p^μp_μ(q) over the samples.
    pub p_squared_variance: f64,
    /// |p^μp_μ| agrees with m² but the sign is opposite to +m².
    pub magnitude_matches: bool,
    pub spin_squared: String,
    pub spin_squared_matches: bool,
    /// Complex dimensions of the −2 and 0 eigenspaces of s⃗².
    pub spin_eigenspaces: (usize, usize),
}

/// p^μp_μ = p₀∘p₀ − Σ p_n∘p_n and the spin factor s⃗² of the second Casimir.
pub fn casimir_report(gens: &[Generator], m: f64, samples: &[[f64; 3]]) -> Result<CasimirReport> {
    if gens.len() < 4 {
        return Err(Error::DimensionMismatch {
            expected: 10,
            found: gens.len(),
        });
    }
    let mut p2 = gens[0].op.compose(&gens[0].op)?;
    for g in &gens[1..4] {
        p2 = p2.sub(&g.op.compose(&g.op)?)?;
    }
    let expected = -m * m;
    let mut sum = 0.0;
    let mut deviation = 0.0f64;
    let mut entries: Vec<Vec<f64>> = Vec::new();
    for &q in samples {
        let v = p2.coefficient_at(CONSTANT, q);
        let mut flat = Vec::with_capacity(64);
        for r in 0..4 {
            sum += v.linear.get(r, r).re / 4.0;
            for c in 0..4 {
                let target = if r == c { expected } else { 0.0 };
                deviation = deviation
                    .max((v.linear.get(r, c) - target).norm())
                    .max(v.antilinear.get(r, c).norm());
                flat.push(v.linear.get(r, c).re);
                flat.push(v.linear.get(r, c).im);
                flat.push(v.antilinear.get(r, c).re);
                flat.push(v.antilinear.get(r, c).im);
            }
        }
        entries.push(flat);
    }
    let n = samples.len().max(1) as f64;
    let mean = sum / n;
    let variance = (0..entries.first().map_or(0, Vec::len))
        .map(|k| {
            let mu = entries.iter().map(|e| e[k]).sum::<f64>() / n;
            entries.iter().map(|e| (e[k] - mu).powi(2)).sum::<f64>() / n
        })
        .fold(0.0, f64::max);
    let s2 = casimir_spin_squared(&breve_spin())?;
    let expected_s2 = GeneralOp::linear_op(crate::oplib::Mat4::diag(
        [-2, -2, -2, 0].map(crate::numerics::ExactScalar::from_int),
    ));
    Ok(CasimirReport {
        mass: m,
        p_squared: mean,
        expected_p_squared: expected,
        p_squared_deviation: deviation,
        p_squared_variance: variance,
        magnitude_matches: (mean.abs() - m * m).abs() < 1e-9,
        spin_squared_matches: s2 == expected_s2,
        spin_eigenspaces: (
            eigenspace_dimension(&s2, &RealSurd::from_int(-2)),
            eigenspace_dimension(&s2, &RealSurd::zero()),
        ),
        spin_squared: s2.to_string(),
    })
}
