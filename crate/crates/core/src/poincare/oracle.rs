//! Affine vector fields on R⁴ as an independent model of the Poincaré algebra.

use super::generators::GENERATOR_NAMES;

/// Metric (+, −, −, −).
const METRIC: [i64; 4] = [1, -1, -1, -1];

/// V = Σ_ν (c^ν + Σ_σ L^ν_σ x^σ) ∂_ν.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct AffineField {
    pub c: [i64; 4],
    pub l: [[i64; 4]; 4],
}

impl AffineField {
    /// ∂_μ.
    pub fn translation(mu: usize) -> Self {
        let mut f = AffineField::default();
        f.c[mu] = 1;
        f
    }

    /// x_μ∂_ν − x_ν∂_μ with x_μ = g_μμ x^μ.
    pub fn rotation(mu: usize, nu: usize) -> Self {
        let mut f = AffineField::default();
        f.l[nu][mu] += METRIC[mu];
        f.l[mu][nu] -= METRIC[nu];
        f
    }

    /// Lie bracket [U, V]^ν = U^ρ∂_ρV^ν − V^ρ∂_ρU^ν.
    pub fn bracket(&self, v: &AffineField) -> AffineField {
        let mut out = AffineField::default();
        for nu in 0..4 {
            for rho in 0..4 {
                out.c[nu] += self.c[rho] * v.l[nu][rho] - v.c[rho] * self.l[nu][rho];
            }
            for sigma in 0..4 {
                for rho in 0..4 {
                    out.l[nu][sigma] += v.l[nu][rho] * self.l[rho][sigma] - self.l[nu][rho] * v.l[rho][sigma];
                }
            }
        }
        out
    }

    fn add_scaled(&mut self, f: &AffineField, k: i64) {
        for nu in 0..4 {
            self.c[nu] += k * f.c[nu];
            for s in 0..4 {
                self.l[nu][s] += k * f.l[nu][s];
            }
        }
    }
}

/// Fields in the order p0, p1, p2, p3, j23, j31, j12, j01, j02, j03.
pub fn oracle_fields() -> [AffineField; 10] {
    [
        AffineField::translation(0),
        AffineField::translation(1),
        AffineField::translation(2),
        AffineField::translation(3),
        AffineField::rotation(2, 3),
        AffineField::rotation(3, 1),
        AffineField::rotation(1, 2),
        AffineField::rotation(0, 1),
        AffineField::rotation(0, 2),
        AffineField::rotation(0, 3),
    ]
}

/// Coordinates of `f` over [`oracle_fields`], or `None` if it is outside their span.
pub fn decompose(f: &AffineField) -> Option<[i64; 10]> {
    let basis = oracle_fields();
    let mut coef = [0i64; 10];
    coef[..4].copy_from_slice(&f.c);
    for (k, b) in basis.iter().enumerate().skip(4) {
        // every rotation has a single nonzero entry above the diagonal of l
        let (nu, s) = (0..16)
            .map(|x| (x / 4, x % 4))
            .find(|&(nu, s)| nu < s && b.l[nu][s] != 0)
            .expect("rotation field has an entry");
        coef[k] = f.l[nu][s] / b.l[nu][s];
    }
    let mut rebuilt = AffineField::default();
    for (k, b) in basis.iter().enumerate() {
        rebuilt.add_scaled(b, coef[k]);
    }
    (rebuilt == *f).then_some(coef)
}

/// Integer structure constants c_{ab}^k of the oracle for a < b.
pub fn oracle_constants() -> Vec<((usize, usize), [i64; 10])> {
    let f = oracle_fields();
    let mut out = Vec::new();
    for a in 0..10 {
        for b in a + 1..10 {
            let c = decompose(&f[a].bracket(&f[b])).expect("Poincaré fields close");
            out.push(((a, b), c));
        }
    }
    out
}

/// Human-readable form of a coefficient vector, e.g. "j12 - p3".
pub fn render_combination(coef: &[f64]) -> String {
    let mut s = String::new();
    for (k, &c) in coef.iter().enumerate() {
        if c.abs() < 1e-9 {
            continue;
        }
        let sign = if c < 0.0 { "-" } else { "+" };
        if s.is_empty() {
            if c < 0.0 {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        if (c.abs() - 1.0).abs() > 1e-9 {
            s.push_str(&format!("{}*", c.abs()));
        }
        s.push_str(GENERATOR_NAMES[k]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn combo(c: [i64; 10]) -> String {
        render_combination(&c.map(|x| x as f64))
    }

    #[test]
    fn translations_commute() {
        let f = oracle_fields();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(decompose(&f[a].bracket(&f[b])), Some([0; 10]));
            }
        }
    }

    #[test]
    fn bracket_is_antisymmetric_and_closes() {
        let f = oracle_fields();
        for a in 0..10 {
            for b in 0..10 {
                let ab = decompose(&f[a].bracket(&f[b])).unwrap();
                let ba = decompose(&f[b].bracket(&f[a])).unwrap();
                assert_eq!(ab, ba.map(|x| -x));
            }
        }
        assert_eq!(oracle_constants().len(), 45);
    }

    #[test]
    fn rotation_relations() {
        let f = oracle_fields();
        let c = |a: usize, b: usize| combo(decompose(&f[a].bracket(&f[b])).unwrap());
        assert_eq!(c(4, 5), "j12");
        assert_eq!(c(4, 8), "j03");
        assert_eq!(c(7, 8), "-j12");
        assert_eq!(c(7, 9), "j31");
    }
}
