use crate::numerics::{ExactScalar, RealSurd};

use super::GeneralOp;

/// Real 8×8 matrix acting on R⁸ ≅ C⁴ with φ = u + iv ↦ (u, v).
///
/// For φ ↦ Aφ + Bφ* the block form is
/// `[[Re A + Re B, −Im A + Im B], [Im A + Im B, Re A − Re B]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealifiedOp {
    entries: Vec<RealSurd>,
}

impl RealifiedOp {
    pub const DIM: usize = 8;

    pub fn zero() -> Self {
        RealifiedOp {
            entries: vec![RealSurd::zero(); 64],
        }
    }

    pub fn identity() -> Self {
        let mut m = RealifiedOp::zero();
        for k in 0..8 {
            m.entries[k * 8 + k] = RealSurd::one();
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &RealSurd {
        &self.entries[r * 8 + c]
    }

    pub fn entries(&self) -> &[RealSurd] {
        &self.entries
    }

    pub fn mul(&self, o: &RealifiedOp) -> RealifiedOp {
        let mut out = RealifiedOp::zero();
        for r in 0..8 {
            for k in 0..8 {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..8 {
                    let b = o.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * 8 + c;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &RealifiedOp) -> RealifiedOp {
        RealifiedOp {
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &RealifiedOp) -> RealifiedOp {
        RealifiedOp {
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn transpose(&self) -> RealifiedOp {
        let mut out = RealifiedOp::zero();
        for r in 0..8 {
            for c in 0..8 {
                out.entries[c * 8 + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RealSurd::is_zero)
    }
}

pub(crate) fn realify_parts(op: &GeneralOp) -> RealifiedOp {
    let a = op.linear();
    let b = op.antilinear();
    let mut out = RealifiedOp::zero();
    let re = |x: &ExactScalar| x.re.clone();
    let im = |x: &ExactScalar| x.im.clone();
    for r in 0..4 {
        for c in 0..4 {
            let (ar, ai) = (re(a.get(r, c)), im(a.get(r, c)));
            let (br, bi) = (re(b.get(r, c)), im(b.get(r, c)));
            out.entries[r * 8 + c] = &ar + &br;
            out.entries[r * 8 + c + 4] = &bi - &ai;
            out.entries[(r + 4) * 8 + c] = &ai + &bi;
            out.entries[(r + 4) * 8 + c + 4] = &ar - &br;
        }
    }
    out
}

/// Realification of an operator; the result is cached on the operator.
pub fn realify(op: &GeneralOp) -> RealifiedOp {
    op.realified().clone()
}
