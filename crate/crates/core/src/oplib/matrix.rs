use std::fmt;

use crate::numerics::Scalar;

/// Dense 4×4 matrix over a [`Scalar`] ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat4<T>(pub [[T; 4]; 4]);

impl<T: Scalar> Mat4<T> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Mat4(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn zero() -> Self {
        Mat4::from_fn(|_, _| T::zero())
    }

    pub fn identity() -> Self {
        Mat4::from_fn(|r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn diag(d: [T; 4]) -> Self {
        let mut m = Mat4::zero();
        for (k, x) in d.into_iter().enumerate() {
            m.0[k][k] = x;
        }
        m
    }

    pub fn from_rows(rows: [[T; 4]; 4]) -> Self {
        Mat4(rows)
    }

    /// Block matrix `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(a: [[T; 2]; 2], b: [[T; 2]; 2], c: [[T; 2]; 2], d: [[T; 2]; 2]) -> Self {
        Mat4::from_fn(|r, col| {
            let blk = match (r < 2, col < 2) {
                (true, true) => &a,
                (true, false) => &b,
                (false, true) => &c,
                (false, false) => &d,
            };
            blk[r % 2][col % 2].clone()
        })
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.0[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.0[r][c] = v;
    }

    pub fn map(&self, mut f: impl FnMut(&T) -> T) -> Self {
        Mat4::from_fn(|r, c| f(&self.0[r][c]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Scalar::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat4::from_fn(|r, c| self.0[r][c].add_ref(&o.0[r][c]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat4::from_fn(|r, c| self.0[r][c].sub_ref(&o.0[r][c]))
    }

    pub fn neg(&self) -> Self {
        self.map(Scalar::neg_ref)
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul_ref(s))
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    pub fn transpose(&self) -> Self {
        Mat4::from_fn(|r, c| self.0[c][r].clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Mat4::from_fn(|r, c| self.0[c][r].conj())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Mat4::<T>::zero();
        for r in 0..4 {
            for k in 0..4 {
                let a = &self.0[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..4 {
                    let b = &o.0[k][c];
                    if b.is_zero() {
                        continue;
                    }
                    out.0[r][c] = out.0[r][c].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T; 4]) -> [T; 4] {
        std::array::from_fn(|r| (0..4).fold(T::zero(), |acc, c| acc.add_ref(&self.0[r][c].mul_ref(&v[c]))))
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Mat4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.0.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
            if k < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
