use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic momentum samples inside the ball |q| ≤ `radius`.
///
/// The first point is q = 0, the next six lie on the coordinate axes (one per
/// signed direction, random length), the rest are uniform in the ball.
/// Identical `(count, seed, radius)` give identical points on every platform.
pub fn sample_momenta(count: usize, seed: u64, radius: f64) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    out.push([0.0; 3]);
    for axis in 0..3 {
        for sign in [1.0, -1.0] {
            let mut q = [0.0; 3];
            q[axis] = sign * rng.random_range(0.05..=1.0) * radius;
            out.push(q);
        }
    }
    while out.len() < count {
        let q = [
            rng.random_range(-radius..=radius),
            rng.random_range(-radius..=radius),
            rng.random_range(-radius..=radius),
        ];
        if q.iter().map(|x| x * x).sum::<f64>() <= radius * radius {
            out.push(q);
        }
    }
    out.truncate(count);
    out
}
