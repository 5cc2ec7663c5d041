use num_bigint::BigInt;
use rand::Rng;

use crate::linalg::{add, scale, sub, Rat};
use crate::polyhedron::VRep;

const RANDOM_SAMPLES: usize = 16;
const MAX_DEN: i64 = 8;
const BOX: i64 = 4;

/// Rational point with denominators at most 8 and entries in `[-4, 4]`.
pub fn random_rational_point<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Rat> {
    (0..dim)
        .map(|_| {
            let den = rng.random_range(1..=MAX_DEN);
            let num = rng.random_range(-BOX * den..=BOX * den);
            Rat::new(BigInt::from(num), BigInt::from(den))
        })
        .collect()
}

/// Test points for a set given by generators: the points, pairwise midpoints,
/// each point moved along every ray by 1 and 2 and along every lineality
/// direction by ±1, followed by 16 random rational points.
pub fn sample_grid<R: Rng + ?Sized>(v: &VRep, rng: &mut R) -> Vec<Vec<Rat>> {
    let half = Rat::new(1.into(), 2.into());
    let two = Rat::from_integer(2.into());
    let mut out: Vec<Vec<Rat>> = Vec::new();
    let mut push = |x: Vec<Rat>| {
        if !out.contains(&x) {
            out.push(x);
        }
    };
    let pts = v.points();
    for (i, a) in pts.iter().enumerate() {
        push(a.clone());
        for b in &pts[i + 1..] {
            push(scale(&add(a, b), &half));
        }
        for r in v.rays() {
            push(add(a, r));
            push(add(a, &scale(r, &two)));
        }
        for l in v.lineality() {
            push(add(a, l));
            push(sub(a, l));
        }
    }
    for _ in 0..RANDOM_SAMPLES {
        push(random_rational_point(v.dim(), rng));
    }
    out
}
