//! Seeded generators for small random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convex_function::{is_proper, PCFunc};
use crate::linalg::{rat, Matrix, Rat};
use crate::lp::feasible;
use crate::multifunction::MultiFn;
use crate::polyhedron::HRep;

/// Independent stream for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, tag: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(tag.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index);
    rng
}

#[derive(Debug, Clone, Copy)]
pub struct HRepShape {
    pub dim: usize,
    pub max_rows: usize,
    pub coef: i64,
}

impl HRepShape {
    pub fn new(dim: usize, max_rows: usize) -> Self {
        HRepShape { dim, max_rows, coef: 3 }
    }
}

fn int_row<R: Rng + ?Sized>(rng: &mut R, n: usize, coef: i64) -> Vec<Rat> {
    loop {
        let row: Vec<i64> = (0..n).map(|_| rng.random_range(-coef..=coef)).collect();
        if n == 0 || row.iter().any(|&c| c != 0) {
            return row.into_iter().map(rat).collect();
        }
    }
}

/// Random rows: mostly inequalities with a right-hand side biased to keep the
/// origin feasible, sometimes an equality, sometimes a mirrored pair that
/// forms an implicit equality.
pub fn random_hrep<R: Rng + ?Sized>(rng: &mut R, shape: HRepShape) -> HRep {
    let n = shape.dim;
    let mut p = HRep::whole_space(n);
    let rows = rng.random_range(1..=shape.max_rows.max(1));
    while p.n_rows() < rows {
        let c = int_row(rng, n, shape.coef);
        let d = rat(rng.random_range(-1..=shape.coef));
        let roll = rng.random_range(0..12);
        if roll == 0 {
            p.push_eq(c, d);
        } else if roll == 1 && p.n_rows() + 2 <= rows {
            let minus: Vec<Rat> = c.iter().map(|x| -x).collect();
            p.push_ineq(c, d.clone());
            p.push_ineq(minus, -d);
        } else {
            p.push_ineq(c, d);
        }
    }
    p
}

pub fn random_nonempty_hrep<R: Rng + ?Sized>(rng: &mut R, shape: HRepShape) -> HRep {
    loop {
        let p = random_hrep(rng, shape);
        if feasible(&p) {
            return p;
        }
    }
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, nrows: usize, ncols: usize, coef: i64) -> Matrix {
    let rows = (0..nrows).map(|_| (0..ncols).map(|_| rat(rng.random_range(-coef..=coef))).collect()).collect();
    Matrix::from_rows(rows, ncols).expect("rows have ncols entries")
}

pub fn random_multifn<R: Rng + ?Sized>(rng: &mut R, nx: usize, ny: usize, max_rows: usize) -> MultiFn {
    let graph = random_nonempty_hrep(rng, HRepShape::new(nx + ny, max_rows));
    MultiFn::new(nx, ny, graph).expect("graph has nx + ny coordinates")
}

/// Proper max-affine function on `n` variables, optionally restricted to a random domain.
pub fn random_proper_pcfunc<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PCFunc {
    loop {
        let pieces: Vec<(Vec<Rat>, Rat)> = (0..rng.random_range(1..=3))
            .map(|_| {
                let a: Vec<Rat> = (0..n).map(|_| rat(rng.random_range(-2..=2))).collect();
                (a, rat(rng.random_range(-2..=2)))
            })
            .collect();
        let base = PCFunc::max_affine(n, &pieces).expect("pieces have n entries");
        let f = if rng.random_bool(0.5) {
            let dom = random_hrep(rng, HRepShape::new(n, 2));
            let mut epi = base.epi().clone();
            for (c, d) in dom.ineq_rows() {
                let mut row = c.to_vec();
                row.push(Rat::default());
                epi.push_ineq(row, d.clone());
            }
            for (a, b) in dom.eq_rows() {
                let mut row = a.to_vec();
                row.push(Rat::default());
                epi.push_eq(row, b.clone());
            }
            PCFunc::new(n, epi).expect("epigraph rows extended by t")
        } else {
            base
        };
        if is_proper(&f) {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u32> = (0..4).map(|_| instance_rng(1, 2, 3).random()).collect();
        let b: Vec<u32> = (0..4).map(|_| instance_rng(1, 2, 3).random()).collect();
        assert_eq!(a, b);
        let x: u64 = instance_rng(1, 2, 3).random();
        let y: u64 = instance_rng(1, 2, 4).random();
        assert_ne!(x, y);
    }

    #[test]
    fn generated_shapes() {
        let mut rng = instance_rng(0, 0, 0);
        for _ in 0..20 {
            let p = random_nonempty_hrep(&mut rng, HRepShape::new(3, 6));
            assert_eq!(p.dim(), 3);
            assert!(p.n_rows() <= 6 && feasible(&p));
            let f = random_proper_pcfunc(&mut rng, 2);
            assert!(is_proper(&f));
        }
    }
}
