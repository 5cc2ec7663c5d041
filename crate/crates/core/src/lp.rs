//! Exact linear programming over [`HRep`] feasible sets.
//!
//! Equality rows are eliminated up front: the affine subspace they cut out is
//! parametrized as `x0 + N z`, and the remaining inequalities are solved over
//! the free coordinates `z` with a two-phase tableau simplex using Bland's rule.

use num_traits::{Signed, Zero};

use crate::error::{check_dim, Result};
use crate::linalg::{add, dot, solve_affine, zeros, Matrix, Rat};
use crate::polyhedron::HRep;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Infeasible,
    Unbounded,
    Optimal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    /// Feasible, with objective unbounded in the requested direction.
    Unbounded,
    Optimal {
        value: Rat,
        point: Vec<Rat>,
    },
}

impl LpResult {
    pub fn status(&self) -> LpStatus {
        match self {
            LpResult::Infeasible => LpStatus::Infeasible,
            LpResult::Unbounded => LpStatus::Unbounded,
            LpResult::Optimal { .. } => LpStatus::Optimal,
        }
    }

    pub fn value(&self) -> Option<&Rat> {
        match self {
            LpResult::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&[Rat]> {
        match self {
            LpResult::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

/// Optimizes `⟨c, x⟩` over `p`.
pub fn solve_lp(c: &[Rat], p: &HRep, sense: Sense) -> Result<LpResult> {
    check_dim("objective", p.dim(), c.len())?;
    let Some(affine) = solve_affine(p.eq_a(), p.eq_b())? else {
        return Ok(LpResult::Infeasible);
    };
    let n = p.dim();
    let k = affine.kernel.len();
    let basis = Matrix::from_columns(&affine.kernel, n);
    let x0 = affine.particular;

    // Inequalities restricted to the affine subspace: (C N) z <= d - C x0.
    let g = p.ineq_c().mul(&basis);
    let h: Vec<Rat> = p.ineq_rows().map(|(row, d)| d - dot(row, &x0)).collect();
    let mut cost: Vec<Rat> = basis.transpose().mul_vec(c);
    if sense == Sense::Max {
        cost.iter_mut().for_each(|x| *x = -&*x);
    }

    let lift = |z: &[Rat]| add(&x0, &basis.mul_vec(z));
    Ok(match simplex(&g, &h, &cost, k) {
        Outcome::Infeasible => LpResult::Infeasible,
        Outcome::Unbounded => LpResult::Unbounded,
        Outcome::Optimal(z) => {
            let point = lift(&z);
            LpResult::Optimal { value: dot(c, &point), point }
        }
    })
}

/// True iff `p` is nonempty.
pub fn feasible(p: &HRep) -> bool {
    find_point(p).is_some()
}

/// Some point of `p`, or `None` if `p` is empty.
pub fn find_point(p: &HRep) -> Option<Vec<Rat>> {
    match solve_lp(&zeros(p.dim()), p, Sense::Min).expect("objective has matching dimension") {
        LpResult::Optimal { point, .. } => Some(point),
        LpResult::Unbounded => unreachable!("zero objective is bounded"),
        LpResult::Infeasible => None,
    }
}

enum Outcome {
    Infeasible,
    Unbounded,
    Optimal(Vec<Rat>),
}

/// Dense simplex tableau; each row carries its right-hand side as the last entry.
/// The objective row stores reduced costs with `-value` in the last entry.
struct Tableau {
    rows: Vec<Vec<Rat>>,
    obj: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rat>| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = c;
    }

    fn set_objective(&mut self, cost: &[Rat]) {
        let mut obj = cost.to_vec();
        obj.push(Rat::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (o, x) in obj.iter_mut().zip(row) {
                *o -= cb * x;
            }
        }
        self.obj = obj;
    }

    /// Bland's rule: lowest-index improving column enters, ties in the ratio
    /// test go to the lowest-index basic variable. Returns false on unboundedness.
    fn optimize(&mut self, allowed: &[bool]) -> bool {
        let rhs = self.ncols;
        loop {
            let Some(c) = (0..self.ncols).find(|&j| allowed[j] && self.obj[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Minimizes `cost·z` subject to `g z <= h` with `z` free in `k` dimensions.
fn simplex(g: &Matrix, h: &[Rat], cost: &[Rat], k: usize) -> Outcome {
    let m = h.len();
    // Columns: z+ (k), z- (k), slacks (m), then one artificial per row with negative rhs.
    let needs_art: Vec<usize> = (0..m).filter(|&i| h[i].is_negative()).collect();
    let base = 2 * k + m;
    let ncols = base + needs_art.len();
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_iter = needs_art.iter().enumerate().peekable();
    for i in 0..m {
        let mut row = zeros(ncols + 1);
        for j in 0..k {
            row[j] = g.get(i, j).clone();
            row[k + j] = -g.get(i, j).clone();
        }
        row[2 * k + i] = Rat::from_integer(1.into());
        row[ncols] = h[i].clone();
        if art_iter.peek().is_some_and(|(_, &r)| r == i) {
            let (a, _) = art_iter.next().expect("peeked");
            for x in row.iter_mut() {
                *x = -&*x;
            }
            row[base + a] = Rat::from_integer(1.into());
            basis.push(base + a);
        } else {
            basis.push(2 * k + i);
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, obj: Vec::new(), basis, ncols };

    if !needs_art.is_empty() {
        let mut phase1 = zeros(ncols);
        for x in phase1[base..].iter_mut() {
            *x = Rat::from_integer(1.into());
        }
        t.set_objective(&phase1);
        let all = vec![true; ncols];
        let bounded = t.optimize(&all);
        debug_assert!(bounded, "phase one is bounded below by zero");
        if !t.obj[ncols].is_zero() {
            return Outcome::Infeasible;
        }
        // Artificials still basic sit at level zero; swap them out where a real column allows.
        for r in 0..m {
            if t.basis[r] < base {
                continue;
            }
            if let Some(c) = (0..base).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }

    let mut phase2 = zeros(ncols);
    for j in 0..k {
        phase2[j] = cost[j].clone();
        phase2[k + j] = -cost[j].clone();
    }
    t.set_objective(&phase2);
    let allowed: Vec<bool> = (0..ncols).map(|j| j < base).collect();
    if !t.optimize(&allowed) {
        return Outcome::Unbounded;
    }
    let mut values = zeros(ncols);
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        values[b] = row[ncols].clone();
    }
    Outcome::Optimal((0..k).map(|j| &values[j] - &values[k + j]).collect())
}
