//! Coordinate projection by Fourier–Motzkin elimination.
//!
//! Coordinates are eliminated one at a time. A coordinate that appears in an
//! equality row is solved for and substituted away; otherwise every pair of
//! inequality rows with opposite signs on it is combined. The system is
//! pruned with [`remove_redundancy`](super::remove_redundancy) after each step.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rat;

use super::redundancy::reduce;
use super::HRep;

/// Strictly increasing coordinate indices into an ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordSet(Vec<usize>);

impl CoordSet {
    pub fn new(indices: Vec<usize>, ambient: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!("coordinate indices {indices:?} must be strictly increasing")));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= ambient) {
            return Err(Error::Invalid(format!("coordinate {bad} out of range for dimension {ambient}")));
        }
        Ok(CoordSet(indices))
    }

    /// The block `start..end`.
    pub fn range(start: usize, end: usize) -> Self {
        CoordSet((start..end).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

/// `{x_keep : x ∈ p}` as an H-representation over `keep.len()` coordinates.
pub fn project(p: &HRep, keep: &CoordSet) -> Result<HRep> {
    if let Some(&bad) = keep.indices().iter().find(|&&i| i >= p.dim()) {
        return Err(Error::Invalid(format!("coordinate {bad} out of range for dimension {}", p.dim())));
    }
    let k = keep.len();
    let Some(mut work) = reduce(p) else {
        return Ok(HRep::empty(k));
    };
    let mut pending: Vec<usize> = (0..p.dim()).filter(|&j| !keep.contains(j)).collect();
    while !pending.is_empty() {
        let by_equality = pending
            .iter()
            .enumerate()
            .find_map(|(slot, &j)| work.eq_rows().position(|(a, _)| !a[j].is_zero()).map(|r| (slot, j, r)));
        let (slot, next) = match by_equality {
            Some((slot, j, r)) => (slot, substitute(&work, j, r)),
            None => {
                let slot = cheapest_pivot(&work, &pending);
                (slot, fourier_motzkin_step(&work, pending[slot]))
            }
        };
        pending.remove(slot);
        match reduce(&next) {
            Some(q) => work = q,
            None => return Ok(HRep::empty(k)),
        }
    }

    let select = |row: &[Rat]| keep.indices().iter().map(|&i| row[i].clone()).collect::<Vec<_>>();
    let mut out = HRep::whole_space(k);
    for (a, b) in work.eq_rows() {
        out.push_eq(select(a), b.clone());
    }
    for (c, d) in work.ineq_rows() {
        out.push_ineq(select(c), d.clone());
    }
    Ok(out)
}

/// Index into `pending` of the coordinate whose elimination creates the fewest rows.
fn cheapest_pivot(p: &HRep, pending: &[usize]) -> usize {
    (0..pending.len())
        .min_by_key(|&slot| {
            let j = pending[slot];
            let pos = p.ineq_rows().filter(|(c, _)| c[j].is_positive()).count();
            let neg = p.ineq_rows().filter(|(c, _)| c[j].is_negative()).count();
            (pos * neg) as isize - (pos + neg) as isize
        })
        .expect("pending is nonempty")
}

/// Solves equality row `r` for coordinate `j` and substitutes it into every other row.
fn substitute(p: &HRep, j: usize, r: usize) -> HRep {
    let (ea, eb) = (p.eq_a().row(r), &p.eq_b()[r]);
    let pivot = &ea[j];
    let eliminate = |a: &[Rat], b: &Rat| -> (Vec<Rat>, Rat) {
        if a[j].is_zero() {
            return (a.to_vec(), b.clone());
        }
        let f = &a[j] / pivot;
        let row = a.iter().zip(ea).map(|(x, e)| x - &f * e).collect();
        (row, b - &f * eb)
    };
    let mut out = HRep::whole_space(p.dim());
    for (i, (a, b)) in p.eq_rows().enumerate() {
        if i != r {
            let (a, b) = eliminate(a, b);
            out.push_eq(a, b);
        }
    }
    for (c, d) in p.ineq_rows() {
        let (c, d) = eliminate(c, d);
        out.push_ineq(c, d);
    }
    out
}

/// One Fourier–Motzkin step on coordinate `j`; `j` must not appear in any equality row.
fn fourier_motzkin_step(p: &HRep, j: usize) -> HRep {
    let mut out = HRep::whole_space(p.dim());
    for (a, b) in p.eq_rows() {
        out.push_eq(a.to_vec(), b.clone());
    }
    let rows: Vec<(&[Rat], &Rat)> = p.ineq_rows().collect();
    for (c, d) in rows.iter().filter(|(c, _)| c[j].is_zero()) {
        out.push_ineq(c.to_vec(), (*d).clone());
    }
    for (pc, pd) in rows.iter().filter(|(c, _)| c[j].is_positive()) {
        for (nc, nd) in rows.iter().filter(|(c, _)| c[j].is_negative()) {
            // (-n_j)·p + p_j·n cancels coordinate j with positive weights.
            let wp = -nc[j].clone();
            let wn = pc[j].clone();
            let row: Vec<Rat> = pc.iter().zip(nc.iter()).map(|(a, b)| &wp * a + &wn * b).collect();
            out.push_ineq(row, &wp * *pd + &wn * *nd);
        }
    }
    out
}
