//! Implicit-equality detection, affine hulls and LP-based redundancy removal.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, primitive, primitive_signed, rref, Matrix, Rat};
use crate::lp::{feasible, solve_lp, LpResult, Sense};

use super::HRep;

/// For each inequality row of a nonempty `p`: true when the row is tight on all of `p`.
pub(crate) fn implicit_equalities(p: &HRep) -> Vec<bool> {
    p.ineq_rows()
        .map(|(c, d)| match solve_lp(c, p, Sense::Min).expect("row width matches") {
            LpResult::Optimal { value, .. } => &value == d,
            LpResult::Unbounded => false,
            LpResult::Infeasible => unreachable!("caller guarantees a nonempty set"),
        })
        .collect()
}

/// Equality rows in reduced echelon form, each scaled to signed primitive integers.
fn reduced_equalities(n: usize, rows: Vec<(Vec<Rat>, Rat)>) -> (Vec<(Vec<Rat>, Rat)>, Vec<usize>) {
    let aug = Matrix::from_rows(
        rows.into_iter()
            .map(|(mut a, b)| {
                a.push(b);
                a
            })
            .collect(),
        n + 1,
    )
    .expect("rows share a width");
    let (r, pivots) = rref(&aug);
    debug_assert!(pivots.last() != Some(&n), "equalities of a nonempty set are consistent");
    let eqs = r.rows()[..pivots.len()].iter().map(|row| (row[..n].to_vec(), row[n].clone())).collect();
    (eqs, pivots)
}

/// Explicit equalities plus every implicit one, as a reduced system. `p` must be nonempty.
fn hull_equalities(p: &HRep, tight: &[bool]) -> (Vec<(Vec<Rat>, Rat)>, Vec<usize>) {
    let mut rows: Vec<(Vec<Rat>, Rat)> = p.eq_rows().map(|(a, b)| (a.to_vec(), b.clone())).collect();
    rows.extend(p.ineq_rows().zip(tight).filter(|(_, &t)| t).map(|((c, d), _)| (c.to_vec(), d.clone())));
    reduced_equalities(p.dim(), rows)
}

fn signed_row(a: &[Rat], b: &Rat) -> (Vec<Rat>, Rat) {
    let mut r = a.to_vec();
    r.push(b.clone());
    let mut r = primitive_signed(&r);
    let b = r.pop().expect("row has rhs");
    (r, b)
}

/// The affine hull of a nonempty polyhedron, as equality rows only.
pub fn affine_hull(p: &HRep) -> Result<HRep> {
    if !feasible(p) {
        return Err(Error::EmptySet("empty set has no affine hull"));
    }
    let tight = implicit_equalities(p);
    let (eqs, _) = hull_equalities(p, &tight);
    let mut out = HRep::whole_space(p.dim());
    for (a, b) in eqs {
        let (a, b) = signed_row(&a, &b);
        out.push_eq(a, b);
    }
    Ok(out)
}

/// Same set with implicit equalities promoted, equalities in reduced echelon
/// form, and only irredundant inequalities left. Empty input gives [`HRep::empty`].
pub fn remove_redundancy(p: &HRep) -> HRep {
    reduce(p).unwrap_or_else(|| HRep::empty(p.dim()))
}

/// [`remove_redundancy`], with `None` for an empty set.
pub(crate) fn reduce(p: &HRep) -> Option<HRep> {
    if !feasible(p) {
        return None;
    }
    let n = p.dim();
    let tight = implicit_equalities(p);
    let (eqs, pivots) = hull_equalities(p, &tight);

    // Reduce remaining inequalities modulo the equalities so rows agreeing on the hull coincide.
    let mut candidates: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for ((c, d), _) in p.ineq_rows().zip(&tight).filter(|(_, &t)| !t) {
        let mut c = c.to_vec();
        let mut d = d.clone();
        for ((ea, eb), &pc) in eqs.iter().zip(&pivots) {
            if c[pc].is_zero() {
                continue;
            }
            let f = c[pc].clone();
            for (x, e) in c.iter_mut().zip(ea) {
                *x -= &f * e;
            }
            d -= &f * eb;
        }
        if is_zero_vec(&c) {
            debug_assert!(!d.is_negative());
            continue;
        }
        let mut row = c;
        row.push(d);
        let mut row = primitive(&row);
        let d = row.pop().expect("row has rhs");
        candidates.push((row, d));
    }
    // Parallel duplicates: keep the tightest right-hand side.
    candidates.sort();
    candidates.dedup_by(|later, earlier| later.0 == earlier.0);

    let mut base = HRep::whole_space(n);
    for (a, b) in &eqs {
        let (a, b) = signed_row(a, b);
        base.push_eq(a, b);
    }
    let mut keep = vec![true; candidates.len()];
    for i in 0..candidates.len() {
        let mut others = base.clone();
        for (j, (c, d)) in candidates.iter().enumerate() {
            if j != i && keep[j] {
                others.push_ineq(c.clone(), d.clone());
            }
        }
        let (c, d) = &candidates[i];
        let redundant = match solve_lp(c, &others, Sense::Max).expect("row width matches") {
            LpResult::Optimal { value, .. } => &value <= d,
            LpResult::Unbounded => false,
            LpResult::Infeasible => unreachable!("relaxation of a nonempty set"),
        };
        if redundant {
            keep[i] = false;
        }
    }
    for ((c, d), k) in candidates.into_iter().zip(keep) {
        if k {
            base.push_ineq(c, d);
        }
    }
    Some(base)
}
