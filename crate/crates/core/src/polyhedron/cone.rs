//! Double description method for polyhedral cones `{y : E y = 0, H y <= 0}`.
//!
//! The lineality space is split off first as the nullspace of all rows; the
//! remaining pointed cone is expressed in coordinates of a basis of
//! `{E y = 0} ∩ lineality⊥` and its extreme rays are built incrementally,
//! one inequality at a time, combining adjacent ray pairs across each new
//! hyperplane.

use num_traits::{Signed, Zero};

use crate::linalg::{dot, inverse, nullspace_basis, primitive, primitive_signed, rank_of, Matrix, Rat};

/// Generators of a cone: `cone(rays) + span(lineality)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ConeGenerators {
    pub lineality: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

pub(crate) fn cone_generators(eq: &Matrix, ineq: &Matrix) -> ConeGenerators {
    let n = eq.ncols();
    debug_assert_eq!(n, ineq.ncols());
    let lineality = canonical_subspace_basis(&nullspace_basis(&eq.vstack(ineq)), n);

    // Basis of {E y = 0} ∩ lineality⊥.
    let mut restrict = eq.clone();
    for l in &lineality {
        restrict.push_row(l.clone());
    }
    let sub_basis = nullspace_basis(&restrict);
    let r = sub_basis.len();
    if r == 0 {
        return ConeGenerators { lineality, rays: Vec::new() };
    }
    let b = Matrix::from_columns(&sub_basis, n);
    let reduced: Vec<Vec<Rat>> =
        ineq.mul(&b).into_rows().into_iter().filter(|row| !crate::linalg::is_zero_vec(row)).collect();

    let rays_u = pointed_cone_rays(&reduced, r);
    let mut rays: Vec<Vec<Rat>> = rays_u.iter().map(|u| primitive(&b.mul_vec(u))).collect();
    rays.sort();
    rays.dedup();
    ConeGenerators { lineality, rays }
}

/// Unique basis of a subspace: reduced echelon rows, each scaled to primitive integers.
pub(crate) fn canonical_subspace_basis(vectors: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    let m = Matrix::from_rows(vectors.to_vec(), n).expect("vectors share a length");
    let (r, pivots) = crate::linalg::rref(&m);
    let mut out: Vec<Vec<Rat>> = r.rows()[..pivots.len()].iter().map(|v| primitive_signed(v)).collect();
    out.sort();
    out
}

struct Ray {
    u: Vec<Rat>,
    /// Indices of processed rows tight at this ray.
    zeros: Vec<usize>,
}

/// Extreme rays of the pointed cone `{u ∈ R^r : rows·u <= 0}`; `rows` has rank `r`.
fn pointed_cone_rays(rows: &[Vec<Rat>], r: usize) -> Vec<Vec<Rat>> {
    // Seed with r independent rows: the simplicial cone they cut out has rays -M0^{-1} e_k.
    let mut seed: Vec<usize> = Vec::with_capacity(r);
    let mut chosen: Vec<Vec<Rat>> = Vec::with_capacity(r);
    for (i, row) in rows.iter().enumerate() {
        chosen.push(row.clone());
        if rank_of(&chosen, r) == chosen.len() {
            seed.push(i);
            if seed.len() == r {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    assert_eq!(seed.len(), r, "restricted inequality system must have full rank");
    let m0 = Matrix::from_rows(chosen, r).expect("rows share a length");
    let inv = inverse(&m0).expect("seed rows are independent");
    let mut rays: Vec<Ray> = (0..r)
        .map(|k| {
            let u: Vec<Rat> = (0..r).map(|i| -inv.get(i, k).clone()).collect();
            let zeros = seed.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &s)| s).collect();
            Ray { u: primitive(&u), zeros }
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if seed.contains(&i) {
            continue;
        }
        let vals: Vec<Rat> = rays.iter().map(|ray| dot(row, &ray.u)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();

        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                if !adjacent(&rays[p], &rays[q], &rays, rows, r) {
                    continue;
                }
                // a > 0 at p, b < 0 at q: a·u_q - b·u_p lies on the new hyperplane.
                let a = &vals[p];
                let b = &vals[q];
                let u: Vec<Rat> = rays[q].u.iter().zip(&rays[p].u).map(|(uq, up)| a * uq - b * up).collect();
                let mut zeros: Vec<usize> =
                    rays[p].zeros.iter().filter(|z| rays[q].zeros.contains(z)).copied().collect();
                zeros.push(i);
                next.push(Ray { u: primitive(&u), zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::new();
        for (j, mut ray) in rays.into_iter().enumerate() {
            if vals[j].is_positive() {
                continue;
            }
            if vals[j].is_zero() {
                ray.zeros.push(i);
            }
            kept.push(ray);
        }
        kept.extend(next);
        rays = kept;
        if rays.is_empty() {
            break;
        }
    }
    rays.into_iter().map(|ray| ray.u).collect()
}

/// Two extreme rays are adjacent when the processed rows tight at both have rank `r - 2`
/// and no third ray is tight on all of them.
fn adjacent(p: &Ray, q: &Ray, all: &[Ray], rows: &[Vec<Rat>], r: usize) -> bool {
    let common: Vec<usize> = p.zeros.iter().filter(|z| q.zeros.contains(z)).copied().collect();
    if common.len() + 2 < r {
        return false;
    }
    let others_contain =
        all.iter().any(|o| !std::ptr::eq(o, p) && !std::ptr::eq(o, q) && common.iter().all(|c| o.zeros.contains(c)));
    if others_contain {
        return false;
    }
    let tight: Vec<Vec<Rat>> = common.iter().map(|&c| rows[c].clone()).collect();
    rank_of(&tight, r) + 2 == r
}
