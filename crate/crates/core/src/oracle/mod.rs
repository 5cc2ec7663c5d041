//! Brute-force reference implementations used by tests and the `check` suites.
//!
//! Nothing here calls the constructions it is meant to validate: the oracles
//! use only row reduction from [`crate::linalg`], the simplex engine in
//! [`crate::lp`], and direct row bookkeeping on [`HRep`] data. Vertices come
//! from enumerating bases instead of the double description method, and every
//! set-valued question is answered by one feasibility LP in a lifted space
//! rather than by projecting or converting representations.

mod sampling;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::convex_function::{ExtReal, PCFunc};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{dot, is_zero_vec, nullspace_basis, primitive, rank, solve_affine, Matrix, Rat};
use crate::lp::{feasible, solve_lp, LpResult, Sense};
use crate::multifunction::MultiFn;
use crate::polyhedron::{HRep, VRep};

pub use sampling::{random_rational_point, sample_grid};

pub const MAX_ENUM_DIM: usize = 4;
pub const MAX_ENUM_ROWS: usize = 12;

/// Vertices, extreme rays and lineality of `p` by exhaustive basis enumeration.
///
/// The lineality space `L` is the nullspace of all rows. Every point of
/// `p ∩ L⊥` is a convex combination of basic feasible solutions plus a
/// nonnegative combination of extreme rays, and both are found by solving
/// every square subsystem of tight rows.
pub fn enumerate_basic_solutions(p: &HRep) -> Result<VRep> {
    let n = p.dim();
    if n > MAX_ENUM_DIM || p.n_rows() > MAX_ENUM_ROWS {
        return Err(Error::SizeGuard(format!(
            "enumeration supports dim <= {MAX_ENUM_DIM} and <= {MAX_ENUM_ROWS} rows, got dim {n} with {} rows",
            p.n_rows()
        )));
    }
    let all_rows = p.eq_a().vstack(p.ineq_c());
    let lineality = nullspace_basis(&all_rows);

    // Fixed equalities: explicit ones plus orthogonality to the lineality space.
    let mut fixed_a = p.eq_a().clone();
    let mut fixed_b: Vec<Rat> = p.eq_b().to_vec();
    for l in &lineality {
        fixed_a.push_row(l.clone());
        fixed_b.push(Rat::zero());
    }
    let free = n - rank(&fixed_a);
    let ineq: Vec<(Vec<Rat>, Rat)> = p.ineq_rows().map(|(c, d)| (c.to_vec(), d.clone())).collect();
    let satisfies = |x: &[Rat]| p.eq_rows().all(|(a, b)| &dot(a, x) == b) && ineq.iter().all(|(c, d)| &dot(c, x) <= d);

    let mut points: Vec<Vec<Rat>> = Vec::new();
    for subset in (0..ineq.len()).combinations(free) {
        let mut a = fixed_a.clone();
        let mut b = fixed_b.clone();
        for &i in &subset {
            a.push_row(ineq[i].0.clone());
            b.push(ineq[i].1.clone());
        }
        if rank(&a) != n {
            continue;
        }
        if let Some(sol) = solve_affine(&a, &b)? {
            if satisfies(&sol.particular) && !points.contains(&sol.particular) {
                points.push(sol.particular);
            }
        }
    }
    if points.is_empty() {
        return Ok(VRep::empty(n));
    }

    let mut rays: Vec<Vec<Rat>> = Vec::new();
    if free >= 1 {
        for subset in (0..ineq.len()).combinations(free - 1) {
            let mut a = fixed_a.clone();
            for &i in &subset {
                a.push_row(ineq[i].0.clone());
            }
            let kernel = nullspace_basis(&a);
            if kernel.len() != 1 {
                continue;
            }
            let v = primitive(&kernel[0]);
            for cand in [v.clone(), v.iter().map(|x| -x).collect::<Vec<_>>()] {
                let in_cone = ineq.iter().all(|(c, _)| dot(c, &cand) <= Rat::zero());
                if in_cone && !rays.contains(&cand) {
                    rays.push(cand);
                }
            }
        }
    }
    points.sort();
    rays.sort();
    VRep::new(n, points, rays, lineality)
}

/// `a ⊆ b` for generator representations, each generator of `a` tested by an LP over
/// the multipliers of `b`'s generators.
pub fn vrep_includes(b: &VRep, a: &VRep) -> Result<bool> {
    check_dim("vrep inclusion", b.dim(), a.dim())?;
    if a.is_empty() {
        return Ok(true);
    }
    if b.is_empty() {
        return Ok(false);
    }
    let point_ok = |x: &[Rat]| combination_exists(b.points(), b.rays(), b.lineality(), x, true);
    let dir_ok = |v: &[Rat]| combination_exists(&[], b.rays(), b.lineality(), v, false);
    for x in a.points() {
        if !point_ok(x)? {
            return Ok(false);
        }
    }
    for r in a.rays() {
        if !dir_ok(r)? {
            return Ok(false);
        }
    }
    for l in a.lineality() {
        let minus: Vec<Rat> = l.iter().map(|x| -x).collect();
        if !dir_ok(l)? || !dir_ok(&minus)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is `target = Σ λ_i p_i + Σ μ_j r_j + Σ ν_k l_k` solvable with `λ, μ >= 0`
/// (and `Σ λ_i = 1` when `convex`)?
fn combination_exists(
    points: &[Vec<Rat>],
    rays: &[Vec<Rat>],
    lines: &[Vec<Rat>],
    target: &[Rat],
    convex: bool,
) -> Result<bool> {
    let gens: Vec<&Vec<Rat>> = points.iter().chain(rays).chain(lines).collect();
    let m = gens.len();
    let n = target.len();
    let mut sys = HRep::whole_space(m);
    for (coord, t) in target.iter().enumerate() {
        sys.push_eq(gens.iter().map(|g| g[coord].clone()).collect(), t.clone());
    }
    if convex {
        let mut row = vec![Rat::zero(); m];
        row[..points.len()].iter_mut().for_each(|x| *x = Rat::one());
        sys.push_eq(row, Rat::one());
    }
    for i in 0..points.len() + rays.len() {
        let mut row = vec![Rat::zero(); m];
        row[i] = -Rat::one();
        sys.push_ineq(row, Rat::zero());
    }
    debug_assert!(gens.iter().all(|g| g.len() == n));
    Ok(feasible(&sys))
}

/// Definition-level test of `x ∈ iri P`: `cone(P - x)` is a linear subspace.
///
/// `cone(P - x) = cone{u_i - x} + cone{v_j} + span{l_k}` with the generators
/// from [`enumerate_basic_solutions`]; it is a subspace iff the negative of
/// every cone generator is again in the cone.
pub fn iri_member_oracle(p: &HRep, x: &[Rat]) -> Result<bool> {
    check_dim("iri oracle point", p.dim(), x.len())?;
    let inside = p.eq_rows().all(|(a, b)| &dot(a, x) == b) && p.ineq_rows().all(|(c, d)| &dot(c, x) <= d);
    if !inside {
        return Err(Error::NotInSet);
    }
    let v = enumerate_basic_solutions(p)?;
    let mut cone_gens: Vec<Vec<Rat>> = v
        .points()
        .iter()
        .map(|u| u.iter().zip(x).map(|(a, b)| a - b).collect::<Vec<Rat>>())
        .filter(|g| !is_zero_vec(g))
        .collect();
    cone_gens.extend(v.rays().iter().cloned());
    for g in &cone_gens {
        let minus: Vec<Rat> = g.iter().map(|t| -t).collect();
        if !combination_exists(&[], &cone_gens, v.lineality(), &minus, false)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Where each source coordinate goes when rows are rewritten into a new space.
#[derive(Debug, Clone)]
enum Slot {
    Var(usize),
    Fixed(Rat),
}

/// Rows of `src` rewritten over `total` variables: coordinates mapped to `Var`
/// are placed, coordinates mapped to `Fixed` are moved to the right-hand side.
fn place_rows(src: &HRep, total: usize, slots: &[Slot], into: &mut HRep) {
    debug_assert_eq!(slots.len(), src.dim());
    let rewrite = |row: &[Rat], rhs: &Rat| {
        let mut out = vec![Rat::zero(); total];
        let mut r = rhs.clone();
        for (coef, slot) in row.iter().zip(slots) {
            match slot {
                Slot::Var(j) => out[*j] += coef,
                Slot::Fixed(v) => r -= coef * v,
            }
        }
        (out, r)
    };
    for (a, b) in src.eq_rows() {
        let (a, b) = rewrite(a, b);
        into.push_eq(a, b);
    }
    for (c, d) in src.ineq_rows() {
        let (c, d) = rewrite(c, d);
        into.push_ineq(c, d);
    }
}

fn vars(range: std::ops::Range<usize>) -> Vec<Slot> {
    range.map(Slot::Var).collect()
}

fn fixed(values: &[Rat]) -> Vec<Slot> {
    values.iter().cloned().map(Slot::Fixed).collect()
}

/// `μ(x)` by one LP over `(y, t)`: minimize `t` subject to `(x, y, t) ∈ epi φ`
/// and `(x, y) ∈ gph F`.
pub fn optval_oracle(phi: &PCFunc, f: &MultiFn, x: &[Rat]) -> Result<ExtReal> {
    let (nx, ny) = (f.nx(), f.ny());
    check_dim("objective arity", nx + ny, phi.n())?;
    check_dim("optimal value point", nx, x.len())?;
    let mut sys = HRep::whole_space(ny + 1);
    let mut epi_slots = fixed(x);
    epi_slots.extend(vars(0..ny + 1));
    place_rows(phi.epi(), ny + 1, &epi_slots, &mut sys);
    let mut gph_slots = fixed(x);
    gph_slots.extend(vars(0..ny));
    place_rows(f.graph(), ny + 1, &gph_slots, &mut sys);
    let mut objective = vec![Rat::zero(); ny + 1];
    objective[ny] = Rat::one();
    Ok(match solve_lp(&objective, &sys, Sense::Min)? {
        LpResult::Infeasible => ExtReal::PlusInf,
        LpResult::Unbounded => ExtReal::MinusInf,
        LpResult::Optimal { value, .. } => ExtReal::Finite(value),
    })
}

/// Feasibility of `{y : (x, y) ∈ gph F} ∩ extra`, where `extra` is a set over the y-block.
pub fn pointwise_relation_oracle(f: &MultiFn, x: &[Rat], extra: &HRep) -> Result<bool> {
    check_dim("relation point", f.nx(), x.len())?;
    check_dim("relation side conditions", f.ny(), extra.dim())?;
    let ny = f.ny();
    let mut sys = HRep::whole_space(ny);
    let mut slots = fixed(x);
    slots.extend(vars(0..ny));
    place_rows(f.graph(), ny, &slots, &mut sys);
    place_rows(extra, ny, &vars(0..ny), &mut sys);
    Ok(feasible(&sys))
}

/// `z ∈ (G ∘ F)(x)`: is there `y` with `(x, y) ∈ gph F` and `(y, z) ∈ gph G`?
pub fn compose_member_oracle(g: &MultiFn, f: &MultiFn, x: &[Rat], z: &[Rat]) -> Result<bool> {
    check_dim("composition inner dimension", f.ny(), g.nx())?;
    check_dim("composition output point", g.ny(), z.len())?;
    let ny = f.ny();
    let mut extra = HRep::whole_space(ny);
    let mut slots = vars(0..ny);
    slots.extend(fixed(z));
    place_rows(g.graph(), ny, &slots, &mut extra);
    pointwise_relation_oracle(f, x, &extra)
}

/// `z ∈ F₁(x) + F₂(x)`: is there `(y1, y2)` with `y1 ∈ F₁(x)`, `y2 ∈ F₂(x)`, `y1 + y2 = z`?
pub fn sum_member_oracle(f1: &MultiFn, f2: &MultiFn, x: &[Rat], z: &[Rat]) -> Result<bool> {
    check_dim("sum argument dimension", f1.nx(), f2.nx())?;
    check_dim("sum value dimension", f1.ny(), f2.ny())?;
    check_dim("sum output point", f1.ny(), z.len())?;
    let (nx, ny) = (f1.nx(), f1.ny());
    // Doubled multifunction x ⇉ (y1, y2).
    let total = nx + 2 * ny;
    let mut graph = HRep::whole_space(total);
    place_rows(f1.graph(), total, &vars(0..nx + ny), &mut graph);
    let mut slots2 = vars(0..nx);
    slots2.extend(vars(nx + ny..total));
    place_rows(f2.graph(), total, &slots2, &mut graph);
    let doubled = MultiFn::new(nx, 2 * ny, graph)?;

    let mut extra = HRep::whole_space(2 * ny);
    for (j, zj) in z.iter().enumerate() {
        let mut row = vec![Rat::zero(); 2 * ny];
        row[j] = Rat::one();
        row[ny + j] = Rat::one();
        extra.push_eq(row, zj.clone());
    }
    pointwise_relation_oracle(&doubled, x, &extra)
}

/// `y ∈ F(C)`: is there `x ∈ C` with `(x, y) ∈ gph F`?
pub fn image_member_oracle(f: &MultiFn, c: &HRep, y: &[Rat]) -> Result<bool> {
    check_dim("image set", f.nx(), c.dim())?;
    check_dim("image point", f.ny(), y.len())?;
    let nx = f.nx();
    let mut sys = HRep::whole_space(nx);
    let mut slots = vars(0..nx);
    slots.extend(fixed(y));
    place_rows(f.graph(), nx, &slots, &mut sys);
    place_rows(c, nx, &vars(0..nx), &mut sys);
    Ok(feasible(&sys))
}

/// `x ∈ π_keep(P)`: is `{w ∈ P : w_keep = x}` feasible?
pub fn lifted_projection_oracle(p: &HRep, keep: &[usize], x: &[Rat]) -> Result<bool> {
    check_dim("projection point", keep.len(), x.len())?;
    let mut sys = p.clone();
    for (&k, xk) in keep.iter().zip(x) {
        let mut row = vec![Rat::zero(); p.dim()];
        row[k] = Rat::one();
        sys.push_eq(row, xk.clone());
    }
    Ok(feasible(&sys))
}

/// `y ∈ T(D)`: is `{x ∈ D : T x = y}` feasible?
pub fn linear_image_oracle(t: &Matrix, d: &HRep, y: &[Rat]) -> Result<bool> {
    check_dim("linear map input", t.ncols(), d.dim())?;
    check_dim("linear map output", t.nrows(), y.len())?;
    let mut sys = d.clone();
    for (row, yi) in t.rows().iter().zip(y) {
        sys.push_eq(row.clone(), yi.clone());
    }
    Ok(feasible(&sys))
}

/// `z ∈ P + Q`: is there `(p, q) ∈ P × Q` with `p + q = z`?
pub fn minkowski_member_oracle(p: &HRep, q: &HRep, z: &[Rat]) -> Result<bool> {
    check_dim("minkowski operands", p.dim(), q.dim())?;
    check_dim("minkowski point", p.dim(), z.len())?;
    let n = p.dim();
    let mut sys = HRep::whole_space(2 * n);
    place_rows(p, 2 * n, &vars(0..n), &mut sys);
    place_rows(q, 2 * n, &vars(n..2 * n), &mut sys);
    for (j, zj) in z.iter().enumerate() {
        let mut row = vec![Rat::zero(); 2 * n];
        row[j] = Rat::one();
        row[n + j] = Rat::one();
        sys.push_eq(row, zj.clone());
    }
    Ok(feasible(&sys))
}
